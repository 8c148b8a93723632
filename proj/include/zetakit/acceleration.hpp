// Summation drivers for slowly convergent series.

#ifndef ZETAKIT_ACCELERATION_HPP
#define ZETAKIT_ACCELERATION_HPP

#include "zetakit/core.hpp"

#include <functional>
#include <vector>

namespace zetakit {

// Largest term count the alternating accelerator accepts; its weights
// grow like 5.83^N and overflow past this.
inline constexpr std::size_t alternating_max_terms = 300;

// Cohen-Rodriguez Villegas-Zagier estimate of sum_k t[k] from the first n
// terms, where t[k] = (-1)^k a_k with a_k smooth in k.
template <class T>
T alternating_estimate(const std::vector<T>& t, std::size_t n)
{
   using R = decltype(std::abs(t[0]));
   const R root = static_cast<R>(3) + std::sqrt(static_cast<R>(8));
   R d = std::pow(root, static_cast<R>(n));
   d = (d + 1 / d) / 2;
   R b = -1;
   R c = -d;
   T acc{};
   for (std::size_t k = 0; k < n; ++k)
   {
      c = b - c;
      const T a = (k % 2 == 0) ? t[k] : -t[k];
      acc += c * a;
      const R kk = static_cast<R>(k);
      const R nn = static_cast<R>(n);
      b = (kk + nn) * (kk - nn) * b / ((kk + static_cast<R>(0.5)) * (kk + 1));
   }
   return acc / d;
}

using TermFunction = std::function<complex(std::size_t)>;

// Sums term(0) + term(1) + ... under cfg.acceleration:
//  none        partial sums, error estimate |next term|
//  pairwise    partial sums of adjacent pairs, error estimate |next pair|
//  alternating CVZ over a growing window, error estimate 10 |S_N - S_prev|
// Never throws on non-convergence; callers inspect `converged`.
SeriesResult sum_series(const TermFunction& term, const SeriesConfig& cfg);

// CVZ over exactly n terms; used for tables at fixed truncation.
complex sum_alternating_fixed(const TermFunction& term, std::size_t n);

// Throws convergence_error naming `what` unless r.converged.
const SeriesResult& require_converged(const SeriesResult& r, const char* what);

} // namespace zetakit

#endif
