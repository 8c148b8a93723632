#include "zetakit/acceleration.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace zetakit {

namespace {

SeriesResult sum_plain(const TermFunction& term, const SeriesConfig& cfg, std::size_t group)
{
   SeriesResult r;
   complex sum = 0.0;
   std::size_t k = 0;
   auto next_group = [&]() {
      complex g = 0.0;
      for (std::size_t i = 0; i < group; ++i)
         g += term(k + i);
      return g;
   };
   complex g = next_group();
   while (k + group <= cfg.term_cap)
   {
      sum += g;
      k += group;
      if (k + group > cfg.term_cap)
         break;
      g = next_group();
      if (!is_finite(g))
         throw convergence_error("series: non-finite term");
      if (std::abs(g) <= cfg.tolerance)
      {
         r.value = sum;
         r.abs_error_estimate = std::abs(g);
         r.terms_used = k;
         r.converged = true;
         return r;
      }
   }
   r.value = sum;
   r.abs_error_estimate = std::abs(g);
   r.terms_used = k;
   r.converged = false;
   return r;
}

SeriesResult sum_accelerated(const TermFunction& term, const SeriesConfig& cfg)
{
   const std::size_t cap = std::min(cfg.term_cap, alternating_max_terms);
   std::vector<complex> t;
   auto extend = [&](std::size_t n) {
      while (t.size() < n)
      {
         const complex v = term(t.size());
         if (!is_finite(v))
            throw convergence_error("series: non-finite term");
         t.push_back(v);
      }
   };
   SeriesResult r;
   std::size_t n = std::min<std::size_t>(16, cap);
   extend(n);
   complex prev = alternating_estimate(t, n);
   while (true)
   {
      if (n >= cap)
      {
         r.value = prev;
         r.terms_used = n;
         r.converged = false;
         r.abs_error_estimate = std::max(r.abs_error_estimate, cfg.tolerance * 10);
         return r;
      }
      const std::size_t next = std::min(cap, n + std::max<std::size_t>(4, n / 2));
      extend(next);
      const complex cur = alternating_estimate(t, next);
      r.abs_error_estimate = 10.0 * std::abs(cur - prev);
      prev = cur;
      n = next;
      if (r.abs_error_estimate <= cfg.tolerance)
      {
         r.value = cur;
         r.terms_used = n;
         r.converged = true;
         return r;
      }
   }
}

} // namespace

SeriesResult sum_series(const TermFunction& term, const SeriesConfig& cfg)
{
   validate(cfg);
   switch (cfg.acceleration)
   {
   case Acceleration::none:
      return sum_plain(term, cfg, 1);
   case Acceleration::pairwise:
      return sum_plain(term, cfg, 2);
   case Acceleration::alternating:
      return sum_accelerated(term, cfg);
   }
   throw domain_error("series: unknown acceleration");
}

complex sum_alternating_fixed(const TermFunction& term, std::size_t n)
{
   if (n == 0 || n > alternating_max_terms)
      throw domain_error("series: fixed alternating window must lie in [1, 300]");
   std::vector<complex> t;
   t.reserve(n);
   for (std::size_t k = 0; k < n; ++k)
      t.push_back(term(k));
   return alternating_estimate(t, n);
}

const SeriesResult& require_converged(const SeriesResult& r, const char* what)
{
   if (!r.converged)
   {
      char estimate[32];
      std::snprintf(estimate, sizeof estimate, "%.3g", r.abs_error_estimate);
      throw convergence_error(std::string(what) + ": no convergence within the term cap (error estimate " + estimate +
                              ")");
   }
   return r;
}

} // namespace zetakit
