// Reference implementations used only by the tests.  None of these call
// into the library; each one uses a different algorithm from the code it
// checks.

#ifndef ZETAKIT_TESTS_ORACLES_HPP
#define ZETAKIT_TESTS_ORACLES_HPP

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using ld = long double;
using cld = std::complex<long double>;
using rational = boost::multiprecision::cpp_rational;

inline constexpr ld pi = std::numbers::pi_v<ld>;
inline constexpr ld egamma = std::numbers::egamma_v<ld>;

// B_2 .. B_30
inline constexpr std::array<ld, 15> bernoulli_even{
   1.0L / 6,           -1.0L / 30,           1.0L / 42,           -1.0L / 30,          5.0L / 66,
   -691.0L / 2730,     7.0L / 6,             -3617.0L / 510,      43867.0L / 798,      -174611.0L / 330,
   854513.0L / 138,    -236364091.0L / 2730, 8553103.0L / 6,      -23749461029.0L / 870, 8615841276005.0L / 14322};

// log Gamma by upward recurrence to Re z >= 20 and the Stirling series.
inline cld log_gamma(cld z)
{
   cld shift = 0;
   while (z.real() < 20)
   {
      shift += std::log(z);
      z += 1.0L;
   }
   cld series = 0;
   cld zp = 1.0L / z;
   const cld z2 = zp * zp;
   for (int k = 1; k <= 10; ++k)
   {
      series += bernoulli_even[k - 1] / (2.0L * k * (2.0L * k - 1)) * zp;
      zp *= z2;
   }
   return (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2 * pi) + series - shift;
}

inline cld gamma(cld z)
{
   if (z.real() < 0.5L)
      return pi / (std::sin(pi * z) * gamma(1.0L - z));
   return std::exp(log_gamma(z));
}

// zeta(s) by Euler-Maclaurin summation with N terms and 14 corrections,
// reflected into Re s >= 0 first.
inline cld zeta(cld s)
{
   if (s.real() < 0)
      return std::pow(2.0L, s) * std::pow(pi, s - 1.0L) * std::sin(pi * s / 2.0L) * gamma(1.0L - s) * zeta(1.0L - s);
   const int N = 40 + static_cast<int>(std::abs(s.imag())) + static_cast<int>(std::abs(s.real()));
   cld sum = 0;
   for (int n = 1; n < N; ++n)
      sum += std::pow(static_cast<ld>(n), -s);
   const ld n = N;
   sum += std::pow(n, 1.0L - s) / (s - 1.0L) + 0.5L * std::pow(n, -s);
   cld rising = s; // (s)_{2j-1}
   ld fact = 2;    // (2j)!
   cld np = std::pow(n, -s - 1.0L);
   for (int j = 1; j <= 14; ++j)
   {
      sum += bernoulli_even[j - 1] / fact * rising * np;
      rising *= (s + ld(2 * j - 1)) * (s + ld(2 * j));
      fact *= (2.0L * j + 1) * (2.0L * j + 2);
      np /= n * n;
   }
   return sum;
}

inline cld eta(cld s)
{
   return (1.0L - std::pow(2.0L, 1.0L - s)) * zeta(s);
}

inline std::complex<double> to_double(cld z)
{
   return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// Bernoulli numbers by the Akiyama-Tanigawa tableau, returned with B_1 = -1/2.
inline rational bernoulli(int n)
{
   std::vector<rational> a(n + 1);
   for (int m = 0; m <= n; ++m)
   {
      a[m] = rational(1, m + 1);
      for (int j = m; j >= 1; --j)
         a[j - 1] = j * (a[j - 1] - a[j]);
   }
   return n == 1 ? -a[0] : a[0];
}

inline rational binomial(int n, int k)
{
   rational r = 1;
   for (int i = 1; i <= k; ++i)
      r = r * (n - k + i) / i;
   return r;
}

inline rational pow2(int k)
{
   return rational(boost::multiprecision::cpp_int(1) << k);
}

inline rational factorial(int n)
{
   rational r = 1;
   for (int i = 2; i <= n; ++i)
      r *= i;
   return r;
}

// Euler numbers from sech: sum_k C(n, 2k) E(2k) = 0 for even n >= 2.
inline std::vector<rational> euler_numbers(int n_max)
{
   std::vector<rational> e(n_max + 1, 0);
   e[0] = 1;
   for (int n = 2; n <= n_max; n += 2)
   {
      rational acc = 0;
      for (int k = 0; k < n; k += 2)
         acc += binomial(n, k) * e[k];
      e[n] = -acc;
   }
   return e;
}

inline rational harmonic(int n)
{
   rational h = 0;
   for (int k = 1; k <= n; ++k)
      h += rational(1, k);
   return h;
}

// E(n, x) = sum_k C(n, k) E(k) / 2^k (x - 1/2)^{n-k}
inline rational euler_polynomial(int n, const rational& x)
{
   const auto e = euler_numbers(n);
   rational r = 0;
   rational shift = x - rational(1, 2);
   for (int k = 0; k <= n; ++k)
   {
      rational p = 1;
      for (int i = 0; i < n - k; ++i)
         p *= shift;
      r += binomial(n, k) * e[k] / pow2(k) * p;
   }
   return r;
}

// Adaptive Gauss-Kronrod from Boost on a finite interval.
template <class F>
ld integrate(F f, ld a, ld b, ld tol = 1e-15L)
{
   return boost::math::quadrature::gauss_kronrod<ld, 61>::integrate(f, a, b, 12, tol);
}

template <class F>
ld integrate_pieces(F f, ld a, ld b, int pieces, ld tol = 1e-15L)
{
   ld total = 0;
   const ld h = (b - a) / pieces;
   for (int i = 0; i < pieces; ++i)
      total += integrate(f, a + i * h, a + (i + 1) * h, tol);
   return total;
}

inline ld sine_integral(ld x)
{
   const int pieces = 1 + static_cast<int>(std::fabs(x) / 4);
   return integrate_pieces([](ld t) { return t == 0 ? 1.0L : std::sin(t) / t; }, 0.0L, x, pieces);
}

// Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt
inline ld cosine_integral(ld x)
{
   const int pieces = 1 + static_cast<int>(x / 4);
   return egamma + std::log(x) +
          integrate_pieces([](ld t) { return t == 0 ? 0.0L : (std::cos(t) - 1) / t; }, 0.0L, x, pieces);
}

// E_s(z) = Gamma(1-s) z^{s-1} - sum_k (-z)^k / (k! (1-s+k)) for s off the
// positive integers; the analogous digamma form for s = n >= 1.
inline cld expint_series(cld s, cld z)
{
   const ld sr = s.real();
   const bool integer = s.imag() == 0 && sr >= 1 && sr == std::round(sr);
   cld sum = 0;
   cld term = 1; // (-z)^k / k!
   const int n = integer ? static_cast<int>(sr) : -1;
   cld special = 0;
   for (int k = 0; k < 400; ++k)
   {
      if (k == n - 1)
      {
         ld psi = -egamma;
         for (int j = 1; j < n; ++j)
            psi += 1.0L / j;
         special = term * (psi - std::log(z));
      }
      else
      {
         const cld add = term / (1.0L - s + ld(k));
         sum += add;
         if (k > 10 && std::abs(add) < 1e-22L * std::abs(sum))
            break;
      }
      term *= -z / ld(k + 1);
   }
   if (integer)
      return special - sum;
   return gamma(1.0L - s) * std::pow(z, s - 1.0L) - sum;
}

// E_s(+-i kappa) along the rotated ray v = 1 -+ i w (kappa > 0).
inline cld expint_imaginary(cld s, ld kappa, int sign)
{
   const cld j(0, 1);
   const ld sg = sign;
   auto f = [&](ld w) -> cld { return std::pow(1.0L - sg * j * w, -s) * std::exp(-kappa * w); };
   boost::math::quadrature::exp_sinh<ld> rule;
   const ld re = rule.integrate([&](ld w) { return f(w).real(); }, 0.0L, std::numeric_limits<ld>::infinity());
   const ld im = rule.integrate([&](ld w) { return f(w).imag(); }, 0.0L, std::numeric_limits<ld>::infinity());
   return -sg * j * std::exp(-sg * j * kappa) * cld(re, im);
}

} // namespace oracle

#endif
