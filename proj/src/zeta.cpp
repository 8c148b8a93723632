#include "zetakit/zeta.hpp"

#include "zetakit/acceleration.hpp"
#include "zetakit/expint.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace zetakit {

namespace {

constexpr double term_tol = 1e-14;

double kappa(std::size_t k)
{
   return pi * (static_cast<double>(k) + 0.5);
}

double half_shift(std::size_t k)
{
   return static_cast<double>(k) + 0.5;
}

// Sums term(k) so that scale * sum meets cfg.tolerance; throws on failure.
SeriesResult scaled_sum(const TermFunction& term, double scale, const SeriesConfig& cfg, const char* what)
{
   SeriesConfig inner = cfg;
   inner.tolerance = cfg.tolerance / std::max(scale, 1e-300);
   SeriesResult r = sum_series(term, inner);
   require_converged(r, what);
   r.abs_error_estimate *= scale;
   return r;
}

// E_a(-i kappa) + sign E_a(i kappa); the conjugate is reused for real a.
complex reversed_pair(complex a, std::size_t k, int sign)
{
   const double x = kappa(k);
   const complex lower = expint_E(a, {0.0, -x}, term_tol).value;
   const complex upper = a.imag() == 0.0 ? std::conj(lower) : expint_E(a, {0.0, x}, term_tol).value;
   return lower + static_cast<double>(sign) * upper;
}

complex reversed_pair_derivative(complex a, std::size_t k, int sign)
{
   const double x = kappa(k);
   const complex lower = expint_order_derivative(1, a, {0.0, -x}, term_tol, false).value;
   const complex upper =
      a.imag() == 0.0 ? std::conj(lower) : expint_order_derivative(1, a, {0.0, x}, term_tol, false).value;
   return lower + static_cast<double>(sign) * upper;
}

double factorial(int n)
{
   return std::exp(std::lgamma(n + 1.0));
}

using wide = std::complex<long double>;

// Long double keeps the phase t ln n of n^{-it} accurate for |t| up to ~1e3.
complex zeta_euler_maclaurin(complex s_in)
{
   const wide s(s_in.real(), s_in.imag());
   const int N = 30 + static_cast<int>(std::abs(s_in.imag()));
   wide sum = 0.0L;
   for (int n = 1; n < N; ++n)
      sum += std::pow(static_cast<long double>(n), -s);
   const long double Nd = N;
   sum += std::pow(Nd, 1.0L - s) / (s - 1.0L) + 0.5L * std::pow(Nd, -s);
   wide rising = s; // (s)_{2j-1}
   wide power = std::pow(Nd, -s - 1.0L);
   long double fact = 2.0L; // (2j)!
   for (int j = 1; j <= 20; ++j)
   {
      const wide term = rising * power * (bernoulli_exact(2 * j).convert_to<long double>() / fact);
      sum += term;
      if (std::abs(term) < 1e-20L * std::abs(sum))
         break;
      rising *= (s + (2.0L * j - 1.0L)) * (s + 2.0L * j);
      power /= Nd * Nd;
      fact *= (2.0L * j + 1.0L) * (2.0L * j + 2.0L);
   }
   return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

complex zeta_alternating(complex s_in)
{
   const wide s(s_in.real(), s_in.imag());
   const double t = std::abs(s_in.imag());
   const auto n = static_cast<std::size_t>(std::min<double>(
      alternating_max_terms, (36.8 + std::log(1.0 + 2.0 * t) + 1.571 * t) / 1.763 + 10.0));
   std::vector<wide> terms(n);
   for (std::size_t k = 0; k < n; ++k)
      terms[k] = static_cast<long double>(sign_power(static_cast<long long>(k))) *
                 std::pow(static_cast<long double>(k + 1), -s);
   const wide z = alternating_estimate(terms, n) / (1.0L - std::pow(2.0L, 1.0L - s));
   return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

void check_depth(int n, const char* what)
{
   if (n < 0 || n > max_recursion_depth)
      throw domain_error(std::string(what) + ": recursion depth must lie in [0, 40]");
}

complex gaussian_tail_sum(const std::function<complex(double)>& f, double scale, const SeriesConfig& cfg,
                          std::size_t& used, double& err)
{
   SeriesConfig inner = cfg;
   inner.acceleration = Acceleration::none;
   inner.tolerance = cfg.tolerance / std::max(scale, 1.0);
   const SeriesResult r = sum_series([&](std::size_t k) { return f(static_cast<double>(k + 1)); }, inner);
   require_converged(r, "gaussian sum");
   used += r.terms_used;
   err += r.abs_error_estimate;
   return r.value;
}

} // namespace

complex zeta_ref(complex s)
{
   if (s == 1.0)
      throw pole_error("zeta_ref: pole at s = 1");
   if (s == 0.0)
      return -0.5;
   if (std::abs(1.0 - std::pow(2.0, 1.0 - s)) < 0.05)
      return zeta_euler_maclaurin(s);
   if (s.real() >= 0.5)
      return zeta_alternating(s);
   const complex r = 1.0 - s;
   return std::pow(2.0, s) * std::pow(pi, s - 1.0) * sin_pi(s / 2.0) * gamma(r) * zeta_ref(r);
}

complex eta_ref(complex s)
{
   if (s == 1.0)
      return ln2;
   return (1.0 - std::pow(2.0, 1.0 - s)) * zeta_ref(s);
}

SeriesResult eta_via_expint_series(complex s, const SeriesConfig& cfg)
{
   const complex pre = -std::pow(2.0, s - 1.0);
   SeriesResult r = scaled_sum([&](std::size_t k) { return t_pair(k, s, +1, term_tol); }, std::abs(pre), cfg,
                               "eta_via_expint_series");
   r.value *= pre;
   return r;
}

SeriesResult eta_via_recursed_series(complex s, int n, const SeriesConfig& cfg)
{
   check_depth(n, "eta_via_recursed_series");
   const complex two = std::pow(2.0, s - 1.0);
   complex finite = 0.0;
   for (int j = 0; 2 * j <= n - 1; ++j)
      finite += pochhammer(s, 2 * j) * (to_double(euler_number(2 * j)) / factorial(2 * j));
   finite *= two;
   const complex pre = -two * pochhammer(s, n) * std::pow(-1.0 / pi, n) * i_power(n);
   const int sign = static_cast<int>(sign_power(n));
   const complex order = s + static_cast<double>(n);
   SeriesResult r = scaled_sum(
      [&](std::size_t k) { return reversed_pair(order, k, sign) / std::pow(half_shift(k), n); }, std::abs(pre), cfg,
      "eta_via_recursed_series");
   const complex tail = pre * r.value;
   r.value = finite + tail;
   const double big = std::max(std::abs(finite), std::abs(tail));
   r.cancellation_ratio = std::abs(r.value) > 0.0 ? big / std::abs(r.value) : big > 0.0 ? INFINITY : 1.0;
   r.significance_loss = r.cancellation_ratio > 1e6;
   return r;
}

complex eta_recursed_truncated(complex s, int n, std::size_t terms, Acceleration acceleration)
{
   check_depth(n, "eta_recursed_truncated");
   if (terms == 0)
      throw domain_error("eta_recursed_truncated: at least one term is required");
   const complex two = std::pow(2.0, s - 1.0);
   complex finite = 0.0;
   for (int j = 0; 2 * j <= n - 1; ++j)
      finite += pochhammer(s, 2 * j) * (to_double(euler_number(2 * j)) / factorial(2 * j));
   const complex pre = -two * pochhammer(s, n) * std::pow(-1.0 / pi, n) * i_power(n);
   const int sign = static_cast<int>(sign_power(n));
   const complex order = s + static_cast<double>(n);
   auto term = [&](std::size_t k) { return reversed_pair(order, k, sign) / std::pow(half_shift(k), n); };
   complex tail = 0.0;
   if (acceleration == Acceleration::none)
      for (std::size_t k = 0; k < terms; ++k)
         tail += term(k);
   else if (acceleration == Acceleration::pairwise)
      for (std::size_t k = 0; k < 2 * terms; ++k)
         tail += term(k);
   else
      tail = sum_alternating_fixed(term, std::min(terms, alternating_max_terms));
   return two * finite + pre * tail;
}

Rational zeta_even_coefficient(int m)
{
   if (m < 1)
      throw domain_error("zeta_even_coefficient: m must be at least 1");
   using boost::multiprecision::cpp_int;
   Rational acc = 0;
   cpp_int f_odd = 1; // (2m-2j-1)!
   for (int i = 2; i <= 2 * m - 1; ++i)
      f_odd *= i;
   cpp_int f_even = 1; // (2j)!
   for (int j = 0; j < m; ++j)
   {
      if (j > 0)
      {
         f_even *= (2 * j - 1) * (2 * j);
         f_odd /= (2 * m - 2 * j) * (2 * m - 2 * j + 1);
      }
      acc += euler_number(2 * j) / Rational(f_odd * f_even);
   }
   const cpp_int denominator = 2 * ((cpp_int(1) << (2 * m)) - 1);
   return Rational(cpp_int(m % 2 == 0 ? -1 : 1), denominator) * acc;
}

double zeta_even_closed_form(int m)
{
   return to_double(zeta_even_coefficient(m)) * std::pow(pi, 2 * m);
}

SeriesResult zeta_odd_via_e1_series(int m, const SeriesConfig& cfg)
{
   if (m < 1)
      throw domain_error("zeta_odd_via_e1_series: m must be at least 1 (both sides are singular at m = 0)");
   const double lhs = std::pow(2.0, 2 * m + 1) - 1.0;
   const double finite = -sign_power(m) * std::pow(pi, 2 * m) * to_double(harmonic_euler_sum(m));
   SeriesResult r = scaled_sum(
      [&](std::size_t k) { return -reversed_pair(1.0, k, -1) / std::pow(half_shift(k), 2 * m + 1); }, 1.0 / pi / lhs,
      cfg, "zeta_odd_via_e1_series");
   r.value = (finite + I / pi * r.value) / lhs;
   return r;
}

SeriesResult zeta_odd_via_order_p_series(int m, int p, const SeriesConfig& cfg)
{
   if (m < 1 || p < 1)
      throw domain_error("zeta_odd_via_order_p_series: m and p must be at least 1");
   const double lhs = std::pow(2.0, 2 * m + 1) - 1.0;
   const double pm = sign_power(m) * std::pow(pi, 2 * m);
   double middle = 0.0;
   const int upper = static_cast<int>(std::floor(p / 2.0 + m + 0.5)) - 1;
   for (int j = m + 1; j <= upper; ++j)
      middle += factorial(2 * j - 2 * m - 1) * to_double(euler_number(2 * j)) / factorial(2 * j);
   const complex pre = sign_power(p) * factorial(p - 1) * i_power(p) / std::pow(pi, p);
   const int sign = static_cast<int>(sign_power(p));
   SeriesResult r = scaled_sum(
      [&](std::size_t k) {
         return reversed_pair(static_cast<double>(p), k, sign) / std::pow(half_shift(k), p + 2 * m);
      },
      std::abs(pre) / lhs, cfg, "zeta_odd_via_order_p_series");
   r.value = (pre * r.value - pm * middle - pm * to_double(harmonic_euler_sum(m))) / lhs;
   return r;
}

SeriesResult negative_order_kernel_sum(int q, int power, int sign, const SeriesConfig& cfg)
{
   if (q < 0)
      throw domain_error("negative_order_kernel_sum: order must be non-positive");
   auto term = [&](std::size_t k) {
      const double x = kappa(k);
      const complex up = expint_E_negint(q, {0.0, x});
      return (up + static_cast<double>(sign) * std::conj(up)) / std::pow(half_shift(k), power);
   };
   return scaled_sum(term, 1.0, cfg, "negative_order_kernel_sum");
}

ComplexPair negative_order_sum_identity(int m, int p, const SeriesConfig& cfg)
{
   if (m < 1 || p < 0 || p > 2 * m)
      throw domain_error("negative_order_sum_identity: need m >= 1 and 0 <= p <= 2m");
   // (-1)^p E_{-p}(i x) + E_{-p}(-i x) = (-1)^p [E(i x) + (-1)^p conj E(i x)]
   const SeriesResult sum = negative_order_kernel_sum(p, 2 * m - p, static_cast<int>(sign_power(p)), cfg);
   const complex lhs =
      std::pow(pi, p - 2 * m) * sign_power(m) * i_power(-p) / factorial(p) * sign_power(p) * sum.value;
   Rational rhs = 0;
   using boost::multiprecision::cpp_int;
   auto fact = [](int n) {
      cpp_int f = 1;
      for (int i = 2; i <= n; ++i)
         f *= i;
      return f;
   };
   for (int j = static_cast<int>(std::floor(m - p / 2.0 + 0.5)); j <= m; ++j)
      rhs -= euler_number(2 * j) / Rational(fact(2 * m - 2 * j) * fact(2 * j));
   return {lhs, to_double(rhs)};
}

double fresnel_grouped_term(std::size_t k)
{
   const double h = half_shift(k);
   return (2.0 * fresnel_c(std::sqrt(2.0 * h)) - 1.0) / std::sqrt(h);
}

double cos_square_grouped_term(std::size_t k)
{
   const double h = half_shift(k);
   QuadratureOptions opt;
   opt.abs_tol = 1e-14;
   const auto q = integrate([&](double t) { return std::cos(pi * h * t * t); }, 0.0, 1.0, opt);
   return 2.0 * std::sqrt(2.0) * q.value - 1.0 / std::sqrt(h);
}

SeriesResult zeta_half_fresnel(const SeriesConfig& cfg)
{
   const double scale = 1.0 / (std::sqrt(2.0) - 1.0);
   SeriesResult r =
      scaled_sum([](std::size_t k) { return complex(fresnel_grouped_term(k)); }, scale, cfg, "zeta_half_fresnel");
   r.value /= 1.0 - std::sqrt(2.0);
   return r;
}

SeriesResult zeta_derivative_series(complex s, int n, const SeriesConfig& cfg)
{
   check_depth(n, "zeta_derivative_series");
   if (s == 1.0)
      throw pole_error("zeta_derivative_series: pole at s = 1");
   for (int i = 0; i < n; ++i)
      if (s + static_cast<double>(i) == 0.0)
         throw pole_error("zeta_derivative_series: digamma pole for this depth; lower n");
   const complex scale = 1.0 - std::pow(2.0, 1.0 - s);
   if (std::abs(scale) < 1e-12)
      throw domain_error("zeta_derivative_series: 1 - 2^{1-s} vanishes");
   const complex two = std::pow(2.0, s - 1.0);
   auto inverse_run = [&](int from, int to) {
      complex acc = 0.0;
      for (int i = from; i < to; ++i)
         acc += 1.0 / (s + static_cast<double>(i));
      return acc;
   };
   complex finite = 0.0;
   for (int j = 0; 2 * j <= n - 1; ++j)
      finite += -inverse_run(2 * j, n) * pochhammer(s, 2 * j) * (to_double(euler_number(2 * j)) / factorial(2 * j));
   finite *= two;
   const complex pre = two * i_power(n) * sign_power(n) * pochhammer(s, n) / std::pow(pi, n);
   const int sign = static_cast<int>(sign_power(n));
   const complex order = s + static_cast<double>(n);
   SeriesResult r = scaled_sum(
      [&](std::size_t k) { return reversed_pair_derivative(order, k, sign) / std::pow(half_shift(k), n); },
      std::abs(pre / scale), cfg, "zeta_derivative_series");
   const complex zeta = zeta_ref(s);
   const complex last = ((1.0 - std::pow(2.0, 2.0 - s)) * ln2 + inverse_run(0, n) * scale) * zeta;
   r.value = (finite + pre * r.value + last) / scale;
   return r;
}

SeriesResult zeta_via_gaussian_expint(complex s, complex lambda, const SeriesConfig& cfg)
{
   if (s == 0.0 || s == 1.0)
      throw pole_error("zeta_via_gaussian_expint: s must differ from 0 and 1");
   if (lambda == 0.0 || std::abs(std::arg(lambda)) > pi / 2 + 1e-15)
      throw domain_error("zeta_via_gaussian_expint: need lambda != 0 with |arg lambda| <= pi/2");
   const complex root = std::sqrt(lambda);
   const complex pre = std::pow(pi * lambda, s / 2.0) * rgamma(s / 2.0);
   const double scale = std::abs(pre) * std::max(1.0, 1.0 / std::abs(root));
   std::size_t used = 0;
   double err = 0.0;
   const complex first = gaussian_tail_sum(
      [&](double n) { return expint_E(1.0 - s / 2.0, pi * n * n * lambda, term_tol).value; }, scale, cfg, used, err);
   const complex second = gaussian_tail_sum(
      [&](double n) { return expint_E(s / 2.0 + 0.5, pi * n * n / lambda, term_tol).value; }, scale, cfg, used,
      err);
   SeriesResult r;
   r.value = pre * (first + second / root + 1.0 / (root * (s - 1.0)) - 1.0 / s);
   r.abs_error_estimate = std::abs(pre) * err * (1.0 + 1.0 / std::abs(root));
   r.terms_used = used;
   r.converged = true;
   return r;
}

SeriesResult xi_via_expint_series(complex s, const SeriesConfig& cfg)
{
   std::size_t used = 0;
   double err = 0.0;
   const double scale = pi * (std::abs(s - 1.0) + std::abs(s));
   const complex a = gaussian_tail_sum(
      [&](double n) { return n * n * expint_E(-s / 2.0, pi * n * n, term_tol).value; }, scale, cfg, used, err);
   const complex b = gaussian_tail_sum(
      [&](double n) { return n * n * expint_E((s - 1.0) / 2.0, pi * n * n, term_tol).value; }, scale, cfg, used,
      err);
   SeriesResult r;
   r.value = pi * (s - 1.0) * a - pi * s * b + gaussian_moment_sum();
   r.abs_error_estimate = pi * (std::abs(s - 1.0) + std::abs(s)) * err;
   r.terms_used = used;
   r.converged = true;
   return r;
}

SeriesResult zeta_via_xi_series(complex s, const SeriesConfig& cfg)
{
   if (s == 1.0)
      throw pole_error("zeta_via_xi_series: pole at s = 1");
   long long n;
   if (is_exact_integer(s, n) && n <= -2 && n % 2 == 0)
      throw domain_error("zeta_via_xi_series: Gamma(1+s/2) is singular at negative even s");
   SeriesResult r = xi_via_expint_series(s, cfg);
   const complex factor = (s - 1.0) * std::pow(pi, -s / 2.0) * gamma(1.0 + s / 2.0);
   r.value /= factor;
   r.abs_error_estimate /= std::abs(factor);
   return r;
}

complex xi_ref(complex s)
{
   if (s == 1.0)
      return 0.5;
   long long n;
   if (is_exact_integer(s, n) && n <= -2 && n % 2 == 0)
      return xi_ref(1.0 - s);
   return (s - 1.0) * std::pow(pi, -s / 2.0) * gamma(1.0 + s / 2.0) * zeta_ref(s);
}

double gaussian_moment_sum()
{
   double acc = 0.0;
   for (int n = 12; n >= 1; --n)
      acc += n * n * std::exp(-pi * n * n);
   return 4.0 * pi * acc;
}

SeriesResult zeta_via_reflected_recursion(complex s, int n, const SeriesConfig& cfg)
{
   check_depth(n, "zeta_via_reflected_recursion");
   long long integer;
   if (is_exact_integer(s, integer))
   {
      if (integer == 1)
         throw pole_error("zeta_via_reflected_recursion: pole at s = 1");
      if (integer >= 2 && integer % 2 == 0)
         return {zeta_even_closed_form(static_cast<int>(integer / 2)), 0.0, 0, true};
      if (integer >= 3)
         return zeta_odd_via_e1_series(static_cast<int>((integer - 1) / 2), cfg);
      if (integer == 0 || integer % 2 != 0)
         throw domain_error("zeta_via_reflected_recursion: s = " + std::to_string(integer) +
                            " needs a limit form; both sides degenerate");
   }
   const complex lhs = std::pow(2.0, s) - 1.0;
   complex finite = 0.0;
   for (int j = 0; 2 * j <= n - 1; ++j)
      finite += gamma(2.0 * j + 1.0 - s) * (to_double(euler_number(2 * j)) / factorial(2 * j));
   finite *= -std::pow(pi, s - 1.0) * sin_pi(s / 2.0);
   const complex pre =
      std::pow(pi, s - static_cast<double>(n)) * i_power(n) * rgamma(s - static_cast<double>(n)) / (2.0 * cos_pi(s / 2.0));
   const int sign = static_cast<int>(sign_power(n));
   const complex order = 1.0 + static_cast<double>(n) - s;
   SeriesResult r;
   if (pre == 0.0)
   {
      r.converged = true;
      r.value = finite / lhs;
      return r;
   }
   r = scaled_sum([&](std::size_t k) { return reversed_pair(order, k, sign) / std::pow(half_shift(k), n); },
                  std::abs(pre / lhs), cfg, "zeta_via_reflected_recursion");
   const complex tail = pre * r.value;
   r.value = (finite + tail) / lhs;
   const double big = std::max(std::abs(finite), std::abs(tail));
   r.cancellation_ratio = std::abs(finite + tail) > 0.0 ? big / std::abs(finite + tail) : 1.0;
   r.significance_loss = r.cancellation_ratio > 1e6;
   return r;
}

} // namespace zetakit
