#include "zetakit/asymptotics.hpp"

#include "zetakit/acceleration.hpp"
#include "zetakit/expint.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/special.hpp"

#include <cmath>
#include <numbers>

namespace zetakit {

namespace {

double kappa(int k)
{
   return pi * (k + 0.5);
}

void check_k(int k, const char* what)
{
   if (k < 0)
      throw domain_error(std::string(what) + ": k must be non-negative");
}

// sum_{j=1}^{p-1} (-1)^j Gamma(2j) / x^{2j}
double gamma_tail(int p, double x)
{
   double sum = 0.0;
   for (int j = 1; j < p; ++j)
      sum += sign_power(j) * std::tgamma(2.0 * j) / std::pow(x, 2 * j);
   return sum;
}

} // namespace

double eta_hurwitz_half_exact(double t)
{
   if (!(t > 0.0))
      throw domain_error("eta_hurwitz_half_exact: t must be positive");
   return (digamma(t / 4 + 0.75) - digamma(t / 4 + 0.25)) / 2;
}

AsymptoticEvaluation eta_hurwitz_half_asymptotic(double t, int m)
{
   if (!(t >= 2.0))
      throw domain_error("eta_hurwitz_half_asymptotic: t must be at least 2");
   if (m < 0 || m > 100)
      throw domain_error("eta_hurwitz_half_asymptotic: order must lie in [0, 100]");
   AsymptoticEvaluation r;
   r.t = t;
   r.truncation_order = m;
   r.exact_value = eta_hurwitz_half_exact(t);
   double sum = 0.0;
   for (int k = 0; k <= m; ++k)
   {
      sum += to_double(euler_number(2 * k)) / std::pow(t, 2 * k + 1);
      r.partial_sums.push_back(sum);
      if (r.error(k) < r.error(r.optimal_index))
         r.optimal_index = k;
   }
   return r;
}

double asymptotic_error_slope(int K, const std::vector<double>& ts)
{
   if (ts.size() < 2)
      throw domain_error("asymptotic_error_slope: need at least two t values");
   double sx = 0, sy = 0, sxx = 0, sxy = 0;
   for (double t : ts)
   {
      const double x = std::log(t);
      const double y = std::log(eta_hurwitz_half_asymptotic(t, K).error(K));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
   }
   const double n = static_cast<double>(ts.size());
   return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double euler_digamma_value(int m)
{
   const GammaLinear g = euler_digamma_sum(m);
   return to_double(g.constant) + to_double(g.gamma_coefficient) * euler_gamma;
}

double odd_zeta_double_integral(int m, IntegrationOrder order, double tol)
{
   if (m < 1)
      throw domain_error("odd_zeta_double_integral: m must be at least 1");
   const double scale = std::pow(2.0, 2 * m + 3) * std::pow(pi, 2 * m) / std::tgamma(2.0 * m + 1);
   // cut the t range where t^{2m+2} 2 e^{-pi t} < tol 1e-3 / scale
   double T = 1.0;
   while ((2 * m + 2) * std::log(T) + std::log(2.0) - pi * T > std::log(tol * 1e-3 / scale))
      T += 0.5;
   QuadratureOptions inner;
   inner.abs_tol = tol / (scale * 100);
   QuadratureOptions outer;
   outer.abs_tol = tol / scale;
   const int n = 2 * m;
   double value;
   if (order == IntegrationOrder::t_outer)
   {
      auto f = [&](double t) {
         const double in = integrate([&](double x) { return std::pow(1 - x, n) * x / (4 * t * t * x * x + 1); }, 0.0, 1.0,
                                     inner)
                              .value;
         return std::pow(t, n + 2) / std::cosh(pi * t) * in;
      };
      value = integrate(f, 0.0, T, outer).value;
   }
   else
   {
      auto f = [&](double x) {
         const double in =
            integrate([&](double t) { return std::pow(t, n + 2) / ((4 * t * t * x * x + 1) * std::cosh(pi * t)); }, 0.0,
                      T, inner)
               .value;
         return std::pow(1 - x, n) * x * in;
      };
      value = integrate(f, 0.0, 1.0, outer).value;
   }
   return scale * value;
}

double zeta_odd_via_double_integral(int m, double tol)
{
   const double a = odd_zeta_double_integral(m, IntegrationOrder::t_outer, tol);
   return (a - sign_power(m) * std::pow(pi, 2 * m) * euler_digamma_value(m)) / (std::ldexp(1.0, 2 * m + 1) - 1);
}

MellinBarnesResult mellin_barnes_zeta_odd(int m, double tol)
{
   if (m < 1)
      throw domain_error("mellin_barnes_zeta_odd: m must be at least 1");
   const int p = m + 1;
   const double c = m + 0.5;
   SeriesConfig cfg;
   cfg.tolerance = 1e-12;
   cfg.acceleration = Acceleration::alternating;
   auto integrand = [&](double u) -> complex {
      const complex v(c, u);
      const complex w = 2.0 * p + 2.0 * m + 1.0 - 2.0 * v;
      const SeriesResult beta = sum_series(
         [&](std::size_t k) { return sign_power(static_cast<long long>(k)) * std::pow(k + 0.5, -w); }, cfg);
      require_converged(beta, "mellin_barnes_zeta_odd");
      return gamma(2.0 * p - 2.0 * v) * std::pow(pi, 2.0 * v) / sin_pi(v) * beta.value;
   };
   QuadratureOptions opt;
   opt.abs_tol = tol / 10;
   const complex pre = I * sign_power(p) / std::pow(pi, 2 * p + 1);
   double U = 1.0;
   complex integral = integrate(integrand, -U, U, opt).value;
   int quiet = 0;
   while (quiet < 3)
   {
      if (U >= 256.0)
         throw convergence_error("mellin_barnes_zeta_odd: tail did not settle");
      const complex shell =
         integrate(integrand, -2 * U, -U, opt).value + integrate(integrand, U, 2 * U, opt).value;
      integral += shell;
      U *= 2;
      quiet = std::abs(pre * I * shell) < tol ? quiet + 1 : 0;
   }
   MellinBarnesResult r;
   r.m = m;
   r.cutoff = U;
   r.scaled = pre * I * integral - sign_power(m) * std::pow(pi, 2 * m) * euler_digamma_value(m);
   return r;
}

RealPair even_order_pair_si_identity(int k, int p)
{
   check_k(k, "even_order_pair_si_identity");
   if (p < 1)
      throw domain_error("even_order_pair_si_identity: p must be at least 1");
   const double K = kappa(k);
   const complex pair = t_pair(static_cast<std::size_t>(k), 2.0 * p, 1, 1e-14);
   RealPair r;
   r.lhs = sign_power(p) * std::tgamma(2.0 * p) * pair.real() / std::pow(K, 2 * p - 1);
   r.rhs = 2 * sign_power(k) * gamma_tail(p, K) - 2 * (sine_integral(K) - pi / 2);
   return r;
}

double hyp1f2(double a, double b1, double b2, double x)
{
   using R = long double;
   R term = 1;
   R sum = 1;
   for (int n = 0; n < 10000; ++n)
   {
      const R d1 = b1 + n;
      const R d2 = b2 + n;
      if (d1 == 0 || d2 == 0)
         throw pole_error("hyp1f2: lower parameter at a non-positive integer");
      term *= (a + n) / (d1 * d2 * (n + 1)) * x;
      sum += term;
      if (term == 0)
         return static_cast<double>(sum);
      // the ratio of successive terms is below 1/2 once n^2 exceeds 2|x|
      if (static_cast<R>(n) * n > 2 * std::fabs(x) && std::fabs(term) < 1e-19L * std::fabs(sum))
         return static_cast<double>(sum);
   }
   throw convergence_error("hyp1f2: series cap reached");
}

RealPair hypergeometric_1f2_identity(int k, int p)
{
   check_k(k, "hypergeometric_1f2_identity");
   if (p < 2)
      throw domain_error("hypergeometric_1f2_identity: p must be at least 2");
   const double K = kappa(k);
   const double x = -K * K / 4;
   const double g = std::tgamma(2.0 * p - 1);
   RealPair r;
   r.lhs = hyp1f2(0.5 - p, 0.5, 1.5 - p, x);
   r.rhs = sign_power(p + 1) * std::pow(K, 2 * p) / g * hyp1f2(0.5, 1.5, 1.5, x) +
           sign_power(k + p) * std::pow(K, 2 * p - 1) / g * gamma_tail(p, K);
   return r;
}

double regularized_3F0(int p, int k)
{
   check_k(k, "regularized_3F0");
   if (p < 1)
      throw domain_error("regularized_3F0: p must be at least 1");
   const double h = k + 0.5;
   const double h2p = std::pow(h, 2 * p);
   const double K = kappa(k);
   return std::pow(pi, 2 * p) / std::tgamma(2.0 * p) *
          (-sign_power(p) * h2p * gamma_tail(p, K) + sign_power(p + k) * h2p * (sine_integral(K) - pi / 2));
}

double regularized_3F0_unit(int k)
{
   check_k(k, "regularized_3F0_unit");
   const double h = k + 0.5;
   return -pi * pi * sign_power(k) * h * h * (sine_integral(kappa(k)) - pi / 2);
}

RealPair regularized_3F0_pair_identity(int p, int k)
{
   const double K = kappa(k);
   RealPair r;
   r.lhs = t_pair(static_cast<std::size_t>(k), 2.0 * p, 1, 1e-14).real();
   r.rhs = -2 * sign_power(k) / K * regularized_3F0(p, k);
   return r;
}

RealPair regularized_3F0_split_identity(int p, int k)
{
   if (p < 2)
      throw domain_error("regularized_3F0_split_identity: p must be at least 2");
   const double K = kappa(k);
   RealPair r;
   for (int j = 0; j <= p - 2; ++j)
      r.lhs += std::tgamma(2.0 * j + 2) * sign_power(j) / std::pow(K, 2 * j);
   r.rhs = regularized_3F0(1, k) + std::tgamma(2.0 * p) * sign_power(p) / std::pow(K, 2 * p - 2) * regularized_3F0(p, k);
   return r;
}

RealPair digamma_sine_series_identity(int k)
{
   check_k(k, "digamma_sine_series_identity");
   using R = long double;
   const R K = std::numbers::pi_v<R> * (k + 0.5L);
   const R gamma_e = std::numbers::egamma_v<R>;
   R harmonic = 0; // H_{2j}
   R term = 1;     // (-1)^j K^{2j} / (2j)!
   R sum = -gamma_e;
   for (int j = 1; j < 2000; ++j)
   {
      harmonic += 1.0L / (2 * j - 1) + 1.0L / (2 * j);
      term *= -K * K / ((2.0L * j - 1) * (2.0L * j));
      const R add = term * (harmonic - gamma_e);
      sum += add;
      if (2 * j > K && std::fabs(add) < 1e-21L)
         break;
   }
   RealPair r;
   r.lhs = static_cast<double>(sum);
   r.rhs = -sign_power(k) * sine_integral(static_cast<double>(K));
   return r;
}

SiSplitResult si_split_identity(int m)
{
   if (m < 1)
      throw domain_error("si_split_identity: m must be at least 1");
   SiSplitResult r;
   QuadratureOptions opt;
   opt.abs_tol = 1e-12;
   for (int j = 0; j <= 5; ++j)
   {
      const double K = kappa(j);
      const double half_period = pi / K;
      const double first_zero = std::ceil(K / pi) * half_period;
      const double tail =
         integrate_oscillatory([K](double v) { return std::sin(K * v) / v; }, 1.0, first_zero, half_period, opt).value;
      r.tails.push_back({tail, pi / 2 - sine_integral(K)});
   }
   const GammaLinear g = euler_digamma_sum(m);
   r.euler_side = g.constant;
   r.gamma_coefficient = g.gamma_coefficient;
   r.bernoulli_side = bernoulli_digamma_sum(m);
   return r;
}

} // namespace zetakit
