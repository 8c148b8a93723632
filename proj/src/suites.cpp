#include "zetakit/suites.hpp"

#include "zetakit/asymptotics.hpp"
#include "zetakit/numbertheory.hpp"
#include "zetakit/parallel.hpp"
#include "zetakit/paths.hpp"
#include "zetakit/registry.hpp"
#include "zetakit/zeta.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>

namespace zetakit {

namespace {

std::string label(const char* fmt, double a)
{
   char buf[64];
   std::snprintf(buf, sizeof buf, fmt, a);
   return buf;
}

std::string label(const char* fmt, int a)
{
   char buf[64];
   std::snprintf(buf, sizeof buf, fmt, a);
   return buf;
}

std::string label(const char* fmt, int a, int b)
{
   char buf[64];
   std::snprintf(buf, sizeof buf, fmt, a, b);
   return buf;
}

CheckValue exact(const Rational& lhs, const Rational& rhs)
{
   return {to_double(lhs), to_double(rhs), to_string(lhs), to_string(rhs)};
}

CheckValue numeric(complex lhs, complex rhs)
{
   return {lhs, rhs, std::nullopt, std::nullopt};
}

Rational factorial(int n)
{
   Rational f = 1;
   for (int i = 2; i <= n; ++i)
      f *= i;
   return f;
}

std::vector<Check> build()
{
   std::vector<Check> c;
   auto add = [&](std::string id, std::string anchor, double tol, std::function<CheckValue(const SeriesConfig&)> run) {
      c.push_back({std::move(id), std::move(anchor), tol, std::move(run)});
   };

   for (const auto& ic : identity_registry())
      add(ic.id, ic.anchor, ic.tolerance, [&ic](const SeriesConfig&) { return numeric(ic.lhs(), ic.rhs()); });

   // exact number theory
   for (int N = 0; N <= 10; ++N)
      add(label("bernoulli-recursion/N=%02d", N), "B_{2N+2} from its own recursion equals the convolution value", 0.0,
          [N](const SeriesConfig&) { return exact(bernoulli_even_recursive(N), bernoulli_exact(2 * N + 2)); });
   for (int m = 1; m <= 20; ++m)
      add(label("euler-binomial/m=%02d", m), "sum_j E(2j) / ((2m-2j)! (2j)!) = 0", 0.0,
          [m](const SeriesConfig&) { return exact(euler_binomial_sum(m), 0); });
   for (int m = 1; m <= 15; ++m)
      add(label("harmonic-euler/m=%02d", m), "harmonic-weighted Euler sum equals its Bernoulli form", 0.0,
          [m](const SeriesConfig&) { return exact(harmonic_euler_sum(m), bernoulli_harmonic_sum(m)); });
   for (int m = 1; m <= 8; ++m)
      add(label("euler-recursion/m=%d", m), "E(2m) from the harmonic recursion equals the Bernoulli form", 0.0,
          [m](const SeriesConfig&) { return exact(euler_number_via_harmonic_recursion(m), euler_number(2 * m)); });
   for (int n = 1; n <= 10; ++n)
      add(label("bernoulli-from-euler/n=%02d", n), "B_2n from Euler numbers", 0.0,
          [n](const SeriesConfig&) { return exact(bernoulli_from_euler(n), bernoulli_exact(2 * n)); });
   for (int m = 1; m <= 10; ++m)
   {
      add(label("euler-digamma/m=%02d", m), "psi-weighted Euler sum equals the Bernoulli sum", 0.0,
          [m](const SeriesConfig&) { return exact(euler_digamma_sum(m).constant, bernoulli_digamma_sum(m)); });
      add(label("euler-digamma/gamma-free/m=%02d", m), "Euler's gamma cancels from the psi-weighted Euler sum", 0.0,
          [m](const SeriesConfig&) { return exact(euler_digamma_sum(m).gamma_coefficient, 0); });
   }
   for (double s : {0.3, 1.7, -2.2})
      for (int n = 1; n <= 3; ++n)
      {
         const double rhs = bernoulli_gamma_sum(s, n);
         add(label("euler-gamma-sum/s=%g", s) + label("/n=%d", n), "Gamma-weighted Euler sum against its Bernoulli form",
             1e-11 * std::max(1.0, std::fabs(rhs)),
             [s, n](const SeriesConfig&) { return numeric(euler_gamma_sum(s, n), bernoulli_gamma_sum(s, n)); });
      }

   // the main series and its recursions
   const double res[] = {-3.5, -1.5, 0.5, 2.5, 4.0};
   const double ims[] = {-4.0, -1.0, 2.0, 5.0};
   for (double re : res)
      for (double im : ims)
      {
         const complex s(re, im);
         add(label("eta-series/s=%g", re) + label("%+gi", im), "eta from the E_s(+-i kappa) series", 1e-8,
             [s](const SeriesConfig& cfg) { return numeric(eta_via_expint_series(s, cfg).value, eta_ref(s)); });
      }
   for (complex s : {complex(0.5), complex(2.5), complex(-1.3, 2.0)})
      for (int n = 0; n <= 4; ++n)
         add(label("recursion/s=%g", s.real()) + label("%+gi", s.imag()) + label("/n=%d", n),
             "eta from the n-fold recursed series", 1e-8,
             [s, n](const SeriesConfig& cfg) { return numeric(eta_via_recursed_series(s, n, cfg).value, eta_ref(s)); });
   for (double s : {0.5, -0.5, 2.5})
      for (int n = 1; n <= 3; ++n)
         add(label("reflected-recursion/s=%g", s) + label("/n=%d", n), "zeta from the reflected recursion", 1e-8,
             [s, n](const SeriesConfig& cfg) { return numeric(zeta_via_reflected_recursion(s, n, cfg).value, zeta_ref(s)); });
   for (int m = 1; m <= 5; ++m)
      add(label("zeta-even/m=%d", m), "zeta(2m) closed form against |B_2m| (2 pi)^{2m} / (2 (2m)!)",
          1e-12 * zeta_ref(2.0 * m).real(), [m](const SeriesConfig&) {
             const double classical = std::fabs(to_double(bernoulli_exact(2 * m))) * std::pow(2 * pi, 2 * m) /
                                      (2 * to_double(factorial(2 * m)));
             return numeric(zeta_even_closed_form(m), classical);
          });
   for (int m = 1; m <= 4; ++m)
      add(label("trivial-zeros/m=%d", m), "zeta(-2m) = 0 from the main series", 1e-9, [m](const SeriesConfig& cfg) {
         const complex s = -2.0 * m;
         return numeric(eta_via_expint_series(s, cfg).value / (1.0 - std::pow(2.0, 1.0 - s)), 0.0);
      });
   for (int m = 1; m <= 2; ++m)
   {
      const std::string base = label("zeta-odd/m=%d", m);
      add(base + "/e1-series", "zeta(2m+1) from the E_1 series", 1e-8,
          [m](const SeriesConfig& cfg) { return numeric(zeta_odd_via_e1_series(m, cfg).value, zeta_ref(2.0 * m + 1)); });
      for (int p = 1; p <= 3; ++p)
         add(base + label("/order-p=%d", p), "zeta(2m+1) from the order-p series", 1e-8, [m, p](const SeriesConfig& cfg) {
            return numeric(zeta_odd_via_order_p_series(m, p, cfg).value, zeta_ref(2.0 * m + 1));
         });
      add(base + "/double-integral", "zeta(2m+1) from the A(m) double integral", 1e-7,
          [m](const SeriesConfig&) { return numeric(zeta_odd_via_double_integral(m), zeta_ref(2.0 * m + 1)); });
      add(base + "/mellin-barnes", "zeta(2m+1) from the vertical-line integral", 1e-7,
          [m](const SeriesConfig&) { return numeric(mellin_barnes_zeta_odd(m).zeta(), zeta_ref(2.0 * m + 1)); });
   }
   for (int m = 1; m <= 4; ++m)
   {
      for (int p = 0; p <= 2 * m; ++p)
         add(label("negative-order/m=%d/p=%d", m, p), "E_{-p} pair sum against the finite Euler sum", 1e-9,
             [m, p](const SeriesConfig& cfg) {
                const auto r = negative_order_sum_identity(m, p, cfg);
                return numeric(r.lhs, r.rhs);
             });
      add(label("negative-order/vanishing/m=%d", m), "sum E_{-2m}(i kappa) + E_{-2m}(-i kappa) = 0", 1e-9,
          [m](const SeriesConfig& cfg) { return numeric(negative_order_kernel_sum(2 * m, 0, 1, cfg).value, 0.0); });
      add(label("negative-order/odd-difference/m=%d", m), "sum [E_{1-2m}(i kappa) - E_{1-2m}(-i kappa)] / (k+1/2) = i pi / (2m)",
          1e-9, [m](const SeriesConfig& cfg) {
             return numeric(negative_order_kernel_sum(2 * m - 1, 1, -1, cfg).value, complex(0.0, pi / (2 * m)));
          });
      add(label("negative-order/even-square/m=%d", m),
          "sum [E_{2-2m}(i kappa) + E_{2-2m}(-i kappa)] / (k+1/2)^2 = -pi^2 Gamma(2m-1) / Gamma(2m+1)", 1e-9,
          [m](const SeriesConfig& cfg) {
             return numeric(negative_order_kernel_sum(2 * m - 2, 2, 1, cfg).value,
                            -pi * pi * std::tgamma(2.0 * m - 1) / std::tgamma(2.0 * m + 1));
          });
   }

   // paths and incomplete functions
   for (double s : {0.0, 0.5, 1.7, 2.0, -2.0})
      for (PathKind k : {PathKind::circle_A, PathKind::double_circle_B, PathKind::two_lines_C, PathKind::four_lines_D})
         add(label("paths/s=%g/", s) + to_string(k), "eta from the path integral, against eta from the circle", 1e-8,
             [s, k](const SeriesConfig&) {
                return numeric(path_integral_eta(s, make_path(k)), path_integral_eta(s, make_path(PathKind::circle_A)));
             });
   add("incomplete/zeta-minus/s=0", "zeta-(0) = -1/2", 1e-10,
       [](const SeriesConfig&) { return numeric(zeta_minus(0.0), -0.5); });
   add("incomplete/zeta-plus/s=0", "zeta+(0) = 0", 1e-10, [](const SeriesConfig&) { return numeric(zeta_plus(0.0), 0.0); });
   for (complex s : {complex(-1.5), complex(0.3, 2.0), complex(2.5, 1.0)})
      add(label("incomplete/sum/s=%g", s.real()) + label("%+gi", s.imag()), "zeta- + zeta+ = zeta", 1e-9,
          [s](const SeriesConfig&) { return numeric(zeta_minus(s) + zeta_plus(s), zeta_ref(s)); });
   for (double t : {0.0, 2.0, 5.0, 14.1347})
      add(label("critical-line/t=%g", t), "zeta- + zeta+ from J1..J4 on the critical line", 1e-8,
          [t](const SeriesConfig&) { return numeric(critical_line_system(t).zeta(), zeta_ref(complex(0.5, t))); });

   // derivative, Gaussian sums, zeta(1/2)
   add("derivative/s=0", "zeta'(0) = -ln(2 pi)/2", 1e-7,
       [](const SeriesConfig& cfg) { return numeric(zeta_derivative_series(0.0, 0, cfg).value, -std::log(2 * pi) / 2); });
   add("derivative/s=0.5/n=0-vs-1", "plain and once-recursed derivative series agree", 1e-7, [](const SeriesConfig& cfg) {
      return numeric(zeta_derivative_series(0.5, 0, cfg).value, zeta_derivative_series(0.5, 1, cfg).value);
   });
   add("gaussian/lambda-independence", "zeta(3) from the Gaussian E-sums at lambda = 1 and 2", 1e-11,
       [](const SeriesConfig& cfg) {
          return numeric(zeta_via_gaussian_expint(3.0, 1.0, cfg).value, zeta_via_gaussian_expint(3.0, 2.0, cfg).value);
       });
   add("gaussian/moment-constant", "4 pi sum n^2 e^{-pi n^2} = pi^{1/4} / (2 Gamma(3/4))", 1e-13,
       [](const SeriesConfig&) { return numeric(gaussian_moment_sum(), std::pow(pi, 0.25) / (2 * std::tgamma(0.75))); });
   add("gaussian/xi-symmetry", "xi(s) = xi(1-s) at s = 0.3 + 2i", 1e-10, [](const SeriesConfig& cfg) {
      const complex s(0.3, 2.0);
      return numeric(xi_via_expint_series(s, cfg).value, xi_via_expint_series(1.0 - s, cfg).value);
   });
   add("zeta-half/fresnel", "grouped Fresnel series for zeta(1/2)", 1e-6, [](const SeriesConfig& cfg) {
      SeriesConfig c = cfg;
      c.tolerance = 1e-8;
      return numeric(zeta_half_fresnel(c).value, zeta_ref(0.5));
   });

   // E_{2p} pairs, sine integrals, hypergeometric values
   for (int p = 1; p <= 4; ++p)
      for (int k = 0; k <= 5; ++k)
         add(label("si-pair/p=%d/k=%d", p, k), "E_{2p} pair against a sine integral and a finite sum", 1e-9,
             [p, k](const SeriesConfig&) {
                const auto r = even_order_pair_si_identity(k, p);
                return numeric(r.lhs, r.rhs);
             });
   for (auto [p, k] : {std::pair{2, 0}, std::pair{3, 1}})
      add(label("hypergeometric/p=%d/k=%d", p, k), "1F2 with shifted parameters against the Si-type 1F2", 1e-9,
          [p, k](const SeriesConfig&) {
             const auto r = hypergeometric_1f2_identity(k, p);
             return numeric(r.lhs, r.rhs);
          });
   for (int k = 0; k <= 2; ++k)
   {
      add(label("regularized-3f0/unit/k=%d", k), "p = 1 regularized value against its closed form", 1e-9,
          [k](const SeriesConfig&) { return numeric(regularized_3F0(1, k), regularized_3F0_unit(k)); });
      add(label("regularized-3f0/pair/k=%d", k), "E_4 pair against the regularized value", 1e-9, [k](const SeriesConfig&) {
         const auto r = regularized_3F0_pair_identity(2, k);
         return numeric(r.lhs, r.rhs);
      });
      for (int p = 2; p <= 3; ++p)
         add(label("regularized-3f0/split/p=%d/k=%d", p, k), "finite sum from two regularized values", 1e-9,
             [p, k](const SeriesConfig&) {
                const auto r = regularized_3F0_split_identity(p, k);
                return numeric(r.lhs, r.rhs);
             });
   }
   add("digamma-sine/k=3", "psi-weighted cosine-type series equals -(-1)^k Si(kappa)", 1e-9, [](const SeriesConfig&) {
      const auto r = digamma_sine_series_identity(3);
      return numeric(r.lhs, r.rhs);
   });
   for (int j = 0; j <= 5; ++j)
      add(label("si-tail/j=%d", j), "int_1^inf sin(kappa v)/v dv = pi/2 - Si(kappa)", 1e-10, [j](const SeriesConfig&) {
         const auto r = si_split_identity(1).tails.at(j);
         return numeric(r.lhs, r.rhs);
      });
   for (int K = 0; K <= 2; ++K)
      add(label("asymptotic/slope/K=%d", K), "log-log slope of the truncation error over t = 10, 20, 40 is below -(2K+2.5)",
          0.0, [K](const SeriesConfig&) {
             const double slope = asymptotic_error_slope(K, {10.0, 20.0, 40.0});
             const double bound = -(2 * K + 2.5);
             // lhs is the excess over the bound, clipped at zero
             return numeric(std::max(0.0, slope - bound), 0.0);
          });

   std::sort(c.begin(), c.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
   return c;
}

ReportRecord run_one(const Check& check, const RunOptions& options)
{
   ReportRecord r;
   r.id = check.id;
   r.anchor = check.anchor;
   r.tolerance = options.tolerance_override.value_or(check.tolerance);
   const auto start = std::chrono::steady_clock::now();
   try
   {
      const CheckValue v = check.run(options.series);
      r.lhs = v.lhs;
      r.rhs = v.rhs;
      r.lhs_exact = v.lhs_exact;
      r.rhs_exact = v.rhs_exact;
      r.abs_diff = std::abs(v.lhs - v.rhs);
      if (v.lhs_exact && v.rhs_exact && *v.lhs_exact != *v.rhs_exact && r.abs_diff == 0.0)
         r.abs_diff = std::numeric_limits<double>::min();
      r.pass = r.abs_diff <= r.tolerance;
   }
   catch (const std::exception& e)
   {
      r.error = e.what();
      r.abs_diff = std::numeric_limits<double>::infinity();
      r.pass = false;
   }
   r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
   return r;
}

} // namespace

const std::vector<Check>& check_catalogue()
{
   static const std::vector<Check> checks = build();
   return checks;
}

std::vector<std::string> matching_checks(const std::string& pattern)
{
   std::vector<std::string> ids;
   for (const auto& c : check_catalogue())
      if (id_matches(pattern, c.id))
         ids.push_back(c.id);
   return ids;
}

std::vector<ReportRecord> run_checks(const RunOptions& options)
{
   validate(options.series);
   std::vector<const Check*> chosen;
   for (const auto& c : check_catalogue())
      if (id_matches(options.pattern, c.id))
         chosen.push_back(&c);
   std::vector<ReportRecord> records(chosen.size());
   parallel_for(chosen.size(), options.jobs, [&](std::size_t i) { records[i] = run_one(*chosen[i], options); });
   return records;
}

} // namespace zetakit
