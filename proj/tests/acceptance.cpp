// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "oracles.hpp"

#include "zetakit/asymptotics.hpp"
#include "zetakit/numbertheory.hpp"
#include "zetakit/paths.hpp"
#include "zetakit/registry.hpp"
#include "zetakit/zeta.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

using namespace zetakit;

namespace {

complex zeta_oracle(complex s)
{
   return oracle::to_double(oracle::zeta(s));
}

complex eta_oracle(complex s)
{
   return oracle::to_double(oracle::eta(s));
}

// Largest deviation seen against its tolerance; fails on the first excess.
struct Tally
{
   double worst = 0.0;
   double worst_ratio = 0.0;
   std::string worst_label;
   bool ok = true;

   void check(const std::string& label, double deviation, double tol)
   {
      const double ratio = tol > 0 ? deviation / tol : (deviation == 0 ? 0.0 : INFINITY);
      if (!(ratio <= 1.0))
         ok = false;
      if (ratio >= worst_ratio || std::isnan(ratio))
      {
         worst_ratio = ratio;
         worst = deviation;
         worst_label = label;
      }
   }
   void exact(const std::string& label, bool equal) { check(label, equal ? 0.0 : 1.0, 0.0); }
};

struct Criterion
{
   int number;
   std::string title;
   std::function<void(Tally&)> body;
};

std::string fmt(const char* f, double x)
{
   char buf[64];
   std::snprintf(buf, sizeof buf, f, x);
   return buf;
}

std::string at(complex s)
{
   char buf[64];
   std::snprintf(buf, sizeof buf, "s=%g%+gi", s.real(), s.imag());
   return buf;
}

const IdentityCase& registry_case(const std::string& id)
{
   for (const auto& c : identity_registry())
      if (c.id == id)
         return c;
   throw std::runtime_error("missing registry case " + id);
}

std::vector<Criterion> criteria()
{
   std::vector<Criterion> list;

   list.push_back({1, "main E_s series reproduces eta on the 20-point strip grid", [](Tally& t) {
                      for (double re : {-3.5, -1.5, 0.5, 2.5, 4.0})
                         for (double im : {-4.0, -1.0, 2.0, 5.0})
                         {
                            const complex s(re, im);
                            t.check(at(s), std::abs(eta_via_expint_series(s).value - eta_oracle(s)), 1e-8);
                         }
                   }});

   list.push_back({2, "recursed series agree over n = 0..4 and with the reference", [](Tally& t) {
                      for (complex s : {complex(0.5), complex(2.5), complex(-1.3, 2)})
                      {
                         const complex want = eta_oracle(s);
                         std::vector<complex> vals;
                         for (int n = 0; n <= 4; ++n)
                         {
                            vals.push_back(eta_via_recursed_series(s, n).value);
                            t.check(at(s) + " n=" + std::to_string(n), std::abs(vals.back() - want), 1e-8);
                         }
                         for (const auto& a : vals)
                            for (const auto& b : vals)
                               t.check(at(s) + " spread", std::abs(a - b), 1e-8);
                      }
                      for (complex s : {complex(0.5), complex(-0.5), complex(2.5)})
                         for (int n = 0; n <= 3; ++n)
                            t.check(at(s) + " reflected n=" + std::to_string(n),
                                    std::abs(zeta_via_reflected_recursion(s, n).value - zeta_oracle(s)), 1e-8);
                   }});

   list.push_back({3, "exact rational identities", [](Tally& t) {
                      for (int N = 0; N <= 10; ++N)
                         t.exact("B recursion N=" + std::to_string(N),
                                 bernoulli_even_recursive(N) == oracle::bernoulli(2 * N + 2));
                      for (int m = 1; m <= 20; ++m)
                         t.exact("Euler binomial m=" + std::to_string(m), euler_binomial_sum(m) == 0);
                      for (int m = 1; m <= 15; ++m)
                         t.exact("harmonic Euler m=" + std::to_string(m), harmonic_euler_sum(m) == bernoulli_harmonic_sum(m));
                      const auto e = oracle::euler_numbers(16);
                      for (int m = 1; m <= 8; ++m)
                         t.exact("Euler recursion m=" + std::to_string(m),
                                 euler_number_via_harmonic_recursion(m) == e[2 * m]);
                      for (int n = 1; n <= 10; ++n)
                         t.exact("B from Euler n=" + std::to_string(n), bernoulli_from_euler(n) == oracle::bernoulli(2 * n));
                      for (int m = 1; m <= 10; ++m)
                      {
                         const auto g = euler_digamma_sum(m);
                         t.exact("psi-weighted m=" + std::to_string(m), g.constant == bernoulli_digamma_sum(m));
                         t.exact("gamma coefficient m=" + std::to_string(m), g.gamma_coefficient == 0);
                      }
                   }});

   list.push_back({4, "even and odd zeta limits, trivial zeros", [](Tally& t) {
                      for (int m = 1; m <= 5; ++m)
                      {
                         const double classical =
                            to_double(oracle::bernoulli(2 * m) * oracle::pow2(2 * m - 1) /
                                      oracle::factorial(2 * m)) *
                            (m % 2 ? 1 : -1) * std::pow(pi, 2 * m);
                         t.check("zeta(" + std::to_string(2 * m) + ") rel",
                                 std::fabs(zeta_even_closed_form(m) / classical - 1), 1e-12);
                      }
                      for (int m = 1; m <= 2; ++m)
                      {
                         const complex want = zeta_oracle(2.0 * m + 1);
                         t.check("e1 m=" + std::to_string(m), std::abs(zeta_odd_via_e1_series(m).value - want), 1e-8);
                         for (int p = 1; p <= 3; ++p)
                            t.check("order p=" + std::to_string(p) + " m=" + std::to_string(m),
                                    std::abs(zeta_odd_via_order_p_series(m, p).value - want), 1e-8);
                      }
                      for (int m = 1; m <= 4; ++m)
                      {
                         const complex s = -2.0 * m;
                         const complex z = eta_via_expint_series(s).value / (1.0 - std::pow(2.0, 1.0 - s));
                         t.check("zeta(" + std::to_string(-2 * m) + ")", std::abs(z), 1e-9);
                      }
                   }});

   list.push_back({5, "negative-order E sums", [](Tally& t) {
                      for (int m = 1; m <= 4; ++m)
                      {
                         const std::string tag = " m=" + std::to_string(m);
                         t.check("vanishing" + tag, std::abs(negative_order_kernel_sum(2 * m, 0, 1).value), 1e-9);
                         t.check("i pi/(2m)" + tag,
                                 std::abs(negative_order_kernel_sum(2 * m - 1, 1, -1).value - complex(0, pi / (2 * m))),
                                 1e-9);
                         const double rhs = -pi * pi * std::tgamma(2.0 * m - 1) / std::tgamma(2.0 * m + 1);
                         t.check("square" + tag, std::abs(negative_order_kernel_sum(2 * m - 2, 2, 1).value - rhs), 1e-9);
                      }
                   }});

   list.push_back({6, "identity registry and its closed values", [](Tally& t) {
                      for (const auto& r : run_identity_registry("*", std::nullopt, 4))
                         t.check(r.id, r.error.empty() ? r.abs_diff : INFINITY, r.tolerance);
                      const double coth = 1 / std::tanh(pi / 4);
                      const std::map<std::string, double> closed{
                         {"registry/circle/cos-weight", 0.5 + pi * pi / 48},
                         {"registry/circle/sin-weight", -0.5 + pi * pi / 48},
                         {"registry/segment/chord", 0.5},
                         {"registry/segment/log-coth", 0.5 + std::log(coth) / pi},
                         {"registry/segment/quadratic-minus", -0.25},
                         {"registry/segment/quadratic-plus", -pi * pi / 48},
                         {"registry/circle/unit-value", 1.0},
                         {"registry/circle/even-negative/n=1", 0.0},
                         {"registry/circle/even-negative/n=2", 0.0},
                         {"registry/circle/even-negative/n=3", 0.0},
                         {"registry/double-circle/lower", 1.0},
                         {"registry/double-circle/upper", 1.0},
                         {"registry/quarter/sine-pair", 1.0},
                         {"registry/quarter/cosine-pair", 1.0},
                         {"registry/segment/unit-half", 0.5}};
                      for (const auto& [id, value] : closed)
                      {
                         const auto& c = registry_case(id);
                         t.check(id + " closed", std::abs(c.lhs() - value), c.tolerance);
                      }
                   }});

   list.push_back({7, "paths A-D give the same eta", [](Tally& t) {
                      for (double s : {0.0, 0.5, 1.7, 2.0, -2.0})
                      {
                         const complex want = eta_oracle(s);
                         for (auto k : {PathKind::circle_A, PathKind::double_circle_B, PathKind::two_lines_C,
                                        PathKind::four_lines_D})
                            t.check(at(s) + " " + to_string(k), std::abs(path_integral_eta(s, make_path(k)) - want), 1e-8);
                      }
                   }});

   list.push_back({8, "incomplete zeta split and the critical-line system", [](Tally& t) {
                      t.check("zeta-(0)", std::abs(zeta_minus(0.0) + 0.5), 1e-10);
                      t.check("zeta+(0)", std::abs(zeta_plus(0.0)), 1e-10);
                      for (complex s : {complex(-1.5), complex(0.3, 2), complex(2.5, 1)})
                         t.check(at(s), std::abs(zeta_minus(s) + zeta_plus(s) - zeta_oracle(s)), 1e-9);
                      for (double x : {0.0, 2.0, 5.0, 14.1347})
                         t.check(fmt("t=%g", x), std::abs(critical_line_system(x).zeta() - zeta_oracle(complex(0.5, x))),
                                 1e-8);
                   }});

   list.push_back({9, "zeta'(0) and derivative depths", [](Tally& t) {
                      t.check("zeta'(0)", std::abs(zeta_derivative_series(0.0, 0).value + std::log(2 * pi) / 2), 1e-7);
                      t.check("s=0.5 n=0 vs 1",
                              std::abs(zeta_derivative_series(0.5, 0).value - zeta_derivative_series(0.5, 1).value), 1e-7);
                   }});

   list.push_back({10, "Gaussian E-sums, moment constant, xi symmetry", [](Tally& t) {
                      t.check("lambda 1 vs 2 at s=3",
                              std::abs(zeta_via_gaussian_expint(3.0, 1.0).value - zeta_via_gaussian_expint(3.0, 2.0).value),
                              1e-11);
                      t.check("lambda 1 vs e^{i pi/4} at s=2.3",
                              std::abs(zeta_via_gaussian_expint(2.3, 1.0).value -
                                       zeta_via_gaussian_expint(2.3, std::polar(1.0, pi / 4)).value),
                              1e-11);
                      const double c = static_cast<double>(std::pow(oracle::pi, 0.25L) /
                                                           (2 * oracle::gamma(0.75L).real()));
                      t.check("moment constant", std::fabs(gaussian_moment_sum() - c), 1e-13);
                      for (complex s : {complex(0.3), complex(0.3, 2)})
                         t.check("xi " + at(s),
                                 std::abs(xi_via_expint_series(s).value - xi_via_expint_series(1.0 - s).value), 1e-10);
                   }});

   list.push_back({11, "E_2p pair theorem, 1F2 corollary, digamma sine series", [](Tally& t) {
                      for (int p = 1; p <= 4; ++p)
                         for (int k = 0; k <= 5; ++k)
                            t.check("p=" + std::to_string(p) + " k=" + std::to_string(k),
                                    even_order_pair_si_identity(k, p).diff(), 1e-9);
                      t.check("1F2 p=2 k=0", hypergeometric_1f2_identity(0, 2).diff(), 1e-9);
                      t.check("1F2 p=3 k=1", hypergeometric_1f2_identity(1, 3).diff(), 1e-9);
                      const auto d = digamma_sine_series_identity(3);
                      t.check("digamma sine k=3", std::fabs(d.lhs - static_cast<double>(oracle::sine_integral(oracle::pi * 3.5L))),
                              1e-9);
                   }});

   list.push_back({12, "odd zeta from the double integral and Mellin-Barnes", [](Tally& t) {
                      for (int m = 1; m <= 2; ++m)
                      {
                         const double want = zeta_oracle(2.0 * m + 1).real();
                         t.check("double integral m=" + std::to_string(m), std::fabs(zeta_odd_via_double_integral(m) - want),
                                 1e-7);
                         const auto mb = mellin_barnes_zeta_odd(m);
                         t.check("Mellin-Barnes m=" + std::to_string(m), std::abs(mb.zeta() - want), 1e-7);
                         t.check("Mellin-Barnes imaginary m=" + std::to_string(m), std::fabs(mb.scaled.imag()), 1e-9);
                      }
                   }});

   list.push_back({13, "asymptotic truncation orders and optimal truncation", [](Tally& t) {
                      for (int K = 0; K <= 2; ++K)
                      {
                         const double slope = asymptotic_error_slope(K, {10.0, 20.0, 40.0});
                         const double bound = -(2 * K + 2.5);
                         t.check("slope K=" + std::to_string(K), std::max(0.0, slope - bound), 0.0);
                      }
                      const auto a = eta_hurwitz_half_asymptotic(4.0, 12);
                      const bool dip = a.optimal_index > 0 && a.optimal_index < 12 &&
                                       a.error(0) > a.error(a.optimal_index) && a.error(12) > a.error(a.optimal_index);
                      t.exact("t=4 error minimum at K=" + std::to_string(a.optimal_index), dip);
                   }});

   list.push_back({14, "zeta(1/2) from the Fresnel series and the circle integral", [](Tally& t) {
                      SeriesConfig cfg;
                      cfg.tolerance = 1e-8;
                      const complex half = zeta_oracle(0.5);
                      t.check("Fresnel", std::abs(zeta_half_fresnel(cfg).value - half), 1e-6);
                      const complex lower = half - zeta_plus(0.5);
                      const complex rhs = std::sqrt(2.0) * (1 - std::sqrt(2.0)) * lower;
                      t.check("circle", std::abs(registry_case("registry/circle/half-order").lhs() - rhs), 1e-8);
                   }});

   return list;
}

} // namespace

int main()
{
   int failed = 0;
   for (const auto& c : criteria())
   {
      Tally t;
      std::string detail;
      try
      {
         c.body(t);
         char buf[160];
         std::snprintf(buf, sizeof buf, "worst %s: %.3g", t.worst_label.c_str(), t.worst);
         detail = buf;
      }
      catch (const std::exception& e)
      {
         t.ok = false;
         detail = std::string("error: ") + e.what();
      }
      failed += !t.ok;
      std::printf("%s criterion %2d: %s (%s)\n", t.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), detail.c_str());
   }
   std::printf("%d of 14 criteria passed\n", 14 - failed);
   return failed == 0 ? 0 : 1;
}
