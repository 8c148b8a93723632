#include "zetakit/registry.hpp"

#include "zetakit/numbertheory.hpp"
#include "zetakit/parallel.hpp"
#include "zetakit/paths.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/special.hpp"
#include "zetakit/zeta.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace zetakit {

namespace {

constexpr double quad_tol = 1e-13;
constexpr double inf = std::numeric_limits<double>::infinity();
const double root2 = std::sqrt(2.0);

QuadratureOptions quad_options()
{
   QuadratureOptions opt;
   opt.abs_tol = quad_tol;
   return opt;
}

// Pieces of the right-half unit circle integrand.
double X(double t) { return std::exp(-pi / 2 * std::sin(t)); }
double C(double t) { return pi / 2 * std::cos(t); }
double D(double t) { return std::cosh(pi * std::sin(t)) - std::cos(pi * std::cos(t)); }

template <class F>
complex circle(F f)
{
   return integrate_pieces([&](double t) { return f(t); }, std::vector<double>{-pi / 2, 0.0, pi / 2}, quad_options())
      .value;
}

template <class F>
complex over(F f, double a, double b)
{
   return integrate([&](double t) { return f(t); }, a, b, quad_options()).value;
}

double SE(double s) { return sum_Es_real(s, 1e-13).value.real(); }

double B(int n) { return to_double(bernoulli_exact(n)); }

double fact(int n) { return std::tgamma(n + 1.0); }

double zeta(double s) { return zeta_ref(s).real(); }

// Segment integrands in v on [0, 1].
double ch(double v) { return std::cosh(pi * v / 2); }
double sh(double v) { return std::sinh(pi * v / 2); }
double co(double v) { return std::cos(pi * v / 2); }
double si(double v) { return std::sin(pi * v / 2); }
double dd(double v) { return std::cosh(pi * v) + std::cos(pi * v); }

std::string with_n(const std::string& base, int n, const char* name = "n")
{
   return base + "/" + name + "=" + std::to_string(n);
}

double euler_harmonic_rhs(int m)
{
   Rational sum = 0;
   for (int j = 0; j < m; ++j)
   {
      Rational f1 = 1, f2 = 1;
      for (int i = 2; i <= 2 * j; ++i)
         f1 *= i;
      for (int i = 2; i <= 2 * m - 2 * j; ++i)
         f2 *= i;
      sum -= euler_number(2 * j) * harmonic(2 * m - 2 * j) / (f1 * f2);
   }
   return to_double(sum);
}

std::vector<IdentityCase> build()
{
   std::vector<IdentityCase> r;
   auto add = [&](std::string id, std::string anchor, double tol, std::function<complex()> lhs,
                  std::function<complex()> rhs) {
      r.push_back({std::move(id), std::move(anchor), tol, std::move(lhs), std::move(rhs)});
   };
   const double tol = registry_default_tol;
   const double stol = registry_series_tol;

   add("registry/circle/sine-kernel", "int X sin(c) / D = ln 2 + 2 sum E_1(kappa)", stol,
       [] { return circle([](double t) { return std::sin(C(t)) * X(t) / D(t); }); },
       [] { return complex(ln2 + 2 * SE(1.0)); });
   add("registry/circle/odd-positive-limit", "n -> 0 limit of the odd-positive family: ln 2 + 2 sum E_1(kappa)", stol,
       [] { return circle([](double t) { return X(t) * std::sin(C(t)) / D(t); }); },
       [] { return complex(ln2 + 2 * SE(1.0)); });
   add("registry/quarter/sine-cosh-kernel", "int_0^{pi/2} sin(c) cosh((pi/2) sin t) / D = ln(2)/2 + sum E_1(kappa)", tol,
       [] { return over([](double t) { return std::sin(C(t)) * std::cosh(pi / 2 * std::sin(t)) / D(t); }, 0.0, pi / 2); },
       [] { return complex(ln2 / 2 + SE(1.0)); });
   for (int n = 0; n <= 4; ++n)
      add(with_n("registry/circle/even-positive", n), "int X sin(c + (2n-1) t) / D = (-1)^n B_2n pi^2n (2^{1-2n} - 1) / (2n)!",
          tol, [n] { return circle([n](double t) { return X(t) * std::sin(C(t) + (2 * n - 1) * t) / D(t); }); },
          [n] { return complex(sign_power(n) * B(2 * n) * std::pow(pi, 2 * n) * (std::pow(2.0, 1 - 2 * n) - 1) / fact(2 * n)); });
   add("registry/circle/unit-value", "int X sin(c - t) / D = 1", tol,
       [] { return circle([](double t) { return X(t) * std::sin(C(t) - t) / D(t); }); }, [] { return complex(1.0); });
   for (int n = 1; n <= 3; ++n)
      add(with_n("registry/circle/even-negative", n), "int X sin(c - (2n+1) t) / D = 0", tol,
          [n] { return circle([n](double t) { return X(t) * std::sin(C(t) - (2 * n + 1) * t) / D(t); }); },
          [] { return complex(0.0); });
   for (int n = 1; n <= 2; ++n)
   {
      add(with_n("registry/circle/odd-positive", n),
          "int X sin(c + 2n t) / D = 4^-n (1 - 4^-n) zeta(2n+1) + 2 (-1)^n sum E_{2n+1}(kappa)", stol,
          [n] { return circle([n](double t) { return X(t) * std::sin(C(t) + 2 * n * t) / D(t); }); },
          [n] {
             const double q = std::pow(4.0, -n);
             return complex(q * (1 - q) * zeta(2 * n + 1) + 2 * sign_power(n) * SE(2 * n + 1));
          });
      add(with_n("registry/circle/odd-negative", n),
          "int X sin(c - 2n t) / D = 2^{2n-1} B_2n (4^n - 1) / n + 2 (-1)^n sum E_{1-2n}(kappa)", tol,
          [n] { return circle([n](double t) { return X(t) * std::sin(C(t) - 2 * n * t) / D(t); }); },
          [n] {
             return complex(std::pow(2.0, 2 * n - 1) * B(2 * n) * (std::pow(4.0, n) - 1) / n + 2 * sign_power(n) * SE(1 - 2 * n));
          });
      add(with_n("registry/circle/odd-negative-polylog", n),
          "int X sin(c - 2n t) / D with sum E_{1-2n}(kappa) in polylogarithms of e^{-pi/2}, e^{-pi}", tol,
          [n] { return circle([n](double t) { return X(t) * std::sin(C(t) - 2 * n * t) / D(t); }); },
          [n] {
             double poly = 0.0;
             for (int j = 1; j < 2 * n; ++j)
                poly += (std::pow(2.0, j + 1) * polylog(j + 1, std::exp(-pi / 2)) - polylog(j + 1, std::exp(-pi))) /
                        (std::tgamma(2.0 * n - j) * std::pow(pi, j));
             return complex(std::pow(4.0, n) * (1 - std::pow(4.0, n)) * zeta(1 - 2 * n) +
                            2 * sign_power(n) * std::tgamma(2.0 * n) / pi * poly +
                            2 * sign_power(n) / pi * std::log(std::sinh(pi / 2) / (std::cosh(pi / 2) - 1)));
          });
      const auto even_half = [n] {
         return complex(sign_power(n) * B(2 * n) * std::pow(pi, 2 * n) * (std::pow(2.0, 1 - 2 * n) - 1) / (2 * fact(2 * n)));
      };
      add(with_n("registry/circle/even-product-cos", n), "int X cos(2n t) sin(c - t) / D = half the even-positive value", tol,
          [n] { return circle([n](double t) { return X(t) * std::cos(2 * n * t) * std::sin(C(t) - t) / D(t); }); },
          even_half);
      add(with_n("registry/circle/even-product-sin", n), "int X sin(2n t) cos(c - t) / D = half the even-positive value", tol,
          [n] { return circle([n](double t) { return X(t) * std::sin(2 * n * t) * std::cos(C(t) - t) / D(t); }); },
          even_half);
   }
   {
      const int n = 1;
      add(with_n("registry/circle/odd-product-cos", n),
          "int X cos(2n t) sin(c) / D = 2^{-2n-1} (1 - 4^-n) zeta(2n+1) + (-1)^n (S_{2n+1} + S_{1-2n}) + B_2n 2^{2n-2} (4^n - 1) / n",
          tol, [] { return circle([](double t) { return X(t) * std::cos(2 * n * t) * std::sin(C(t)) / D(t); }); },
          [] {
             return complex(zeta(2 * n + 1) * std::pow(2.0, -2 * n - 1) * (1 - std::pow(4.0, -n)) +
                            sign_power(n) * (SE(2 * n + 1) + SE(1 - 2 * n)) +
                            B(2 * n) * std::pow(2.0, 2 * n - 2) * (std::pow(4.0, n) - 1) / n);
          });
      add(with_n("registry/circle/odd-product-sin", n),
          "int X sin(2n t) cos(c) / D = 2^{-2n-1} (1 - 4^-n) zeta(2n+1) + (-1)^n (S_{2n+1} - S_{1-2n}) - B_2n 2^{2n-2} (4^n - 1) / n",
          tol, [] { return circle([](double t) { return X(t) * std::sin(2 * n * t) * std::cos(C(t)) / D(t); }); },
          [] {
             return complex(zeta(2 * n + 1) * std::pow(2.0, -2 * n - 1) * (1 - std::pow(4.0, -n)) +
                            sign_power(n) * (SE(2 * n + 1) - SE(1 - 2 * n)) -
                            B(2 * n) * std::pow(2.0, 2 * n - 2) * (std::pow(4.0, n) - 1) / n);
          });
   }
   add("registry/circle/half-angle-mixed", "int X sin(t/2) cos(c - t/2) / D = ln(2)/2 - 1/2 + sum E_1(kappa)", stol,
       [] { return circle([](double t) { return X(t) * std::sin(t / 2) * std::cos(C(t) - t / 2) / D(t); }); },
       [] { return complex(ln2 / 2 - 0.5 + SE(1.0)); });
   add("registry/circle/cos-weight", "int cos(t) sin(c) X / D = 1/2 + pi^2/48", tol,
       [] { return circle([](double t) { return std::cos(t) * std::sin(C(t)) * X(t) / D(t); }); },
       [] { return complex(0.5 + pi * pi / 48); });
   add("registry/circle/sin-weight", "int sin(t) cos(c) X / D = -1/2 + pi^2/48", tol,
       [] { return circle([](double t) { return std::sin(t) * std::cos(C(t)) * X(t) / D(t); }); },
       [] { return complex(-0.5 + pi * pi / 48); });
   add("registry/circle/half-order", "int X sin(c - t/2) / D = sqrt2 (1 - sqrt2) zeta-(1/2)", stol,
       [] { return circle([](double t) { return X(t) * std::sin(C(t) - t / 2) / D(t); }); },
       [] { return root2 * (1 - root2) * zeta_minus(0.5, 1e-13); });
   add("registry/circle/half-order-derivative",
       "int X t cos(c - t/2) / D in terms of sum E^1_{1/2}(kappa), zeta(1/2) and zeta+(1/2)", tol,
       [] { return circle([](double t) { return X(t) * std::cos(C(t) - t / 2) * t / D(t); }); },
       [] {
          const double h = root2 / 2;
          return -root2 * sum_Es1_real(0.5, 1e-13).value +
                 ((h + 1) * ln2 + (euler_gamma + pi / 2 + std::log(pi)) * (h - 1)) * zeta(0.5) -
                 pi * (h - 1) * zeta_plus(0.5, 1e-13);
       });
   for (double s : {0.7})
   {
      add("registry/circle/symmetric-cos/s=0.7", "int X sin(c) cos(s t) / D = 2^{-s-1} eta-(1+s) + 2^{s-1} eta-(1-s)", stol,
          [s] { return circle([s](double t) { return X(t) * std::sin(C(t)) * std::cos(s * t) / D(t); }); },
          [s] { return std::pow(2.0, -s - 1) * eta_minus(1 + s, 1e-13) + std::pow(2.0, s - 1) * eta_minus(1 - s, 1e-13); });
      add("registry/circle/symmetric-sin/s=0.7", "int X cos(c) sin(s t) / D = 2^{-s-1} eta-(1+s) - 2^{s-1} eta-(1-s)", stol,
          [s] { return circle([s](double t) { return X(t) * std::cos(C(t)) * std::sin(s * t) / D(t); }); },
          [s] { return std::pow(2.0, -s - 1) * eta_minus(1 + s, 1e-13) - std::pow(2.0, s - 1) * eta_minus(1 - s, 1e-13); });
   }
   add("registry/double-circle/lower", "lower arc of the two-circle path at s = 0 gives 1", tol,
       [] {
          return over(
             [](double t) {
                const double den = std::cosh(pi * (std::cos(t) - 1)) + std::cos(pi * std::sin(t));
                return (std::sin(-pi / 2 * std::sin(t) + t) * std::exp(pi / 2 * (std::cos(t) - 1)) +
                        std::sin(pi / 2 * std::sin(t) + t) * std::exp(-pi / 2 * (std::cos(t) - 1))) /
                       den;
             },
             0.0, pi / 2);
       },
       [] { return complex(1.0); });
   add("registry/double-circle/upper", "upper arc of the two-circle path at s = 0 gives 1", tol,
       [] {
          return over(
             [](double t) {
                const double den = std::cosh(pi * (std::sin(t) - 1)) + std::cos(pi * std::cos(t));
                return (std::cos(pi / 2 * std::cos(t) + t) * std::exp(pi / 2 * (std::sin(t) - 1)) +
                        std::cos(-pi / 2 * std::cos(t) + t) * std::exp(-pi / 2 * (std::sin(t) - 1))) /
                       den;
             },
             0.0, pi / 2);
       },
       [] { return complex(1.0); });
   add("registry/quarter/sine-pair", "quarter-circle sine pair at s = 0 gives 1", tol,
       [] {
          return over(
             [](double t) {
                return (std::sin(C(t) - t) * std::exp(-pi / 2 * std::sin(t)) +
                        std::sin(C(t) + t) * std::exp(pi / 2 * std::sin(t))) /
                       D(t);
             },
             0.0, pi / 2);
       },
       [] { return complex(1.0); });
   add("registry/quarter/cosine-pair", "quarter-circle cosine pair at s = 0 gives 1", tol,
       [] {
          return over(
             [](double t) {
                const double den = std::cosh(pi * std::cos(t)) - std::cos(pi * std::sin(t));
                return (-std::cos(pi / 2 * std::sin(t) + t) * std::exp(-pi / 2 * std::cos(t)) +
                        std::cos(-pi / 2 * std::sin(t) + t) * std::exp(pi / 2 * std::cos(t))) /
                       den;
             },
             0.0, pi / 2);
       },
       [] { return complex(1.0); });
   add("registry/segment/chord", "chord form of the circle at s = 0 gives 1/2", tol,
       [] {
          return over(
             // v = 1 - w^2 absorbs the inverse square root at v = 1
             [](double w) {
                const double v = 1 - w * w;
                const double q = std::sqrt(2 - w * w);
                const double r = w * q;
                const double den = std::cosh(pi * r) - std::cos(pi * v);
                return 2 * (w * std::sinh(pi / 2 * r) * co(v) + v * std::cosh(pi / 2 * r) * si(v) / q) / den;
             },
             0.0, 1.0);
       },
       [] { return complex(0.5); });
   add("registry/segment/unit-half", "int_0^1 (ch co + sh si) / (cosh(pi v) + cos(pi v)) = 1/2", tol,
       [] { return over([](double v) { return (ch(v) * co(v) + sh(v) * si(v)) / dd(v); }, 0.0, 1.0); },
       [] { return complex(0.5); });
   add("registry/segment/unit-split", "int_0^1 ch co / (ch^2 - si^2) = 1 - int_0^1 sh si / (ch^2 - si^2)", tol,
       [] {
          return over([](double v) { return ch(v) * co(v) / (ch(v) * ch(v) - si(v) * si(v)); }, 0.0, 1.0);
       },
       [] {
          return 1.0 - over([](double v) { return sh(v) * si(v) / (ch(v) * ch(v) - si(v) * si(v)); }, 0.0, 1.0);
       });
   add("registry/segment/log-coth", "int_0^1 ch co / (ch^2 - si^2) = 1/2 + ln(coth(pi/4)) / pi", tol,
       [] {
          return over([](double v) { return ch(v) * co(v) / (ch(v) * ch(v) - si(v) * si(v)); }, 0.0, 1.0);
       },
       [] { return complex(0.5 + std::log(1.0 / std::tanh(pi / 4)) / pi); });
   add("registry/segment/quadratic-minus", "segment integral at s = -2 gives -1/4", tol,
       [] {
          return over(
             [](double v) {
                return ((v * v - 2 * v) * co(v) * ch(v) - sh(v) * si(v) * v * v) / dd(v);
             },
             0.0, 1.0);
       },
       [] { return complex(-0.25); });
   add("registry/segment/quadratic-plus", "segment integral at s = 2 gives -pi^2/48", tol,
       [] {
          return over(
             [](double v) {
                const double q = 2 * v * v - 2 * v + 1;
                return (co(v) * ch(v) * (2 * v * v - 1) - (2 * v * v - 4 * v + 1) * si(v) * sh(v)) / (dd(v) * q * q);
             },
             0.0, 1.0);
       },
       [] { return complex(-pi * pi / 48); });
   add("registry/segment/order-one", "segment integral at s = 1 gives 1/4 - ln(2)/4 - sum E_1(kappa) / 2", stol,
       [] {
          return over(
             [](double v) {
                return (v * (v - 1) * co(v) * ch(v) + sh(v) * si(v) * v * v) / (dd(v) * (2 * v * v - 2 * v + 1));
             },
             0.0, 1.0);
       },
       [] { return complex(-SE(1.0) / 2 - ln2 / 4 + 0.25); });
   add("registry/half-line/leading", "int_0^inf (1/(v sinh(pi v/2)) - 2/(pi v^2)) = -ln 2", tol,
       [] {
          auto f = [](double v) { return csch_minus_inverse(pi * v / 2) / v; };
          return complex(integrate(f, 0.0, 1.0, quad_options()).value + integrate(f, 1.0, inf, quad_options()).value);
       },
       [] { return complex(-ln2); });
   add("registry/half-line/log-weighted", "int_0^inf ln(v)/v (1/sinh(pi v/2) - 2/(pi v)) = (gamma - 3 ln(2)/2) ln 2", stol,
       [] {
          auto f = [](double v) { return std::log(v) / v * csch_minus_inverse(pi * v / 2); };
          return complex(integrate(f, 0.0, 1.0, quad_options()).value + integrate(f, 1.0, inf, quad_options()).value);
       },
       [] { return complex((euler_gamma - 1.5 * ln2) * ln2); });
   for (int m = 1; m <= 3; ++m)
      add(with_n("registry/euler-polynomial", m, "m"),
          "(4^m/(2m)!) int_0^1 E(2m, u/2)/u du = -sum_{j<m} E(2j) H_{2m-2j} / ((2j)! (2m-2j)!)", tol,
          [m] { return complex(euler_polynomial_integral(m, 1e-13)); }, [m] { return complex(euler_harmonic_rhs(m)); });

   std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
   return r;
}

} // namespace

const std::vector<IdentityCase>& identity_registry()
{
   static const std::vector<IdentityCase> cases = build();
   return cases;
}

bool id_matches(const std::string& pattern, const std::string& id)
{
   return fnmatch(pattern.c_str(), id.c_str(), 0) == 0;
}

IdentityRow evaluate_case(const IdentityCase& c, std::optional<double> tol_override)
{
   IdentityRow row;
   row.id = c.id;
   row.anchor = c.anchor;
   row.tolerance = tol_override.value_or(c.tolerance);
   const auto start = std::chrono::steady_clock::now();
   try
   {
      row.lhs = c.lhs();
      row.rhs = c.rhs();
      row.abs_diff = std::abs(row.lhs - row.rhs);
      row.pass = row.abs_diff <= row.tolerance;
   }
   catch (const std::exception& e)
   {
      row.error = e.what();
      row.abs_diff = std::numeric_limits<double>::infinity();
      row.pass = false;
   }
   row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
   return row;
}

std::vector<IdentityRow> run_identity_registry(const std::string& pattern, std::optional<double> tol_override, int jobs)
{
   std::vector<const IdentityCase*> chosen;
   for (const auto& c : identity_registry())
      if (id_matches(pattern, c.id))
         chosen.push_back(&c);
   std::vector<IdentityRow> rows(chosen.size());
   parallel_for(chosen.size(), jobs, [&](std::size_t i) { rows[i] = evaluate_case(*chosen[i], tol_override); });
   return rows;
}

} // namespace zetakit
