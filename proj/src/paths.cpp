#include "zetakit/paths.hpp"

#include "zetakit/expint.hpp"
#include "zetakit/numbertheory.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/special.hpp"

#include <cmath>
#include <limits>

namespace zetakit {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double guard_distance = 0.05;

QuadratureOptions options(double tol)
{
   QuadratureOptions opt;
   opt.abs_tol = tol;
   opt.rel_tol = 0.0;
   return opt;
}

complex upper_integral(complex s, double tol, bool log_weight)
{
   auto f = [&](double v) -> complex {
      const complex w = std::pow(v, -s) / std::sinh(pi * v / 2);
      return log_weight ? std::log(v) * w : w;
   };
   return integrate(f, 1.0, inf, options(tol)).value;
}

// sin(pi s/2) / s, continuous at s = 0
complex sin_over_s(complex s)
{
   if (std::abs(s) < 1e-8)
      return pi / 2 * (1.0 - pi * pi * s * s / 24.0);
   return sin_pi(s / 2.0) / s;
}

complex circle_weight(complex s, double theta)
{
   const double x = std::exp(-pi / 2 * std::sin(theta));
   const double c = pi / 2 * std::cos(theta);
   const double d = std::cosh(pi * std::sin(theta)) - std::cos(pi * std::cos(theta));
   return x * std::sin(c + theta * (s - 1.0)) / d;
}

} // namespace

SeriesResult sum_Es_real(complex s, double tol)
{
   const auto q = integrate([&](double v) -> complex { return std::pow(v, -s) / std::sinh(pi * v / 2); }, 1.0, inf,
                            options(2 * tol));
   return {0.5 * q.value, 0.5 * q.abs_error_estimate, q.evaluations, true};
}

SeriesResult sum_Es_real_direct(complex s, double tol)
{
   SeriesResult r;
   for (std::size_t k = 0; k < 1000; ++k)
   {
      const complex term = expint_E(s, pi * (static_cast<double>(k) + 0.5), std::max(1e-15, tol / 10)).value;
      r.value += term;
      r.terms_used = k + 1;
      if (std::abs(term) < tol / 10)
      {
         r.abs_error_estimate = std::abs(term);
         r.converged = true;
         return r;
      }
   }
   throw convergence_error("sum_Es_real_direct: terms failed to decay");
}

SeriesResult sum_Es1_real(complex s, double tol)
{
   const complex v = 0.5 * upper_integral(s, 2 * tol, true);
   return {v, tol, 0, true};
}

complex eta_plus(complex s, double tol)
{
   return -std::pow(2.0, s) * sin_pi(s / 2.0) * sum_Es_real(s, tol / std::max(1.0, std::abs(std::pow(2.0, s)))).value;
}

complex eta_minus(complex s, double tol)
{
   const complex pre = std::pow(2.0, s - 1.0);
   const auto q = integrate_pieces([&](double t) { return circle_weight(s, t); }, std::vector<double>{-pi / 2, 0.0, pi / 2},
                                   options(tol / std::max(1.0, std::abs(pre))));
   return pre * q.value;
}

complex zeta_plus(complex s, double tol)
{
   const complex gap = std::pow(2.0, 1.0 - s) - 1.0;
   if (std::abs(gap) < 1e-14)
      throw pole_error("zeta_plus: 2^{1-s} - 1 vanishes");
   const complex pre = std::pow(2.0, s - 1.0) * sin_pi(s / 2.0) / gap;
   return pre * upper_integral(s, tol / std::max(1.0, std::abs(pre)), false);
}

complex zeta_minus(complex s, double tol)
{
   const complex gap = std::pow(2.0, 1.0 - s) - 1.0;
   if (std::abs(gap) < 1e-14)
      throw pole_error("zeta_minus: 2^{1-s} - 1 vanishes");
   if (s.real() >= 1.0)
      return -eta_minus(s, tol * std::abs(gap)) / gap;
   const complex two = std::pow(2.0, s - 1.0) / gap;
   auto f = [&](double v) -> complex {
      return std::pow(v, -s) * csch_minus_inverse(pi * v / 2);
   };
   const double scale = std::max(1.0, std::abs(two));
   const complex lower = integrate(f, 0.0, 1.0, options(tol / scale)).value;
   return two * (sin_pi(s / 2.0) * lower - 2.0 / pi * sin_over_s(s));
}

std::string to_string(PathKind kind)
{
   switch (kind)
   {
   case PathKind::circle_A:
      return "A";
   case PathKind::double_circle_B:
      return "B";
   case PathKind::two_lines_C:
      return "C";
   case PathKind::four_lines_D:
      return "D";
   case PathKind::custom:
      return "custom";
   }
   return "custom";
}

PathSpec make_path(PathKind kind)
{
   PathSpec p;
   p.kind = kind;
   switch (kind)
   {
   case PathKind::circle_A:
      p.a = -pi / 2;
      p.b = pi / 2;
      p.split = 0.0;
      p.at = [](double t) {
         const complex e = std::polar(1.0, t);
         return PathPoint{e, I * e};
      };
      break;
   case PathKind::double_circle_B:
      // arcs of radius 1 about 1 - i and 1 + i
      p.a = 0.0;
      p.b = pi;
      p.split = pi / 2;
      p.at = [](double t) {
         if (t <= pi / 2)
         {
            const complex e = std::polar(1.0, -t);
            return PathPoint{complex(1.0, -1.0) - e, I * e};
         }
         const complex e = std::polar(1.0, pi - t);
         return PathPoint{complex(1.0, 1.0) - e, I * e};
      };
      break;
   case PathKind::two_lines_C:
      p.a = 0.0;
      p.b = 2.0;
      p.split = 1.0;
      p.at = [](double t) {
         if (t <= 1.0)
            return PathPoint{-I + complex(1.0, 1.0) * t, complex(1.0, 1.0)};
         return PathPoint{1.0 + complex(-1.0, 1.0) * (t - 1.0), complex(-1.0, 1.0)};
      };
      break;
   case PathKind::four_lines_D:
      p.a = 0.0;
      p.b = 4.0;
      p.split = 2.0;
      p.breakpoints = {1.0, 3.0};
      p.at = [](double t) {
         if (t <= 1.0)
            return PathPoint{complex(t, -1.0), 1.0};
         if (t <= 2.0)
            return PathPoint{complex(1.0, t - 2.0), I};
         if (t <= 3.0)
            return PathPoint{complex(1.0, t - 2.0), I};
         return PathPoint{complex(4.0 - t, 1.0), -1.0};
      };
      break;
   case PathKind::custom:
      throw domain_error("make_path: custom paths are built by the caller");
   }
   return p;
}

void validate_path(const PathSpec& path)
{
   if (!path.at)
      throw path_error("path: no parameterization");
   if (!(path.a < path.split && path.split < path.b))
      throw path_error("path: need a < split < b");
   constexpr double end_tol = 1e-12;
   if (std::abs(path.at(path.a).v + I) > end_tol || std::abs(path.at(path.b).v - I) > end_tol)
      throw path_error("path: endpoints must be -i and i");
   if (std::abs(path.at(path.split).v - 1.0) > end_tol)
      throw path_error("path: v(split) must equal 1");
   constexpr int samples = 4000;
   for (int i = 0; i <= samples; ++i)
   {
      const double t = path.a + (path.b - path.a) * i / samples;
      const complex v = path.at(t).v;
      if (v.real() < -1e-12)
         throw path_error("path: leaves the half plane Re v >= 0");
      const double k = std::round(v.imag() / 2.0);
      if (std::abs(v - complex(0.0, 2.0 * k)) < guard_distance)
         throw path_error("path: passes within 0.05 of a zero of sinh(pi v/2)");
   }
}

complex path_integral_eta(complex s, const PathSpec& path, double tol)
{
   validate_path(path);
   auto kernel = [&](double t) -> complex {
      const PathPoint p = path.at(t);
      return std::pow(p.v, -s) / std::sinh(pi * p.v / 2.0) * p.dv;
   };
   auto leg = [&](double from, double to) {
      std::vector<double> points{from};
      for (double x : path.breakpoints)
         if (x > from && x < to)
            points.push_back(x);
      points.push_back(to);
      return integrate_pieces(kernel, points, options(tol / 4)).value;
   };
   const complex lower = leg(path.a, path.split);
   const complex upper = leg(path.split, path.b);
   const complex half_phase = std::exp(-I * pi * s / 2.0);
   const complex rhs = I * half_phase / 2.0 * lower + I / half_phase / 2.0 * upper +
                       2.0 * sin_pi(s / 2.0) * sum_Es_real(s, tol / 4).value;
   return -std::pow(2.0, s - 1.0) * rhs;
}

CriticalLineValues critical_line_system(double t, double tol)
{
   if (!(std::fabs(t) <= 60.0))
      throw domain_error("critical_line_system: need |t| <= 60");
   using R = long double;
   const R tt = t;
   const R half_pi = std::numbers::pi_v<R> / 2;
   auto x_of = [&](R th) { return std::exp(-half_pi * std::sin(th)); };
   auto d_of = [&](R th) { return std::cosh(2 * half_pi * std::sin(th)) - std::cos(2 * half_pi * std::cos(th)); };
   auto a_of = [&](R th) { return half_pi * std::cos(th) - th / 2; };

   QuadratureOptions opt;
   opt.abs_tol = tol * 1e-3;
   opt.rel_tol = 1e-18;
   const std::vector<R> circle{-half_pi, R(0), half_pi};
   const R J1 = integrate_pieces([&](R th) { return x_of(th) * std::cos(a_of(th)) * std::sinh(th * tt) / d_of(th); },
                                 circle, opt)
                   .value;
   const R J2 = integrate_pieces([&](R th) { return x_of(th) * std::sin(a_of(th)) * std::cosh(th * tt) / d_of(th); },
                                 circle, opt)
                   .value;
   const R infinity = std::numeric_limits<R>::infinity();
   const R J3 = integrate([&](R v) { return std::sin(tt * std::log(v)) / (std::sqrt(v) * std::sinh(half_pi * v)); },
                          R(1), infinity, opt)
                   .value;
   const R J4 = integrate([&](R v) { return std::cos(tt * std::log(v)) / (std::sqrt(v) * std::sinh(half_pi * v)); },
                          R(1), infinity, opt)
                   .value;

   const R root2 = std::sqrt(R(2));
   const R c = std::cos(tt * std::log(R(2)));
   const R sn = std::sin(tt * std::log(R(2)));
   const R H = 4 * c - root2;
   const R den = 6 - 4 * root2 * c;
   const R P1 = (2 * root2 * c - 1) * sn / (2 * root2 * c - 3);
   const R P2 = (2 * root2 * c * c - root2 - c) / (2 * root2 * c - 3);
   const R ch = std::cosh(half_pi * tt);
   const R sh = std::sinh(half_pi * tt);
   const R Q1 = -P1 * ch / 2 - P2 * sh / 2;
   const R Q2 = -P2 * ch / 2 + P1 * sh / 2;

   CriticalLineValues r;
   r.t = t;
   r.J1 = static_cast<double>(J1);
   r.J2 = static_cast<double>(J2);
   r.J3 = static_cast<double>(J3);
   r.J4 = static_cast<double>(J4);
   const R plus_re = J3 * Q1 + J4 * Q2;
   const R plus_im = -J3 * Q2 + J4 * Q1;
   const R minus_re = (-(H * c - 2) * J2 + H * J1 * sn) / den;
   const R minus_im = (-(H * c - 2) * J1 - H * J2 * sn) / den;
   r.zeta_plus_re = static_cast<double>(plus_re);
   r.zeta_plus_im = static_cast<double>(plus_im);
   r.zeta_minus_re = static_cast<double>(minus_re);
   r.zeta_minus_im = static_cast<double>(minus_im);
   return r;
}

std::pair<double, double> critical_line_j_from_zeta_minus(double t, complex zeta_minus)
{
   const double c = std::cos(t * ln2);
   const double sn = std::sin(t * ln2);
   const double H = 4 * c - std::sqrt(2.0);
   const double j1 = H * sn * zeta_minus.real() + (2 - H * c) * zeta_minus.imag();
   const double j2 = (2 - H * c) * zeta_minus.real() - H * sn * zeta_minus.imag();
   return {j1, j2};
}

double euler_polynomial_integral(int m, double tol)
{
   if (m < 1)
      throw domain_error("euler_polynomial_integral: m must be at least 1");
   // coefficients of E(2m, z) in z; the constant term vanishes
   std::vector<double> coeff;
   const Rational zero = euler_polynomial(2 * m, Rational(0));
   if (zero != 0)
      throw domain_error("euler_polynomial_integral: E(2m, 0) is non-zero, integrand singular");
   for (int k = 1; k <= 2 * m; ++k)
   {
      using boost::multiprecision::cpp_int;
      cpp_int fn = 1, fk = 1, fr = 1;
      for (int i = 2; i <= 2 * m; ++i)
         fn *= i;
      for (int i = 2; i <= k; ++i)
         fk *= i;
      for (int i = 2; i <= 2 * m + 1 - k; ++i)
         fr *= i;
      const cpp_int two = (cpp_int(1) << (2 * m + 2 - k));
      const Rational c = Rational(fn) * bernoulli_exact(2 * m + 1 - k) * Rational(2 - two) / Rational(fk * fr);
      coeff.push_back(to_double(c));
   }
   // E(2m, u/2) / u = sum_{k>=1} c_k 2^{-k} u^{k-1}
   auto integrand = [&](double u) {
      double acc = 0.0;
      for (int k = 2 * m; k >= 1; --k)
         acc = acc * u + coeff[k - 1] * std::pow(0.5, k);
      return acc;
   };
   double fact = 1.0;
   for (int i = 2; i <= 2 * m; ++i)
      fact *= i;
   const double scale = std::pow(4.0, m) / fact;
   return scale * integrate(integrand, 0.0, 1.0, options(tol / scale)).value;
}

} // namespace zetakit
