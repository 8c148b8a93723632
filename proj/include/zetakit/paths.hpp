// Incomplete zeta/eta functions, path integrals of v^{-s}/sinh(pi v/2)
// between -i and i, and the critical-line integral system.

#ifndef ZETAKIT_PATHS_HPP
#define ZETAKIT_PATHS_HPP

#include "zetakit/core.hpp"

#include <functional>
#include <string>
#include <vector>

namespace zetakit {

inline constexpr double default_path_tol = 1e-12;

// sum_k E_s(pi (k+1/2)) = (1/2) int_1^inf v^{-s} / sinh(pi v/2) dv
SeriesResult sum_Es_real(complex s, double tol = default_path_tol);
// The same sum taken term by term.
SeriesResult sum_Es_real_direct(complex s, double tol = default_path_tol);
// sum_k E^1_s(pi (k+1/2)) = (1/2) int_1^inf ln(v) v^{-s} / sinh(pi v/2) dv
SeriesResult sum_Es1_real(complex s, double tol = default_path_tol);

// eta+(s) = -2^s sin(pi s/2) sum_Es_real(s)
complex eta_plus(complex s, double tol = default_path_tol);
// eta-(s) = 2^{s-1} int_{-pi/2}^{pi/2} X sin(c + (s-1) theta) / D dtheta, with
// X = exp(-(pi/2) sin t), c = (pi/2) cos t, D = cosh(pi sin t) - cos(pi cos t).
complex eta_minus(complex s, double tol = default_path_tol);
// zeta+(s) = 2^{s-1} sin(pi s/2) / (2^{1-s} - 1) int_1^inf v^{-s} / sinh(pi v/2) dv
complex zeta_plus(complex s, double tol = default_path_tol);
// zeta-(s): for Re s < 1 the same prefactor times
//   int_0^1 (v^{-s}/sinh(pi v/2) - 2 v^{-s-1}/pi) dv - 2/(pi s),
// otherwise eta-(s) / (1 - 2^{1-s}).
complex zeta_minus(complex s, double tol = default_path_tol);

enum class PathKind
{
   circle_A,
   double_circle_B,
   two_lines_C,
   four_lines_D,
   custom
};

struct PathPoint
{
   complex v;
   complex dv;
};

// theta in [a, b] runs from v(a) = -i through v(split) = 1 to v(b) = i.
struct PathSpec
{
   PathKind kind = PathKind::custom;
   std::function<PathPoint(double)> at;
   double a = 0.0;
   double b = 1.0;
   double split = 0.5;
   // interior kinks besides split
   std::vector<double> breakpoints;
};

PathSpec make_path(PathKind kind);
std::string to_string(PathKind kind);

// Throws path_error unless the endpoints are right, Re v >= 0 and the path
// keeps 0.05 away from the zeros 2ik of sinh(pi v/2).
void validate_path(const PathSpec& path);

// eta(s) = -2^{s-1} [ (i e^{-i pi s/2}/2) int_{-i -> 1} + (i e^{i pi s/2}/2) int_{1 -> i}
//                     v^{-s} / sinh(pi v/2) dv + 2 sin(pi s/2) sum_Es_real(s) ]
complex path_integral_eta(complex s, const PathSpec& path, double tol = default_path_tol);

struct CriticalLineValues
{
   double t = 0.0;
   double J1 = 0.0, J2 = 0.0, J3 = 0.0, J4 = 0.0;
   double zeta_minus_re = 0.0, zeta_minus_im = 0.0;
   double zeta_plus_re = 0.0, zeta_plus_im = 0.0;
   complex zeta() const { return {zeta_minus_re + zeta_plus_re, zeta_minus_im + zeta_plus_im}; }
};

// On s = 1/2 + it, with a = (pi/2) cos t - t/2 over the right half circle:
//   J1 = int X cos(a) sinh(theta t) / D      J2 = int X sin(a) cosh(theta t) / D
//   J3 = int_1^inf sin(t ln v) / (sqrt(v) sinh(pi v/2))
//   J4 = int_1^inf cos(t ln v) / (sqrt(v) sinh(pi v/2))
// zeta- follows from J1, J2 and zeta+ from J3, J4.  Evaluated in long double.
CriticalLineValues critical_line_system(double t, double tol = 1e-10);

// J1 and J2 rebuilt from zeta-(1/2 + it).
std::pair<double, double> critical_line_j_from_zeta_minus(double t, complex zeta_minus);

// (4^m / (2m)!) int_0^1 E(2m, u/2) / u du; E(2m, 0) = 0 so the integrand is a
// polynomial of degree 2m - 1.
double euler_polynomial_integral(int m, double tol = default_path_tol);

} // namespace zetakit

#endif
