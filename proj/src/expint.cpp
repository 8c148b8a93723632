#include "zetakit/expint.hpp"

#include "zetakit/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace zetakit {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double cf_threshold = 1.5;
constexpr int cf_max_iterations = 20000;

// Accepts err against tol, absolute or relative, or at the working-precision floor.
bool within(double err, double tol, const complex& value)
{
   const double mag = std::abs(value);
   return err <= std::max({tol, tol * mag, 256 * eps * mag});
}

void check_tolerance(double tol)
{
   if (!(tol >= 1e-15 && tol <= 1e-3))
      throw domain_error("expint: tolerance must lie in [1e-15, 1e-3]");
}

// Modified Lentz on e^{-z} / (z+s - 1 s/(z+s+2 - 2(s+1)/(z+s+4 - ...)))
bool continued_fraction(complex s, complex z, complex& out, double& err)
{
   constexpr double tiny = 1e-300;
   complex b = z + s;
   complex c = 1.0 / tiny;
   complex d = 1.0 / b;
   complex h = d;
   for (int i = 1; i < cf_max_iterations; ++i)
   {
      const double k = i;
      const complex a = -k * (s - 1.0 + k);
      b += 2.0;
      d = a * d + b;
      if (d == 0.0)
         d = tiny;
      c = b + a / c;
      if (c == 0.0)
         c = tiny;
      d = 1.0 / d;
      const complex del = c * d;
      h *= del;
      const double change = std::abs(del - 1.0);
      if (change < eps)
      {
         out = h * std::exp(-z);
         err = 8 * eps * std::abs(out);
         return is_finite(out);
      }
   }
   return false;
}

SeriesResult rotated_ray(complex s, complex z, double tol)
{
   const double r = std::abs(z);
   const complex omega = std::conj(z) / r;
   const complex scale = omega / r;
   auto f = [&](double x) -> complex { return std::pow(1.0 + scale * x, -s) * std::exp(-x); };
   const complex pre = std::exp(-z) * scale;
   QuadratureOptions opt;
   opt.abs_tol = tol / std::max(1.0, std::abs(pre)) / 4;
   opt.rel_tol = tol / 4;
   opt.max_evals = 400'000;
   const auto q = integrate(f, 0.0, std::numeric_limits<double>::infinity(), opt);
   SeriesResult res;
   res.value = pre * q.value;
   res.abs_error_estimate = std::abs(pre) * q.abs_error_estimate;
   res.terms_used = q.evaluations;
   res.converged = within(res.abs_error_estimate, tol, res.value);
   if (!res.converged)
   {
      char msg[96];
      std::snprintf(msg, sizeof msg, "expint_E: quadrature missed tolerance (error estimate %.3g)", res.abs_error_estimate);
      throw convergence_error(msg);
   }
   return res;
}

} // namespace

complex expint_E_negint(int m, complex z)
{
   if (m < 0)
      throw domain_error("expint_E_negint: m must be non-negative");
   if (z == 0.0)
      throw domain_error("expint_E_negint: z must be non-zero");
   complex term = 1.0;
   complex sum = 1.0;
   for (int j = 1; j <= m; ++j)
   {
      term *= z / static_cast<double>(j);
      sum += term;
   }
   double fact = 1.0;
   for (int j = 2; j <= m; ++j)
      fact *= j;
   return fact * std::exp(-z) * std::pow(z, -m - 1) * sum;
}

SeriesResult expint_E(complex s, complex z, double tol)
{
   check_tolerance(tol);
   if (!is_finite(s) || !is_finite(z))
      throw domain_error("expint_E: non-finite input");
   if (z == 0.0)
   {
      if (s.real() > 1.0)
         return {1.0 / (s - 1.0), 0.0, 0, true};
      throw domain_error("expint_E: z = 0 requires Re s > 1");
   }
   if (z.real() < 0.0)
      throw domain_error("expint_E: argument must satisfy Re z >= 0");
   long long n;
   if (is_exact_integer(s, n) && n <= 0 && n > -170)
   {
      const complex v = expint_E_negint(static_cast<int>(-n), z);
      return {v, 4 * eps * std::abs(v) * static_cast<double>(1 - n), 0, true};
   }
   if (std::abs(z) >= cf_threshold)
   {
      complex v;
      double err;
      if (continued_fraction(s, z, v, err) && within(err, tol, v))
         return {v, err, 0, true};
   }
   return rotated_ray(s, z, tol);
}

SeriesResult expint_order_derivative(int j, complex s, complex z, double tol, bool cross_check)
{
   if (j < 0 || j > 2)
      throw domain_error("expint_order_derivative: j must be 0, 1 or 2");
   check_tolerance(tol);
   if (j == 0)
      return expint_E(s, z, tol);

   constexpr int points = 32;
   constexpr double radius = 0.5;
   const double inner_tol = std::max(1e-15, tol / 100);
   std::array<complex, points> f;
   std::array<complex, points> w;
   for (int k = 0; k < points; ++k)
   {
      const double angle = 2 * pi * k / points;
      w[k] = {std::cos(angle), std::sin(angle)};
      f[k] = expint_E(s + radius * w[k], z, inner_tol).value;
   }
   auto coefficient = [&](int stride) {
      complex acc = 0.0;
      int count = 0;
      for (int k = 0; k < points; k += stride)
      {
         acc += f[k] * std::pow(std::conj(w[k]), j);
         ++count;
      }
      return acc / (static_cast<double>(count) * std::pow(radius, j));
   };
   const double sign = sign_power(j);
   SeriesResult res;
   res.value = sign * coefficient(1);
   const complex coarse = sign * coefficient(2);
   double magnitude = 0.0;
   for (const auto& v : f)
      magnitude = std::max(magnitude, std::abs(v));
   res.abs_error_estimate = std::abs(res.value - coarse) + 16 * eps * magnitude / std::pow(radius, j);
   res.terms_used = points;
   res.converged = within(res.abs_error_estimate, tol, res.value);
   if (!res.converged)
      throw convergence_error("expint_order_derivative: circle rule missed tolerance");

   if (cross_check && std::abs(1.0 - s) > 1e-6)
   {
      const complex lower = expint_order_derivative(j, s - 1.0, z, tol, false).value;
      const complex previous =
         j == 1 ? expint_E(s, z, inner_tol).value : expint_order_derivative(j - 1, s, z, tol, false).value;
      const complex via_recursion = (z * lower - previous) / (1.0 - s);
      const double gap = std::abs(via_recursion - res.value);
      if (gap > 10 * std::max(tol, tol * std::abs(res.value)))
         throw convergence_error("expint_order_derivative: circle rule and recursion disagree by " +
                                 std::to_string(gap));
   }
   return res;
}

complex t_pair(std::size_t k, complex s, int sign, double tol)
{
   const double kappa = pi * (static_cast<double>(k) + 0.5);
   const complex up = expint_E(s, {0.0, kappa}, tol).value;
   const complex down = s.imag() == 0.0 ? std::conj(up) : expint_E(s, {0.0, -kappa}, tol).value;
   return sign >= 0 ? up + down : up - down;
}

complex t_pair_derivative(int j, std::size_t k, complex s, int sign, double tol)
{
   const double kappa = pi * (static_cast<double>(k) + 0.5);
   const complex up = expint_order_derivative(j, s, {0.0, kappa}, tol, false).value;
   const complex down =
      s.imag() == 0.0 ? std::conj(up) : expint_order_derivative(j, s, {0.0, -kappa}, tol, false).value;
   return sign >= 0 ? up + down : up - down;
}

} // namespace zetakit
