// Adaptive quadrature over real intervals with real or complex integrands.
//
// Global adaptive bisection on Gauss-Kronrod 21 panels, worst panel first.
// Panels that shrink against an original endpoint without converging are
// finished by a tanh-sinh rule, which absorbs integrable endpoint
// singularities.  A semi-infinite upper limit is mapped onto [0, 1).

#ifndef ZETAKIT_QUADRATURE_HPP
#define ZETAKIT_QUADRATURE_HPP

#include "zetakit/acceleration.hpp"
#include "zetakit/core.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <type_traits>
#include <vector>

namespace zetakit {

struct QuadratureOptions
{
   double abs_tol = 1e-12;
   double rel_tol = 0.0;
   std::size_t max_evals = 1'000'000;
};

namespace detail {

template <class T>
bool finite_value(const T& v)
{
   if constexpr (std::is_floating_point_v<T>)
      return std::isfinite(v);
   else
      return std::isfinite(v.real()) && std::isfinite(v.imag());
}

template <class Real, class T>
struct Panel
{
   Real a, b;
   T value;
   Real error;
   Real abs_value;
   bool final = false;
   bool operator<(const Panel& o) const { return error < o.error; }
};

template <class Real, class T, class F>
Panel<Real, T> kronrod_panel(F& f, Real a, Real b, std::size_t& evals)
{
   using boost::math::quadrature::gauss;
   using boost::math::quadrature::gauss_kronrod;
   static const auto& x = gauss_kronrod<Real, 21>::abscissa();
   static const auto& wk = gauss_kronrod<Real, 21>::weights();
   static const auto& wg = gauss<Real, 10>::weights();

   const Real c = (a + b) / 2;
   const Real h = (b - a) / 2;
   std::array<T, 21> fv;
   fv[0] = f(c);
   for (std::size_t i = 1; i < 11; ++i)
   {
      fv[2 * i - 1] = f(c - h * x[i]);
      fv[2 * i] = f(c + h * x[i]);
   }
   evals += 21;
   for (const auto& v : fv)
      if (!finite_value(v))
         throw error("quadrature: integrand returned a non-finite value");

   T k = wk[0] * fv[0];
   T g{};
   Real abs_k = wk[0] * std::abs(fv[0]);
   for (std::size_t i = 1; i < 11; ++i)
   {
      const T pair = fv[2 * i - 1] + fv[2 * i];
      k += wk[i] * pair;
      abs_k += wk[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
      if (i % 2 == 1)
         g += wg[(i - 1) / 2] * pair;
   }
   const T mean = k / Real(2);
   Real asc = wk[0] * std::abs(fv[0] - mean);
   for (std::size_t i = 1; i < 11; ++i)
      asc += wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));

   const Real ah = std::abs(h);
   Real err = std::abs((k - g) * h);
   asc *= ah;
   if (asc != 0 && err != 0)
      err = asc * std::min<Real>(1, std::pow(200 * err / asc, Real(1.5)));
   const Real eps = std::numeric_limits<Real>::epsilon();
   err = std::max(err, 50 * eps * abs_k * ah);
   return {a, b, k * h, err, abs_k * ah};
}

// tanh-sinh on [a, b]; nodes are placed from the nearer endpoint so that
// points crowding an endpoint keep full relative precision.
template <class Real, class T, class F>
Panel<Real, T> tanh_sinh_panel(F& f, Real a, Real b, Real tol, std::size_t& evals)
{
   const Real half = (b - a) / 2;
   const Real half_pi = std::numbers::pi_v<Real> / 2;
   const Real tmax = 4;
   auto node = [&](Real t, T& out, Real& abs_out) {
      const Real u = half_pi * std::sinh(t);
      const Real e = std::exp(-2 * std::abs(u));
      const Real complement = 2 * e / (1 + e); // 1 - |tanh(u)|
      const Real w = half_pi * std::cosh(t) * 4 * e / ((1 + e) * (1 + e));
      const Real x = t < 0 ? a + half * complement : b - half * complement;
      if (w == 0 || x <= a || x >= b)
      {
         out = T{};
         abs_out = 0;
         return;
      }
      const T v = f(x);
      ++evals;
      if (!finite_value(v))
         throw error("quadrature: integrand returned a non-finite value");
      out = w * v;
      abs_out = w * std::abs(v);
   };
   Real h = 1;
   T sum{};
   Real abs_sum = 0;
   for (Real t = -tmax; t <= tmax; t += h)
   {
      T v;
      Real av;
      node(t, v, av);
      sum += v;
      abs_sum += av;
   }
   T estimate = sum * h * half;
   Real err = std::numeric_limits<Real>::max();
   for (int level = 1; level <= 10; ++level)
   {
      h /= 2;
      for (Real t = -tmax + h; t < tmax; t += 2 * h)
      {
         T v;
         Real av;
         node(t, v, av);
         sum += v;
         abs_sum += av;
      }
      const T next = sum * h * half;
      err = std::abs(next - estimate);
      estimate = next;
      if (level >= 3 && err <= tol)
         break;
   }
   const Real eps = std::numeric_limits<Real>::epsilon();
   err = std::max(err, 50 * eps * abs_sum * h * std::abs(half));
   return {a, b, estimate, err, abs_sum * h * std::abs(half), true};
}

template <class Real, class T, class F>
QuadratureResult<T> adaptive(F& f, Real a, Real b, const QuadratureOptions& opt)
{
   using P = Panel<Real, T>;
   std::size_t evals = 0;
   std::priority_queue<P> open;
   std::vector<P> done;
   P first = kronrod_panel<Real, T>(f, a, b, evals);
   Real total_err = first.error;
   T total = first.value;
   Real total_abs = first.abs_value;
   open.push(first);
   const Real width = b - a;
   const Real eps = std::numeric_limits<Real>::epsilon();
   const Real singular_width = width * Real(1e-5);

   auto target = [&]() {
      return std::max<Real>({static_cast<Real>(opt.abs_tol), static_cast<Real>(opt.rel_tol) * std::abs(total),
                             64 * eps * total_abs});
   };

   while (!open.empty() && total_err > target())
   {
      if (evals > opt.max_evals)
      {
         char msg[96];
         std::snprintf(msg, sizeof msg, "quadrature: evaluation budget exhausted (error estimate %.3g)",
                       static_cast<double>(total_err));
         throw budget_error(msg);
      }
      P worst = open.top();
      open.pop();
      total_err -= worst.error;
      total -= worst.value;
      total_abs -= worst.abs_value;
      const Real mid = (worst.a + worst.b) / 2;
      const bool at_end = worst.a == a || worst.b == b;
      std::vector<P> children;
      if (at_end && worst.b - worst.a < singular_width)
      {
         const Real share = std::max<Real>(static_cast<Real>(opt.abs_tol) / 4, worst.error / 1000);
         children.push_back(tanh_sinh_panel<Real, T>(f, worst.a, worst.b, share, evals));
      }
      else if (mid <= worst.a || mid >= worst.b || (worst.b - worst.a) < 16 * eps * std::abs(mid))
      {
         worst.final = true;
         children.push_back(worst);
      }
      else
      {
         children.push_back(kronrod_panel<Real, T>(f, worst.a, mid, evals));
         children.push_back(kronrod_panel<Real, T>(f, mid, worst.b, evals));
      }
      for (auto& c : children)
      {
         total_err += c.error;
         total += c.value;
         total_abs += c.abs_value;
         if (c.final)
            done.push_back(c);
         else
            open.push(c);
      }
   }
   // re-sum for a clean total
   T value{};
   Real err = 0;
   for (const auto& p : done)
   {
      value += p.value;
      err += p.error;
   }
   while (!open.empty())
   {
      value += open.top().value;
      err += open.top().error;
      open.pop();
   }
   return {value, static_cast<double>(err), evals};
}

} // namespace detail

// Integral of f over [a, b]; b may be +infinity.
template <class Real, class F>
auto integrate(F&& f, Real a, Real b, const QuadratureOptions& opt = {})
   -> QuadratureResult<std::decay_t<std::invoke_result_t<F&, Real>>>
{
   using T = std::decay_t<std::invoke_result_t<F&, Real>>;
   if (!(a <= b) && !(std::isinf(b) && b > 0))
      throw domain_error("quadrature: lower limit exceeds upper limit");
   if (a == b)
      return {T{}, 0.0, 0};
   if (std::isinf(b))
   {
      auto g = [&](Real t) -> T {
         const Real s = 1 - t;
         return f(a + t / s) / (s * s);
      };
      return detail::adaptive<Real, T>(g, Real(0), Real(1), opt);
   }
   return detail::adaptive<Real, T>(f, a, b, opt);
}

// Integral over consecutive breakpoints x0 < x1 < ... ; the tolerance is
// shared evenly between the pieces.
template <class Real, class F>
auto integrate_pieces(F&& f, const std::vector<Real>& points, const QuadratureOptions& opt = {})
   -> QuadratureResult<std::decay_t<std::invoke_result_t<F&, Real>>>
{
   using T = std::decay_t<std::invoke_result_t<F&, Real>>;
   QuadratureResult<T> total{};
   QuadratureOptions piece = opt;
   piece.abs_tol = opt.abs_tol / static_cast<double>(std::max<std::size_t>(1, points.size() - 1));
   for (std::size_t i = 0; i + 1 < points.size(); ++i)
   {
      const auto r = integrate(f, points[i], points[i + 1], piece);
      total.value += r.value;
      total.abs_error_estimate += r.abs_error_estimate;
      total.evaluations += r.evaluations;
   }
   return total;
}

// Integral over [a, infinity) of an integrand whose sign changes every
// half_period beyond first_zero.  The half-period pieces form an
// alternating series which is accelerated.
template <class Real, class F>
auto integrate_oscillatory(F&& f, Real a, Real first_zero, Real half_period, const QuadratureOptions& opt = {})
   -> QuadratureResult<std::decay_t<std::invoke_result_t<F&, Real>>>
{
   using T = std::decay_t<std::invoke_result_t<F&, Real>>;
   if (!(first_zero >= a) || !(half_period > 0))
      throw domain_error("quadrature: bad oscillation layout");
   QuadratureOptions piece = opt;
   piece.abs_tol = opt.abs_tol / 100;
   piece.rel_tol = 0;
   QuadratureResult<T> head = integrate(f, a, first_zero, piece);
   std::vector<T> parts;
   std::size_t evals = head.evaluations;
   auto extend = [&](std::size_t n) {
      while (parts.size() < n)
      {
         const Real lo = first_zero + half_period * static_cast<Real>(parts.size());
         const auto r = integrate(f, lo, lo + half_period, piece);
         evals += r.evaluations;
         parts.push_back(r.value);
      }
   };
   std::size_t n = 16;
   extend(n);
   T prev = alternating_estimate(parts, n);
   while (true)
   {
      if (n >= alternating_max_terms)
         throw budget_error("quadrature: oscillatory tail did not settle");
      const std::size_t next = std::min(alternating_max_terms, n + n / 2);
      extend(next);
      const T cur = alternating_estimate(parts, next);
      const double diff = static_cast<double>(std::abs(cur - prev));
      prev = cur;
      n = next;
      if (10 * diff <= opt.abs_tol)
         return {head.value + cur, head.abs_error_estimate + 10 * diff, evals};
   }
}

} // namespace zetakit

#endif
