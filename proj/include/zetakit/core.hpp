//  zetakit: series representations of the Riemann zeta function.
//
//  Shared vocabulary: the complex carrier, the error hierarchy, and the
//  result records returned by every infinite sum and quadrature.

#ifndef ZETAKIT_CORE_HPP
#define ZETAKIT_CORE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zetakit {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr double ln2 = std::numbers::ln2;
inline constexpr complex I{0.0, 1.0};

// Error hierarchy.  Every failure carries the name of the operation.
class error : public std::runtime_error
{
public:
   using std::runtime_error::runtime_error;
};

class domain_error : public error
{
public:
   using error::error;
};

class pole_error : public domain_error
{
public:
   using domain_error::domain_error;
};

class convergence_error : public error
{
public:
   using error::error;
};

class budget_error : public error
{
public:
   using error::error;
};

class path_error : public error
{
public:
   using error::error;
};

class cap_error : public error
{
public:
   using error::error;
};

struct SeriesResult
{
   complex value{};
   double abs_error_estimate = 0.0;
   std::size_t terms_used = 0;
   bool converged = false;
   // max(|A|, |B|) / |A + B| when the result is a difference of large parts
   double cancellation_ratio = 1.0;
   bool significance_loss = false;
};

template <class T>
struct QuadratureResult
{
   T value{};
   double abs_error_estimate = 0.0;
   std::size_t evaluations = 0;
};

enum class Acceleration
{
   none,
   pairwise,
   alternating
};

struct SeriesConfig
{
   double tolerance = 1e-12;
   std::size_t term_cap = 100000;
   Acceleration acceleration = Acceleration::alternating;
   int recursion_depth = 0;
};

inline constexpr std::size_t max_term_cap = 10'000'000;
inline constexpr int max_recursion_depth = 40;

inline void validate(const SeriesConfig& cfg)
{
   if (!(cfg.tolerance > 0.0))
      throw domain_error("series config: tolerance must be positive");
   if (cfg.term_cap == 0 || cfg.term_cap > max_term_cap)
      throw domain_error("series config: term cap must lie in [1, 1e7]");
   if (cfg.recursion_depth < 0 || cfg.recursion_depth > max_recursion_depth)
      throw domain_error("series config: recursion depth must lie in [0, 40]");
}

inline bool is_finite(const complex& z) noexcept
{
   return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// sin(pi x) and cos(pi x) with exact zeros at the integers and half-integers.
inline double sin_pi(double x) noexcept
{
   if (x < 0)
      return -sin_pi(-x);
   double r = std::fmod(x, 2.0);
   double sign = 1.0;
   if (r >= 1.0)
   {
      r -= 1.0;
      sign = -1.0;
   }
   if (r == 0.0)
      return 0.0;
   if (r == 0.5)
      return sign;
   if (r > 0.5)
      r = 1.0 - r;
   return sign * (r <= 0.25 ? std::sin(pi * r) : std::cos(pi * (0.5 - r)));
}

inline double cos_pi(double x) noexcept
{
   return sin_pi(std::fabs(x) + 0.5);
}

inline complex sin_pi(const complex& z) noexcept
{
   const double y = pi * z.imag();
   return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

inline complex cos_pi(const complex& z) noexcept
{
   const double y = pi * z.imag();
   return {cos_pi(z.real()) * std::cosh(y), -sin_pi(z.real()) * std::sinh(y)};
}

// (-1)^n for any integer n.
constexpr double sign_power(long long n) noexcept
{
   return (n % 2 == 0) ? 1.0 : -1.0;
}

// exp(i pi n / 2) for integer n.
inline complex i_power(long long n) noexcept
{
   switch (((n % 4) + 4) % 4)
   {
   case 0:
      return {1.0, 0.0};
   case 1:
      return {0.0, 1.0};
   case 2:
      return {-1.0, 0.0};
   default:
      return {0.0, -1.0};
   }
}

// Nearest integer when z lies within tol of one on the real axis.
inline bool near_integer(const complex& z, double tol, long long& n) noexcept
{
   if (std::fabs(z.imag()) > tol)
      return false;
   const double r = std::round(z.real());
   if (std::fabs(z.real() - r) > tol)
      return false;
   n = static_cast<long long>(r);
   return true;
}

inline bool is_exact_integer(const complex& z, long long& n) noexcept
{
   if (z.imag() != 0.0 || z.real() != std::round(z.real()) || std::fabs(z.real()) > 1e15)
      return false;
   n = static_cast<long long>(z.real());
   return true;
}

} // namespace zetakit

#endif
