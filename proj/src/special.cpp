#include "zetakit/special.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace zetakit {

namespace {

constexpr double lanczos_g = 607.0 / 128.0;
constexpr std::array<double, 15> lanczos_c{
   0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
   14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
   .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
   -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
   .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

constexpr double pole_distance = 1e-14;
constexpr double tiny = 1e-300;
constexpr double eps = std::numeric_limits<double>::epsilon();

bool at_pole(const complex& z)
{
   if (z.real() > 0.5)
      return false;
   long long n;
   return near_integer(z, pole_distance, n) && n <= 0;
}

// Requires Re z >= 1/2.
complex lanczos_log_gamma(complex z)
{
   z -= 1.0;
   complex x = lanczos_c[0];
   for (std::size_t k = 1; k < lanczos_c.size(); ++k)
      x += lanczos_c[k] / (z + static_cast<double>(k));
   const complex t = z + lanczos_g + 0.5;
   return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// Even-index Bernoulli numbers B_2 .. B_20.
constexpr std::array<double, 10> bernoulli_even{
   1.0 / 6,       -1.0 / 30,        1.0 / 42,    -1.0 / 30,       5.0 / 66,
   -691.0 / 2730, 7.0 / 6,          -3617.0 / 510, 43867.0 / 798, -174611.0 / 330};

} // namespace

complex gamma(complex z)
{
   if (at_pole(z))
      throw pole_error("gamma: pole at a non-positive integer");
   if (z.real() < 0.5)
      return pi / (sin_pi(z) * gamma(1.0 - z));
   return std::exp(lanczos_log_gamma(z));
}

complex log_gamma(complex z)
{
   if (at_pole(z))
      throw pole_error("log_gamma: pole at a non-positive integer");
   if (z.real() < 0.5)
      return std::log(pi) - std::log(sin_pi(z)) - lanczos_log_gamma(1.0 - z);
   return lanczos_log_gamma(z);
}

complex rgamma(complex z)
{
   long long n;
   if (is_exact_integer(z, n) && n <= 0)
      return 0.0;
   if (z.real() < 0.5)
      return sin_pi(z) * gamma(1.0 - z) / pi;
   return std::exp(-lanczos_log_gamma(z));
}

complex digamma(complex z)
{
   if (at_pole(z))
      throw pole_error("digamma: pole at a non-positive integer");
   complex result = 0.0;
   if (z.real() < 0.5)
   {
      result = -pi * cos_pi(z) / sin_pi(z);
      z = 1.0 - z;
   }
   while (z.real() < 15.0)
   {
      result -= 1.0 / z;
      z += 1.0;
   }
   const complex z2 = 1.0 / (z * z);
   complex zp = z2;
   complex series = 0.0;
   for (std::size_t k = 0; k < 8; ++k)
   {
      series += bernoulli_even[k] / (2.0 * static_cast<double>(k + 1)) * zp;
      zp *= z2;
   }
   return result + std::log(z) - 0.5 / z - series;
}

double digamma(double x)
{
   return digamma(complex(x, 0.0)).real();
}

double polygamma(int n, double x)
{
   if (n < 0)
      throw domain_error("polygamma: order must be non-negative");
   if (!(x > 0.0))
      throw domain_error("polygamma: argument must be positive");
   if (n == 0)
      return digamma(x);
   // sum_{k>=0} (x+k)^{-n-1}, head explicitly and tail by Euler-Maclaurin
   double head = 0.0;
   while (x < 20.0)
   {
      head += std::pow(x, -n - 1);
      x += 1.0;
   }
   double tail = std::pow(x, -n) / n + 0.5 * std::pow(x, -n - 1);
   double rising = n + 1; // (n+1)_{2j-1}
   double fact = 2.0;     // (2j)!
   double xp = std::pow(x, -n - 2);
   for (std::size_t j = 1; j <= bernoulli_even.size(); ++j)
   {
      const double term = bernoulli_even[j - 1] * rising / fact * xp;
      tail += term;
      if (std::fabs(term) < eps * std::fabs(tail))
         break;
      rising *= (n + 2.0 * j) * (n + 2.0 * j + 1.0);
      fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
      xp /= x * x;
   }
   double factorial = 1.0;
   for (int k = 2; k <= n; ++k)
      factorial *= k;
   return sign_power(n + 1) * factorial * (head + tail);
}

namespace {

void cisi(double x, double& ci, double& si)
{
   if (x <= 2.0)
   {
      const double x2 = x * x;
      double term = x; // (-1)^k x^{2k+1} / (2k+1)!
      si = x;
      double cterm = 1.0; // (-1)^k x^{2k} / (2k)!
      ci = 0.0;
      for (int k = 1; k < 60; ++k)
      {
         cterm *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
         term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
         ci += cterm / (2.0 * k);
         si += term / (2.0 * k + 1.0);
         if (std::fabs(term) < eps * std::fabs(si) && std::fabs(cterm) < eps * std::fabs(ci))
            break;
      }
      ci += euler_gamma + std::log(x);
      return;
   }
   // Lentz continued fraction for E1(ix)
   complex b(1.0, x);
   complex c = 1.0 / tiny;
   complex d = 1.0 / b;
   complex h = d;
   for (int i = 2; i < 100000; ++i)
   {
      const double a = -static_cast<double>(i - 1) * (i - 1);
      b += 2.0;
      d = 1.0 / (a * d + b);
      c = b + a / c;
      const complex del = c * d;
      h *= del;
      if (std::fabs(del.real() - 1.0) + std::fabs(del.imag()) < eps)
         break;
   }
   h *= complex(std::cos(x), -std::sin(x));
   ci = -h.real();
   si = pi / 2 + h.imag();
}

} // namespace

double sine_integral(double x)
{
   if (x == 0.0)
      return 0.0;
   if (x < 0.0)
      return -sine_integral(-x);
   double ci, si;
   cisi(x, ci, si);
   return si;
}

double cosine_integral(double x)
{
   if (!(x > 0.0))
      throw domain_error("cosine_integral: argument must be positive");
   double ci, si;
   cisi(x, ci, si);
   return ci;
}

double fresnel_c(double x)
{
   const double ax = std::fabs(x);
   double c;
   if (ax <= 1.5)
   {
      const double q = (pi / 2) * (pi / 2) * ax * ax * ax * ax;
      double term = ax; // (-1)^k (pi/2)^{2k} x^{4k+1} / (2k)!
      c = ax;
      for (int k = 1; k < 100; ++k)
      {
         term *= -q / ((2.0 * k - 1.0) * (2.0 * k));
         const double add = term / (4.0 * k + 1.0);
         c += add;
         if (std::fabs(add) < eps * std::fabs(c))
            break;
      }
   }
   else
   {
      complex b(1.0, -pi * ax * ax);
      complex cc = 1.0 / tiny;
      complex d = 1.0 / b;
      complex h = d;
      double n = -1.0;
      for (int k = 2; k < 100000; ++k)
      {
         n += 2.0;
         const double a = -n * (n + 1.0);
         b += 4.0;
         d = 1.0 / (a * d + b);
         cc = b + a / cc;
         const complex del = cc * d;
         h *= del;
         if (std::fabs(del.real() - 1.0) + std::fabs(del.imag()) < eps)
            break;
      }
      h *= complex(ax, -ax);
      const double phase = 0.5 * pi * ax * ax;
      const complex cs = complex(0.5, 0.5) * (1.0 - complex(std::cos(phase), std::sin(phase)) * h);
      c = cs.real();
   }
   return x < 0.0 ? -c : c;
}

double polylog(int j, double x)
{
   if (j < 1)
      throw domain_error("polylog: order must be at least 1");
   if (!(x > 0.0 && x < 1.0))
      throw domain_error("polylog: argument must lie in (0, 1)");
   double sum = 0.0;
   double xn = 1.0;
   for (long n = 1; n < 100'000'000; ++n)
   {
      xn *= x;
      const double term = xn / std::pow(static_cast<double>(n), j);
      sum += term;
      if (term < 1e-17 * sum)
         break;
   }
   return sum;
}

double erf_real(double x)
{
   if (x < 0.0)
      return -erf_real(-x);
   if (x >= 2.0)
      return 1.0 - erfc_real(x);
   const double x2 = x * x;
   double term = x;
   double sum = x;
   for (int n = 0; n < 200; ++n)
   {
      term *= 2.0 * x2 / (2.0 * n + 3.0);
      sum += term;
      if (term < eps * sum)
         break;
   }
   return 2.0 / std::sqrt(pi) * std::exp(-x2) * sum;
}

double erfc_real(double x)
{
   if (x < 2.0)
      return 1.0 - erf_real(x);
   // Lentz for x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))
   double f = x;
   double c = x;
   double d = 0.0;
   for (int n = 1; n < 10000; ++n)
   {
      const double a = 0.5 * n;
      d = x + a * d;
      d = 1.0 / (d == 0.0 ? tiny : d);
      c = x + a / c;
      if (c == 0.0)
         c = tiny;
      const double del = c * d;
      f *= del;
      if (std::fabs(del - 1.0) < eps)
         break;
   }
   return std::exp(-x * x) / (std::sqrt(pi) * f);
}

double csch_minus_inverse(double x)
{
   if (x == 0.0)
      return 0.0;
   if (std::fabs(x) < 1.0)
   {
      // sinh x - x summed directly avoids the cancellation
      const double x2 = x * x;
      double term = x * x2 / 6, excess = term;
      for (int k = 5; std::fabs(term) > 1e-18 * std::fabs(excess); k += 2)
      {
         term *= x2 / ((k - 1) * k);
         excess += term;
      }
      return -excess / (x * (x + excess));
   }
   return 1.0 / std::sinh(x) - 1.0 / x;
}

complex pochhammer(complex s, int n)
{
   complex p = 1.0;
   for (int k = 0; k < n; ++k)
      p *= s + static_cast<double>(k);
   return p;
}

} // namespace zetakit
