#include "zetakit/numbertheory.hpp"

#include "zetakit/special.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace zetakit {

namespace {

using Integer = boost::multiprecision::cpp_int;

void check_index(int n, int cap, const char* what)
{
   if (n < 0)
      throw domain_error(std::string(what) + ": index must be non-negative");
   if (n > cap)
      throw cap_error(std::string(what) + ": index " + std::to_string(n) + " exceeds the table cap " +
                      std::to_string(cap));
}

// Grow-only memo table; entries are computed in order under a lock.
template <class Fill>
class Table
{
public:
   explicit Table(Fill fill) : fill_(fill) {}

   Rational at(int n)
   {
      std::lock_guard lock(mutex_);
      while (static_cast<int>(values_.size()) <= n)
         values_.push_back(fill_(values_, static_cast<int>(values_.size())));
      return values_[n];
   }

private:
   Fill fill_;
   std::vector<Rational> values_;
   std::mutex mutex_;
};

Integer factorial(int n)
{
   static std::mutex mutex;
   static std::vector<Integer> table{1};
   std::lock_guard lock(mutex);
   while (static_cast<int>(table.size()) <= n)
      table.push_back(table.back() * static_cast<int>(table.size()));
   return table[n];
}

Integer binomial(int n, int k)
{
   return factorial(n) / (factorial(k) * factorial(n - k));
}

Integer pow2(int n)
{
   return Integer(1) << n;
}

Rational bernoulli_fill(const std::vector<Rational>& b, int n)
{
   if (n == 0)
      return 1;
   Rational acc = 0;
   for (int k = 0; k < n; ++k)
      acc += Rational(binomial(n + 1, k)) * b[k];
   return -acc / (n + 1);
}

auto& bernoulli_table()
{
   static Table table(bernoulli_fill);
   return table;
}

Rational bernoulli(int n)
{
   return bernoulli_table().at(n);
}

Rational bernoulli_recursive_fill(const std::vector<Rational>& b2, int N)
{
   // b2[k] holds B_{2k+2}
   Rational acc = 0;
   for (int k = 0; k < N; ++k)
      acc += Rational(pow2(2 * k) * (1 - pow2(2 * k + 2))) * b2[k] /
             Rational(factorial(2 * N - 2 * k) * factorial(2 * k + 2));
   const Integer q = pow2(2 * N + 2) - 1;
   return Rational(factorial(2 * N + 2), pow2(2 * N) * q) * acc + Rational(Integer(N + 1), pow2(2 * N + 1) * q);
}

Rational euler_fill(const std::vector<Rational>&, int n)
{
   Rational acc = 0;
   for (int k = 0; k <= n; ++k)
      acc += Rational(pow2(k + 1) - pow2(2 * k + 2)) * bernoulli(k + 1) /
             Rational(factorial(n - k) * factorial(k + 1));
   return acc * Rational(factorial(n));
}

auto& euler_table()
{
   static Table table(euler_fill);
   return table;
}

Rational harmonic_fill(const std::vector<Rational>& h, int n)
{
   return n == 0 ? Rational(0) : h[n - 1] + Rational(1, n);
}

auto& harmonic_table()
{
   static Table table(harmonic_fill);
   return table;
}

Rational harmonic_recursion_fill(const std::vector<Rational>& e, int m)
{
   // e[k] holds E(2k) as produced by this recursion
   if (m == 0)
      return 1;
   const Integer f2m = factorial(2 * m);
   Rational first = 0;
   Rational second = 0;
   for (int k = 0; k < m; ++k)
   {
      Rational inner = 0;
      for (int j = 0; j <= m - k; ++j)
         inner += Rational(f2m, factorial(2 * m + 1 - 2 * k - 2 * j) * (2 * j + 1) * factorial(2 * j + 1));
      first += e[k] / Rational(factorial(2 * k)) * inner;
      second += e[k] * harmonic_table().at(2 * m - 2 * k + 2) / Rational(factorial(2 * m - 2 * k + 2) * factorial(2 * k));
   }
   return -4 * first + 4 * Rational(f2m) * second + Rational(1, Integer((2 * m + 1) * (m + 1) * (m + 1)));
}

Rational rational_power(const Rational& z, int k)
{
   Rational p = 1;
   for (int i = 0; i < k; ++i)
      p *= z;
   return p;
}

} // namespace

std::string to_string(const Rational& r)
{
   return r.str();
}

double to_double(const Rational& r)
{
   return r.convert_to<double>();
}

Rational bernoulli_exact(int n)
{
   check_index(n, table_cap, "bernoulli_exact");
   return bernoulli(n);
}

Rational bernoulli_even_recursive(int N)
{
   check_index(2 * N + 2, table_cap, "bernoulli_even_recursive");
   static Table table(bernoulli_recursive_fill);
   return table.at(N);
}

Rational euler_number(int n)
{
   check_index(n, table_cap, "euler_number");
   if (n % 2 == 1)
      return 0;
   return euler_table().at(n);
}

Rational euler_polynomial(int n, const Rational& z)
{
   check_index(n, table_cap, "euler_polynomial");
   Rational acc = 0;
   for (int k = 0; k <= n; ++k)
      acc += rational_power(z, k) * bernoulli(n + 1 - k) * Rational(2 - pow2(n + 2 - k)) /
             Rational(factorial(k) * factorial(n + 1 - k));
   return acc * Rational(factorial(n));
}

double euler_polynomial(int n, double z)
{
   check_index(n, table_cap, "euler_polynomial");
   // Horner in z over the coefficients of the polynomial
   double acc = 0.0;
   for (int k = n; k >= 0; --k)
   {
      const Rational c = Rational(factorial(n)) * bernoulli(n + 1 - k) * Rational(2 - pow2(n + 2 - k)) /
                         Rational(factorial(k) * factorial(n + 1 - k));
      acc = acc * z + to_double(c);
   }
   return acc;
}

Rational euler_polynomial_reversed(int n, const Rational& z)
{
   check_index(n, table_cap, "euler_polynomial_reversed");
   Rational acc = 0;
   for (int k = 0; k <= n; ++k)
      acc += Rational(2 - pow2(k + 2)) * rational_power(z, n - k) * bernoulli(k + 1) /
             Rational(factorial(n - k) * factorial(k + 1));
   return acc * Rational(factorial(n));
}

Rational euler_number_via_harmonic_recursion(int m)
{
   if (m < 1)
      throw domain_error("euler_number_via_harmonic_recursion: m must be at least 1");
   check_index(2 * m + 2, table_cap, "euler_number_via_harmonic_recursion");
   static Table table(harmonic_recursion_fill);
   return table.at(m);
}

Rational harmonic(int n)
{
   if (n < 1)
      throw domain_error("harmonic: n must be at least 1");
   check_index(n, table_cap, "harmonic");
   return harmonic_table().at(n);
}

double euler_number_beta_approx(int n, int N)
{
   if (n < 2 || n % 2 != 0)
      throw domain_error("euler_number_beta_approx: n must be even and at least 2");
   if (N < 0)
      throw domain_error("euler_number_beta_approx: N must be non-negative");
   if (n > 170)
      throw cap_error("euler_number_beta_approx: n! overflows binary64 beyond n = 170");
   double beta = 0.0;
   for (int k = N; k >= 0; --k)
      beta += sign_power(k) * std::pow(k + 0.5, -(n + 1));
   const double log_scale = std::lgamma(n + 1.0) - (n + 1) * std::log(pi);
   return -2.0 * sign_power(n / 2 - 1) * std::exp(log_scale) * beta;
}

Rational euler_binomial_sum(int m)
{
   check_index(2 * m, table_cap, "euler_binomial_sum");
   Rational acc = 0;
   for (int j = 0; j <= m; ++j)
      acc += euler_number(2 * j) / Rational(factorial(2 * m - 2 * j) * factorial(2 * j));
   return acc;
}

Rational harmonic_euler_sum(int m)
{
   check_index(2 * m, table_cap, "harmonic_euler_sum");
   Rational acc = 0;
   for (int j = 0; j < m; ++j)
      acc += euler_number(2 * j) * harmonic_table().at(2 * m - 2 * j) /
             Rational(factorial(2 * m - 2 * j) * factorial(2 * j));
   return acc;
}

GammaLinear euler_digamma_sum(int m)
{
   check_index(2 * m, table_cap, "euler_digamma_sum");
   GammaLinear r;
   for (int j = 0; j <= m; ++j)
   {
      const Rational w = euler_number(2 * j) / Rational(factorial(2 * m - 2 * j) * factorial(2 * j));
      // psi(2m-2j+1) = sum_{k<2m-2j} 1/(k+1) - gamma
      Rational h = 0;
      for (int k = 0; k < 2 * m - 2 * j; ++k)
         h += Rational(1, k + 1);
      r.constant += w * h;
      r.gamma_coefficient -= w;
   }
   return r;
}

Rational bernoulli_digamma_sum(int m)
{
   check_index(2 * m, table_cap, "bernoulli_digamma_sum");
   Rational acc = 0;
   for (int k = 0; k < 2 * m; ++k)
      acc += Rational(pow2(2 * k + 2) - pow2(k + 1)) * bernoulli(k + 1) /
             Rational((2 * m - k) * factorial(2 * m - k) * factorial(k + 1));
   return acc;
}

Rational bernoulli_harmonic_sum(int m)
{
   check_index(2 * m + 1, table_cap, "bernoulli_harmonic_sum");
   Rational acc = 0;
   for (int k = 1; k <= m; ++k)
      acc += Rational(pow2(2 * k) * (pow2(2 * k) - 1)) * bernoulli(2 * k) /
             Rational((2 * m - 2 * k + 1) * factorial(2 * m - 2 * k + 1) * factorial(2 * k));
   return acc - Rational(Integer(1), 2 * m * factorial(2 * m));
}

Rational bernoulli_from_euler(int n)
{
   check_index(2 * n, table_cap, "bernoulli_from_euler");
   Rational acc = 0;
   for (int k = 0; k < n; ++k)
      acc += euler_number(2 * k) / Rational(factorial(2 * k) * factorial(2 * n - 2 * k - 1));
   return Rational(factorial(2 * n), pow2(2 * n) * (pow2(2 * n) - 1)) * acc;
}

double euler_gamma_sum(double s, int n)
{
   double acc = 0.0;
   for (int j = 0; j < n; ++j)
      acc += gamma(2.0 * j + s).real() * to_double(euler_number(2 * j) / Rational(factorial(2 * j)));
   return acc;
}

double bernoulli_gamma_sum(double s, int n)
{
   auto power_of_two = [](int e) { return e >= 0 ? Rational(pow2(e)) : Rational(Integer(1), pow2(-e)); };
   double acc = 0.0;
   for (int k = 0; k < 2 * n; ++k)
   {
      const Rational c = (power_of_two(-k) - power_of_two(2 * n - 2 * k)) * bernoulli(2 * n - k) /
                         Rational(factorial(k) * factorial(2 * n - k));
      acc += to_double(c) / (2.0 * n - 1.0 + s - k);
   }
   return std::pow(4.0, n) * gamma(s + 2.0 * n).real() * acc;
}

} // namespace zetakit
