// Exact Bernoulli, Euler and harmonic numbers, and finite identities
// connecting them.  Convention: B_1 = -1/2.

#ifndef ZETAKIT_NUMBERTHEORY_HPP
#define ZETAKIT_NUMBERTHEORY_HPP

#include "zetakit/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace zetakit {

using Rational = boost::multiprecision::cpp_rational;

// Largest index served from the tables.
inline constexpr int table_cap = 256;

std::string to_string(const Rational& r);
double to_double(const Rational& r);

// Convolution recurrence sum_{k<=n} C(n+1, k) B_k = 0.
Rational bernoulli_exact(int n);

// B_{2N+2} from its own earlier values B_2 .. B_{2N}:
//   B_{2N+2} = (2N+2)! / (4^N (4^{N+1} - 1))
//              * sum_{k<N} 4^k (1 - 4^{k+1}) B_{2k+2} / ((2N-2k)! (2k+2)!)
//            + (N+1) / (2^{2N+1} (4^{N+1} - 1))
Rational bernoulli_even_recursive(int N);

// E(n) = n! sum_{k<=n} (2^{k+1} - 2^{2k+2}) B_{k+1} / ((n-k)! (k+1)!)
Rational euler_number(int n);

// E(n, z) = n! sum_{k<=n} z^k B_{n+1-k} (2 - 2^{n+2-k}) / (k! (n+1-k)!)
Rational euler_polynomial(int n, const Rational& z);
double euler_polynomial(int n, double z);
// Same polynomial summed in the reversed order.
Rational euler_polynomial_reversed(int n, const Rational& z);

// E(2m) from its own earlier values E(0) .. E(2m-2) and harmonic numbers.
Rational euler_number_via_harmonic_recursion(int m);

Rational harmonic(int n);

// N-term truncation of E(n) = -2 n! (-1)^{n/2-1} / pi^{n+1}
//                                   * sum_k (-1)^k (k+1/2)^{-n-1},  n even.
double euler_number_beta_approx(int n, int N);

// sum_{j<=m} E(2j) / ((2m-2j)! (2j)!); zero for m >= 1.
Rational euler_binomial_sum(int m);

// sum_{j<=m} E(2j) H_{2m-2j} / ((2m-2j)! (2j)!), with H_0 = 0.  Equals
// sum_j E(2j) psi(2m-2j+1) / ((2m-2j)! (2j)!) since the gamma part cancels.
Rational harmonic_euler_sum(int m);

// A sum a + b*gamma with exact rational a, b.
struct GammaLinear
{
   Rational constant;
   Rational gamma_coefficient;
};

// sum_{j<=m} E(2j) psi(2m-2j+1) / ((2m-2j)! (2j)!) with psi(n+1) = H_n - gamma.
GammaLinear euler_digamma_sum(int m);

// sum_{k=0}^{2m-1} (2^{2k+2} - 2^{k+1}) B_{k+1} / ((2m-k) (2m-k)! (k+1)!)
Rational bernoulli_digamma_sum(int m);

// sum_{k=1}^{m} 4^k (4^k - 1) B_{2k} / ((2m-2k+1) (2m-2k+1)! (2k)!) - 1 / (2m (2m)!)
// which equals the j < m part of harmonic_euler_sum.
Rational bernoulli_harmonic_sum(int m);

// B_{2n} = (2n)! / (4^n (4^n - 1)) sum_{k<n} E(2k) / ((2k)! (2n-2k-1)!)
Rational bernoulli_from_euler(int n);

// sum_{j<n} Gamma(2j+s) E(2j) / (2j)!
double euler_gamma_sum(double s, int n);
// 4^n Gamma(s+2n) sum_{k<2n} (2^{-k} - 2^{2n-2k}) B_{2n-k} / (k! (2n-k)! (2n-1+s-k))
double bernoulli_gamma_sum(double s, int n);

} // namespace zetakit

#endif
