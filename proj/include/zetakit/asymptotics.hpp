// The alternating Hurwitz zeta at half-integer shift and its divergent
// expansion, integral and Mellin-Barnes routes to zeta(2m+1), and finite
// identities between E_{2p} pairs, sine integrals and hypergeometric values.

#ifndef ZETAKIT_ASYMPTOTICS_HPP
#define ZETAKIT_ASYMPTOTICS_HPP

#include "zetakit/core.hpp"
#include "zetakit/numbertheory.hpp"

#include <vector>

namespace zetakit {

struct RealPair
{
   double lhs = 0.0;
   double rhs = 0.0;
   double diff() const { return std::fabs(lhs - rhs); }
};

// sum_k (-1)^k / (k + (t+1)/2) = [psi(t/4 + 3/4) - psi(t/4 + 1/4)] / 2
double eta_hurwitz_half_exact(double t);

struct AsymptoticEvaluation
{
   double t = 0.0;
   int truncation_order = 0;
   // partial_sums[K] = sum_{k<=K} E(2k) / t^{2k+1}
   std::vector<double> partial_sums;
   // K minimising |partial_sums[K] - exact_value|
   int optimal_index = 0;
   double exact_value = 0.0;
   double error(int K) const { return std::fabs(partial_sums.at(K) - exact_value); }
};

// Requires t >= 2 and 0 <= m <= 100.
AsymptoticEvaluation eta_hurwitz_half_asymptotic(double t, int m);

// Least-squares slope of log |S_K - exact| against log t.
double asymptotic_error_slope(int K, const std::vector<double>& ts);

// psi-weighted Euler sum sum_{j<=m} E(2j) psi(2m-2j+1) / ((2m-2j)! (2j)!)
double euler_digamma_value(int m);

enum class IntegrationOrder
{
   t_outer,
   x_outer
};

// A(m) = (2^{2m+3} pi^{2m} / (2m)!) int_0^inf t^{2m+2} / cosh(pi t)
//        int_0^1 (1-x)^{2m} x / (4 t^2 x^2 + 1) dx dt
double odd_zeta_double_integral(int m, IntegrationOrder order = IntegrationOrder::t_outer, double tol = 1e-11);

// zeta(2m+1) = [A(m) - (-1)^m pi^{2m} euler_digamma_value(m)] / (2^{2m+1} - 1)
double zeta_odd_via_double_integral(int m, double tol = 1e-11);

struct MellinBarnesResult
{
   int m = 0;
   // (2^{2m+1} - 1) zeta(2m+1); the imaginary part is quadrature residue
   complex scaled{};
   // half-width U of the vertical segment actually used
   double cutoff = 0.0;
   complex zeta() const { return scaled / (std::ldexp(1.0, 2 * m + 1) - 1.0); }
};

// Vertical line v = m + 1/2 + iu, p = m + 1:
//   (2^{2m+1}-1) zeta(2m+1) = i (-1)^p / pi^{2p+1} int Gamma(2p-2v) pi^{2v} / sin(pi v)
//                              sum_k (-1)^k (k+1/2)^{2v-2p-2m-1} dv
//                            - (-1)^m pi^{2m} euler_digamma_value(m)
// U doubles until three successive doublings each change the value by < tol.
MellinBarnesResult mellin_barnes_zeta_odd(int m, double tol = 1e-10);

// kappa = pi (k + 1/2)
// lhs = (-1)^p Gamma(2p) [E_{2p}(-i kappa) + E_{2p}(i kappa)] / kappa^{2p-1}
// rhs = 2 (-1)^k sum_{j=1}^{p-1} (-1)^j Gamma(2j) / kappa^{2j} - 2 (Si(kappa) - pi/2)
RealPair even_order_pair_si_identity(int k, int p);

// 1F2(a; b1, b2; x) by its power series, summed in long double.
double hyp1f2(double a, double b1, double b2, double x);

// 1F2(1/2-p; 1/2, 3/2-p; -kappa^2/4) against the 1F2(1/2; 3/2, 3/2; -kappa^2/4)
// form plus a finite sum.  p >= 2.
RealPair hypergeometric_1f2_identity(int k, int p);

// Finite Si-plus-sum value assigned to the divergent
// 3F0(1, p, p+1/2; ; -4 / (pi^2 (k+1/2)^2)).  p >= 1.
double regularized_3F0(int p, int k);
// p = 1 closed form -pi^2 (-1)^k (k+1/2)^2 (Si(kappa) - pi/2)
double regularized_3F0_unit(int k);

// E_{2p}(-i kappa) + E_{2p}(i kappa) against -2 (-1)^k regularized_3F0(p, k) / kappa
RealPair regularized_3F0_pair_identity(int p, int k);

// sum_{j<=p-2} Gamma(2j+2) (-1)^j / (pi (k+1/2))^{2j} against
// regularized_3F0(1, k) + Gamma(2p) (-1)^p regularized_3F0(p, k) / (pi (k+1/2))^{2p-2}
RealPair regularized_3F0_split_identity(int p, int k);

// sum_j psi(2j+1) (-1)^j kappa^{2j} / (2j)! against -(-1)^k Si(kappa)
RealPair digamma_sine_series_identity(int k);

struct SiSplitResult
{
   // int_1^inf sin(kappa_j v) / v dv against pi/2 - Si(kappa_j), j = 0..5
   std::vector<RealPair> tails;
   Rational euler_side;
   Rational bernoulli_side;
   // coefficient of Euler's gamma in the psi-weighted Euler sum
   Rational gamma_coefficient;
   bool exact() const { return euler_side == bernoulli_side && gamma_coefficient == 0; }
};

SiSplitResult si_split_identity(int m);

} // namespace zetakit

#endif
