// Series representations of eta(s) = (1 - 2^{1-s}) zeta(s), zeta(s) and
// zeta'(s) built on sums of E_s(+-i pi (k+1/2)), plus a reference zeta.
//
// Throughout, kappa_k = pi (k + 1/2) and the k-sums are accelerated
// according to SeriesConfig::acceleration.

#ifndef ZETAKIT_ZETA_HPP
#define ZETAKIT_ZETA_HPP

#include "zetakit/core.hpp"
#include "zetakit/numbertheory.hpp"

namespace zetakit {

// Reference zeta: accelerated alternating eta series for Re s >= 1/2, the
// functional equation below that, Euler-Maclaurin where 1 - 2^{1-s} is small.
complex zeta_ref(complex s);
// (1 - 2^{1-s}) zeta_ref(s), with eta(1) = ln 2.
complex eta_ref(complex s);

// eta(s) = -2^{s-1} sum_k [E_s(i kappa_k) + E_s(-i kappa_k)]
SeriesResult eta_via_expint_series(complex s, const SeriesConfig& cfg = {});

// eta(s) = 2^{s-1} sum_{j <= (n-1)/2} (s)_{2j} E(2j) / (2j)!
//        - 2^{s-1} (s)_n (-1/pi)^n i^n
//          * sum_k [E_{n+s}(-i kappa_k) + (-1)^n E_{n+s}(i kappa_k)] / (k+1/2)^n
// The two parts approach each other as n grows; their cancellation ratio
// is reported in the result.
SeriesResult eta_via_recursed_series(complex s, int n, const SeriesConfig& cfg = {});

// The same value with the k-sum cut after `terms` terms: plain partial sum
// for Acceleration::none, a fixed accelerated window otherwise.
complex eta_recursed_truncated(complex s, int n, std::size_t terms, Acceleration acceleration);

// zeta(s) from the reflected recursion
//   (2^s - 1) zeta(s) = -pi^{s-1} sin(pi s/2) sum_{j <= (n-1)/2} Gamma(2j+1-s) E(2j) / (2j)!
//     + pi^{s-n} i^n / (2 Gamma(s-n) cos(pi s/2))
//       * sum_k [E_{1+n-s}(-i kappa_k) + (-1)^n E_{1+n-s}(i kappa_k)] / (k+1/2)^n
// Integer s is routed explicitly: even s >= 2 to zeta_even_closed_form,
// odd s >= 3 to zeta_odd_via_e1_series, s = 1 is a pole, and s = 0 or a
// negative odd integer has no finite form (domain_error).
SeriesResult zeta_via_reflected_recursion(complex s, int n, const SeriesConfig& cfg = {});

// zeta(2m) = c_m pi^{2m} with the exact rational
//   c_m = (-1)^m / (2 (1 - 4^m)) sum_{j<m} E(2j) / ((2m-2j-1)! (2j)!)
Rational zeta_even_coefficient(int m);
double zeta_even_closed_form(int m);

// (2^{2m+1} - 1) zeta(2m+1) = -(-1)^m pi^{2m} S_m
//     + (i/pi) sum_k [E_1(i kappa_k) - E_1(-i kappa_k)] / (k+1/2)^{2m+1}
// with S_m = harmonic_euler_sum(m).  Returns zeta(2m+1).
SeriesResult zeta_odd_via_e1_series(int m, const SeriesConfig& cfg = {});

// zeta(2m+1) through the order-p form, p >= 1:
//   (2^{2m+1} - 1) zeta(2m+1)
//     = (-1)^p (p-1)! i^p / pi^p sum_k [E_p(-i kappa_k) + (-1)^p E_p(i kappa_k)] / (k+1/2)^{p+2m}
//     - (-1)^m pi^{2m} sum_{j=m+1}^{floor(p/2+m+1/2)-1} (2j-2m-1)! E(2j) / (2j)!
//     - (-1)^m pi^{2m} S_m
SeriesResult zeta_odd_via_order_p_series(int m, int p, const SeriesConfig& cfg = {});

struct ComplexPair
{
   complex lhs;
   complex rhs;
};

// For 0 <= p <= 2m:
//   pi^{p-2m} (-1)^m i^{-p} / p! sum_k [(-1)^p E_{-p}(i kappa_k) + E_{-p}(-i kappa_k)] / (k+1/2)^{2m-p}
//   = -sum_{j=floor(m-p/2+1/2)}^{m} E(2j) / ((2m-2j)! (2j)!)
ComplexPair negative_order_sum_identity(int m, int p, const SeriesConfig& cfg = {});

// sum_k [E_{-q}(i kappa_k) + sign E_{-q}(-i kappa_k)] / (k+1/2)^power
SeriesResult negative_order_kernel_sum(int q, int power, int sign, const SeriesConfig& cfg = {});

// k-th grouped term (2 C(sqrt(2k+1)) - 1) / sqrt(k+1/2) of the Fresnel series,
// and the same term from 2 sqrt(2) int_0^1 cos(pi (k+1/2) t^2) dt - 1/sqrt(k+1/2).
double fresnel_grouped_term(std::size_t k);
double cos_square_grouped_term(std::size_t k);
// zeta(1/2) = sum_k fresnel_grouped_term(k) / (1 - sqrt 2)
SeriesResult zeta_half_fresnel(const SeriesConfig& cfg = {});

// zeta'(s) from sums of the order derivative E^1:
//   (1 - 2^{1-s}) zeta'(s)
//     = 2^{s-1} sum_{j <= (n-1)/2} (psi(2j+s) - psi(s+n)) (s)_{2j} E(2j) / (2j)!
//     + 2^{s-1} i^n (-1)^n (s)_n / pi^n
//       * sum_k [E^1_{s+n}(-i kappa_k) + (-1)^n E^1_{s+n}(i kappa_k)] / (k+1/2)^n
//     + ((1 - 2^{2-s}) ln 2 + (psi(s+n) - psi(s)) (1 - 2^{1-s})) zeta(s)
// with psi differences taken as finite sums.  n = 0 is the plain form.
SeriesResult zeta_derivative_series(complex s, int n, const SeriesConfig& cfg = {});

// zeta(s) = (pi l)^{s/2} / Gamma(s/2) * ( sum_{n>=1} E_{1-s/2}(pi n^2 l)
//           + l^{-1/2} sum_{n>=1} E_{s/2+1/2}(pi n^2 / l) + 1/(sqrt(l)(s-1)) - 1/s )
// for |arg l| <= pi/2.
SeriesResult zeta_via_gaussian_expint(complex s, complex lambda = 1.0, const SeriesConfig& cfg = {});

// xi(s) = (s-1) pi^{-s/2} Gamma(1+s/2) zeta(s) from
//   pi (s-1) sum n^2 E_{-s/2}(pi n^2) - pi s sum n^2 E_{(s-1)/2}(pi n^2) + 4 pi sum n^2 e^{-pi n^2}
SeriesResult xi_via_expint_series(complex s, const SeriesConfig& cfg = {});
// zeta(s) recovered from xi_via_expint_series.
SeriesResult zeta_via_xi_series(complex s, const SeriesConfig& cfg = {});
complex xi_ref(complex s);
// 4 pi sum_{n>=1} n^2 e^{-pi n^2} = pi^{1/4} / (2 Gamma(3/4))
double gaussian_moment_sum();

} // namespace zetakit

#endif
