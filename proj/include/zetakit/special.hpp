// Classical special functions over complex binary64.

#ifndef ZETAKIT_SPECIAL_HPP
#define ZETAKIT_SPECIAL_HPP

#include "zetakit/core.hpp"

namespace zetakit {

// Gamma via a 15-term Lanczos sum (g = 607/128), reflected for Re z < 1/2.
complex gamma(complex z);
complex log_gamma(complex z);
// 1/Gamma(z); entire, exactly zero at the non-positive integers.
complex rgamma(complex z);

complex digamma(complex z);
double digamma(double x);
// n-th derivative of digamma for real x > 0.
double polygamma(int n, double x);

double sine_integral(double x);
double cosine_integral(double x);

// C(x) = int_0^x cos(pi t^2 / 2) dt
double fresnel_c(double x);

// Li_j(x) = sum x^n / n^j on 0 < x < 1
double polylog(int j, double x);

double erf_real(double x);
double erfc_real(double x);

// 1/sinh(x) - 1/x, finite at 0.
double csch_minus_inverse(double x);

// Rising factorial (s)_n.
complex pochhammer(complex s, int n);

} // namespace zetakit

#endif
