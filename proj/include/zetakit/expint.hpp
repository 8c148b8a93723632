// Generalized exponential integral E_s(z) = int_1^inf v^{-s} e^{-zv} dv
// and its order derivatives.

#ifndef ZETAKIT_EXPINT_HPP
#define ZETAKIT_EXPINT_HPP

#include "zetakit/core.hpp"

namespace zetakit {

inline constexpr double default_expint_tol = 1e-12;

// E_s(z) for Re z >= 0, z != 0 (z = 0 allowed when Re s > 1).
// Continued fraction for |z| >= 1.5, rotated-ray quadrature otherwise.
SeriesResult expint_E(complex s, complex z, double tol = default_expint_tol);

// E_{-m}(z) = m! e^{-z} z^{-m-1} sum_{j<=m} z^j / j!
complex expint_E_negint(int m, complex z);

// E_s^j(z) = ((-1)^j / j!) d^j/ds^j E_s(z), j in {0, 1, 2}.
// Taylor coefficients are read off a circle of radius 1/2 around s.  With
// cross_check the result is tested against
//   (1 - s) E_s^j(z) = z E_{s-1}^j(z) - E_s^{j-1}(z),   E_s^{-1}(z) = e^{-z}.
SeriesResult expint_order_derivative(int j, complex s, complex z, double tol = default_expint_tol,
                                     bool cross_check = true);

// E_s(i pi (k+1/2)) + sign * E_s(-i pi (k+1/2)), sign = +1 or -1.
complex t_pair(std::size_t k, complex s, int sign, double tol = default_expint_tol);

// Same combination for the order derivative E_s^j.
complex t_pair_derivative(int j, std::size_t k, complex s, int sign, double tol = default_expint_tol);

} // namespace zetakit

#endif
