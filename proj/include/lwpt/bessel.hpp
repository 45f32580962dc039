#ifndef LWPT_BESSEL_HPP
#define LWPT_BESSEL_HPP

namespace lwpt {

/**
 * Exponentially scaled modified Bessel function of the first kind,
 * order zero: exp(-|x|) * I0(x).
 *
 * Chebyshev expansions on [0,8] and (8,inf), accurate to full double
 * precision. Safe for arbitrarily large x (no overflow).
 */
double bessel_i0e(double x);

/// Modified Bessel function I0(x). Overflows for x > ~709.
double bessel_i0(double x);

/**
 * Normalized Airy pattern factor (2*J1(zeta)/zeta)^2.
 *
 * Equals 1 at zeta = 0 (series evaluation for |zeta| < 1e-4) and is
 * bounded to [0, 1] everywhere.
 */
double airy_pattern(double zeta);

}  // namespace lwpt

#endif
