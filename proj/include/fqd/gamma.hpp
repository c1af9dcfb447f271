#pragma once

namespace fqd {

/// True when x is exactly 0, -1, -2, ...
bool is_gamma_pole(double x) noexcept;

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x) noexcept;

/// Gamma(x). Negative non-integers go through the reflection formula
/// Gamma(x) Gamma(1-x) = pi / sin(pi x). Throws PoleError at 0, -1, -2, ...
double gamma_fn(double x);

/// 1/Gamma(x), an entire function: exactly zero at the poles of Gamma.
double recip_gamma(double x) noexcept;

/// Surface area of the unit sphere S^{d-1} in R^d, 2 pi^{d/2} / Gamma(d/2).
/// sigma_0 = 2 counts the two half-lines of R.
double unit_sphere_area(int dimension);

}  // namespace fqd
