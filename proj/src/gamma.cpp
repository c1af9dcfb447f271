#include "fqd/gamma.hpp"

#include "fqd/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fqd {

bool is_gamma_pole(double x) noexcept
{
    return x <= 0.0 && x == std::nearbyint(x);
}

double sin_pi(double x) noexcept
{
    // Reduce to r in [-0.5, 0.5]; x - round(x) is exact in floating point.
    const double n = std::nearbyint(x);
    const double r = x - n;
    if (r == 0.0)
        return 0.0;
    const double s = std::sin(std::numbers::pi * r);
    const bool odd = std::fmod(std::fabs(n), 2.0) == 1.0;
    return odd ? -s : s;
}

double gamma_fn(double x)
{
    if (std::isnan(x))
        throw DomainError("gamma_fn: NaN argument");
    if (is_gamma_pole(x))
        throw PoleError("gamma_fn: pole at x = " + std::to_string(x));
    if (x >= 0.5)
        return std::tgamma(x);
    return std::numbers::pi / (sin_pi(x) * std::tgamma(1.0 - x));
}

double recip_gamma(double x) noexcept
{
    if (is_gamma_pole(x))
        return 0.0;
    if (x >= 0.5)
        return 1.0 / std::tgamma(x);
    // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi. Beyond the overflow point of
    // Gamma(1 - x) go through logs.
    const double s = sin_pi(x);
    const double g = std::tgamma(1.0 - x);
    if (std::isfinite(g))
        return s * g / std::numbers::pi;
    return s * std::exp(std::lgamma(1.0 - x) - std::log(std::numbers::pi));
}

double unit_sphere_area(int dimension)
{
    if (dimension < 1)
        throw DomainError("dimension must be >= 1");
    const double half = 0.5 * dimension;
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

}  // namespace fqd
