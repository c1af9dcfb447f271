#pragma once

#include <string_view>

namespace fqd {

/// Long-time behavior of the mean-square displacement.
enum class Regime {
    SubordinateDecay,   // alpha < beta: D2 ~ C t^{-2 alpha}
    Ballistic,          // alpha = beta: D2 ~ C t^2
    ExponentialGrowth,  // alpha > beta: D2 grows like exp(r t)
};

std::string_view regime_name(Regime r) noexcept;

/// Time order alpha and phase order beta of i^beta d_t^alpha u = -Laplace u.
struct FractionalIndices {
    double alpha = 1.0;
    double beta = 1.0;

    /// Throws DomainError unless both lie in (0, 1].
    void validate() const;

    /// Exact comparison of the stored values; the regime map is discontinuous
    /// at alpha = beta, so no tolerance applies.
    Regime regime() const noexcept;
};

}  // namespace fqd
