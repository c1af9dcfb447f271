#pragma once

#include <string>

namespace fqd {

enum class DatumClass { GaussianSchwartz, AnnulusBump };

/// Radially symmetric initial state given on the Fourier side:
/// u0_hat(xi) = f(|xi|) in dimension d.
///
///  - GaussianSchwartz: f(rho) = A exp(-rho^2 / 2), support [0, inf).
///  - AnnulusBump: f(rho) = A exp(-1 / (1 - s^2)), s = (2 rho - L+ - L-) / (L+ - L-),
///    smooth and supported exactly in [L-, L+] with 0 < L- < L+.
class InitialDatum {
public:
    static InitialDatum gaussian(int dimension);
    static InitialDatum annulus(double lambda_minus, double lambda_plus, int dimension);

    /// Copy with the profile multiplied by `amplitude` (>= 0).
    InitialDatum scaled(double amplitude) const;
    /// Same profile, different ambient dimension.
    InitialDatum with_dimension(int dimension) const;

    double profile(double rho) const noexcept;
    double profile_deriv(double rho) const noexcept;

    DatumClass class_tag() const noexcept { return class_; }
    double lambda_minus() const noexcept { return lambda_minus_; }
    /// +infinity for the Gaussian.
    double lambda_plus() const noexcept { return lambda_plus_; }
    int dimension() const noexcept { return dimension_; }
    double amplitude() const noexcept { return amplitude_; }

    /// Radial integration range: the support, with the Gaussian truncated
    /// where exp(-rho^2) is far below double precision.
    double support_lo() const noexcept;
    double support_hi() const noexcept;

    /// Short identifier, e.g. "gaussian" or "annulus[1,2]".
    std::string id() const;

private:
    InitialDatum(DatumClass c, double lm, double lp, int d, double a);

    DatumClass class_;
    double lambda_minus_;
    double lambda_plus_;
    int dimension_;
    double amplitude_;
};

/// Gaussian profiles are integrated over [0, kGaussianCutoff]; exp(-64) ~ 1.6e-28.
inline constexpr double kGaussianCutoff = 8.0;

}  // namespace fqd
