#pragma once

// Mean-square displacement of the fractional evolution, computed on the
// Fourier side: D2(t) = || grad u_hat(., t) ||^2, which for radial data is
//
//   D2(t) = sigma_{d-1} int_0^inf |d_rho u_hat(rho, t)|^2 rho^{d-1} drho.

#include "fqd/datum.hpp"
#include "fqd/indices.hpp"
#include "fqd/quadrature.hpp"
#include "fqd/spectral.hpp"

#include <string>
#include <vector>

namespace fqd {

/// Exponent budget for D2 in the growth regime: 2 cos(pi beta/(2 alpha)) L+^{2/alpha} t
/// may not exceed this.
inline constexpr double kOverflowExponent = 690.0;
/// Fit horizon in the growth regime: T_max = kHorizonExponent / r_plus.
inline constexpr double kHorizonExponent = 600.0;

struct MsdPoint {
    double t = 0.0;
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
};

/// D2 at a single time with its quadrature error estimate. Throws
/// OverflowError past the growth-regime exponent budget and
/// WrongRegimeError for non-compact data when beta < alpha.
MsdPoint msd_point(const Propagator& prop, const InitialDatum& datum, double t,
                   const QuadratureSpec& quad = {});

/// D2(u0, t).
double msd_at(const FractionalIndices& idx, const InitialDatum& datum, double t,
              const QuadratureSpec& quad = {});

struct MsdSeries {
    std::vector<double> times;
    std::vector<double> values;
    std::vector<double> errors;
    FractionalIndices idx;
    std::string datum_id;
    int dimension = 1;
    QuadratureSpec quad;
    /// Every point met its quadrature tolerance.
    bool converged = true;

    /// Throws DomainError unless times increase strictly and values are finite and >= 0.
    void validate() const;
};

MsdSeries msd_series(const FractionalIndices& idx, const InitialDatum& datum,
                     const std::vector<double>& times, const QuadratureSpec& quad = {});

/// Log-spaced grid from t_min to t_max, points_per_decade per factor of 10,
/// always including both ends.
std::vector<double> log_grid(double t_min, double t_max, int points_per_decade);

/// || |xi|^{-2} (grad u0_hat / Gamma(1-alpha) + 2 |xi|^{-2} xi u0_hat / (alpha Gamma(-alpha))) ||^2,
/// the coefficient of t^{-2 alpha} for alpha < beta. Needs annulus data (L- > 0).
double coeff_regime1(const InitialDatum& datum, double alpha, const QuadratureSpec& quad = {});

/// (4 / alpha^4) || |xi|^{(2-alpha)/alpha} u0_hat ||^2, the coefficient of t^2 for alpha = beta.
double coeff_regime2(const InitialDatum& datum, double alpha, const QuadratureSpec& quad = {});

struct RateBounds {
    double r_minus = 0.0;
    double r_plus = 0.0;
};

/// r_-+ = 2 cos(pi beta / (2 alpha)) L_-+^{2/alpha} for alpha > beta.
RateBounds rate_bounds_regime3(const FractionalIndices& idx, const InitialDatum& datum);

/// Same bracket with cos(pi beta / alpha) in place of cos(pi beta / (2 alpha)).
/// Reported for comparison only.
RateBounds rate_bounds_regime3_alt(const FractionalIndices& idx, const InitialDatum& datum);

/// kHorizonExponent / r_plus.
double regime3_horizon(const FractionalIndices& idx, const InitialDatum& datum);

/// Leading large-t term of D2 for alpha > beta: the gradient with E_{alpha,1}
/// and E_{alpha,alpha} replaced by their exponential parts,
///   sigma int |(1/alpha) e^{k^{1/alpha}} (2/alpha (-i)^beta t^alpha rho k^{(1-alpha)/alpha} f + f')|^2 rho^{d-1},
/// k = kappa(rho, t). The algebraic remainders are exponentially smaller.
double leading_regime3(const FractionalIndices& idx, const InitialDatum& datum, double t,
                       const QuadratureSpec& quad = {});

}  // namespace fqd
