#pragma once

// Exact Fourier-side solution of i^beta d_t^alpha u = -Laplace u:
//
//   u_hat(xi, t) = E_{alpha,1}(kappa) u0_hat(xi),   kappa = (-i)^beta |xi|^2 t^alpha,
//
// and its radial derivative
//
//   d_rho u_hat = 2/alpha (-i)^beta t^alpha rho E_{alpha,alpha}(kappa) f(rho)
//                 + E_{alpha,1}(kappa) f'(rho).

#include "fqd/datum.hpp"
#include "fqd/indices.hpp"
#include "fqd/mittag_leffler.hpp"
#include "fqd/quadrature.hpp"

#include <vector>

namespace fqd {

/// rho^2 t^alpha exp(-i pi beta / 2).
Complex kappa(const FractionalIndices& idx, double rho, double t);

struct ModeState {
    double rho = 0.0;
    double t = 0.0;
    Complex u_hat;
    Complex du_hat_drho;
};

/// Holds the two Mittag-Leffler evaluators a given (alpha, beta) needs.
class Propagator {
public:
    explicit Propagator(FractionalIndices idx, MLConfig config = {});

    Complex kappa(double rho, double t) const;
    Complex mode(const InitialDatum& datum, double rho, double t) const;
    Complex grad(const InitialDatum& datum, double rho, double t) const;
    ModeState state(const InitialDatum& datum, double rho, double t) const;

    const FractionalIndices& indices() const noexcept { return idx_; }
    const MittagLeffler& e_alpha_1() const noexcept { return e1_; }
    const MittagLeffler& e_alpha_alpha() const noexcept { return ea_; }

private:
    FractionalIndices idx_;
    Complex phase_;  // (-i)^beta
    MittagLeffler e1_;
    MittagLeffler ea_;
};

Complex propagate_mode(const FractionalIndices& idx, const InitialDatum& datum, double rho,
                       double t);
Complex grad_mode(const FractionalIndices& idx, const InitialDatum& datum, double rho, double t);

/// sigma_{d-1} int |g(rho)|^2 rho^{d-1} drho over the datum's support.
/// Throws ConvergenceError if the quadrature misses its tolerance.
double radial_norm_sq(const std::function<double(double)>& g, const InitialDatum& datum,
                      const QuadratureSpec& quad = {});

struct InterpolationCheck {
    double lhs = 0.0;  // || rho^2 f ||
    double rhs = 0.0;  // alpha || rho^{2/alpha} f || + (1 - alpha) || f ||
    bool ok = false;   // lhs <= rhs (1 + 1e-10)
};

/// Interpolation inequality between D(H0) and D(H0^{1/alpha}) for the datum.
InterpolationCheck sobolev_interp_check(const InitialDatum& datum, double alpha,
                                        const QuadratureSpec& quad = {});

/// domain_norm accepts an unconverged quadrature whose error estimate is
/// below this fraction of the value.
inline constexpr double kDomainNormAcceptRel = 1e-6;

/// sqrt(||u_hat(t)||^2 + ||rho^2 u_hat(t)||^2).
double domain_norm(const Propagator& prop, const InitialDatum& datum, double t,
                   const QuadratureSpec& quad = {});

struct EnvelopeReport {
    std::vector<double> times;
    std::vector<double> norms;
    double initial_norm = 0.0;
    /// max_t g(t) / g(0) and min_t g(t) / g(0).
    double sup_ratio = 0.0;
    double min_ratio = 0.0;
    /// cos(pi beta / (2 alpha)) L+^{2/alpha} for beta < alpha, else 0.
    double envelope_rate = 0.0;
    /// max_t g(t) exp(-envelope_rate t) / g(0).
    double sup_normalized = 0.0;
    /// Least-squares slope of log g(t) over t >= fit_from.
    double log_slope = 0.0;
    /// cos(pi beta / (2 alpha)) L-^{2/alpha} and ... L+^{2/alpha} (beta < alpha).
    double slope_lo = 0.0;
    double slope_hi = 0.0;
    /// beta >= alpha: sup_ratio < 10. beta < alpha: g e^{-rate t} is
    /// non-increasing within 5% for t >= T/10.
    bool bounded = false;
};

/// Samples g(t) = ||u_hat(t)||_{D(H0)} on the uniform grid T k / n, k = 1..n.
/// fit_from <= 0 selects T/3.
EnvelopeReport norm_envelope_check(const FractionalIndices& idx, const InitialDatum& datum,
                                   double T, int n_samples, const QuadratureSpec& quad = {},
                                   double fit_from = 0.0);

}  // namespace fqd
