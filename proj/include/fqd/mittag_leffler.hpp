#pragma once

// Two-parameter Mittag-Leffler function
//
//   E_{alpha,gamma}(z) = sum_{n>=0} z^n / Gamma(alpha n + gamma),
//
// evaluated for complex z on and near the rays arg z = -pi beta / 2,
// 0 < beta <= 1, that carry the fractional propagator.
//
// Small |z| uses the Taylor series (in double-double arithmetic once
// cancellation sets in); large |z| uses the Poincare expansions
//
//   E(z) ~ (1/alpha) z^{(1-gamma)/alpha} exp(z^{1/alpha}) - sum_k z^{-k}/Gamma(gamma - alpha k)
//
// with the exponential term present only for |arg z| < pi alpha.

#include "fqd/double_double.hpp"

#include <complex>
#include <vector>

namespace fqd {

using Complex = std::complex<double>;

/// z^w on the principal branch, z^w = exp(w (ln|z| + i arg z)), arg z in (-pi, pi].
Complex principal_pow(Complex z, double w);

/// (-i)^beta = exp(-i pi beta / 2).
Complex minus_i_pow(double beta);

/// i^beta = exp(i pi beta / 2).
Complex i_pow(double beta);

struct MLParams {
    double alpha = 1.0;
    double gamma = 1.0;

    /// Throws DomainError unless 0 < alpha <= 1 and gamma is finite.
    void validate() const;
};

enum class Sector { Algebraic, Exponential };

/// Sector data of the ray arg z = -pi beta / 2 for E_{alpha, .}.
struct SectorInfo {
    double arg_kappa = 0.0;
    Sector sector = Sector::Exponential;
    /// Midpoint of the admissible opening angle; documentation only.
    double mu = 0.0;
};

SectorInfo sector_info(double alpha, double beta);

/// |z|^{1/alpha} at which the dispatcher switches from series to asymptotics.
inline constexpr double kCrossoverScale = 30.0;

/// |z|^{1/alpha} above which the series is summed in double-double.
inline constexpr double kCompensatedScale = 2.0;

inline constexpr int kDefaultAsymptoticTerms = 6;

/// Series/asymptotic crossover radius, kCrossoverScale^alpha.
double default_crossover_radius(double alpha);

struct MLConfig {
    /// Crossover radius; <= 0 selects default_crossover_radius(alpha).
    double crossover_radius = 0.0;
    int max_series_terms = 2000;
    int max_asymptotic_terms = 400;
};

/// Evaluator for one (alpha, gamma). Immutable after construction, so a
/// single instance may be shared between threads.
class MittagLeffler {
public:
    explicit MittagLeffler(MLParams params, MLConfig config = {});

    /// Dispatched evaluation: series below the crossover radius, the
    /// sector-appropriate optimally truncated expansion above it.
    Complex operator()(Complex z) const;

    /// Taylor series; stops once the geometric tail bound falls below
    /// tol * |partial sum|. Throws ConvergenceError past max_series_terms.
    Complex series(Complex z, double tol) const;

    /// -sum_{k=1}^{n_terms} z^{-k} / Gamma(gamma - alpha k); pole terms are zero.
    Complex asymptotic_algebraic(Complex z, int n_terms) const;

    /// (1/alpha) z^{(1-gamma)/alpha} exp(z^{1/alpha}) plus the algebraic tail.
    /// Throws OverflowError when the exponential leaves the double range.
    Complex asymptotic_exponential(Complex z, int n_terms) const;

    const MLParams& params() const noexcept { return params_; }
    double crossover_radius() const noexcept { return crossover_; }

private:
    Complex algebraic_tail(Complex z, int max_terms, bool optimal) const;
    Complex exponential_term(Complex z) const;
    dd::Real series_coefficient(int n) const;
    double tail_coefficient(int k) const;
    double tail_log_envelope(int k) const;

    MLParams params_;
    MLConfig config_;
    double crossover_;
    std::vector<dd::Real> series_coef_;  // 1/Gamma(alpha n + gamma)
    std::vector<double> tail_coef_;      // 1/Gamma(gamma - alpha k), index k-1
    std::vector<double> tail_log_env_;   // log(Gamma(alpha k + 1 - gamma) / pi)
};

// One-shot conveniences. Each builds a MittagLeffler; hot loops should hold
// an evaluator instead.
Complex ml_series(MLParams params, Complex z, double tol, int max_terms = 2000);
Complex ml_asymptotic_algebraic(MLParams params, Complex z, int n_terms);
Complex ml_asymptotic_exponential(MLParams params, Complex z, int n_terms);
Complex ml_eval(MLParams params, Complex z);

/// d/dz E_{alpha,1}(z) = E_{alpha,alpha}(z) / alpha.
Complex ml_derivative(double alpha, Complex z);

}  // namespace fqd
