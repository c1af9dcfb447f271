#pragma once

// Large-t fits of sampled MSD series and comparison with the three-regime
// predictions: t^{-2 alpha} decay, t^2 ballistic growth, exponential growth.

#include "fqd/datum.hpp"
#include "fqd/indices.hpp"
#include "fqd/msd.hpp"
#include "fqd/quadrature.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fqd {

/// Minimum number of samples accepted by the fits.
inline constexpr std::size_t kMinFitSamples = 10;

/// Regime of (alpha, beta). |alpha - beta| <= ballistic_tolerance counts as
/// ballistic; the default 0 means exact equality.
Regime classify_regime(const FractionalIndices& idx, double ballistic_tolerance = 0.0);

struct PowerLawFit {
    double exponent = 0.0;
    double coefficient = 0.0;
    double r_squared = 0.0;
};

struct ExponentialFit {
    double rate = 0.0;
    double log_prefactor = 0.0;
    double r_squared = 0.0;
};

/// OLS of log D2 against log t; coefficient = exp(intercept).
PowerLawFit fit_power_law(std::span<const double> times, std::span<const double> values);
PowerLawFit fit_power_law(const MsdSeries& series);

/// OLS of (log D2 - log t) against t; rate = slope, log_prefactor = intercept.
ExponentialFit fit_exponential_rate(std::span<const double> times, std::span<const double> values);
ExponentialFit fit_exponential_rate(const MsdSeries& series);

struct FitWindow {
    double t_min = 0.0;
    double t_max = 0.0;
    int points_per_decade = 40;
};

/// Default fitting window: [1e2, 1e5] for alpha < beta, [1e3, 1e4] for
/// alpha = beta, [max(5, 10 / r), T_max] for alpha > beta with r the middle
/// of the rate bracket.
FitWindow default_window(const FractionalIndices& idx, const InitialDatum& datum);

struct RateBracket {
    double lo = 0.0;
    double hi = 0.0;
};

struct RegimeDeviations {
    /// fitted_exponent - theory_exponent (regimes 1 and 2).
    std::optional<double> exponent;
    /// fitted_coefficient / theory_coefficient - 1 (regimes 1 and 2).
    std::optional<double> coefficient;
    /// D2(t_last) t_last^{-theory_exponent} / theory_coefficient - 1 (regimes 1 and 2).
    std::optional<double> endpoint_coefficient;
    /// fitted_rate / bracket midpoint - 1 (regime 3).
    std::optional<double> rate_vs_midpoint;
    /// lo <= fitted_rate <= hi (regime 3).
    std::optional<bool> rate_in_bracket;
};

struct RegimeReport {
    Regime regime = Regime::Ballistic;
    std::optional<double> fitted_exponent;
    std::optional<double> fitted_rate;
    double fitted_coefficient = 0.0;
    std::optional<double> theory_exponent;
    std::optional<double> theory_coefficient;
    std::optional<RateBracket> theory_rate_bracket;
    double r_squared = 0.0;
    RegimeDeviations deviations;
    /// Sampled series the fit was run on.
    MsdSeries series;
};

/// Samples D2 on t_grid, runs the fit appropriate to the regime of idx and
/// fills the theory fields. In the growth regime t_grid must end at or before
/// regime3_horizon(); an OverflowError is raised otherwise.
RegimeReport verify(const FractionalIndices& idx, const InitialDatum& datum,
                    const std::vector<double>& t_grid, const QuadratureSpec& quad = {});

/// verify() on log_grid(default_window(idx, datum)).
RegimeReport verify(const FractionalIndices& idx, const InitialDatum& datum,
                    const QuadratureSpec& quad = {});

}  // namespace fqd
