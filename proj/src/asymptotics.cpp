#include "fqd/asymptotics.hpp"

#include "fqd/errors.hpp"

#include <algorithm>
#include <cmath>

namespace fqd {

Regime classify_regime(const FractionalIndices& idx, double ballistic_tolerance)
{
    if (std::fabs(idx.alpha - idx.beta) <= ballistic_tolerance)
        return Regime::Ballistic;
    return idx.alpha < idx.beta ? Regime::SubordinateDecay : Regime::ExponentialGrowth;
}

namespace {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0))
        throw DegenerateFitError("fit: all sample times are equal");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        ss_res += r * r;
    }
    f.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return f;
}

void check_samples(std::span<const double> times, std::span<const double> values)
{
    if (times.size() != values.size())
        throw DegenerateFitError("fit: times and values differ in length");
    if (times.size() < kMinFitSamples)
        throw DegenerateFitError("fit: need at least 10 samples");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(values[i] > 0.0) || !std::isfinite(values[i]))
            throw DegenerateFitError("fit: values must be finite and positive");
        if (!std::isfinite(times[i]))
            throw DegenerateFitError("fit: times must be finite");
    }
    const auto [lo, hi] = std::minmax_element(times.begin(), times.end());
    if (*lo == *hi)
        throw DegenerateFitError("fit: all sample times are equal");
}

}  // namespace

PowerLawFit fit_power_law(std::span<const double> times, std::span<const double> values)
{
    check_samples(times, values);
    std::vector<double> x, y;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0))
            throw DegenerateFitError("fit: power-law fit needs positive times");
        x.push_back(std::log(times[i]));
        y.push_back(std::log(values[i]));
    }
    const LineFit f = least_squares(x, y);
    return {f.slope, std::exp(f.intercept), f.r_squared};
}

PowerLawFit fit_power_law(const MsdSeries& series)
{
    return fit_power_law(series.times, series.values);
}

ExponentialFit fit_exponential_rate(std::span<const double> times, std::span<const double> values)
{
    check_samples(times, values);
    std::vector<double> x, y;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0))
            throw DegenerateFitError("fit: exponential fit needs positive times");
        x.push_back(times[i]);
        y.push_back(std::log(values[i]) - std::log(times[i]));
    }
    const LineFit f = least_squares(x, y);
    return {f.slope, f.intercept, f.r_squared};
}

ExponentialFit fit_exponential_rate(const MsdSeries& series)
{
    return fit_exponential_rate(series.times, series.values);
}

FitWindow default_window(const FractionalIndices& idx, const InitialDatum& datum)
{
    idx.validate();
    switch (idx.regime()) {
    case Regime::SubordinateDecay:
        return {1e2, 1e5, 40};
    case Regime::Ballistic:
        return {1e3, 1e4, 40};
    case Regime::ExponentialGrowth: {
        const RateBounds r = rate_bounds_regime3(idx, datum);
        const double mid = 0.5 * (r.r_minus + r.r_plus);
        return {std::max(5.0, 10.0 / mid), regime3_horizon(idx, datum), 40};
    }
    }
    return {};
}

RegimeReport verify(const FractionalIndices& idx, const InitialDatum& datum,
                    const std::vector<double>& t_grid, const QuadratureSpec& quad)
{
    idx.validate();
    RegimeReport rep;
    rep.regime = classify_regime(idx);
    if (rep.regime == Regime::ExponentialGrowth && !t_grid.empty()
        && t_grid.back() > regime3_horizon(idx, datum) * (1.0 + 1e-12))
        throw OverflowError("time grid extends past the growth-regime horizon T_max = "
                            + std::to_string(regime3_horizon(idx, datum)));
    rep.series = msd_series(idx, datum, t_grid, quad);

    if (rep.regime == Regime::ExponentialGrowth) {
        const ExponentialFit f = fit_exponential_rate(rep.series);
        rep.fitted_rate = f.rate;
        rep.fitted_coefficient = std::exp(f.log_prefactor);
        rep.r_squared = f.r_squared;
        const RateBounds r = rate_bounds_regime3(idx, datum);
        rep.theory_rate_bracket = RateBracket{r.r_minus, r.r_plus};
        const double mid = 0.5 * (r.r_minus + r.r_plus);
        rep.deviations.rate_vs_midpoint = f.rate / mid - 1.0;
        rep.deviations.rate_in_bracket = f.rate >= r.r_minus && f.rate <= r.r_plus;
        return rep;
    }

    const PowerLawFit f = fit_power_law(rep.series);
    rep.fitted_exponent = f.exponent;
    rep.fitted_coefficient = f.coefficient;
    rep.r_squared = f.r_squared;
    if (rep.regime == Regime::Ballistic) {
        rep.theory_exponent = 2.0;
        rep.theory_coefficient = coeff_regime2(datum, idx.alpha, quad);
    } else {
        rep.theory_exponent = -2.0 * idx.alpha;
        if (datum.class_tag() == DatumClass::AnnulusBump && datum.lambda_minus() > 0.0)
            rep.theory_coefficient = coeff_regime1(datum, idx.alpha, quad);
    }
    rep.deviations.exponent = f.exponent - *rep.theory_exponent;
    if (rep.theory_coefficient && *rep.theory_coefficient > 0.0) {
        const double c = *rep.theory_coefficient;
        rep.deviations.coefficient = f.coefficient / c - 1.0;
        const double t_last = rep.series.times.back();
        rep.deviations.endpoint_coefficient =
            rep.series.values.back() * std::pow(t_last, -*rep.theory_exponent) / c - 1.0;
    }
    return rep;
}

RegimeReport verify(const FractionalIndices& idx, const InitialDatum& datum,
                    const QuadratureSpec& quad)
{
    const FitWindow w = default_window(idx, datum);
    return verify(idx, datum, log_grid(w.t_min, w.t_max, w.points_per_decade), quad);
}

}  // namespace fqd
