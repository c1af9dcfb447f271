#include "fqd/msd.hpp"

#include "fqd/errors.hpp"
#include "fqd/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fqd {

namespace {

double radial_weight(double rho, int d)
{
    return d == 1 ? 1.0 : std::pow(rho, d - 1);
}

double upper_limit(const InitialDatum& datum, const QuadratureSpec& quad)
{
    return quad.rho_max > 0.0 ? quad.rho_max : datum.support_hi();
}

void check_growth_budget(const FractionalIndices& idx, const InitialDatum& datum, double t)
{
    if (idx.regime() != Regime::ExponentialGrowth)
        return;
    if (datum.class_tag() != DatumClass::AnnulusBump)
        throw WrongRegimeError("beta < alpha needs compactly supported (annulus) data");
    const RateBounds r = rate_bounds_regime3(idx, datum);
    if (r.r_plus * t > kOverflowExponent) {
        std::ostringstream os;
        os << "D2 overflows double precision: exponent " << r.r_plus * t << " > "
           << kOverflowExponent << " at t = " << t;
        throw OverflowError(os.str());
    }
}

}  // namespace

MsdPoint msd_point(const Propagator& prop, const InitialDatum& datum, double t,
                   const QuadratureSpec& quad)
{
    if (!(t >= 0.0))
        throw DomainError("msd: t must be non-negative");
    check_growth_budget(prop.indices(), datum, t);
    const int d = datum.dimension();
    auto integrand = [&](double rho) {
        return std::norm(prop.grad(datum, rho, t)) * radial_weight(rho, d);
    };
    const QuadResult r = integrate(integrand, datum.support_lo(), upper_limit(datum, quad), quad);
    if (!std::isfinite(r.value))
        throw OverflowError("D2 is not finite at t = " + std::to_string(t));
    const double sigma = unit_sphere_area(d);
    return {t, sigma * r.value, sigma * r.error, r.converged};
}

double msd_at(const FractionalIndices& idx, const InitialDatum& datum, double t,
              const QuadratureSpec& quad)
{
    return msd_point(Propagator(idx), datum, t, quad).value;
}

void MsdSeries::validate() const
{
    if (times.size() != values.size())
        throw DomainError("MsdSeries: times and values differ in length");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0) || (i > 0 && !(times[i] > times[i - 1])))
            throw DomainError("MsdSeries: times must be positive and strictly increasing");
        if (!std::isfinite(values[i]) || values[i] < 0.0)
            throw DomainError("MsdSeries: values must be finite and non-negative");
    }
}

MsdSeries msd_series(const FractionalIndices& idx, const InitialDatum& datum,
                     const std::vector<double>& times, const QuadratureSpec& quad)
{
    const Propagator prop(idx);
    MsdSeries s;
    s.idx = idx;
    s.datum_id = datum.id();
    s.dimension = datum.dimension();
    s.quad = quad;
    for (double t : times) {
        const MsdPoint p = msd_point(prop, datum, t, quad);
        s.times.push_back(t);
        s.values.push_back(p.value);
        s.errors.push_back(p.error);
        s.converged = s.converged && p.converged;
    }
    s.validate();
    return s;
}

std::vector<double> log_grid(double t_min, double t_max, int points_per_decade)
{
    if (!(t_min > 0.0) || !(t_max > t_min))
        throw DomainError("time grid needs 0 < t_min < t_max");
    if (points_per_decade < 1)
        throw DomainError("points_per_decade must be >= 1");
    const double decades = std::log10(t_max / t_min);
    const int intervals = std::max(1, static_cast<int>(std::ceil(decades * points_per_decade - 1e-9)));
    std::vector<double> grid;
    grid.reserve(intervals + 1);
    for (int i = 0; i <= intervals; ++i)
        grid.push_back(t_min * std::pow(10.0, decades * i / intervals));
    grid.front() = t_min;
    grid.back() = t_max;
    return grid;
}

double coeff_regime1(const InitialDatum& datum, double alpha, const QuadratureSpec& quad)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("coeff_regime1: alpha must lie in (0,1)");
    if (datum.class_tag() != DatumClass::AnnulusBump || !(datum.lambda_minus() > 0.0))
        throw ConvergenceError(
            "coeff_regime1: |xi|^-4 weights diverge unless the support excludes the origin");
    const double g1 = 1.0 / gamma_fn(1.0 - alpha);
    const double g2 = 2.0 / (alpha * gamma_fn(-alpha));
    const int d = datum.dimension();
    auto integrand = [&](double rho) {
        const double v = (datum.profile_deriv(rho) * g1 + datum.profile(rho) * g2 / rho)
                         / (rho * rho);
        return v * v * radial_weight(rho, d);
    };
    const QuadResult r = integrate(integrand, datum.support_lo(), upper_limit(datum, quad), quad);
    if (!r.converged)
        throw ConvergenceError("coeff_regime1: quadrature did not converge");
    return unit_sphere_area(d) * r.value;
}

double coeff_regime2(const InitialDatum& datum, double alpha, const QuadratureSpec& quad)
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("alpha must lie in (0,1]");
    const double power = 2.0 * (2.0 - alpha) / alpha;
    const int d = datum.dimension();
    auto integrand = [&](double rho) {
        const double f = datum.profile(rho);
        return std::pow(rho, power) * f * f * radial_weight(rho, d);
    };
    const QuadResult r = integrate(integrand, datum.support_lo(), upper_limit(datum, quad), quad);
    if (!r.converged)
        throw ConvergenceError("coeff_regime2: quadrature did not converge");
    return 4.0 / std::pow(alpha, 4) * unit_sphere_area(d) * r.value;
}

namespace {

RateBounds bracket(const FractionalIndices& idx, const InitialDatum& datum, double angle)
{
    idx.validate();
    if (!(idx.alpha > idx.beta))
        throw WrongRegimeError("rate bounds apply only for alpha > beta");
    if (datum.class_tag() != DatumClass::AnnulusBump)
        throw WrongRegimeError("rate bounds need compactly supported (annulus) data");
    const double c = 2.0 * std::cos(angle);
    const double p = 2.0 / idx.alpha;
    return {c * std::pow(datum.lambda_minus(), p), c * std::pow(datum.lambda_plus(), p)};
}

}  // namespace

RateBounds rate_bounds_regime3(const FractionalIndices& idx, const InitialDatum& datum)
{
    return bracket(idx, datum, std::numbers::pi * idx.beta / (2.0 * idx.alpha));
}

RateBounds rate_bounds_regime3_alt(const FractionalIndices& idx, const InitialDatum& datum)
{
    return bracket(idx, datum, std::numbers::pi * idx.beta / idx.alpha);
}

double regime3_horizon(const FractionalIndices& idx, const InitialDatum& datum)
{
    return kHorizonExponent / rate_bounds_regime3(idx, datum).r_plus;
}

double leading_regime3(const FractionalIndices& idx, const InitialDatum& datum, double t,
                       const QuadratureSpec& quad)
{
    check_growth_budget(idx, datum, t);
    const double alpha = idx.alpha;
    const Complex phase = minus_i_pow(idx.beta);
    const double t_alpha = std::pow(t, alpha);
    const int d = datum.dimension();
    auto integrand = [&](double rho) {
        const Complex k = kappa(idx, rho, t);
        // Exponential parts of E_{alpha,alpha}(k) and E_{alpha,1}(k).
        const Complex growth = std::exp(principal_pow(k, 1.0 / alpha)) / alpha;
        const Complex g = growth
                          * (2.0 / alpha * phase * t_alpha * rho * principal_pow(k, (1.0 - alpha) / alpha)
                                 * datum.profile(rho)
                             + datum.profile_deriv(rho));
        return std::norm(g) * radial_weight(rho, d);
    };
    const QuadResult r = integrate(integrand, datum.support_lo(), upper_limit(datum, quad), quad);
    if (!r.converged)
        throw ConvergenceError("leading_regime3: quadrature did not converge");
    return unit_sphere_area(d) * r.value;
}

}  // namespace fqd
