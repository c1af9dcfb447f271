#include "fqd/spectral.hpp"

#include "fqd/errors.hpp"
#include "fqd/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace fqd {

namespace {

void check_rho_t(double rho, double t)
{
    if (!(rho >= 0.0) || !(t >= 0.0))
        throw DomainError("rho and t must be non-negative");
}

double log_slope(const std::vector<double>& t, const std::vector<double>& g, double from)
{
    double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < from)
            continue;
        const double y = std::log(g[i]);
        n += 1;
        sx += t[i];
        sy += y;
        sxx += t[i] * t[i];
        sxy += t[i] * y;
    }
    const double den = n * sxx - sx * sx;
    return den > 0.0 ? (n * sxy - sx * sy) / den : 0.0;
}

}  // namespace

Complex kappa(const FractionalIndices& idx, double rho, double t)
{
    check_rho_t(rho, t);
    return rho * rho * std::pow(t, idx.alpha) * minus_i_pow(idx.beta);
}

Propagator::Propagator(FractionalIndices idx, MLConfig config)
    : idx_(idx),
      phase_(minus_i_pow(idx.beta)),
      e1_({idx.alpha, 1.0}, config),
      ea_({idx.alpha, idx.alpha}, config)
{
    idx_.validate();
}

Complex Propagator::kappa(double rho, double t) const
{
    check_rho_t(rho, t);
    return rho * rho * std::pow(t, idx_.alpha) * phase_;
}

Complex Propagator::mode(const InitialDatum& datum, double rho, double t) const
{
    const double f = datum.profile(rho);
    if (f == 0.0)
        return {0.0, 0.0};
    return e1_(kappa(rho, t)) * f;
}

Complex Propagator::grad(const InitialDatum& datum, double rho, double t) const
{
    const double f = datum.profile(rho);
    const double df = datum.profile_deriv(rho);
    if (f == 0.0 && df == 0.0)
        return {0.0, 0.0};
    const Complex k = kappa(rho, t);
    const double ta = std::pow(t, idx_.alpha);
    Complex out = e1_(k) * df;
    if (ta != 0.0 && f != 0.0)
        out += (2.0 / idx_.alpha) * phase_ * ta * rho * ea_(k) * f;
    return out;
}

ModeState Propagator::state(const InitialDatum& datum, double rho, double t) const
{
    return {rho, t, mode(datum, rho, t), grad(datum, rho, t)};
}

Complex propagate_mode(const FractionalIndices& idx, const InitialDatum& datum, double rho,
                       double t)
{
    return Propagator(idx).mode(datum, rho, t);
}

Complex grad_mode(const FractionalIndices& idx, const InitialDatum& datum, double rho, double t)
{
    return Propagator(idx).grad(datum, rho, t);
}

double radial_norm_sq(const std::function<double(double)>& g, const InitialDatum& datum,
                      const QuadratureSpec& quad)
{
    const int d = datum.dimension();
    const double hi = quad.rho_max > 0.0 ? quad.rho_max : datum.support_hi();
    auto integrand = [&](double rho) {
        const double v = g(rho);
        return v * v * (d == 1 ? 1.0 : std::pow(rho, d - 1));
    };
    const QuadResult r = integrate(integrand, datum.support_lo(), hi, quad);
    if (!r.converged || !std::isfinite(r.value))
        throw ConvergenceError("radial norm: quadrature did not converge");
    return unit_sphere_area(d) * r.value;
}

InterpolationCheck sobolev_interp_check(const InitialDatum& datum, double alpha,
                                        const QuadratureSpec& quad)
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("alpha must lie in (0,1]");
    auto weighted = [&](double power) {
        return std::sqrt(radial_norm_sq(
            [&](double rho) { return std::pow(rho, power) * datum.profile(rho); }, datum, quad));
    };
    InterpolationCheck out;
    out.lhs = weighted(2.0);
    out.rhs = alpha * weighted(2.0 / alpha) + (1.0 - alpha) * weighted(0.0);
    out.ok = out.lhs <= out.rhs * (1.0 + 1e-10);
    return out;
}

double domain_norm(const Propagator& prop, const InitialDatum& datum, double t,
                   const QuadratureSpec& quad)
{
    const int d = datum.dimension();
    const double hi = quad.rho_max > 0.0 ? quad.rho_max : datum.support_hi();
    auto integrand = [&](double rho) {
        const double m = std::norm(prop.mode(datum, rho, t));
        return m * (1.0 + rho * rho * rho * rho) * (d == 1 ? 1.0 : std::pow(rho, d - 1));
    };
    const QuadResult r = integrate(integrand, datum.support_lo(), hi, quad);
    if (!std::isfinite(r.value))
        throw OverflowError("domain norm is not finite at t = " + std::to_string(t));
    // The oscillatory cross term of |u_hat|^2 at large |kappa| can keep the
    // estimate just above a tight tolerance; the envelope checks only need a
    // few digits, so reject only estimates that are actually poor.
    if (!r.converged && !(r.error <= kDomainNormAcceptRel * std::fabs(r.value)))
        throw ConvergenceError("domain norm: quadrature did not converge");
    return std::sqrt(unit_sphere_area(d) * r.value);
}

EnvelopeReport norm_envelope_check(const FractionalIndices& idx, const InitialDatum& datum,
                                   double T, int n_samples, const QuadratureSpec& quad,
                                   double fit_from)
{
    idx.validate();
    if (!(T > 0.0))
        throw DomainError("norm_envelope_check: T must be positive");
    if (n_samples < 10)
        throw DomainError("norm_envelope_check: need at least 10 samples");

    EnvelopeReport rep;
    const bool growth = idx.beta < idx.alpha;
    if (growth) {
        if (datum.class_tag() != DatumClass::AnnulusBump)
            throw WrongRegimeError("beta < alpha needs compactly supported (annulus) data");
        const double c = std::cos(std::numbers::pi * idx.beta / (2.0 * idx.alpha));
        rep.envelope_rate = c * std::pow(datum.lambda_plus(), 2.0 / idx.alpha);
        rep.slope_lo = c * std::pow(datum.lambda_minus(), 2.0 / idx.alpha);
        rep.slope_hi = rep.envelope_rate;
        if (2.0 * rep.envelope_rate * T > 690.0)
            throw OverflowError("norm_envelope_check: T beyond the double-precision horizon");
    }

    const Propagator prop(idx);
    rep.initial_norm = domain_norm(prop, datum, 0.0, quad);
    rep.sup_ratio = 0.0;
    rep.min_ratio = std::numeric_limits<double>::infinity();
    rep.sup_normalized = 0.0;
    for (int k = 1; k <= n_samples; ++k) {
        const double t = T * k / n_samples;
        const double g = domain_norm(prop, datum, t, quad);
        rep.times.push_back(t);
        rep.norms.push_back(g);
        const double ratio = g / rep.initial_norm;
        rep.sup_ratio = std::max(rep.sup_ratio, ratio);
        rep.min_ratio = std::min(rep.min_ratio, ratio);
        rep.sup_normalized = std::max(rep.sup_normalized, ratio * std::exp(-rep.envelope_rate * t));
    }
    rep.log_slope = log_slope(rep.times, rep.norms, fit_from > 0.0 ? fit_from : T / 3.0);

    if (!growth) {
        rep.bounded = rep.sup_ratio < 10.0;
    } else {
        rep.bounded = true;
        double running_min = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < rep.times.size(); ++i) {
            if (rep.times[i] < T / 10.0)
                continue;
            const double h = rep.norms[i] * std::exp(-rep.envelope_rate * rep.times[i]);
            if (h > 1.05 * running_min)
                rep.bounded = false;
            running_min = std::min(running_min, h);
        }
    }
    return rep;
}

}  // namespace fqd
