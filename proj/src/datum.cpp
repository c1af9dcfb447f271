#include "fqd/datum.hpp"

#include "fqd/errors.hpp"
#include "fqd/indices.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fqd {

std::string_view regime_name(Regime r) noexcept
{
    switch (r) {
    case Regime::SubordinateDecay:
        return "SubordinateDecay";
    case Regime::Ballistic:
        return "Ballistic";
    case Regime::ExponentialGrowth:
        return "ExponentialGrowth";
    }
    return "unknown";
}

void FractionalIndices::validate() const
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("alpha must lie in (0,1]");
    if (!(beta > 0.0 && beta <= 1.0))
        throw DomainError("beta must lie in (0,1]");
}

Regime FractionalIndices::regime() const noexcept
{
    if (alpha < beta)
        return Regime::SubordinateDecay;
    if (alpha == beta)
        return Regime::Ballistic;
    return Regime::ExponentialGrowth;
}

InitialDatum::InitialDatum(DatumClass c, double lm, double lp, int d, double a)
    : class_(c), lambda_minus_(lm), lambda_plus_(lp), dimension_(d), amplitude_(a)
{
    if (d < 1)
        throw DomainError("dimension must be >= 1");
    if (!(a >= 0.0) || !std::isfinite(a))
        throw DomainError("datum amplitude must be finite and >= 0");
}

InitialDatum InitialDatum::gaussian(int dimension)
{
    return {DatumClass::GaussianSchwartz, 0.0, std::numeric_limits<double>::infinity(),
            dimension, 1.0};
}

InitialDatum InitialDatum::annulus(double lambda_minus, double lambda_plus, int dimension)
{
    if (!(lambda_minus > 0.0 && lambda_minus < lambda_plus && std::isfinite(lambda_plus)))
        throw DomainError("annulus support needs 0 < lambda_minus < lambda_plus < inf");
    return {DatumClass::AnnulusBump, lambda_minus, lambda_plus, dimension, 1.0};
}

InitialDatum InitialDatum::scaled(double amplitude) const
{
    return {class_, lambda_minus_, lambda_plus_, dimension_, amplitude_ * amplitude};
}

InitialDatum InitialDatum::with_dimension(int dimension) const
{
    return {class_, lambda_minus_, lambda_plus_, dimension, amplitude_};
}

double InitialDatum::profile(double rho) const noexcept
{
    if (class_ == DatumClass::GaussianSchwartz)
        return amplitude_ * std::exp(-0.5 * rho * rho);
    if (rho <= lambda_minus_ || rho >= lambda_plus_)
        return 0.0;
    const double s = (2.0 * rho - lambda_plus_ - lambda_minus_) / (lambda_plus_ - lambda_minus_);
    const double q = 1.0 - s * s;
    return amplitude_ * std::exp(-1.0 / q);
}

double InitialDatum::profile_deriv(double rho) const noexcept
{
    if (class_ == DatumClass::GaussianSchwartz)
        return -amplitude_ * rho * std::exp(-0.5 * rho * rho);
    if (rho <= lambda_minus_ || rho >= lambda_plus_)
        return 0.0;
    const double width = lambda_plus_ - lambda_minus_;
    const double s = (2.0 * rho - lambda_plus_ - lambda_minus_) / width;
    const double q = 1.0 - s * s;
    // exp(-1/q) underflows long before 1/q^2 matters.
    if (q < 1e-3)
        return 0.0;
    return amplitude_ * std::exp(-1.0 / q) * (-2.0 * s / (q * q)) * (2.0 / width);
}

double InitialDatum::support_lo() const noexcept
{
    return class_ == DatumClass::GaussianSchwartz ? 0.0 : lambda_minus_;
}

double InitialDatum::support_hi() const noexcept
{
    return class_ == DatumClass::GaussianSchwartz ? kGaussianCutoff : lambda_plus_;
}

std::string InitialDatum::id() const
{
    if (class_ == DatumClass::GaussianSchwartz)
        return "gaussian";
    std::ostringstream os;
    os << "annulus[" << lambda_minus_ << "," << lambda_plus_ << "]";
    return os.str();
}

}  // namespace fqd
