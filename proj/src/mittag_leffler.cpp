#include "fqd/mittag_leffler.hpp"

#include "fqd/errors.hpp"
#include "fqd/gamma.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace fqd {

namespace {

constexpr double kPi = std::numbers::pi;
// Largest argument of exp() that stays finite in double.
constexpr double kMaxExpArg = 709.0;
// Relative size below which a series/expansion term no longer matters.
constexpr double kNegligible = 1e-17;

// 1/Gamma(alpha n + gamma) rounded to double-double via quad precision.
dd::Real quad_recip_gamma(double alpha, int n, double gamma)
{
    const __float128 x = static_cast<__float128>(alpha) * n + static_cast<__float128>(gamma);
    if (x <= 0 && x == floorq(x))
        return {};
    const __float128 r = 1 / tgammaq(x);
    const double hi = static_cast<double>(r);
    const double lo = static_cast<double>(r - static_cast<__float128>(hi));
    return {hi, std::isfinite(lo) ? lo : 0.0};
}

// Number of Taylor terms needed for |z| <= radius, judged on log|term|.
int series_table_size(double alpha, double gamma, double radius, int cap)
{
    const double log_r = std::log(radius);
    double peak = -std::numeric_limits<double>::infinity();
    for (int n = 0; n < cap; ++n) {
        const double x = alpha * n + gamma;
        if (x <= 0.0)
            continue;
        const double l = n * log_r - std::lgamma(x);
        peak = std::max(peak, l);
        if (l < peak - 85.0 && l < -40.0)
            return n + 1;
    }
    return cap;
}

}  // namespace

Complex principal_pow(Complex z, double w)
{
    if (z == Complex{0.0, 0.0})
        return w == 0.0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
    return std::polar(std::pow(std::abs(z), w), w * std::arg(z));
}

Complex minus_i_pow(double beta)
{
    return std::polar(1.0, -0.5 * kPi * beta);
}

Complex i_pow(double beta)
{
    return std::polar(1.0, 0.5 * kPi * beta);
}

void MLParams::validate() const
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("alpha must lie in (0,1]");
    if (!std::isfinite(gamma))
        throw DomainError("gamma must be finite");
}

SectorInfo sector_info(double alpha, double beta)
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("alpha must lie in (0,1]");
    if (!(beta > 0.0 && beta <= 1.0))
        throw DomainError("beta must lie in (0,1]");
    SectorInfo info;
    info.arg_kappa = -0.5 * kPi * beta;
    if (0.5 * kPi * beta > 0.5 * kPi * alpha) {
        info.sector = Sector::Algebraic;
        info.mu = 0.5 * (0.5 * kPi * alpha + std::min(kPi * alpha, 0.5 * kPi * beta));
    } else {
        info.sector = Sector::Exponential;
        info.mu = 0.75 * kPi * alpha;
    }
    return info;
}

double default_crossover_radius(double alpha)
{
    return std::pow(kCrossoverScale, alpha);
}

MittagLeffler::MittagLeffler(MLParams params, MLConfig config)
    : params_(params), config_(config)
{
    params_.validate();
    if (config_.max_series_terms < 1 || config_.max_asymptotic_terms < 1)
        throw DomainError("Mittag-Leffler term caps must be positive");
    crossover_ = config_.crossover_radius > 0.0 ? config_.crossover_radius
                                                : default_crossover_radius(params_.alpha);

    // Cover the series region with some headroom; past the table the
    // coefficients are computed on demand.
    const double table_radius = std::max(1.0, 1.2 * default_crossover_radius(params_.alpha));
    const int n_series = series_table_size(params_.alpha, params_.gamma, table_radius,
                                           config_.max_series_terms);
    series_coef_.reserve(n_series);
    for (int n = 0; n < n_series; ++n)
        series_coef_.push_back(quad_recip_gamma(params_.alpha, n, params_.gamma));

    // 1/Gamma(gamma - alpha k) grows like Gamma(alpha k); stop before it overflows.
    const int n_tail = std::min(config_.max_asymptotic_terms,
                                static_cast<int>(160.0 / params_.alpha));
    tail_coef_.reserve(n_tail);
    tail_log_env_.reserve(n_tail);
    for (int k = 1; k <= n_tail; ++k) {
        tail_coef_.push_back(recip_gamma(params_.gamma - params_.alpha * k));
        const double x = params_.alpha * k + 1.0 - params_.gamma;
        tail_log_env_.push_back(x > 0.0 ? std::lgamma(x) - std::log(kPi) : 0.0);
    }
}

dd::Real MittagLeffler::series_coefficient(int n) const
{
    if (n < static_cast<int>(series_coef_.size()))
        return series_coef_[n];
    return quad_recip_gamma(params_.alpha, n, params_.gamma);
}

double MittagLeffler::tail_log_envelope(int k) const
{
    if (k <= static_cast<int>(tail_log_env_.size()))
        return tail_log_env_[k - 1];
    return std::lgamma(params_.alpha * k + 1.0 - params_.gamma) - std::log(kPi);
}

double MittagLeffler::tail_coefficient(int k) const
{
    if (k <= static_cast<int>(tail_coef_.size()))
        return tail_coef_[k - 1];
    return recip_gamma(params_.gamma - params_.alpha * k);
}

Complex MittagLeffler::series(Complex z, double tol) const
{
    if (!(tol > 0.0))
        throw DomainError("ml_series: tol must be positive");
    const double alpha = params_.alpha;
    const double gamma = params_.gamma;
    const int cap = config_.max_series_terms;
    const bool compensated = std::pow(std::abs(z), 1.0 / alpha) > kCompensatedScale;

    // Successive term ratios decrease once alpha n + gamma > 0 (log-convexity
    // of Gamma), so the first ratio q < 1 bounds the tail by |t_n| q / (1 - q).
    auto tail_small = [&](int n, double a, double prev, double sum_abs) {
        if (alpha * (n - 1) + gamma <= 0.0 || !std::isfinite(prev) || !(a <= prev))
            return false;
        const double q = prev > 0.0 ? a / prev : 0.0;
        return q < 1.0 && a * q / (1.0 - q) <= tol * sum_abs;
    };

    if (!compensated) {
        Complex sum{0.0, 0.0};
        Complex zp{1.0, 0.0};
        double prev = std::numeric_limits<double>::infinity();
        for (int n = 0; n < cap; ++n) {
            const double c = to_double(series_coefficient(n));
            if (c != 0.0) {
                const Complex term = zp * c;
                sum += term;
                const double a = std::abs(term);
                if (tail_small(n, a, prev, std::abs(sum)))
                    return sum;
                prev = a;
            }
            zp *= z;
        }
    } else {
        dd::Complex sum{};
        dd::Complex zp{{1.0, 0.0}, {0.0, 0.0}};
        double prev = std::numeric_limits<double>::infinity();
        for (int n = 0; n < cap; ++n) {
            const dd::Real c = series_coefficient(n);
            if (c.hi != 0.0) {
                const dd::Complex term = zp * c;
                sum = sum + term;
                const double a = std::hypot(term.re.hi, term.im.hi);
                if (!std::isfinite(a))
                    throw ConvergenceError("ml_series: term overflow at |z| = "
                                           + std::to_string(std::abs(z)));
                if (tail_small(n, a, prev, std::hypot(sum.re.hi, sum.im.hi)))
                    return to_complex(sum);
                prev = a;
            }
            zp = zp * z;
        }
    }
    throw ConvergenceError("ml_series: no convergence within " + std::to_string(cap)
                           + " terms at |z| = " + std::to_string(std::abs(z)));
}

Complex MittagLeffler::algebraic_tail(Complex z, int max_terms, bool optimal) const
{
    if (max_terms < 0)
        throw DomainError("asymptotic expansion: n_terms must be >= 0");
    if (z == Complex{0.0, 0.0})
        throw DomainError("asymptotic expansion undefined at z = 0");
    const Complex w = 1.0 / z;
    const double log_abs_z = std::log(std::abs(z));
    const double alpha = params_.alpha;
    const double gamma = params_.gamma;
    Complex sum{0.0, 0.0};
    Complex wp{1.0, 0.0};
    // |1/Gamma(gamma - alpha k)| oscillates through sin(pi (gamma - alpha k));
    // truncation is judged on the envelope Gamma(alpha k + 1 - gamma) |z|^{-k} / pi,
    // which is log-convex in k: once it turns upward it grows without bound.
    double prev_env = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= max_terms; ++k) {
        wp *= w;
        if (optimal) {
            const double x = alpha * k + 1.0 - gamma;
            if (x > 0.0) {
                const double env = tail_log_envelope(k) - k * log_abs_z;
                if (env > prev_env)
                    break;
                prev_env = env;
                if (std::abs(sum) > 0.0 && env < std::log(kNegligible * std::abs(sum))) {
                    sum += wp * tail_coefficient(k);
                    break;
                }
            }
        }
        const double c = tail_coefficient(k);
        if (c != 0.0)
            sum += wp * c;
    }
    return -sum;
}

Complex MittagLeffler::exponential_term(Complex z) const
{
    const double alpha = params_.alpha;
    const Complex root = principal_pow(z, 1.0 / alpha);
    const double power = (1.0 - params_.gamma) / alpha;
    const double log_mag = root.real() + power * std::log(std::abs(z)) - std::log(alpha);
    if (log_mag > kMaxExpArg)
        throw OverflowError("Mittag-Leffler exponential term overflows: Re z^{1/alpha} = "
                            + std::to_string(root.real()));
    const Complex prefactor = power == 0.0 ? Complex{1.0, 0.0} : principal_pow(z, power);
    return prefactor * std::exp(root) / alpha;
}

Complex MittagLeffler::asymptotic_algebraic(Complex z, int n_terms) const
{
    return algebraic_tail(z, n_terms, false);
}

Complex MittagLeffler::asymptotic_exponential(Complex z, int n_terms) const
{
    return exponential_term(z) + algebraic_tail(z, n_terms, false);
}

Complex MittagLeffler::operator()(Complex z) const
{
    if (std::abs(z) < crossover_)
        return series(z, kNegligible);
    const int terms = config_.max_asymptotic_terms;
    if (std::fabs(std::arg(z)) < kPi * params_.alpha)
        return exponential_term(z) + algebraic_tail(z, terms, true);
    return algebraic_tail(z, terms, true);
}

Complex ml_series(MLParams params, Complex z, double tol, int max_terms)
{
    MLConfig cfg;
    cfg.max_series_terms = max_terms;
    return MittagLeffler(params, cfg).series(z, tol);
}

Complex ml_asymptotic_algebraic(MLParams params, Complex z, int n_terms)
{
    return MittagLeffler(params).asymptotic_algebraic(z, n_terms);
}

Complex ml_asymptotic_exponential(MLParams params, Complex z, int n_terms)
{
    return MittagLeffler(params).asymptotic_exponential(z, n_terms);
}

Complex ml_eval(MLParams params, Complex z)
{
    return MittagLeffler(params)(z);
}

Complex ml_derivative(double alpha, Complex z)
{
    return MittagLeffler({alpha, alpha})(z) / alpha;
}

}  // namespace fqd
