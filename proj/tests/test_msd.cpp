#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fqd/errors.hpp"
#include "fqd/gamma.hpp"
#include "fqd/msd.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using fqd::FractionalIndices;
using fqd::InitialDatum;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

double radial_weight(double rho, int d)
{
    return std::pow(rho, d - 1);
}

// Dense trapezoid reference for D2 on the datum's support.
double msd_trapezoid(const FractionalIndices& idx, const InitialDatum& d, double t, long n)
{
    const fqd::Propagator p(idx);
    const int dim = d.dimension();
    return fqd::unit_sphere_area(dim)
           * fqd::trapezoid([&](double rho) { return std::norm(p.grad(d, rho, t)) * radial_weight(rho, dim); },
                            d.support_lo(), d.support_hi(), n);
}

}  // namespace

TEST_CASE("initial MSD is the gradient norm of the datum")
{
    for (int d : {1, 2, 3}) {
        const InitialDatum a = InitialDatum::annulus(1.0, 2.0, d);
        const double ref = fqd::unit_sphere_area(d)
                           * fqd::trapezoid([&](double r) { return std::pow(a.profile_deriv(r), 2) * radial_weight(r, d); },
                                            1.0, 2.0, 100001);
        CHECK(fqd::msd_at({0.6, 0.9}, a, 0.0) == doctest::Approx(ref).epsilon(1e-10));
    }
    // Gaussian, d = 1: 2 int rho^2 exp(-rho^2) = sqrt(pi)/2.
    CHECK(fqd::msd_at({0.5, 0.5}, InitialDatum::gaussian(1), 0.0) == doctest::Approx(kSqrtPi / 2).epsilon(1e-12));
}

TEST_CASE("classical ballistic law for alpha = beta = 1")
{
    const InitialDatum g = InitialDatum::gaussian(1);
    const double c2 = 2.0 * kSqrtPi;  // 4 ||rho f||^2
    CHECK(fqd::coeff_regime2(g, 1.0) == doctest::Approx(c2).epsilon(1e-12));
    const double t = 1e3;
    const double d2 = fqd::msd_at({1.0, 1.0}, g, t);
    CHECK(std::fabs(d2 / (c2 * t * t) - 1.0) < 1e-3);
    CHECK(d2 == doctest::Approx(kSqrtPi / 2 * (4 * t * t + 1)).epsilon(1e-12));

    // |D2/t^2 - C2| <= c/t with c fitted on [1, 10] and checked up to 1e4.
    double c = 0.0;
    for (double s : {1.0, 2.0, 5.0, 10.0})
        c = std::max(c, s * std::fabs(fqd::msd_at({1.0, 1.0}, g, s) / (s * s) - c2));
    for (double s : {20.0, 100.0, 1e3, 1e4})
        CHECK(std::fabs(fqd::msd_at({1.0, 1.0}, g, s) / (s * s) - c2) <= c / s);
}

TEST_CASE("subordinate decay approaches its coefficient")
{
    const FractionalIndices idx{0.5, 1.0};
    for (int d : {1, 3}) {
        const InitialDatum a = InitialDatum::annulus(1.0, 2.0, d);
        const double c1 = fqd::coeff_regime1(a, 0.5);
        const double t = 1e4;
        CHECK(std::fabs(fqd::msd_at(idx, a, t) * t / c1 - 1.0) <= 0.02);
    }
}

TEST_CASE("coefficient of the decay regime")
{
    const InitialDatum a = InitialDatum::annulus(1.0, 2.0, 1);
    CHECK(fqd::coeff_regime1(a.scaled(0.0), 0.5) == 0.0);
    const double g1 = 1.0 / fqd::gamma_fn(0.5), g2 = 2.0 / (0.5 * fqd::gamma_fn(-0.5));
    const double ref = 2.0 * fqd::trapezoid(
                                 [&](double r) {
                                     const double v = (a.profile_deriv(r) * g1 + a.profile(r) * g2 / r) / (r * r);
                                     return v * v;
                                 },
                                 1.0, 2.0, 1000000);
    CHECK(std::fabs(fqd::coeff_regime1(a, 0.5) / ref - 1.0) < 1e-8);
    CHECK_THROWS_AS(fqd::coeff_regime1(InitialDatum::gaussian(1), 0.5), fqd::ConvergenceError);
}

TEST_CASE("coefficient of the ballistic regime")
{
    const InitialDatum a = InitialDatum::annulus(1.0, 2.0, 2);
    CHECK(fqd::coeff_regime2(a.scaled(0.0), 0.5) == 0.0);
    const double ref = 4.0 / std::pow(0.5, 4) * 2.0 * std::numbers::pi
                       * fqd::trapezoid([&](double r) { return std::pow(r, 6.0) * std::pow(a.profile(r), 2) * r; },
                                        1.0, 2.0, 1000000);
    CHECK(std::fabs(fqd::coeff_regime2(a, 0.5) / ref - 1.0) < 1e-8);
}

TEST_CASE("growth-rate bracket")
{
    const InitialDatum a = InitialDatum::annulus(1.0, 1.1, 1);
    const auto r = fqd::rate_bounds_regime3({0.8, 0.4}, a);
    CHECK(r.r_minus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(r.r_plus == doctest::Approx(std::sqrt(2.0) * std::pow(1.1, 2.5)).epsilon(1e-14));
    CHECK(r.r_minus <= r.r_plus);
    const auto edge = fqd::rate_bounds_regime3({1.0, 1.0 - 1e-9}, a);
    CHECK(edge.r_plus < 1e-8);
    CHECK(edge.r_plus > 0.0);
    CHECK_THROWS_AS(fqd::rate_bounds_regime3({0.5, 0.5}, a), fqd::WrongRegimeError);
    CHECK_THROWS_AS(fqd::rate_bounds_regime3({0.5, 0.8}, a), fqd::WrongRegimeError);
    CHECK(fqd::regime3_horizon({0.8, 0.4}, a) == doctest::Approx(600.0 / r.r_plus));

    // Sampled log-slope over [5, 15] lies inside the bracket.
    const FractionalIndices idx{0.8, 0.4};
    const double slope = (std::log(fqd::msd_at(idx, a, 15.0)) - std::log(fqd::msd_at(idx, a, 5.0))) / 10.0;
    CHECK(slope >= r.r_minus);
    CHECK(slope <= r.r_plus);
}

TEST_CASE("growth regime guards")
{
    const InitialDatum a = InitialDatum::annulus(1.0, 1.1, 1);
    CHECK_THROWS_AS(fqd::msd_at({0.8, 0.4}, a, 1000.0), fqd::OverflowError);
    CHECK_THROWS_AS(fqd::msd_at({0.8, 0.4}, InitialDatum::gaussian(1), 1.0), fqd::WrongRegimeError);
    CHECK(std::isfinite(fqd::msd_at({0.8, 0.4}, a, fqd::regime3_horizon({0.8, 0.4}, a))));
}

TEST_CASE("adaptive quadrature agrees with a dense trapezoid rule")
{
    struct Case {
        FractionalIndices idx;
        InitialDatum datum;
        std::vector<double> times;
    };
    const std::vector<Case> cases = {
        {{0.5, 1.0}, InitialDatum::annulus(1.0, 2.0, 1), {1.0, 10.0, 100.0, 1e3, 1e4}},
        {{0.5, 0.5}, InitialDatum::gaussian(1), {0.1, 1.0, 10.0, 100.0, 1e3}},
        {{0.8, 0.4}, InitialDatum::annulus(1.0, 1.1, 1), {1.0, 10.0, 50.0, 100.0, 300.0}},
    };
    for (const Case& c : cases)
        for (double t : c.times) {
            INFO("alpha=" << c.idx.alpha << " beta=" << c.idx.beta << " t=" << t);
            CHECK(std::fabs(fqd::msd_at(c.idx, c.datum, t) / msd_trapezoid(c.idx, c.datum, t, 100000) - 1.0) < 1e-7);
        }
}

TEST_CASE("dimension enters only through the sphere area and radial weight")
{
    const FractionalIndices idx{0.6, 0.9};
    for (int d : {1, 2, 3}) {
        const InitialDatum a = InitialDatum::annulus(1.0, 2.0, d);
        CHECK(std::fabs(fqd::msd_at(idx, a, 7.0) / msd_trapezoid(idx, a, 7.0, 100000) - 1.0) < 1e-9);
    }
    // Same profile: D2(d=3) / sigma_2 equals the d=1 integrand weighted by rho^2.
    const fqd::Propagator p(idx);
    const InitialDatum a1 = InitialDatum::annulus(1.0, 2.0, 1);
    const double raw = fqd::trapezoid([&](double r) { return std::norm(p.grad(a1, r, 7.0)) * r * r; }, 1.0, 2.0, 100000);
    CHECK(fqd::msd_at(idx, a1.with_dimension(3), 7.0) / (4.0 * std::numbers::pi) == doctest::Approx(raw).epsilon(1e-9));
}

TEST_CASE("nonnegativity and continuity in t")
{
    const std::vector<std::pair<FractionalIndices, InitialDatum>> cases = {
        {{0.5, 1.0}, InitialDatum::annulus(1.0, 2.0, 2)},
        {{0.7, 0.7}, InitialDatum::gaussian(1)},
    };
    for (const auto& [idx, datum] : cases)
        for (double t : {0.01, 0.5, 3.0, 40.0, 900.0}) {
            const double a = fqd::msd_at(idx, datum, t);
            const double b = fqd::msd_at(idx, datum, t * (1.0 + 1e-3));
            CHECK(a >= 0.0);
            CHECK(std::fabs(b - a) < 0.01 * a);
        }
}

TEST_CASE("decay regime is monotone past its onset time")
{
    // Onset found by sampling 1e-2..1e5 once; the last increase happens before t = 0.6.
    constexpr double t_onset = 1.0;
    const FractionalIndices idx{0.5, 1.0};
    const InitialDatum a = InitialDatum::annulus(1.0, 2.0, 1);
    const auto grid = fqd::log_grid(t_onset, 1e5, 10);
    double prev = fqd::msd_at(idx, a, grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double v = fqd::msd_at(idx, a, grid[i]);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("log grid and series validation")
{
    const auto g = fqd::log_grid(1e2, 1e5, 40);
    CHECK(g.size() == 121);
    CHECK(g.front() == 1e2);
    CHECK(g.back() == 1e5);
    CHECK(g[40] == doctest::Approx(1e3).epsilon(1e-14));
    CHECK_THROWS_AS(fqd::log_grid(0.0, 1.0, 10), fqd::DomainError);
    CHECK_THROWS_AS(fqd::log_grid(1.0, 10.0, 0), fqd::DomainError);

    const auto s = fqd::msd_series({0.5, 1.0}, InitialDatum::annulus(1.0, 2.0, 1), {1.0, 2.0, 4.0});
    CHECK(s.values.size() == 3);
    CHECK(s.converged);
    fqd::MsdSeries bad = s;
    bad.times[1] = 0.5;
    CHECK_THROWS_AS(bad.validate(), fqd::DomainError);
    bad = s;
    bad.values[0] = -1.0;
    CHECK_THROWS_AS(bad.validate(), fqd::DomainError);
}

TEST_CASE("leading growth term tracks D2")
{
    const FractionalIndices idx{0.8, 0.4};
    for (double lp : {1.01, 1.1}) {
        const InitialDatum a = InitialDatum::annulus(1.0, lp, 1);
        // The algebraic remainders fall off exponentially relative to the growth.
        CHECK(fqd::msd_at(idx, a, 10.0) / fqd::leading_regime3(idx, a, 10.0) == doctest::Approx(1.0).epsilon(1e-5));
        for (double t : {30.0, 100.0, 300.0})
            CHECK(fqd::msd_at(idx, a, t) / fqd::leading_regime3(idx, a, t) == doctest::Approx(1.0).epsilon(1e-10));
    }
}
