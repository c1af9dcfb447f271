#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fqd/errors.hpp"
#include "fqd/gamma.hpp"
#include "fqd/mittag_leffler.hpp"
#include "fqd/ml_oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

using fqd::Complex;
using fqd::MittagLeffler;

namespace {

constexpr double kPi = std::numbers::pi;

Complex on_ray(double r, double beta)
{
    return std::polar(r, -kPi * beta / 2.0);
}

double rel_err(Complex a, Complex b)
{
    return std::abs(a - b) / std::abs(b);
}

// E_{alpha,beta}(z) for |arg z| > alpha pi from the integral representation
//   E(z) = int_0^inf K(chi) dchi,
//   K = chi^{(1-beta)/alpha} exp(-chi^{1/alpha}) / (pi alpha)
//       * (chi sin(pi(1-beta)) - z sin(pi(1-beta+alpha))) / (chi^2 - 2 chi z cos(pi alpha) + z^2),
// integrated by composite Simpson in long double after chi = s^2.
Complex ml_integral_oracle(double alpha, double beta, Complex z)
{
    using LD = long double;
    using CL = std::complex<LD>;
    const LD a = alpha, b = beta, pi = std::numbers::pi_v<LD>;
    const CL zz(z.real(), z.imag());
    const LD s1 = std::sin(pi * (1 - b)), s2 = std::sin(pi * (1 - b + a)), ca = std::cos(pi * a);
    auto kernel = [&](LD s) -> CL {
        const LD chi = s * s;
        if (chi == 0)
            return (b == 1.0L) ? CL(0) : CL(0);
        const CL num = chi * s1 - zz * s2;
        const CL den = chi * chi - 2.0L * chi * zz * ca + zz * zz;
        return std::pow(chi, (1 - b) / a) * std::exp(-std::pow(chi, 1 / a)) / (pi * a) * num / den
               * (2.0L * s);
    };
    const LD s_max = std::sqrt(std::pow(80.0L, a));
    const int n = 400000;
    const LD h = s_max / n;
    CL sum = kernel(0) + kernel(s_max);
    for (int i = 1; i < n; ++i)
        sum += kernel(i * h) * static_cast<LD>(i % 2 ? 4 : 2);
    sum *= h / 3;
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

}  // namespace

TEST_CASE("series: closed-form values")
{
    CHECK(std::abs(fqd::ml_series({0.7, 1.0}, 0.0, 1e-16) - 1.0) == 0.0);
    CHECK(rel_err(fqd::ml_series({1.0, 1.0}, 1.0, 1e-16), std::exp(1.0)) < 1e-15);
    const Complex half = fqd::ml_series({0.5, 1.0}, 1.0, 1e-16);
    CHECK(rel_err(half, 5.008980080762283) < 1e-15);
    CHECK(rel_err(half, std::exp(1.0) * std::erfc(-1.0)) < 1e-15);
    CHECK(rel_err(fqd::ml_oracle({0.5, 1.0}, 1.0, 25), 5.008980080762283) < 1e-15);
}

TEST_CASE("series: term cap raises a convergence error")
{
    CHECK_THROWS_AS(fqd::ml_series({0.5, 1.0}, Complex(3.0, -3.0), 1e-16, 5), fqd::ConvergenceError);
}

TEST_CASE("algebraic expansion: leading terms")
{
    const Complex k = on_ray(40.0, 1.0);
    const Complex one = fqd::ml_asymptotic_algebraic({0.5, 1.0}, k, 1);
    CHECK(rel_err(one, -1.0 / (k * std::tgamma(0.5))) < 1e-15);
    // The k = 1 term of E_{1/2,1/2} vanishes because 1/Gamma(0) = 0.
    const Complex two = fqd::ml_asymptotic_algebraic({0.5, 0.5}, k, 2);
    CHECK(rel_err(two, -1.0 / (k * k * fqd::gamma_fn(-0.5))) < 1e-15);
    CHECK(std::abs(fqd::ml_asymptotic_algebraic({0.5, 0.5}, k, 1)) == 0.0);
}

TEST_CASE("integral-representation oracle agrees with the extended-precision series")
{
    for (double r : {2.0, 5.0, 8.0}) {
        const Complex z = on_ray(r, 0.9);
        INFO("r = " << r);
        CHECK(rel_err(ml_integral_oracle(0.4, 1.0, z), fqd::ml_oracle({0.4, 1.0}, z, 20)) < 1e-11);
    }
}

TEST_CASE("algebraic expansion with eight terms at |z| = 50, alpha = 0.4")
{
    const Complex z = on_ray(50.0, 0.9);
    // The series oracle would need ~26000 bits here.
    CHECK_THROWS_AS(fqd::ml_oracle({0.4, 1.0}, z, 16), fqd::PrecisionBudgetError);
    const Complex ref = ml_integral_oracle(0.4, 1.0, z);
    CHECK(rel_err(fqd::ml_asymptotic_algebraic({0.4, 1.0}, z, 8), ref) < 1e-8);
    CHECK(rel_err(fqd::ml_eval({0.4, 1.0}, z), ref) < 1e-8);
}

TEST_CASE("exponential expansion")
{
    CHECK(rel_err(fqd::ml_asymptotic_exponential({1.0, 1.0}, 3.0, 6), 20.085536923187668) < 1e-15);
    const Complex z = on_ray(30.0, 0.4);
    CHECK(rel_err(fqd::ml_asymptotic_exponential({0.8, 1.0}, z, 6), fqd::ml_oracle({0.8, 1.0}, z, 20))
          < 1e-6);
    // On the ray arg z = -pi alpha / 2, z^{1/alpha} is purely imaginary.
    const MittagLeffler e({0.6, 1.0});
    for (double r : {1e2, 1e3, 1e4}) {
        const Complex lead = e.asymptotic_exponential(on_ray(r, 0.6), 0);
        // The rounded ray angle leaves Re z^{1/alpha} ~ eps |z|^{1/alpha}.
        const double tol = 1e-12 + 1e-15 * std::pow(r, 1.0 / 0.6);
        CHECK(std::abs(lead) == doctest::Approx(1.0 / 0.6).epsilon(tol));
    }
}

TEST_CASE("exponential branch reports overflow instead of saturating")
{
    CHECK_THROWS_AS(fqd::ml_eval({0.3, 1.0}, 1000.0), fqd::OverflowError);
    CHECK_THROWS_AS(fqd::ml_asymptotic_exponential({0.5, 1.0}, 40.0, 6), fqd::OverflowError);
}

TEST_CASE("dispatched evaluation: examples")
{
    CHECK(fqd::ml_eval({0.5, 1.0}, 0.0) == Complex(1.0, 0.0));
    const Complex phase = fqd::ml_eval({1.0, 1.0}, Complex(0.0, -2.0));
    CHECK(phase.real() == doctest::Approx(-0.4161468365471424).epsilon(1e-14));
    CHECK(phase.imag() == doctest::Approx(-0.9092974268256817).epsilon(1e-14));
    const Complex z = std::polar(12.0, -kPi * 0.35);
    CHECK(rel_err(fqd::ml_eval({0.7, 1.0}, z), fqd::ml_oracle({0.7, 1.0}, z, 20)) < 1e-8);
}

TEST_CASE("exponential identity on the propagator rays")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> beta(0.0, 1.0), radius(0.0, 10.0);
    const MittagLeffler e({1.0, 1.0});
    for (int i = 0; i < 100; ++i) {
        const Complex z = on_ray(radius(rng), beta(rng));
        CHECK(rel_err(e(z), std::exp(z)) < 1e-10);
    }
}

TEST_CASE("value at the origin is 1/Gamma(gamma)")
{
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0})
        for (double g : {0.3, 0.5, 1.0, a}) {
            const Complex v = MittagLeffler({a, g})(0.0);
            CHECK(std::abs(v - 1.0 / std::tgamma(g)) < 1e-12);
        }
}

TEST_CASE("derivative: closed forms and finite differences")
{
    CHECK(std::abs(fqd::ml_derivative(1.0, 0.0) - 1.0) < 1e-15);
    CHECK(std::abs(fqd::ml_derivative(0.5, 0.0) - 1.1283791670955126) < 1e-15);

    const double h5 = 1e-5;
    const Complex z0(1.0, 0.3);
    const Complex fd0 = (fqd::ml_eval({0.6, 1.0}, z0 + h5) - fqd::ml_eval({0.6, 1.0}, z0 - h5)) / (2 * h5);
    CHECK(std::abs(fd0 - fqd::ml_derivative(0.6, z0)) <= 1e-7);

    // 200 random points with |z| <= 5 in the sector |arg z| >= alpha pi, where
    // E_{alpha,1} is bounded and the central difference is accurate to O(h^2).
    const double h = 1e-4;
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double a = 0.3 + 0.7 * unit(rng);
        const double phi = kPi * (a + (1.0 - a) * unit(rng)) * (unit(rng) < 0.5 ? -1.0 : 1.0);
        const Complex z = std::polar(5.0 * unit(rng), phi);
        const MittagLeffler e({a, 1.0});
        const Complex fd = (e(z + h) - e(z - h)) / (2 * h);
        worst = std::max(worst, std::abs(fd - fqd::ml_derivative(a, z)));
    }
    CHECK(worst <= 10 * h * h);
}

TEST_CASE("derivative: Richardson-extrapolated differences on the propagator rays")
{
    const double h = 1e-4;
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double a = 0.2 + 0.8 * unit(rng);
        const double b = a + (1.0 - a) * unit(rng);
        const Complex z = on_ray(5.0 * unit(rng), b);
        const MittagLeffler e({a, 1.0});
        auto cd = [&](double s) { return (e(z + s) - e(z - s)) / (2 * s); };
        const Complex rich = (4.0 * cd(h / 2) - cd(h)) / 3.0;
        const Complex d = fqd::ml_derivative(a, z);
        CHECK(std::abs(rich - d) / std::max(1.0, std::abs(d)) < 1e-9);
    }
}

TEST_CASE("dispatcher agrees with the oracle within 20% of the crossover radius")
{
    double worst = 0.0;
    for (double a : {0.3, 0.5, 0.7, 0.9, 1.0})
        for (double g : {1.0, a}) {
            const MittagLeffler e({a, g});
            const double R = e.crossover_radius();
            CHECK(R == doctest::Approx(fqd::default_crossover_radius(a)));
            for (double b : {0.2, 0.5, 0.8, 1.0})
                for (double f : {0.8, 0.9, 0.99, 1.01, 1.1, 1.2}) {
                    const Complex z = on_ray(f * R, b);
                    worst = std::max(worst, rel_err(e(z), fqd::ml_oracle({a, g}, z, 20)));
                }
        }
    CHECK(worst <= 1e-7);
}

TEST_CASE("oracle: identities")
{
    const Complex e10 = fqd::ml_oracle({1.0, 1.0}, Complex(0.0, 10.0), 20);
    CHECK(rel_err(e10, Complex(std::cos(10.0), std::sin(10.0))) < 1e-15);
    CHECK(rel_err(fqd::ml_oracle({2.0, 1.0}, 4.0, 20), std::cosh(2.0)) < 1e-15);
    CHECK(rel_err(fqd::ml_oracle({0.5, 0.5}, 0.0, 20), 1.0 / std::sqrt(kPi)) < 1e-15);
    CHECK_THROWS_AS(fqd::ml_oracle({0.5, 1.0}, 150.0, 16), fqd::DomainError);
}

TEST_CASE("algebraic-sector bound: |E|(1+|k|) does not grow at large |k|")
{
    for (double a : {0.3, 0.5})
        for (double b : {0.7, 1.0})
            for (double g : {1.0, a}) {
                const MittagLeffler e({a, g});
                double sup_low = std::abs(e(0.0)), sup_all = sup_low;
                for (int i = 0; i < 200; ++i) {
                    const double r = std::pow(10.0, -2.0 + 6.0 * i / 199.0);
                    const double q = std::abs(e(on_ray(r, b))) * (1.0 + r);
                    if (r <= 1e2)
                        sup_low = std::max(sup_low, q);
                    sup_all = std::max(sup_all, q);
                }
                INFO("alpha=" << a << " beta=" << b << " gamma=" << g);
                CHECK(std::isfinite(sup_all));
                CHECK(sup_all <= 1.01 * sup_low);
            }
}

TEST_CASE("exponential-sector bound with a calibrated constant")
{
    struct Pair {
        double alpha, beta;
    };
    for (Pair p : {Pair{0.5, 0.3}, Pair{0.5, 0.5}, Pair{0.8, 0.4}, Pair{1.0, 1.0}})
        for (double g : {1.0, p.alpha}) {
            const MittagLeffler e({p.alpha, g});
            auto bound = [&](Complex k) {
                const double m = std::abs(k);
                return std::pow(1.0 + m, (1.0 - g) / p.alpha)
                           * std::exp(fqd::principal_pow(k, 1.0 / p.alpha).real())
                       + 1.0 / (1.0 + m);
            };
            const Complex k1 = on_ray(1.0, p.beta);
            const double c_emp = 10.0 * std::abs(e(k1)) / bound(k1);
            for (int i = 0; i < 200; ++i) {
                const Complex k = on_ray(std::pow(10.0, -2.0 + 6.0 * i / 199.0), p.beta);
                if (fqd::principal_pow(k, 1.0 / p.alpha).real() > 650.0)
                    break;
                INFO("alpha=" << p.alpha << " beta=" << p.beta << " |k|=" << std::abs(k));
                CHECK(std::abs(e(k)) <= c_emp * bound(k));
            }
        }
}

TEST_CASE("phase factors and sector selection")
{
    for (double b : {0.1, 0.5, 0.77, 1.0}) {
        CHECK(std::abs(fqd::minus_i_pow(b) * fqd::i_pow(b) - 1.0) < 1e-15);
        CHECK(std::abs(fqd::minus_i_pow(b) - std::exp(Complex(0.0, -kPi * b / 2))) < 1e-15);
    }
    const fqd::SectorInfo alg = fqd::sector_info(0.4, 0.9);
    CHECK(alg.sector == fqd::Sector::Algebraic);
    CHECK(alg.arg_kappa == doctest::Approx(-kPi * 0.45));
    CHECK(alg.mu > kPi * 0.2);
    CHECK(alg.mu < std::min(kPi * 0.4, kPi * 0.45));
    const fqd::SectorInfo ex = fqd::sector_info(0.6, 0.6);
    CHECK(ex.sector == fqd::Sector::Exponential);
    CHECK(ex.mu > kPi * 0.3);
    CHECK(ex.mu < kPi * 0.6);
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(MittagLeffler({0.0, 1.0}), fqd::DomainError);
    CHECK_THROWS_AS(MittagLeffler({1.5, 1.0}), fqd::DomainError);
    CHECK_THROWS_AS(fqd::ml_series({0.5, 1.0}, 1.0, 0.0), fqd::DomainError);
}
