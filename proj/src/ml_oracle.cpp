#include "fqd/ml_oracle.hpp"

#include "fqd/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fqd {

namespace {

class Mp {
public:
    explicit Mp(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    ~Mp() { mpfr_clear(v_); }
    Mp(const Mp&) = delete;
    Mp& operator=(const Mp&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

void check_params(const MLParams& p, Complex z, int digits)
{
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha))
        throw DomainError("ml_oracle: alpha must be positive");
    if (!std::isfinite(p.gamma))
        throw DomainError("ml_oracle: gamma must be finite");
    if (!(std::abs(z) <= kOracleMaxAbs))
        throw DomainError("ml_oracle: |z| exceeds the oracle range");
    if (digits < 1 || digits > 1000)
        throw DomainError("ml_oracle: digits must lie in [1, 1000]");
}

}  // namespace

long ml_oracle_precision_bits(MLParams params, Complex z, int digits)
{
    check_params(params, z, digits);
    const double r = std::abs(z);
    const double scale = std::max(r, std::pow(r, 1.0 / params.alpha));
    const double guard = scale * std::numbers::log10e + std::log10(1.0 + r) + 10.0;
    return static_cast<long>(std::ceil((digits + guard) * std::numbers::ln10 / std::numbers::ln2))
           + 32;
}

Complex ml_oracle(MLParams params, Complex z, int digits, OracleBudget budget)
{
    const long bits = ml_oracle_precision_bits(params, z, digits);
    if (bits > budget.max_bits)
        throw PrecisionBudgetError("ml_oracle: needs " + std::to_string(bits)
                                   + " bits, budget is " + std::to_string(budget.max_bits));
    const auto prec = static_cast<mpfr_prec_t>(bits);
    constexpr auto rnd = MPFR_RNDN;

    Mp zr(prec), zi(prec), pr(prec), pi(prec), sr(prec), si(prec);
    Mp x(prec), coef(prec), tr(prec), ti(prec), tmp(prec), alpha(prec), gamma(prec);
    mpfr_set_d(zr.get(), z.real(), rnd);
    mpfr_set_d(zi.get(), z.imag(), rnd);
    mpfr_set_d(alpha.get(), params.alpha, rnd);
    mpfr_set_d(gamma.get(), params.gamma, rnd);
    mpfr_set_ui(pr.get(), 1, rnd);
    mpfr_set_zero(pi.get(), 1);

    if (z == Complex{0.0, 0.0}) {
        if (mpfr_sgn(gamma.get()) <= 0 && mpfr_integer_p(gamma.get()))
            return {0.0, 0.0};
        mpfr_gamma(coef.get(), gamma.get(), rnd);
        mpfr_ui_div(coef.get(), 1, coef.get(), rnd);
        return {mpfr_get_d(coef.get(), rnd), 0.0};
    }

    // Stop once past the peak and the terms are below the working precision
    // relative to the largest term.
    double peak_log2 = -1e300;
    double prev_log2 = 1e300;
    for (long n = 0; n < budget.max_terms; ++n) {
        mpfr_mul_ui(x.get(), alpha.get(), static_cast<unsigned long>(n), rnd);
        mpfr_add(x.get(), x.get(), gamma.get(), rnd);
        const bool pole = mpfr_sgn(x.get()) <= 0 && mpfr_integer_p(x.get());
        if (!pole) {
            mpfr_gamma(coef.get(), x.get(), rnd);
            mpfr_ui_div(coef.get(), 1, coef.get(), rnd);
            mpfr_mul(tr.get(), pr.get(), coef.get(), rnd);
            mpfr_mul(ti.get(), pi.get(), coef.get(), rnd);
            mpfr_add(sr.get(), sr.get(), tr.get(), rnd);
            mpfr_add(si.get(), si.get(), ti.get(), rnd);

            mpfr_hypot(tmp.get(), tr.get(), ti.get(), rnd);
            const double t_log2 = mpfr_zero_p(tmp.get())
                                      ? -1e300
                                      : static_cast<double>(mpfr_get_exp(tmp.get()));
            peak_log2 = std::max(peak_log2, t_log2);
            const bool past_peak = mpfr_sgn(x.get()) > 0 && t_log2 <= prev_log2;
            if (past_peak && t_log2 < peak_log2 - static_cast<double>(bits) + 8.0)
                return {mpfr_get_d(sr.get(), rnd), mpfr_get_d(si.get(), rnd)};
            prev_log2 = t_log2;
        }
        // p <- p * z
        mpfr_mul(tmp.get(), pr.get(), zr.get(), rnd);
        mpfr_mul(x.get(), pi.get(), zi.get(), rnd);
        mpfr_mul(pi.get(), pi.get(), zr.get(), rnd);
        mpfr_fma(pi.get(), pr.get(), zi.get(), pi.get(), rnd);
        mpfr_sub(pr.get(), tmp.get(), x.get(), rnd);
    }
    throw PrecisionBudgetError("ml_oracle: series needs more than "
                               + std::to_string(budget.max_terms) + " terms");
}

}  // namespace fqd
