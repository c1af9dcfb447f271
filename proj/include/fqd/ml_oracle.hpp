#pragma once

// Extended-precision Mittag-Leffler reference: the plain Taylor series summed
// in MPFR with enough guard bits to absorb the cancellation on the rays of
// interest. Slow, independent of MittagLeffler, used only for verification.

#include "fqd/mittag_leffler.hpp"

namespace fqd {

struct OracleBudget {
    long max_bits = 8192;
    long max_terms = 200000;
};

/// Largest |z| accepted by ml_oracle.
inline constexpr double kOracleMaxAbs = 100.0;

/// Working precision (bits) used for `digits` correct decimal digits at z:
/// digits + |z|^{1/alpha} log10(e) guard digits (the size of the largest
/// term relative to the result), plus a fixed margin.
long ml_oracle_precision_bits(MLParams params, Complex z, int digits);

/// E_{alpha,gamma}(z) rounded to double. Any alpha > 0 is accepted.
/// Throws PrecisionBudgetError when the bits or terms needed exceed `budget`.
Complex ml_oracle(MLParams params, Complex z, int digits, OracleBudget budget = {});

}  // namespace fqd
