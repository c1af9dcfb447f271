#pragma once

#include <functional>

namespace fqd {

enum class QuadScheme { AdaptiveGK, CompositeGL };

struct QuadratureSpec {
    QuadScheme scheme = QuadScheme::AdaptiveGK;
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    /// Upper truncation radius; <= 0 means "use the datum's support".
    double rho_max = 0.0;
    /// Subinterval budget (GK) or panel budget (GL).
    int max_subintervals = 4000;

    /// Throws DomainError on non-positive tolerances or budget.
    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
    int intervals = 0;
    /// error <= max(abs_tol, rel_tol |value|) was reached within budget.
    bool converged = false;
};

/// Integral of f over [a, b] with the scheme selected in spec. Exhausting the
/// budget is not an error: the best estimate is returned with converged = false.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec);

/// Composite trapezoid rule with n_points equispaced nodes (n_points >= 2).
double trapezoid(const std::function<double(double)>& f, double a, double b, long n_points);

}  // namespace fqd
