#pragma once

// Direct discretization of the Caputo derivative (L1 scheme on a graded
// mesh), used to check independently that the Mittag-Leffler mode solves
// i^beta d_t^alpha u_hat = rho^2 u_hat.

#include "fqd/indices.hpp"
#include "fqd/mittag_leffler.hpp"

#include <functional>
#include <span>
#include <vector>

namespace fqd {

/// Nodes t_j = T (j/N)^grading, j = 0..N.
class GradedMesh {
public:
    /// Throws DomainError unless T > 0, N >= 8 and grading >= 1.
    GradedMesh(double T, int N, double grading = 1.0);

    double T() const noexcept { return T_; }
    int N() const noexcept { return N_; }
    double grading() const noexcept { return grading_; }
    const std::vector<double>& nodes() const noexcept { return nodes_; }

private:
    double T_;
    int N_;
    double grading_;
    std::vector<double> nodes_;
};

/// Default grading (2 - alpha) / alpha, which restores the L1 accuracy for
/// solutions with a t^alpha initial layer.
double default_grading(double alpha);

/// L1 approximation of the Caputo derivative of order alpha at t = T from
/// samples at the mesh nodes. alpha = 1 gives the backward difference.
Complex caputo_l1(std::span<const Complex> samples, const GradedMesh& mesh, double alpha);

struct L1Refinement {
    std::vector<int> n_values;
    std::vector<Complex> values;
    /// Successive refinements differ by more than 10 % relative.
    bool mesh_too_coarse = false;
};

/// caputo_l1 of u on a sequence of meshes with the same T and grading.
L1Refinement caputo_refinement(const std::function<Complex(double)>& u, double T, double alpha,
                               const std::vector<int>& n_values, double grading = 1.0);

/// |i^beta L1[h](T) - rho^2 h(T)| / (rho^2 |h(T)|) with h(t) = E_{alpha,1}(kappa(rho, t)).
/// grading <= 0 selects default_grading(alpha).
double mode_residual(const FractionalIndices& idx, double rho, double T, int N,
                     double grading = 0.0);

struct ResidualStudy {
    std::vector<int> n_values;
    std::vector<double> residuals;
    /// Residuals strictly decrease with N.
    bool monotone = false;
};

ResidualStudy mode_residual_study(const FractionalIndices& idx, double rho, double T,
                                  const std::vector<int>& n_values, double grading = 0.0);

}  // namespace fqd
