#include "fqd/caputo.hpp"

#include "fqd/errors.hpp"
#include "fqd/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace fqd {

GradedMesh::GradedMesh(double T, int N, double grading) : T_(T), N_(N), grading_(grading)
{
    if (!(T > 0.0) || !std::isfinite(T))
        throw DomainError("GradedMesh: T must be positive");
    if (N < 8)
        throw DomainError("GradedMesh: N must be at least 8");
    if (!(grading >= 1.0) || !std::isfinite(grading))
        throw DomainError("GradedMesh: grading must be >= 1");
    nodes_.resize(N + 1);
    for (int j = 0; j <= N; ++j)
        nodes_[j] = T * std::pow(static_cast<double>(j) / N, grading);
    nodes_.back() = T;
}

double default_grading(double alpha)
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("alpha must lie in (0,1]");
    return (2.0 - alpha) / alpha;
}

namespace {

// (b + width)^s - b^s for b >= 0, width > 0. Working from the interval width
// keeps the tiny intervals of a strongly graded mesh, where T - t_j rounds to T.
double pow_increment(double b, double width, double s)
{
    if (b <= 0.0)
        return std::pow(width, s);
    return std::pow(b, s) * std::expm1(s * std::log1p(width / b));
}

}  // namespace

Complex caputo_l1(std::span<const Complex> samples, const GradedMesh& mesh, double alpha)
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("alpha must lie in (0,1]");
    const std::vector<double>& t = mesh.nodes();
    if (samples.size() != t.size())
        throw DomainError("caputo_l1: one sample per mesh node is required");
    const int N = mesh.N();
    if (alpha == 1.0)
        return (samples[N] - samples[N - 1]) / (t[N] - t[N - 1]);

    const double T = mesh.T();
    const double s = 1.0 - alpha;
    Complex sum = 0.0;
    for (int j = 0; j < N; ++j) {
        const double width = t[j + 1] - t[j];
        const double w = pow_increment(T - t[j + 1], width, s);
        sum += (samples[j + 1] - samples[j]) * (w / width);
    }
    return sum / std::tgamma(2.0 - alpha);
}

L1Refinement caputo_refinement(const std::function<Complex(double)>& u, double T, double alpha,
                               const std::vector<int>& n_values, double grading)
{
    L1Refinement out;
    for (int n : n_values) {
        const GradedMesh mesh(T, n, grading);
        std::vector<Complex> samples;
        samples.reserve(mesh.nodes().size());
        for (double tj : mesh.nodes())
            samples.push_back(u(tj));
        const Complex v = caputo_l1(samples, mesh, alpha);
        if (!out.values.empty()) {
            const Complex prev = out.values.back();
            if (std::abs(v - prev) > 0.1 * std::max(std::abs(v), std::abs(prev)))
                out.mesh_too_coarse = true;
        }
        out.n_values.push_back(n);
        out.values.push_back(v);
    }
    return out;
}

double mode_residual(const FractionalIndices& idx, double rho, double T, int N, double grading)
{
    idx.validate();
    if (!(rho > 0.0))
        throw DomainError("mode_residual: rho must be positive");
    const GradedMesh mesh(T, N, grading > 0.0 ? grading : default_grading(idx.alpha));
    const MittagLeffler e1(MLParams{idx.alpha, 1.0});
    std::vector<Complex> h;
    h.reserve(mesh.nodes().size());
    for (double tj : mesh.nodes())
        h.push_back(e1(kappa(idx, rho, tj)));
    const Complex lhs = i_pow(idx.beta) * caputo_l1(h, mesh, idx.alpha);
    const Complex rhs = rho * rho * h.back();
    return std::abs(lhs - rhs) / std::abs(rhs);
}

ResidualStudy mode_residual_study(const FractionalIndices& idx, double rho, double T,
                                  const std::vector<int>& n_values, double grading)
{
    ResidualStudy out;
    out.monotone = true;
    for (int n : n_values) {
        const double r = mode_residual(idx, rho, T, n, grading);
        if (!out.residuals.empty() && !(r < out.residuals.back()))
            out.monotone = false;
        out.n_values.push_back(n);
        out.residuals.push_back(r);
    }
    return out;
}

}  // namespace fqd
