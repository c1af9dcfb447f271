#include "fqd/quadrature.hpp"

#include "fqd/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace fqd {

namespace {

// Kronrod 15-point abscissae and weights, with the embedded 7-point Gauss
// weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    double resabs = std::fabs(resk);
    std::array<double, 7> f1{}, f2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        resk += kWgk[j] * (f1[j] + f2[j]);
        resabs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
        if (j % 2 == 1)
            resg += kWg[j / 2] * (f1[j] + f2[j]);
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));

    const double value = resk * half;
    resabs *= std::fabs(half);
    resasc *= std::fabs(half);
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(50.0 * eps * resabs, err);
    return {a, b, value, err};
}

QuadResult adaptive_gk(const std::function<double(double)>& f, double a, double b,
                       const QuadratureSpec& spec)
{
    std::priority_queue<Segment> heap;
    Segment first = gk15(f, a, b);
    double total = first.value;
    double total_err = first.error;
    heap.push(first);
    int evaluations = 15;
    auto target = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::fabs(total)); };
    while (total_err > target() && static_cast<int>(heap.size()) < spec.max_subintervals) {
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            heap.push(worst);
            break;
        }
        const Segment left = gk15(f, worst.a, mid);
        const Segment right = gk15(f, mid, worst.b);
        evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    QuadResult out;
    out.intervals = static_cast<int>(heap.size());
    while (!heap.empty()) {
        out.value += heap.top().value;
        out.error += heap.top().error;
        heap.pop();
    }
    out.evaluations = evaluations;
    out.converged = out.error <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(out.value));
    return out;
}

double gauss7_panels(const std::function<double(double)>& f, double a, double b, int panels)
{
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double center = a + (p + 0.5) * h;
        const double half = 0.5 * h;
        double s = kWg[3] * f(center);
        for (int j = 1; j < 7; j += 2) {
            const double dx = half * kXgk[j];
            s += kWg[j / 2] * (f(center - dx) + f(center + dx));
        }
        sum += s * half;
    }
    return sum;
}

QuadResult composite_gl(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSpec& spec)
{
    int panels = 8;
    double prev = gauss7_panels(f, a, b, panels);
    QuadResult out;
    out.evaluations = 7 * panels;
    while (true) {
        panels *= 2;
        const double next = gauss7_panels(f, a, b, panels);
        out.evaluations += 7 * panels;
        out.value = next;
        out.error = std::fabs(next - prev);
        out.intervals = panels;
        out.converged = out.error <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(next));
        if (out.converged || 2 * panels > spec.max_subintervals)
            return out;
        prev = next;
    }
}

}  // namespace

void QuadratureSpec::validate() const
{
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw DomainError("quadrature tolerances must be positive");
    if (max_subintervals < 1)
        throw DomainError("quadrature budget must be positive");
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec)
{
    spec.validate();
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw DomainError("integration limits must be finite");
    if (a == b)
        return {0.0, 0.0, 0, 0, true};
    if (b < a) {
        QuadResult r = integrate(f, b, a, spec);
        r.value = -r.value;
        return r;
    }
    return spec.scheme == QuadScheme::AdaptiveGK ? adaptive_gk(f, a, b, spec)
                                                  : composite_gl(f, a, b, spec);
}

double trapezoid(const std::function<double(double)>& f, double a, double b, long n_points)
{
    if (n_points < 2)
        throw DomainError("trapezoid rule needs at least two points");
    const double h = (b - a) / static_cast<double>(n_points - 1);
    double sum = 0.5 * (f(a) + f(b));
    for (long i = 1; i < n_points - 1; ++i)
        sum += f(a + h * static_cast<double>(i));
    return sum * h;
}

}  // namespace fqd
