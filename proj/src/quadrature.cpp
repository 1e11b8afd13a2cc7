#include "lerchq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "lerchq/errors.hpp"

namespace lerchq {

namespace {

// 15-point Kronrod extension of 7-point Gauss (positive abscissae)
const double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    cd value;
    double error;
};

Panel eval_panel(const std::function<cd(double)>& f, double a, double b)
{
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    cd kron(0.0, 0.0), gauss(0.0, 0.0);
    for (int i = 0; i < 8; ++i) {
        cd fsum;
        if (i == 7) {
            fsum = f(mid);
            kron += kWgk[7] * fsum;
            gauss += kWg[3] * fsum;
        } else {
            cd f1 = f(mid - half * kXgk[i]);
            cd f2 = f(mid + half * kXgk[i]);
            fsum = f1 + f2;
            kron += kWgk[i] * fsum;
            if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
        }
    }
    kron *= half;
    gauss *= half;
    double err = std::abs(kron - gauss);
    return Panel{a, b, kron, err};
}

} // namespace

QuadResult integrate_segment(const std::function<cd(double)>& f,
                             double a, double b, double tol, long max_nodes)
{
    auto cmp = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);

    long nodes = 15;
    heap.push(eval_panel(f, a, b));
    cd total = heap.top().value;
    double total_err = heap.top().error;

    while (total_err > tol && !heap.empty()) {
        Panel worst = heap.top();
        heap.pop();
        if (worst.b - worst.a < 1e-15 * (std::abs(worst.a) + std::abs(worst.b) + 1.0))
            throw Error("integrate_segment: interval collapsed before reaching tolerance");
        nodes += 30;
        if (nodes > max_nodes) throw BudgetExceeded();
        double mid = 0.5 * (worst.a + worst.b);
        Panel left = eval_panel(f, worst.a, mid);
        Panel right = eval_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    return QuadResult{total, total_err, nodes};
}

QuadResult integrate_ray(const std::function<cd(const cd&)>& f, const ContourSpec& spec)
{
    const cd sigma = spec.direction;
    if (std::abs(sigma) == 0.0) throw Error("integrate_ray: zero direction");
    auto g = [&](double t) { return f(t * sigma) * sigma; };
    return integrate_segment(g, -spec.truncation, spec.truncation, spec.tolerance, spec.max_nodes);
}

double choose_truncation(const std::function<cd(const cd&)>& f, const cd& direction,
                         double rate, double level, double t0)
{
    if (rate <= 0.0) throw DecayCertificateFailed("choose_truncation: nonpositive decay rate");
    double T = std::max(t0, 1.0);
    const double offsets[3] = {0.0, 0.37 / rate, 0.81 / rate};
    for (int iter = 0; iter < 200; ++iter) {
        double m = 0.0;
        for (double d : offsets) {
            m = std::max(m, std::abs(f((T + d) * direction)));
            m = std::max(m, std::abs(f(-(T + d) * direction)));
        }
        if (m * (2.0 / rate) < level) return T + offsets[2];
        T *= 1.25;
        if (T > 1e7) throw TruncationFailure("choose_truncation: integrand did not decay");
    }
    throw TruncationFailure("choose_truncation: iteration limit reached");
}

double sec_ray_rate(const cd& direction, const cd& scale)
{
    return std::abs(std::imag(direction / scale));
}

void check_sec_poles(const cd& direction, const cd& shift, const cd& scale, double T)
{
    // poles of sec((h + shift)/scale) at h_k = scale*(pi/2 + k pi) - shift;
    // perpendicular distance from h_k to the line t*direction
    const double pi = 3.14159265358979323846;
    cd unit = direction / std::abs(direction);
    double reach = T * std::abs(direction) + std::abs(shift) + std::abs(scale) * pi;
    long kmax = static_cast<long>(reach / (std::abs(scale) * pi)) + 2;
    double threshold = 1e-3 * std::abs(direction);
    for (long k = -kmax; k <= kmax; ++k) {
        cd hk = scale * (pi / 2 + static_cast<double>(k) * pi) - shift;
        double dist = std::abs(std::imag(hk * std::conj(unit)));
        double along = std::real(hk * std::conj(unit));
        if (std::abs(along) > T * std::abs(direction) + 2.0) continue;
        if (dist < threshold) throw PoleNearContour();
    }
}

} // namespace lerchq
