#ifndef LERCHQ_QUADRATURE_HPP
#define LERCHQ_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace lerchq {

using cd = std::complex<double>;

/* A straight contour t*direction, t in [-truncation, truncation], with a
 * quadrature tolerance and a node budget. The decay certificate along the
 * ray is checked by the kernel-specific callers before integration. */
struct ContourSpec {
    cd direction{1.0, 0.0};
    double truncation = 10.0;
    double tolerance = 1e-10;
    long max_nodes = 2'000'000;
};

struct QuadResult {
    cd value{0.0, 0.0};
    double error = 0.0;  // quadrature error estimate (+ tail bound when added by the caller)
    long nodes = 0;
};

/* Adaptive Gauss-Kronrod (G7,K15) over a real segment; f takes the real
 * parameter. Throws BudgetExceeded when the tolerance cannot be met. */
QuadResult integrate_segment(const std::function<cd(double)>& f,
                             double a, double b, double tol, long max_nodes = 2'000'000);

/* Integral of f along the ray: int f(t*sigma) sigma dt over [-T, T]. */
QuadResult integrate_ray(const std::function<cd(const cd&)>& f, const ContourSpec& spec);

/* Extends T until the sampled integrand magnitude at +-T*sigma falls below
 * level; returns the chosen T. rate > 0 is the certified exponential decay
 * rate used for the tail estimate tail ~ 2*|f(T)|/rate. */
double choose_truncation(const std::function<cd(const cd&)>& f, const cd& direction,
                         double rate, double level, double t0);

/* sec((h + shift)/scale) evaluated along h = t*direction: decay rate and
 * pole clearance helpers. */
double sec_ray_rate(const cd& direction, const cd& scale);
void check_sec_poles(const cd& direction, const cd& shift, const cd& scale, double T);

} // namespace lerchq

#endif
