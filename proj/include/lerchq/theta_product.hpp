#ifndef LERCHQ_THETA_PRODUCT_HPP
#define LERCHQ_THETA_PRODUCT_HPP

#include "lerchq/divisor_table.hpp"
#include "lerchq/formal_series.hpp"
#include "lerchq/numeric.hpp"
#include "lerchq/quadrature.hpp"

namespace lerchq {

/* The W/Q/F3 product family:
 *
 *   sum_n (-1)^n q^{p n(n+1)/2 - a n} = eta(q^p) * (q^a;q^p)_inf (q^{p-a};q^p)_inf
 *   sum_n        q^{p n(n+1)/2 - a n} = eta(q^p) * (-q^a;q^p)_inf (-q^{p-a};q^p)_inf
 *
 * (the q^{+-(p/12 - a/2 + a^2/2p)} prefactors of the W normalization cancel
 * between the two sides, so the exact checks compare the offset-free bodies),
 * and the theta quotients
 *
 *   Q4(a,t) = q^{-a/12 + t^2/(4a)} prod (1 - q^{2na+a-t})(1 - q^{2na+a+t})
 *   Q3(a,t) = q^{-a/12 + t^2/(4a)} prod (1 + q^{2na+a-t})(1 + q^{2na+a+t})
 *
 * with F3(a,t;z) := Q3 evaluated at q = e(z). */

// bilateral theta sum, kind 4 carries the (-1)^n twist
FormalSeries w_theta_sum(int kind, long a, long p, long order);
FormalSeries w_product_body(int kind, long a, long p, long order);
FormalSeries w_divisor_body(int kind, long a, long p, long order, const DivisorTable& table);
// theta sum == eta(q^p) * body, exactly through q^order
bool w_check(int kind, long a, long p, long order, const DivisorTable& table);

// requires a > t >= 0; the fractional offset must land on the (1/24)Z lattice
FormalSeries q_product_series(int kind, long a, long t, long order);
// divisor-exponential route, a > t > 0 integers
FormalSeries q_divisor_series(int kind, long a, long t, long order, const DivisorTable& table);

// numeric product evaluation, t may be complex; kind 3 is F3(a,t;z)
cd q_theta_quotient_num(int kind, double a, const cd& t, const cd& z);
cd f3_num(double a, const cd& t, const cd& z);
// log F3 for folding into integral kernels (exp(f3_log) == F3 exactly)
cd f3_log(double a, const cd& t, const cd& z);

struct CheckResult {
    double max_abs_error = 0.0;
    long nodes = 0;
};

// theta_kind(pi z t, e(az)) == e(-t^2 z/(4a)) eta_D(2az) Q_kind(a,t)  at one point
CheckResult theta_quotient_identity_check(int kind, double a, double t, const cd& z, double tol);

// F3(1/a, 2tz/a; -1/(4z)) == exp(-i pi t^2 z/(2a)) F3(a,t;z)
CheckResult f3_modular_check(double a, double t, const cd& z, double tol);

/* F3-kernel ray integrals:
 *
 *   Stilde_j(a,b;A,B;z,w;sigma) = (e^{-2 pi i B b z/A}/(2 A i w)) *
 *     int_{ray sigma} F3(1/a, 2g/a; -1/(4z)) e^{i pi g^2 j/(2az)}
 *                     e^{-2 pi i B g/A} sec((g + b z) pi/(2Aw)) dg
 *
 * with Stilde_0 on a positive real ray equal to
 * (1/eta_D(2az)) sum_n q^{a n^2 + b n}/cosh(2 pi i w (A n + B)).
 * The SG variant carries an extra e^{i g x} factor; its Fourier transform
 * in x is the closed form sg_hat. */
Certified stilde_num(int j, double a, const cd& b, double A, const cd& B,
                     const cd& z, const cd& w, const cd& sigma, double tol);
Certified s0_num(double a, double b, double A, double B, const cd& z, const cd& w, double tol);
Certified sg_num(double a, const cd& b, double A, const cd& B, const cd& z, const cd& w,
                 const cd& x, double tol);
cd sg_hat(double a, const cd& b, double A, const cd& B, const cd& z, const cd& w, const cd& s);

// the eta_D-normalized Lerch sum that the S family must reproduce
cd s_reference_sum(double a, double b, double A, double B, const cd& z, const cd& w, double tol);

} // namespace lerchq

#endif
