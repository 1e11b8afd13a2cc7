#ifndef LERCHQ_INTEGRAL_REP_HPP
#define LERCHQ_INTEGRAL_REP_HPP

#include <map>
#include <string>
#include <vector>

#include "lerchq/numeric.hpp"
#include "lerchq/quadrature.hpp"
#include "lerchq/report.hpp"

namespace lerchq {

using ParamMap = std::map<std::string, cd>;

/* int_0^pi g(phi) log(theta4(phi,q)/theta4(0,q)) dphi for
 * g(phi) = sum_n a_n cos(2 n phi), against the closed form
 * -pi sum_n a_n q^n / (n (1 - q^{2n})). */
QuadResult logtheta4_integral(const std::vector<cd>& fourier_coeffs, const cd& q, double tol);
cd logtheta4_rhs(const std::vector<cd>& fourier_coeffs, const cd& q);

/* 1 + (2/pi) int_0^pi d_t psi(t,q) log(theta4(t,q)/theta4(0,q)) dt
 * against eta(q) f(q), psi the weight-3/2 sine kernel. */
IdentityReport eta_f_log_integral_check(const cd& z, double tol);

/* The three log-theta4 integral identities for the quadratic-exponent
 * cosine kernels (one-sided, its mirror, and the combined bilateral form),
 * plus the sinh rewrite of the combined form. */
IdentityReport psi_kernel_checks(double a, double b, const cd& z, double tol);

/* (i/(2 pi w)) int theta_kind(h, e(az)) sec((h + b pi z)/(2w)) dh,
 * which the sec transform identifies with the Lerch sum
 * sum_n (+-1)^n q^{a n^2 + b n} / cosh(2 pi i n w). */
Certified theta_integral_rep(int kind, double a, double b, const cd& z, const cd& w, double tol);

/* The generalized kernel with the Fourier factor e^{-2iB gamma/A}:
 * equals sum_n (+-1)^n q^{a n^2 + b n} / cosh(2 pi i w (A n + B)).
 * conj_w evaluates the integral side at conj(w) for comparison. */
Certified general_integral_rep(int kind, double a, double b, double A, double B,
                               const cd& z, const cd& w, double tol, bool conj_w = false);

enum class XiRoute { Direct, Parseval, Scaled };

/* The Gaussian-times-sech building block xi(n,a,b,z) in its three
 * equivalent quadrature forms; Scaled takes the free parameter L. */
Certified xi_num(long n, double a, double b, const cd& z, XiRoute route,
                 double L = 1.0, double tol = 1e-10);

/* p_j(alpha, b, zeta): ray direction alpha, nome e(alpha zeta), optional
 * Gaussian twist for j = 1; p_0 equals the S Lerch sum. */
Certified p_small_num(int j, const cd& alpha, double b, const cd& zeta, double tol);

/* P_j(a,b;z,w;x) ray integrals (ray 1 for j = 0, ray z for j = 1) and the
 * closed-form Fourier transform (i/w) theta3 e^{j i g^2/(2 pi a z)} sec. */
Certified pj_num(int j, double a, const cd& b, const cd& z, const cd& w, const cd& x, double tol);
cd pj_hat(int j, double a, const cd& b, const cd& z, const cd& w, const cd& gamma);

/* P_G(a,b;A,B;z,w;x) and its closed-form transform. */
Certified pg_num(double a, const cd& b, double A, const cd& B, const cd& z, const cd& w,
                 const cd& x, double tol);
cd pg_hat(double a, const cd& b, double A, const cd& B, const cd& z, const cd& w, const cd& s);

/* Transformation-law verifier. Supported ids: thm9, thm11, thm12, thm16,
 * thm18, thm19, thm20, thm21. Missing parameters take documented defaults;
 * where the source equations are ambiguous (the b' variants), every stated
 * variant is evaluated and recorded in the report parameters. */
IdentityReport verify_transform(const std::string& id, const ParamMap& params, double tol);

} // namespace lerchq

#endif
