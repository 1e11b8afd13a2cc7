#ifndef LERCHQ_NUMERIC_HPP
#define LERCHQ_NUMERIC_HPP

#include <complex>

namespace lerchq {

using cd = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// e(z) = exp(2 pi i z)
inline cd e_of(const cd& z) { return std::exp(cd(0.0, kTwoPi) * z); }

// numerically stable 1/cos and 1/cosh for large imaginary/real parts
cd sec_stable(const cd& w);
cd sech_stable(const cd& w);

struct HalfPlanePoint {
    cd z;
    cd q;  // e(z), recomputed from z on construction
    static HalfPlanePoint from_z(const cd& z);
};

/* A value with a certified bound on the discarded tail and the number of
 * terms that were summed. Doubling `terms` via min_terms changes the value
 * by less than `bound`. */
struct Certified {
    cd value;
    double bound = 0.0;
    long terms = 0;
};

// ---- Jacobi theta functions -------------------------------------------------

Certified theta3_certified(const cd& v, const cd& q, double tol, long min_terms = 0);
Certified theta4_certified(const cd& v, const cd& q, double tol, long min_terms = 0);
cd theta3_num(const cd& v, const cd& q, double tol = 1e-14);
cd theta4_num(const cd& v, const cd& q, double tol = 1e-14);

/* theta_{3,4} with a folded Gaussian:  sum_n (+-1)^n exp(2 pi i az n^2 + 2 i n v + g v^2).
 * The per-term exponent combination keeps marginally-decaying ray kernels
 * inside double range. */
cd theta_gauss_num(int kind, const cd& v, const cd& az, const cd& gauss_coef, double tol = 1e-14);

// ---- eta --------------------------------------------------------------------

Certified eta_certified(const cd& q, double tol, long min_terms = 0);
cd eta_num(const cd& q, double tol = 1e-14);
cd eta_dedekind_num(const cd& z, double tol = 1e-14);  // e(z/24) * eta(e(z))

// ---- error function family --------------------------------------------------

double erf_e(double x);        // E(x) = erf(sqrt(pi) x)
cd erf_e(const cd& x);
enum class BetaRoute { Reduction, Quadrature };
double beta_num(double x, BetaRoute route = BetaRoute::Reduction);

// ---- Zwegers objects ----------------------------------------------------------

struct ZwegersParams {
    cd u;
    cd v;
    cd tau;  // Im(tau) > 0
};

Certified theta_zw_certified(const cd& v, const cd& tau, double tol, long min_terms = 0);
cd theta_zw_num(const cd& v, const cd& tau, double tol = 1e-13);
Certified r_zw_certified(const cd& z, const cd& tau, double tol, long min_terms = 0);
cd r_zw_num(const cd& z, const cd& tau, double tol = 1e-13);
Certified mu_certified(const ZwegersParams& p, double tol, long min_terms = 0);
cd mu_num(const ZwegersParams& p, double tol = 1e-13);
cd m_num(const ZwegersParams& p, double tol = 1e-13);  // mu - R(u-v;tau)/2

enum class RfConvention { Bilateral, PositiveOnly };
Certified r_f_certified(const cd& z, double tol, RfConvention conv = RfConvention::Bilateral,
                        long min_terms = 0);
cd r_f_num(const cd& z, double tol = 1e-13, RfConvention conv = RfConvention::Bilateral);

// ---- Lerch sums ----------------------------------------------------------------

enum class LerchFamily { S, Fs, Fc, General };

struct LerchParams {
    double a = 1.0;
    double b = 0.0;
    double c = 1.0;  // Fs / Fc denominator scale
    double A = 1.0;  // General family
    double B = 0.0;
    cd w;            // General family denominator cosh(2 pi i w (A n + B))
};

/* S:       sum_n q^{a n^2 + b n} / (1 + q^{2n})
 * Fs:      sum_{n != 0} (-1)^n q^{a n^2 + b n} / sinh(2 pi i n c z)
 * Fc:      sum_n (-1)^n q^{a n^2 + b n} / cosh(2 pi i n c z)
 * General: sum_n q^{a n^2 + b n} / cosh(2 pi i w (A n + B)), optionally
 *          with the (-1)^n twist. */
Certified lerch_certified(LerchFamily family, const LerchParams& p, const cd& z,
                          double tol, bool alternating = false, long min_terms = 0);
cd lerch_num(LerchFamily family, const LerchParams& p, const cd& z,
             double tol = 1e-13, bool alternating = false);

// ---- mock theta numeric evaluation ---------------------------------------------

enum class MockName { F, Phi, Psi };
Certified mock_certified(MockName name, const cd& q, double tol, long min_terms = 0);
cd mock_num(MockName name, const cd& q, double tol = 1e-14);

} // namespace lerchq

#endif
