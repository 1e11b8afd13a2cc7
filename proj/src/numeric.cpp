#include "lerchq/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "lerchq/errors.hpp"
#include "lerchq/quadrature.hpp"

namespace lerchq {

namespace {

constexpr long kTermBudget = 400000;
const cd kI(0.0, 1.0);

// exp(e1)/(1+exp(e2)) without overflowing when Re(e2) is large
cd exp_over_one_plus_exp(const cd& e1, const cd& e2)
{
    if (std::real(e2) > 0.0)
        return std::exp(e1 - e2) / (1.0 + std::exp(-e2));
    return std::exp(e1) / (1.0 + std::exp(e2));
}

// exp(e1)/cosh(w) and exp(e1)/sinh(w), stable for large |Re w|
cd exp_over_cosh(const cd& e1, const cd& w)
{
    if (std::real(w) > 0.0)
        return 2.0 * std::exp(e1 - w) / (1.0 + std::exp(-2.0 * w));
    return 2.0 * std::exp(e1 + w) / (1.0 + std::exp(2.0 * w));
}

cd exp_over_sinh(const cd& e1, const cd& w)
{
    if (std::real(w) > 0.0)
        return 2.0 * std::exp(e1 - w) / (1.0 - std::exp(-2.0 * w));
    return -2.0 * std::exp(e1 + w) / (1.0 - std::exp(2.0 * w));
}

double denom_floor_cosh(const cd& w)
{
    // |cosh(w)|^2 = sinh^2(Re w) + cos^2(Im w)
    double s = std::sinh(std::real(w));
    double c = std::cos(std::imag(w));
    return std::sqrt(s * s + c * c);
}

double denom_floor_sinh(const cd& w)
{
    double s = std::sinh(std::real(w));
    double c = std::sin(std::imag(w));
    return std::sqrt(s * s + c * c);
}

} // namespace

cd sec_stable(const cd& w)
{
    double im = std::imag(w);
    if (im > 20.0) {
        cd t = std::exp(2.0 * kI * w);
        return 2.0 * std::exp(kI * w) / (1.0 + t);
    }
    if (im < -20.0) {
        cd t = std::exp(-2.0 * kI * w);
        return 2.0 * std::exp(-kI * w) / (1.0 + t);
    }
    return 1.0 / std::cos(w);
}

cd sech_stable(const cd& w)
{
    double re = std::real(w);
    if (re > 20.0) {
        cd t = std::exp(-2.0 * w);
        return 2.0 * std::exp(-w) / (1.0 + t);
    }
    if (re < -20.0) {
        cd t = std::exp(2.0 * w);
        return 2.0 * std::exp(w) / (1.0 + t);
    }
    return 1.0 / std::cosh(w);
}

HalfPlanePoint HalfPlanePoint::from_z(const cd& z)
{
    if (std::imag(z) <= 0.0) throw Error("HalfPlanePoint: Im(z) must be positive");
    return HalfPlanePoint{z, e_of(z)};
}

// ---- theta functions ---------------------------------------------------------

namespace {

Certified theta_certified_impl(int kind, const cd& v, const cd& q, double tol, long min_terms)
{
    double aq = std::abs(q);
    if (aq >= 1.0) throw NomeOutsideDisk();
    if (aq == 0.0) return Certified{cd(1.0, 0.0), 0.0, 1};

    const cd lq = std::log(q);            // principal
    const double L = std::log(aq);        // < 0
    const double H = std::abs(std::imag(v));

    cd acc(1.0, 0.0);  // n = 0
    long n = 0;
    for (;;) {
        ++n;
        if (n > kTermBudget) throw TruncationFailure("theta: term budget exhausted");
        cd ep = std::exp(static_cast<double>(n) * static_cast<double>(n) * lq + 2.0 * kI * static_cast<double>(n) * v);
        cd em = std::exp(static_cast<double>(n) * static_cast<double>(n) * lq - 2.0 * kI * static_cast<double>(n) * v);
        cd t = ep + em;
        if (kind == 4 && n % 2 == 1) t = -t;
        acc += t;
        // tail majorant 2|q|^{m^2} e^{2mH}, geometric ratio from m = n+1 on
        double ratio = std::exp((2.0 * n + 1.0) * L + 2.0 * H);
        if (ratio < 1.0 && n >= min_terms) {
            double head = 2.0 * std::exp((n + 1.0) * (n + 1.0) * L + 2.0 * (n + 1.0) * H);
            double tail = head / (1.0 - ratio);
            if (tail < tol * (1.0 + std::abs(acc)))
                return Certified{acc, tail, n};
        }
    }
}

} // namespace

Certified theta3_certified(const cd& v, const cd& q, double tol, long min_terms)
{
    return theta_certified_impl(3, v, q, tol, min_terms);
}
Certified theta4_certified(const cd& v, const cd& q, double tol, long min_terms)
{
    return theta_certified_impl(4, v, q, tol, min_terms);
}
cd theta3_num(const cd& v, const cd& q, double tol) { return theta3_certified(v, q, tol).value; }
cd theta4_num(const cd& v, const cd& q, double tol) { return theta4_certified(v, q, tol).value; }

cd theta_gauss_num(int kind, const cd& v, const cd& az, const cd& gauss_coef, double tol)
{
    // sum_n (+-1)^n exp(2 pi i az n^2 + 2 i n v + gauss_coef * v^2)
    if (std::imag(az) <= 0.0) throw NomeOutsideDisk("theta_gauss_num: Im(az) must be positive");
    const cd common = gauss_coef * v * v;
    const cd quad = cd(0.0, kTwoPi) * az;
    const double L = -kTwoPi * std::imag(az);
    const double H = std::abs(std::imag(v));

    auto term = [&](long n) {
        cd en = quad * static_cast<double>(n) * static_cast<double>(n) + 2.0 * kI * static_cast<double>(n) * v + common;
        cd t = std::exp(en);
        if (kind == 4 && (n % 2 != 0)) t = -t;
        return t;
    };

    cd acc = term(0);
    double common_mag = std::exp(std::min(700.0, std::real(common)));
    long n = 0;
    for (;;) {
        ++n;
        if (n > kTermBudget) throw TruncationFailure("theta_gauss_num: term budget exhausted");
        acc += term(n) + term(-n);
        double ratio = std::exp((2.0 * n + 1.0) * L + 2.0 * H);
        if (ratio < 1.0) {
            double head = 2.0 * common_mag * std::exp((n + 1.0) * (n + 1.0) * L + 2.0 * (n + 1.0) * H);
            double tail = head / (1.0 - ratio);
            if (tail < tol * (1.0 + std::abs(acc))) return acc;
        }
    }
}

// ---- eta ----------------------------------------------------------------------

Certified eta_certified(const cd& q, double tol, long min_terms)
{
    double aq = std::abs(q);
    if (aq >= 1.0) throw NomeOutsideDisk();
    if (aq == 0.0) return Certified{cd(1.0, 0.0), 0.0, 1};
    cd acc(1.0, 0.0);
    cd qn(1.0, 0.0);
    long n = 0;
    for (;;) {
        ++n;
        if (n > kTermBudget) throw TruncationFailure("eta: term budget exhausted");
        qn *= q;
        acc *= (1.0 - qn);
        double s = std::pow(aq, static_cast<double>(n) + 1.0) / (1.0 - aq);
        double bound = std::abs(acc) * (std::expm1(s));
        if (n >= min_terms && bound < tol * (1.0 + std::abs(acc)))
            return Certified{acc, bound, n};
    }
}

cd eta_num(const cd& q, double tol) { return eta_certified(q, tol).value; }

cd eta_dedekind_num(const cd& z, double tol)
{
    if (std::imag(z) <= 0.0) throw Error("eta_dedekind_num: Im(z) must be positive");
    return e_of(z / 24.0) * eta_num(e_of(z), tol);
}

// ---- error function family ------------------------------------------------------

double erf_e(double x) { return std::erf(std::sqrt(kPi) * x); }

cd erf_e(const cd& x)
{
    cd w = std::sqrt(kPi) * x;
    if (std::imag(w) == 0.0) return cd(std::erf(std::real(w)), 0.0);
    if (std::real(w) < 0.0) return -erf_e(-x);
    if (std::abs(w) <= 2.5) {
        // erf(w) = (2/sqrt(pi)) sum (-1)^k w^{2k+1} / (k! (2k+1))
        cd acc = w;
        cd term = w;
        for (long k = 1; k < 200; ++k) {
            term *= -w * w / static_cast<double>(k);
            cd add = term / static_cast<double>(2 * k + 1);
            acc += add;
            if (std::abs(add) < 1e-18 * (1.0 + std::abs(acc))) break;
        }
        return 2.0 / std::sqrt(kPi) * acc;
    }
    // continued fraction for erfc, Re w > 0 (modified Lentz)
    const double tiny = 1e-300;
    cd f = w, C = w, D = 0.0;
    for (long k = 1; k < 400; ++k) {
        // erfc(w) = e^{-w^2}/sqrt(pi) * 1/(w + (1/2)/(w + 1/(w + (3/2)/(w + ...))))
        cd a = static_cast<double>(k) / 2.0;
        cd b = w;
        D = b + a * D;
        if (std::abs(D) < tiny) D = tiny;
        C = b + a / C;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0 / D;
        cd delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    cd erfc = std::exp(-w * w) / std::sqrt(kPi) / f;
    return 1.0 - erfc;
}

double beta_num(double x, BetaRoute route)
{
    if (x < 0.0) throw Error("beta_num: x must be >= 0");
    if (route == BetaRoute::Reduction) {
        // beta(x) = 1 - E(sqrt(x)) = erfc(sqrt(pi x))
        return std::erfc(std::sqrt(kPi * x));
    }
    // direct quadrature of 2 exp(-pi s^2) over [sqrt(x), sqrt(x)+7], plus tail
    double lo = std::sqrt(x);
    double hi = lo + 7.0;
    auto f = [](double s) { return cd(2.0 * std::exp(-kPi * s * s), 0.0); };
    QuadResult r = integrate_segment(f, lo, hi, 1e-14, 400000);
    return std::real(r.value);  // tail < e^{-pi(lo+7)^2} / (pi (lo+7)), negligible
}

// ---- Zwegers objects -------------------------------------------------------------

Certified theta_zw_certified(const cd& v, const cd& tau, double tol, long min_terms)
{
    double y = std::imag(tau);
    if (y <= 0.0) throw Error("theta_zw: Im(tau) must be positive");
    // nu = k + 1/2, paired k and -k-1; the sign is (-1)^{nu-1/2} = (-1)^k
    auto sterm = [&](long k) {
        double nu = k + 0.5;
        cd en = cd(0.0, kPi) * tau * nu * nu + cd(0.0, kTwoPi) * v * nu;
        cd t = std::exp(en);
        return (std::labs(k) % 2 == 0) ? t : -t;
    };
    cd acc = sterm(0) + sterm(-1);
    const double H = kTwoPi * std::abs(std::imag(v));
    const double L = -kPi * y;  // coefficient of nu^2 in the magnitude exponent
    long k = 0;
    for (;;) {
        ++k;
        if (k > kTermBudget) throw TruncationFailure("theta_zw: term budget exhausted");
        acc += sterm(k) + sterm(-k - 1);
        double nu = k + 1.5;
        double ratio = std::exp(L * (2.0 * nu - 1.0) + H);
        if (ratio < 1.0 && k >= min_terms) {
            double head = 2.0 * std::exp(L * nu * nu + H * nu);
            double tail = head / (1.0 - ratio);
            if (tail < tol * (1.0 + std::abs(acc))) return Certified{acc, tail, k};
        }
    }
}

cd theta_zw_num(const cd& v, const cd& tau, double tol) { return theta_zw_certified(v, tau, tol).value; }

Certified r_zw_certified(const cd& z, const cd& tau, double tol, long min_terms)
{
    double y = std::imag(tau);
    if (y <= 0.0) throw Error("r_zw: Im(tau) must be positive");
    double c = std::imag(z) / y;
    auto bracket = [&](double nu) {
        double X = std::sqrt(kPi) * (nu + c) * std::sqrt(2.0 * y);
        if (nu > 0.0) return std::erfc(X);
        return -std::erfc(-X);
    };
    auto sterm = [&](long k) {
        double nu = k + 0.5;
        cd en = -cd(0.0, kTwoPi) * nu * z - cd(0.0, kPi) * tau * nu * nu;
        cd t = bracket(nu) * std::exp(en);
        return (std::labs(k) % 2 == 0) ? t : -t;
    };
    cd acc = sterm(0) + sterm(-1);
    long k = 0;
    double prev = std::abs(acc) + 1.0;
    int calm = 0;
    for (;;) {
        ++k;
        if (k > kTermBudget) throw TruncationFailure("r_zw: term budget exhausted");
        cd tp = sterm(k), tm = sterm(-k - 1);
        acc += tp + tm;
        double m = std::max(std::abs(tp), std::abs(tm));
        if (m < 0.5 * prev && m < 0.25 * tol * (1.0 + std::abs(acc)))
            ++calm;
        else
            calm = 0;
        prev = std::max(m, 1e-300);
        if (calm >= 3 && k >= min_terms)
            return Certified{acc, 4.0 * m + 1e-16, k};
    }
}

cd r_zw_num(const cd& z, const cd& tau, double tol) { return r_zw_certified(z, tau, tol).value; }

Certified mu_certified(const ZwegersParams& p, double tol, long min_terms)
{
    double y = std::imag(p.tau);
    if (y <= 0.0) throw Error("mu: Im(tau) must be positive");
    cd theta = theta_zw_num(p.v, p.tau, std::min(tol, 1e-14));
    if (std::abs(theta) < 1e-250) throw ThetaZero();

    auto term = [&](long n) {
        double nn = static_cast<double>(n);
        // (-b)^n q^{n(n+1)/2} = (-1)^n e(v n + tau n(n+1)/2)
        cd en = cd(0.0, kTwoPi) * (p.v * nn + p.tau * (nn * (nn + 1.0) / 2.0));
        cd den = 1.0 - e_of(p.u + nn * p.tau);
        if (std::abs(den) < 1e-12) throw PoleHit("mu: 1 - a q^n vanishes");
        cd t = std::exp(en) / den;
        return (std::labs(n) % 2 == 0) ? t : -t;
    };
    cd acc = term(0);
    long n = 0;
    double prev = std::abs(acc) + 1.0;
    int calm = 0;
    for (;;) {
        ++n;
        if (n > kTermBudget) throw TruncationFailure("mu: term budget exhausted");
        cd tp = term(n), tm = term(-n);
        acc += tp + tm;
        double m = std::max(std::abs(tp), std::abs(tm));
        if (m < 0.5 * prev && m < 0.25 * tol * (1.0 + std::abs(acc)))
            ++calm;
        else
            calm = 0;
        prev = std::max(m, 1e-300);
        if (calm >= 3 && n >= min_terms) {
            cd pref = e_of(p.u / 2.0) / theta;
            return Certified{pref * acc, std::abs(pref) * (4.0 * m) + 1e-16, n};
        }
    }
}

cd mu_num(const ZwegersParams& p, double tol) { return mu_certified(p, tol).value; }

cd m_num(const ZwegersParams& p, double tol)
{
    return mu_num(p, tol) - 0.5 * r_zw_num(p.u - p.v, p.tau, tol);
}

Certified r_f_certified(const cd& z, double tol, RfConvention conv, long min_terms)
{
    double y = std::imag(z);
    if (y <= 0.0) throw Error("r_f: Im(z) must be positive");
    auto term = [&](long n) {
        double nn = static_cast<double>(n);
        double beta = beta_num(nn * nn * y / 6.0);
        if (beta == 0.0) return cd(0.0, 0.0);  // tail past erfc underflow
        cd t = beta * std::exp(-cd(0.0, kTwoPi) * z * (nn * nn / 24.0));
        return n > 0 ? t : -t;
    };
    cd acc(0.0, 0.0);
    long count = 0;
    double last = 0.0;
    // n === 1 (mod 6): 1, 7, 13, ... and bilaterally -5, -11, ...
    long np = 1, nm = -5;
    double prev = 1e300;
    int calm = 0;
    for (;;) {
        cd tp = term(np);
        cd tm = (conv == RfConvention::Bilateral) ? term(nm) : cd(0.0, 0.0);
        acc += tp + tm;
        ++count;
        if (count > kTermBudget) throw TruncationFailure("r_f: term budget exhausted");
        double m = std::max(std::abs(tp), std::abs(tm));
        last = m;
        if (m < 0.5 * prev && m < 0.25 * tol * (1.0 + std::abs(acc)))
            ++calm;
        else
            calm = 0;
        prev = std::max(m, 1e-300);
        if (calm >= 3 && count >= min_terms) return Certified{acc, 4.0 * last + 1e-16, count};
        np += 6;
        nm -= 6;
    }
}

cd r_f_num(const cd& z, double tol, RfConvention conv) { return r_f_certified(z, tol, conv).value; }

// ---- Lerch sums -----------------------------------------------------------------

Certified lerch_certified(LerchFamily family, const LerchParams& p, const cd& z,
                          double tol, bool alternating, long min_terms)
{
    double y = std::imag(z);
    if (y <= 0.0) throw Error("lerch: Im(z) must be positive");
    if (p.a <= 0.0) throw Error("lerch: a must be positive");
    if (family == LerchFamily::General && std::imag(p.w) == 0.0)
        throw Error("lerch: general family needs Im(w) != 0");

    const cd i2pz = cd(0.0, kTwoPi) * z;

    auto poly = [&](double n) { return i2pz * (p.a * n * n + p.b * n); };

    auto term = [&](long n) -> cd {
        double nn = static_cast<double>(n);
        switch (family) {
            case LerchFamily::S: {
                // q^{a n^2 + b n} / (1 + q^{2n})
                return exp_over_one_plus_exp(poly(nn), i2pz * (2.0 * nn));
            }
            case LerchFamily::Fs: {
                if (n == 0) return cd(0.0, 0.0);
                cd w = cd(0.0, kTwoPi) * nn * p.c * z;
                if (denom_floor_sinh(w) < 1e-13) throw PoleHit("lerch fs: sinh denominator vanishes");
                cd t = exp_over_sinh(poly(nn), w);
                return (std::labs(n) % 2 == 0) ? t : -t;
            }
            case LerchFamily::Fc: {
                cd w = cd(0.0, kTwoPi) * nn * p.c * z;
                if (denom_floor_cosh(w) < 1e-13) throw PoleHit("lerch fc: cosh denominator vanishes");
                cd t = exp_over_cosh(poly(nn), w);
                return (std::labs(n) % 2 == 0) ? t : -t;
            }
            case LerchFamily::General: {
                cd w = cd(0.0, kTwoPi) * p.w * (p.A * nn + p.B);
                if (denom_floor_cosh(w) < 1e-13) throw PoleHit("lerch general: cosh denominator vanishes");
                cd t = exp_over_cosh(poly(nn), w);
                if (alternating && (std::labs(n) % 2 != 0)) t = -t;
                return t;
            }
        }
        return cd(0.0, 0.0);
    };

    cd acc = term(0);
    long n = 0;
    double prev = 1e300;
    int calm = 0;
    for (;;) {
        ++n;
        if (n > kTermBudget) throw TruncationFailure("lerch: term budget exhausted");
        cd tp = term(n), tm = term(-n);
        acc += tp + tm;
        double m = std::max(std::abs(tp), std::abs(tm));
        if (m < 0.5 * prev && m < 0.25 * tol * (1.0 + std::abs(acc)))
            ++calm;
        else
            calm = 0;
        prev = std::max(m, 1e-300);
        if (calm >= 3 && n >= min_terms) return Certified{acc, 4.0 * m + 1e-16, n};
    }
}

cd lerch_num(LerchFamily family, const LerchParams& p, const cd& z, double tol, bool alternating)
{
    return lerch_certified(family, p, z, tol, alternating).value;
}

// ---- mock theta functions ----------------------------------------------------------

Certified mock_certified(MockName name, const cd& q, double tol, long min_terms)
{
    double aq = std::abs(q);
    if (std::abs(aq - 1.0) < 1e-12) throw NomeOnUnitCircle();
    if (name != MockName::F && aq > 1.0) throw NomeOutsideDisk("phi/psi: need |q| < 1");

    cd acc;
    cd t;
    long start;
    switch (name) {
        case MockName::F:
            acc = cd(1.0, 0.0);
            t = cd(1.0, 0.0);
            start = 1;
            break;
        case MockName::Phi:
            acc = cd(1.0, 0.0);
            t = cd(1.0, 0.0);
            start = 1;
            break;
        case MockName::Psi:
            acc = cd(0.0, 0.0);
            t = cd(1.0, 0.0);
            start = 1;
            break;
    }

    cd qn(1.0, 0.0);   // q^n
    cd q2n(1.0, 0.0);  // q^{2n}
    long n = 0;
    double prev = 1e300;
    int calm = 0;
    for (;;) {
        ++n;
        if (n > kTermBudget) throw TruncationFailure("mock: term budget exhausted");
        qn *= q;
        q2n *= q * q;
        switch (name) {
            case MockName::F: {
                // t_n = t_{n-1} * q^{2n-1} / (1+q^n)^2
                cd den = 1.0 + qn;
                if (std::abs(den) < 1e-12) throw PoleHit("mock f: (1+q^n) vanishes");
                t *= q2n / q / (den * den);
                break;
            }
            case MockName::Phi: {
                cd den = 1.0 + q2n;
                if (std::abs(den) < 1e-12) throw PoleHit("mock phi: (1+q^{2n}) vanishes");
                t *= q2n / q / den;
                break;
            }
            case MockName::Psi: {
                cd den = 1.0 - q2n / q;  // 1 - q^{2n-1}
                if (std::abs(den) < 1e-12) throw PoleHit("mock psi: (1-q^{2n-1}) vanishes");
                t *= (q2n / q) / den;
                break;
            }
        }
        acc += t;
        double m = std::abs(t);
        if (m < 0.5 * prev && m < 0.25 * tol * (1.0 + std::abs(acc)))
            ++calm;
        else
            calm = 0;
        prev = std::max(m, 1e-300);
        if (calm >= 2 && n >= std::max(min_terms, start)) return Certified{acc, 4.0 * m + 1e-17, n};
    }
}

cd mock_num(MockName name, const cd& q, double tol) { return mock_certified(name, q, tol).value; }

} // namespace lerchq
