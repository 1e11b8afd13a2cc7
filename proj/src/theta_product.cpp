#include "lerchq/theta_product.hpp"

#include <cmath>
#include <map>

#include "lerchq/errors.hpp"
#include "lerchq/qseries.hpp"

namespace lerchq {

namespace {

const cd kI(0.0, 1.0);

FormalSeries sparse_to_series(const std::map<long, long>& terms, long order)
{
    long off = 0;
    for (const auto& [e, v] : terms)
        if (e < off) off = e;
    long n = order - off;
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    for (const auto& [e, v] : terms)
        if (e <= order) c[static_cast<size_t>(e - off)] += v;
    return FormalSeries(Rational(off), 1, n, std::move(c));
}

// log of the theta quotient product including its q^{-a/12 + t^2/(4a)} prefactor
cd theta_quotient_log(int kind, double a, const cd& t, const cd& z)
{
    if (a <= 0.0) throw ConstraintViolation("theta quotient: a must be positive");
    if (std::imag(z) <= 0.0) throw ConstraintViolation("theta quotient: Im(z) must be positive");
    const cd flip = (kind == 4) ? cd(0.0, kPi) : cd(0.0, 0.0);  // -1 = e^{i pi}
    cd acc = cd(0.0, kTwoPi) * z * (-a / 12.0 + t * t / (4.0 * a));
    // log(1 + s e^E) evaluated in exponent space; for large Re(E) the factor
    // is folded as E + log(1 + e^{-E}) so nothing overflows. Branch shifts of
    // 2 pi i per factor cancel once the sum is exponentiated.
    auto log_factor = [&](const cd& expo) {
        cd E = expo + flip;
        if (std::real(E) > 30.0) return E + std::log(1.0 + std::exp(-E));
        return std::log(1.0 + std::exp(E));
    };
    for (long n = 0; n < 200000; ++n) {
        cd e1 = cd(0.0, kTwoPi) * (2.0 * n * a + a - t) * z;
        cd e2 = cd(0.0, kTwoPi) * (2.0 * n * a + a + t) * z;
        acc += log_factor(e1) + log_factor(e2);
        if (std::real(e1) < -42.0 && std::real(e2) < -42.0) return acc;
    }
    throw TruncationFailure("theta quotient: product did not converge");
}

} // namespace

FormalSeries w_theta_sum(int kind, long a, long p, long order)
{
    if (kind != 3 && kind != 4) throw ConstraintViolation("w_theta_sum: kind must be 3 or 4");
    if (a <= 0 || p <= a) throw ConstraintViolation("w_theta_sum: need 0 < a < p");
    std::map<long, long> terms;
    for (long n = 0;; ++n) {
        long e = p * n * (n + 1) / 2 - a * n;
        if (e > order && p * n > a) break;
        if (e <= order && e >= 0) terms[e] += (kind == 4 && n % 2 != 0) ? -1 : 1;
    }
    for (long n = -1;; --n) {
        long e = p * n * (n + 1) / 2 - a * n;
        if (e > order) break;
        terms[e] += (kind == 4 && (-n) % 2 != 0) ? -1 : 1;
    }
    return sparse_to_series(terms, order);
}

FormalSeries w_product_body(int kind, long a, long p, long order)
{
    int sign = (kind == 4) ? +1 : -1;
    return pochhammer_series(Rational(a), Rational(p), std::nullopt, sign, order) *
           pochhammer_series(Rational(p - a), Rational(p), std::nullopt, sign, order);
}

FormalSeries w_divisor_body(int kind, long a, long p, long order, const DivisorTable& table)
{
    DivisorWeight w = (kind == 4) ? DivisorWeight::Flat : DivisorWeight::Alternating;
    return divisor_exp_series(ResidueConstraint{a, p}, w, 1, order, table);
}

bool w_check(int kind, long a, long p, long order, const DivisorTable& table)
{
    FormalSeries lhs = w_theta_sum(kind, a, p, order);
    FormalSeries etap = pochhammer_series(Rational(p), Rational(p), std::nullopt, +1, order);
    FormalSeries rhs_prod = etap * w_product_body(kind, a, p, order);
    FormalSeries rhs_div = etap * w_divisor_body(kind, a, p, order, table);
    return FormalSeries::agree_through(lhs, rhs_prod, Rational(order)) &&
           FormalSeries::agree_through(lhs, rhs_div, Rational(order));
}

FormalSeries q_product_series(int kind, long a, long t, long order)
{
    if (a <= t || t < 0) throw ConstraintViolation("q_product_series: need a > t >= 0");
    int sign = (kind == 4) ? +1 : -1;
    Rational offset = Rational(-a, 12) + Rational(t * t, 4 * a);
    offset.canonicalize();
    FormalSeries body = pochhammer_series(Rational(a - t), Rational(2 * a), std::nullopt, sign, order) *
                        pochhammer_series(Rational(a + t), Rational(2 * a), std::nullopt, sign, order);
    return body.shifted(offset);
}

FormalSeries q_divisor_series(int kind, long a, long t, long order, const DivisorTable& table)
{
    if (a <= t || t <= 0) throw ConstraintViolation("q_divisor_series: need a > t > 0");
    DivisorWeight w = (kind == 4) ? DivisorWeight::Flat : DivisorWeight::Alternating;
    Rational offset = Rational(-a, 12) + Rational(t * t, 4 * a);
    offset.canonicalize();
    return divisor_exp_series(ResidueConstraint{a - t, 2 * a}, w, 1, order, table).shifted(offset);
}

cd q_theta_quotient_num(int kind, double a, const cd& t, const cd& z)
{
    return std::exp(theta_quotient_log(kind, a, t, z));
}

cd f3_num(double a, const cd& t, const cd& z) { return std::exp(theta_quotient_log(3, a, t, z)); }

cd f3_log(double a, const cd& t, const cd& z) { return theta_quotient_log(3, a, t, z); }

CheckResult theta_quotient_identity_check(int kind, double a, double t, const cd& z, double tol)
{
    cd q_pow = e_of(-t * t / (4.0 * a) * z);
    cd lhs = (kind == 3) ? theta3_num(kPi * z * t, e_of(a * z), tol * 1e-2)
                         : theta4_num(kPi * z * t, e_of(a * z), tol * 1e-2);
    cd rhs = q_pow * eta_dedekind_num(2.0 * a * z) * q_theta_quotient_num(kind, a, cd(t, 0.0), z);
    return CheckResult{std::abs(lhs - rhs), 0};
}

CheckResult f3_modular_check(double a, double t, const cd& z, double tol)
{
    (void)tol;
    cd zp = -1.0 / (4.0 * z);
    cd tp = 2.0 * t * z / a;
    cd lhs = f3_num(1.0 / a, tp, zp);
    cd rhs = std::exp(-kI * kPi * t * t * z / (2.0 * a)) * f3_num(a, cd(t, 0.0), z);
    return CheckResult{std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)), 0};
}

namespace {

Certified s_family_integral(int j, double a, const cd& b, double A, const cd& B,
                            const cd& z, const cd& w, const cd& sigma, const cd& x, double tol)
{
    if (a <= 0.0 || A <= 0.0) throw ConstraintViolation("s_family: need a > 0, A > 0");
    if (std::imag(z) <= 0.0) throw ConstraintViolation("s_family: Im(z) must be positive");
    if (std::imag(w) == 0.0) throw DecayCertificateFailed("s_family: Im(w) = 0");

    const cd scale = 2.0 * A * w;  // sec((g + b z) pi / (2Aw))
    const cd shift = b * z;
    double rate = kPi * sec_ray_rate(sigma, scale);
    if (rate <= 1e-12) throw DecayCertificateFailed("s_family: sec kernel has no decay along the ray");

    const cd gauss = kI * kPi * static_cast<double>(j) / (2.0 * a * z);
    auto integrand = [&](const cd& g) {
        cd expo = f3_log(1.0 / a, 2.0 * g / a, -1.0 / (4.0 * z)) + gauss * g * g -
                  cd(0.0, kTwoPi) * B * g / A + kI * g * x;
        return std::exp(expo) * sec_stable((g + shift) * kPi / scale);
    };

    double T = choose_truncation(integrand, sigma, rate, tol / 4.0, 4.0);
    check_sec_poles(sigma, shift, scale / kPi, T);

    ContourSpec spec;
    spec.direction = sigma;
    spec.truncation = T;
    spec.tolerance = tol / 4.0;
    QuadResult r = integrate_ray(integrand, spec);

    cd pref = kI * std::exp(-cd(0.0, kTwoPi) * B * b * z / A) / (2.0 * A * w);
    double tail = tol / 4.0;
    return Certified{pref * r.value, std::abs(pref) * (r.error + tail), r.nodes};
}

} // namespace

Certified stilde_num(int j, double a, const cd& b, double A, const cd& B,
                     const cd& z, const cd& w, const cd& sigma, double tol)
{
    return s_family_integral(j, a, b, A, B, z, w, sigma, cd(0.0, 0.0), tol);
}

Certified s0_num(double a, double b, double A, double B, const cd& z, const cd& w, double tol)
{
    return stilde_num(0, a, cd(b, 0.0), A, cd(B, 0.0), z, w, cd(1.0, 0.0), tol);
}

Certified sg_num(double a, const cd& b, double A, const cd& B, const cd& z, const cd& w,
                 const cd& x, double tol)
{
    return s_family_integral(0, a, b, A, B, z, w, cd(1.0, 0.0), x, tol);
}

cd sg_hat(double a, const cd& b, double A, const cd& B, const cd& z, const cd& w, const cd& s)
{
    cd pref = kI * std::exp(-cd(0.0, kTwoPi) * B * b * z / A) / (2.0 * A * w);
    cd f3 = std::exp(f3_log(1.0 / a, 2.0 * s / a, -1.0 / (4.0 * z)));
    return 2.0 * kPi * pref * f3 * std::exp(-cd(0.0, kTwoPi) * s * B / A) *
           sec_stable((s + b * z) * kPi / (2.0 * A * w));
}

cd s_reference_sum(double a, double b, double A, double B, const cd& z, const cd& w, double tol)
{
    LerchParams p;
    p.a = a;
    p.b = b;
    p.A = A;
    p.B = B;
    p.w = w;
    cd lerch = lerch_num(LerchFamily::General, p, z, tol);
    return lerch / eta_dedekind_num(2.0 * a * z);
}

} // namespace lerchq
