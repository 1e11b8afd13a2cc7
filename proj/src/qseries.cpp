#include "lerchq/qseries.hpp"

#include <numeric>

#include "lerchq/errors.hpp"

namespace lerchq {

namespace {

long lattice_step_for(const Rational& c, const Rational& p)
{
    long s = std::lcm(rational_den_long(c), rational_den_long(p));
    if (24 % s != 0) throw LatticeError("pochhammer_series: exponents outside the (1/24)Z lattice");
    return s;
}

} // namespace

FormalSeries pochhammer_series(const Rational& c, const Rational& p,
                               std::optional<long> n, int sign, long order)
{
    if (order < 0) throw Error("pochhammer_series: negative order");
    if (!n.has_value() && p <= 0) throw DivergentProduct("pochhammer_series: infinite product needs p > 0");
    if (!n.has_value() && c <= 0) throw DivergentProduct("pochhammer_series: infinite product needs c > 0");

    long step = lattice_step_for(c, p);
    long body_order = order * step;
    FormalSeries acc(Rational(0), step, body_order,
                     std::vector<Rational>(static_cast<size_t>(body_order) + 1, Rational(0)));
    acc = FormalSeries::constant(Rational(1), body_order);
    if (step != 1) acc = FormalSeries(Rational(0), step, body_order, acc.coeffs());

    long count = n.value_or(body_order + 1);
    for (long j = 0; j < count; ++j) {
        Rational e = c + Rational(j) * p;
        e.canonicalize();
        if (n.has_value() && e <= 0)
            throw DivergentProduct("pochhammer_series: factor exponent must be positive");
        if (e > order) {
            if (!n.has_value()) break;
            continue;  // finite factor beyond truncation contributes nothing visible
        }
        acc.mul_binomial(sign, e);
    }
    return acc;
}

FormalSeries eta_series(long order)
{
    return pochhammer_series(Rational(1), Rational(1), std::nullopt, +1, order);
}

FormalSeries chi_series(long order)
{
    return pochhammer_series(Rational(1), Rational(1), std::nullopt, -1, order);
}

FormalSeries mock_f_series(long order)
{
    // f(q) = sum_{n>=0} q^{n^2} / (-q;q)_n^2 with the reciprocal of the
    // Pochhammer square maintained incrementally.
    FormalSeries acc = FormalSeries::one(order);
    FormalSeries recip = FormalSeries::one(order);  // 1/(-q;q)_n^2
    for (long n = 1; n * n <= order; ++n) {
        recip.mul_geometric_inverse(-1, Rational(n));
        recip.mul_geometric_inverse(-1, Rational(n));
        acc += recip.shifted(Rational(n * n)).truncated_to_exponent(Rational(order));
    }
    return acc;
}

FormalSeries f_recip_series(long order)
{
    FormalSeries acc = FormalSeries::one(order);  // n = 0 term
    FormalSeries recip = FormalSeries::one(order);
    for (long n = 1; n <= order; ++n) {
        recip.mul_geometric_inverse(-1, Rational(n));
        recip.mul_geometric_inverse(-1, Rational(n));
        acc += recip.shifted(Rational(n)).truncated_to_exponent(Rational(order));
    }
    return acc;
}

FormalSeries phi_series(long order)
{
    // phi(q) = sum_{n>=0} q^{n^2} / (-q^2;q^2)_n
    FormalSeries acc = FormalSeries::one(order);
    FormalSeries recip = FormalSeries::one(order);
    for (long n = 1; n * n <= order; ++n) {
        recip.mul_geometric_inverse(-1, Rational(2 * n));
        acc += recip.shifted(Rational(n * n)).truncated_to_exponent(Rational(order));
    }
    return acc;
}

FormalSeries psi_series(long order)
{
    // psi(q) = sum_{n>=1} q^{n^2} / (q;q^2)_n
    FormalSeries acc = FormalSeries::zero(order);
    FormalSeries recip = FormalSeries::one(order);
    for (long n = 1; n * n <= order; ++n) {
        recip.mul_geometric_inverse(+1, Rational(2 * n - 1));
        acc += recip.shifted(Rational(n * n)).truncated_to_exponent(Rational(order));
    }
    return acc;
}

FormalSeries watson_numerator_series(long order)
{
    // 2*sum_{n in Z} (-1)^n q^{3n^2/2 + n/2} / (1+q^n).  The n and -n terms
    // coincide after the rewrite 1/(1+q^{-m}) = q^m/(1+q^m), so the series is
    // 1 + 4*sum_{m>=1} (-1)^m sum_{j>=0} (-1)^j q^{m(3m+1)/2 + j m}.
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    c[0] = 1;
    for (long m = 1; m * (3 * m + 1) / 2 <= order; ++m) {
        long base = m * (3 * m + 1) / 2;
        long sm = (m % 2 == 0) ? 1 : -1;
        for (long j = 0; base + j * m <= order; ++j) {
            long s = (j % 2 == 0) ? sm : -sm;
            c[static_cast<size_t>(base + j * m)] += 4 * s;
        }
    }
    return FormalSeries(Rational(0), 1, order, std::move(c));
}

FormalSeries watson_rhs_series(long order)
{
    return watson_numerator_series(order) * eta_series(order).inverse();
}

namespace {

FormalSeries divisor_exp_impl(const std::function<long(long, long)>& match_count,
                              DivisorWeight w, long scale, long order, const DivisorTable& table)
{
    if (order < 1) throw Error("divisor_exp_series: order must be >= 1");
    if (table.limit() < order) throw Error("divisor_exp_series: table smaller than order");
    std::vector<Rational> inner(static_cast<size_t>(order) + 1, Rational(0));
    for (long s = 1; s <= order; ++s) {
        Rational acc(0);
        for (long a : table.divisors(s)) {
            long b = s / a;
            long m = match_count(b, s);
            if (m == 0) continue;
            long sign = (w == DivisorWeight::Alternating && (a % 2 != 0)) ? -1 : 1;
            acc += Rational(sign * m, a);
        }
        inner[static_cast<size_t>(s)] = -Rational(scale) * acc;
    }
    FormalSeries logpart(Rational(0), 1, order, std::move(inner));
    return logpart.exponential();
}

} // namespace

FormalSeries divisor_exp_series(const ResidueConstraint& rc, DivisorWeight w, long scale,
                                long order, const DivisorTable& table)
{
    if (rc.modulus < 1) throw Error("divisor_exp_series: modulus must be >= 1");
    long p = rc.modulus;
    long r = ((rc.residue % p) + p) % p;
    long rneg = ((-rc.residue % p) + p) % p;
    auto match = [p, r, rneg](long b, long) -> long {
        long bm = b % p;
        return (bm == r ? 1 : 0) + (bm == rneg ? 1 : 0);
    };
    return divisor_exp_impl(match, w, scale, order, table);
}

FormalSeries divisor_exp_series(const CofactorBound& cb, DivisorWeight w, long scale,
                                long order, const DivisorTable& table)
{
    long n0 = cb.min_cofactor;
    auto match = [n0](long b, long) -> long { return b >= n0 ? 1 : 0; };
    return divisor_exp_impl(match, w, scale, order, table);
}

FormalSeries theta_char_series(long a, long b, const std::function<long(long)>& chi,
                               long order, ThetaCharRoute route)
{
    if (a <= 0) throw ConstraintViolation("theta_char_series: a must be positive");
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    if (route == ThetaCharRoute::DirectSum) {
        for (long d = 1; a * d * d + b * d <= order; ++d) {
            long e = a * d * d + b * d;
            if (e < 0) continue;
            c[static_cast<size_t>(e)] += chi(d);
        }
    } else {
        // coefficient of q^n: sum of chi(d) over d | n with a d^2 + b d = n
        for (long n = 1; n <= order; ++n) {
            for (long d = 1; a * d * d + b * d <= n; ++d) {
                if (a * d * d + b * d == n && n % d == 0) c[static_cast<size_t>(n)] += chi(d);
            }
        }
    }
    return FormalSeries(Rational(0), 1, order, std::move(c));
}

} // namespace lerchq
