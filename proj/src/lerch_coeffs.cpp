#include "lerchq/lerch_coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "lerchq/errors.hpp"

namespace lerchq {

int sign_of(long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int eps(long n, long l)
{
    int sn = sign_of(n), sl = sign_of(l);
    return sn * sl * (sn + sl) / 2;
}

int eps0(long n, long l) { return (n > 0 && l > 0) || (n < 0 && l < 0) ? 1 : 0; }

namespace {

inline int parity_sign(long k) { return (k % 2 != 0) ? -1 : 1; }

// largest n with a*n^2 - K*n <= order (K >= 0), plus a safety slot
long quadratic_n_max(long a, long K, long order)
{
    double disc = static_cast<double>(K) * K + 4.0 * a * std::max<long>(order, 0);
    return static_cast<long>((K + std::sqrt(disc)) / (2.0 * a)) + 2;
}

// builds a dense series over integer exponents from a sparse accumulation
FormalSeries from_sparse(const std::map<long, long>& terms, long order)
{
    long off = 0;
    for (const auto& [e, v] : terms) {
        if (e < off) off = e;
    }
    long n = order - off;
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    for (const auto& [e, v] : terms) {
        if (e > order) continue;
        c[static_cast<size_t>(e - off)] += v;
    }
    return FormalSeries(Rational(off), 1, n, std::move(c));
}

} // namespace

long coeff_C1(long a, long b, long c, long n, const DivisorTable& table)
{
    if (n < 1) throw ConstraintViolation("coeff_C1: n must be >= 1");
    if (a < 1 || c == 0) throw ConstraintViolation("coeff_C1: need a >= 1, c != 0");
    long cc = std::labs(c);
    long sum = 0;
    for (long dd : table.divisors(n)) {
        for (int s = 0; s < 2; ++s) {
            long d = s == 0 ? dd : -dd;
            long val = b + a * d - n / d;
            if (val % cc != 0) continue;
            long l = -(val / c);
            sum += parity_sign(d) * eps(d, l);
        }
    }
    return 2 * sum;
}

long coeff_C2(long a, long b, long c, long n, const DivisorTable& table)
{
    if (n < 1) throw ConstraintViolation("coeff_C2: n must be >= 1");
    if (a < 1 || c == 0) throw ConstraintViolation("coeff_C2: need a >= 1, c != 0");
    long cc = std::labs(c);
    long sum = 0;
    for (long d : table.divisors(n)) {
        long val = b + a * d - n / d;
        if (val % cc != 0) continue;
        long k = -(val / c);
        if (eps(d, k) == 0) continue;  // d > 0, so this keeps k > 0 only
        sum += parity_sign(d) * parity_sign(k);
    }
    return 2 * sum;
}

long coeff_Cs(long a, long b, long c, long n, const DivisorTable& table)
{
    return coeff_C1(a, c - b, 2 * c, n, table);
}

long coeff_Cc(long a, long b, long c, long n, const DivisorTable& table)
{
    return coeff_C2(a, c + b, 2 * c, n, table) + coeff_C2(a, c - b, 2 * c, n, table);
}

FormalSeries fs_series(long a, long b, long c, long order, const DivisorTable& table)
{
    if (a < 1 || c < 1) throw ConstraintViolation("fs_series: need a >= 1, c >= 1");
    std::map<long, long> terms;
    for (long n = 1; n <= order; ++n) terms[n] += coeff_Cs(a, b, c, n, table);
    long nmax = quadratic_n_max(a, std::labs(c - b), order);
    for (long n = 1; n <= nmax; ++n) {
        long e = a * n * n + (c - b) * n;
        if (e <= order) terms[e] += 2 * parity_sign(n);
    }
    return from_sparse(terms, order);
}

FormalSeries fc_series(long a, long b, long c, long order, const DivisorTable& table)
{
    if (a < 1 || c < 1) throw ConstraintViolation("fc_series: need a >= 1, c >= 1");
    std::map<long, long> terms;
    terms[0] += 1;
    for (long n = 1; n <= order; ++n) terms[n] += coeff_Cc(a, b, c, n, table);
    for (int pick = 0; pick < 2; ++pick) {
        long beta = pick == 0 ? c - b : c + b;
        long nmax = quadratic_n_max(a, std::labs(beta), order);
        for (long n = 1; n <= nmax; ++n) {
            long e = a * n * n + beta * n;
            if (e <= order) terms[e] += 2 * parity_sign(n);
        }
    }
    return from_sparse(terms, order);
}

FormalSeries fs_bruteforce(long a, long b, long c, long order)
{
    if (a < 1 || c < 1) throw ConstraintViolation("fs_bruteforce: need a >= 1, c >= 1");
    // f_s = 2 * sum_{n>=1, l>=0} (-1)^n (q^{a n^2 + c(2l+1)n - bn} - q^{a n^2 + c(2l+1)n + bn})
    std::map<long, long> terms;
    long ab = std::labs(b);
    long nmax = quadratic_n_max(a, std::max<long>(ab - c, 0), order);
    for (long n = 1; n <= nmax; ++n) {
        int sn = parity_sign(n);
        for (long l = 0;; ++l) {
            long base = a * n * n + c * (2 * l + 1) * n;
            if (base - ab * n > order) break;
            long e1 = base - b * n;
            long e2 = base + b * n;
            if (e1 <= order) terms[e1] += 2 * sn;
            if (e2 <= order) terms[e2] -= 2 * sn;
        }
    }
    return from_sparse(terms, order);
}

FormalSeries fc_bruteforce(long a, long b, long c, long order)
{
    if (a < 1 || c < 1) throw ConstraintViolation("fc_bruteforce: need a >= 1, c >= 1");
    // f_c = 1 + 2 * sum_{n>=1, l>=0} (-1)^{n+l} (q^{a n^2 + bn + c(2l+1)n} + q^{a n^2 - bn + c(2l+1)n})
    std::map<long, long> terms;
    terms[0] += 1;
    long ab = std::labs(b);
    long nmax = quadratic_n_max(a, std::max<long>(ab - c, 0), order);
    for (long n = 1; n <= nmax; ++n) {
        int sn = parity_sign(n);
        for (long l = 0;; ++l) {
            long base = a * n * n + c * (2 * l + 1) * n;
            if (base - ab * n > order) break;
            int s = (l % 2 == 0) ? sn : -sn;
            long e1 = base + b * n;
            long e2 = base - b * n;
            if (e1 <= order) terms[e1] += 2 * s;
            if (e2 <= order) terms[e2] += 2 * s;
        }
    }
    return from_sparse(terms, order);
}

FormalSeries chebyshev_fs(long a, long b, long order)
{
    if (a < 1 || b < 1) throw ConstraintViolation("chebyshev_fs: need a >= 1, b >= 1");
    // U_{b-1}(cos t) = 1 + 2 sum_{j=1..(b-1)/2} cos(2jt)            (b odd)
    //                =     2 sum_{j=0..(b-1)/2} cos((2j+1)t)        (b even)
    // with t = 2 pi n z, so cos(2jt) contributes (q^{2jn}+q^{-2jn})/2.
    std::map<long, long> terms;
    long nmax = quadratic_n_max(a, b - 1, order);
    for (long n = 1; n <= nmax; ++n) {
        int sn = parity_sign(n);
        long base = a * n * n;
        if (b % 2 == 1) {
            if (base <= order) terms[base] += sn;
            for (long j = 1; j <= (b - 1) / 2; ++j) {
                if (base + 2 * j * n <= order) terms[base + 2 * j * n] += sn;
                if (base - 2 * j * n <= order) terms[base - 2 * j * n] += sn;
            }
        } else {
            for (long j = 0; j <= (b - 1) / 2; ++j) {
                if (base + (2 * j + 1) * n <= order) terms[base + (2 * j + 1) * n] += sn;
                if (base - (2 * j + 1) * n <= order) terms[base - (2 * j + 1) * n] += sn;
            }
        }
    }
    return from_sparse(terms, order);
}

} // namespace lerchq
