#include "lerchq/formal_series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lerchq/errors.hpp"

namespace lerchq {

namespace {

const Rational kZero = Rational(0);

long lcm_long(long a, long b) { return std::lcm(a, b); }

bool divides_24(long d) { return d >= 1 && 24 % d == 0; }

} // namespace

FormalSeries::FormalSeries() : offset_(0), step_(1), order_(0), coeffs_(1, Rational(0)) {}

FormalSeries::FormalSeries(Rational offset, long step, long order, std::vector<Rational> coeffs)
    : offset_(std::move(offset)), step_(step), order_(order), coeffs_(std::move(coeffs))
{
    if (order_ < 0) throw Error("FormalSeries: negative order");
    coeffs_.resize(static_cast<size_t>(order_) + 1, Rational(0));
    check_lattice();
}

void FormalSeries::check_lattice() const
{
    if (!divides_24(step_)) throw LatticeError("FormalSeries: step denominator must divide 24");
    long od = rational_den_long(offset_);
    if (!divides_24(od)) throw LatticeError("FormalSeries: offset denominator must divide 24");
}

FormalSeries FormalSeries::zero(long order)
{
    return FormalSeries(Rational(0), 1, order, std::vector<Rational>(static_cast<size_t>(order) + 1, Rational(0)));
}

FormalSeries FormalSeries::one(long order) { return constant(Rational(1), order); }

FormalSeries FormalSeries::constant(const Rational& c, long order)
{
    FormalSeries s = zero(order);
    s.coeffs_[0] = c;
    return s;
}

FormalSeries FormalSeries::monomial(const Rational& coef, const Rational& exponent, const Rational& max_exponent)
{
    if (max_exponent < exponent) throw Error("FormalSeries::monomial: max_exponent below exponent");
    long step = lcm_long(rational_den_long(exponent), rational_den_long(max_exponent));
    if (!divides_24(step)) throw LatticeError("FormalSeries::monomial: exponent outside the (1/24)Z lattice");
    Rational span = (max_exponent - exponent) * step;
    long order = rational_num_long(span);
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    c[0] = coef;
    return FormalSeries(exponent, step, order, std::move(c));
}

Rational FormalSeries::exponent_of(long k) const
{
    Rational e = offset_ + Rational(k, step_);
    e.canonicalize();
    return e;
}

Rational FormalSeries::max_reliable_exponent() const { return exponent_of(order_); }

const Rational& FormalSeries::coeff_index(long k) const
{
    if (k < 0 || k > order_) throw OrderExceeded();
    return coeffs_[static_cast<size_t>(k)];
}

Rational FormalSeries::coeff_at(const Rational& e) const
{
    Rational rel = (e - offset_) * step_;
    rel.canonicalize();
    if (!is_integer(rel)) {
        if (e < offset_) return Rational(0);
        if (e > max_reliable_exponent()) throw OrderExceeded();
        return Rational(0);
    }
    long k = rational_num_long(rel);
    if (k < 0) return Rational(0);
    if (k > order_) throw OrderExceeded();
    return coeffs_[static_cast<size_t>(k)];
}

bool FormalSeries::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

FormalSeries FormalSeries::rescaled(long new_step) const
{
    if (new_step == step_) return *this;
    if (new_step % step_ != 0) throw LatticeError("rescaled: new step must be a multiple of the current step");
    if (!divides_24(new_step)) throw LatticeError("rescaled: step denominator must divide 24");
    long f = new_step / step_;
    long new_order = order_ * f;
    std::vector<Rational> c(static_cast<size_t>(new_order) + 1, Rational(0));
    for (long k = 0; k <= order_; ++k) c[static_cast<size_t>(k * f)] = coeffs_[static_cast<size_t>(k)];
    return FormalSeries(offset_, new_step, new_order, std::move(c));
}

void FormalSeries::align(const FormalSeries& a, const FormalSeries& b,
                         FormalSeries& a_out, FormalSeries& b_out)
{
    Rational off = std::min(a.offset_, b.offset_);
    Rational diff_a = a.offset_ - off;
    Rational diff_b = b.offset_ - off;
    long step = lcm_long(lcm_long(a.step_, b.step_),
                         lcm_long(rational_den_long(diff_a), rational_den_long(diff_b)));
    if (!divides_24(step)) throw LatticeError("align: combined lattice exceeds (1/24)Z");

    Rational max_rel = std::min(a.max_reliable_exponent(), b.max_reliable_exponent());
    Rational span = (max_rel - off) * step;
    span.canonicalize();
    if (!is_integer(span) || span < 0)
        throw Error("align: empty common reliable range");
    long order = rational_num_long(span);

    auto embed = [&](const FormalSeries& s) {
        std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
        Rational base = (s.offset_ - off) * step;
        base.canonicalize();
        long k0 = rational_num_long(base);
        long f = step / s.step_;
        for (long k = 0; k <= s.order_; ++k) {
            long idx = k0 + k * f;
            if (idx > order) break;
            c[static_cast<size_t>(idx)] = s.coeffs_[static_cast<size_t>(k)];
        }
        return FormalSeries(off, step, order, std::move(c));
    };
    a_out = embed(a);
    b_out = embed(b);
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b)
{
    FormalSeries x, y;
    FormalSeries::align(a, b, x, y);
    for (long k = 0; k <= x.order_; ++k) x.coeffs_[static_cast<size_t>(k)] += y.coeffs_[static_cast<size_t>(k)];
    return x;
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b)
{
    FormalSeries x, y;
    FormalSeries::align(a, b, x, y);
    for (long k = 0; k <= x.order_; ++k) x.coeffs_[static_cast<size_t>(k)] -= y.coeffs_[static_cast<size_t>(k)];
    return x;
}

FormalSeries FormalSeries::operator-() const
{
    FormalSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b)
{
    long step = lcm_long(a.step_, b.step_);
    FormalSeries x = a.rescaled(step);
    FormalSeries y = b.rescaled(step);
    long order = std::min(x.order_, y.order_);
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    for (long i = 0; i <= std::min(x.order_, order); ++i) {
        const Rational& xi = x.coeffs_[static_cast<size_t>(i)];
        if (xi == 0) continue;
        long jmax = std::min(y.order_, order - i);
        for (long j = 0; j <= jmax; ++j) {
            const Rational& yj = y.coeffs_[static_cast<size_t>(j)];
            if (yj == 0) continue;
            c[static_cast<size_t>(i + j)] += xi * yj;
        }
    }
    Rational off = x.offset_ + y.offset_;
    off.canonicalize();
    return FormalSeries(off, step, order, std::move(c));
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& b) { *this = *this + b; return *this; }
FormalSeries& FormalSeries::operator-=(const FormalSeries& b) { *this = *this - b; return *this; }
FormalSeries& FormalSeries::operator*=(const FormalSeries& b) { *this = *this * b; return *this; }

FormalSeries FormalSeries::scaled(const Rational& c) const
{
    FormalSeries r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

FormalSeries FormalSeries::shifted(const Rational& dexp) const
{
    FormalSeries r = *this;
    r.offset_ += dexp;
    r.offset_.canonicalize();
    r.check_lattice();
    return r;
}

FormalSeries FormalSeries::truncated_to_exponent(const Rational& e) const
{
    Rational rel = (e - offset_) * step_;
    rel.canonicalize();
    if (rel < 0) throw Error("truncated_to_exponent: below the leading exponent");
    long k;
    if (is_integer(rel)) {
        k = rational_num_long(rel);
    } else {
        k = static_cast<long>(std::floor(to_double(rel)));
    }
    k = std::min(k, order_);
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + k + 1);
    return FormalSeries(offset_, step_, k, std::move(c));
}

FormalSeries FormalSeries::inverse() const
{
    if (coeffs_[0] == 0) throw ZeroConstantTerm();
    std::vector<Rational> b(static_cast<size_t>(order_) + 1, Rational(0));
    Rational lead_inv = 1 / coeffs_[0];
    b[0] = lead_inv;
    for (long k = 1; k <= order_; ++k) {
        Rational acc(0);
        for (long j = 1; j <= k; ++j) {
            const Rational& aj = coeffs_[static_cast<size_t>(j)];
            if (aj == 0) continue;
            acc += aj * b[static_cast<size_t>(k - j)];
        }
        b[static_cast<size_t>(k)] = -lead_inv * acc;
    }
    Rational off = -offset_;
    off.canonicalize();
    return FormalSeries(off, step_, order_, std::move(b));
}

FormalSeries FormalSeries::exponential() const
{
    // realign so the body starts at exponent 0; operand exponents must be > 0
    if (offset_ < 0) throw NonzeroConstantTerm("series exponential: operand has negative exponents");
    Rational base = offset_ * step_;
    base.canonicalize();
    if (!is_integer(base)) throw LatticeError("series exponential: offset not on the body lattice");
    long k0 = rational_num_long(base);
    long n = k0 + order_;
    std::vector<Rational> a(static_cast<size_t>(n) + 1, Rational(0));
    for (long k = 0; k <= order_; ++k) a[static_cast<size_t>(k0 + k)] = coeffs_[static_cast<size_t>(k)];
    if (a[0] != 0) throw NonzeroConstantTerm();

    // b = exp(a):  k*b_k = sum_{j=1..k} j*a_j*b_{k-j}
    std::vector<Rational> b(static_cast<size_t>(n) + 1, Rational(0));
    b[0] = 1;
    for (long k = 1; k <= n; ++k) {
        Rational acc(0);
        for (long j = 1; j <= k; ++j) {
            const Rational& aj = a[static_cast<size_t>(j)];
            if (aj == 0) continue;
            acc += Rational(j) * aj * b[static_cast<size_t>(k - j)];
        }
        b[static_cast<size_t>(k)] = acc / k;
    }
    return FormalSeries(Rational(0), step_, n, std::move(b));
}

FormalSeries FormalSeries::pow(long n) const
{
    if (n < 0) throw Error("FormalSeries::pow: negative power, use inverse()");
    FormalSeries acc = FormalSeries::one(order_);
    acc = FormalSeries(Rational(0), step_, order_, acc.coeffs());
    FormalSeries base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return acc;
}

void FormalSeries::mul_binomial(int sign, const Rational& e)
{
    // (this) *= (1 - sign*q^e)
    Rational rel = e * step_;
    rel.canonicalize();
    if (!is_integer(rel)) throw LatticeError("mul_binomial: exponent not on the body lattice");
    long s = rational_num_long(rel);
    if (s < 0) throw Error("mul_binomial: negative exponent step");
    if (s > order_) return;
    for (long k = order_; k >= s; --k) {
        if (coeffs_[static_cast<size_t>(k - s)] == 0) continue;
        if (sign > 0)
            coeffs_[static_cast<size_t>(k)] -= coeffs_[static_cast<size_t>(k - s)];
        else
            coeffs_[static_cast<size_t>(k)] += coeffs_[static_cast<size_t>(k - s)];
    }
}

void FormalSeries::mul_geometric_inverse(int sign, const Rational& e)
{
    Rational rel = e * step_;
    rel.canonicalize();
    if (!is_integer(rel)) throw LatticeError("mul_geometric_inverse: exponent not on the body lattice");
    long s = rational_num_long(rel);
    if (s <= 0) throw Error("mul_geometric_inverse: exponent must be positive");
    if (s > order_) return;
    for (long k = s; k <= order_; ++k) {
        if (coeffs_[static_cast<size_t>(k - s)] == 0) continue;
        if (sign > 0)
            coeffs_[static_cast<size_t>(k)] += coeffs_[static_cast<size_t>(k - s)];
        else
            coeffs_[static_cast<size_t>(k)] -= coeffs_[static_cast<size_t>(k - s)];
    }
}

std::optional<FormalSeries::Mismatch> FormalSeries::first_disagreement(const FormalSeries& a, const FormalSeries& b,
                                                                       const Rational& through)
{
    if (a.max_reliable_exponent() < through || b.max_reliable_exponent() < through)
        throw OrderExceeded("first_disagreement: operands not reliable through the requested exponent");
    Rational off = std::min(a.offset_, b.offset_);
    Rational d1 = a.offset_ - off, d2 = b.offset_ - off;
    long step = lcm_long(lcm_long(a.step_, b.step_),
                         lcm_long(rational_den_long(d1), rational_den_long(d2)));
    Rational span = (through - off) * step;
    span.canonicalize();
    long kmax = static_cast<long>(std::floor(to_double(span) + 1e-9));
    for (long k = 0; k <= kmax; ++k) {
        Rational e = off + Rational(k, step);
        e.canonicalize();
        if (e > through) break;
        Rational ca = (e <= a.max_reliable_exponent()) ? a.coeff_at(e) : Rational(0);
        Rational cb = (e <= b.max_reliable_exponent()) ? b.coeff_at(e) : Rational(0);
        if (ca != cb) return Mismatch{e, ca, cb};
    }
    return std::nullopt;
}

bool FormalSeries::agree_through(const FormalSeries& a, const FormalSeries& b, const Rational& through)
{
    return !first_disagreement(a, b, through).has_value();
}

std::complex<double> FormalSeries::eval(const std::complex<double>& q) const
{
    if (step_ != 1 || !is_integer(offset_))
        throw LatticeError("eval: fractional lattice, use eval_nome");
    std::complex<double> acc(0.0, 0.0);
    for (long k = order_; k >= 0; --k)
        acc = acc * q + std::complex<double>(to_double(coeffs_[static_cast<size_t>(k)]), 0.0);
    long off = rational_num_long(offset_);
    std::complex<double> p(1.0, 0.0);
    long n = std::labs(off);
    for (long i = 0; i < n; ++i) p *= q;
    return off >= 0 ? acc * p : acc / p;
}

std::complex<double> FormalSeries::eval_nome(const std::complex<double>& z) const
{
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> qs = std::exp(std::complex<double>(0.0, two_pi) * z / static_cast<double>(step_));
    std::complex<double> acc(0.0, 0.0);
    for (long k = order_; k >= 0; --k)
        acc = acc * qs + std::complex<double>(to_double(coeffs_[static_cast<size_t>(k)]), 0.0);
    std::complex<double> pre = std::exp(std::complex<double>(0.0, two_pi) * z * to_double(offset_));
    return acc * pre;
}

FormalSeries divide(const FormalSeries& num, const FormalSeries& den)
{
    return num * den.inverse();
}

} // namespace lerchq
