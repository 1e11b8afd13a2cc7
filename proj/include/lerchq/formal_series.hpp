#ifndef LERCHQ_FORMAL_SERIES_HPP
#define LERCHQ_FORMAL_SERIES_HPP

#include <complex>
#include <optional>
#include <vector>

#include "lerchq/rational.hpp"

namespace lerchq {

/* Exact truncated power series in q with rational coefficients.
 *
 * The k-th stored coefficient belongs to q^(offset + k/step), where the
 * step denominator and the offset denominator both divide 24; in the
 * common case step == 1 and the body is an ordinary integer-exponent
 * series sitting on top of a rational prefactor q^offset.
 *
 * `order` counts lattice slots: coefficients are reliable for
 * k in [0, order] and unknown (not zero) beyond. Binary operations
 * never extend the reliable range; the result order is the minimum of
 * the operands' reliable exponents after offset alignment.
 */
class FormalSeries {
public:
    FormalSeries();
    FormalSeries(Rational offset, long step, long order, std::vector<Rational> coeffs);

    static FormalSeries zero(long order);
    static FormalSeries one(long order);
    static FormalSeries constant(const Rational& c, long order);
    // coef * q^exponent, reliable through q^max_exponent
    static FormalSeries monomial(const Rational& coef, const Rational& exponent, const Rational& max_exponent);

    const Rational& offset() const { return offset_; }
    long step() const { return step_; }
    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational exponent_of(long k) const;      // offset + k/step
    Rational max_reliable_exponent() const;  // exponent_of(order)
    const Rational& coeff_index(long k) const;

    // Coefficient of q^e. Off-lattice exponents inside the reliable range
    // are exactly zero; exponents beyond the range throw OrderExceeded.
    Rational coeff_at(const Rational& e) const;

    bool is_zero() const;

    FormalSeries operator-() const;
    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
    FormalSeries& operator+=(const FormalSeries& b);
    FormalSeries& operator-=(const FormalSeries& b);
    FormalSeries& operator*=(const FormalSeries& b);

    FormalSeries scaled(const Rational& c) const;
    FormalSeries shifted(const Rational& dexp) const;   // multiply by q^dexp
    FormalSeries truncated_to_exponent(const Rational& e) const;
    FormalSeries rescaled(long new_step) const;

    FormalSeries inverse() const;       // requires nonzero leading coefficient
    FormalSeries exponential() const;   // requires all exponents strictly positive
    FormalSeries pow(long n) const;     // n >= 0 small powers

    // multiply in place by the sparse binomial (1 - sign*q^e), cheap
    void mul_binomial(int sign, const Rational& e);
    // multiply in place by 1/(1 - sign*q^e) = sum_k sign^k q^(k e), e > 0
    void mul_geometric_inverse(int sign, const Rational& e);

    struct Mismatch {
        Rational exponent;
        Rational lhs;
        Rational rhs;
    };
    // Compare coefficients of both series for every exponent <= through.
    // Both must be reliable through that exponent. Returns the first
    // mismatch, or nullopt when the series agree.
    static std::optional<Mismatch> first_disagreement(const FormalSeries& a, const FormalSeries& b,
                                                      const Rational& through);
    static bool agree_through(const FormalSeries& a, const FormalSeries& b, const Rational& through);

    // Numeric evaluation. eval() requires an integer lattice (step 1,
    // integer offset); eval_nome() interprets q = e(z) and every power
    // q^alpha as e(alpha*z), which is the convention used throughout.
    std::complex<double> eval(const std::complex<double>& q) const;
    std::complex<double> eval_nome(const std::complex<double>& z) const;

private:
    Rational offset_;
    long step_ = 1;
    long order_ = 0;
    std::vector<Rational> coeffs_;  // size order_ + 1

    void check_lattice() const;
    static void align(const FormalSeries& a, const FormalSeries& b,
                      FormalSeries& a_out, FormalSeries& b_out);
};

FormalSeries divide(const FormalSeries& num, const FormalSeries& den);

} // namespace lerchq

#endif
