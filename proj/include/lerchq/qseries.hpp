#ifndef LERCHQ_QSERIES_HPP
#define LERCHQ_QSERIES_HPP

#include <functional>
#include <optional>

#include "lerchq/divisor_table.hpp"
#include "lerchq/formal_series.hpp"

namespace lerchq {

/* Pochhammer-style product  prod_j (1 - sign*q^(c + j*p))  truncated at
 * q^order. Finite products take n factors; n == nullopt means the infinite
 * product, which stops once c + j*p exceeds the order. sign = +1 gives
 * (1 - ...) factors, sign = -1 gives (1 + ...). */
FormalSeries pochhammer_series(const Rational& c, const Rational& p,
                               std::optional<long> n, int sign, long order);

// (q;q)_inf and (-q;q)_inf
FormalSeries eta_series(long order);
FormalSeries chi_series(long order);

// mock theta q-expansions, exact through q^order
FormalSeries mock_f_series(long order);
FormalSeries phi_series(long order);
FormalSeries psi_series(long order);
// the series for f at the reciprocal nome: sum q^n / (-q;q)_n^2
FormalSeries f_recip_series(long order);

// numerator 2*sum_{n in Z} (-1)^n q^{3n^2/2+n/2} / (1+q^n), exact
FormalSeries watson_numerator_series(long order);
// the full right side: numerator / eta
FormalSeries watson_rhs_series(long order);

enum class DivisorWeight { Flat, Alternating };  // w(A) = 1  or  w(A) = (-1)^A

struct ResidueConstraint {
    long residue;  // counts B === +-residue (mod modulus); both classes counted
    long modulus;
};
struct CofactorBound {
    long min_cofactor;  // counts pairs A*B = s with B >= min_cofactor
};

/* exp( -scale * sum_{s<=order} q^s * sum_{A*B=s, constraint(B)} w(A)/A ),
 * computed in exact rationals. */
FormalSeries divisor_exp_series(const ResidueConstraint& rc, DivisorWeight w, long scale,
                                long order, const DivisorTable& table);
FormalSeries divisor_exp_series(const CofactorBound& cb, DivisorWeight w, long scale,
                                long order, const DivisorTable& table);

enum class ThetaCharRoute { DivisorSum, DirectSum };

/* sum_{n>=1} chi(n) q^{a n^2 + b n} through q^order. The divisor route
 * extracts the coefficient of q^n as the sum of chi(d) over positive d
 * with d | n and a d^2 + b d = n. */
FormalSeries theta_char_series(long a, long b, const std::function<long(long)>& chi,
                               long order, ThetaCharRoute route);

} // namespace lerchq

#endif
