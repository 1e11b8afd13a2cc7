#ifndef LERCHQ_LERCH_COEFFS_HPP
#define LERCHQ_LERCH_COEFFS_HPP

#include "lerchq/divisor_table.hpp"
#include "lerchq/formal_series.hpp"

namespace lerchq {

/* Exact Fourier coefficients of the bilateral Lerch sums
 *
 *   f_s(a,b;c;z) = sum_{n != 0} (-1)^n e((a n^2 + b n) z) / sinh(2 pi i n c z)
 *   f_c(a,b;c;z) = sum_{n in Z} (-1)^n e((a n^2 + b n) z) / cosh(2 pi i n c z)
 *
 * via divisor sums with congruence constraints, plus independent
 * brute-force double-sum expansions used as oracles.
 */

int sign_of(long x);
int eps(long n, long l);   // sign(n)sign(l)(sign(n)+sign(l))/2
int eps0(long n, long l);  // 1 iff n*l > 0

/* 2 * sum over signed d with |d| dividing n of
 *   (-1)^d [ (b+ad-n/d)/c integral ] eps(d, -(b+ad-n/d)/c),
 * the quotient n/d taken with d's sign. */
long coeff_C1(long a, long b, long c, long n, const DivisorTable& table);

/* Positive divisors only; the extra parity factor (-1)^k with
 * k = -(b+ad-n/d)/c enters each surviving term. */
long coeff_C2(long a, long b, long c, long n, const DivisorTable& table);

long coeff_Cs(long a, long b, long c, long n, const DivisorTable& table);  // C1(a, c-b; 2c; n)
long coeff_Cc(long a, long b, long c, long n, const DivisorTable& table);  // C2(a,c+b;2c;n)+C2(a,c-b;2c;n)

/* Assembled expansions: the divisor-coefficient part plus the explicit
 * theta remainder terms 2*sum (-1)^n q^{a n^2 + (c -+ b) n} (one sign for
 * f_s, both for f_c, plus the constant 1 for f_c). */
FormalSeries fs_series(long a, long b, long c, long order, const DivisorTable& table);
FormalSeries fc_series(long a, long b, long c, long order, const DivisorTable& table);

/* Direct geometric expansions of the defining bilateral sums; loop bounds
 * come from the minimal-exponent analysis, so every kept coefficient is
 * complete. */
FormalSeries fs_bruteforce(long a, long b, long c, long order);
FormalSeries fc_bruteforce(long a, long b, long c, long order);

/* sum_{n>=1} (-1)^n q^{a n^2} U_{b-1}(cos(2 pi n z)) as an exact series,
 * using the cosine expansion of the Chebyshev polynomial; equals
 * (1/2) f_s(a,b;1;z) for positive integers b. */
FormalSeries chebyshev_fs(long a, long b, long order);

} // namespace lerchq

#endif
