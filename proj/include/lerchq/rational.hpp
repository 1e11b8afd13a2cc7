#ifndef LERCHQ_RATIONAL_HPP
#define LERCHQ_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace lerchq {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline long rational_den_long(const Rational& r) { return mpz_get_si(r.get_den().get_mpz_t()); }
inline long rational_num_long(const Rational& r) { return mpz_get_si(r.get_num().get_mpz_t()); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

} // namespace lerchq

#endif
