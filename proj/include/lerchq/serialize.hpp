#ifndef LERCHQ_SERIALIZE_HPP
#define LERCHQ_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "lerchq/formal_series.hpp"
#include "lerchq/report.hpp"

namespace lerchq {

/* Series serialize as {offset_num, offset_den, order, coeffs: [[num,den],...]}
 * with numerators and denominators carried as decimal strings so arbitrary
 * precision survives the round trip. step_den is included only when the body
 * lattice is finer than integer steps. */
nlohmann::json series_to_json(const FormalSeries& s);
FormalSeries series_from_json(const nlohmann::json& j);

/* CSV rows (exponent, numerator, denominator); fractional exponents print
 * as num/den. */
std::string series_to_csv(const FormalSeries& s);

nlohmann::json report_to_json(const IdentityReport& r);

} // namespace lerchq

#endif
