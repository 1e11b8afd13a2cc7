#include "lerchq/serialize.hpp"

#include <sstream>

#include "lerchq/errors.hpp"

namespace lerchq {

nlohmann::json series_to_json(const FormalSeries& s)
{
    nlohmann::json j;
    j["offset_num"] = s.offset().get_num().get_str();
    j["offset_den"] = s.offset().get_den().get_str();
    j["order"] = s.order();
    if (s.step() != 1) j["step_den"] = s.step();
    nlohmann::json coeffs = nlohmann::json::array();
    for (long k = 0; k <= s.order(); ++k) {
        const Rational& c = s.coeff_index(k);
        coeffs.push_back(nlohmann::json::array({c.get_num().get_str(), c.get_den().get_str()}));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

FormalSeries series_from_json(const nlohmann::json& j)
{
    Rational offset(mpz_class(j.at("offset_num").get<std::string>()),
                    mpz_class(j.at("offset_den").get<std::string>()));
    offset.canonicalize();
    long order = j.at("order").get<long>();
    long step = j.contains("step_den") ? j.at("step_den").get<long>() : 1;
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<size_t>(order) + 1);
    for (const auto& item : j.at("coeffs")) {
        Rational c(mpz_class(item.at(0).get<std::string>()), mpz_class(item.at(1).get<std::string>()));
        c.canonicalize();
        coeffs.push_back(std::move(c));
    }
    if (static_cast<long>(coeffs.size()) != order + 1)
        throw ConfigInvalid("series_from_json: coefficient count does not match order");
    return FormalSeries(offset, step, order, std::move(coeffs));
}

std::string series_to_csv(const FormalSeries& s)
{
    std::ostringstream out;
    out << "exponent,numerator,denominator\n";
    for (long k = 0; k <= s.order(); ++k) {
        Rational e = s.exponent_of(k);
        const Rational& c = s.coeff_index(k);
        if (is_integer(e))
            out << e.get_num().get_str();
        else
            out << e.get_num().get_str() << '/' << e.get_den().get_str();
        out << ',' << c.get_num().get_str() << ',' << c.get_den().get_str() << '\n';
    }
    return out.str();
}

nlohmann::json report_to_json(const IdentityReport& r)
{
    nlohmann::json j;
    j["identity_id"] = r.identity_id;
    j["mode"] = r.mode;
    j["params"] = r.params;
    j["max_abs_error"] = r.max_abs_error;
    j["threshold"] = r.threshold;
    j["status"] = r.status();
    j["nodes_used"] = r.nodes_used;
    j["runtime_ms"] = r.runtime_ms;
    j["seed"] = r.seed;
    return j;
}

} // namespace lerchq
