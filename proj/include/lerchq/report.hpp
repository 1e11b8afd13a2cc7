#ifndef LERCHQ_REPORT_HPP
#define LERCHQ_REPORT_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

namespace lerchq {

/* Outcome record of one identity check. status is pass iff
 * max_abs_error <= threshold. */
struct IdentityReport {
    std::string identity_id;
    std::string mode;  // "exact" | "numeric"
    nlohmann::json params = nlohmann::json::object();
    double max_abs_error = 0.0;
    double threshold = 0.0;
    bool pass = false;
    long nodes_used = 0;
    long runtime_ms = 0;
    std::uint64_t seed = 0;

    std::string status() const { return pass ? "pass" : "fail"; }
};

} // namespace lerchq

#endif
