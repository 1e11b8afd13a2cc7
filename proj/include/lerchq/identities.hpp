#ifndef LERCHQ_IDENTITIES_HPP
#define LERCHQ_IDENTITIES_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lerchq/formal_series.hpp"
#include "lerchq/report.hpp"

namespace lerchq {

struct RunConfig {
    long order = 100;           // order for exact-mode identities
    double tol = 1e-8;          // tolerance for numeric-mode identities
    std::uint64_t seed = 12345;
    int jobs = 1;

    void validate() const;
};

struct IdentityDescriptor {
    std::string id;
    std::string mode;  // "exact" | "numeric"
    std::string module_name;
    std::string summary;
    std::function<IdentityReport(const RunConfig&)> run;
};

// the full identity catalog, sorted by id
const std::vector<IdentityDescriptor>& identity_registry();

/* Runs every identity matching the filter. Filters: "all", "mode=exact",
 * "mode=numeric", or a glob over ids ('*' and '?'). Reports come back
 * sorted by id regardless of the number of jobs. */
std::vector<IdentityReport> run_suite(const std::string& filter, const RunConfig& cfg);

bool all_pass(const std::vector<IdentityReport>& reports);

bool glob_match(const std::string& pattern, const std::string& text);

/* Coefficient families for export: f, phi, psi, f_recip, eta, chi,
 * watson_rhs, watson_num, fs(a,b,c), fc(a,b,c), chebyshev(a,b),
 * w3_body(a,p), w4_body(a,p), q3(a,t), q4(a,t). */
FormalSeries coeffs_family(const std::string& family,
                           const std::map<std::string, long>& params, long order);
std::vector<std::string> coeffs_family_names();

} // namespace lerchq

#endif
