#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "lerchq/errors.hpp"
#include "lerchq/identities.hpp"
#include "lerchq/integral_rep.hpp"
#include "lerchq/numeric.hpp"
#include "lerchq/serialize.hpp"
#include "lerchq/theta_product.hpp"

using namespace lerchq;

namespace {

// accepts forms like 1.5, -2, 0.9i, 0.1+0.9i, 1-0.3i, i, -i
cd parse_complex(const std::string& s)
{
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ConfigInvalid("empty complex literal");
    if (t == "i") return cd(0.0, 1.0);
    if (t == "-i") return cd(0.0, -1.0);
    if (t == "+i") return cd(0.0, 1.0);

    // split at the last +/- that is not an exponent sign and not leading
    size_t split = std::string::npos;
    for (size_t k = t.size(); k-- > 1;) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto to_num = [](std::string u) -> double {
        if (u.empty() || u == "+") return 1.0;
        if (u == "-") return -1.0;
        return std::stod(u);
    };
    if (t.back() == 'i') {
        std::string body = t.substr(0, t.size() - 1);
        if (split == std::string::npos) return cd(0.0, to_num(body));
        return cd(to_num(t.substr(0, split)), to_num(body.substr(split)));
    }
    if (split != std::string::npos && t.find('i') != std::string::npos)
        throw ConfigInvalid("malformed complex literal '" + s + "'");
    return cd(std::stod(t), 0.0);
}

std::string fmt_complex(const cd& v)
{
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", std::real(v), std::imag(v));
    return buf;
}

ParamMap parse_param_list(const std::vector<std::string>& items)
{
    ParamMap out;
    for (const std::string& item : items) {
        std::stringstream ss(item);
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            if (piece.empty()) continue;
            auto eq = piece.find('=');
            if (eq == std::string::npos) throw ConfigInvalid("expected key=value, got '" + piece + "'");
            out[piece.substr(0, eq)] = parse_complex(piece.substr(eq + 1));
        }
    }
    return out;
}

void load_config_file(const std::string& path, RunConfig& cfg)
{
    std::ifstream in(path);
    if (!in) throw ConfigInvalid("cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        };
        trim(key);
        trim(val);
        if (key == "order") cfg.order = std::stol(val);
        else if (key == "tol") cfg.tol = std::stod(val);
        else if (key == "seed") cfg.seed = std::stoull(val);
        else if (key == "jobs") cfg.jobs = std::stoi(val);
        else if (!key.empty()) throw ConfigInvalid("unknown config key '" + key + "'");
    }
}

void print_reports(const std::vector<IdentityReport>& reports)
{
    for (const auto& r : reports) {
        std::printf("[%s] %-22s mode=%-7s max_err=%-12.3e threshold=%-9.1e %5ld ms\n",
                    r.pass ? "pass" : "FAIL", r.identity_id.c_str(), r.mode.c_str(),
                    r.max_abs_error, r.threshold, r.runtime_ms);
    }
    size_t passed = 0;
    for (const auto& r : reports)
        if (r.pass) ++passed;
    std::printf("%zu/%zu identities passed\n", passed, reports.size());
}

void write_reports_json(const std::vector<IdentityReport>& reports, const std::string& path)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    std::ofstream out(path);
    out << arr.dump(2) << '\n';
}

int cmd_eval(const std::string& func, const std::vector<std::string>& raw_args, double tol)
{
    std::vector<cd> a;
    for (const auto& s : raw_args) a.push_back(parse_complex(s));
    auto need = [&](size_t n) {
        if (a.size() != n)
            throw ConfigInvalid("function " + func + " takes " + std::to_string(n) + " argument(s)");
    };

    cd value;
    double bound = -1.0;
    if (func == "theta3") {
        need(2);
        Certified c = theta3_certified(a[0], a[1], tol);
        value = c.value;
        bound = c.bound;
    } else if (func == "theta4") {
        need(2);
        Certified c = theta4_certified(a[0], a[1], tol);
        value = c.value;
        bound = c.bound;
    } else if (func == "eta") {
        need(1);
        Certified c = eta_certified(a[0], tol);
        value = c.value;
        bound = c.bound;
    } else if (func == "eta_d") {
        need(1);
        value = eta_dedekind_num(a[0], tol);
        bound = tol * std::abs(value);
    } else if (func == "erfE") {
        need(1);
        value = erf_e(a[0]);
        bound = 1e-14;
    } else if (func == "beta") {
        need(1);
        value = cd(beta_num(std::real(a[0])), 0.0);
        bound = 1e-14;
    } else if (func == "mu") {
        need(3);
        Certified c = mu_certified(ZwegersParams{a[0], a[1], a[2]}, tol);
        value = c.value;
        bound = c.bound;
    } else if (func == "theta_zw") {
        need(2);
        Certified c = theta_zw_certified(a[0], a[1], tol);
        value = c.value;
        bound = c.bound;
    } else if (func == "R_zw") {
        need(2);
        Certified c = r_zw_certified(a[0], a[1], tol);
        value = c.value;
        bound = c.bound;
    } else if (func == "M_zw") {
        need(3);
        value = m_num(ZwegersParams{a[0], a[1], a[2]}, tol);
        bound = tol;
    } else if (func == "R_f") {
        need(1);
        Certified c = r_f_certified(a[0], tol);
        value = c.value;
        bound = c.bound;
    } else if (func == "S" || func == "fs" || func == "fc") {
        LerchParams p;
        Certified c;
        if (func == "S") {
            need(3);
            p.a = std::real(a[0]);
            p.b = std::real(a[1]);
            c = lerch_certified(LerchFamily::S, p, a[2], tol);
        } else {
            need(4);
            p.a = std::real(a[0]);
            p.b = std::real(a[1]);
            p.c = std::real(a[2]);
            c = lerch_certified(func == "fs" ? LerchFamily::Fs : LerchFamily::Fc, p, a[3], tol);
        }
        value = c.value;
        bound = c.bound;
    } else if (func == "lerch") {
        need(6);
        LerchParams p;
        p.a = std::real(a[0]);
        p.b = std::real(a[1]);
        p.A = std::real(a[2]);
        p.B = std::real(a[3]);
        p.w = a[4];
        Certified c = lerch_certified(LerchFamily::General, p, a[5], tol);
        value = c.value;
        bound = c.bound;
    } else if (func == "f" || func == "phi" || func == "psi") {
        need(1);
        MockName name = func == "f" ? MockName::F : (func == "phi" ? MockName::Phi : MockName::Psi);
        Certified c = mock_certified(name, a[0], tol);
        value = c.value;
        bound = c.bound;
    } else if (func == "F3") {
        need(3);
        value = f3_num(std::real(a[0]), a[1], a[2]);
        bound = 1e-13 * std::abs(value);
    } else {
        throw ConfigInvalid("unknown function '" + func +
                            "'; available: theta3 theta4 eta eta_d erfE beta mu theta_zw R_zw "
                            "M_zw R_f S fs fc lerch f phi psi F3");
    }
    std::printf("%s = %s\n", func.c_str(), fmt_complex(value).c_str());
    if (bound >= 0.0) std::printf("certified error bound = %.3e\n", bound);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"lerchq: exact and numeric verification of Lerch-sum and theta-function identities"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::string json_path;

    // verify
    auto* verify = app.add_subcommand("verify", "run identity checks");
    std::string filter = "all";
    std::string mode;
    verify->add_option("--filter", filter, "identity id glob, e.g. 'thm1-*'");
    verify->add_option("--mode", mode, "exact | numeric");
    auto* v_order = verify->add_option("--order", cfg.order, "series order for exact identities");
    auto* v_tol = verify->add_option("--tol", cfg.tol, "tolerance for numeric identities");
    auto* v_seed = verify->add_option("--seed", cfg.seed, "seed for randomized grids");
    auto* v_jobs = verify->add_option("--jobs", cfg.jobs, "parallel identity runners");
    verify->add_option("--json", json_path, "write the report array to this path");
    verify->add_option("--config", config_path, "key=value config file");

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "export exact series coefficients");
    std::string family;
    std::vector<std::string> family_params;
    std::string format = "csv";
    std::string out_path;
    long coeffs_order = 32;
    coeffs->add_option("family", family, "series family")->required();
    coeffs->add_option("--order", coeffs_order, "truncation order");
    coeffs->add_option("--param", family_params, "family parameters, key=value");
    coeffs->add_option("--format", format, "csv | json");
    coeffs->add_option("--out", out_path, "output file (stdout when omitted)");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a function numerically");
    std::string func;
    std::vector<std::string> eval_args;
    double eval_tol = 1e-12;
    eval->add_option("function", func, "function name")->required();
    eval->add_option("args", eval_args, "complex arguments, e.g. 0.1+0.9i");
    eval->add_option("--tol", eval_tol, "target tolerance");

    // integral
    auto* integral = app.add_subcommand("integral", "run one integral-representation check");
    int theorem = 0;
    std::vector<std::string> integral_params;
    double integral_tol = 1e-8;
    bool emit_json = false;
    integral->add_option("--theorem", theorem, "3,4,8,9,10,11,12,15,16,17,18,19,20,21")->required();
    integral->add_option("--params", integral_params, "key=value list (values may be complex)");
    integral->add_option("--tol", integral_tol, "tolerance");
    integral->add_option("--json", json_path, "write the report to this path");
    integral->add_flag("--print-json", emit_json, "print the report as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            RunConfig file_cfg;
            if (!config_path.empty()) load_config_file(config_path, file_cfg);
            if (!v_order->count()) cfg.order = file_cfg.order;
            if (!v_tol->count()) cfg.tol = file_cfg.tol;
            if (!v_seed->count()) cfg.seed = file_cfg.seed;
            if (!v_jobs->count()) cfg.jobs = file_cfg.jobs;
            std::string f = filter;
            if (!mode.empty()) {
                if (mode != "exact" && mode != "numeric") throw ConfigInvalid("mode must be exact or numeric");
                f = "mode=" + mode;
            }
            auto reports = run_suite(f, cfg);
            print_reports(reports);
            if (!json_path.empty()) write_reports_json(reports, json_path);
            return all_pass(reports) ? 0 : 1;
        }
        if (*coeffs) {
            std::map<std::string, long> p;
            for (const auto& kv : parse_param_list(family_params))
                p[kv.first] = static_cast<long>(std::llround(std::real(kv.second)));
            FormalSeries s = coeffs_family(family, p, coeffs_order);
            std::string payload = format == "json" ? series_to_json(s).dump(2) + "\n" : series_to_csv(s);
            if (format != "json" && format != "csv") throw ConfigInvalid("format must be csv or json");
            if (out_path.empty()) {
                std::fputs(payload.c_str(), stdout);
            } else {
                std::ofstream out(out_path, std::ios::binary);
                out << payload;
            }
            return 0;
        }
        if (*eval) return cmd_eval(func, eval_args, eval_tol);
        if (*integral) {
            static const std::map<int, std::string> by_thm = {
                {3, "thm3-logtheta4"},  {4, "thm4-psi-kernels"},  {8, "thm8-xi"},
                {9, "thm9"},            {10, "thm10-sec-lerch"},  {11, "thm11"},
                {12, "thm12"},          {15, "thm15-s0-lerch"},   {16, "thm16"},
                {17, "thm17-general-sec"}, {18, "thm18"},         {19, "thm19"},
                {20, "thm20"},          {21, "thm21"}};
            auto it = by_thm.find(theorem);
            if (it == by_thm.end()) throw UnknownIdentity("no check registered for that number");
            IdentityReport rep;
            ParamMap pm = parse_param_list(integral_params);
            if (it->second.rfind("thm", 0) == 0 && it->second.find('-') == std::string::npos) {
                rep = verify_transform(it->second, pm, integral_tol);
            } else {
                RunConfig rc;
                rc.tol = integral_tol;
                auto reports = run_suite(it->second, rc);
                rep = reports.front();
            }
            std::printf("[%s] %s max_err=%.3e threshold=%.1e\n", rep.pass ? "pass" : "FAIL",
                        rep.identity_id.c_str(), rep.max_abs_error, rep.threshold);
            if (emit_json || json_path.empty()) std::printf("%s\n", report_to_json(rep).dump(2).c_str());
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                out << report_to_json(rep).dump(2) << '\n';
            }
            return rep.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
