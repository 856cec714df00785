#include "clab/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace clab::report {

using nlohmann::json;

void CheckReport::finalize() {
    if (!is_finite(computed) || !std::isfinite(abs_error) || !std::isfinite(tolerance))
        throw std::runtime_error("CheckReport: non-finite field in '" + check_id + "'");
    if (reference && !is_finite(*reference))
        throw std::runtime_error("CheckReport: non-finite reference in '" + check_id + "'");
    pass = abs_error <= tolerance;
}

std::string to_json_line(const CheckReport& r) {
    json j;
    j["check_id"] = r.check_id;
    j["params"] = r.params;
    j["computed"] = {{"re", r.computed.real()}, {"im", r.computed.imag()}};
    if (r.reference)
        j["reference"] = {{"re", r.reference->real()}, {"im", r.reference->imag()}};
    else
        j["reference"] = nullptr;
    j["abs_error"] = r.abs_error;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["truncation"] = r.truncation;
    j["runtime_ms"] = r.runtime_ms;
    return j.dump();
}

CheckReport from_json_line(const std::string& line) {
    json j = json::parse(line);
    CheckReport r;
    r.check_id = j.at("check_id").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    r.computed = {j.at("computed").at("re").get<double>(), j.at("computed").at("im").get<double>()};
    if (!j.at("reference").is_null())
        r.reference = cplx{j.at("reference").at("re").get<double>(),
                           j.at("reference").at("im").get<double>()};
    r.abs_error = j.at("abs_error").get<double>();
    r.tolerance = j.at("tolerance").get<double>();
    r.pass = j.at("pass").get<bool>();
    r.truncation = j.at("truncation").get<std::map<std::string, double>>();
    r.runtime_ms = j.at("runtime_ms").get<int64_t>();
    return r;
}

namespace {

std::string fmt_complex(cplx z) {
    std::ostringstream os;
    os.precision(10);
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
    return os.str();
}

} // namespace

std::string table_header() {
    std::ostringstream os;
    os << std::left << std::setw(34) << "check" << std::setw(26) << "computed" << std::setw(12)
       << "abs_error" << std::setw(12) << "tol" << "status";
    return os.str();
}

std::string table_row(const CheckReport& r) {
    std::ostringstream os;
    std::ostringstream err;
    err << std::scientific << std::setprecision(2) << r.abs_error;
    std::ostringstream tol;
    tol << std::scientific << std::setprecision(1) << r.tolerance;
    os << std::left << std::setw(34) << r.check_id << std::setw(26) << fmt_complex(r.computed)
       << std::setw(12) << err.str() << std::setw(12) << tol.str()
       << (r.pass ? "PASS" : "FAIL");
    return os.str();
}

int exit_code_for(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

} // namespace clab::report
