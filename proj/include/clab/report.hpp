#ifndef CLAB_REPORT_HPP
#define CLAB_REPORT_HPP

#include "clab/common.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clab::report {

// One verification outcome. pass <=> abs_error <= tolerance; every numeric
// field must be finite when emitted.
struct CheckReport {
    std::string check_id;
    std::map<std::string, std::string> params;
    cplx computed{0.0, 0.0};
    std::optional<cplx> reference;
    double abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::map<std::string, double> truncation;
    int64_t runtime_ms = 0;

    // sets pass from abs_error <= tolerance and validates finiteness
    void finalize();
};

std::string to_json_line(const CheckReport& report);
CheckReport from_json_line(const std::string& line);

// fixed-width human-readable row; header() gives the column captions
std::string table_header();
std::string table_row(const CheckReport& report);

// exit-code contract helpers
int exit_code_for(const std::vector<CheckReport>& reports);

} // namespace clab::report

#endif
