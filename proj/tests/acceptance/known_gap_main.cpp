// The two n = 0 truncation targets that cannot be met: r_q(0) = phi(q) makes
// the series tail sum_{q > Q} phi(q) q^{-3} ~ (6/pi^2) c_N / Q, which is still
// ~6.1e-6 (N=1) resp. ~1.0e-6 (N=4) at the Q = 1e5 budget. They run verbatim
// at the stated parameters and are expected to FAIL; the ctest entry carries
// WILL_FAIL so the expectation is recorded, not hidden.

#include "clab/report.hpp"
#include "clab/suite.hpp"

#include <iostream>

int main() {
    std::cout << clab::report::table_header() << "\n";
    auto reports = clab::suite::run_known_gap_checks(&std::cout);
    int failed = 0;
    for (const auto& r : reports)
        if (!r.pass) ++failed;
    std::cout << "\n" << failed << "/" << reports.size()
              << " out-of-reach truncation cases failed as analyzed (tail ~ (6/pi^2)/Q)\n";
    return failed == 0 ? 0 : 1;
}
