#ifndef CLAB_SUITE_HPP
#define CLAB_SUITE_HPP

#include "clab/report.hpp"

#include <iosfwd>

namespace clab::suite {

// Runs the acceptance checks with their pinned truncations and tolerances.
// full = false skips the slow two-sided K_n identity. When progress is given,
// one table row per report is streamed as checks finish.
std::vector<report::CheckReport> run_acceptance(bool full, std::ostream* progress = nullptr);

// The two n = 0 Ramanujan-series pairs at the stated budget. The 1/Q tail of
// sum phi(q) q^{-3} cannot reach 1e-6 by Q = 1e5, so these are expected to
// fail; they are kept verbatim and reported honestly.
std::vector<report::CheckReport> run_known_gap_checks(std::ostream* progress = nullptr);

} // namespace clab::suite

#endif
