#pragma once

#include <string>

#include "lkh/suite.hpp"

namespace lkh {

// JSON schema:
//   {suite, config, trials: [{index, seed, gap, verdict, diagnostics}],
//    summary: {min_gap, failures, wall_time}}
// Failed trials carry an extra "error" string and a null gap. Key order is
// fixed, so identical runs serialize identically apart from wall_time.
std::string report_to_json(const RunReport& report);

// One row per trial; doubles at 17 significant digits.
std::string report_to_csv(const RunReport& report);

std::string report_to_human(const RunReport& report);

std::string report_to(const RunReport& report, OutputFormat format);

std::string sweep_to_json(const SweepReport& sweep);
std::string sweep_to_csv(const SweepReport& sweep);
std::string sweep_to_human(const SweepReport& sweep);
std::string sweep_to(const SweepReport& sweep, OutputFormat format);

}  // namespace lkh
