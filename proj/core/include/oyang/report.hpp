#pragma once

#include <string>
#include <vector>

#include "oyang/suites.hpp"

namespace oyang {

/// Serializes the run into the machine-readable report:
/// {suite, config, checks: [{id, params, status, witness?, elapsed_ms?}],
///  summary: {pass, fail, total}} with stable key order.
/// Timings are emitted only when requested so a fixed seed yields
/// byte-identical files.
std::string emit_report(const RunConfig& config, const std::vector<SuiteResult>& results,
                        bool include_timings = false);

/// Human-oriented one-line-per-suite summary for the terminal.
std::string render_summary(const std::vector<SuiteResult>& results);

}  // namespace oyang
