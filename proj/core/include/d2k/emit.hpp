#pragma once

#include <string>

#include "d2k/runner.hpp"

namespace d2k {

/// Serializes a run report. Output is a pure function of the RunConfig plus
/// check outcomes: stable key order, floats printed with %.15g, wall time
/// excluded. Two runs with the same configuration emit identical bytes.
///
/// json:     one top-level object with "report_version": 1 (schema in
///           docs/report_schema.md).
/// markdown: one table per module with columns
///           (check_id, k, max_rel_residual, tolerance, status).
std::string emit(const RunReport& report, OutputFormat format);

/// Status label derived from kind and pass:
/// "pass", "fail", "expected-failure" (confirmed control) or "info".
std::string status_label(const IdentityReport& report);

/// Decimal formatting used for every float in emitted reports (%.15g).
std::string format_double(double value);

}  // namespace d2k
