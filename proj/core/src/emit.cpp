#include "d2k/emit.hpp"

#include <cstdio>
#include <sstream>

namespace d2k {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

const char* format_name(OutputFormat f) { return f == OutputFormat::Json ? "json" : "markdown"; }

std::string emit_json(const RunReport& report) {
  std::ostringstream os;
  const auto& cfg = report.config;
  os << "{\n";
  os << "  \"report_version\": 1,\n";
  os << "  \"config\": {\n";
  os << "    \"k_min\": " << cfg.k_min << ",\n";
  os << "    \"k_max\": " << cfg.k_max << ",\n";
  os << "    \"odd_only\": " << (cfg.odd_only ? "true" : "false") << ",\n";
  os << "    \"n_samples\": " << cfg.n_samples << ",\n";
  os << "    \"tolerance\": " << format_double(cfg.tolerance) << ",\n";
  os << "    \"rng_seed\": " << cfg.rng_seed << ",\n";
  os << "    \"omega\": " << format_double(cfg.omega) << ",\n";
  os << "    \"couplings\": [";
  for (std::size_t i = 0; i < cfg.couplings.size(); ++i) {
    if (i) os << ", ";
    os << "{\"a\": " << format_double(cfg.couplings[i].a)
       << ", \"b\": " << format_double(cfg.couplings[i].b) << "}";
  }
  os << "],\n";
  os << "    \"checks\": [";
  for (std::size_t i = 0; i < cfg.checks.size(); ++i) {
    if (i) os << ", ";
    os << '"' << json_escape(cfg.checks[i]) << '"';
  }
  os << "],\n";
  os << "    \"output_format\": \"" << format_name(cfg.output_format) << "\"\n";
  os << "  },\n";
  os << "  \"reports\": [\n";
  for (std::size_t i = 0; i < report.reports.size(); ++i) {
    const auto& r = report.reports[i];
    os << "    {\"check_id\": \"" << json_escape(r.check_id) << "\", "
       << "\"module\": \"" << json_escape(r.module) << "\", "
       << "\"k\": " << r.k << ", "
       << "\"detail\": \"" << json_escape(r.detail) << "\", "
       << "\"kind\": \"" << check_kind_name(r.kind) << "\", "
       << "\"n_evaluated\": " << r.n_evaluated << ", "
       << "\"n_skipped_near_pole\": " << r.n_skipped_near_pole << ", "
       << "\"n_large_residual\": " << r.n_large_residual << ", "
       << "\"max_abs_residual\": " << format_double(r.max_abs_residual) << ", "
       << "\"max_rel_residual\": " << format_double(r.max_rel_residual) << ", "
       << "\"tolerance\": " << format_double(r.tolerance) << ", "
       << "\"degree_bound\": " << r.degree_bound << ", "
       << "\"pass\": " << (r.pass ? "true" : "false") << ", "
       << "\"status\": \"" << status_label(r) << "\"}";
    os << (i + 1 < report.reports.size() ? ",\n" : "\n");
  }
  os << "  ],\n";
  os << "  \"summary\": {"
     << "\"pass\": " << report.summary.pass << ", "
     << "\"fail\": " << report.summary.fail << ", "
     << "\"expected_failure\": " << report.summary.expected_failure << ", "
     << "\"informational\": " << report.summary.informational << ", "
     << "\"total\": " << report.reports.size() << "}\n";
  os << "}\n";
  return os.str();
}

std::string emit_markdown(const RunReport& report) {
  std::ostringstream os;
  os << "# Verification report\n";
  for (const char* module : {"fock", "dihedral", "trig", "extension"}) {
    bool has_any = false;
    for (const auto& r : report.reports) has_any = has_any || r.module == module;
    if (!has_any) continue;
    os << "\n## " << module << "\n\n";
    os << "| check_id | k | max_rel_residual | tolerance | status |\n";
    os << "|---|---:|---:|---:|---|\n";
    for (const auto& r : report.reports) {
      if (r.module != module) continue;
      os << "| " << r.check_id;
      if (!r.detail.empty()) os << " (" << r.detail << ")";
      os << " | " << r.k << " | " << format_double(r.max_rel_residual) << " | "
         << format_double(r.tolerance) << " | " << status_label(r) << " |\n";
    }
  }
  os << "\n**Summary:** pass=" << report.summary.pass << ", fail=" << report.summary.fail
     << ", expected-failure=" << report.summary.expected_failure
     << ", informational=" << report.summary.informational << "\n";
  return os.str();
}

}  // namespace

const char* check_kind_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::Asserted: return "asserted";
    case CheckKind::ExpectedFailure: return "expected_failure";
    case CheckKind::Informational: return "informational";
  }
  return "unknown";
}

std::string status_label(const IdentityReport& report) {
  switch (report.kind) {
    case CheckKind::Asserted: return report.pass ? "pass" : "fail";
    case CheckKind::ExpectedFailure: return report.pass ? "expected-failure" : "fail";
    case CheckKind::Informational: return "info";
  }
  return "unknown";
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::string emit(const RunReport& report, OutputFormat format) {
  return format == OutputFormat::Json ? emit_json(report) : emit_markdown(report);
}

}  // namespace d2k
