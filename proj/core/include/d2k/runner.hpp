#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "d2k/report.hpp"

namespace d2k {

enum class OutputFormat { Json, Markdown };

struct Coupling {
  double a = 1.0;
  double b = 1.0;
};

/// Grid of five coupling pairs spanning a, b in [0.3, 5].
std::vector<Coupling> default_couplings();

struct RunConfig {
  int k_min = 1;
  int k_max = 12;
  bool odd_only = false;
  long n_samples = 1000;
  double tolerance = 1e-9;  ///< tolerance of the sampled trig-backed checks
  std::uint64_t rng_seed = 42;
  double omega = 1.0;
  std::vector<Coupling> couplings = default_couplings();
  std::vector<std::string> checks;  ///< check-id filter; empty = all
  OutputFormat output_format = OutputFormat::Json;
};

/// Every registered check id, in registration order.
const std::vector<std::string>& known_check_ids();

/// Throws ConfigError when the configuration violates an invariant
/// (k_min > k_max, non-positive tolerance, unknown check id, ...).
void validate(const RunConfig& config);

struct RunSummary {
  long pass = 0;
  long fail = 0;              ///< asserted failures + unconfirmed controls
  long expected_failure = 0;  ///< confirmed negative controls
  long informational = 0;
};

struct RunReport {
  RunConfig config;
  std::vector<IdentityReport> reports;
  RunSummary summary;
  /// Wall time of the run; excluded from the emitted bodies so identical
  /// configurations produce byte-identical output.
  double wall_time_seconds = 0.0;
};

/// Runs every selected check for each k in [k_min, k_max] (odd k only when
/// odd_only is set) and each coupling pair. Per-task RNG seeds are derived
/// from (rng_seed, check_id, k, coupling index) and report assembly is an
/// ordered merge, so any thread count produces the same report.
/// n_threads = 0 picks the hardware concurrency.
RunReport run(const RunConfig& config, unsigned n_threads = 0);

/// 0 when every asserted check passed (confirmed expected failures count as
/// pass, informational entries never count), 1 otherwise.
int exit_code(const RunReport& report);

}  // namespace d2k
