#pragma once

#include <cstdint>
#include <string>

namespace d2k {

/// Default rejection radius (radians) around every zero of cos k*phi,
/// sin k*phi, cos(phi + i*pi/k) and sin(phi + i*pi/k). Keeps |sec^2| below
/// ~1e6 so double precision retains enough residual headroom.
inline constexpr double kDefaultPoleMargin = 1e-3;

/// How a check's outcome is scored.
///   Asserted        pass means the identity held within tolerance.
///   ExpectedFailure a negative control; pass means the residual was
///                   confirmed large (the claim fails where it should).
///   Informational   recorded but never scored against the run.
enum class CheckKind { Asserted, ExpectedFailure, Informational };

const char* check_kind_name(CheckKind kind);

/// Sampling strategy for identity checks over phi in [0, pi): the
/// deterministic grid {pi*j/(4k+7)} first, then seeded uniform points up to
/// n_samples candidates. Points within pole_margin of a pole are rejected
/// and counted, so n_evaluated + n_skipped_near_pole == n_samples.
struct SamplingPlan {
  long n_samples = 1000;
  double pole_margin = kDefaultPoleMargin;
  std::uint64_t rng_seed = 42;
};

/// Outcome of one identity check.
struct IdentityReport {
  std::string check_id;
  std::string module;  ///< owning module: "fock", "dihedral", "trig", "extension"
  std::string detail;  ///< qualifier such as "a=1.7,b=0.4"; empty when n/a
  int k = 0;
  long n_evaluated = 0;
  long n_skipped_near_pole = 0;
  /// Number of evaluated points whose relative residual exceeded the
  /// control threshold; used by expected-failure controls, 0 otherwise.
  long n_large_residual = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  double tolerance = 0.0;
  /// Degree bound of the cleared-denominator trig polynomial when the check
  /// is a sampled polynomial-identity test; 0 when not applicable.
  long degree_bound = 0;
  CheckKind kind = CheckKind::Asserted;
  /// For Asserted checks: max_rel_residual <= tolerance.
  /// For ExpectedFailure controls: the failure was confirmed at >= 90% of
  /// evaluated points.
  bool pass = false;
};

}  // namespace d2k
