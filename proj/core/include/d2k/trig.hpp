#pragma once

#include <functional>
#include <string>
#include <vector>

#include "d2k/report.hpp"

namespace d2k {

/// The catalogued trigonometric sum families. Every left-hand side is a sum
/// over i = 0..k-1 of a summand in t_i = phi + i*pi/k:
///   Sec2Plain        sum sec^2(t_i)                  = k^2 sec^2(k phi)
///   Csc2Plain        sum csc^2(t_i)                  = k^2 csc^2(k phi)
///   Sec2CosWeighted  sum sec^2(t_i) cos(2i pi/k)     = k sec^2(k phi) {cos[2(k-1)phi] - (k-1)cos(2phi)}
///   Sec2SinWeighted  sum sec^2(t_i) sin(2i pi/k)     = k sec^2(k phi) {sin[2(k-1)phi] + (k-1)sin(2phi)}
///   TanCosWeighted   sum tan(t_i) cos(2i pi/k)       = -k sin[(k-2)phi] / cos(k phi)
///   TanSinWeighted   sum tan(t_i) sin(2i pi/k)       =  k cos[(k-2)phi] / cos(k phi) - delta_{k,1}
///   TanPlain         sum tan(t_i)                    = k tan(k phi)
///   TanSin2Shifted   sum tan(t_i) sin(2phi + 2i pi/k) = k - delta_{k,1} cos(2phi)
///   TanCos2Shifted   sum tan(t_i) cos(2phi + 2i pi/k) = delta_{k,1} sin(2phi) - k tan(k phi)
/// All are claimed for odd k only.
enum class SumTag {
  Sec2Plain,
  Csc2Plain,
  Sec2CosWeighted,
  Sec2SinWeighted,
  TanCosWeighted,
  TanSinWeighted,
  TanPlain,
  TanSin2Shifted,
  TanCos2Shifted,
};

inline constexpr int kSumFamilyCount = 9;
const std::vector<SumTag>& all_sum_tags();
const char* tag_name(SumTag tag);

struct SumFamily {
  SumTag tag = SumTag::Sec2Plain;
  int k = 1;
};

/// Distance from phi to the nearest pole of either side of the family's
/// identity (radians, phi-space).
double pole_distance(const SumFamily& f, double phi);

/// Distance from phi to the nearest multiple of pi/(2k): the union of all
/// zeros of cos(k phi), sin(k phi), cos(phi + i pi/k), sin(phi + i pi/k).
/// The samplers reject against this conservative grid.
double grid_pole_distance(int k, double phi);

/// Direct floating-point summation of the family's left-hand side.
/// Throws NearPoleError when phi is within pole_margin of a summand pole.
double lhs_sum(const SumFamily& f, double phi, double pole_margin = kDefaultPoleMargin);

/// Direct evaluation of the claimed closed form.
double rhs_closed(const SumFamily& f, double phi, double pole_margin = kDefaultPoleMargin);

/// Candidate sample angles in [0, pi): the deterministic grid
/// {pi*j/(4k+7), j = 1..4k+6} first, then seeded uniform points, n_samples
/// candidates in total (before pole rejection).
std::vector<double> sample_angles(int k, const SamplingPlan& plan);

/// Sampling engine behind every scalar identity check. Rejects candidates
/// with grid_pole_distance < max(plan.pole_margin, margin_floor), evaluates
/// the relative residual |L-R| / (1 + max(|L|,|R|)) at each accepted point
/// and aggregates the maxima. Throws DegenerateSamplingError when fewer than
/// half the candidates survive, ConfigError when plan.n_samples < 4k+3 (the
/// cleared-denominator degree bound argument needs > 4k+3 points).
IdentityReport check_scalar_identity(const std::string& check_id, const std::string& module, int k,
                                     const std::function<double(double)>& lhs,
                                     const std::function<double(double)>& rhs,
                                     const SamplingPlan& plan, double tolerance,
                                     long degree_bound = 0, double margin_floor = 0.0,
                                     const std::string& detail = "");

/// Negative-control engine: confirms that an identity FAILS, i.e. that the
/// relative residual exceeds `threshold` at >= 90% of accepted points.
IdentityReport confirm_scalar_failure(const std::string& check_id, const std::string& module, int k,
                                      const std::function<double(double)>& lhs,
                                      const std::function<double(double)>& rhs,
                                      const SamplingPlan& plan, double threshold,
                                      const std::string& detail = "");

/// Pole-rejected sampled verification of one catalogued identity.
/// Requires odd k (the closed forms are claimed for odd k only).
IdentityReport verify_identity(const SumFamily& f, const SamplingPlan& plan, double tolerance);

/// Confirms that the Sec2Plain identity fails for even k: an expected-failure
/// control guarding the odd-k restriction.
IdentityReport even_k_negative_control(int even_k, const SamplingPlan& plan);

/// Records (without asserting) the Csc2Plain residual at even k.
IdentityReport even_k_csc2_informational(int even_k, const SamplingPlan& plan, double tolerance);

/// Central-difference consistency between the tan-weighted sums and the
/// sec^2-weighted sums they integrate to: d/dphi of the TanCos/TanSin
/// left-hand sides must match the Sec2Cos/Sec2Sin left-hand sides.
/// Uses h = 1e-5 and relative tolerance 1e-5 at interior points.
IdentityReport verify_derivative_consistency(int k, const SamplingPlan& plan);

}  // namespace d2k
