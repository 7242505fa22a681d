#pragma once

#include <stdexcept>
#include <string>

namespace d2k {

/// Thrown when an evaluation point sits closer to a pole of sec/csc/tan
/// than the active pole margin. Callers that sample should resample;
/// the built-in samplers reject such points up front instead.
class NearPoleError : public std::domain_error {
 public:
  NearPoleError(double phi, double distance, double margin)
      : std::domain_error("evaluation point too close to a pole: phi=" + std::to_string(phi) +
                          " distance=" + std::to_string(distance) +
                          " margin=" + std::to_string(margin)),
        phi_(phi),
        distance_(distance) {}

  double phi() const noexcept { return phi_; }
  double distance() const noexcept { return distance_; }

 private:
  double phi_;
  double distance_;
};

/// Thrown when fewer than half of a plan's sample points survive pole
/// rejection, i.e. the margin is too large for this k.
class DegenerateSamplingError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration or sampling plan. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace d2k
