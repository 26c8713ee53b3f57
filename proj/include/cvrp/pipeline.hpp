#pragma once

#include <optional>
#include <set>

#include "cvrp/metrics.hpp"
#include "cvrp/pattern.hpp"

namespace cvrp {

enum class RotationMode { none, physical, postprocessing };

// One measured-pattern construction: lattice, depointing, nominal steering
// weights, failures, synthesis at the failure-reduced TRP, and main-lobe
// realignment for steered cases.
struct PatternSpec {
  std::set<int> failed_set;
  double res_deg = 5.0;
  double steer_theta_deg = 0.0;  // 0 = broadside; steering is toward +x
  RotationMode rotation_mode = RotationMode::none;
  double depointing_deg = 0.0;
  double trp_base_dbm = 15.0;
};

// Pipeline order: build lattice -> depointing rotation (physical) ->
// steering weights for the nominal direction on the nominal lattice ->
// failures -> synthesis at the failure-reduced TRP. Steered cases realign
// the lobe with +z, either physically (geometry rotated before synthesis) or in
// post-processing (pattern resampled, then re-normalized to its TRP so the
// closure survives the interpolation). Depointing is never corrected.
EirpPattern build_scenario_pattern(const PatternSpec& spec);

// Golden-device trace: no failures, no depointing, no ripple, matching grid
// and steering. Steered references default to the post-processing path;
// physical-mode scenarios compare against a physical-mode reference.
CvrpTrace reference_trace(double res_deg, const Direction& steering,
                          RotationMode mode = RotationMode::postprocessing,
                          double trp_base_dbm = 15.0);

}  // namespace cvrp
