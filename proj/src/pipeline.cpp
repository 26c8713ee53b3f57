#include "cvrp/pipeline.hpp"

#include <stdexcept>

namespace cvrp {

EirpPattern build_scenario_pattern(const PatternSpec& spec) {
  const bool steered = spec.steer_theta_deg != 0.0;
  if (steered && spec.rotation_mode == RotationMode::none) {
    throw std::invalid_argument("steered measurement needs a rotation mode");
  }
  if (!steered && spec.rotation_mode != RotationMode::none) {
    throw std::invalid_argument("rotation mode applies to steered measurements only");
  }

  ArrayGeometry geom = build_ura();
  if (spec.depointing_deg != 0.0) {
    geom = rotate_geometry(geom, {Axis::Y, spec.depointing_deg});
  }

  // Weights always target the nominal direction on the nominal lattice;
  // neither depointing nor the compensation rotation is known to the
  // beamformer.
  ExcitationWeights w = steered
      ? steering_weights(build_ura(), {spec.steer_theta_deg, 0.0})
      : uniform_weights(geom.size());
  w = apply_failures(w, spec.failed_set);

  const double trp = trp_after_failures(spec.trp_base_dbm, static_cast<int>(geom.size()),
                                        static_cast<int>(spec.failed_set.size()));

  // Compensation that brings the steered lobe back to +z.
  const Rotation realign{Axis::Y, -spec.steer_theta_deg};
  if (steered && spec.rotation_mode == RotationMode::physical) {
    geom = rotate_geometry(geom, realign);
  }

  EirpPattern p = synthesize_eirp(geom, w, ElementPattern::cosine(),
                                  AngularGrid::from_resolution(spec.res_deg), trp);

  if (steered && spec.rotation_mode == RotationMode::postprocessing) {
    p = rotate_pattern_postproc(p, realign);
    // Interpolation disturbs the quadrature closure; the measured pattern
    // is re-normalized to the TRP it is declared to carry.
    normalize_to_trp(p);
  }
  return p;
}

CvrpTrace reference_trace(double res_deg, const Direction& steering, RotationMode mode,
                          double trp_base_dbm) {
  PatternSpec spec;
  spec.res_deg = res_deg;
  spec.steer_theta_deg = steering.theta_deg;
  spec.rotation_mode = steering.theta_deg != 0.0 ? mode : RotationMode::none;
  spec.depointing_deg = 0.0;
  spec.trp_base_dbm = trp_base_dbm;
  return cvrp_trace(build_scenario_pattern(spec));
}

}  // namespace cvrp
