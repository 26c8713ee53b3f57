#pragma once

#include <string>
#include <vector>

#include "cvrp/pipeline.hpp"
#include "cvrp/uncertainty.hpp"

namespace cvrp {

struct Interval {
  double lower_mw = 0.0;
  double upper_mw = 0.0;
};

// True when the intervals share no point; touching endpoints count as
// overlap. Two failure hypotheses are separable at 95% confidence exactly
// when this holds for their CIs.
bool cis_disjoint(const Interval& a, const Interval& b);

// Case-minus-reference traces in dB: each of mean/upper/lower converted to
// dBm (with the reporting floor for non-positive values) and differenced
// against the reference trace pointwise.
struct DifferenceTrace {
  std::vector<double> theta_fov_deg;
  std::vector<double> mean_diff_db;
  std::vector<double> upper_diff_db;
  std::vector<double> lower_diff_db;
};

DifferenceTrace difference_trace(const CvrpCI& ci, const CvrpTrace& ref,
                                 double floor_dbm = -100.0);

struct LabeledCI {
  std::string label;
  CvrpCI ci;
};

// Pairwise CI disjointness per theta_fov across labeled failure cases.
struct DiscriminationMatrix {
  std::vector<std::string> labels;
  std::vector<double> theta_fov_deg;
  // distinguishable[p][k] for pair p (see pair_index) at sweep point k.
  std::vector<std::vector<bool>> distinguishable;
  std::vector<std::pair<int, int>> pairs;

  int pair_index(int a, int b) const;
};

DiscriminationMatrix discrimination_matrix(const std::vector<LabeledCI>& cases);

}  // namespace cvrp
