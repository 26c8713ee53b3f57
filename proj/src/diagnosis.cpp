#include "cvrp/diagnosis.hpp"

#include <algorithm>
#include <stdexcept>

namespace cvrp {

bool cis_disjoint(const Interval& a, const Interval& b) {
  return std::max(a.lower_mw, b.lower_mw) > std::min(a.upper_mw, b.upper_mw);
}

namespace {

void require_matching_sweep(const std::vector<double>& a, const std::vector<double>& b) {
  if (a != b) {
    throw std::invalid_argument("theta_fov sweeps do not match");
  }
}

}  // namespace

DifferenceTrace difference_trace(const CvrpCI& ci, const CvrpTrace& ref, double floor_dbm) {
  require_matching_sweep(ci.theta_fov_deg, ref.theta_fov_deg);
  DifferenceTrace out;
  out.theta_fov_deg = ci.theta_fov_deg;
  const std::size_t n = ci.theta_fov_deg.size();
  out.mean_diff_db.resize(n);
  out.upper_diff_db.resize(n);
  out.lower_diff_db.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ref_dbm = mw_to_dbm_floored(ref.cvrp_mw[k], floor_dbm);
    out.mean_diff_db[k] = mw_to_dbm_floored(ci.mean_mw[k], floor_dbm) - ref_dbm;
    out.upper_diff_db[k] = mw_to_dbm_floored(ci.upper_mw[k], floor_dbm) - ref_dbm;
    out.lower_diff_db[k] = mw_to_dbm_floored(ci.lower_mw[k], floor_dbm) - ref_dbm;
  }
  return out;
}

int DiscriminationMatrix::pair_index(int a, int b) const {
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if ((pairs[p].first == a && pairs[p].second == b) ||
        (pairs[p].first == b && pairs[p].second == a)) {
      return static_cast<int>(p);
    }
  }
  throw std::out_of_range("no such case pair");
}

DiscriminationMatrix discrimination_matrix(const std::vector<LabeledCI>& cases) {
  if (cases.size() < 2) {
    throw std::invalid_argument("discrimination needs at least two cases");
  }
  for (std::size_t c = 1; c < cases.size(); ++c) {
    require_matching_sweep(cases[0].ci.theta_fov_deg, cases[c].ci.theta_fov_deg);
  }
  DiscriminationMatrix m;
  m.theta_fov_deg = cases[0].ci.theta_fov_deg;
  for (const auto& c : cases) m.labels.push_back(c.label);
  const std::size_t nf = m.theta_fov_deg.size();
  for (std::size_t a = 0; a < cases.size(); ++a) {
    for (std::size_t b = a + 1; b < cases.size(); ++b) {
      m.pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
      std::vector<bool> flags(nf);
      for (std::size_t k = 0; k < nf; ++k) {
        const Interval ia{cases[a].ci.lower_mw[k], cases[a].ci.upper_mw[k]};
        const Interval ib{cases[b].ci.lower_mw[k], cases[b].ci.upper_mw[k]};
        flags[k] = cis_disjoint(ia, ib);
      }
      m.distinguishable.push_back(std::move(flags));
    }
  }
  return m;
}

}  // namespace cvrp
