#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "cvrp/diagnosis.hpp"

namespace cvrp {

// One experiment cell. The study sets are: failed_set in {{}, {15}, {7,9},
// {7,8,9,10}}, res in {0.5, 1.5, 5}, steering 0 or 45 degrees, rotation
// mode physical/postprocessing (steered only), depointing in {0, 1, 3},
// sigma_db in {0, 1, 2}. Values outside these sets require the extension
// flag; invalid combinations are rejected either way.
struct Scenario {
  std::set<int> failed_set;
  double res_deg = 5.0;
  double steer_theta_deg = 0.0;
  RotationMode rotation_mode = RotationMode::none;
  double depointing_deg = 0.0;
  double sigma_db = 0.0;
  int draws = 1000;
  std::uint64_t seed = 0;
  double trp_base_dbm = 15.0;
  bool extension = false;

  std::string id() const;
  void validate() const;
  PatternSpec pattern_spec() const;
  bool steered() const { return steer_theta_deg != 0.0; }
};

struct ResultRow {
  std::string scenario_id;
  double theta_fov_deg = 0.0;
  double cvrp_mean_dbm = 0.0;
  double ci_lower_dbm = 0.0;
  double ci_upper_dbm = 0.0;
  double cvrp_mean_mw = 0.0;
  double sigma_hat_mw = 0.0;
  double reference_diff_db = 0.0;
};

// Full pipeline for one scenario: pattern, Monte Carlo CI (zero-width for
// sigma = 0) and the difference against the golden reference. 19 rows.
std::vector<ResultRow> run_scenario(const Scenario& s, int n_threads = 0);
std::vector<ResultRow> run_scenario(const Scenario& s, const CvrpTrace& reference,
                                    int n_threads = 0);

std::string result_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_result_csv(std::istream& in);

// ---------------------------------------------------------------------------
// Pattern files.
//
// Header lines:
//   # dtheta_deg=<v>
//   # dphi_deg=<v>
//   # trp_dbm=<v>          (optional; computed from the data when absent)
// followed by "theta_deg,phi_deg,eirp_mw" rows in theta-major order covering
// the full regular grid. Values are written with 17 significant digits so a
// write/read cycle is bit-exact.
// ---------------------------------------------------------------------------
std::string pattern_csv(const EirpPattern& p);
void write_pattern_csv(const EirpPattern& p, const std::filesystem::path& path);
EirpPattern parse_pattern_csv(std::istream& in);
EirpPattern ingest_pattern(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Scenario matrix.
// ---------------------------------------------------------------------------
struct MatrixConfig {
  double trp_base_dbm = 15.0;
  int draws = 1000;
  std::vector<std::uint64_t> seeds = {20240808};
  std::vector<std::set<int>> failed_sets;
  std::vector<double> resolutions_deg;
  std::vector<std::string> steerings;
  std::vector<double> depointings_deg;
  std::vector<double> sigmas_db;
  bool extension = false;

  // The full study matrix: all failure cases, resolutions and depointings;
  // broadside and steered-with-postprocessing at sigma 0/1/2; the physical
  // rotation counterpart at sigma 0 without depointing.
  static MatrixConfig defaults();
  static MatrixConfig from_json(const std::string& text);
  static MatrixConfig from_json_file(const std::filesystem::path& path);
  std::string to_json() const;

  std::vector<Scenario> enumerate() const;
};

// Runs every scenario (optionally filtered by id substring) into outdir,
// one CSV per scenario plus manifest.json listing config echo, seeds, tool
// version, wall time and a checksum per output file. Existing files are
// overwritten (the policy is declared in the manifest). Scenarios run on a
// worker pool of `jobs` workers (0 = hardware concurrency).
void run_matrix(const MatrixConfig& config, const std::filesystem::path& outdir,
                int jobs = 0, const std::string& filter = "");

// FNV-1a 64-bit checksum, hex-encoded; used by the manifest.
std::string fnv1a64_hex(const std::string& bytes);

// ---------------------------------------------------------------------------
// Figure data: long-format CSV "label,theta_fov_deg,value_db" reproducing
// the study plots from a results directory (see README for the exact trace
// sets). Throws when a required scenario CSV is missing, naming it.
// ---------------------------------------------------------------------------
std::string figure_data(const std::filesystem::path& results_dir, int figure_id);

// Pairwise distinguishability rows from a results directory: scenarios are
// grouped by everything but the failure case; within each group the CIs are
// rebuilt from the mW columns and tested for disjointness per theta_fov.
std::string discrimination_csv(const std::filesystem::path& results_dir);

}  // namespace cvrp
