// Command-line front end: pattern synthesis, CVRP sweeps, the scenario
// matrix runner, CI-overlap diagnosis and figure data export.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cvrp/experiment.hpp"

namespace {

using namespace cvrp;

void write_or_print(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << bytes;
}

RotationMode parse_mode(const std::string& mode, double steer_theta) {
  if (steer_theta == 0.0) {
    if (!mode.empty()) {
      throw std::runtime_error("--mode applies to steered synthesis only");
    }
    return RotationMode::none;
  }
  if (mode == "pp" || mode == "postprocessing") return RotationMode::postprocessing;
  if (mode == "ph" || mode == "physical") return RotationMode::physical;
  throw std::runtime_error("steered synthesis needs --mode pp|ph");
}

void print_trace(const CvrpTrace& tr, bool as_prp, const EirpPattern* p) {
  std::cout << (as_prp ? "theta_fov_deg  prp_mw  prp_dbm\n"
                       : "theta_fov_deg  cvrp_mw  cvrp_dbm\n");
  for (std::size_t k = 0; k < tr.theta_fov_deg.size(); ++k) {
    double mw = tr.cvrp_mw[k];
    if (as_prp && p) {
      mw = prp(*p, FovMask::cap(tr.theta_fov_deg[k]));
    }
    std::cout << format_sig(tr.theta_fov_deg[k]) << "  " << format_sig(mw) << "  "
              << format_sig(mw_to_dbm_floored(mw)) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phased-array CVRP simulation and failure-diagnosis toolkit"};
  app.require_subcommand(1);

  // --- synth ---
  auto* synth = app.add_subcommand("synth", "Synthesize a pattern and write it as CSV");
  std::vector<int> synth_fe;
  double synth_res = 5.0, synth_steer = 0.0, synth_dep = 0.0, synth_trp = 15.0;
  std::string synth_mode, synth_out;
  synth->add_option("--fe", synth_fe, "Failed element indices (1..16)");
  synth->add_option("--res", synth_res, "Angular resolution in degrees")->capture_default_str();
  synth->add_option("--steer", synth_steer, "Steering angle from +z toward +x, degrees")
      ->capture_default_str();
  synth->add_option("--mode", synth_mode, "Steered lobe realignment: pp or ph");
  synth->add_option("--dep", synth_dep, "Depointing angle, degrees")->capture_default_str();
  synth->add_option("--trp-base", synth_trp, "Base TRP in dBm")->capture_default_str();
  synth->add_option("-o,--output", synth_out, "Output pattern CSV")->required();

  // --- cvrp ---
  auto* cv = app.add_subcommand("cvrp", "CVRP sweep of a pattern file");
  std::string cv_in, cv_out;
  bool cv_prp = false;
  cv->add_option("-i,--input", cv_in, "Pattern CSV")->required();
  cv->add_flag("--prp", cv_prp, "Report PRP instead of CVRP");
  cv->add_option("-o,--output", cv_out, "Write the sweep as CSV instead of stdout");

  // --- run-matrix ---
  auto* rm = app.add_subcommand("run-matrix", "Run a scenario matrix into a results directory");
  std::string rm_config, rm_out = "results", rm_filter;
  int rm_jobs = 0;
  std::vector<std::uint64_t> rm_seeds;
  int rm_draws = 0;
  rm->add_option("--config", rm_config, "Config JSON (defaults to the full study matrix)");
  rm->add_option("-o,--output", rm_out, "Results directory")->capture_default_str();
  rm->add_option("--seed", rm_seeds, "Override the config seed list");
  rm->add_option("--draws", rm_draws, "Override the Monte Carlo draw count");
  rm->add_option("--jobs", rm_jobs, "Worker count (0 = hardware)")->capture_default_str();
  rm->add_option("--filter", rm_filter, "Only run scenarios whose id contains this substring");

  // --- diagnose ---
  auto* diag = app.add_subcommand("diagnose", "Pairwise CI-overlap distinguishability");
  std::string diag_results, diag_out;
  diag->add_option("--results", diag_results, "Results directory")->required();
  diag->add_option("-o,--output", diag_out, "Output CSV (stdout when omitted)");

  // --- figure-data ---
  auto* fig = app.add_subcommand("figure-data", "Long-format plot data for figures 4..8");
  std::string fig_results, fig_out;
  int fig_id = 0;
  fig->add_option("--results", fig_results, "Results directory")->required();
  fig->add_option("--figure", fig_id, "Figure id in 4..8")->required();
  fig->add_option("-o,--output", fig_out, "Output CSV (stdout when omitted)");

  // --- ingest ---
  auto* ing = app.add_subcommand("ingest", "Validate a pattern file and summarize it");
  std::string ing_in;
  bool ing_trace = false;
  ing->add_option("-i,--input", ing_in, "Pattern CSV")->required();
  ing->add_flag("--trace", ing_trace, "Also print the CVRP sweep");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth) {
      PatternSpec spec;
      spec.failed_set = std::set<int>(synth_fe.begin(), synth_fe.end());
      spec.res_deg = synth_res;
      spec.steer_theta_deg = synth_steer;
      spec.rotation_mode = parse_mode(synth_mode, synth_steer);
      spec.depointing_deg = synth_dep;
      spec.trp_base_dbm = synth_trp;
      const EirpPattern p = build_scenario_pattern(spec);
      write_pattern_csv(p, synth_out);
      std::cout << "wrote " << synth_out << " (trp " << format_sig(p.trp_dbm)
                << " dBm, grid " << format_sig(p.grid.dtheta_deg) << " deg)\n";
    } else if (*cv) {
      const EirpPattern p = ingest_pattern(cv_in);
      const CvrpTrace tr = cvrp_trace(p);
      if (!cv_out.empty()) {
        std::string csv = cv_prp ? "theta_fov_deg,prp_mw\n" : "theta_fov_deg,cvrp_mw\n";
        for (std::size_t k = 0; k < tr.theta_fov_deg.size(); ++k) {
          const double mw =
              cv_prp ? prp(p, FovMask::cap(tr.theta_fov_deg[k])) : tr.cvrp_mw[k];
          csv += format_sig(tr.theta_fov_deg[k]) + "," + format_sig(mw, 10) + "\n";
        }
        write_or_print(csv, cv_out);
      } else {
        print_trace(tr, cv_prp, &p);
      }
    } else if (*rm) {
      MatrixConfig config = rm_config.empty() ? MatrixConfig::defaults()
                                              : MatrixConfig::from_json_file(rm_config);
      if (!rm_seeds.empty()) config.seeds = rm_seeds;
      if (rm_draws > 0) config.draws = rm_draws;
      run_matrix(config, rm_out, rm_jobs, rm_filter);
      std::cout << "results written to " << rm_out << "\n";
    } else if (*diag) {
      write_or_print(discrimination_csv(diag_results), diag_out);
    } else if (*fig) {
      write_or_print(figure_data(fig_results, fig_id), fig_out);
    } else if (*ing) {
      const EirpPattern p = ingest_pattern(ing_in);
      std::cout << "pattern ok: grid " << format_sig(p.grid.dtheta_deg) << " x "
                << format_sig(p.grid.dphi_deg) << " deg (" << p.grid.rows() << " x "
                << p.grid.cols() << " samples), trp " << format_sig(p.trp_dbm) << " dBm\n";
      if (ing_trace) print_trace(cvrp_trace(p), false, nullptr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
