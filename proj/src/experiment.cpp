#include "cvrp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace cvrp {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::set<int>> kStudyFailedSets = {{}, {15}, {7, 9}, {7, 8, 9, 10}};
const std::vector<double> kStudyResolutions = {0.5, 1.5, 5.0};
const std::vector<double> kStudyDepointings = {0.0, 1.0, 3.0};
const std::vector<double> kStudySigmas = {0.0, 1.0, 2.0};
constexpr double kStudySteerTheta = 45.0;

std::string fe_label(const std::set<int>& failed) {
  if (failed.empty()) return "fe0";
  std::string s = "fe";
  bool first = true;
  for (int idx : failed) {
    if (!first) s += '-';
    s += std::to_string(idx);
    first = false;
  }
  return s;
}

template <typename T>
bool in_set(const std::vector<T>& set, const T& v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

std::string steering_label(double steer_theta_deg, RotationMode mode) {
  if (steer_theta_deg == 0.0) return "bs";
  std::string s = "st" + format_sig(steer_theta_deg);
  s += mode == RotationMode::physical ? "ph" : "pp";
  return s;
}

}  // namespace

std::string Scenario::id() const {
  return fe_label(failed_set) + "_res" + format_sig(res_deg) + "_" +
         steering_label(steer_theta_deg, rotation_mode) + "_dep" +
         format_sig(depointing_deg) + "_sig" + format_sig(sigma_db) + "_seed" +
         std::to_string(seed);
}

void Scenario::validate() const {
  for (int idx : failed_set) {
    if (idx < 1 || idx > 16) {
      throw std::invalid_argument("failed element index " + std::to_string(idx) +
                                  " outside [1, 16]");
    }
  }
  if (steer_theta_deg == 0.0) {
    if (rotation_mode == RotationMode::physical) {
      throw std::invalid_argument("physical rotation mode is invalid for broadside scenarios");
    }
    if (rotation_mode == RotationMode::postprocessing) {
      throw std::invalid_argument("post-processing rotation mode is invalid for broadside scenarios");
    }
  } else if (rotation_mode == RotationMode::none) {
    throw std::invalid_argument("steered scenarios must pick a rotation mode");
  }
  if (sigma_db < 0.0) throw std::invalid_argument("sigma_db must be non-negative");
  if (sigma_db > 0.0 && draws < 2) throw std::invalid_argument("draws must be >= 2");

  if (extension) return;
  const auto fail = [](const std::string& what) {
    throw std::invalid_argument(what + " is outside the study matrix; set the extension flag "
                                "to run it anyway");
  };
  if (!in_set(kStudyFailedSets, failed_set)) fail("failure set " + fe_label(failed_set));
  if (!in_set(kStudyResolutions, res_deg)) fail("resolution " + format_sig(res_deg));
  if (steer_theta_deg != 0.0 && steer_theta_deg != kStudySteerTheta) {
    fail("steering angle " + format_sig(steer_theta_deg));
  }
  if (!in_set(kStudyDepointings, depointing_deg)) fail("depointing " + format_sig(depointing_deg));
  if (!in_set(kStudySigmas, sigma_db)) fail("sigma " + format_sig(sigma_db));
}

PatternSpec Scenario::pattern_spec() const {
  PatternSpec spec;
  spec.failed_set = failed_set;
  spec.res_deg = res_deg;
  spec.steer_theta_deg = steer_theta_deg;
  spec.rotation_mode = rotation_mode;
  spec.depointing_deg = depointing_deg;
  spec.trp_base_dbm = trp_base_dbm;
  return spec;
}

std::vector<ResultRow> run_scenario(const Scenario& s, int n_threads) {
  s.validate();
  const CvrpTrace ref = reference_trace(
      s.res_deg, {s.steer_theta_deg, 0.0},
      s.steered() ? s.rotation_mode : RotationMode::postprocessing, s.trp_base_dbm);
  return run_scenario(s, ref, n_threads);
}

std::vector<ResultRow> run_scenario(const Scenario& s, const CvrpTrace& reference,
                                    int n_threads) {
  s.validate();
  const EirpPattern p = build_scenario_pattern(s.pattern_spec());

  CvrpCI ci;
  if (s.sigma_db == 0.0) {
    const CvrpTrace tr = cvrp_trace(p);
    ci.theta_fov_deg = tr.theta_fov_deg;
    ci.mean_mw = tr.cvrp_mw;
    ci.sigma_hat_mw.assign(tr.cvrp_mw.size(), 0.0);
    ci.lower_mw = tr.cvrp_mw;
    ci.upper_mw = tr.cvrp_mw;
  } else {
    ci = monte_carlo_cvrp(p, {s.sigma_db, s.draws, s.seed}, n_threads);
  }

  if (ci.theta_fov_deg != reference.theta_fov_deg) {
    throw std::invalid_argument("reference trace sweep does not match");
  }

  std::vector<ResultRow> rows;
  rows.reserve(ci.theta_fov_deg.size());
  const std::string sid = s.id();
  for (std::size_t k = 0; k < ci.theta_fov_deg.size(); ++k) {
    ResultRow r;
    r.scenario_id = sid;
    r.theta_fov_deg = ci.theta_fov_deg[k];
    r.cvrp_mean_mw = ci.mean_mw[k];
    r.sigma_hat_mw = ci.sigma_hat_mw[k];
    r.cvrp_mean_dbm = mw_to_dbm_floored(ci.mean_mw[k]);
    r.ci_lower_dbm = mw_to_dbm_floored(ci.lower_mw[k]);
    r.ci_upper_dbm = mw_to_dbm_floored(ci.upper_mw[k]);
    r.reference_diff_db = r.cvrp_mean_dbm - mw_to_dbm_floored(reference.cvrp_mw[k]);
    rows.push_back(r);
  }
  return rows;
}

std::string result_csv(const std::vector<ResultRow>& rows) {
  std::string out =
      "scenario_id,theta_fov_deg,cvrp_mean_dbm,ci_lower_dbm,ci_upper_dbm,"
      "cvrp_mean_mw,sigma_hat_mw,reference_diff_db\n";
  for (const ResultRow& r : rows) {
    out += r.scenario_id;
    out += ',';
    out += format_sig(r.theta_fov_deg);
    out += ',';
    out += format_sig(r.cvrp_mean_dbm, 10);
    out += ',';
    out += format_sig(r.ci_lower_dbm, 10);
    out += ',';
    out += format_sig(r.ci_upper_dbm, 10);
    out += ',';
    out += format_sig(r.cvrp_mean_mw, 10);
    out += ',';
    out += format_sig(r.sigma_hat_mw, 10);
    out += ',';
    out += format_sig(r.reference_diff_db, 10);
    out += '\n';
  }
  return out;
}

std::vector<ResultRow> parse_result_csv(std::istream& in) {
  std::vector<ResultRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::stringstream ss(line);
    std::string field;
    ResultRow r;
    std::getline(ss, r.scenario_id, ',');
    auto next = [&]() {
      if (!std::getline(ss, field, ',')) {
        throw std::runtime_error("malformed result row: " + line);
      }
      return std::stod(field);
    };
    r.theta_fov_deg = next();
    r.cvrp_mean_dbm = next();
    r.ci_lower_dbm = next();
    r.ci_upper_dbm = next();
    r.cvrp_mean_mw = next();
    r.sigma_hat_mw = next();
    r.reference_diff_db = next();
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Pattern files.
// ---------------------------------------------------------------------------

std::string pattern_csv(const EirpPattern& p) {
  std::string out;
  out.reserve(p.values.size() * 32);
  out += "# dtheta_deg=" + format_exact(p.grid.dtheta_deg) + "\n";
  out += "# dphi_deg=" + format_exact(p.grid.dphi_deg) + "\n";
  out += "# trp_dbm=" + format_exact(p.trp_dbm) + "\n";
  out += "theta_deg,phi_deg,eirp_mw\n";
  for (int i = 0; i < p.grid.rows(); ++i) {
    for (int j = 0; j < p.grid.cols(); ++j) {
      out += format_exact(p.grid.theta_deg(i));
      out += ',';
      out += format_exact(p.grid.phi_deg(j));
      out += ',';
      out += format_exact(p.at(i, j));
      out += '\n';
    }
  }
  return out;
}

namespace {

void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

void write_pattern_csv(const EirpPattern& p, const std::filesystem::path& path) {
  atomic_write(path, pattern_csv(p));
}

EirpPattern parse_pattern_csv(std::istream& in) {
  double dtheta = 0.0, dphi = 0.0, trp = 0.0;
  bool have_dtheta = false, have_dphi = false, have_trp = false;

  std::string line;
  // header comments
  while (in.peek() == '#') {
    std::getline(in, line);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(1, eq - 1);
    key.erase(std::remove(key.begin(), key.end(), ' '), key.end());
    const double value = std::stod(line.substr(eq + 1));
    if (key == "dtheta_deg") {
      dtheta = value;
      have_dtheta = true;
    } else if (key == "dphi_deg") {
      dphi = value;
      have_dphi = true;
    } else if (key == "trp_dbm") {
      trp = value;
      have_trp = true;
    }
  }
  if (!have_dtheta || !have_dphi) {
    throw std::runtime_error("pattern file is missing the dtheta_deg/dphi_deg header lines");
  }

  const AngularGrid grid = AngularGrid::make(dtheta, dphi);
  EirpPattern p = EirpPattern::zeros(grid, 0.0);

  if (!std::getline(in, line) || line != "theta_deg,phi_deg,eirp_mw") {
    throw std::runtime_error("pattern file is missing the theta_deg,phi_deg,eirp_mw column header");
  }

  for (int i = 0; i < grid.rows(); ++i) {
    for (int j = 0; j < grid.cols(); ++j) {
      const std::string expected = "theta=" + format_sig(grid.theta_deg(i)) +
                                   ", phi=" + format_sig(grid.phi_deg(j));
      if (!std::getline(in, line)) {
        throw std::runtime_error("pattern file ends early; missing sample at " + expected);
      }
      std::stringstream ss(line);
      std::string f1, f2, f3;
      if (!std::getline(ss, f1, ',') || !std::getline(ss, f2, ',') || !std::getline(ss, f3)) {
        throw std::runtime_error("malformed pattern row '" + line + "'; expected " + expected);
      }
      const double theta = std::stod(f1), phi = std::stod(f2), v = std::stod(f3);
      if (std::abs(theta - grid.theta_deg(i)) > 1e-9 || std::abs(phi - grid.phi_deg(j)) > 1e-9) {
        throw std::runtime_error("irregular grid: got theta=" + f1 + ", phi=" + f2 +
                                 " where " + expected + " was expected");
      }
      if (v < 0.0) {
        throw std::runtime_error("negative EIRP value " + f3 + " at " + expected);
      }
      p.at(i, j) = v;
    }
  }
  while (std::getline(in, line)) {
    if (!line.empty()) {
      throw std::runtime_error("unexpected trailing data: '" + line + "'");
    }
  }

  const double q = quadrature_sum(p, FovMask::cap(180.0));
  const double area = cap_area(grid, FovMask::cap(180.0));
  if (!(q > 0.0)) throw std::runtime_error("pattern carries no power");
  const double trp_data_mw = q / area;
  if (have_trp) {
    const double declared_mw = dbm_to_mw(trp);
    if (std::abs(declared_mw - trp_data_mw) > 1e-9 * declared_mw) {
      throw std::runtime_error(
          "declared trp_dbm=" + format_sig(trp, 10) + " disagrees with the data (" +
          format_sig(mw_to_dbm(trp_data_mw), 10) +
          " dBm); drop the header line to compute it from the data");
    }
    p.trp_dbm = trp;
  } else {
    p.trp_dbm = mw_to_dbm(trp_data_mw);
  }
  return p;
}

EirpPattern ingest_pattern(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  return parse_pattern_csv(f);
}

// ---------------------------------------------------------------------------
// Matrix.
// ---------------------------------------------------------------------------

MatrixConfig MatrixConfig::defaults() {
  MatrixConfig c;
  c.failed_sets = kStudyFailedSets;
  c.resolutions_deg = kStudyResolutions;
  c.steerings = {"broadside", "steered45_postproc", "steered45_physical"};
  c.depointings_deg = kStudyDepointings;
  c.sigmas_db = kStudySigmas;
  return c;
}

MatrixConfig MatrixConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("config is not valid JSON: ") + e.what());
  }
  MatrixConfig c = defaults();
  if (j.contains("trp_base_dbm")) c.trp_base_dbm = j["trp_base_dbm"].get<double>();
  if (j.contains("draws")) c.draws = j["draws"].get<int>();
  if (j.contains("seeds")) c.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
  if (j.contains("failed_sets")) {
    c.failed_sets.clear();
    for (const auto& arr : j["failed_sets"]) {
      std::set<int> fe;
      for (const auto& v : arr) fe.insert(v.get<int>());
      c.failed_sets.push_back(std::move(fe));
    }
  }
  if (j.contains("resolutions_deg")) {
    c.resolutions_deg = j["resolutions_deg"].get<std::vector<double>>();
  }
  if (j.contains("steerings")) c.steerings = j["steerings"].get<std::vector<std::string>>();
  if (j.contains("depointings_deg")) {
    c.depointings_deg = j["depointings_deg"].get<std::vector<double>>();
  }
  if (j.contains("sigmas_db")) c.sigmas_db = j["sigmas_db"].get<std::vector<double>>();
  if (j.contains("extension")) c.extension = j["extension"].get<bool>();
  return c;
}

MatrixConfig MatrixConfig::from_json_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return from_json(ss.str());
}

std::string MatrixConfig::to_json() const {
  json j;
  j["trp_base_dbm"] = trp_base_dbm;
  j["draws"] = draws;
  j["seeds"] = seeds;
  j["failed_sets"] = json::array();
  for (const auto& fe : failed_sets) j["failed_sets"].push_back(fe);
  j["resolutions_deg"] = resolutions_deg;
  j["steerings"] = steerings;
  j["depointings_deg"] = depointings_deg;
  j["sigmas_db"] = sigmas_db;
  j["extension"] = extension;
  return j.dump(2);
}

std::vector<Scenario> MatrixConfig::enumerate() const {
  struct SteeringChoice {
    double theta;
    RotationMode mode;
  };
  std::vector<SteeringChoice> choices;
  for (const std::string& s : steerings) {
    if (s == "broadside") {
      choices.push_back({0.0, RotationMode::none});
    } else if (s == "steered45_postproc") {
      choices.push_back({kStudySteerTheta, RotationMode::postprocessing});
    } else if (s == "steered45_physical") {
      choices.push_back({kStudySteerTheta, RotationMode::physical});
    } else {
      throw std::runtime_error("unknown steering '" + s + "'");
    }
  }
  if (seeds.empty()) throw std::runtime_error("config needs at least one seed");

  std::vector<Scenario> out;
  for (double res : resolutions_deg) {
    for (const auto& fe : failed_sets) {
      for (const auto& choice : choices) {
        for (double dep : depointings_deg) {
          for (double sig : sigmas_db) {
            // The physical-rotation branch exists to quantify the
            // interpolation-free baseline; it is only run error-free and
            // aligned.
            if (choice.mode == RotationMode::physical && (sig != 0.0 || dep != 0.0)) {
              continue;
            }
            const std::size_t n_seeds = sig == 0.0 ? 1 : seeds.size();
            for (std::size_t si = 0; si < n_seeds; ++si) {
              Scenario s;
              s.failed_set = fe;
              s.res_deg = res;
              s.steer_theta_deg = choice.theta;
              s.rotation_mode = choice.mode;
              s.depointing_deg = dep;
              s.sigma_db = sig;
              s.draws = draws;
              s.seed = seeds[si];
              s.trp_base_dbm = trp_base_dbm;
              s.extension = extension;
              out.push_back(std::move(s));
            }
          }
        }
      }
    }
  }
  return out;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void run_matrix(const MatrixConfig& config, const std::filesystem::path& outdir, int jobs,
                const std::string& filter) {
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<Scenario> scenarios = config.enumerate();
  if (!filter.empty()) {
    std::erase_if(scenarios,
                  [&](const Scenario& s) { return s.id().find(filter) == std::string::npos; });
  }
  for (const Scenario& s : scenarios) s.validate();

  std::filesystem::create_directories(outdir);

  // Golden references, one per (resolution, steering) pair actually used.
  std::map<std::string, CvrpTrace> refs;
  for (const Scenario& s : scenarios) {
    const std::string key =
        format_sig(s.res_deg) + "/" + steering_label(s.steer_theta_deg, s.rotation_mode);
    if (!refs.count(key)) {
      refs.emplace(key, reference_trace(s.res_deg, {s.steer_theta_deg, 0.0},
                                        s.steered() ? s.rotation_mode
                                                    : RotationMode::postprocessing,
                                        s.trp_base_dbm));
    }
  }

  int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > static_cast<int>(scenarios.size())) {
    workers = std::max<int>(1, static_cast<int>(scenarios.size()));
  }
  const int hw = std::max(1u, std::thread::hardware_concurrency());
  const int inner_threads = std::max(1, hw / workers);

  std::map<std::string, std::pair<std::string, std::size_t>> files;  // name -> (checksum, bytes)
  std::mutex files_mutex;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    while (!failed.load()) {
      const std::size_t k = next.fetch_add(1);
      if (k >= scenarios.size()) break;
      try {
        const Scenario& s = scenarios[k];
        const std::string key =
            format_sig(s.res_deg) + "/" + steering_label(s.steer_theta_deg, s.rotation_mode);
        const std::string bytes = result_csv(run_scenario(s, refs.at(key), inner_threads));
        const std::string name = s.id() + ".csv";
        atomic_write(outdir / name, bytes);
        std::lock_guard<std::mutex> lock(files_mutex);
        files[name] = {fnv1a64_hex(bytes), bytes.size()};
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error.empty()) first_error = e.what();
        failed.store(true);
      }
    }
  };

  if (workers == 1 || scenarios.empty()) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw std::runtime_error(first_error);

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  json manifest;
  manifest["tool"] = kVersion;
  manifest["overwrite_policy"] = "overwrite";
  manifest["wall_time_seconds"] = wall;
  manifest["scenario_count"] = scenarios.size();
  manifest["filter"] = filter;
  manifest["config"] = json::parse(config.to_json());
  manifest["files"] = json::object();
  for (const auto& [name, info] : files) {
    manifest["files"][name] = {{"fnv1a64", info.first}, {"bytes", info.second}};
  }
  atomic_write(outdir / "manifest.json", manifest.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// Figure data and discrimination from a results directory.
// ---------------------------------------------------------------------------

namespace {

struct ParsedId {
  std::string fe;
  std::string res;
  std::string steering;
  std::string dep;
  std::string sig;
  std::string seed;
};

bool parse_id(const std::string& id, ParsedId& out) {
  std::vector<std::string> parts;
  std::stringstream ss(id);
  std::string part;
  while (std::getline(ss, part, '_')) parts.push_back(part);
  if (parts.size() != 6) return false;
  if (parts[1].rfind("res", 0) != 0 || parts[3].rfind("dep", 0) != 0 ||
      parts[4].rfind("sig", 0) != 0 || parts[5].rfind("seed", 0) != 0) {
    return false;
  }
  out.fe = parts[0];
  out.res = parts[1].substr(3);
  out.steering = parts[2];
  out.dep = parts[3].substr(3);
  out.sig = parts[4].substr(3);
  out.seed = parts[5].substr(4);
  return true;
}

std::vector<ResultRow> load_rows(const std::filesystem::path& file) {
  std::ifstream f(file);
  if (!f) {
    throw std::runtime_error("required scenario results missing: " + file.string());
  }
  return parse_result_csv(f);
}

// All scenario ids present in a results directory, sorted.
std::vector<std::string> scan_ids(const std::filesystem::path& dir) {
  std::vector<std::string> ids;
  if (!std::filesystem::is_directory(dir)) {
    throw std::runtime_error("results directory not found: " + dir.string());
  }
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".csv") continue;
    ParsedId p;
    if (parse_id(entry.path().stem().string(), p)) {
      ids.push_back(entry.path().stem().string());
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

// First (smallest) id matching the given fields, or an error naming the cell.
std::string find_id(const std::vector<std::string>& ids, const std::string& fe,
                    const std::string& res, const std::string& steering,
                    const std::string& dep, const std::string& sig) {
  const std::string prefix = fe + "_res" + res + "_" + steering + "_dep" + dep + "_sig" + sig + "_seed";
  for (const std::string& id : ids) {
    if (id.rfind(prefix, 0) == 0) return id;
  }
  throw std::runtime_error("figure needs scenario '" + prefix + "*' which is not in the results");
}

const std::vector<std::string> kFeLabels = {"fe0", "fe15", "fe7-9", "fe7-8-9-10"};

void append_triplet_rows(std::string& out, const std::vector<ResultRow>& rows,
                         const std::string& label, double min_fov) {
  for (const ResultRow& r : rows) {
    if (r.theta_fov_deg < min_fov) continue;
    const double ref_dbm = r.cvrp_mean_dbm - r.reference_diff_db;
    const double mean = r.cvrp_mean_dbm, up = r.ci_upper_dbm, lo = r.ci_lower_dbm;
    out += label + " mean," + format_sig(r.theta_fov_deg) + "," +
           format_sig(mean - ref_dbm) + "\n";
    if (up > -100.0) {
      out += label + " upper," + format_sig(r.theta_fov_deg) + "," +
             format_sig(up - ref_dbm) + "\n";
    }
    if (lo > -100.0) {
      out += label + " lower," + format_sig(r.theta_fov_deg) + "," +
             format_sig(lo - ref_dbm) + "\n";
    }
  }
}

}  // namespace

std::string figure_data(const std::filesystem::path& results_dir, int figure_id) {
  const std::vector<std::string> ids = scan_ids(results_dir);
  std::string out = "label,theta_fov_deg,value_db\n";

  switch (figure_id) {
    case 4: {
      // Post-processing minus physical rotation, error-free steered cases.
      for (const std::string res : {"0.5", "1.5", "5"}) {
        for (const std::string& fe : kFeLabels) {
          const auto pp = load_rows(results_dir /
                                    (find_id(ids, fe, res, "st45pp", "0", "0") + ".csv"));
          const auto ph = load_rows(results_dir /
                                    (find_id(ids, fe, res, "st45ph", "0", "0") + ".csv"));
          if (pp.size() != ph.size()) throw std::runtime_error("sweep mismatch in figure 4");
          const std::string label = fe + " res" + res + " dep0";
          for (std::size_t k = 0; k < pp.size(); ++k) {
            out += label + "," + format_sig(pp[k].theta_fov_deg) + "," +
                   format_sig(pp[k].cvrp_mean_dbm - ph[k].cvrp_mean_dbm) + "\n";
          }
        }
      }
      return out;
    }
    case 5:
    case 6: {
      // Broadside, sigma 1, res 5: every available failure/depointing combo
      // against the golden reference. Figure 6 is the zoom from 10 degrees.
      const double min_fov = figure_id == 6 ? 10.0 : 0.0;
      for (const std::string& fe : kFeLabels) {
        for (const std::string dep : {"0", "1", "3"}) {
          std::string id;
          try {
            id = find_id(ids, fe, "5", "bs", dep, "1");
          } catch (const std::runtime_error&) {
            continue;  // combo not in this results set
          }
          append_triplet_rows(out, load_rows(results_dir / (id + ".csv")),
                              fe + " dep" + dep, min_fov);
        }
      }
      if (out == "label,theta_fov_deg,value_db\n") {
        throw std::runtime_error(
            "figure needs broadside res5 sig1 scenarios which are not in the results");
      }
      return out;
    }
    case 7: {
      for (const std::string& fe : kFeLabels) {
        const std::string id = find_id(ids, fe, "5", "st45pp", "0", "2");
        append_triplet_rows(out, load_rows(results_dir / (id + ".csv")), fe, 10.0);
      }
      return out;
    }
    case 8: {
      for (const std::string& fe : kFeLabels) {
        const std::string id = find_id(ids, fe, "1.5", "bs", "0", "2");
        append_triplet_rows(out, load_rows(results_dir / (id + ".csv")), fe, 10.0);
      }
      return out;
    }
    default:
      throw std::runtime_error("figure id must be one of 4, 5, 6, 7, 8");
  }
}

std::string discrimination_csv(const std::filesystem::path& results_dir) {
  const std::vector<std::string> ids = scan_ids(results_dir);

  // group key -> (fe label -> rows)
  std::map<std::string, std::map<std::string, std::vector<ResultRow>>> groups;
  for (const std::string& id : ids) {
    ParsedId p;
    parse_id(id, p);
    if (p.sig == "0") continue;
    const std::string key =
        "res" + p.res + "_" + p.steering + "_dep" + p.dep + "_sig" + p.sig + "_seed" + p.seed;
    groups[key][p.fe] = load_rows(results_dir / (id + ".csv"));
  }

  std::string out = "group,theta_fov_deg,case_a,case_b,distinguishable\n";
  for (const auto& [key, cases] : groups) {
    if (cases.size() < 2) continue;
    std::vector<std::string> labels;
    for (const auto& [fe, rows] : cases) labels.push_back(fe);
    for (std::size_t a = 0; a < labels.size(); ++a) {
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        const auto& ra = cases.at(labels[a]);
        const auto& rb = cases.at(labels[b]);
        if (ra.size() != rb.size()) {
          throw std::runtime_error("sweep mismatch inside group " + key);
        }
        for (std::size_t k = 0; k < ra.size(); ++k) {
          const Interval ia{ra[k].cvrp_mean_mw - kTScore95 * ra[k].sigma_hat_mw,
                            ra[k].cvrp_mean_mw + kTScore95 * ra[k].sigma_hat_mw};
          const Interval ib{rb[k].cvrp_mean_mw - kTScore95 * rb[k].sigma_hat_mw,
                            rb[k].cvrp_mean_mw + kTScore95 * rb[k].sigma_hat_mw};
          out += key + "," + format_sig(ra[k].theta_fov_deg) + "," + labels[a] + "," +
                 labels[b] + "," + (cis_disjoint(ia, ib) ? "1" : "0") + "\n";
        }
      }
    }
  }
  return out;
}

}  // namespace cvrp
