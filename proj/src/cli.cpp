#include "forge/cli.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "forge/chain.hpp"
#include "forge/design.hpp"
#include "forge/errors.hpp"
#include "forge/parallel.hpp"
#include "forge/platform.hpp"
#include "forge/serialize.hpp"

namespace forge {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

void validate_keys(const json& config, const std::set<std::string>& allowed) {
  if (!config.is_object()) throw config_error("config must be a JSON object");
  for (const auto& [key, value] : config.items())
    if (!allowed.count(key)) throw config_error("unknown config key '" + key + "'");
}

double get_number(const json& config, const std::string& key, double fallback) {
  if (!config.contains(key)) return fallback;
  if (!config.at(key).is_number()) throw config_error("'" + key + "' must be a number");
  return config.at(key).get<double>();
}

int get_int(const json& config, const std::string& key, int fallback) {
  if (!config.contains(key)) return fallback;
  if (!config.at(key).is_number_integer())
    throw config_error("'" + key + "' must be an integer");
  return config.at(key).get<int>();
}

std::string get_string(const json& config, const std::string& key,
                       const std::string& fallback) {
  if (!config.contains(key)) return fallback;
  if (!config.at(key).is_string()) throw config_error("'" + key + "' must be a string");
  return config.at(key).get<std::string>();
}

std::vector<double> get_array(const json& config, const std::string& key,
                              std::vector<double> fallback) {
  if (!config.contains(key)) return fallback;
  const auto& v = config.at(key);
  if (!v.is_array()) throw config_error("'" + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw config_error("'" + key + "' must be an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

StepControl step_control(const json& config, double default_tol = 1e-12) {
  StepControl sc;
  sc.steps_per_period = get_int(config, "steps_per_period", sc.steps_per_period);
  sc.refine_tol = get_number(config, "refine_tol", default_tol);
  try {
    sc.validate();
  } catch (const std::exception& e) {
    throw config_error(e.what());
  }
  return sc;
}

// Drive waveform keys shared by several commands: f_over_omega = [f0, f1, f2].
DriveProtocol protocol_from(const json& config, double omega_over_j,
                            std::vector<double> default_f) {
  std::vector<double> f = get_array(config, "f_over_omega", default_f);
  if (f.size() != 3) throw config_error("'f_over_omega' must be [f0, f1, f2]");
  DriveProtocol p;
  p.omega_over_j = omega_over_j;
  p.f0_over_omega = f[0];
  p.harmonics_over_omega = {f[1], f[2]};
  p.sites = {2};
  return p;
}

const std::vector<double> kTableOmega5{0.04, 1.0849517026900328, 1.2455409822710848};

std::string coefficients_csv(const DriveProtocol& p, const CoefficientTable& t) {
  std::string out =
      "omega_over_J,f0,f1,f2,c_x,c_zz,c_zy,c_zxz,max_other\n";
  out += csv_line({fmt_g17(p.omega_over_j), fmt_g17(p.f0_over_omega),
                   fmt_g17(p.harmonics_over_omega[0]), fmt_g17(p.harmonics_over_omega[1]),
                   fmt_g17(t.c_x), fmt_g17(t.c_zz), fmt_g17(t.c_zy), fmt_g17(t.c_zxz),
                   fmt_g17(t.max_other())});
  return out;
}

void write_manifest(const std::filesystem::path& out_dir, const std::string& command,
                    const ordered_json& resolved) {
  ordered_json manifest;
  manifest["command"] = command;
  manifest["version"] = kForgeVersion;
  manifest["config"] = resolved;
  write_text_file((out_dir / "manifest.json").string(), manifest.dump(2) + "\n");
}

TimeDependentHamiltonian three_spin_block(const DriveProtocol& p) {
  PauliSum stat(3, {{"ZZI", 1.0}, {"IZZ", 1.0}});
  PauliSum x2(3, {{"IXI", 1.0}});
  std::vector<DrivenTerm> driven;
  for (const auto& [profile, amp] : p.profiles()) driven.push_back({x2, profile, amp});
  return TimeDependentHamiltonian(std::move(stat), std::move(driven));
}

void run_effham(const json& config, const std::filesystem::path& out_dir) {
  validate_keys(config, {"omega_over_J", "f_over_omega", "steps_per_period",
                         "refine_tol"});
  double omega = get_number(config, "omega_over_J", 5.0);
  DriveProtocol p = protocol_from(config, omega, kTableOmega5);
  StepControl sc = step_control(config);
  EffectiveHamiltonian eff = effective_hamiltonian(three_spin_block(p), sc);
  CoefficientTable table = coefficient_table(eff);

  write_text_file((out_dir / "coefficients.csv").string(), coefficients_csv(p, table));
  ordered_json heff;
  to_json(heff, eff.h_eff);
  heff["period"] = eff.period;
  heff["residual"] = eff.residual;
  write_text_file((out_dir / "effective_hamiltonian.json").string(),
                  heff.dump(2) + "\n");

  ordered_json resolved{{"omega_over_J", omega},
                        {"f_over_omega", {p.f0_over_omega, p.harmonics_over_omega[0],
                                          p.harmonics_over_omega[1]}},
                        {"steps_per_period", sc.steps_per_period},
                        {"refine_tol", sc.refine_tol}};
  write_manifest(out_dir, "effham", resolved);
}

void run_optimize(const json& config, const std::filesystem::path& out_dir) {
  validate_keys(config, {"omega_over_J", "c_target_over_J", "seeds", "steps_per_period",
                         "refine_tol"});
  double omega = get_number(config, "omega_over_J", 5.0);
  double c_target = get_number(config, "c_target_over_J", -0.2);
  std::vector<std::array<double, 2>> seeds;
  if (config.contains("seeds")) {
    if (!config.at("seeds").is_array()) throw config_error("'seeds' must be an array");
    for (const auto& s : config.at("seeds")) {
      if (!s.is_array() || s.size() != 2)
        throw config_error("each seed must be [f1, f2]");
      seeds.push_back({s[0].get<double>(), s[1].get<double>()});
    }
  } else {
    seeds = default_seed_grid();
  }
  StepControl sc = step_control(config);
  OptimizationResult result = optimize(omega, c_target, seeds, sc);

  ordered_json report{
      {"omega_over_J", omega},
      {"c_target_over_J", c_target},
      {"f_over_omega",
       {result.protocol.f0_over_omega, result.protocol.harmonics_over_omega[0],
        result.protocol.harmonics_over_omega[1]}},
      {"dx", result.d_x},
      {"dz", result.d_z},
      {"objective", result.objective},
      {"evaluations", result.evaluations},
      {"converged", result.converged}};
  write_text_file((out_dir / "optimize_report.json").string(), report.dump(2) + "\n");

  ordered_json resolved = report;
  resolved["seeds"] = seeds;
  resolved["steps_per_period"] = sc.steps_per_period;
  resolved["refine_tol"] = sc.refine_tol;
  write_manifest(out_dir, "optimize", resolved);
}

void run_robustness(const json& config, const std::filesystem::path& out_dir) {
  validate_keys(config, {"omega_over_J", "f_over_omega", "eps_min", "eps_max",
                         "grid_points", "steps_per_period", "refine_tol"});
  double omega = get_number(config, "omega_over_J", 5.0);
  DriveProtocol p = protocol_from(config, omega, kTableOmega5);
  double eps_min = get_number(config, "eps_min", 1e-5);
  double eps_max = get_number(config, "eps_max", 1e-1);
  int points = get_int(config, "grid_points", 41);
  StepControl sc = step_control(config);
  std::vector<double> grid;
  try {
    grid = log_spaced(eps_min, eps_max, points);
  } catch (const std::exception& e) {
    throw config_error(e.what());
  }
  auto rows = robustness_scan(p, grid, grid, sc);

  std::string csv = "eps1,eps2,abs_cx,abs_czz\n";
  for (const auto& r : rows)
    csv += csv_line({fmt_g17(r.eps1), fmt_g17(r.eps2), fmt_g17(r.abs_cx),
                     fmt_g17(r.abs_czz)});
  write_text_file((out_dir / "robustness.csv").string(), csv);

  ordered_json resolved{{"omega_over_J", omega},
                        {"f_over_omega", {p.f0_over_omega, p.harmonics_over_omega[0],
                                          p.harmonics_over_omega[1]}},
                        {"eps_min", eps_min},
                        {"eps_max", eps_max},
                        {"grid_points", points},
                        {"steps_per_period", sc.steps_per_period},
                        {"refine_tol", sc.refine_tol}};
  write_manifest(out_dir, "robustness", resolved);
}

void run_chain_exact(const json& config, const std::filesystem::path& out_dir) {
  validate_keys(config, {"n_sites", "boundary", "omega_over_J", "f_over_omega",
                         "cycles", "steps_per_period", "refine_tol"});
  int n_sites = get_int(config, "n_sites", 6);
  std::string boundary_name = get_string(config, "boundary", "periodic");
  if (boundary_name != "periodic" && boundary_name != "open")
    throw config_error("'boundary' must be \"periodic\" or \"open\"");
  Boundary boundary = boundary_name == "periodic" ? Boundary::periodic : Boundary::open;
  double omega = get_number(config, "omega_over_J", 5.0);
  DriveProtocol p = protocol_from(config, omega, kTableOmega5);
  int cycles = get_int(config, "cycles", 10);
  StepControl sc = step_control(config, 1e-10);

  ChainSpec spec{n_sites, boundary, Coupling::ising_zz, 1.0};
  CycleOperators ops = chain_cycle(spec, p, sc);
  std::string csv = "cycle,distance\n";
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(ops.u_cycle.rows(), ops.u_cycle.cols());
  Eigen::MatrixXcd v = u;
  for (int m = 1; m <= cycles; ++m) {
    u = ops.u_cycle * u;
    v = ops.u_target * v;
    csv += csv_line({std::to_string(m), fmt_g17(max_abs(Eigen::MatrixXcd(u - v)))});
  }
  write_text_file((out_dir / "chain_error.csv").string(), csv);

  ordered_json resolved{{"n_sites", n_sites},
                        {"boundary", boundary_name},
                        {"omega_over_J", omega},
                        {"f_over_omega", {p.f0_over_omega, p.harmonics_over_omega[0],
                                          p.harmonics_over_omega[1]}},
                        {"cycles", cycles},
                        {"steps_per_period", sc.steps_per_period},
                        {"refine_tol", sc.refine_tol}};
  write_manifest(out_dir, "chain-exact", resolved);
}

void run_cluster_prep(const json& config, const std::filesystem::path& out_dir) {
  validate_keys(config, {"tf_over_T", "n_sites", "omega_over_J", "c_target_over_omega",
                         "f_over_omega", "inactive_field", "steps_per_period",
                         "refine_tol"});
  int n_sites = get_int(config, "n_sites", 6);
  double omega = get_number(config, "omega_over_J", 10.0);
  double c_over_omega = get_number(config, "c_target_over_omega", -0.009);
  std::vector<double> f = get_array(config, "f_over_omega", {1.200, 1.224});
  if (f.size() != 2) throw config_error("'f_over_omega' must be [f1, f2] here");
  std::vector<double> tf_list;
  if (config.contains("tf_over_T") && config.at("tf_over_T").is_array())
    tf_list = get_array(config, "tf_over_T", {});
  else
    tf_list = {get_number(config, "tf_over_T", 300.0)};
  std::string inactive_name = get_string(config, "inactive_field", "ramped-x");
  if (inactive_name != "ramped-x" && inactive_name != "none")
    throw config_error("'inactive_field' must be \"ramped-x\" or \"none\"");
  InactiveField inactive =
      inactive_name == "ramped-x" ? InactiveField::ramped_x : InactiveField::none;
  StepControl sc = step_control(config, 1e-6);

  DriveProtocol p = DriveProtocol::for_target(omega, c_over_omega * omega,
                                              {f[0], f[1]});
  std::vector<double> fidelities(tf_list.size());
  for (std::size_t i = 0; i < tf_list.size(); ++i) {
    RampSpec ramp{tf_list[i]};
    try {
      fidelities[i] = adiabatic_prepare(p, ramp, sc, inactive, n_sites);
    } catch (const std::invalid_argument& e) {
      throw config_error(e.what());
    }
  }
  std::string csv = "tf_over_T,fidelity\n";
  for (std::size_t i = 0; i < tf_list.size(); ++i)
    csv += csv_line({fmt_g17(tf_list[i]), fmt_g17(fidelities[i])});
  write_text_file((out_dir / "fidelity.csv").string(), csv);

  ordered_json resolved{{"tf_over_T", tf_list},
                        {"n_sites", n_sites},
                        {"omega_over_J", omega},
                        {"c_target_over_omega", c_over_omega},
                        {"f_over_omega", f},
                        {"inactive_field", inactive_name},
                        {"steps_per_period", sc.steps_per_period},
                        {"refine_tol", sc.refine_tol}};
  write_manifest(out_dir, "cluster-prep", resolved);
}

void run_xy_demo(const json& config, const std::filesystem::path& out_dir) {
  validate_keys(config, {"omega_over_J", "f_edge_over_omega", "f_center_over_omega",
                         "h_over_omega", "h_sweep_over_omega", "steps_per_period",
                         "refine_tol"});
  XYDriveParams params;
  params.omega_over_j = get_number(config, "omega_over_J", 5.0);
  params.f_edge = get_number(config, "f_edge_over_omega", 0.05553);
  std::vector<double> fc =
      get_array(config, "f_center_over_omega", {0.88894, 0.75227, 0.61233});
  if (fc.size() != 3) throw config_error("'f_center_over_omega' must be [f0, f1, f2]");
  params.f_center0 = fc[0];
  params.f_center1 = fc[1];
  params.f_center2 = fc[2];
  double h_chart = get_number(config, "h_over_omega", 100.0);
  std::vector<double> h_sweep =
      get_array(config, "h_sweep_over_omega", {2, 3, 5, 10, 50, 100});
  StepControl sc = step_control(config);

  ChainSpec spec{4, Boundary::open, Coupling::xy, 1.0};
  // Validate all decoupling strengths before the heavy computation starts.
  for (double h : h_sweep)
    if (std::abs(h - std::round(h)) > 1e-9 || std::round(h) < 1.0)
      throw config_error("decoupling strengths must be positive integer multiples of omega");
  if (std::abs(h_chart - std::round(h_chart)) > 1e-9 || std::round(h_chart) < 1.0)
    throw config_error("decoupling strengths must be positive integer multiples of omega");

  XYDemoResult demo = xy_digital(spec, params, h_chart, sc);

  std::vector<std::pair<std::string, double>> chart;
  for (const auto& [s, c] : demo.chart.terms()) chart.emplace_back(s, std::abs(c));
  std::sort(chart.begin(), chart.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::string chart_csv = "string,abs_coefficient\n";
  for (const auto& [s, a] : chart) chart_csv += csv_line({s, fmt_g17(a)});
  write_text_file((out_dir / "pauli_chart.csv").string(), chart_csv);

  std::vector<double> d_values(h_sweep.size());
  parallel_for(h_sweep.size(), [&](std::size_t i) {
    d_values[i] = xy_decoupling_distance(spec, params, h_sweep[i], sc);
  });
  std::string d_csv = "h_over_omega,D\n";
  for (std::size_t i = 0; i < h_sweep.size(); ++i)
    d_csv += csv_line({fmt_g17(h_sweep[i]), fmt_g17(d_values[i])});
  write_text_file((out_dir / "decoupling.csv").string(), d_csv);

  ordered_json report{{"j_eff", demo.j_eff},
                      {"min_target_coefficient", demo.min_target},
                      {"max_undesired_coefficient", demo.max_undesired},
                      {"target_to_undesired_ratio",
                       demo.max_undesired > 0.0 ? demo.min_target / demo.max_undesired
                                                : 0.0},
                      {"d_decoupling_at_chart_h", demo.d_decoupling}};
  write_text_file((out_dir / "xy_report.json").string(), report.dump(2) + "\n");

  ordered_json resolved{{"omega_over_J", params.omega_over_j},
                        {"f_edge_over_omega", params.f_edge},
                        {"f_center_over_omega", fc},
                        {"h_over_omega", h_chart},
                        {"h_sweep_over_omega", h_sweep},
                        {"steps_per_period", sc.steps_per_period},
                        {"refine_tol", sc.refine_tol}};
  write_manifest(out_dir, "xy-demo", resolved);
}

void run_crosstalk(const json& config, const std::filesystem::path& out_dir) {
  validate_keys(config, {"g_A", "g_B_xy", "B_z_T", "J_par_over_2pi_GHz", "omega_over_J",
                         "f_over_omega", "products_T", "steps_per_period",
                         "refine_tol"});
  std::vector<double> g_a = get_array(config, "g_A", {14.2, 3.2, 0.5});
  std::vector<double> g_b_xy = get_array(config, "g_B_xy", {9.3, 6.4});
  if (g_a.size() != 3 || g_b_xy.size() != 2)
    throw config_error("'g_A' must have 3 entries and 'g_B_xy' 2 entries");
  double b_z = get_number(config, "B_z_T", 0.2);
  double j_par_ghz = get_number(config, "J_par_over_2pi_GHz", 0.3);
  double omega = get_number(config, "omega_over_J", 5.0);
  std::vector<double> f = get_array(config, "f_over_omega", kTableOmega5);
  if (f.size() != 3) throw config_error("'f_over_omega' must be [f0, f1, f2]");
  std::vector<double> products =
      get_array(config, "products_T", {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0});
  StepControl sc = step_control(config, 1e-6);

  NanomagnetParams base = NanomagnetParams::make(
      {g_a[0], g_a[1], g_a[2]}, {g_b_xy[0], g_b_xy[1], 0.0}, b_z, j_par_ghz, omega);
  std::vector<double> g_bz;
  for (double prod : products) {
    if (prod <= 0.0) throw config_error("'products_T' entries must be positive");
    g_bz.push_back(g_a[2] + prod / b_z);
  }
  auto points = crosstalk_distance(base, g_bz, f[0], f[1], f[2], sc);

  std::string csv = "product_tesla,D\n";
  for (const auto& pt : points)
    csv += csv_line({fmt_g17(pt.product_tesla), fmt_g17(pt.distance)});
  write_text_file((out_dir / "crosstalk.csv").string(), csv);

  ordered_json resolved{{"g_A", g_a},
                        {"g_B_xy", g_b_xy},
                        {"B_z_T", b_z},
                        {"J_par_over_2pi_GHz", j_par_ghz},
                        {"omega_over_J", omega},
                        {"f_over_omega", f},
                        {"products_T", products},
                        {"steps_per_period", sc.steps_per_period},
                        {"refine_tol", sc.refine_tol}};
  write_manifest(out_dir, "crosstalk", resolved);
}

void run_platform_map(const json& config, const std::filesystem::path& out_dir) {
  validate_keys(config, {"platform", "J_MHz", "omega_over_J", "f_over_omega",
                         "tau_c_us", "g_A", "g_B", "B_z_T", "J_par_over_2pi_GHz"});
  std::string platform = get_string(config, "platform", "superconducting");
  double omega = get_number(config, "omega_over_J", 5.0);
  DriveProtocol p = protocol_from(config, omega, kTableOmega5);

  ordered_json report;
  if (platform == "superconducting") {
    double j_mhz = get_number(config, "J_MHz", 10.0);
    double tau_c = get_number(config, "tau_c_us", 20.0);
    SuperconductingReport r = superconducting_map(j_mhz, omega, p, tau_c);
    report = ordered_json{{"platform", "superconducting"},
                          {"J_MHz", r.j_mhz},
                          {"omega_MHz", r.omega_mhz},
                          {"J_zxz_MHz", r.j_zxz_mhz},
                          {"amplitudes_MHz", r.amplitudes_mhz},
                          {"max_amplitude_MHz", r.max_amplitude_mhz},
                          {"stroboscopic_period_2T_ns", r.stroboscopic_period_2t_ns},
                          {"tau_c_us", r.tau_c_us},
                          {"tau_c_over_2T", r.tau_c_over_2t},
                          {"strong_coupling_fom", r.strong_coupling_fom}};
  } else if (platform == "nanomagnet") {
    std::vector<double> g_a = get_array(config, "g_A", {14.2, 3.2, 0.5});
    std::vector<double> g_b = get_array(config, "g_B", {9.3, 6.4, 4.0});
    if (g_a.size() != 3 || g_b.size() != 3)
      throw config_error("'g_A' and 'g_B' must have 3 entries");
    double b_z = get_number(config, "B_z_T", 0.2);
    double j_par_ghz = get_number(config, "J_par_over_2pi_GHz", 0.3);
    NanomagnetParams np = NanomagnetParams::make({g_a[0], g_a[1], g_a[2]},
                                                 {g_b[0], g_b[1], g_b[2]}, b_z,
                                                 j_par_ghz, omega);
    FieldAmplitudes fa = nanomagnet_fields(np, p.f0_over_omega,
                                           p.harmonics_over_omega[0],
                                           p.harmonics_over_omega[1]);
    report = ordered_json{
        {"platform", "nanomagnet"},
        {"g_A", g_a},
        {"g_B", g_b},
        {"B_z_T", b_z},
        {"J_par_over_2pi_GHz", j_par_ghz},
        {"J_MHz", np.coupling_j() / (2.0 * std::numbers::pi) * 1e-6},
        {"omega_MHz", np.omega / (2.0 * std::numbers::pi) * 1e-6},
        {"J_zxz_MHz",
         std::abs(p.c_target_over_j()) * np.coupling_j() / (2.0 * std::numbers::pi) *
             1e-6},
        {"B0x_G", fa.b0x},
        {"B1x_G", fa.b1x},
        {"B2x_G", fa.b2x},
        {"B0y_G", fa.b0y},
        {"B1y_G", fa.b1y},
        {"B2y_G", fa.b2y},
        {"detuning_ratio", np.detuning_ratio()}};
  } else {
    throw config_error("'platform' must be \"superconducting\" or \"nanomagnet\"");
  }
  write_text_file((out_dir / "platform_report.json").string(), report.dump(2) + "\n");

  ordered_json resolved = report;
  resolved["omega_over_J"] = omega;
  resolved["f_over_omega"] = {p.f0_over_omega, p.harmonics_over_omega[0],
                              p.harmonics_over_omega[1]};
  write_manifest(out_dir, "platform-map", resolved);
}

void run_echo(const json& config, const std::filesystem::path& out_dir) {
  validate_keys(config, {"lambda", "J", "pulse_width_frac"});
  double lambda = get_number(config, "lambda", 0.4);
  double j = get_number(config, "J", 1.0);
  double width_frac = get_number(config, "pulse_width_frac", 1e-4);
  if (j <= 0.0) throw config_error("'J' must be positive");
  EchoResult r = echo_oracle(j, lambda, width_frac);
  ordered_json report{
      {"lambda", lambda},
      {"J", j},
      {"pulse_width_frac", width_frac},
      {"max_diff", r.max_diff},
      {"numeric_U_plus", matrix_to_json(r.numeric_plus)},
      {"numeric_U_zero", matrix_to_json(r.numeric_zero)},
      {"numeric_U_minus", matrix_to_json(r.numeric_minus)},
      {"analytic_U_plus", matrix_to_json(r.analytic_plus)},
      {"analytic_U_zero", matrix_to_json(r.analytic_zero)},
      {"analytic_U_minus", matrix_to_json(r.analytic_minus)}};
  write_text_file((out_dir / "echo_report.json").string(), report.dump(2) + "\n");

  ordered_json resolved{{"lambda", lambda}, {"J", j}, {"pulse_width_frac", width_frac}};
  write_manifest(out_dir, "echo", resolved);
}

}  // namespace

void run_command(const std::string& command, const nlohmann::json& config,
                 const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw config_error("cannot create output directory " + out_dir.string());

  if (command == "effham") return run_effham(config, out_dir);
  if (command == "optimize") return run_optimize(config, out_dir);
  if (command == "robustness") return run_robustness(config, out_dir);
  if (command == "chain-exact") return run_chain_exact(config, out_dir);
  if (command == "cluster-prep") return run_cluster_prep(config, out_dir);
  if (command == "xy-demo") return run_xy_demo(config, out_dir);
  if (command == "crosstalk") return run_crosstalk(config, out_dir);
  if (command == "platform-map") return run_platform_map(config, out_dir);
  if (command == "echo") return run_echo(config, out_dir);
  throw config_error("unknown command '" + command + "'");
}

}  // namespace forge
