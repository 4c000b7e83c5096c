#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"
#include "vacuumleap/vacuumleap.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct Failure {
  int code;
  std::string message;
};

void check(vl_status st) {
  if (st == VL_OK) return;
  const int code = (st == VL_ERR_QUADRATURE || st == VL_ERR_STEP_LIMIT || st == VL_ERR_INTERNAL) ? kExitNumerical
                                                                                                   : kExitUsage;
  throw Failure{code, std::string(vl_status_name(st)) + ": " + vl_last_error()};
}

using ConfigPtr = std::unique_ptr<vl_config, decltype(&vl_config_destroy)>;

ConfigPtr make_config() {
  vl_config* raw = nullptr;
  check(vl_config_create(&raw));
  return ConfigPtr(raw, &vl_config_destroy);
}

ConfigPtr clone_config(const vl_config* cfg) {
  vl_config* raw = nullptr;
  check(vl_config_clone(cfg, &raw));
  return ConfigPtr(raw, &vl_config_destroy);
}

std::string dump(const vl_config* cfg) {
  size_t needed = 0;
  check(vl_config_dump(cfg, nullptr, 0, &needed));
  std::string text(needed, '\0');
  check(vl_config_dump(cfg, text.data(), text.size(), &needed));
  text.resize(needed - 1);
  return text;
}

double quantity(const std::string& text, vl_quantity_kind kind) {
  double v = 0.0;
  check(vl_parse_quantity(text.c_str(), kind, &v));
  return v;
}

double joules_to_gev(double j) {
  vl_physical_constants pc;
  vl_physical_constants_get(&pc);
  return j / pc.gev_to_joule;
}

struct GlobalOptions {
  std::string config_file;
  std::vector<std::string> sets;
  std::string masses;
  std::string temperature;
  std::string uncertainty_planck;
  std::string phase_space_planck;
  std::string moment_planck;
  std::string moment_convention;
  std::optional<double> degeneracy;
  std::optional<double> rel_tol;
  std::string format = "table";
  bool verbose = false;
};

// Config file first, then --set pairs, then the dedicated flags.
ConfigPtr build_config(const GlobalOptions& g) {
  auto cfg = make_config();
  if (!g.config_file.empty()) check(vl_config_load_file(cfg.get(), g.config_file.c_str()));
  for (const auto& kv : g.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Failure{kExitUsage, "--set expects key=value, got '" + kv + "'"};
    check(vl_config_set(cfg.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str()));
  }
  auto set = [&](const char* key, const std::string& v) {
    if (!v.empty()) check(vl_config_set(cfg.get(), key, v.c_str()));
  };
  set("mass_mode", g.masses);
  if (!g.temperature.empty())
    set("temperature_gev", format_value(joules_to_gev(quantity(g.temperature, VL_QUANTITY_ENERGY))));
  set("uncertainty_planck", g.uncertainty_planck);
  set("phase_space_planck", g.phase_space_planck);
  set("moment_planck", g.moment_planck);
  set("moment_convention", g.moment_convention);
  if (g.degeneracy) set("degeneracy_multiplier", format_value(*g.degeneracy));
  if (g.rel_tol) set("quadrature_rel_tol", format_value(*g.rel_tol));
  return cfg;
}

class Emitter {
public:
  explicit Emitter(const vl_config* cfg) : fp_(vl_config_fingerprint(cfg)) {}
  void analytic(std::string q, double v, std::string units) { add(std::move(q), v, std::move(units), "analytic"); }
  void monte_carlo(std::string q, double v, std::string units) {
    add(std::move(q), v, std::move(units), "monte-carlo");
  }
  void add(OutputRecord r) { records_.push_back(std::move(r)); }
  std::vector<OutputRecord>& records() { return records_; }

private:
  void add(std::string q, double v, std::string units, const char* prov) {
    records_.push_back({std::move(q), v, std::move(units), fp_, prov, {}, 0.0});
  }
  std::uint64_t fp_;
  std::vector<OutputRecord> records_;
};

std::string species_label(const vl_species& s) {
  if (s.color_multiplicity == 1) return s.name;
  return std::string(s.name) + "." + std::to_string(s.colour);
}

void cmd_constants(const vl_config* cfg, Emitter& out) {
  vl_physical_constants pc;
  vl_physical_constants_get(&pc);
  out.analytic("h", pc.h, "J s");
  out.analytic("hbar", pc.hbar, "J s");
  out.analytic("c", pc.c, "m/s");
  out.analytic("e", pc.e, "C");
  out.analytic("gev_to_joule", pc.gev_to_joule, "J/GeV");
  out.analytic("mu0_measured", pc.mu0_measured, "H/m");
  double t = 0.0;
  char buf[64];
  size_t needed = 0;
  check(vl_config_get(cfg, "temperature_gev", buf, sizeof buf, &needed));
  t = std::stod(buf);
  out.analytic("temperature", t, "GeV");
  for (size_t i = 0; i < vl_species_count(cfg); ++i) {
    vl_species s;
    check(vl_species_get(cfg, i, &s));
    out.analytic("mass." + species_label(s), s.mass_gev, "GeV");
    out.analytic("charge." + species_label(s), s.charge_q, "e");
  }
}

void cmd_mu0(const vl_config* cfg, bool breakdown, Emitter& out) {
  vl_vacuum_constants vc;
  const size_t n = vl_species_count(cfg);
  std::vector<double> per(n);
  check(vl_vacuum_constants_compute(cfg, &vc, per.data(), per.size()));
  out.analytic("mu0", vc.mu0, "H/m");
  out.analytic("mu0_ratio_to_measured", vc.ratio_to_measured, "1");
  out.analytic("inv_mu0", vc.inv_mu0, "m/H");
  out.analytic("epsilon0", vc.epsilon0, "F/m");
  out.analytic("c_derived", vc.c_derived, "m/s");
  if (!breakdown) return;
  for (size_t i = 0; i < n; ++i) {
    vl_species s;
    check(vl_species_get(cfg, i, &s));
    out.analytic("inv_mu0." + species_label(s), per[i], "m/H");
  }
}

void cmd_speed(const vl_config* cfg, const std::string& energy, Emitter& out) {
  const double ej = quantity(energy, VL_QUANTITY_ENERGY);
  vl_physical_constants pc;
  vl_physical_constants_get(&pc);
  double v = 0.0;
  check(vl_average_speed(cfg, ej, &v));
  out.analytic("photon_energy", joules_to_gev(ej), "GeV");
  out.analytic("average_speed", v, "m/s");
  out.analytic("speed_excess", (v - pc.c) / pc.c, "1");
}

void cmd_band(const vl_config* cfg, const std::string& e1, const std::string& e2, Emitter& out) {
  const double g1 = joules_to_gev(quantity(e1, VL_QUANTITY_ENERGY));
  const double g2 = joules_to_gev(quantity(e2, VL_QUANTITY_ENERGY));
  vl_grb_comparison g;
  check(vl_grb_compare(cfg, g1, g2, 0.0, &g));
  out.analytic("band_e1", g.e1_gev, "GeV");
  out.analytic("band_e2", g.e2_gev, "GeV");
  out.analytic("band_speed_variation", g.model_dv_over_c, "1");
  out.analytic("lorentz_violation_speed_variation", g.lv_model_dv_over_c, "1");
  out.analytic("observed_limit", g.observed_limit, "1");
}

void cmd_dispersion(const vl_config* cfg, Emitter& out) {
  vl_propagation_stats st;
  check(vl_propagation_stats_compute(cfg, &st));
  out.analytic("sigma_per_sqrt_length", st.sigma_per_sqrt_m, "s m^-1/2");
  out.analytic("steps_per_length", st.steps_per_meter, "1/m");
  out.analytic("mean_step", st.mean_step_m, "m");
  out.analytic("mean_speed", st.mean_speed_mps, "m/s");
}

struct SimulateOptions {
  std::string length = "1e-12m";
  std::uint64_t seed = 1;
  int chains = 200;
  std::string target_length;
  int threads = 0;
  std::uint64_t max_steps = 0;
  std::string photon_energy = "0";
  bool energy_shifted = false;
};

void cmd_simulate(const vl_config* cfg, const SimulateOptions& o, Emitter& out) {
  vl_simulation_plan plan;
  vl_simulation_plan_default(&plan);
  plan.path_length_m = quantity(o.length, VL_QUANTITY_LENGTH);
  plan.seed = o.seed;
  plan.chains = o.chains;
  plan.threads = o.threads;
  plan.max_steps = o.max_steps;
  plan.photon_energy_j = quantity(o.photon_energy, VL_QUANTITY_ENERGY);
  plan.energy_shifted = o.energy_shifted ? 1 : 0;
  vl_simulation_result r;
  check(vl_simulate(cfg, &plan, &r));
  vl_propagation_stats st;
  check(vl_propagation_stats_compute(cfg, &st));

  out.monte_carlo("path_length", r.path_length_m, "m");
  out.monte_carlo("chains", r.chains, "1");
  out.monte_carlo("total_steps", static_cast<double>(r.total_steps), "1");
  out.monte_carlo("mean_steps_per_chain", r.mean_steps_per_chain, "1");
  out.monte_carlo("mean_steps_per_chain_standard_error", r.steps_standard_error, "1");
  out.monte_carlo("mean_arrival_time", r.mean_arrival_time_s, "s");
  out.monte_carlo("mean_arrival_time_standard_error", r.mean_time_standard_error_s, "s");
  out.monte_carlo("arrival_time_sigma", r.empirical_sigma_s, "s");
  out.monte_carlo("arrival_time_sigma_standard_error", r.standard_error_s, "s");
  out.monte_carlo("mean_speed", r.mean_speed_mps, "m/s");
  out.monte_carlo("mean_speed_standard_error", r.mean_speed_standard_error_mps, "m/s");
  out.analytic("arrival_time_sigma", st.sigma_per_sqrt_m * std::sqrt(r.path_length_m), "s");
  out.analytic("mean_speed", st.mean_speed_mps, "m/s");
  if (!o.target_length.empty()) {
    const double target = quantity(o.target_length, VL_QUANTITY_LENGTH);
    double ext = 0.0;
    check(vl_extrapolate_sigma(&r, target, &ext));
    out.monte_carlo("target_length", target, "m");
    out.monte_carlo("extrapolated_sigma", ext, "s");
    out.analytic("extrapolated_sigma", st.sigma_per_sqrt_m * std::sqrt(target), "s");
  }
}

void cmd_cavity(const vl_config* cfg, const std::string& length, int reflections, const std::string& fwhm,
                Emitter& out) {
  vl_cavity cav{quantity(length, VL_QUANTITY_LENGTH), reflections, quantity(fwhm, VL_QUANTITY_TIME)};
  double sigma = 0.0;
  check(vl_predicted_sigma(cfg, &cav, &sigma));
  double broadened = 0.0;
  check(vl_broadened_fwhm(cav.pulse_fwhm_in_s, sigma, &broadened));
  out.analytic("effective_path", cav.cavity_length_m * cav.reflections, "m");
  out.analytic("predicted_sigma", sigma, "s");
  out.analytic("input_fwhm", cav.pulse_fwhm_in_s, "s");
  out.analytic("broadened_fwhm", broadened, "s");
}

void cmd_sensitivity(const vl_config* cfg, Emitter& out) {
  size_t count = 0;
  check(vl_sensitivity_table(nullptr, 0, &count));
  std::vector<vl_sensitivity_row> rows(count);
  check(vl_sensitivity_table(rows.data(), rows.size(), &count));
  for (const auto& r : rows) {
    const std::string label = r.label;
    out.analytic(label + ".time_resolution", r.time_resolution_s, "s");
    out.analytic(label + ".path", r.path_m, "m");
    out.analytic(label + ".figure", r.figure_fs_per_sqrt_m, "fs m^-1/2");
  }
  double lo = 0.0, hi = 0.0;
  vl_astro_dispersion_limits(&lo, &hi);
  out.analytic("astro_dispersion_limit_low", lo, "fs m^-1/2");
  out.analytic("astro_dispersion_limit_high", hi, "fs m^-1/2");
  vl_propagation_stats st;
  check(vl_propagation_stats_compute(cfg, &st));
  out.analytic("model_sigma_per_sqrt_length", st.sigma_per_sqrt_m * 1e15, "fs m^-1/2");
}

const std::vector<std::string> kSweepObservables = {"mu0",      "mu0_ratio",        "inv_mu0",
                                                    "epsilon0", "c_derived",        "speed_excess",
                                                    "sigma",    "steps_per_length", "mean_step"};

std::pair<double, std::string> observe(const vl_config* cfg, const std::string& name) {
  if (name == "speed_excess") {
    vl_physical_constants pc;
    vl_physical_constants_get(&pc);
    double v = 0.0;
    check(vl_average_speed(cfg, 0.0, &v));
    return {(v - pc.c) / pc.c, "1"};
  }
  if (name == "sigma" || name == "steps_per_length" || name == "mean_step") {
    vl_propagation_stats st;
    check(vl_propagation_stats_compute(cfg, &st));
    if (name == "sigma") return {st.sigma_per_sqrt_m, "s m^-1/2"};
    if (name == "steps_per_length") return {st.steps_per_meter, "1/m"};
    return {st.mean_step_m, "m"};
  }
  vl_vacuum_constants vc;
  check(vl_vacuum_constants_compute(cfg, &vc, nullptr, 0));
  if (name == "mu0") return {vc.mu0, "H/m"};
  if (name == "mu0_ratio") return {vc.ratio_to_measured, "1"};
  if (name == "inv_mu0") return {vc.inv_mu0, "m/H"};
  if (name == "epsilon0") return {vc.epsilon0, "F/m"};
  return {vc.c_derived, "m/s"};
}

struct SweepOptions {
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int points = 11;
  bool log = false;
  std::string observable = "mu0";
};

void cmd_sweep(const vl_config* base, const SweepOptions& o, Emitter& out) {
  if (o.points < 1) throw Failure{kExitUsage, "--points must be at least 1"};
  if (o.log && (o.from <= 0.0 || o.to <= 0.0)) throw Failure{kExitUsage, "--log needs positive --from and --to"};
  for (int k = 0; k < o.points; ++k) {
    const double f = o.points == 1 ? 0.0 : static_cast<double>(k) / (o.points - 1);
    double x = o.log ? std::exp(std::log(o.from) + f * (std::log(o.to) - std::log(o.from)))
                     : o.from + f * (o.to - o.from);
    if (k == 0) x = o.from;
    if (k == o.points - 1) x = o.to;
    auto cfg = clone_config(base);
    check(vl_config_set(cfg.get(), o.param.c_str(), format_value(x).c_str()));
    const auto [value, units] = observe(cfg.get(), o.observable);
    out.add({o.observable, value, units, vl_config_fingerprint(cfg.get()), "analytic", o.param, x});
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vacuum constants and photon propagation from a virtual-pair fermion gas"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--config", g.config_file, "Flat key = value config file")->check(CLI::ExistingFile);
  app.add_option("--set", g.sets, "Override a config key (key=value); repeatable");
  app.add_option("--masses", g.masses, "Fermion masses")->check(CLI::IsMember({"physical", "zero"}));
  app.add_option("--temperature", g.temperature, "Vacuum temperature kT, e.g. 246.22GeV");
  app.add_option("--uncertainty-planck", g.uncertainty_planck, "Constant in the energy-lifetime relation")
      ->check(CLI::IsMember({"h", "hbar"}));
  app.add_option("--phase-space-planck", g.phase_space_planck, "Constant in the phase-space cell")
      ->check(CLI::IsMember({"h", "hbar"}));
  app.add_option("--moment-planck", g.moment_planck, "Constant in the magnetic and dipole moments")
      ->check(CLI::IsMember({"h", "hbar"}));
  app.add_option("--moment-convention", g.moment_convention, "Magnetic moment form")
      ->check(CLI::IsMember({"relativistic", "nonrelativistic"}));
  app.add_option("--degeneracy", g.degeneracy, "Multiplier on every species degeneracy");
  app.add_option("--rel-tol", g.rel_tol, "Quadrature relative tolerance");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_flag("--verbose,-v", g.verbose, "Echo the effective configuration to stderr");

  auto* constants = app.add_subcommand("constants", "Physical constants and the fermion catalog");

  bool breakdown = false;
  auto* mu0 = app.add_subcommand("mu0", "Vacuum permeability, permittivity and derived light speed");
  mu0->add_flag("--breakdown", breakdown, "Per-species 1/mu0 contributions");

  std::string photon_energy = "0";
  auto* speed = app.add_subcommand("speed", "Average photon speed");
  speed->add_option("--photon-energy", photon_energy, "Photon energy, e.g. 100keV");

  std::string e1, e2;
  auto* band = app.add_subcommand("band", "Speed variation across a photon energy band");
  band->add_option("--e1", e1, "Lower band edge")->required();
  band->add_option("--e2", e2, "Upper band edge")->required();

  auto* dispersion = app.add_subcommand("dispersion", "Arrival-time spread per square-root length");

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo leap simulation");
  simulate->add_option("--length", sim.length, "Path length per chain")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "RNG seed")->capture_default_str();
  simulate->add_option("--chains", sim.chains, "Independent photons")->capture_default_str();
  simulate->add_option("--target-length", sim.target_length, "Extrapolate sigma to this length");
  simulate->add_option("--threads", sim.threads, "Worker threads, 0 = all cores")->capture_default_str();
  simulate->add_option("--max-steps", sim.max_steps, "Step cap per chain, 0 = default");
  simulate->add_option("--photon-energy", sim.photon_energy, "Photon energy")->capture_default_str();
  simulate->add_flag("--energy-shifted", sim.energy_shifted, "Add half the photon energy to each pair");

  std::string cav_length = "4000m", cav_fwhm = "4fs";
  int reflections = 70;
  auto* cavity = app.add_subcommand("cavity", "Pulse broadening in a multi-pass cavity");
  cavity->add_option("--length", cav_length, "Cavity length")->capture_default_str();
  cavity->add_option("--reflections", reflections, "Number of passes")->capture_default_str();
  cavity->add_option("--fwhm", cav_fwhm, "Input pulse FWHM")->capture_default_str();

  auto* sensitivity = app.add_subcommand("sensitivity", "Dispersion sensitivity of astronomical and lab setups");

  SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "Scan one config parameter");
  sweep->add_option("--param", sw.param, "Config key to vary")->required();
  sweep->add_option("--from", sw.from, "First value")->required();
  sweep->add_option("--to", sw.to, "Last value")->required();
  sweep->add_option("--points", sw.points, "Number of points")->capture_default_str();
  sweep->add_flag("--log", sw.log, "Logarithmic spacing");
  sweep->add_option("--observable", sw.observable, "Quantity to evaluate")->capture_default_str()
      ->check(CLI::IsMember(kSweepObservables));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const auto cfg = build_config(g);
    if (g.verbose) {
      std::cerr << "# effective configuration (" << fingerprint_hex(vl_config_fingerprint(cfg.get())) << ")\n";
      std::cerr << dump(cfg.get());
    }
    Emitter out(cfg.get());
    if (*constants) cmd_constants(cfg.get(), out);
    else if (*mu0) cmd_mu0(cfg.get(), breakdown, out);
    else if (*speed) cmd_speed(cfg.get(), photon_energy, out);
    else if (*band) cmd_band(cfg.get(), e1, e2, out);
    else if (*dispersion) cmd_dispersion(cfg.get(), out);
    else if (*simulate) cmd_simulate(cfg.get(), sim, out);
    else if (*cavity) cmd_cavity(cfg.get(), cav_length, reflections, cav_fwhm, out);
    else if (*sensitivity) cmd_sensitivity(cfg.get(), out);
    else if (*sweep) cmd_sweep(cfg.get(), sw, out);
    write_records(std::cout, out.records(), parse_format(g.format));
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return 0;
}
