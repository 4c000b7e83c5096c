#include "config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace vacuumleap {
namespace {

constexpr std::string_view kMassPrefix = "mass_gev.";

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

PlanckChoice parse_planck(std::string_view key, std::string_view v) {
  if (v == "h") return PlanckChoice::h;
  if (v == "hbar") return PlanckChoice::hbar;
  throw InvalidArgument(std::string(key) + ": expected 'h' or 'hbar', got '" + std::string(v) + "'");
}

const char* planck_name(PlanckChoice p) { return p == PlanckChoice::h ? "h" : "hbar"; }

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != end)
    throw InvalidArgument(std::string(what) + ": not a number: '" + std::string(text) + "'");
  return v;
}

void set_config_value(ModelConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  ModelConfig next = cfg;
  if (key == "temperature_gev") {
    next.temperature_gev = parse_double(value, key);
  } else if (key == "mass_mode") {
    if (value == "physical") next.mass_mode = MassMode::physical;
    else if (value == "zero") next.mass_mode = MassMode::zero;
    else throw InvalidArgument("mass_mode: expected 'physical' or 'zero', got '" + std::string(value) + "'");
  } else if (key == "uncertainty_planck") {
    next.uncertainty_planck = parse_planck(key, value);
  } else if (key == "phase_space_planck") {
    next.phase_space_planck = parse_planck(key, value);
  } else if (key == "moment_planck") {
    next.moment_planck = parse_planck(key, value);
  } else if (key == "moment_convention") {
    if (value == "relativistic") next.moment_convention = MomentConvention::relativistic;
    else if (value == "nonrelativistic") next.moment_convention = MomentConvention::nonrelativistic;
    else
      throw InvalidArgument("moment_convention: expected 'relativistic' or 'nonrelativistic', got '" +
                            std::string(value) + "'");
  } else if (key == "degeneracy_multiplier") {
    next.degeneracy_multiplier = parse_double(value, key);
  } else if (key == "quadrature_rel_tol") {
    next.quadrature_rel_tol = parse_double(value, key);
  } else if (key.starts_with(kMassPrefix)) {
    const auto family = key.substr(kMassPrefix.size());
    const double m = parse_double(value, key);
    bool found = false;
    for (auto& s : next.catalog.species) {
      if (s.name == family) {
        s.mass_gev = m;
        found = true;
      }
    }
    if (!found) throw UnknownKey(std::string(key));
  } else {
    throw UnknownKey(std::string(key));
  }
  next.validate();
  cfg = std::move(next);
}

std::vector<std::string> config_keys(const ModelConfig& cfg) {
  std::vector<std::string> keys = {"temperature_gev",   "mass_mode",          "uncertainty_planck",
                                   "phase_space_planck", "moment_planck",      "moment_convention",
                                   "degeneracy_multiplier", "quadrature_rel_tol"};
  for (const auto& s : cfg.catalog) {
    if (s.colour != 0) continue;
    keys.push_back(std::string(kMassPrefix) + s.name);
  }
  return keys;
}

std::string get_config_value(const ModelConfig& cfg, std::string_view key) {
  key = trim(key);
  if (key == "temperature_gev") return format_double(cfg.temperature_gev);
  if (key == "mass_mode") return cfg.mass_mode == MassMode::zero ? "zero" : "physical";
  if (key == "uncertainty_planck") return planck_name(cfg.uncertainty_planck);
  if (key == "phase_space_planck") return planck_name(cfg.phase_space_planck);
  if (key == "moment_planck") return planck_name(cfg.moment_planck);
  if (key == "moment_convention")
    return cfg.moment_convention == MomentConvention::relativistic ? "relativistic" : "nonrelativistic";
  if (key == "degeneracy_multiplier") return format_double(cfg.degeneracy_multiplier);
  if (key == "quadrature_rel_tol") return format_double(cfg.quadrature_rel_tol);
  if (key.starts_with(kMassPrefix)) {
    const auto family = key.substr(kMassPrefix.size());
    for (const auto& s : cfg.catalog)
      if (s.name == family) return format_double(s.mass_gev);
  }
  throw UnknownKey(std::string(key));
}

void apply_config_text(ModelConfig& cfg, std::string_view text, std::string_view source) {
  ModelConfig next = cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw InvalidArgument(std::string(source) + ":" + std::to_string(line_no) + ": expected 'key = value'");
    try {
      set_config_value(next, line.substr(0, eq), line.substr(eq + 1));
    } catch (const UnknownKey&) {
      throw;
    } catch (const InvalidArgument& ex) {
      throw InvalidArgument(std::string(source) + ":" + std::to_string(line_no) + ": " + ex.what());
    }
  }
  cfg = std::move(next);
}

void load_config_file(ModelConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  apply_config_text(cfg, ss.str(), path);
}

std::string dump_config(const ModelConfig& cfg) {
  std::string out;
  for (const auto& key : config_keys(cfg)) {
    out += key;
    out += " = ";
    out += get_config_value(cfg, key);
    out += '\n';
  }
  return out;
}

std::uint64_t config_fingerprint(const ModelConfig& cfg) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : dump_config(cfg)) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace vacuumleap
