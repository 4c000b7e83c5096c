#pragma once

// Flat key-value configuration text:
//
//   # comment
//   temperature_gev = 246.22
//   mass_mode = zero
//   mass_gev.t = 172.57
//
// Keys mirror ModelConfig fields; unknown keys are rejected by name.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

namespace vacuumleap {

// Applies one key/value assignment. Throws UnknownKey or InvalidArgument.
// The config is re-validated after the assignment.
void set_config_value(ModelConfig& cfg, std::string_view key, std::string_view value);

// Reads the current value of a key in canonical text form.
std::string get_config_value(const ModelConfig& cfg, std::string_view key);

// Every recognised key, in canonical order.
std::vector<std::string> config_keys(const ModelConfig& cfg);

// Applies every assignment in `text`; `source` names the origin in errors.
void apply_config_text(ModelConfig& cfg, std::string_view text, std::string_view source = "<text>");
void load_config_file(ModelConfig& cfg, const std::string& path);

// Canonical "key = value" lines, one per key, round-trip exact.
std::string dump_config(const ModelConfig& cfg);

// FNV-1a 64 over dump_config().
std::uint64_t config_fingerprint(const ModelConfig& cfg);

std::string format_double(double v);
double parse_double(std::string_view text, std::string_view what);

}  // namespace vacuumleap
