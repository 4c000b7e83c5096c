#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

enum class OutputFormat { table, csv, json };

struct OutputRecord {
  std::string quantity;
  double value = 0.0;
  std::string units;
  std::uint64_t config_fingerprint = 0;
  std::string provenance;  // "analytic" or "monte-carlo"
  // Set only by sweeps.
  std::string parameter;
  double parameter_value = 0.0;
};

OutputFormat parse_format(const std::string& name);

// %.17g, enough digits for an exact round trip.
std::string format_value(double v);
std::string fingerprint_hex(std::uint64_t fp);

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format);
