#include "output.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fingerprint_hex(std::uint64_t fp) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, fp);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

bool has_parameter(const std::vector<OutputRecord>& records) {
  return std::any_of(records.begin(), records.end(), [](const OutputRecord& r) { return !r.parameter.empty(); });
}

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
  const bool sweep = has_parameter(records);
  if (sweep) out << "parameter,parameter_value,";
  out << "quantity,value,units,config_fingerprint,provenance\r\n";
  for (const auto& r : records) {
    if (sweep) out << csv_field(r.parameter) << ',' << format_value(r.parameter_value) << ',';
    out << csv_field(r.quantity) << ',' << format_value(r.value) << ',' << csv_field(r.units) << ','
        << fingerprint_hex(r.config_fingerprint) << ',' << csv_field(r.provenance) << "\r\n";
  }
}

void write_json(std::ostream& out, const std::vector<OutputRecord>& records) {
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    if (!r.parameter.empty()) {
      j["parameter"] = r.parameter;
      j["parameter_value"] = r.parameter_value;
    }
    j["quantity"] = r.quantity;
    j["value"] = r.value;
    j["units"] = r.units;
    j["config_fingerprint"] = fingerprint_hex(r.config_fingerprint);
    j["provenance"] = r.provenance;
    out << j.dump() << '\n';
  }
}

void write_table(std::ostream& out, const std::vector<OutputRecord>& records) {
  const bool sweep = has_parameter(records);
  std::size_t qw = 8, uw = 5, pw = 9;
  for (const auto& r : records) {
    qw = std::max(qw, r.quantity.size());
    uw = std::max(uw, r.units.size());
    pw = std::max(pw, r.parameter.size());
  }
  char buf[512];
  auto row = [&](const std::string& param, const std::string& pval, const std::string& q, const std::string& v,
                 const std::string& u, const std::string& p) {
    if (sweep) {
      std::snprintf(buf, sizeof buf, "%-*s  %-24s  ", static_cast<int>(pw), param.c_str(), pval.c_str());
      out << buf;
    }
    std::snprintf(buf, sizeof buf, "%-*s  %-24s  %-*s  %s", static_cast<int>(qw), q.c_str(), v.c_str(),
                  static_cast<int>(uw), u.c_str(), p.c_str());
    std::string line = buf;
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  };
  row("parameter", "parameter_value", "quantity", "value", "units", "provenance");
  for (const auto& r : records) {
    char v[40];
    std::snprintf(v, sizeof v, "%.10g", r.value);
    char pv[40];
    std::snprintf(pv, sizeof pv, "%.10g", r.parameter_value);
    row(r.parameter, pv, r.quantity, v, r.units, r.provenance);
  }
  if (!records.empty()) out << "config " << fingerprint_hex(records.front().config_fingerprint) << '\n';
}

}  // namespace

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: write_csv(out, records); break;
    case OutputFormat::json: write_json(out, records); break;
    case OutputFormat::table: write_table(out, records); break;
  }
}
