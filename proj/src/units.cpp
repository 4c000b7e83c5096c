#include "units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <utility>

#include "error.hpp"
#include "model.hpp"

namespace vacuumleap {
namespace {

using Unit = std::pair<std::string_view, double>;

constexpr double kEv = Constants::e;

constexpr std::array<Unit, 6> kEnergy = {{{"eV", kEv},
                                          {"keV", kEv * 1e3},
                                          {"MeV", kEv * 1e6},
                                          {"GeV", kEv * 1e9},
                                          {"TeV", kEv * 1e12},
                                          {"J", 1.0}}};
constexpr std::array<Unit, 8> kLength = {{{"m", 1.0},
                                          {"km", 1e3},
                                          {"cm", 1e-2},
                                          {"mm", 1e-3},
                                          {"um", 1e-6},
                                          {"nm", 1e-9},
                                          {"pm", 1e-12},
                                          {"fm", 1e-15}}};
constexpr std::array<Unit, 7> kTime = {{{"s", 1.0},
                                        {"ms", 1e-3},
                                        {"us", 1e-6},
                                        {"ns", 1e-9},
                                        {"ps", 1e-12},
                                        {"fs", 1e-15},
                                        {"as", 1e-18}}};

template <std::size_t N>
bool lookup(const std::array<Unit, N>& table, std::string_view suffix, double& factor) {
  for (const auto& [name, f] : table) {
    if (name == suffix) {
      factor = f;
      return true;
    }
  }
  return false;
}

}  // namespace

double parse_quantity(std::string_view text, QuantityKind kind) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  std::string_view number = text;
  if (!number.empty() && number.front() == '+') number.remove_prefix(1);

  double value = 0.0;
  const auto res = std::from_chars(number.data(), number.data() + number.size(), value);
  if (res.ec != std::errc{} || number.empty())
    throw InvalidArgument("cannot parse quantity '" + std::string(text) + "'");

  std::string_view suffix(res.ptr, static_cast<std::size_t>(number.data() + number.size() - res.ptr));
  while (!suffix.empty() && suffix.front() == ' ') suffix.remove_prefix(1);

  double factor = 1.0;
  bool ok = true;
  switch (kind) {
    case QuantityKind::energy:
      if (suffix.empty()) factor = Constants::gev_to_joule;
      else ok = lookup(kEnergy, suffix, factor);
      break;
    case QuantityKind::length:
      if (!suffix.empty()) ok = lookup(kLength, suffix, factor);
      break;
    case QuantityKind::time:
      if (!suffix.empty()) ok = lookup(kTime, suffix, factor);
      break;
  }
  if (!ok) throw InvalidArgument("unknown unit '" + std::string(suffix) + "' in '" + std::string(text) + "'");
  const double si = value * factor;
  if (!std::isfinite(si)) throw InvalidArgument("quantity out of range: '" + std::string(text) + "'");
  return si;
}

}  // namespace vacuumleap
