#pragma once

// Suffixed quantities for command-line input, converted to SI:
//   energy  eV keV MeV GeV TeV J   (bare number = GeV)
//   length  m km cm mm um nm pm fm (bare number = m)
//   time    s ms us ns ps fs as    (bare number = s)

#include <string_view>

namespace vacuumleap {

enum class QuantityKind { energy, length, time };

double parse_quantity(std::string_view text, QuantityKind kind);

}  // namespace vacuumleap
