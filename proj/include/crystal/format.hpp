#pragma once

#include <string>
#include <vector>

#include "crystal/betti.hpp"
#include "crystal/ideal.hpp"
#include "crystal/polynomial.hpp"

namespace crystal {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_output_format(const std::string& name);

/// Macaulay2-style Betti diagram: columns are homological indices i, rows
/// are j - i, zeros print as '.', with a leading `total:` row.
std::string render_betti_text(const BettiTable& table);
/// {"char": c, "entries": [[i, j, value], ...]}
std::string render_betti_json(const BettiTable& table);
/// `i,j,value` header plus one LF-terminated line per nonzero entry.
std::string render_betti_csv(const BettiTable& table);
std::string render_betti(const BettiTable& table, OutputFormat format);

/// {"variables": [...], "basis": [...], "initial_ideal": [...]}
std::string render_groebner_json(const PolyRing& ring, const std::vector<Polynomial>& basis,
                                 const MonomialIdeal& initial);
std::string render_groebner_text(const PolyRing& ring, const std::vector<Polynomial>& basis,
                                 const MonomialIdeal& initial);

}  // namespace crystal
