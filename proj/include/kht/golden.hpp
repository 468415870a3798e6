#pragma once

#include <map>
#include <string>
#include <vector>

#include "kht/diagram.hpp"
#include "kht/laurent.hpp"

namespace kht {

/// One row of the classification tables: a tangle type with a crossing-sign
/// multiset and its expected Poincare polynomial over Q. The diagram is
/// stored as a base notation plus orientation/mirror operations, so every
/// sign variant of a type shares one hand-checked embedding.
struct GoldenEntry {
  int table;                 // 1: up to two crossings, 2: three crossings
  std::string type;          // e.g. "2_3", "2'_3", "4arc"
  std::string signs;         // "+", "+-", "---", "" for no crossings
  std::string polynomial;    // expected, parseable by LaurentPoly2::parse
  std::string base;          // key into golden_base_diagrams()
  bool mirrored = false;
  std::vector<int> reversed_components;
  bool suspected_typo = false;     // table prints a different polynomial
  std::string printed_polynomial;  // what the table prints, when flagged
};

/// Base diagrams in tangle notation, keyed by name.
const std::map<std::string, std::string>& golden_base_diagrams();

/// All rows of both tables, in table order.
const std::vector<GoldenEntry>& golden_entries();

/// Builds the oriented diagram for a row (parse base, mirror, reverse).
TangleDiagram realize(const GoldenEntry& e);

/// The crossing-sign multiset of a diagram in the table's notation,
/// e.g. "++-" (pluses first).
std::string sign_multiset(const TangleDiagram& d);

/// File name used for the on-disk copy of a row's diagram.
std::string fixture_filename(const GoldenEntry& e);

LaurentPoly2 golden_polynomial(const GoldenEntry& e);

}  // namespace kht
