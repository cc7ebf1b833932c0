#pragma once

#include <string>
#include <vector>

#include "cacti/coalgebra.hpp"
#include "cacti/pconj.hpp"
#include "cacti/presets.hpp"

namespace cacti {

// 1-based position of the offending character.
struct ParseError : Error {
  int line;
  int column;
  ParseError(int line, int column, const std::string& what);
};

// One declaration per line; names must be declared before they are used.
// Blank lines and lines starting with '#' are skipped.
CoalgebraSpec parse_coalgebra(const std::string& text, const FieldSpec& field);

// A presentation file either names an embedded preset or spells out binary
// generators, an optional order line, and quadratic relations.
struct ParsedPresentation {
  std::string preset;  // nonempty iff the file is a single `preset <name>` line
  SymmetricPresentation sym;
  std::string order_name;            // empty = path-lex
  std::vector<std::string> counted;  // count-first only: counted generator names
};

ParsedPresentation parse_presentation(const std::string& text, const FieldSpec& field);

// Expand to the shuffle category; `coalgebra` feeds the nap and bcact presets
// and is ignored by everything else.
OperadPreset resolve_presentation(const ParsedPresentation& p, const FieldSpec& field,
                                  const CoalgebraSpec& coalgebra);

// Multiplication table of a finite group: one row per line, entries separated
// by whitespace. Identity and inverses are recovered from the table.
GroupSpec parse_group_table(const std::string& text);

}  // namespace cacti
