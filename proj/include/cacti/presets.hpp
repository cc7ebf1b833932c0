#pragma once

#include <string>
#include <vector>

#include "cacti/coalgebra.hpp"
#include "cacti/groebner.hpp"

namespace cacti {

// Catalog entry: a named binary quadratic presentation together with the
// monomial order its Groebner basis is computed under.
struct OperadPreset {
  std::string name;
  SymmetricPresentation sym;
  OrderSpec order;
  std::string order_name;
  ShufflePresentation pres;  // expand_presentation(sym, order)
};

const std::vector<std::string>& operad_preset_names();

// The nap preset takes the coalgebra's classes as its generator space; bcact
// splits them into the unit and the reduced classes. Every other preset
// ignores the coalgebra argument.
OperadPreset operad_preset(const std::string& name, const FieldSpec& field,
                           const CoalgebraSpec& coalgebra);
OperadPreset operad_preset(const std::string& name, const FieldSpec& field);

// Order names accepted by the CLI and stored in presets: path-lex,
// path-lex-tilde-first, depth-lex, depth-lex-flipped, count-first. The
// count-first spelling distinguishes the generators named in `counted`.
OrderSpec order_by_name(const std::string& name, const ShuffleAlphabet& alph,
                        const std::vector<std::string>& counted = {});

// Generator list bcact builds on: the coalgebra's unit class first, the
// reduced classes after, with the reduced coproduct kept alongside.
struct BcactGenerators {
  std::vector<SymmetricGenerator> gens;
  SplitCoalgebra split;
};
BcactGenerators bcact_generators(const CoalgebraSpec& c);

// Text form of a preset; the presentation parser round-trips it.
std::string preset_text(const OperadPreset& p);

}  // namespace cacti
