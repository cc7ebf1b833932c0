#pragma once

#include <string>
#include <vector>

#include "cacti/coalgebra.hpp"
#include "cacti/groebner.hpp"
#include "cacti/presets.hpp"
#include "cacti/series.hpp"

namespace cacti {

// One side of a filtered distributive law: binary generators with quadratic
// relations, written in local indices.
struct FdlPart {
  std::vector<SymmetricGenerator> gens;
  std::vector<SymRelation> relations;
};

// Data of a filtered distributive law. The combined generator list is the A
// generators followed by the B generators; q_relations and d_rules use that
// combined indexing.
//
// q_relations are the deformed A-relations, one per basis relation: the pure
// A-part must span the same space as a.relations and the deformation may only
// involve mixed (A-over-B) and pure-B monomials. d_rules rewrite every
// monomial with a B generator over an A generator into that same span.
// assemble checks both conditions and normalizes stray B-over-A terms on the
// right-hand sides through the d_rules themselves.
struct FdlSpec {
  std::string name;
  FieldSpec field;
  FdlPart a;
  FdlPart b;
  std::vector<SymRelation> q_relations;
  std::vector<SymRelation> d_rules;
  std::string splitting_note;  // recorded justification for the retraction
};

// The assembled operad: combined symmetric presentation (families Q, D, S in
// that order), its expansion under the count-first order that distinguishes
// the A generators, and the expanded row counts per family.
struct AssembledFdl {
  SymmetricPresentation sym;
  ShufflePresentation pres;
  OrderSpec order;
  int q_rows = 0;
  int d_rows = 0;
  int s_rows = 0;
};

AssembledFdl assemble(const FdlSpec& spec);

struct Weight3Report {
  bool passes = false;
  BigInt dim_e3;   // arity-4 dimension of the assembled operad
  BigInt dim_ab3;  // arity-4 dimension of the composition product
};

// Compares the assembled operad with the composition product in weight 3
// (arity 4 for binary generators). Equality certifies the distributive law;
// the assembled side can only fall short, never exceed.
Weight3Report check_weight3(const FdlSpec& spec, int jobs = 1);

// Per-arity dimensions of the composition product, by exponential generating
// function composition. Exact; independent of the ground field.
std::vector<BigInt> composite_dims(const std::vector<BigInt>& dims_a,
                                   const std::vector<BigInt>& dims_b, int max_arity);

// True when the dual dimension series is the compositional inverse of the
// primal one up to alternating signs, through arity N.
bool check_inversion(const std::vector<BigInt>& dims_p,
                     const std::vector<BigInt>& dims_dual, int N);

struct FdlCatalogEntry {
  std::string name;
  std::string coalgebra;  // empty when the preset ignores it
  std::vector<BigInt> expected_dims;  // arities 1..4
  std::string splitting_note;
};

const std::vector<std::string>& fdl_preset_names();  // as, postlie, ctd, bcact
FdlSpec fdl_preset(const std::string& name, const FieldSpec& field,
                   const CoalgebraSpec& coalgebra);
FdlSpec fdl_preset(const std::string& name, const FieldSpec& field);
const std::vector<FdlCatalogEntry>& fdl_catalog();

}  // namespace cacti
