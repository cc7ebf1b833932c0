#pragma once

#include <map>
#include <string>
#include <vector>

#include "cacti/shuffle.hpp"

namespace cacti {

// Truncated reduced Groebner basis. All S-polynomials of weight up to
// complete_below reduce to zero, so normal monomials of arity n are a basis
// of the quotient whenever n - 1 <= complete_below. A basis that closes at
// weight 3 while staying quadratic is complete at every weight.
struct GroebnerBasis {
  ShuffleContext ctx;
  std::vector<ShuffleElement> elements;  // monic, inter-reduced, creation order
  int complete_below = 2;
  bool quadratic = false;

  int max_element_weight() const;
};

// Bounded Buchberger completion. Levels run by ascending S-polynomial weight;
// within a level the candidate reductions are independent of insertion order
// (they reduce against the level's snapshot) and may run on several threads,
// results are merged in enumeration order, so the output does not depend on
// jobs.
GroebnerBasis buchberger(const ShufflePresentation& p, int max_weight, int jobs = 1);

// Normal form modulo the monic elements: repeatedly eliminates leading
// monomials divisible by an element's leading monomial (first element in
// listed order, first embedding), moves irreducible leading terms to the
// remainder.
ShuffleElement reduce(const ShuffleElement& f, const std::vector<ShuffleElement>& basis,
                      const ShuffleContext& ctx);

// Monomials of the arity with no divisor among the leading monomials.
// Requires completeness at weight arity-1; the error names the weight needed.
std::vector<TreeMonomial> normal_monomials(const GroebnerBasis& gb, int arity);

BigInt gb_dimension(const GroebnerBasis& gb, int arity);
std::map<int, BigInt> gb_dimension_by_degree(const GroebnerBasis& gb, int arity);
std::vector<BigInt> gb_dims(const GroebnerBasis& gb, int max_arity);  // arities 1..max

// True when completion up to probe_weight adds no element of weight 3 or
// more: a certificate that the quadratic relations are already a Groebner
// basis, hence the operad is Koszul.
bool is_quadratic_gb(const ShufflePresentation& p, int probe_weight = 4, int jobs = 1);

// Rank of the span of the normal forms of all monomials built from the named
// generators only.
BigInt suboperad_dims(const GroebnerBasis& gb, const std::vector<std::string>& subset,
                      int arity);

// Binary quadratic presentation with its symmetric-generator data kept
// alongside the expanded relations.
struct QuadraticOperad {
  std::vector<SymmetricGenerator> gens;
  ShufflePresentation pres;
};

QuadraticOperad make_operad(const SymmetricPresentation& p, const OrderSpec& order);

// Koszul dual: dual generators flip symmetric and antisymmetric and negate
// degree; dual relations are the exact annihilator of the relation space in
// weight 2 under a fixed shape-diagonal pairing. Applying it twice returns
// the original relation space.
QuadraticOperad koszul_dual(const QuadraticOperad& p);

}  // namespace cacti
