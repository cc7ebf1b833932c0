#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cacti/tree_model.hpp"

namespace cacti {

// The label group: either the integers written additively, or a finite group
// whose elements are indices into a multiplication table.
struct GroupSpec {
  enum class Kind { integers, finite };
  Kind kind = Kind::integers;
  std::vector<std::vector<int>> table;  // finite only; table[a][b]
  int identity = 0;
  std::vector<int> inverse;

  static GroupSpec integers();
  // Validates the group axioms and locates the identity and inverses.
  static GroupSpec finite(std::vector<std::vector<int>> table);
  static GroupSpec symmetric3();

  bool is_finite() const { return kind == Kind::finite; }
  int order() const;  // finite only
  std::int64_t id() const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inv(std::int64_t a) const;

  // Elements the verifiers quantify over: exponents in [-window, window] for
  // the integers, every element for a finite group.
  std::vector<std::int64_t> sample_elements(int window) const;
  // One non-identity witness per factor letter suffices to compare
  // homomorphisms; for finite groups every non-identity element is used.
  std::vector<std::int64_t> letter_elements() const;
};

// One letter of a reduced free-product word: a non-identity element of the
// factor group with the given index.
struct FreeLetter {
  int factor = 1;
  std::int64_t elem = 0;
  bool operator==(const FreeLetter&) const = default;
};

// Reduced word in G_1 * ... * G_n; adjacent letters have distinct factors.
struct FreeProductWord {
  std::vector<FreeLetter> letters;

  static FreeProductWord identity() { return {}; }
  static FreeProductWord generator(int factor, std::int64_t elem, const GroupSpec& G);
  bool is_identity() const { return letters.empty(); }
  bool operator==(const FreeProductWord&) const = default;
  std::string str() const;
};

FreeProductWord reduce_word(std::vector<FreeLetter> letters, const GroupSpec& G);
FreeProductWord concat(const FreeProductWord& a, const FreeProductWord& b,
                       const GroupSpec& G);

// The generator alpha^g_{ij}: conjugates every factor-j letter by the factor-i
// image of g, fixes all other letters.
struct PartialConj {
  int i = 1;
  int j = 2;
  std::int64_t g = 0;
  bool operator==(const PartialConj&) const = default;
};

FreeProductWord apply_generator(const PartialConj& a, const FreeProductWord& w,
                                const GroupSpec& G);
// Applies a product of generators, rightmost factor first.
FreeProductWord apply_product(const std::vector<PartialConj>& word,
                              const FreeProductWord& w, const GroupSpec& G);

struct RelationReport {
  bool composition = true;   // alpha^g alpha^h = alpha^{gh}
  bool same_source = true;   // [alpha^g_ij, alpha^h_ik] = e
  bool disjoint = true;      // [alpha^g_ij, alpha^h_kl] = e
  bool correction = true;    // [alpha^g_ij alpha^g_ik, alpha^h_jk] = e
  // The commutator [alpha^g_ij, alpha^h_jk] without the correcting factor
  // admits a counterexample; true once one is found.
  bool weakened_fails = false;
  std::int64_t checked = 0;
  std::string first_violation;

  bool pass() const { return composition && same_source && disjoint && correction; }
};

RelationReport verify_relations(int n, const GroupSpec& G,
                                const std::vector<std::int64_t>& sample, int jobs = 1);

// The element of the tree with a single labeled edge, written in the
// generators: the product of alpha^g_{iv} over all v reachable from i through
// the edge into j, in ascending vertex order. i is the parent of j.
std::vector<PartialConj> expand_tree_element(const RootedTree& t, int j, std::int64_t g);

struct CompositionReport {
  bool pass = true;
  std::int64_t checked = 0;
  std::string first_violation;
};

// Composes generator representatives with identity corollas on either side
// through the labeled tree composition, expands, and compares both sides of
// the index formulas as automorphisms of the free product on n+m-1 factors.
CompositionReport verify_composition_formulas(int n, int m, const GroupSpec& G,
                                              const std::vector<std::int64_t>& sample);

}  // namespace cacti
