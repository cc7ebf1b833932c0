#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cacti/linalg.hpp"
#include "cacti/scalar.hpp"
#include "cacti/tree_model.hpp"

namespace cacti {

enum class Symmetry { none, symmetric, antisymmetric };

// Binary generator of a symmetric operad presentation.
struct SymmetricGenerator {
  std::string name;
  int degree = 0;
  Symmetry sym = Symmetry::none;
};

// The expanded generator set in the shuffle category: a `none` generator
// becomes a pair {g, g~} exchanged by the input swap, the other symmetries
// keep one generator that the swap fixes up to sign.
struct ShuffleAlphabet {
  std::vector<std::string> names;
  std::vector<int> degree;
  std::vector<int> partner;      // generator obtained by swapping the children
  std::vector<int> swap_parity;  // sign the swap contributes (1 for antisymmetric)
  std::vector<int> source;       // originating symmetric generator
  std::vector<bool> tilde;
  std::vector<int> plain_of;     // symmetric generator -> its plain expansion

  int size() const { return static_cast<int>(names.size()); }
};

ShuffleAlphabet expand_generators(const std::vector<SymmetricGenerator>& gens);

// Tree monomial of the free shuffle operad, stored as its preorder code:
// -(g+1) opens an internal vertex labeled by generator g (binary, so exactly
// two subtrees follow), a positive entry is a leaf label. Children are ordered
// by least leaf.
struct TreeMonomial {
  std::vector<int> code;

  int arity() const;
  int weight() const;
  int degree(const ShuffleAlphabet& alph) const;
  int subtree_end(int pos) const;  // one past the subtree starting at pos
  int min_leaf(int pos) const;     // least leaf of that subtree
  std::string str(const ShuffleAlphabet& alph) const;

  bool operator==(const TreeMonomial&) const = default;
  bool operator<(const TreeMonomial& o) const { return code < o.code; }
};

TreeMonomial corolla(int gen);  // g(1,2)

// Sorts children by least leaf, swapping generators to their partners where
// needed; parity collects the swap signs and the crossings of the generator
// decorations, graded by degree.
std::pair<TreeMonomial, int> canonicalize(const std::vector<int>& raw,
                                          const ShuffleAlphabet& alph);

std::pair<TreeMonomial, int> apply_leaf_perm(const TreeMonomial& m, const Perm& sigma,
                                             const ShuffleAlphabet& alph);

// Shuffle composition datum: leaf 1 of the right factor lands on leaf i, its
// remaining leaves take the subset values in order, the other leaves of the
// left factor take the complement in order.
std::vector<int> identity_subset(int i, int n, int m);
std::pair<TreeMonomial, int> shuffle_compose(const TreeMonomial& m1, int i,
                                             const TreeMonomial& m2,
                                             const std::vector<int>& subset,
                                             const ShuffleAlphabet& alph);
std::vector<std::vector<int>> shuffle_subsets(int i, int n, int m);

// All tree monomials of the given arity, in a fixed deterministic order.
std::vector<TreeMonomial> enumerate_monomials(const ShuffleAlphabet& alph, int arity);

enum class OrderKind { path_lex, count_first };

// Admissible monomial order. The path-lexicographic kind compares, leaf by
// leaf, the words of generators along root-to-leaf paths (shorter words
// first, letter precedence only within one length); a smaller word sequence
// means a more leading monomial, ties fall to the planar leaf sequence. The
// depth-compare variant compares the whole leaf depth profile before any
// letters. count_first prepends the count of distinguished generators (larger
// leading) and their per-leaf spread (sparser leading), so monomials carrying
// a distinguished generator deeper always lead those with it at the root.
struct OrderSpec {
  OrderKind kind = OrderKind::path_lex;
  bool depth_compare = false;
  bool flipped = false;              // reverse every comparison below the kind
  std::vector<int> precedence;       // rank per expanded generator, lower earlier
  std::vector<bool> counted;         // count_first: the distinguished subset

  static OrderSpec path_lex_plain(const ShuffleAlphabet& a);
  static OrderSpec path_lex_tilde_first(const ShuffleAlphabet& a);
  static OrderSpec depth_lex(const ShuffleAlphabet& a, bool flipped);
  // counted marks the distinguished sources; precedence runs uncounted plains,
  // uncounted tildes, counted plains, counted tildes, so on monomials free of
  // counted letters the order restricts to plain path-lex
  static OrderSpec count_first(const ShuffleAlphabet& a, const std::vector<bool>& counted_sources);
};

struct ShuffleContext {
  FieldSpec field;
  ShuffleAlphabet alph;
  OrderSpec order;

  int cmp(const TreeMonomial& a, const TreeMonomial& b) const;  // +1: a leads
  bool greater(const TreeMonomial& a, const TreeMonomial& b) const { return cmp(a, b) > 0; }
};

// Linear combination of tree monomials of one arity, leading term first.
struct ShuffleElement {
  std::vector<std::pair<TreeMonomial, Scalar>> terms;

  bool is_zero() const { return terms.empty(); }
  const TreeMonomial& lm() const;
  const Scalar& lc() const;
  bool operator==(const ShuffleElement&) const = default;
};

ShuffleElement make_element(std::vector<std::pair<TreeMonomial, Scalar>> terms,
                            const ShuffleContext& ctx);
ShuffleElement axpy(const ShuffleElement& f, const Scalar& c, const ShuffleElement& g,
                    const ShuffleContext& ctx);  // f + c*g
ShuffleElement scale(const ShuffleElement& f, const Scalar& c);
ShuffleElement make_monic(const ShuffleElement& f);
std::string element_str(const ShuffleElement& f, const ShuffleAlphabet& alph);

// Occurrence of a pattern monomial inside a host monomial: the pattern's
// vertices map to host vertices positionally from the anchor, its leaves take
// whole host subtrees whose least leaves appear in pattern-leaf order.
struct Embedding {
  int anchor = 0;
  std::vector<int> vertices;                     // host code positions, pattern preorder
  std::vector<std::pair<int, int>> leaf_ranges;  // per pattern leaf, host code range
};

std::vector<Embedding> find_divisors(const TreeMonomial& host, const TreeMonomial& pattern);
bool embeddings_overlap(const Embedding& a, const Embedding& b);

// Replaces the embedded pattern by each term of elt (the pattern itself embeds
// to +host). Signs are Koszul signs of collecting the context, pattern, and
// argument-subtree decorations into block order, before and after.
ShuffleElement embed_element(const TreeMonomial& host, const Embedding& e,
                             const ShuffleElement& elt, const ShuffleContext& ctx);

// One term of a symmetric-operad relation among binary generators:
// slot 1 holds outer(inner(x_a, x_b), x_c), slot 2 holds outer(x_a, inner(x_b, x_c))
// with (a, b, c) the leaves entries.
struct RelationTerm {
  Scalar coeff;
  int outer = 0;
  int inner = 0;
  int slot = 1;
  std::array<int, 3> leaves{1, 2, 3};
};
using SymRelation = std::vector<RelationTerm>;

struct SymmetricPresentation {
  FieldSpec field;
  std::vector<SymmetricGenerator> gens;
  std::vector<SymRelation> relations;
};

struct ShufflePresentation {
  ShuffleContext ctx;
  std::vector<ShuffleElement> relations;  // monic, distinct leading monomials
};

// Expands one relation term to a signed shuffle monomial.
std::pair<TreeMonomial, int> expand_term(const RelationTerm& t, const ShuffleAlphabet& alph);

// Expands every relation's full orbit under leaf permutations and row-reduces
// the resulting span, so the output relations are monic with distinct leading
// monomials under the given order.
ShufflePresentation expand_presentation(const SymmetricPresentation& p, const OrderSpec& order);

// Row-reduces shuffle elements of one arity against each other (coordinates
// ordered by the monomial order).
std::vector<ShuffleElement> row_reduce_elements(const std::vector<ShuffleElement>& rows,
                                                const ShuffleContext& ctx);

// Order-independent comparison of relation spans.
bool same_row_space(const std::vector<ShuffleElement>& a,
                    const std::vector<ShuffleElement>& b, const ShuffleContext& ctx);

}  // namespace cacti
