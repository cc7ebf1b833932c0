#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cacti/coalgebra.hpp"
#include "cacti/scalar.hpp"

namespace cacti {

// Vertices are 1..n; parent[v] = 0 exactly for the root. Edges point from
// parent to child, away from the root.
struct RootedTree {
  int n = 1;
  int root = 1;
  std::vector<int> parent;  // size n+1, index 0 unused

  static RootedTree single();
  std::vector<int> children(int v) const;
  int depth(int v) const;

  bool operator==(const RootedTree&) const = default;
  bool operator<(const RootedTree& o) const;
};

void validate_tree(const RootedTree& t);

// Number of nontrivial directed paths; strictly drops under cactus reduction.
int level(const RootedTree& t);

// All rooted trees on n labeled vertices, ordered by (root, parent tuple).
std::vector<RootedTree> enumerate_rooted_trees(int n, int bound = 7);

// Edge labels indexed by target vertex: labels[v] for v != root, labels[root]
// unused (-1). Label values point into an external label space whose degrees
// are passed to each operation.
struct DecoratedTree {
  RootedTree tree;
  std::vector<int> labels;

  bool operator==(const DecoratedTree&) const = default;
  bool operator<(const DecoratedTree& o) const;
  std::string str(const std::vector<std::string>& label_names) const;
};

struct TreeVector {
  FieldSpec field;
  std::vector<std::pair<DecoratedTree, Scalar>> terms;  // sorted, no zero coefficients

  explicit TreeVector(const FieldSpec& f) : field(f) {}
  TreeVector(const DecoratedTree& t, const Scalar& c);

  void add_term(const DecoratedTree& t, const Scalar& c);
  TreeVector& operator+=(const TreeVector& o);
  TreeVector operator*(const Scalar& c) const;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const TreeVector&) const = default;
};

using Perm = std::vector<int>;  // 1-indexed images, perm[0] unused

// Sign of sorting graded tokens (key, degree) by key; parity 0 or 1.
int koszul_parity(std::vector<std::pair<int, int>> tokens);

// Substitute t2 for vertex i of t1; vertex relabeling keeps 1..i-1, shifts t2
// up by i-1, shifts the rest of t1 up by m-1. Returns the composed tree and
// the Koszul parity of reordering the edge decorations.
std::pair<DecoratedTree, int> compose_decorated(const DecoratedTree& t1, int i,
                                                const DecoratedTree& t2,
                                                const std::vector<int>& degrees);

TreeVector nap_compose(const TreeVector& a, int i, const TreeVector& b,
                       const std::vector<int>& degrees);

std::pair<DecoratedTree, int> sym_action_decorated(const Perm& sigma, const DecoratedTree& t,
                                                   const std::vector<int>& degrees);

TreeVector nap_sym_action(const Perm& sigma, const TreeVector& v,
                          const std::vector<int>& degrees);

// The closed-form composition parity. The verbatim form charges the whole
// degree of t2 against the t1 decorations with target above i; it misses the
// crossing of t1's edge into i with the low-target part of t2 whenever t2's
// root is not 1, which the corrected form adds.
int composition_sign_closed_form(const DecoratedTree& t1, int i, const DecoratedTree& t2,
                                 const std::vector<int>& degrees, bool corrected);

// Cactus reduction over a coalgebra: labels index the coalgebra basis.
std::vector<int> reducible_targets(const DecoratedTree& t, int unit_label);

// j is the target of a reducible edge: label unit, parent of j not the root.
TreeVector cactus_reduce_once(const DecoratedTree& t, int j, const CoalgebraSpec& c);

// Chooses among reducible targets; default takes the first.
using ReductionChooser = std::function<std::size_t(const DecoratedTree&, const std::vector<int>&)>;

TreeVector cactus_normal_form(const TreeVector& v, const CoalgebraSpec& c,
                              const ReductionChooser& choose = nullptr);

// Rooted forest on 1..n (parent 0 for component roots) with one marked root.
struct PlantedForestStar {
  int n = 1;
  std::vector<int> parent;
  int star_root = 1;

  int edge_count() const;
};

std::vector<PlantedForestStar> enumerate_planted_forests_star(int n, int bound = 7);

// Dimensions by total label degree of the span of irreducible trees whose
// non-root-sourced edges carry labels of the given degrees (root-sourced edges
// additionally admit the degree-0 unit).
std::map<int, BigInt> bcact_dim_oracle(int n, const std::vector<int>& reduced_degrees);

// Algebra checker: one bilinear product per coalgebra basis element, written
// on a fixed basis of an ungraded space; mu[c][i][j] = coordinates of the
// product of basis elements i and j under the c-labeled operation.
struct BCactAlgebra {
  int dim = 0;
  std::vector<std::vector<std::vector<Row>>> mu;
};

struct AlgebraReport {
  bool pass = true;
  bool commutation_pass = true;
  bool unit_pass = true;
  std::string first_violation;
};

AlgebraReport check_bcact_algebra(const BCactAlgebra& alg, const CoalgebraSpec& c);

// mu_c(x, y) = x *0* (g_c y) for a fixed associative-permutative product and a
// family of matrices; satisfies the commutation family by construction.
BCactAlgebra nap_family_from_matrices(const std::vector<std::vector<Row>>& perm_product,
                                      const std::vector<std::vector<Row>>& g_matrices,
                                      const FieldSpec& f);

// The two-dimensional example: basepoint product plus a matrix-deformed one.
BCactAlgebra two_point_example_algebra(const std::vector<std::vector<long long>>& p,
                                       const FieldSpec& f);

}  // namespace cacti
