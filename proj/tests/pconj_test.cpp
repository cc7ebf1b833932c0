#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cacti/pconj.hpp"

using namespace cacti;

namespace {

const GroupSpec Z = GroupSpec::integers();
const GroupSpec S3 = GroupSpec::symmetric3();

FreeProductWord random_word(std::mt19937& rng, int factors, const GroupSpec& G) {
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<int> fac(1, factors);
  std::vector<FreeLetter> letters;
  int want = len(rng);
  for (int t = 0; t < want; ++t) {
    std::int64_t elem;
    if (G.is_finite()) {
      std::uniform_int_distribution<int> el(1, G.order() - 1);
      elem = el(rng);
    } else {
      std::uniform_int_distribution<int> el(1, 6);
      int e = el(rng);
      elem = e <= 3 ? e : 3 - e;  // -3..-1, 1..3
    }
    letters.push_back({fac(rng), elem});
  }
  return reduce_word(std::move(letters), G);
}

// Automorphism comparison on every factor generator.
bool agree(const std::vector<PartialConj>& a, const std::vector<PartialConj>& b,
           int factors, const GroupSpec& G) {
  for (int k = 1; k <= factors; ++k)
    for (std::int64_t c : G.letter_elements())
      if (!(apply_product(a, FreeProductWord::generator(k, c, G), G) ==
            apply_product(b, FreeProductWord::generator(k, c, G), G)))
        return false;
  return true;
}

}  // namespace

TEST_CASE("finite group tables are validated") {
  CHECK(S3.order() == 6);
  CHECK(S3.id() == 0);
  // non-abelian: transpositions 021 and 102 compose in both orders differently
  CHECK(S3.mul(1, 2) != S3.mul(2, 1));
  for (int a = 0; a < 6; ++a) {
    CHECK(S3.mul(a, S3.inv(a)) == S3.id());
    CHECK(S3.inv(S3.inv(a)) == a);
  }

  CHECK(GroupSpec::finite({{0, 1}, {1, 0}}).order() == 2);
  CHECK_THROWS_WITH_AS(GroupSpec::finite({{0, 1}}), doctest::Contains("not square"),
                       Error);
  CHECK_THROWS_WITH_AS(GroupSpec::finite({{0, 3}, {1, 0}}),
                       doctest::Contains("out of range"), Error);
  CHECK_THROWS_WITH_AS(GroupSpec::finite({{0, 1}, {0, 0}}),
                       doctest::Contains("not associative"), Error);
  // max(a,b) is associative with neutral 0 but 1 has no inverse
  CHECK_THROWS_WITH_AS(GroupSpec::finite({{0, 1}, {1, 1}}),
                       doctest::Contains("no inverse"), Error);
  // the left-zero semigroup is associative but has no identity
  CHECK_THROWS_WITH_AS(GroupSpec::finite({{0, 0}, {1, 1}}),
                       doctest::Contains("no identity"), Error);
}

TEST_CASE("free product words reduce to canonical form") {
  CHECK(FreeProductWord::generator(2, 0, Z).is_identity());
  CHECK(FreeProductWord::generator(2, 0, Z).str() == "e");

  FreeProductWord w = reduce_word({{1, 2}, {1, -2}, {2, 1}, {2, 2}, {2, -3}}, Z);
  CHECK(w.is_identity());

  FreeProductWord v = reduce_word({{1, 1}, {2, 1}, {2, -1}, {1, 1}}, Z);
  CHECK(v == FreeProductWord::generator(1, 2, Z));

  FreeProductWord a = reduce_word({{1, 1}, {2, 3}}, Z);
  FreeProductWord b = reduce_word({{2, -3}, {1, 1}}, Z);
  CHECK(concat(a, b, Z) == FreeProductWord::generator(1, 2, Z));
  CHECK(concat(a, a, Z).letters.size() == 4);

  FreeProductWord s = reduce_word({{1, 1}, {1, 2}}, S3);
  CHECK(s == FreeProductWord::generator(1, S3.mul(1, 2), S3));
}

TEST_CASE("the action of a single generator") {
  FreeProductWord x2 = FreeProductWord::generator(2, 1, Z);
  FreeProductWord image = apply_generator({1, 2, 1}, x2, Z);
  CHECK(image == reduce_word({{1, -1}, {2, 1}, {1, 1}}, Z));
  CHECK(image.str() == "x1^-1 x2^1 x1^1");

  // other factors are fixed
  for (int k = 1; k <= 4; ++k) {
    if (k == 2) continue;
    FreeProductWord xk = FreeProductWord::generator(k, 1, Z);
    CHECK(apply_generator({1, 2, 3}, xk, Z) == xk);
  }

  // the identity label acts trivially
  FreeProductWord mixed = reduce_word({{2, 1}, {3, -2}, {2, 2}}, Z);
  CHECK(apply_generator({1, 2, 0}, mixed, Z) == mixed);

  // conjugators collapse across untouched letters
  FreeProductWord two = reduce_word({{2, 1}, {3, 5}, {2, 1}}, Z);
  FreeProductWord img = apply_generator({1, 2, 2}, two, Z);
  CHECK(img == reduce_word({{1, -2}, {2, 1}, {1, 2}, {3, 5}, {1, -2}, {2, 1}, {1, 2}},
                           Z));
}

TEST_CASE("a generator composed with its inverse fixes random words") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    FreeProductWord w = random_word(rng, 4, Z);
    PartialConj a{1 + trial % 3, 2 + trial % 3, 1 + trial % 5};
    if (a.i == a.j) a.i = a.j == 4 ? 1 : 4;
    FreeProductWord back =
        apply_generator({a.i, a.j, -a.g}, apply_generator(a, w, Z), Z);
    CHECK(back == w);
  }
  for (int trial = 0; trial < 100; ++trial) {
    FreeProductWord w = random_word(rng, 4, S3);
    PartialConj a{trial % 2 ? 1 : 3, 2, 1 + trial % 5};
    FreeProductWord back = apply_generator({a.i, a.j, S3.inv(a.g)},
                                           apply_generator(a, w, S3), S3);
    CHECK(back == w);
  }
}

TEST_CASE("the four relation families hold; the uncorrected commutator fails") {
  for (int n : {3, 4}) {
    CAPTURE(n);
    RelationReport r = verify_relations(n, Z, Z.sample_elements(3));
    CHECK(r.pass());
    CHECK(r.composition);
    CHECK(r.same_source);
    CHECK(r.disjoint);
    CHECK(r.correction);
    CHECK(r.weakened_fails);
    CHECK(r.first_violation.empty());
    CHECK(r.checked == (n == 3 ? 392 : 2205));
  }
  for (int n : {3, 4}) {
    CAPTURE(n);
    RelationReport r = verify_relations(n, S3, S3.sample_elements(0));
    CHECK(r.pass());
    CHECK(r.weakened_fails);
    CHECK(r.checked == (n == 3 ? 288 : 1620));
  }

  // parallel verification returns the identical report
  RelationReport serial = verify_relations(4, Z, Z.sample_elements(2), 1);
  RelationReport parallel = verify_relations(4, Z, Z.sample_elements(2), 4);
  CHECK(serial.pass() == parallel.pass());
  CHECK(serial.checked == parallel.checked);
  CHECK(serial.weakened_fails == parallel.weakened_fails);
  CHECK(serial.first_violation == parallel.first_violation);

  // the explicit counterexample behind weakened_fails
  PartialConj A{1, 2, 1}, B{2, 3, 1};
  FreeProductWord x3 = FreeProductWord::generator(3, 1, Z);
  CHECK_FALSE(apply_product({A, B}, x3, Z) == apply_product({B, A}, x3, Z));
  // restoring the correcting factor repairs it
  PartialConj A2{1, 3, 1};
  CHECK(agree({A, A2, B}, {B, A, A2}, 3, Z));
}

TEST_CASE("tree elements expand over the reachable set") {
  // corolla: every edge is a leaf edge
  RootedTree corolla;
  corolla.n = 4;
  corolla.root = 1;
  corolla.parent = {0, 0, 1, 1, 1};
  CHECK(expand_tree_element(corolla, 3, 7) ==
        std::vector<PartialConj>{{1, 3, 7}});

  RootedTree chain;
  chain.n = 3;
  chain.root = 1;
  chain.parent = {0, 0, 1, 2};
  CHECK(expand_tree_element(chain, 2, 5) ==
        std::vector<PartialConj>{{1, 2, 5}, {1, 3, 5}});
  CHECK(expand_tree_element(chain, 3, 5) == std::vector<PartialConj>{{2, 3, 5}});

  // deeper: 1 -> 2 -> {3, 4}, 1 -> 5
  RootedTree t;
  t.n = 5;
  t.root = 1;
  t.parent = {0, 0, 1, 2, 2, 1};
  CHECK(expand_tree_element(t, 2, 1) ==
        std::vector<PartialConj>{{1, 2, 1}, {1, 3, 1}, {1, 4, 1}});

  CHECK_THROWS_WITH_AS(expand_tree_element(chain, 1, 5),
                       doctest::Contains("non-root"), Error);
}

TEST_CASE("expansion is consistent with one reduction step") {
  for (const GroupSpec& G : {Z, S3}) {
    std::int64_t g = G.is_finite() ? 4 : 2;
    for (int n : {4, 5}) {
      for (const RootedTree& t : enumerate_rooted_trees(n)) {
        if (t.root != 1) continue;
        for (int w = 2; w <= n; ++w) {
          if (t.parent[w] == 0) continue;
          for (int j = 2; j <= n; ++j) {
            // reduce over <ij>: i must not be the root, and the edge must
            // carry the identity, so it cannot be the labeled edge into w
            int i = t.parent[j];
            if (j == w || i == 0 || t.parent[i] == 0) continue;
            RootedTree reduced = t;
            reduced.parent[j] = t.parent[i];
            if (w == i) {
              std::vector<PartialConj> rhs = expand_tree_element(reduced, i, g);
              for (const PartialConj& a : expand_tree_element(reduced, j, g))
                rhs.push_back(a);
              CHECK(agree(expand_tree_element(t, w, g), rhs, n, G));
            } else {
              CHECK(agree(expand_tree_element(t, w, g),
                          expand_tree_element(reduced, w, g), n, G));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("composition formulas hold against the tree calculus") {
  for (int n : {2, 3})
    for (int m : {2, 3}) {
      CAPTURE(n);
      CAPTURE(m);
      CompositionReport r = verify_composition_formulas(n, m, Z, {-2, -1, 1, 2});
      CHECK(r.pass);
      CHECK(r.first_violation.empty());
    }
  CHECK(verify_composition_formulas(3, 2, Z, {-2, -1, 1, 2}).checked == 112);
  CHECK(verify_composition_formulas(3, 3, S3, S3.sample_elements(0)).pass);
}
