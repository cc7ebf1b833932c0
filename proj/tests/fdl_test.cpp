#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "cacti/fdl.hpp"
#include "cacti/presets.hpp"

using namespace cacti;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<BigInt> big(std::vector<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.push_back(BigInt(x));
  return out;
}

std::vector<BigInt> assembled_dims(const FdlSpec& spec, int max_arity, bool* quadratic) {
  AssembledFdl e = assemble(spec);
  GroebnerBasis gb = buchberger(e.pres, max_arity - 1, 2);
  if (quadratic) *quadratic = gb.quadratic;
  return gb_dims(gb, max_arity);
}

// The preset's relation family re-expanded under the assembled order, with
// generator indices remapped where the two presentations disagree on layout.
std::vector<ShuffleElement> preset_rows(const std::string& name, const AssembledFdl& e,
                                        int (*remap)(int) = nullptr) {
  OperadPreset pre = operad_preset(name, Q);
  SymmetricPresentation p = pre.sym;
  p.gens = e.sym.gens;
  if (remap)
    for (auto& rel : p.relations)
      for (auto& t : rel) {
        t.outer = remap(t.outer);
        t.inner = remap(t.inner);
      }
  return expand_presentation(p, e.order).relations;
}

}  // namespace

TEST_CASE("composite dimension count via series composition") {
  CHECK(composite_dims(big({1, 1, 1, 1, 1}), big({1, 1, 2, 6, 24}), 5) ==
        big({1, 2, 6, 24, 120}));
  CHECK(composite_dims(big({1, 1, 2, 6, 24}), big({1, 2, 12, 120, 1680}), 5) ==
        big({1, 3, 20, 210, 3024}));
  CHECK(composite_dims(big({1, 2, 6, 24, 120}), big({1, 1, 1, 1, 1}), 5) ==
        big({1, 3, 13, 75, 541}));
  CHECK(composite_dims(big({1, 2, 3, 4, 5}), big({1, 2, 9, 64, 625}), 5) ==
        big({1, 4, 24, 200, 2160}));
  CHECK(composite_dims(big({1, 2, 3, 4}), big({1, 4, 36, 512}), 4) ==
        big({1, 6, 63, 972}));
}

TEST_CASE("weight-3 check passes for the four catalog laws") {
  struct Row {
    std::string name;
    std::string coalgebra;
    int q, d, s;
    long dim3;
  };
  const std::vector<Row> rows = {
      {"as", "", 2, 3, 1, 24},
      {"postlie", "", 1, 6, 0, 210},
      {"ctd", "", 6, 6, 2, 75},
      {"bcact", "point", 9, 0, 0, 4},
      {"bcact", "discrete(2)", 9, 12, 3, 200},
      {"bcact", "circle", 9, 12, 3, 200},
      {"bcact", "sphere(2)", 9, 12, 3, 200},
      {"bcact", "wedge_of_circles(2)", 9, 24, 12, 972},
  };
  for (const auto& row : rows) {
    CAPTURE(row.name);
    CAPTURE(row.coalgebra);
    FdlSpec spec = row.coalgebra.empty()
                       ? fdl_preset(row.name, Q)
                       : fdl_preset(row.name, Q, coalgebra_preset(row.coalgebra, Q));
    AssembledFdl e = assemble(spec);
    CHECK(e.q_rows == row.q);
    CHECK(e.d_rows == row.d);
    CHECK(e.s_rows == row.s);
    Weight3Report report = check_weight3(spec, 2);
    CHECK(report.passes);
    CHECK(report.dim_e3 == BigInt(row.dim3));
    CHECK(report.dim_ab3 == BigInt(row.dim3));
  }
}

TEST_CASE("assembled presentation spans the preset relation space") {
  {
    AssembledFdl e = assemble(fdl_preset("as", Q));
    CHECK(same_row_space(e.pres.relations, preset_rows("as", e), e.pres.ctx));
  }
  {
    AssembledFdl e = assemble(fdl_preset("postlie", Q));
    CHECK(same_row_space(e.pres.relations, preset_rows("postlie", e), e.pres.ctx));
  }
  {
    // the standalone preset lists the symmetric product first
    AssembledFdl e = assemble(fdl_preset("ctd", Q));
    CHECK(same_row_space(e.pres.relations,
                         preset_rows("ctd", e, [](int g) { return 1 - g; }),
                         e.pres.ctx));
  }
  for (std::string cname : {"point", "circle"}) {
    CAPTURE(cname);
    CoalgebraSpec c = coalgebra_preset(cname, Q);
    AssembledFdl e = assemble(fdl_preset("bcact", Q, c));
    OperadPreset pre = operad_preset("bcact", Q, c);
    SymmetricPresentation p = pre.sym;
    std::vector<ShuffleElement> rows = expand_presentation(p, e.order).relations;
    CHECK(same_row_space(e.pres.relations, rows, e.pres.ctx));
  }
}

TEST_CASE("assembled dimensions match the composition product") {
  bool quad = false;
  CHECK(assembled_dims(fdl_preset("as", Q), 5, &quad) == big({1, 2, 6, 24, 120}));
  CHECK(quad);
  CHECK(assembled_dims(fdl_preset("postlie", Q), 5, &quad) ==
        big({1, 3, 20, 210, 3024}));
  CHECK(quad);
  CHECK(assembled_dims(fdl_preset("ctd", Q), 5, &quad) == big({1, 3, 13, 75, 541}));
  CHECK_FALSE(quad);  // the one-sided law needs a weight-4 element
  CHECK(assembled_dims(fdl_preset("bcact", Q, coalgebra_preset("circle", Q)), 5,
                       &quad) == big({1, 4, 24, 200, 2160}));
  CHECK(quad);
  CHECK(assembled_dims(fdl_preset("bcact", Q, coalgebra_preset("wedge_of_circles(2)", Q)),
                       4, &quad) == big({1, 6, 63, 972}));
  CHECK(quad);
}

TEST_CASE("deformed relations may carry their rewriting freely") {
  FdlSpec spec = fdl_preset("as", Q);
  AssembledFdl e = assemble(spec);

  FdlSpec shifted = spec;
  for (const auto& t : spec.d_rules[0]) shifted.q_relations[0].push_back(t);
  AssembledFdl e2 = assemble(shifted);
  CHECK(same_row_space(e.pres.relations, e2.pres.relations, e.pres.ctx));
  CHECK(check_weight3(shifted, 2).passes);
}

TEST_CASE("wrong deformations are caught") {
  // scaling one rewriting image stays equivariant but breaks the law
  {
    FdlSpec bad = fdl_preset("postlie", Q);
    for (std::size_t i = 1; i < bad.d_rules[0].size(); ++i)
      bad.d_rules[0][i].coeff = bad.d_rules[0][i].coeff + bad.d_rules[0][i].coeff;
    Weight3Report report = check_weight3(bad, 2);
    CHECK_FALSE(report.passes);
    CHECK(report.dim_e3 == BigInt(196));
    CHECK(report.dim_ab3 == BigInt(210));
  }
  // dropping one term of a rule is not even equivariant; the orbit of the
  // remaining terms rewrites outside the mixed block
  {
    FdlSpec bad = fdl_preset("postlie", Q);
    bad.d_rules[0].pop_back();
    CHECK_THROWS_WITH_AS(assemble(bad),
                         doctest::Contains("rewrite each mixed monomial"), Error);
  }
  // two rules that disagree on the same mixed monomial
  {
    FdlSpec bad = fdl_preset("ctd", Q);
    bad.d_rules[1][1].coeff = Scalar::of_int(-2, Q);
    CHECK_THROWS_WITH_AS(assemble(bad),
                         doctest::Contains("rewrite each mixed monomial"), Error);
  }
  {
    FdlSpec bad = fdl_preset("ctd", Q);
    bad.d_rules.clear();
    CHECK_THROWS_WITH_AS(assemble(bad),
                         doctest::Contains("rewrite each mixed monomial"), Error);
  }
  // without the B relations the associator residue has nowhere to go
  {
    FdlSpec bad = fdl_preset("as", Q);
    bad.b.relations.clear();
    CHECK_THROWS_WITH_AS(assemble(bad),
                         doctest::Contains("residue outside the B relation span"),
                         Error);
  }
}

TEST_CASE("a law over the one-point coalgebra has no second block") {
  FdlSpec spec = fdl_preset("bcact", Q);
  CHECK(spec.b.gens.empty());
  CHECK(assembled_dims(spec, 5, nullptr) == big({1, 2, 3, 4, 5}));
}

TEST_CASE("generating series inversion") {
  CHECK(check_inversion(big({1, 2, 9, 64, 625, 7776}), big({1, 2, 3, 4, 5, 6}), 6));
  CHECK(check_inversion(big({1, 2, 6, 24, 120, 720}), big({1, 2, 6, 24, 120, 720}), 6));
  CHECK(check_inversion(big({1, 3, 20, 210, 3024, 55440}), big({1, 3, 7, 15, 31, 63}),
                        6));
  CHECK(check_inversion(big({1, 3, 13, 75, 541, 4683}), big({1, 3, 14, 90, 744, 7560}),
                        6));
  CHECK(check_inversion(big({1, 1, 1, 1, 1, 1}), big({1, 1, 2, 6, 24, 120}), 6));
  CHECK(check_inversion(big({1, 2, 6, 24, 120, 720}), big({1, 2, 6, 24, 120, 720}), 6));
  CHECK(check_inversion(big({1, 2, 3, 4, 5, 6}), big({1, 2, 9, 64, 625, 7776}), 6));
  CHECK_FALSE(
      check_inversion(big({1, 3, 20, 210, 3024, 55440}), big({1, 3, 7, 15, 31, 64}), 6));
}

TEST_CASE("the law catalog is consistent with its presets") {
  const auto& catalog = fdl_catalog();
  REQUIRE(catalog.size() == 8);
  for (const auto& entry : catalog) {
    CAPTURE(entry.name);
    CAPTURE(entry.coalgebra);
    FdlSpec spec = entry.coalgebra.empty()
                       ? fdl_preset(entry.name, Q)
                       : fdl_preset(entry.name, Q, coalgebra_preset(entry.coalgebra, Q));
    CHECK(entry.splitting_note == spec.splitting_note);
    REQUIRE(entry.expected_dims.size() == 4);
    CHECK(assembled_dims(spec, 4, nullptr) == entry.expected_dims);
  }
  for (const auto& name : fdl_preset_names())
    CHECK(std::count_if(catalog.begin(), catalog.end(),
                        [&](const FdlCatalogEntry& e) { return e.name == name; }) >= 1);
}
