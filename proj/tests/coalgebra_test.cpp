#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cacti/coalgebra.hpp"

using namespace cacti;

namespace {
const FieldSpec Q = FieldSpec::rationals();

bool axiom_passed(const CoalgebraReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.axiom == name) return c.pass;
  return false;
}
}  // namespace

TEST_CASE("presets satisfy every axiom") {
  for (const auto& name : coalgebra_preset_names()) {
    CAPTURE(name);
    for (const FieldSpec& f : {Q, FieldSpec::prime(2), FieldSpec::prime(3)}) {
      CoalgebraReport rep = validate(coalgebra_preset(name, f));
      CHECK(rep.all_pass);
    }
  }
  CHECK(validate(coalgebra_preset("discrete(4)", Q)).all_pass);
  CHECK(validate(coalgebra_preset("wedge_of_circles(3)", Q)).all_pass);
  CHECK(validate(coalgebra_preset("sphere(3)", Q)).all_pass);
}

TEST_CASE("preset name spellings") {
  CHECK(coalgebra_preset("discrete2", Q).dim() == 2);
  CHECK(coalgebra_preset("sphere2", Q).degrees[1] == 2);
  CHECK_THROWS_AS(coalgebra_preset("torus", Q), Error);
  CHECK_THROWS_AS(coalgebra_preset("discrete(0)", Q), Error);
}

TEST_CASE("one-sided coproduct on a group-like is caught by the counit axiom") {
  CoalgebraSpec c = coalgebra_preset("discrete(2)", Q);
  int x = c.index_of("x");
  REQUIRE(x >= 0);
  c.coproduct[x] = {{Scalar::one(Q), x, c.unit_index}};  // Delta(x) = x (x) e
  CoalgebraReport rep = validate(c);
  CHECK_FALSE(rep.all_pass);
  CHECK_FALSE(axiom_passed(rep, "counit"));
}

TEST_CASE("degree violations are caught") {
  CoalgebraSpec c = coalgebra_preset("circle", Q);
  c.coproduct[1].push_back({Scalar::one(Q), 1, 1});  // v(x)v sits in degree 2
  CoalgebraReport rep = validate(c);
  CHECK_FALSE(axiom_passed(rep, "grading"));
  CHECK(axiom_passed(rep, "counit"));  // counit cannot see the new term
}

TEST_CASE("reduced split of the two-point coalgebra") {
  CoalgebraSpec c = coalgebra_preset("discrete(2)", Q);
  ReducedSplit rs = reduced_split(c);
  REQUIRE(rs.split.dim() == 1);
  CHECK(rs.split.names[0] == "xb");
  CHECK(rs.split.degrees[0] == 0);
  // u = x - e
  CHECK(rs.basis[0][0] == -Scalar::one(Q));
  CHECK(rs.basis[0][1] == Scalar::one(Q));
  // delta_bar(u) = u (x) u
  REQUIRE(rs.split.delta_bar[0].size() == 1);
  CHECK(rs.split.delta_bar[0][0].coeff.is_one());
  CHECK(rs.split.delta_bar[0][0].left == 0);
  CHECK(rs.split.delta_bar[0][0].right == 0);
}

TEST_CASE("primitives reduce with empty delta_bar") {
  for (const char* name : {"circle", "sphere(2)", "wedge_of_circles(2)"}) {
    ReducedSplit rs = reduced_split(coalgebra_preset(name, Q));
    for (const auto& terms : rs.split.delta_bar) CHECK(terms.empty());
  }
  CHECK(reduced_split(coalgebra_preset("point", Q)).split.dim() == 0);
}

TEST_CASE("splitting reassembles to the original coproduct") {
  for (const auto& name : coalgebra_preset_names()) {
    CAPTURE(name);
    CoalgebraSpec c = coalgebra_preset(name, FieldSpec::prime(3));
    ReducedSplit rs = reduced_split(c);
    for (int i = 0; i < rs.split.dim(); ++i) {
      auto got = reassemble_coproduct(c, rs, i);
      // direct: Delta(u_i) from the structure constants
      std::vector<std::vector<Scalar>> want(
          c.dim(), std::vector<Scalar>(c.dim(), Scalar::zero(c.field)));
      for (int a = 0; a < c.dim(); ++a)
        for (const auto& t : c.coproduct[a])
          want[t.left][t.right] += rs.basis[i][a] * t.coeff;
      CHECK(got == want);
    }
  }
}

TEST_CASE("text form lists every declaration") {
  std::string s = coalgebra_preset("circle", Q).str();
  CHECK(s.find("basis e deg 0") != std::string::npos);
  CHECK(s.find("basis v deg 1") != std::string::npos);
  CHECK(s.find("unit e") != std::string::npos);
  CHECK(s.find("counit e 1") != std::string::npos);
  CHECK(s.find("coproduct v = 1*v(x)e + 1*e(x)v") != std::string::npos);
}
