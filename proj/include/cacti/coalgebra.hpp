#pragma once

#include <string>
#include <vector>

#include "cacti/linalg.hpp"
#include "cacti/scalar.hpp"

namespace cacti {

struct CoproductTerm {
  Scalar coeff;
  int left = 0;
  int right = 0;
};

// Finite-dimensional graded counital coalgebra with a distinguished group-like
// unit, given by structure constants on a chosen basis.
struct CoalgebraSpec {
  FieldSpec field;
  std::vector<std::string> names;
  std::vector<int> degrees;
  int unit_index = 0;
  std::vector<Scalar> counit;                      // per basis element
  std::vector<std::vector<CoproductTerm>> coproduct;

  int dim() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;     // -1 if absent
  std::string str() const;                         // text format, parse round-trips
};

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::string detail;  // first violating element when pass is false
};

struct CoalgebraReport {
  bool all_pass = true;
  std::vector<AxiomCheck> checks;
};

// Checks: counit on both sides, coassociativity, graded cocommutativity,
// group-like unit with counit 1, degree preservation of the coproduct.
CoalgebraReport validate(const CoalgebraSpec& c);

// C = k*unit + ker(counit) with the coproduct of a reduced element u written as
// u(x)unit + unit(x)u + delta_bar(u); the first two components are forced by
// the counit axiom.
struct SplitCoalgebra {
  FieldSpec field;
  std::vector<std::string> names;   // reduced basis
  std::vector<int> degrees;
  std::vector<std::vector<CoproductTerm>> delta_bar;  // indices into reduced basis

  int dim() const { return static_cast<int>(names.size()); }
};

struct ReducedSplit {
  std::vector<Row> basis;  // reduced basis vectors in the original coordinates
  SplitCoalgebra split;
};

ReducedSplit reduced_split(const CoalgebraSpec& c);

// Rebuild the full coproduct of the i-th reduced basis element in the original
// coordinates; used to check the splitting loses nothing.
std::vector<std::vector<Scalar>> reassemble_coproduct(const CoalgebraSpec& c,
                                                      const ReducedSplit& rs, int i);

// point, discrete(m), circle, sphere(d), wedge_of_circles(m). Accepts both
// "discrete(2)" and "discrete2" spellings.
CoalgebraSpec coalgebra_preset(const std::string& name, const FieldSpec& field);

const std::vector<std::string>& coalgebra_preset_names();

}  // namespace cacti
