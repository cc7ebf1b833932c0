#pragma once

#include <cstddef>
#include <vector>

#include "cacti/scalar.hpp"

namespace cacti {

using Row = std::vector<Scalar>;

struct Matrix {
  FieldSpec field;
  std::size_t cols = 0;
  std::vector<Row> a;

  Matrix(const FieldSpec& f, std::size_t c) : field(f), cols(c) {}
  std::size_t rows() const { return a.size(); }
  void add_row(Row r);
  Row zero_row() const { return Row(cols, Scalar::zero(field)); }
};

// Row-reduce in place to reduced echelon form. Pivots are chosen in the
// leftmost available column (smallest index). Returns the rank; pivot column
// indices, ascending, go to *pivots if given. Zero rows are dropped.
std::size_t rref(Matrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(Matrix m);

// Basis of { x : m x = 0 }, one row per free column, deterministic: the free
// column's own coordinate is 1.
std::vector<Row> nullspace(const Matrix& m);

// Coordinates of v in the span of the rows of a matrix already in rref, or
// empty if v is outside the span.
bool in_row_span(const Matrix& reduced, const std::vector<std::size_t>& pivots, Row v);

}  // namespace cacti
