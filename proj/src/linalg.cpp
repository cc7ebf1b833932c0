#include "cacti/linalg.hpp"

#include <algorithm>

namespace cacti {

void Matrix::add_row(Row r) {
  if (r.size() != cols) throw Error("row length mismatch");
  a.push_back(std::move(r));
}

std::size_t rref(Matrix& m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m.a[sel][col].is_zero()) ++sel;
    if (sel == m.rows()) continue;
    std::swap(m.a[pivot_row], m.a[sel]);
    Scalar inv = m.a[pivot_row][col].inverse();
    for (auto& v : m.a[pivot_row]) v *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m.a[r][col].is_zero()) continue;
      Scalar c = m.a[r][col];
      for (std::size_t j = col; j < m.cols; ++j) m.a[r][j] -= c * m.a[pivot_row][j];
    }
    if (pivots) pivots->push_back(col);
    ++pivot_row;
  }
  m.a.resize(pivot_row);
  return pivot_row;
}

std::size_t rank(Matrix m) { return rref(m); }

std::vector<Row> nullspace(const Matrix& m) {
  Matrix red = m;
  std::vector<std::size_t> pivots;
  rref(red, &pivots);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Row> basis;
  for (std::size_t col = 0; col < m.cols; ++col) {
    if (is_pivot[col]) continue;
    Row v(m.cols, Scalar::zero(m.field));
    v[col] = Scalar::one(m.field);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -red.a[r][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_span(const Matrix& reduced, const std::vector<std::size_t>& pivots, Row v) {
  if (v.size() != reduced.cols) throw Error("vector length mismatch");
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Scalar c = v[pivots[r]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < reduced.cols; ++j) v[j] -= c * reduced.a[r][j];
  }
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace cacti
