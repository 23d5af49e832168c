#include "bta/subspace.hpp"

#include <algorithm>

#include "bta/errors.hpp"

namespace bta {

std::vector<std::size_t> reduce_to_rref(std::vector<Vec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);

    if (!rows[pivot_row][col].is_one()) {
      ComplexRational inv = rows[pivot_row][col].inverse();
      for (std::size_t c = col; c < ncols; ++c) rows[pivot_row][c] *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      ComplexRational factor = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        rows[r][c] -= factor * rows[pivot_row][c];
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return pivots;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  std::vector<Vec> rows;
  rows.reserve(vectors.size());
  for (const Vec& v : vectors) {
    if (v.size() != ambient_dim) {
      throw DimensionMismatch("span vector length does not match ambient dimension");
    }
    rows.push_back(v);
  }
  reduce_to_rref(rows);
  s.rows_ = std::move(rows);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) {
    throw DimensionMismatch("membership vector length does not match ambient dimension");
  }
  // Reduce v against the echelon rows; leading entries locate the pivots
  // (RREF guarantees the first nonzero entry of each row is a 1).
  Vec rem = v;
  for (const Vec& row : rows_) {
    std::size_t pivot = 0;
    while (pivot < ambient_ && row[pivot].is_zero()) ++pivot;
    if (pivot == ambient_) continue;
    if (rem[pivot].is_zero()) continue;
    ComplexRational factor = rem[pivot];
    for (std::size_t c = pivot; c < ambient_; ++c) rem[c] -= factor * row[c];
  }
  return std::all_of(rem.begin(), rem.end(),
                     [](const ComplexRational& x) { return x.is_zero(); });
}

bool Subspace::contains_all(const Subspace& other) const {
  if (ambient_ != other.ambient_) {
    throw DimensionMismatch("subspace ambient dimensions differ");
  }
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vec& v) { return contains(v); });
}

std::size_t rank(const DenseMatrix& m) {
  std::vector<Vec> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows[r].resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  }
  return reduce_to_rref(rows).size();
}

Subspace nullspace(const DenseMatrix& m) {
  std::vector<Vec> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows[r].resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  }
  std::vector<std::size_t> pivots = reduce_to_rref(rows);

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = ComplexRational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, m.cols());
}

}  // namespace bta
