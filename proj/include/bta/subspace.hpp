#pragma once

#include <cstddef>
#include <vector>

#include "bta/matrix.hpp"
#include "bta/rational.hpp"

namespace bta {

using Vec = std::vector<ComplexRational>;

/// Linear subspace of C^ambient given by its unique reduced row-echelon
/// basis (pivots 1, pivot columns otherwise zero, rows ordered by pivot).
/// Two equal subspaces have identical representations, so equality is
/// entry-wise comparison.
class Subspace {
 public:
  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

  /// Canonical span of arbitrary vectors; throws on a length mismatch.
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }

  const std::vector<Vec>& basis() const { return rows_; }

  /// Exact membership test.
  bool contains(const Vec& v) const;

  bool contains_all(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  std::size_t ambient_;
  std::vector<Vec> rows_;  // RREF, no zero rows
};

/// In-place Gauss-Jordan reduction to RREF. Drops zero rows, returns pivot
/// column indices in row order.
std::vector<std::size_t> reduce_to_rref(std::vector<Vec>& rows);

std::size_t rank(const DenseMatrix& m);

/// Canonical basis of the right kernel {v : m v = 0}.
Subspace nullspace(const DenseMatrix& m);

}  // namespace bta
