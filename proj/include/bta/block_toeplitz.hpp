#pragma once

#include <cstddef>
#include <map>

#include "bta/schur.hpp"

namespace bta {

/// Multiplication work done by structured_product, counted in Schur-element
/// products. The condition check that guards the product is tallied
/// separately from the diagonal sums.
struct ProductStats {
  std::size_t product_multiplications = 0;
  std::size_t condition_multiplications = 0;
};

/// Block Toeplitz matrix over O_{sigma,tau}: block (p, q) of the dense
/// nd x nd form is T_{p-q}, so positive diagonal indices sit below the main
/// diagonal. Diagonals are stored sparsely; an absent index is a zero block.
class BlockToeplitz {
 public:
  BlockToeplitz(std::size_t n, SchurShape shape,
                std::map<int, SchurElement> blocks);

  static BlockToeplitz zero(std::size_t n, const SchurShape& shape);
  /// Block-diagonal repeat of the identity element (the unit of T_n (x) O).
  static BlockToeplitz identity(std::size_t n, const SchurShape& shape);
  /// Matrix with a single (possibly zero) diagonal.
  static BlockToeplitz single_diagonal(std::size_t n, int j, const SchurElement& block);

  std::size_t n() const { return n_; }
  const SchurShape& shape() const { return shape_; }
  int min_index() const { return 1 - static_cast<int>(n_); }
  int max_index() const { return static_cast<int>(n_) - 1; }

  /// Block on diagonal j; zero when unset. Throws on out-of-range j.
  SchurElement block(int j) const;
  bool has_block(int j) const { return blocks_.count(j) != 0; }
  const std::map<int, SchurElement>& stored_blocks() const { return blocks_; }

  bool is_zero() const { return blocks_.empty(); }

  BlockToeplitz operator-() const;
  BlockToeplitz& operator+=(const BlockToeplitz& o);
  BlockToeplitz& operator-=(const BlockToeplitz& o);
  friend BlockToeplitz operator+(BlockToeplitz a, const BlockToeplitz& b) {
    return a += b;
  }
  friend BlockToeplitz operator-(BlockToeplitz a, const BlockToeplitz& b) {
    return a -= b;
  }
  friend BlockToeplitz operator*(const ComplexRational& s, const BlockToeplitz& t);
  friend bool operator==(const BlockToeplitz& a, const BlockToeplitz& b) {
    return a.n_ == b.n_ && a.shape_ == b.shape_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const BlockToeplitz& a, const BlockToeplitz& b) {
    return !(a == b);
  }

  DenseMatrix to_dense() const;

  /// Inverts to_dense. Throws NotBlockToeplitz when some block diagonal is
  /// not constant, NotInSchurAlgebra when a block is off-pattern.
  static BlockToeplitz from_dense(const DenseMatrix& m, std::size_t n,
                                  const SchurShape& shape);

  /// Coordinates: diagonals ascending from 1-n to n-1, each contributing the
  /// sigma*tau + 1 Schur coordinates; total (2n-1)(sigma*tau+1).
  Vec coords() const;
  static BlockToeplitz from_coords(std::size_t n, const SchurShape& shape,
                                   const Vec& coords);
  static std::size_t coord_dim(std::size_t n, const SchurShape& shape) {
    return (2 * n - 1) * shape.element_dim();
  }

  std::string str() const;

 private:
  std::size_t n_;
  SchurShape shape_;
  std::map<int, SchurElement> blocks_;  // nonzero diagonals only

  void insert_nonzero(int j, const SchurElement& block);
};

/// Constant-diagonal test on an nd x nd matrix (no Schur-pattern check).
bool is_block_toeplitz(const DenseMatrix& m, std::size_t n, std::size_t d);

/// The product criterion: T U is block Toeplitz iff
/// T_p U_{q-n} = T_{p-n} U_q for all p, q in 1..n-1.
bool product_condition(const BlockToeplitz& t, const BlockToeplitz& u);

/// Block Toeplitz product, diagonal by diagonal:
///   (TU)_k = sum_{l=0}^{n-1} T_{k-l} U_l        (k >= 0)
///   (TU)_k = sum_{l=0}^{n-1} T_{-l} U_{l+k}     (k < 0)
/// Requires product_condition(t, u); throws ConditionViolated otherwise.
/// O(n^2) Schur products against the dense path's n^3 block products; zero
/// diagonals are skipped and never counted.
BlockToeplitz structured_product(const BlockToeplitz& t, const BlockToeplitz& u,
                                 ProductStats* stats = nullptr);

}  // namespace bta
