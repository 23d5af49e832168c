#pragma once

#include <cstddef>
#include <vector>

#include "bta/rational.hpp"

namespace bta {

/// Dense matrix over the exact complex rationals, row-major.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<ComplexRational> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix zero(std::size_t rows, std::size_t cols) {
    return DenseMatrix(rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const ComplexRational& operator()(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }
  ComplexRational& operator()(std::size_t r, std::size_t c) {
    return e_[r * cols_ + c];
  }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  DenseMatrix operator-() const;
  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const ComplexRational& s, const DenseMatrix& m);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) {
    return !(a == b);
  }

  /// Row-major flattening, length rows*cols.
  const std::vector<ComplexRational>& entries() const { return e_; }

  /// Stacks a on top of b (same column count).
  static DenseMatrix vstack(const DenseMatrix& a, const DenseMatrix& b);

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<ComplexRational> e_;
};

inline DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b) {
  return a * b - b * a;
}

}  // namespace bta
