#include "bta/matrix.hpp"

#include <sstream>

#include "bta/errors.hpp"

namespace bta {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<ComplexRational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_) {
    throw DimensionMismatch("entry count does not match rows*cols");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ComplexRational(1);
  return m;
}

bool DenseMatrix::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

DenseMatrix DenseMatrix::operator-() const {
  DenseMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
  return m;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionMismatch("matrix sum shape mismatch");
  }
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionMismatch("matrix difference shape mismatch");
  }
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionMismatch("matrix product inner dimensions differ");
  }
  DenseMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ComplexRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

DenseMatrix operator*(const ComplexRational& s, const DenseMatrix& m) {
  DenseMatrix c(m.rows_, m.cols_);
  for (std::size_t i = 0; i < m.e_.size(); ++i) c.e_[i] = s * m.e_[i];
  return c;
}

DenseMatrix DenseMatrix::vstack(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.cols_) throw DimensionMismatch("vstack column counts differ");
  DenseMatrix m(a.rows_ + b.rows_, a.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) m(a.rows_ + r, c) = b(r, c);
  return m;
}

std::string DenseMatrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < cols_; ++c) {
      os << (c == 0 ? "[" : ", ") << (*this)(r, c).str();
    }
    os << "]" << (r + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

}  // namespace bta
