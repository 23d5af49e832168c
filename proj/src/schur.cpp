#include "bta/schur.hpp"

#include <sstream>

#include "bta/errors.hpp"

namespace bta {

SchurShape::SchurShape(std::size_t sigma, std::size_t tau, Relaxed relaxed)
    : sigma_(sigma), tau_(tau), relaxed_(relaxed == Relaxed::yes) {
  if (sigma_ == 0 || tau_ == 0) {
    throw InvalidShape("sigma and tau must be positive");
  }
  const std::size_t diff = sigma_ > tau_ ? sigma_ - tau_ : tau_ - sigma_;
  if (diff > 1 && !relaxed_) {
    throw InvalidShape("|sigma - tau| <= 1 required (pass relaxed mode to override)");
  }
}

SchurElement::SchurElement(SchurShape shape, ComplexRational lambda, DenseMatrix corner)
    : shape_(shape), lambda_(std::move(lambda)), corner_(std::move(corner)) {
  if (corner_.rows() != shape_.sigma() || corner_.cols() != shape_.tau()) {
    throw DimensionMismatch("corner block must be sigma x tau");
  }
}

SchurElement SchurElement::zero(const SchurShape& shape) {
  return {shape, ComplexRational(0), DenseMatrix::zero(shape.sigma(), shape.tau())};
}

SchurElement SchurElement::identity(const SchurShape& shape) {
  return scalar(shape, ComplexRational(1));
}

SchurElement SchurElement::scalar(const SchurShape& shape, ComplexRational lambda) {
  return {shape, std::move(lambda), DenseMatrix::zero(shape.sigma(), shape.tau())};
}

SchurElement SchurElement::inverse() const {
  if (!is_invertible()) {
    throw NotInvertible("Schur element with zero scalar part has no inverse");
  }
  ComplexRational inv = lambda_.inverse();
  return {shape_, inv, ComplexRational(-(inv * inv)) * corner_};
}

SchurElement SchurElement::operator-() const {
  return {shape_, -lambda_, -corner_};
}

SchurElement& SchurElement::operator+=(const SchurElement& o) {
  if (shape_ != o.shape_) throw DimensionMismatch("Schur element shapes differ");
  lambda_ += o.lambda_;
  corner_ += o.corner_;
  return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& o) {
  if (shape_ != o.shape_) throw DimensionMismatch("Schur element shapes differ");
  lambda_ -= o.lambda_;
  corner_ -= o.corner_;
  return *this;
}

SchurElement operator*(const SchurElement& a, const SchurElement& b) {
  if (a.shape_ != b.shape_) throw DimensionMismatch("Schur element shapes differ");
  return {a.shape_, a.lambda_ * b.lambda_,
          a.lambda_ * b.corner_ + b.lambda_ * a.corner_};
}

SchurElement operator*(const ComplexRational& s, const SchurElement& a) {
  return {a.shape_, s * a.lambda_, s * a.corner_};
}

DenseMatrix SchurElement::embed() const {
  const std::size_t d = shape_.d();
  const std::size_t sigma = shape_.sigma();
  DenseMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = lambda_;
  for (std::size_t i = 0; i < sigma; ++i) {
    for (std::size_t j = 0; j < shape_.tau(); ++j) {
      m(i, sigma + j) = corner_(i, j);
    }
  }
  return m;
}

SchurElement SchurElement::extract(const DenseMatrix& m, const SchurShape& shape) {
  const std::size_t d = shape.d();
  const std::size_t sigma = shape.sigma();
  if (m.rows() != d || m.cols() != d) {
    throw DimensionMismatch("extraction source must be d x d");
  }
  const ComplexRational lambda = m(0, 0);
  DenseMatrix corner(sigma, shape.tau());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) {
        if (m(i, j) != lambda) {
          throw NotInSchurAlgebra("diagonal scalars are not all equal");
        }
      } else if (i < sigma && j >= sigma) {
        corner(i, j - sigma) = m(i, j);
      } else if (!m(i, j).is_zero()) {
        throw NotInSchurAlgebra("nonzero entry outside the Schur block pattern");
      }
    }
  }
  return {shape, lambda, std::move(corner)};
}

Vec SchurElement::coords() const {
  Vec v;
  v.reserve(shape_.element_dim());
  v.push_back(lambda_);
  for (const auto& x : corner_.entries()) v.push_back(x);
  return v;
}

SchurElement SchurElement::from_coords(const SchurShape& shape, const Vec& coords) {
  if (coords.size() != shape.element_dim()) {
    throw DimensionMismatch("Schur coordinate vector has wrong length");
  }
  DenseMatrix corner(shape.sigma(), shape.tau(),
                     Vec(coords.begin() + 1, coords.end()));
  return {shape, coords[0], std::move(corner)};
}

std::string SchurElement::str() const {
  std::ostringstream os;
  os << "(lambda=" << lambda_.str() << ", X=" << corner_.str() << ")";
  return os.str();
}

bool kernel_intersection_trivial(const SchurElement& a, const SchurElement& b) {
  if (a.shape() != b.shape()) throw DimensionMismatch("Schur element shapes differ");
  DenseMatrix stacked = DenseMatrix::vstack(a.embed(), b.embed());
  return nullspace(stacked).is_zero();
}

bool schur_linearly_independent(const SchurElement& a, const SchurElement& b) {
  if (a.shape() != b.shape()) throw DimensionMismatch("Schur element shapes differ");
  return Subspace::span({a.coords(), b.coords()}, a.shape().element_dim()).dim() == 2;
}

}  // namespace bta
