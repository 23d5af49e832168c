#pragma once

#include <cstddef>
#include <vector>

#include "bta/matrix.hpp"
#include "bta/subspace.hpp"

namespace bta {

/// Block shape of the Schur algebra O_{sigma,tau} inside M_d, d = sigma+tau.
/// The balanced-shape restriction |sigma - tau| <= 1 is enforced unless the
/// relaxed flag is set; results for relaxed shapes fall outside the verified
/// classification and are reported as such by the CLI.
class SchurShape {
 public:
  enum class Relaxed { no, yes };

  SchurShape(std::size_t sigma, std::size_t tau, Relaxed relaxed = Relaxed::no);

  std::size_t sigma() const { return sigma_; }
  std::size_t tau() const { return tau_; }
  std::size_t d() const { return sigma_ + tau_; }
  bool relaxed() const { return relaxed_; }

  /// Linear dimension of O_{sigma,tau}: the scalar plus the corner block.
  std::size_t element_dim() const { return sigma_ * tau_ + 1; }

  friend bool operator==(const SchurShape& a, const SchurShape& b) {
    return a.sigma_ == b.sigma_ && a.tau_ == b.tau_;
  }
  friend bool operator!=(const SchurShape& a, const SchurShape& b) {
    return !(a == b);
  }

 private:
  std::size_t sigma_, tau_;
  bool relaxed_;
};

/// Element of the Schur algebra O_{sigma,tau}: the matrix
/// [[lambda I_sigma, X], [0, lambda I_tau]], stored as (lambda, X).
/// The pair is the source of truth; the dense embedding is derived.
class SchurElement {
 public:
  SchurElement(SchurShape shape, ComplexRational lambda, DenseMatrix corner);

  static SchurElement zero(const SchurShape& shape);
  static SchurElement identity(const SchurShape& shape);
  static SchurElement scalar(const SchurShape& shape, ComplexRational lambda);

  const SchurShape& shape() const { return shape_; }
  const ComplexRational& lambda() const { return lambda_; }
  const DenseMatrix& corner() const { return corner_; }

  bool is_zero() const { return lambda_.is_zero() && corner_.is_zero(); }
  /// Radical membership: zero scalar part (then the square vanishes).
  bool is_radical() const { return lambda_.is_zero(); }
  /// Invertible exactly when the scalar part is nonzero.
  bool is_invertible() const { return !lambda_.is_zero(); }

  /// (lambda, X)^{-1} = (1/lambda, -X/lambda^2); throws NotInvertible at
  /// lambda = 0.
  SchurElement inverse() const;

  SchurElement operator-() const;
  SchurElement& operator+=(const SchurElement& o);
  SchurElement& operator-=(const SchurElement& o);

  friend SchurElement operator+(SchurElement a, const SchurElement& b) {
    return a += b;
  }
  friend SchurElement operator-(SchurElement a, const SchurElement& b) {
    return a -= b;
  }
  /// Product in O_{sigma,tau}: (ab)' = (lambda_a lambda_b,
  /// lambda_a X_b + lambda_b X_a). Commutative.
  friend SchurElement operator*(const SchurElement& a, const SchurElement& b);
  friend SchurElement operator*(const ComplexRational& s, const SchurElement& a);
  friend bool operator==(const SchurElement& a, const SchurElement& b) {
    return a.shape_ == b.shape_ && a.lambda_ == b.lambda_ && a.corner_ == b.corner_;
  }
  friend bool operator!=(const SchurElement& a, const SchurElement& b) {
    return !(a == b);
  }

  /// Dense d x d block form.
  DenseMatrix embed() const;

  /// Inverts embed; throws NotInSchurAlgebra when m is off-pattern.
  static SchurElement extract(const DenseMatrix& m, const SchurShape& shape);

  /// Coordinates (lambda, X row-major), length sigma*tau + 1.
  Vec coords() const;
  static SchurElement from_coords(const SchurShape& shape, const Vec& coords);

  std::string str() const;

 private:
  SchurShape shape_;
  ComplexRational lambda_;
  DenseMatrix corner_;  // sigma x tau
};

/// True iff Ker(embed A) and Ker(embed B) meet only in 0, computed as the
/// kernel of the stacked embeddings. For Schur elements this coincides with
/// "A or B invertible"; the two routes are cross-checked in the tests.
bool kernel_intersection_trivial(const SchurElement& a, const SchurElement& b);

/// Linear independence over C, decided on the (sigma*tau + 1)-coordinate
/// vectors.
bool schur_linearly_independent(const SchurElement& a, const SchurElement& b);

}  // namespace bta
