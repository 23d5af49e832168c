#pragma once

#include <optional>
#include <vector>

#include "bta/block_toeplitz.hpp"
#include "bta/subspace.hpp"

namespace bta {

/// Ordered pair (A, B) of same-shape Schur elements generating the linear
/// constraints A T_j = B T_{j-n}, j = 1..n-1.
class GeneratorPair {
 public:
  GeneratorPair(SchurElement a, SchurElement b);

  const SchurElement& a() const { return a_; }
  const SchurElement& b() const { return b_; }
  const SchurShape& shape() const { return a_.shape(); }

  /// Nondegeneracy: Ker A and Ker B intersect trivially, equivalently at
  /// least one of A, B is invertible.
  bool nondegenerate() const;

 private:
  SchurElement a_, b_;
};

/// Linear subspace of T_n (x) O_{sigma,tau} in canonical form, with elements
/// recoverable as BlockToeplitz values. Equal algebras have equal
/// representations.
class AlgebraBasis {
 public:
  AlgebraBasis(std::size_t n, SchurShape shape, Subspace space);

  static AlgebraBasis from_span(std::size_t n, const SchurShape& shape,
                                const std::vector<BlockToeplitz>& elements);

  std::size_t n() const { return n_; }
  const SchurShape& shape() const { return shape_; }
  const Subspace& space() const { return space_; }

  std::size_t dimension() const { return space_.dim(); }
  std::size_t ambient_dimension() const {
    return BlockToeplitz::coord_dim(n_, shape_);
  }

  std::vector<BlockToeplitz> basis_elements() const;
  bool contains(const BlockToeplitz& t) const;

  friend bool operator==(const AlgebraBasis& a, const AlgebraBasis& b) {
    return a.n_ == b.n_ && a.shape_ == b.shape_ && a.space_ == b.space_;
  }
  friend bool operator!=(const AlgebraBasis& a, const AlgebraBasis& b) {
    return !(a == b);
  }

 private:
  std::size_t n_;
  SchurShape shape_;
  Subspace space_;
};

/// Membership in F_{A,B}: all n-1 identities A T_j = B T_{j-n} hold in O.
bool fab_membership(const GeneratorPair& pair, const BlockToeplitz& t);

/// Canonical basis of F_{A,B} = {T : A T_j = B T_{j-n}, j = 1..n-1} as the
/// solution space of the stacked linear constraints.
AlgebraBasis fab_basis(const GeneratorPair& pair, std::size_t n);

/// Membership in the special algebra B (x) O: every off-diagonal block has
/// zero scalar part.
bool special_membership(const BlockToeplitz& t);

/// Canonical basis of the special algebra; its dimension is
/// (sigma*tau + 1) + (2n - 2) sigma*tau.
AlgebraBasis special_basis(std::size_t n, const SchurShape& shape);

/// Smallest linear subspace containing the generators and closed under the
/// block Toeplitz product. Products of basis elements are adjoined until the
/// dimension stabilizes; commutation is checked on dense embeddings and
/// Toeplitz-closure through the product criterion. Throws NotCommutative or
/// NotToeplitzClosed.
AlgebraBasis algebra_closure(const std::vector<BlockToeplitz>& generators);

/// {U in T_n (x) O : dense(U) commutes with dense(T) for every basis element
/// T}, computed as the nullspace of the stacked commutation system.
AlgebraBasis commutant_in_bt(const AlgebraBasis& alg);

struct MaximalityCertificate {
  enum class Kind { certified, inconclusive };
  Kind kind;
  /// Commutant element outside the algebra, present when inconclusive.
  std::optional<BlockToeplitz> witness;

  bool certified() const { return kind == Kind::certified; }
};

/// Certified when the algebra equals its commutant inside T_n (x) O, which
/// is sufficient for maximal commutativity. A strictly larger commutant only
/// yields Inconclusive with a witness, never a "not maximal" claim. Requires
/// a closed commutative input (throws NotCommutative / NotToeplitzClosed /
/// NotClosed otherwise).
MaximalityCertificate maximality_certificate(const AlgebraBasis& alg);

/// The equivalence (A, B) ~ (A', B') iff A B' = A' B, defined for
/// nondegenerate pairs only; equivalent pairs cut out the same F-algebra.
/// Throws DegeneratePair when either pair fails the kernel condition.
bool pairs_equivalent(const GeneratorPair& p, const GeneratorPair& q);

}  // namespace bta
