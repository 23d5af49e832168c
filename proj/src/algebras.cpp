#include "bta/algebras.hpp"

#include <utility>

#include "bta/errors.hpp"

namespace bta {

GeneratorPair::GeneratorPair(SchurElement a, SchurElement b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.shape() != b_.shape()) {
    throw DimensionMismatch("generator pair shapes differ");
  }
}

bool GeneratorPair::nondegenerate() const {
  return kernel_intersection_trivial(a_, b_);
}

AlgebraBasis::AlgebraBasis(std::size_t n, SchurShape shape, Subspace space)
    : n_(n), shape_(shape), space_(std::move(space)) {
  if (n_ < 2) throw DimensionMismatch("block order n must be at least 2");
  if (space_.ambient_dim() != BlockToeplitz::coord_dim(n_, shape_)) {
    throw DimensionMismatch("subspace ambient does not match T_n (x) O coordinates");
  }
}

AlgebraBasis AlgebraBasis::from_span(std::size_t n, const SchurShape& shape,
                                     const std::vector<BlockToeplitz>& elements) {
  std::vector<Vec> vectors;
  vectors.reserve(elements.size());
  for (const BlockToeplitz& t : elements) {
    if (t.n() != n || t.shape() != shape) {
      throw DimensionMismatch("algebra elements are incompatible");
    }
    vectors.push_back(t.coords());
  }
  return {n, shape, Subspace::span(vectors, BlockToeplitz::coord_dim(n, shape))};
}

std::vector<BlockToeplitz> AlgebraBasis::basis_elements() const {
  std::vector<BlockToeplitz> elems;
  elems.reserve(space_.dim());
  for (const Vec& row : space_.basis()) {
    elems.push_back(BlockToeplitz::from_coords(n_, shape_, row));
  }
  return elems;
}

bool AlgebraBasis::contains(const BlockToeplitz& t) const {
  if (t.n() != n_ || t.shape() != shape_) {
    throw DimensionMismatch("element is incompatible with the algebra");
  }
  return space_.contains(t.coords());
}

bool fab_membership(const GeneratorPair& pair, const BlockToeplitz& t) {
  if (pair.shape() != t.shape()) {
    throw DimensionMismatch("pair and matrix shapes differ");
  }
  const int n = static_cast<int>(t.n());
  for (int j = 1; j < n; ++j) {
    if (pair.a() * t.block(j) != pair.b() * t.block(j - n)) return false;
  }
  return true;
}

namespace {

/// Coordinate basis elements of T_n (x) O in coordinate order.
std::vector<BlockToeplitz> coordinate_elements(std::size_t n,
                                               const SchurShape& shape) {
  const std::size_t ambient = BlockToeplitz::coord_dim(n, shape);
  std::vector<BlockToeplitz> elems;
  elems.reserve(ambient);
  for (std::size_t c = 0; c < ambient; ++c) {
    Vec unit(ambient);
    unit[c] = ComplexRational(1);
    elems.push_back(BlockToeplitz::from_coords(n, shape, unit));
  }
  return elems;
}

}  // namespace

AlgebraBasis fab_basis(const GeneratorPair& pair, std::size_t n) {
  if (n < 2) throw DimensionMismatch("block order n must be at least 2");
  const SchurShape& shape = pair.shape();
  const std::size_t k = shape.element_dim();
  const std::size_t ambient = BlockToeplitz::coord_dim(n, shape);
  const int nn = static_cast<int>(n);

  // Constraint matrix: for each j = 1..n-1 the O-valued equation
  // A T_j - B T_{j-n} = 0, evaluated columnwise on coordinate elements.
  DenseMatrix constraints((n - 1) * k, ambient);
  for (std::size_t c = 0; c < ambient; ++c) {
    const int diag = 1 - nn + static_cast<int>(c / k);
    const std::size_t m = c % k;
    Vec unit(k);
    unit[m] = ComplexRational(1);
    const SchurElement e = SchurElement::from_coords(shape, unit);
    for (int j = 1; j < nn; ++j) {
      Vec contribution;
      if (diag == j) {
        contribution = (pair.a() * e).coords();
      } else if (diag == j - nn) {
        contribution = (-(pair.b() * e)).coords();
      } else {
        continue;
      }
      const std::size_t row0 = static_cast<std::size_t>(j - 1) * k;
      for (std::size_t r = 0; r < k; ++r) constraints(row0 + r, c) = contribution[r];
    }
  }
  return {n, shape, nullspace(constraints)};
}

bool special_membership(const BlockToeplitz& t) {
  for (const auto& [j, block] : t.stored_blocks()) {
    if (j != 0 && !block.is_radical()) return false;
  }
  return true;
}

AlgebraBasis special_basis(std::size_t n, const SchurShape& shape) {
  if (n < 2) throw DimensionMismatch("block order n must be at least 2");
  const std::size_t k = shape.element_dim();
  const std::size_t ambient = BlockToeplitz::coord_dim(n, shape);
  const int nn = static_cast<int>(n);
  std::vector<Vec> vectors;
  for (int j = 1 - nn; j <= nn - 1; ++j) {
    const std::size_t offset = static_cast<std::size_t>(j - (1 - nn)) * k;
    // full block on the main diagonal, radical part only elsewhere
    for (std::size_t m = (j == 0 ? 0 : 1); m < k; ++m) {
      Vec unit(ambient);
      unit[offset + m] = ComplexRational(1);
      vectors.push_back(std::move(unit));
    }
  }
  return {n, shape, Subspace::span(vectors, ambient)};
}

AlgebraBasis algebra_closure(const std::vector<BlockToeplitz>& generators) {
  if (generators.empty()) {
    throw DimensionMismatch("closure of an empty generating set");
  }
  const std::size_t n = generators.front().n();
  const SchurShape shape = generators.front().shape();

  AlgebraBasis current = AlgebraBasis::from_span(n, shape, generators);
  while (true) {
    const std::vector<BlockToeplitz> elems = current.basis_elements();
    std::vector<DenseMatrix> dense;
    dense.reserve(elems.size());
    for (const BlockToeplitz& e : elems) dense.push_back(e.to_dense());

    std::vector<Vec> extension = current.space().basis();
    bool grew = false;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = i; j < elems.size(); ++j) {
        if (dense[i] * dense[j] != dense[j] * dense[i]) {
          throw NotCommutative("generated elements do not commute");
        }
        if (!product_condition(elems[i], elems[j])) {
          throw NotToeplitzClosed("a product of generated elements is not block Toeplitz");
        }
        BlockToeplitz prod = structured_product(elems[i], elems[j]);
        if (!current.contains(prod)) {
          extension.push_back(prod.coords());
          grew = true;
        }
      }
    }
    if (!grew) return current;
    current = AlgebraBasis(n, shape,
                           Subspace::span(extension, current.ambient_dimension()));
  }
}

AlgebraBasis commutant_in_bt(const AlgebraBasis& alg) {
  const std::size_t n = alg.n();
  const SchurShape& shape = alg.shape();
  const std::size_t ambient = alg.ambient_dimension();
  const std::size_t nd = n * shape.d();

  const std::vector<BlockToeplitz> coord_elems = coordinate_elements(n, shape);
  std::vector<DenseMatrix> coord_dense;
  coord_dense.reserve(ambient);
  for (const BlockToeplitz& e : coord_elems) coord_dense.push_back(e.to_dense());

  const std::vector<BlockToeplitz> basis = alg.basis_elements();
  DenseMatrix system(basis.size() * nd * nd, ambient);
  std::size_t row0 = 0;
  for (const BlockToeplitz& t : basis) {
    const DenseMatrix dt = t.to_dense();
    for (std::size_t c = 0; c < ambient; ++c) {
      const DenseMatrix comm = commutator(coord_dense[c], dt);
      const auto& flat = comm.entries();
      for (std::size_t r = 0; r < flat.size(); ++r) system(row0 + r, c) = flat[r];
    }
    row0 += nd * nd;
  }
  return {n, shape, nullspace(system)};
}

namespace {

void require_closed_commutative(const AlgebraBasis& alg) {
  const std::vector<BlockToeplitz> elems = alg.basis_elements();
  std::vector<DenseMatrix> dense;
  dense.reserve(elems.size());
  for (const BlockToeplitz& e : elems) dense.push_back(e.to_dense());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (dense[i] * dense[j] != dense[j] * dense[i]) {
        throw NotCommutative("algebra basis elements do not commute");
      }
    }
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size(); ++j) {
      if (!product_condition(elems[i], elems[j])) {
        throw NotToeplitzClosed("a basis product is not block Toeplitz");
      }
      if (!alg.contains(structured_product(elems[i], elems[j]))) {
        throw NotClosed("algebra is not closed under multiplication");
      }
    }
  }
}

}  // namespace

MaximalityCertificate maximality_certificate(const AlgebraBasis& alg) {
  require_closed_commutative(alg);
  const AlgebraBasis comm = commutant_in_bt(alg);
  if (comm == alg) {
    return {MaximalityCertificate::Kind::certified, std::nullopt};
  }
  // The commutant contains the (commutative) algebra, so a dimension gap
  // yields a basis witness outside it. A witness with nilpotent off-diagonal
  // blocks is preferred: adjoining it to a subalgebra of the special algebra
  // keeps commutativity.
  std::optional<BlockToeplitz> witness;
  for (const BlockToeplitz& candidate : comm.basis_elements()) {
    if (alg.contains(candidate)) continue;
    if (special_membership(candidate)) {
      return {MaximalityCertificate::Kind::inconclusive, candidate};
    }
    if (!witness) witness = candidate;
  }
  return {MaximalityCertificate::Kind::inconclusive, witness};
}

bool pairs_equivalent(const GeneratorPair& p, const GeneratorPair& q) {
  if (p.shape() != q.shape()) {
    throw DimensionMismatch("pair shapes differ");
  }
  if (!p.nondegenerate() || !q.nondegenerate()) {
    throw DegeneratePair("pair equivalence requires the kernel condition");
  }
  return p.a() * q.b() == q.a() * p.b();
}

}  // namespace bta
