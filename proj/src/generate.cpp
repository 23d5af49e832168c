#include "bta/generate.hpp"

#include "bta/errors.hpp"

namespace bta {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t mix = seed;
  (void)splitmix64(mix);
  mix ^= 0x6a09e667f3bcc909ULL + index * 0x3c6ef372fe94f82bULL;
  return Rng(splitmix64(mix));
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

std::uint64_t Rng::below(std::uint64_t bound) { return next_u64() % bound; }

long Rng::range(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

Rational Rng::small_rational() {
  return make_rational(range(-2, 2), range(1, 2));
}

ComplexRational Rng::small_complex() {
  // keep most scalars real so counterexamples stay readable
  Rational im = chance(1, 4) ? small_rational() : Rational(0);
  return {small_rational(), std::move(im)};
}

ComplexRational Rng::small_complex_nonzero() {
  for (;;) {
    ComplexRational x = small_complex();
    if (!x.is_zero()) return x;
  }
}

SchurElement random_schur_element(Rng& rng, const SchurShape& shape) {
  ComplexRational lambda = rng.chance(1, 4) ? ComplexRational(0) : rng.small_complex();
  DenseMatrix corner(shape.sigma(), shape.tau());
  for (std::size_t r = 0; r < shape.sigma(); ++r) {
    for (std::size_t c = 0; c < shape.tau(); ++c) corner(r, c) = rng.small_complex();
  }
  return {shape, std::move(lambda), std::move(corner)};
}

SchurElement random_radical(Rng& rng, const SchurShape& shape) {
  DenseMatrix corner(shape.sigma(), shape.tau());
  for (std::size_t r = 0; r < shape.sigma(); ++r) {
    for (std::size_t c = 0; c < shape.tau(); ++c) corner(r, c) = rng.small_complex();
  }
  return {shape, ComplexRational(0), std::move(corner)};
}

SchurElement random_radical_nonzero(Rng& rng, const SchurShape& shape) {
  for (;;) {
    SchurElement e = random_radical(rng, shape);
    if (!e.is_zero()) return e;
  }
}

SchurElement random_invertible(Rng& rng, const SchurShape& shape) {
  SchurElement e = random_schur_element(rng, shape);
  if (e.is_invertible()) return e;
  return SchurElement(shape, rng.small_complex_nonzero(), e.corner());
}

GeneratorPair random_independent_radical_pair(Rng& rng, const SchurShape& shape) {
  if (shape.sigma() * shape.tau() < 2) {
    throw DimensionMismatch(
        "independent radical pairs need sigma*tau >= 2 (the radical is a line otherwise)");
  }
  for (;;) {
    SchurElement a = random_radical_nonzero(rng, shape);
    SchurElement b = random_radical_nonzero(rng, shape);
    if (schur_linearly_independent(a, b)) return {std::move(a), std::move(b)};
  }
}

GeneratorPair random_nondegenerate_pair(Rng& rng, const SchurShape& shape) {
  switch (rng.below(4)) {
    case 0:
      return {random_invertible(rng, shape), random_schur_element(rng, shape)};
    case 1:
      return {random_schur_element(rng, shape), random_invertible(rng, shape)};
    case 2:
      return {random_invertible(rng, shape), random_invertible(rng, shape)};
    default:
      return {random_invertible(rng, shape), SchurElement::zero(shape)};
  }
}

BlockToeplitz random_block_toeplitz(Rng& rng, std::size_t n, const SchurShape& shape) {
  std::map<int, SchurElement> blocks;
  for (int j = 1 - static_cast<int>(n); j <= static_cast<int>(n) - 1; ++j) {
    blocks.emplace(j, random_schur_element(rng, shape));
  }
  return {n, shape, std::move(blocks)};
}

BlockToeplitz random_element_of(Rng& rng, const AlgebraBasis& alg) {
  BlockToeplitz sum = BlockToeplitz::zero(alg.n(), alg.shape());
  for (const BlockToeplitz& e : alg.basis_elements()) {
    ComplexRational coeff(rng.small_rational());
    if (!coeff.is_zero()) sum += coeff * e;
  }
  return sum;
}

std::pair<BlockToeplitz, BlockToeplitz> random_condition_satisfying_pair(
    Rng& rng, std::size_t n, const SchurShape& shape) {
  switch (rng.below(4)) {
    case 0: {
      // two elements of a random F-algebra with an invertible generator
      const AlgebraBasis family = fab_basis(random_nondegenerate_pair(rng, shape), n);
      return {random_element_of(rng, family), random_element_of(rng, family)};
    }
    case 1: {
      // off-diagonal blocks all radical: every cross product vanishes
      const AlgebraBasis family = special_basis(n, shape);
      return {random_element_of(rng, family), random_element_of(rng, family)};
    }
    case 2: {
      // single-diagonal left factor, block-diagonal right factor
      const int j = static_cast<int>(rng.below(2 * n - 1)) - (static_cast<int>(n) - 1);
      return {BlockToeplitz::single_diagonal(n, j, random_schur_element(rng, shape)),
              BlockToeplitz::single_diagonal(n, 0, random_schur_element(rng, shape))};
    }
    default: {
      const AlgebraBasis family = fab_basis(
          {random_invertible(rng, shape), random_invertible(rng, shape)}, n);
      return {random_element_of(rng, family), random_element_of(rng, family)};
    }
  }
}

std::pair<BlockToeplitz, BlockToeplitz> random_condition_violating_pair(
    Rng& rng, std::size_t n, const SchurShape& shape) {
  for (;;) {
    auto [t, u] = random_condition_satisfying_pair(rng, n, shape);
    // perturb one diagonal of the left factor and keep genuine violations
    const int j = static_cast<int>(rng.below(2 * n - 1)) - (static_cast<int>(n) - 1);
    BlockToeplitz perturbed =
        t + BlockToeplitz::single_diagonal(n, j, random_invertible(rng, shape));
    if (!product_condition(perturbed, u)) return {std::move(perturbed), u};
  }
}

}  // namespace bta
