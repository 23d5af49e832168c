#pragma once

#include <cstdint>
#include <utility>

#include "bta/algebras.hpp"

namespace bta {

/// Deterministic 64-bit generator (splitmix64). Fully specified arithmetic,
/// so streams are identical across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Generator for trial `index` of a run seeded with `seed`; trials drawn
  /// this way are order-independent.
  static Rng for_trial(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi], inclusive.
  long range(long lo, long hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

  /// Small exact scalar: numerator in [-2, 2], denominator in {1, 2}.
  Rational small_rational();
  ComplexRational small_complex();
  ComplexRational small_complex_nonzero();

 private:
  std::uint64_t state_;
};

/// Random element; the scalar part vanishes with probability at least 1/4 so
/// radical and degenerate branches are exercised.
SchurElement random_schur_element(Rng& rng, const SchurShape& shape);

SchurElement random_radical(Rng& rng, const SchurShape& shape);
SchurElement random_radical_nonzero(Rng& rng, const SchurShape& shape);
SchurElement random_invertible(Rng& rng, const SchurShape& shape);

/// Linearly independent radical pair; requires sigma*tau >= 2.
GeneratorPair random_independent_radical_pair(Rng& rng, const SchurShape& shape);

/// Pair with at least one invertible member (hence trivial kernel
/// intersection); mixes one-invertible and both-invertible cases, including
/// B = 0.
GeneratorPair random_nondegenerate_pair(Rng& rng, const SchurShape& shape);

/// Fully random matrix; every diagonal drawn independently.
BlockToeplitz random_block_toeplitz(Rng& rng, std::size_t n, const SchurShape& shape);

/// Random linear combination of the basis with small coefficients.
BlockToeplitz random_element_of(Rng& rng, const AlgebraBasis& alg);

/// Pair satisfying the product criterion, drawn from one of: a random
/// F-algebra with nondegenerate pair, the special algebra, or one-diagonal
/// cases.
std::pair<BlockToeplitz, BlockToeplitz> random_condition_satisfying_pair(
    Rng& rng, std::size_t n, const SchurShape& shape);

/// Pair genuinely violating the product criterion, built by perturbing one
/// diagonal of a satisfying pair and re-checking.
std::pair<BlockToeplitz, BlockToeplitz> random_condition_violating_pair(
    Rng& rng, std::size_t n, const SchurShape& shape);

}  // namespace bta
