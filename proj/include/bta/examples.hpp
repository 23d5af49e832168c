#pragma once

#include <vector>

#include "bta/block_toeplitz.hpp"
#include "bta/rational.hpp"

namespace bta {

/// Parameters for the bundled worked examples (all at n = 3, sigma = 2,
/// tau = 1). `mu` scales the coupling of example 2 and must be nonzero;
/// `lambda` and a..d fill the featured generic element of example 3.
struct ExampleParams {
  Rational mu = Rational(2);
  Rational lambda = Rational(1);
  Rational a = Rational(1);
  Rational b = Rational(0);
  Rational c = Rational(0);
  Rational d = Rational(1);
};

inline constexpr std::size_t kExampleOrder = 3;
SchurShape example_shape();

/// Example family 1, as its classical display shows it: the diagonal-repeat
/// algebra {diag(T0, T0, T0)}, dimension 3. A proper subalgebra of the
/// special algebra, not maximal.
std::vector<BlockToeplitz> example1_displayed_generators();

/// Example family 1, as the defining relations I*T_j = 0 cut it out: the
/// positive diagonals vanish and T_0, T_{-1}, T_{-2} stay free, dimension 9.
/// This is the maximal algebra of the pair (I, 0).
std::vector<BlockToeplitz> example1_defined_generators();

/// Example family 2: T_j = mu * T_{j-3}, the algebra of the pair
/// (I, mu I) with both members invertible. Throws when mu = 0.
std::vector<BlockToeplitz> example2_generators(const Rational& mu);

/// Example family 3: generators of the special algebra (off-diagonal blocks
/// nilpotent), led by the generic element with diagonal scalar lambda and
/// corner columns (a, b) and (c, d).
std::vector<BlockToeplitz> example3_generators(const ExampleParams& params = {});

}  // namespace bta
