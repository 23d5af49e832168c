#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bta/algebras.hpp"

namespace bta {

enum class Verdict {
  type_i,                // F_{A,B} with an invertible generator, maximal
  type_ii,               // the special algebra, maximal
  contained_in_type_i,   // proper subalgebra of some F_{A,B}
  contained_in_type_ii,  // proper subalgebra of the special algebra
  rejected,              // input is not a commutative Toeplitz-closed algebra
};

std::string verdict_name(Verdict v);

enum class CertificateKind { certified, inconclusive };

struct ClassificationResult {
  Verdict verdict;
  std::optional<GeneratorPair> pair;  // type (i) families and containments
  std::size_t dimension = 0;
  std::size_t ambient_dimension = 0;
  std::optional<std::size_t> codimension;  // for proper containments
  CertificateKind certificate = CertificateKind::inconclusive;
  std::vector<std::string> notes;
  std::optional<std::string> rejection_reason;
};

/// Extracts a nondegenerate pair (A, B) = (T_{p-n}, T_p) from a closed
/// commutative algebra containing an element with an invertible off-diagonal
/// block: the product criterion applied at the row p where the invertible
/// block was found turns closure into the F_{A,B} constraints, so the whole
/// algebra lands inside fab_basis((A, B), n). The scan is deterministic:
/// basis order, then increasing p. Throws NoInvertibleOffDiagonal when every
/// off-diagonal scalar part vanishes on the algebra.
GeneratorPair recover_pair(const AlgebraBasis& alg);

/// The classification pipeline: close the input, try to recover a pair, and
/// compare dimensions against the two maximal families. Closure failures are
/// reported as Rejected rather than thrown.
ClassificationResult classify(const std::vector<BlockToeplitz>& generators);

/// Classifies a subspace that is already known to be spanned; the span is
/// re-closed, so any generating set of the same algebra yields the same
/// verdict.
ClassificationResult classify(const AlgebraBasis& algebra);

}  // namespace bta
