#include "bta/classify.hpp"

#include "bta/errors.hpp"

namespace bta {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::type_i:
      return "type_i";
    case Verdict::type_ii:
      return "type_ii";
    case Verdict::contained_in_type_i:
      return "contained_in_type_i";
    case Verdict::contained_in_type_ii:
      return "contained_in_type_ii";
    case Verdict::rejected:
      return "rejected";
  }
  return "unknown";
}

GeneratorPair recover_pair(const AlgebraBasis& alg) {
  const int n = static_cast<int>(alg.n());
  for (const BlockToeplitz& t : alg.basis_elements()) {
    for (int p = 1; p < n; ++p) {
      const SchurElement below = t.block(p);
      const SchurElement above = t.block(p - n);
      if (!below.is_invertible() && !above.is_invertible()) continue;
      GeneratorPair pair(above, below);
      // closure makes every basis element satisfy the pair's constraints;
      // re-check instead of assuming the caller closed the input
      for (const BlockToeplitz& u : alg.basis_elements()) {
        if (!fab_membership(pair, u)) {
          throw NotClosed(
              "recovered pair does not absorb the algebra; input was not closed");
        }
      }
      return pair;
    }
  }
  throw NoInvertibleOffDiagonal(
      "every off-diagonal block of the algebra has zero scalar part");
}

namespace {

std::size_t invertible_family_dim(std::size_t n, const SchurShape& shape) {
  return n * shape.element_dim();
}

std::size_t special_family_dim(std::size_t n, const SchurShape& shape) {
  return shape.element_dim() + (2 * n - 2) * shape.sigma() * shape.tau();
}

ClassificationResult classify_closed(const AlgebraBasis& alg) {
  ClassificationResult result;
  result.dimension = alg.dimension();
  result.ambient_dimension = alg.ambient_dimension();

  std::optional<GeneratorPair> pair;
  try {
    pair = recover_pair(alg);
  } catch (const NoInvertibleOffDiagonal&) {
    pair.reset();
  }

  if (pair) {
    const AlgebraBasis family = fab_basis(*pair, alg.n());
    const std::size_t family_dim = invertible_family_dim(alg.n(), alg.shape());
    if (family.dimension() != family_dim || !family.space().contains_all(alg.space())) {
      // cannot happen for a closed commutative input; do not classify junk
      result.verdict = Verdict::rejected;
      result.rejection_reason = "internal consistency check failed";
      return result;
    }
    result.pair = pair;
    if (alg.dimension() == family_dim) {
      result.verdict = Verdict::type_i;
      const MaximalityCertificate cert = maximality_certificate(alg);
      result.certificate = cert.certified() ? CertificateKind::certified
                                            : CertificateKind::inconclusive;
      result.notes.push_back(
          "equals the full F-algebra of the recovered pair; one generator is invertible");
    } else {
      result.verdict = Verdict::contained_in_type_i;
      result.codimension = family_dim - alg.dimension();
      result.notes.push_back("proper subalgebra of the F-algebra of the recovered pair");
    }
    return result;
  }

  // No invertible off-diagonal block anywhere: the algebra sits inside the
  // special algebra.
  const std::size_t family_dim = special_family_dim(alg.n(), alg.shape());
  if (alg.dimension() == family_dim) {
    result.verdict = Verdict::type_ii;
    const MaximalityCertificate cert = maximality_certificate(alg);
    result.certificate = cert.certified() ? CertificateKind::certified
                                          : CertificateKind::inconclusive;
    result.notes.push_back("equals the special algebra: all off-diagonal blocks nilpotent");
  } else {
    result.verdict = Verdict::contained_in_type_ii;
    result.codimension = family_dim - alg.dimension();
    result.notes.push_back("proper subalgebra of the special algebra");
  }
  return result;
}

}  // namespace

ClassificationResult classify(const std::vector<BlockToeplitz>& generators) {
  ClassificationResult result;
  try {
    const AlgebraBasis closed = algebra_closure(generators);
    return classify_closed(closed);
  } catch (const NotCommutative& e) {
    result.verdict = Verdict::rejected;
    result.rejection_reason = std::string("not commutative: ") + e.what();
  } catch (const NotToeplitzClosed& e) {
    result.verdict = Verdict::rejected;
    result.rejection_reason = std::string("not Toeplitz-closed: ") + e.what();
  }
  if (!generators.empty()) {
    const AlgebraBasis span = AlgebraBasis::from_span(
        generators.front().n(), generators.front().shape(), generators);
    result.dimension = span.dimension();
    result.ambient_dimension = span.ambient_dimension();
  }
  return result;
}

ClassificationResult classify(const AlgebraBasis& algebra) {
  return classify(algebra.basis_elements());
}

}  // namespace bta
