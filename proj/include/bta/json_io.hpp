#pragma once

#include <json.hpp>

#include "bta/algebras.hpp"
#include "bta/classify.hpp"

namespace bta {

using Json = nlohmann::json;

// Encodings:
//   ComplexRational  {"re": "p/q", "im": "p/q"}   reduced, q > 0, zero = "0/1"
//   DenseMatrix      {"rows": r, "cols": c, "entries": [[CR, ...], ...]}
//   SchurElement     {"sigma": s, "tau": t, "lambda": CR, "X": [[CR, ...], ...]}
//                    ("X" omitted means the zero block)
//   BlockToeplitz    {"n": n, "sigma": s, "tau": t, "blocks": {"j": SchurElement}}
//                    (missing diagonal keys are zero)
//   Algebra input    {"generators": [BT, ...]} or {"basis": [BT, ...], "closed": true}
// Parsers ignore unrecognized keys.

Json to_json(const ComplexRational& x);
ComplexRational complex_rational_from_json(const Json& j);

Json to_json(const DenseMatrix& m);
DenseMatrix dense_matrix_from_json(const Json& j);

Json to_json(const SchurElement& e);
SchurElement schur_element_from_json(const Json& j,
                                     SchurShape::Relaxed relaxed = SchurShape::Relaxed::no);

Json to_json(const BlockToeplitz& t);
BlockToeplitz block_toeplitz_from_json(const Json& j,
                                       SchurShape::Relaxed relaxed = SchurShape::Relaxed::no);

Json to_json(const GeneratorPair& pair);

/// Basis report: {"basis": [...], "dimension": k, "closed": true}.
Json to_json(const AlgebraBasis& alg);

Json to_json(const ClassificationResult& result);

struct AlgebraInput {
  std::vector<BlockToeplitz> generators;
  bool closed = false;
};

AlgebraInput algebra_input_from_json(const Json& j,
                                     SchurShape::Relaxed relaxed = SchurShape::Relaxed::no);

}  // namespace bta
