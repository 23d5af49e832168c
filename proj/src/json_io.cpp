#include "bta/json_io.hpp"

#include <charconv>
#include <string>

#include "bta/errors.hpp"

namespace bta {

namespace {

const Json& require_key(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(what) + " is missing required key \"" + key + "\"");
  }
  return j.at(key);
}

std::size_t positive_from_json(const Json& j, const char* what) {
  const bool ok = j.is_number_unsigned()
                      ? j.get<std::uint64_t>() > 0
                      : j.is_number_integer() && j.get<std::int64_t>() > 0;
  if (!ok) throw ParseError(std::string(what) + " must be a positive integer");
  return j.get<std::size_t>();
}

std::string string_from_json(const Json& j, const char* what) {
  if (!j.is_string()) {
    throw ParseError(std::string(what) + " must be a string");
  }
  return j.get<std::string>();
}

int diagonal_key(const std::string& key) {
  int value = 0;
  const char* first = key.data();
  const char* last = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || key != std::to_string(value)) {
    throw ParseError("bad diagonal key \"" + key + "\"");
  }
  return value;
}

}  // namespace

Json to_json(const ComplexRational& x) {
  return Json{{"re", rational_to_string(x.re())}, {"im", rational_to_string(x.im())}};
}

ComplexRational complex_rational_from_json(const Json& j) {
  return {parse_rational(string_from_json(require_key(j, "re", "complex rational"),
                                          "complex rational \"re\"")),
          parse_rational(string_from_json(require_key(j, "im", "complex rational"),
                                          "complex rational \"im\""))};
}

Json to_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

DenseMatrix dense_matrix_from_json(const Json& j) {
  const std::size_t rows = positive_from_json(require_key(j, "rows", "matrix"), "rows");
  const std::size_t cols = positive_from_json(require_key(j, "cols", "matrix"), "cols");
  const Json& entries = require_key(j, "entries", "matrix");
  if (!entries.is_array() || entries.size() != rows) {
    throw ParseError("matrix entries must be an array of `rows` rows");
  }
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = entries.at(r);
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("matrix row " + std::to_string(r) + " must have `cols` entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = complex_rational_from_json(row.at(c));
    }
  }
  return m;
}

Json to_json(const SchurElement& e) {
  Json j{{"sigma", e.shape().sigma()},
         {"tau", e.shape().tau()},
         {"lambda", to_json(e.lambda())}};
  if (!e.corner().is_zero()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < e.shape().sigma(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < e.shape().tau(); ++c) {
        row.push_back(to_json(e.corner()(r, c)));
      }
      rows.push_back(std::move(row));
    }
    j["X"] = std::move(rows);
  }
  return j;
}

SchurElement schur_element_from_json(const Json& j, SchurShape::Relaxed relaxed) {
  const std::size_t sigma =
      positive_from_json(require_key(j, "sigma", "Schur element"), "sigma");
  const std::size_t tau =
      positive_from_json(require_key(j, "tau", "Schur element"), "tau");
  const SchurShape shape(sigma, tau, relaxed);
  const ComplexRational lambda =
      complex_rational_from_json(require_key(j, "lambda", "Schur element"));
  DenseMatrix corner = DenseMatrix::zero(sigma, tau);
  if (j.contains("X")) {
    const Json& rows = j.at("X");
    if (!rows.is_array() || rows.size() != sigma) {
      throw ParseError("Schur \"X\" must have sigma rows");
    }
    for (std::size_t r = 0; r < sigma; ++r) {
      const Json& row = rows.at(r);
      if (!row.is_array() || row.size() != tau) {
        throw ParseError("Schur \"X\" row " + std::to_string(r) + " must have tau entries");
      }
      for (std::size_t c = 0; c < tau; ++c) {
        corner(r, c) = complex_rational_from_json(row.at(c));
      }
    }
  }
  return {shape, lambda, std::move(corner)};
}

Json to_json(const BlockToeplitz& t) {
  Json blocks = Json::object();
  for (const auto& [j, block] : t.stored_blocks()) {
    blocks[std::to_string(j)] = to_json(block);
  }
  return Json{{"n", t.n()},
              {"sigma", t.shape().sigma()},
              {"tau", t.shape().tau()},
              {"blocks", std::move(blocks)}};
}

BlockToeplitz block_toeplitz_from_json(const Json& j, SchurShape::Relaxed relaxed) {
  const std::size_t n = positive_from_json(require_key(j, "n", "block Toeplitz"), "n");
  const std::size_t sigma =
      positive_from_json(require_key(j, "sigma", "block Toeplitz"), "sigma");
  const std::size_t tau =
      positive_from_json(require_key(j, "tau", "block Toeplitz"), "tau");
  const SchurShape shape(sigma, tau, relaxed);
  std::map<int, SchurElement> blocks;
  if (j.contains("blocks")) {
    const Json& entries = j.at("blocks");
    if (!entries.is_object()) throw ParseError("\"blocks\" must be an object");
    for (const auto& [key, value] : entries.items()) {
      SchurElement block = schur_element_from_json(value, relaxed);
      if (block.shape() != shape) {
        throw ParseError("block on diagonal " + key + " has a different shape");
      }
      blocks.emplace(diagonal_key(key), std::move(block));
    }
  }
  return {n, shape, std::move(blocks)};
}

Json to_json(const GeneratorPair& pair) {
  return Json{{"A", to_json(pair.a())}, {"B", to_json(pair.b())}};
}

Json to_json(const AlgebraBasis& alg) {
  Json basis = Json::array();
  for (const BlockToeplitz& t : alg.basis_elements()) basis.push_back(to_json(t));
  return Json{{"basis", std::move(basis)},
              {"dimension", alg.dimension()},
              {"closed", true}};
}

Json to_json(const ClassificationResult& result) {
  Json j{{"verdict", verdict_name(result.verdict)},
         {"dimension", result.dimension},
         {"ambient_dimension", result.ambient_dimension},
         {"certificate", result.certificate == CertificateKind::certified
                             ? "certified"
                             : "inconclusive"},
         {"notes", result.notes}};
  if (result.pair) j["pair"] = to_json(*result.pair);
  if (result.codimension) j["codimension"] = *result.codimension;
  if (result.rejection_reason) j["rejection_reason"] = *result.rejection_reason;
  return j;
}

AlgebraInput algebra_input_from_json(const Json& j, SchurShape::Relaxed relaxed) {
  AlgebraInput input;
  const char* key = nullptr;
  if (j.is_object() && j.contains("generators")) {
    key = "generators";
  } else if (j.is_object() && j.contains("basis")) {
    key = "basis";
    input.closed = j.value("closed", false);
  } else {
    throw ParseError("algebra must contain \"generators\" or \"basis\"");
  }
  const Json& list = j.at(key);
  if (!list.is_array() || list.empty()) {
    throw ParseError(std::string("\"") + key + "\" must be a nonempty array");
  }
  for (const Json& item : list) {
    input.generators.push_back(block_toeplitz_from_json(item, relaxed));
  }
  return input;
}

}  // namespace bta
