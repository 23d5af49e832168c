#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "bta/examples.hpp"

namespace bta {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitBadInput = 2;

/// Configuration of a verification or classification run. Identical configs
/// produce byte-identical reports.
struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t n = 3;
  std::size_t sigma = 2;
  std::size_t tau = 1;
  bool relaxed = false;
  std::string format = "text";  // "text" | "json"
};

/// Runs one of the named property suites over seeded random instances:
///   lemma-product       product criterion <=> dense product block Toeplitz
///   fab-closure         products of an F-algebra stay inside it and commute
///   special-algebra     F of independent radical pairs = the special algebra
///   maximality          commutant certificates for both maximal families
///   pair-equivalence    A B' = A' B <=> equal F-algebras
///   structured-product  diagonal-by-diagonal product vs the dense oracle
/// Reports pass/fail counts plus the first counterexample; exit 0 all pass,
/// 1 on any violation, 2 on bad input.
int cmd_verify(const std::string& target, const RunConfig& config,
               std::ostream& out, std::ostream& err);

/// Classifies the algebra in the input file and writes the result to
/// output_path (or the report stream). Exit 0 on any verdict including
/// rejection, 2 on parse or validation failure.
int cmd_classify(const std::string& input_path,
                 const std::optional<std::string>& output_path,
                 const RunConfig& config, std::ostream& out, std::ostream& err);

struct ExampleOptions {
  ExampleParams params;
  /// Example 1 ships two labeled fixtures; "displayed", "defined", or "both".
  std::string variant = "both";
  std::optional<std::string> output_path;
};

/// Emits the generators of a bundled worked example as an algebra fixture.
int cmd_example(int which, const ExampleOptions& options, std::ostream& out,
                std::ostream& err);

}  // namespace bta
