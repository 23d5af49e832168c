#include "bta/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "bta/classify.hpp"
#include "bta/errors.hpp"
#include "bta/generate.hpp"
#include "bta/json_io.hpp"
#include "bta/version.hpp"

namespace bta {

namespace {

struct Outcome {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<Json> counterexample;
  std::vector<std::string> notes;
};

/// One seeded trial; collects the first failing check of the whole run as a
/// replayable counterexample.
struct Trial {
  Outcome& outcome;
  std::size_t index;
  bool ok = true;

  void require(bool condition, const std::string& check, Json fixtures) {
    if (condition) return;
    if (!outcome.counterexample) {
      fixtures["trial"] = index;
      fixtures["check"] = check;
      outcome.counterexample = std::move(fixtures);
    }
    ok = false;
  }

  void finish() { ok ? ++outcome.passed : ++outcome.failed; }
};

Json config_json(const RunConfig& c) {
  return Json{{"seed", c.seed},     {"trials", c.trials},   {"n", c.n},
              {"sigma", c.sigma},   {"tau", c.tau},         {"relaxed", c.relaxed},
              {"format", c.format}};
}

SchurShape config_shape(const RunConfig& c) {
  return {c.sigma, c.tau,
          c.relaxed ? SchurShape::Relaxed::yes : SchurShape::Relaxed::no};
}

std::size_t invertible_family_dim(std::size_t n, const SchurShape& shape) {
  return n * shape.element_dim();
}

std::size_t special_family_dim(std::size_t n, const SchurShape& shape) {
  return shape.element_dim() + (2 * n - 2) * shape.sigma() * shape.tau();
}

// ---------------------------------------------------------------------------
// verify targets

void check_lemma_pair(Trial& trial, const RunConfig& cfg, const SchurShape& shape,
                      const char* kind, const BlockToeplitz& t,
                      const BlockToeplitz& u) {
  const bool condition = product_condition(t, u);
  const DenseMatrix product = t.to_dense() * u.to_dense();
  const bool toeplitz = is_block_toeplitz(product, cfg.n, shape.d());
  Json fixtures{{"case", kind},      {"T", to_json(t)},
                {"U", to_json(u)},   {"condition_holds", condition},
                {"dense_product_block_toeplitz", toeplitz}};
  trial.require(condition == toeplitz, "criterion <=> dense product block Toeplitz",
                fixtures);
  if (condition != toeplitz) return;
  if (condition) {
    const BlockToeplitz via_dense = BlockToeplitz::from_dense(product, cfg.n, shape);
    trial.require(structured_product(t, u) == via_dense,
                  "structured product equals dense extraction", fixtures);
  } else {
    bool refused = false;
    try {
      BlockToeplitz::from_dense(product, cfg.n, shape);
    } catch (const NotBlockToeplitz&) {
      refused = true;
    }
    trial.require(refused, "from_dense refuses a non-Toeplitz product", fixtures);
  }
}

void run_lemma_product(const RunConfig& cfg, Outcome& outcome) {
  const SchurShape shape = config_shape(cfg);
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    Trial trial{outcome, i};

    const BlockToeplitz t_free = random_block_toeplitz(rng, cfg.n, shape);
    const BlockToeplitz u_free = random_block_toeplitz(rng, cfg.n, shape);
    check_lemma_pair(trial, cfg, shape, "free", t_free, u_free);

    const auto [t_good, u_good] = random_condition_satisfying_pair(rng, cfg.n, shape);
    check_lemma_pair(trial, cfg, shape, "condition-satisfying", t_good, u_good);

    const auto [t_bad, u_bad] = random_condition_violating_pair(rng, cfg.n, shape);
    check_lemma_pair(trial, cfg, shape, "condition-violating", t_bad, u_bad);

    trial.finish();
  }
}

void run_fab_closure(const RunConfig& cfg, Outcome& outcome) {
  const SchurShape shape = config_shape(cfg);
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    Trial trial{outcome, i};

    const GeneratorPair pair = random_nondegenerate_pair(rng, shape);
    const AlgebraBasis family = fab_basis(pair, cfg.n);
    Json fixtures{{"pair", to_json(pair)}, {"dimension", family.dimension()}};
    trial.require(family.dimension() == invertible_family_dim(cfg.n, shape),
                  "F-algebra of a nondegenerate pair has dimension n*(sigma*tau+1)",
                  fixtures);

    const BlockToeplitz t = random_element_of(rng, family);
    const BlockToeplitz u = random_element_of(rng, family);
    fixtures["T"] = to_json(t);
    fixtures["U"] = to_json(u);
    trial.require(fab_membership(pair, t) && fab_membership(pair, u),
                  "sampled elements satisfy the F-constraints", fixtures);
    trial.require(product_condition(t, u),
                  "elements of one F-algebra satisfy the product criterion", fixtures);
    if (trial.ok) {
      const BlockToeplitz prod = structured_product(t, u);
      trial.require(fab_membership(pair, prod), "the product stays in the F-algebra",
                    fixtures);
      trial.require(t.to_dense() * u.to_dense() == u.to_dense() * t.to_dense(),
                    "elements commute densely", fixtures);
    }
    trial.finish();
  }
}

void run_special_algebra(const RunConfig& cfg, Outcome& outcome) {
  const SchurShape shape = config_shape(cfg);
  const AlgebraBasis special = special_basis(cfg.n, shape);
  outcome.notes.push_back("special algebra dimension: " +
                          std::to_string(special.dimension()));
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    Trial trial{outcome, i};

    if (i == 0) {
      trial.require(special.dimension() == special_family_dim(cfg.n, shape),
                    "special algebra dimension formula",
                    Json{{"dimension", special.dimension()}});
    }

    const GeneratorPair pair = random_independent_radical_pair(rng, shape);
    Json fixtures{{"pair", to_json(pair)}};
    trial.require(!kernel_intersection_trivial(pair.a(), pair.b()),
                  "radical pairs share kernel vectors", fixtures);
    trial.require(fab_basis(pair, cfg.n) == special,
                  "F-algebra of an independent radical pair is the special algebra",
                  fixtures);

    const BlockToeplitz t = random_element_of(rng, special);
    const BlockToeplitz u = random_element_of(rng, special);
    fixtures["T"] = to_json(t);
    fixtures["U"] = to_json(u);
    trial.require(product_condition(t, u),
                  "products of special-algebra elements are block Toeplitz", fixtures);
    if (trial.ok) {
      const BlockToeplitz prod = structured_product(t, u);
      trial.require(special_membership(prod) && special.contains(prod),
                    "closure despite the failing kernel condition", fixtures);
    }
    trial.finish();
  }
}

void run_maximality(const RunConfig& cfg, Outcome& outcome) {
  const SchurShape shape = config_shape(cfg);
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    Trial trial{outcome, i};

    if (i == 0) {
      const AlgebraBasis special = special_basis(cfg.n, shape);
      trial.require(maximality_certificate(special).certified(),
                    "special algebra equals its commutant",
                    Json{{"algebra", "special"}});

      // negative control: diagonal repeats commute with everything
      std::vector<BlockToeplitz> diag;
      for (std::size_t m = 0; m < shape.element_dim(); ++m) {
        Vec unit(shape.element_dim());
        unit[m] = ComplexRational(1);
        diag.push_back(BlockToeplitz::single_diagonal(
            cfg.n, 0, SchurElement::from_coords(shape, unit)));
      }
      const AlgebraBasis repeats = AlgebraBasis::from_span(cfg.n, shape, diag);
      const MaximalityCertificate cert = maximality_certificate(repeats);
      bool witness_ok = !cert.certified() && cert.witness.has_value() &&
                        !repeats.contains(*cert.witness);
      if (witness_ok) {
        bool off_diagonal = false;
        for (const auto& [j, block] : cert.witness->stored_blocks()) {
          if (j != 0 && !block.is_zero()) off_diagonal = true;
        }
        witness_ok = off_diagonal;
      }
      trial.require(witness_ok,
                    "diagonal-repeat algebra is inconclusive with an off-diagonal witness",
                    Json{{"algebra", "diagonal-repeat"}});
    }

    const GeneratorPair pair = random_nondegenerate_pair(rng, shape);
    const AlgebraBasis family = fab_basis(pair, cfg.n);
    trial.require(maximality_certificate(family).certified(),
                  "F-algebra of a nondegenerate pair equals its commutant",
                  Json{{"pair", to_json(pair)}});
    trial.finish();
  }
}

void run_pair_equivalence(const RunConfig& cfg, Outcome& outcome) {
  const SchurShape shape = config_shape(cfg);
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    Trial trial{outcome, i};

    if (i == 0) {
      const SchurElement radical = random_radical_nonzero(rng, shape);
      const GeneratorPair degenerate(radical, ComplexRational(2) * radical);
      bool rejected = false;
      try {
        pairs_equivalent(degenerate, degenerate);
      } catch (const DegeneratePair&) {
        rejected = true;
      }
      trial.require(rejected, "degenerate pairs are rejected",
                    Json{{"pair", to_json(degenerate)}});
    }

    const GeneratorPair p = random_nondegenerate_pair(rng, shape);
    std::optional<GeneratorPair> q;
    if (i % 2 == 0) {
      // rescaling by an invertible element keeps the algebra
      const SchurElement c = random_invertible(rng, shape);
      q.emplace(c * p.a(), c * p.b());
    } else {
      q.emplace(random_nondegenerate_pair(rng, shape));
    }
    const bool cross = pairs_equivalent(p, *q);
    const bool same_family = fab_basis(p, cfg.n) == fab_basis(*q, cfg.n);
    Json fixtures{{"pair_p", to_json(p)},
                  {"pair_q", to_json(*q)},
                  {"cross_products_equal", cross},
                  {"families_equal", same_family}};
    trial.require(cross == same_family,
                  "A B' = A' B exactly when the two F-algebras coincide", fixtures);
    if (i % 2 == 0) {
      trial.require(cross, "rescaled pairs are equivalent", fixtures);
    }
    trial.finish();
  }
}

void run_structured_product(const RunConfig& cfg, Outcome& outcome) {
  const SchurShape shape = config_shape(cfg);
  const std::size_t quadratic_bound = cfg.n * (2 * cfg.n - 1);
  const std::size_t dense_block_work = cfg.n * cfg.n * cfg.n;
  std::size_t max_mults = 0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    Trial trial{outcome, i};

    const auto [t, u] = random_condition_satisfying_pair(rng, cfg.n, shape);
    ProductStats stats;
    const BlockToeplitz structured = structured_product(t, u, &stats);
    const BlockToeplitz via_dense =
        BlockToeplitz::from_dense(t.to_dense() * u.to_dense(), cfg.n, shape);
    Json fixtures{{"T", to_json(t)},
                  {"U", to_json(u)},
                  {"block_multiplications", stats.product_multiplications}};
    trial.require(structured == via_dense,
                  "structured product equals the dense extraction", fixtures);
    trial.require(stats.product_multiplications <= quadratic_bound,
                  "per-product block multiplications within n(2n-1)", fixtures);
    trial.require(stats.product_multiplications < dense_block_work,
                  "fewer block multiplications than the n^3 dense path", fixtures);
    max_mults = std::max(max_mults, stats.product_multiplications);
    trial.finish();
  }
  outcome.notes.push_back(
      "max block multiplications per product: " + std::to_string(max_mults) +
      " (bound n(2n-1) = " + std::to_string(quadratic_bound) +
      ", dense path = " + std::to_string(dense_block_work) + ")");
}

// ---------------------------------------------------------------------------
// reporting

void render_text_report(const Json& report, std::ostream& out) {
  out << "bta " << report.at("version").get<std::string>() << " verify "
      << report.at("target").get<std::string>() << "\n";
  const Json& cfg = report.at("config");
  out << "config: n=" << cfg.at("n") << " sigma=" << cfg.at("sigma")
      << " tau=" << cfg.at("tau") << " trials=" << cfg.at("trials")
      << " seed=" << cfg.at("seed")
      << " relaxed=" << (cfg.at("relaxed").get<bool>() ? "true" : "false") << "\n";
  for (const auto& note : report.at("notes")) {
    out << "note: " << note.get<std::string>() << "\n";
  }
  out << "trials: " << report.at("trials") << " passed: " << report.at("passed")
      << " failed: " << report.at("failed") << "\n";
  if (report.contains("counterexample")) {
    out << "counterexample: " << report.at("counterexample").dump() << "\n";
  }
  out << "result: " << (report.at("ok").get<bool>() ? "PASS" : "FAIL") << "\n";
}

const std::set<std::string>& verify_targets() {
  static const std::set<std::string> targets{
      "lemma-product",    "fab-closure",      "special-algebra",
      "maximality",       "pair-equivalence", "structured-product"};
  return targets;
}

}  // namespace

int cmd_verify(const std::string& target, const RunConfig& config,
               std::ostream& out, std::ostream& err) {
  if (verify_targets().count(target) == 0) {
    err << "error: unknown verify target \"" << target << "\"\n";
    return kExitBadInput;
  }
  if (config.n < 2) {
    err << "error: block order n >= 2 required\n";
    return kExitBadInput;
  }
  if (config.trials == 0) {
    err << "error: at least one trial required\n";
    return kExitBadInput;
  }
  if (config.format != "text" && config.format != "json") {
    err << "error: format must be \"text\" or \"json\"\n";
    return kExitBadInput;
  }
  SchurShape shape{1, 1};
  try {
    shape = config_shape(config);
  } catch (const InvalidShape& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  if ((target == "special-algebra") && shape.sigma() * shape.tau() < 2) {
    err << "error: special-algebra needs sigma*tau >= 2 "
           "(the radical has no independent pairs otherwise)\n";
    return kExitBadInput;
  }

  Outcome outcome;
  if (config.relaxed) {
    outcome.notes.push_back(
        "relaxed shape: results fall outside the classified hypotheses");
  }
  if (target == "lemma-product") {
    run_lemma_product(config, outcome);
  } else if (target == "fab-closure") {
    run_fab_closure(config, outcome);
  } else if (target == "special-algebra") {
    run_special_algebra(config, outcome);
  } else if (target == "maximality") {
    run_maximality(config, outcome);
  } else if (target == "pair-equivalence") {
    run_pair_equivalence(config, outcome);
  } else {
    run_structured_product(config, outcome);
  }

  Json report{{"version", kVersion},
              {"command", "verify"},
              {"target", target},
              {"config", config_json(config)},
              {"trials", config.trials},
              {"passed", outcome.passed},
              {"failed", outcome.failed},
              {"notes", outcome.notes},
              {"ok", outcome.failed == 0}};
  if (outcome.counterexample) report["counterexample"] = *outcome.counterexample;

  if (config.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    render_text_report(report, out);
  }
  return outcome.failed == 0 ? kExitOk : kExitViolation;
}

namespace {

void render_text_classification(const Json& result, std::ostream& out) {
  out << "bta " << kVersion << " classify\n";
  out << "verdict: " << result.at("verdict").get<std::string>() << "\n";
  out << "dimension: " << result.at("dimension") << "\n";
  out << "ambient_dimension: " << result.at("ambient_dimension") << "\n";
  out << "certificate: " << result.at("certificate").get<std::string>() << "\n";
  if (result.contains("codimension")) {
    out << "codimension: " << result.at("codimension") << "\n";
  }
  if (result.contains("pair")) {
    out << "pair: " << result.at("pair").dump() << "\n";
  }
  if (result.contains("rejection_reason")) {
    out << "rejection_reason: " << result.at("rejection_reason").get<std::string>()
        << "\n";
  }
  for (const auto& note : result.at("notes")) {
    out << "note: " << note.get<std::string>() << "\n";
  }
}

int write_payload(const std::string& payload,
                  const std::optional<std::string>& output_path, std::ostream& out,
                  std::ostream& err) {
  if (!output_path) {
    out << payload;
    return kExitOk;
  }
  std::ofstream file(*output_path);
  if (!file) {
    err << "error: cannot write \"" << *output_path << "\"\n";
    return kExitBadInput;
  }
  file << payload;
  return kExitOk;
}

}  // namespace

int cmd_classify(const std::string& input_path,
                 const std::optional<std::string>& output_path,
                 const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format != "text" && config.format != "json") {
    err << "error: format must be \"text\" or \"json\"\n";
    return kExitBadInput;
  }
  std::ifstream file(input_path);
  if (!file) {
    err << "error: cannot open \"" << input_path << "\"\n";
    return kExitBadInput;
  }
  Json parsed;
  try {
    parsed = Json::parse(file);
  } catch (const Json::parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  ClassificationResult result;
  try {
    const AlgebraInput input = algebra_input_from_json(
        parsed, config.relaxed ? SchurShape::Relaxed::yes : SchurShape::Relaxed::no);
    result = classify(input.generators);
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  const Json result_json = to_json(result);
  std::string payload;
  if (config.format == "json") {
    payload = result_json.dump(2) + "\n";
  } else {
    std::ostringstream text;
    render_text_classification(result_json, text);
    payload = text.str();
  }
  return write_payload(payload, output_path, out, err);
}

int cmd_example(int which, const ExampleOptions& options, std::ostream& out,
                std::ostream& err) {
  Json fixture;
  try {
    if (which == 1) {
      Json displayed{{"generators", Json::array()}};
      for (const BlockToeplitz& t : example1_displayed_generators()) {
        displayed["generators"].push_back(to_json(t));
      }
      Json defined{{"generators", Json::array()}};
      for (const BlockToeplitz& t : example1_defined_generators()) {
        defined["generators"].push_back(to_json(t));
      }
      const Json notes = Json::array(
          {"as_displayed: the diagonal-repeat family diag(T0, T0, T0), dimension 3, "
           "a proper subalgebra of the special algebra",
           "as_defined: the solution space of I*T_j = 0 for j = 1,2, dimension 9, "
           "the maximal algebra of the pair (I, 0)",
           "as_displayed omits the free lower diagonals of the defining relations; "
           "both variants are emitted so the discrepancy stays checkable"});
      if (options.variant == "displayed") {
        fixture = std::move(displayed);
        fixture["notes"] = notes;
      } else if (options.variant == "defined") {
        fixture = std::move(defined);
        fixture["notes"] = notes;
      } else if (options.variant == "both") {
        fixture = Json{{"fixtures",
                        Json{{"as_displayed", std::move(displayed)},
                             {"as_defined", std::move(defined)}}},
                       {"notes", notes}};
      } else {
        err << "error: variant must be displayed, defined, or both\n";
        return kExitBadInput;
      }
    } else if (which == 2) {
      fixture = Json{{"generators", Json::array()},
                     {"notes",
                      Json::array({"coupled family T_j = mu*T_{j-3} with mu = " +
                                   rational_to_string(options.params.mu)})}};
      for (const BlockToeplitz& t : example2_generators(options.params.mu)) {
        fixture["generators"].push_back(to_json(t));
      }
    } else if (which == 3) {
      fixture = Json{{"generators", Json::array()},
                     {"notes",
                      Json::array({"special algebra: off-diagonal blocks nilpotent; "
                                   "led by the generic element with parameters "
                                   "lambda, a, b, c, d"})}};
      for (const BlockToeplitz& t : example3_generators(options.params)) {
        fixture["generators"].push_back(to_json(t));
      }
    } else {
      err << "error: example must be 1, 2, or 3\n";
      return kExitBadInput;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return write_payload(fixture.dump(2) + "\n", options.output_path, out, err);
}

}  // namespace bta
