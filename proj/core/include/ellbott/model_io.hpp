#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ellbott/families.hpp"
#include "ellbott/lemma_suite.hpp"
#include "ellbott/rational.hpp"
#include "ellbott/report.hpp"

namespace ellbott {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 65;     // malformed file
inline constexpr int kExitModel = 66;     // file parses, model invalid
inline constexpr int kExitInternal = 70;  // internal invariant breached

enum class ModelKind {
  Weierstrass,
  DoubleCover,
  Hypersurface,
  CompleteIntersection,
  DeclaredSummary,
};

std::string model_kind_name(ModelKind k);

/// Parsed model file. Coefficient lists are affine-chart coefficients,
/// low to high; the form degrees come from beta, never from list lengths.
struct ModelFile {
  ModelKind kind;
  std::string normalized_json;  // echoed into reports

  std::optional<unsigned> beta;
  std::vector<Rational> lambda;
  std::vector<Rational> mu;
  std::optional<long long> m;
  std::optional<unsigned> l, a, b;
  std::optional<unsigned> declared_r;
  std::optional<long long> declared_a_sq;
  std::optional<std::set<FiberType>> declared_types;
};

/// Parses the JSON text of a model file; throws ParseError on anything
/// malformed (bad JSON, unknown kind, missing keys, floats, "p/0", lists
/// longer than the form degree allows).
ModelFile parse_model_text(const std::string& text);

struct Outcome {
  Report report;
  int exit_code = kExitOk;
};

/// Census, minimality result and the delta-sum check for a weierstrass
/// model. Non-minimal and non-reduced models are reported, not thrown,
/// with exit code 66.
Outcome run_classify(const ModelFile& model);

/// Full analysis: build the surface summary, decide Bott vanishing and
/// report the verdict with its rule trace. Exit 0 for any successful
/// analysis regardless of verdict; 66 when the model is invalid.
Outcome run_analyze(const ModelFile& model);

/// Report form of the lemma-suite run; exit 70 when any check fails.
Outcome run_verify_lemmas(unsigned max_components, unsigned max_degree);

/// The summary a model describes (classifying fibers where possible).
SurfaceSummary summary_for(const ModelFile& model);

}  // namespace ellbott
