#include "ellbott/model_io.hpp"

#include <json.hpp>

#include <algorithm>

#include "ellbott/criteria.hpp"
#include "ellbott/errors.hpp"

namespace ellbott {

using nlohmann::json;

std::string model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::Weierstrass: return "weierstrass";
    case ModelKind::DoubleCover: return "double_cover";
    case ModelKind::Hypersurface: return "hypersurface";
    case ModelKind::CompleteIntersection: return "complete_intersection";
    case ModelKind::DeclaredSummary: return "declared_summary";
  }
  return "?";
}

namespace {

long long require_integer(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("key \"") + key + "\" must be an integer");
  }
  return v.get<long long>();
}

unsigned require_positive(const json& j, const char* key) {
  const long long v = require_integer(j, key);
  if (v < 1) throw ParseError(std::string("key \"") + key + "\" must be >= 1");
  return static_cast<unsigned>(v);
}

std::vector<Rational> coefficient_list(const json& j, const char* key, unsigned max_len) {
  if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_array()) throw ParseError(std::string("key \"") + key + "\" must be an array");
  if (v.size() > max_len) {
    throw ParseError(std::string("key \"") + key + "\" has " + std::to_string(v.size()) +
                     " coefficients; the form degree allows at most " + std::to_string(max_len));
  }
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const json& c : v) {
    if (c.is_number_integer()) {
      out.push_back(Rational(mpz_class(std::to_string(c.get<long long>()))));
    } else if (c.is_string()) {
      try {
        out.push_back(Rational::parse(c.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("in key \"") + key + "\": " + e.what());
      }
    } else {
      throw ParseError(std::string("key \"") + key +
                       "\" entries must be integers or \"p/q\" strings");
    }
  }
  return out;
}

std::set<FiberType> parse_declared_types(const json& v) {
  if (!v.is_array()) throw ParseError("\"declared_types\" must be an array of type names");
  std::set<FiberType> out;
  for (const json& t : v) {
    if (!t.is_string()) throw ParseError("\"declared_types\" entries must be strings");
    const std::string name = t.get<std::string>();
    if (name == "II") {
      out.insert(FiberType::II);
    } else if (name == "III") {
      out.insert(FiberType::III);
    } else if (name == "IV") {
      out.insert(FiberType::IV);
    } else {
      throw ParseError("declared type \"" + name + "\" is not one of II, III, IV");
    }
  }
  return out;
}

}  // namespace

ModelFile parse_model_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("model file must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError("model file needs a string key \"kind\"");
  }
  const std::string kind = j.at("kind").get<std::string>();

  ModelFile m;
  m.normalized_json = j.dump();
  if (kind == "weierstrass") {
    m.kind = ModelKind::Weierstrass;
    m.beta = require_positive(j, "beta");
    m.lambda = coefficient_list(j, "lambda", 4 * *m.beta + 1);
    m.mu = coefficient_list(j, "mu", 6 * *m.beta + 1);
    if (j.contains("m")) m.m = require_integer(j, "m");
  } else if (kind == "double_cover") {
    m.kind = ModelKind::DoubleCover;
    m.l = require_positive(j, "l");
    m.m = require_integer(j, "m");
  } else if (kind == "hypersurface") {
    m.kind = ModelKind::Hypersurface;
    m.a = require_positive(j, "a");
    m.m = require_integer(j, "m");
  } else if (kind == "complete_intersection") {
    m.kind = ModelKind::CompleteIntersection;
    m.a = require_positive(j, "a");
    m.b = require_positive(j, "b");
    m.m = require_integer(j, "m");
  } else if (kind == "declared_summary") {
    m.kind = ModelKind::DeclaredSummary;
    const long long beta = require_integer(j, "beta");
    if (beta < 0) throw ParseError("\"beta\" must be >= 0");
    m.beta = static_cast<unsigned>(beta);
    m.declared_r = require_positive(j, "r");
    m.declared_a_sq = require_integer(j, "A2");
  } else {
    throw ParseError("unknown model kind \"" + kind + "\"");
  }
  if (j.contains("declared_types")) {
    if (m.kind == ModelKind::Weierstrass) {
      throw ParseError("weierstrass models have their census classified, not declared");
    }
    m.declared_types = parse_declared_types(j.at("declared_types"));
  }
  return m;
}

namespace {

WeierstrassData weierstrass_from(const ModelFile& m) {
  return WeierstrassData(*m.beta, BinaryForm(4 * *m.beta, UniPoly::from_coeffs(m.lambda)),
                         BinaryForm(6 * *m.beta, UniPoly::from_coeffs(m.mu)));
}

FamilySpec family_from(const ModelFile& m) {
  switch (m.kind) {
    case ModelKind::Weierstrass:
      if (!m.m) throw ParseError("weierstrass analysis needs the polarization key \"m\"");
      return WeierstrassSectionSpec{weierstrass_from(m), *m.m};
    case ModelKind::DoubleCover:
      return DoubleCoverSpec{*m.l, *m.m, m.declared_types};
    case ModelKind::Hypersurface:
      return HypersurfaceSpec{*m.a, *m.m, m.declared_types};
    case ModelKind::CompleteIntersection:
      return CompleteIntersectionSpec{*m.a, *m.b, *m.m, m.declared_types};
    case ModelKind::DeclaredSummary:
      break;
  }
  throw InconsistentSummary("declared summaries do not build a family spec");
}

std::vector<CensusRow> census_rows(const FiberCensus& census) {
  std::vector<CensusRow> rows;
  for (const auto& f : census.fibers) {
    rows.push_back(CensusRow{f.cluster.place.str(), f.count, f.cluster.a.str(),
                             f.cluster.b.str(), f.cluster.delta, f.type.str()});
  }
  return rows;
}

std::string census_mode_name(CensusKnowledge::Mode mode) {
  switch (mode) {
    case CensusKnowledge::Mode::Known: return "known";
    case CensusKnowledge::Mode::Declared: return "declared";
    case CensusKnowledge::Mode::Unknown: return "unknown";
  }
  return "?";
}

void fill_summary(Report& rep, const SurfaceSummary& s) {
  rep.beta = s.beta;
  rep.r = s.r;
  rep.a_sq = s.a_sq;
  rep.nef_big_shifts.assign(s.nef_big_shifts.begin(), s.nef_big_shifts.end());
  rep.h0_gap_equals_r = s.h0_gap_equals_r;
  rep.census_mode = census_mode_name(s.census.mode);
  if (s.census.mode == CensusKnowledge::Mode::Declared) {
    for (FiberType t : s.census.declared) rep.declared_types.push_back(fiber_type_name(t));
  }
  if (s.census.mode == CensusKnowledge::Mode::Known) {
    rep.census = census_rows(*s.census.known);
    rep.delta_sum = s.census.known->total_delta();
    rep.euler_sum = s.census.known->total_euler();
    rep.twelve_beta = 12ul * s.beta;
  }
}

void fill_verdict(Report& rep, const Verdict& v) {
  rep.chi = v.chi;
  rep.a2_threshold_value = v.a2_threshold_value;
  rep.h1_state = h1_state_name(v.h1);
  rep.bott_state = bott_state_name(v.bott);
  for (FiberType t : v.conditional_types) rep.conditional_types.push_back(fiber_type_name(t));
  rep.bott_basis = v.bott_basis;
  for (const auto& t : v.trace) {
    rep.trace.push_back(ReportTraceEntry{rule_name(t.rule), t.citation, t.inputs});
  }
  for (const auto& n : v.notes) rep.warnings.push_back(n);
}

}  // namespace

SurfaceSummary summary_for(const ModelFile& model) {
  if (model.kind != ModelKind::DeclaredSummary) {
    return build_summary(family_from(model));
  }
  SurfaceSummary s;
  s.beta = *model.beta;
  s.r = *model.declared_r;
  s.a_sq = *model.declared_a_sq;
  s.census = model.declared_types ? CensusKnowledge::from_declared(*model.declared_types)
                                  : CensusKnowledge::unknown();
  return s;
}

Outcome run_classify(const ModelFile& model) {
  Outcome out;
  out.report.command = "classify";
  out.report.input_echo = model.normalized_json;
  out.report.kind = model_kind_name(model.kind);
  if (model.kind != ModelKind::Weierstrass) {
    out.report.warnings.push_back("classify needs a weierstrass model");
    out.exit_code = kExitModel;
    return out;
  }
  try {
    const WeierstrassData data = weierstrass_from(model);
    out.report.beta = data.beta();
    const MinimalityCheck mc = data.is_minimal();
    out.report.minimal = mc.minimal;
    if (!mc.minimal) {
      for (const auto& c : mc.offending) {
        out.report.offending_places.push_back(c.place.str());
      }
      out.report.warnings.push_back("model is not minimal");
      out.exit_code = kExitModel;
      return out;
    }
    const FiberCensus census = data.classify_fibers();
    out.report.census = census_rows(census);
    out.report.delta_sum = census.total_delta();
    out.report.euler_sum = census.total_euler();
    out.report.twelve_beta = 12ul * data.beta();
  } catch (const NonReducedFiber& e) {
    out.report.warnings.push_back(e.what());
    out.exit_code = kExitModel;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Model) throw;
    out.report.warnings.push_back(e.what());
    out.exit_code = kExitModel;
  }
  return out;
}

Outcome run_analyze(const ModelFile& model) {
  Outcome out;
  out.report.command = "analyze";
  out.report.input_echo = model.normalized_json;
  out.report.kind = model_kind_name(model.kind);
  try {
    const SurfaceSummary s = summary_for(model);
    out.report.minimal = model.kind == ModelKind::Weierstrass ? std::optional<bool>(true)
                                                              : std::nullopt;
    fill_summary(out.report, s);
    if (model.kind == ModelKind::Hypersurface) {
      out.report.warnings.push_back("self-intersection computed as A^2 = 6m + a");
    } else if (model.kind == ModelKind::CompleteIntersection) {
      out.report.warnings.push_back("self-intersection computed as A^2 = 2a + 2b + 8m");
    }
    fill_verdict(out.report, decide_bott(s));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    if (e.kind() != ErrorKind::Model) throw;
    if (const auto* nm = dynamic_cast<const NotMinimal*>(&e)) {
      out.report.minimal = false;
      out.report.warnings.push_back(nm->what());
    } else {
      out.report.warnings.push_back(e.what());
    }
    out.exit_code = kExitModel;
  }
  return out;
}

Outcome run_verify_lemmas(unsigned max_components, unsigned max_degree) {
  Outcome out;
  out.report.command = "verify-lemmas";
  const LemmaSuiteResult result = run_lemma_suite(max_components, max_degree);
  for (const auto& c : result.checks) {
    out.report.lemma_rows.push_back(LemmaRow{c.name, c.expected, c.got, c.pass});
  }
  out.exit_code = result.all_pass() ? kExitOk : kExitInternal;
  return out;
}

}  // namespace ellbott
