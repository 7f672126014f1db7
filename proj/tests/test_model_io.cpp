#include <doctest.h>

#include "ellbott/errors.hpp"
#include "ellbott/model_io.hpp"

using namespace ellbott;

namespace {

const char* kWorked = R"({"kind": "weierstrass", "beta": 1,
                          "lambda": [0, 0, 0, 0, 1],
                          "mu": [0, 1, 0, 0, 0, 0, 1], "m": 12})";

}  // namespace

TEST_CASE("parsing the worked model file") {
  const ModelFile m = parse_model_text(kWorked);
  CHECK(m.kind == ModelKind::Weierstrass);
  CHECK(m.beta == 1u);
  CHECK(m.lambda.size() == 5);
  CHECK(m.mu.size() == 7);
  CHECK(m.m == 12);
}

TEST_CASE("malformed files are parse errors") {
  CHECK_THROWS_AS(parse_model_text("{"), ParseError);
  CHECK_THROWS_AS(parse_model_text("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "sphere"})"), ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "weierstrass", "beta": 1,
      "lambda": ["1/0"], "mu": [1], "m": 1})"),
                  ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "weierstrass", "beta": 1,
      "lambda": [1.5], "mu": [1], "m": 1})"),
                  ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "weierstrass", "beta": 0,
      "lambda": [1], "mu": [1]})"),
                  ParseError);
  // six coefficients would exceed degree 4*beta = 4
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "weierstrass", "beta": 1,
      "lambda": [1, 1, 1, 1, 1, 1], "mu": [1]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "weierstrass", "beta": 1,
      "lambda": [1], "mu": [1], "declared_types": ["II"]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "double_cover", "l": 1, "m": 5,
      "declared_types": ["I1"]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "double_cover", "m": 5})"), ParseError);
}

TEST_CASE("adversarial files never get past the parser") {
  CHECK_THROWS_AS(parse_model_text(""), ParseError);
  CHECK_THROWS_AS(parse_model_text("null"), ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": null})"), ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "double_cover", "l": 1, "m": "ten"})"),
                  ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "double_cover", "l": 1, "m": 1e300})"),
                  ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "weierstrass", "beta": 1,
      "lambda": [[1]], "mu": [1], "m": 1})"),
                  ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "weierstrass", "beta": 1,
      "lambda": {"0": 1}, "mu": [1], "m": 1})"),
                  ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "declared_summary", "beta": 1, "r": 0,
      "A2": 5})"),
                  ParseError);
  // huge exact coefficients are fine
  const std::string big(400, '7');
  CHECK_NOTHROW(parse_model_text(R"({"kind": "weierstrass", "beta": 1, "lambda": [")" + big +
                                 R"("], "mu": [1], "m": 1})"));
}

TEST_CASE("family parameter violations surface as invalid models") {
  const Outcome out = run_analyze(parse_model_text(
      R"({"kind": "double_cover", "l": 1, "m": 0})"));
  CHECK(out.exit_code == kExitModel);
  REQUIRE(!out.report.warnings.empty());
}

TEST_CASE("classify works without the polarization key") {
  const Outcome out = run_classify(parse_model_text(
      R"({"kind": "weierstrass", "beta": 1, "lambda": [0,0,0,0,1],
          "mu": [0,1,0,0,0,0,1]})"));
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report.census.has_value());
}

TEST_CASE("rational coefficients parse from strings") {
  const ModelFile m = parse_model_text(R"({"kind": "weierstrass", "beta": 1,
      "lambda": ["1/2", 0, "-3/4"], "mu": [1], "m": 1})");
  CHECK(m.lambda[0] == Rational(1, 2));
  CHECK(m.lambda[2] == Rational(-3, 4));
}

TEST_CASE("classify pipeline on the worked model") {
  const Outcome out = run_classify(parse_model_text(kWorked));
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report.minimal == true);
  REQUIRE(out.report.census.has_value());
  REQUIRE(!out.report.census->empty());
  const CensusRow& row = out.report.census->front();
  CHECK(row.place == "(t)");
  CHECK(row.ord_lambda == "4");
  CHECK(row.ord_mu == "1");
  CHECK(row.delta == 2);
  CHECK(row.type == "II");
  CHECK(out.report.delta_sum == 12ul);
  CHECK(out.report.twelve_beta == 12ul);
}

TEST_CASE("classify reports invalid models with exit 66") {
  // constants vanish to full order at infinity: not minimal there
  const Outcome nonminimal = run_classify(parse_model_text(
      R"({"kind": "weierstrass", "beta": 1, "lambda": [1], "mu": [1]})"));
  CHECK(nonminimal.exit_code == kExitModel);
  CHECK(nonminimal.report.minimal == false);
  REQUIRE(!nonminimal.report.offending_places.empty());
  CHECK(nonminimal.report.offending_places[0] == "infinity");

  const Outcome starred = run_classify(parse_model_text(
      R"({"kind": "weierstrass", "beta": 1, "lambda": [0, 0, 1], "mu": [0, 0, 0, 1]})"));
  CHECK(starred.exit_code == kExitModel);
  REQUIRE(!starred.report.warnings.empty());

  const Outcome wrong_kind = run_classify(parse_model_text(
      R"({"kind": "double_cover", "l": 1, "m": 5})"));
  CHECK(wrong_kind.exit_code == kExitModel);
}

TEST_CASE("analyze pipeline across the families") {
  const Outcome ws = run_analyze(parse_model_text(kWorked));
  CHECK(ws.exit_code == kExitOk);
  CHECK(ws.report.bott_state == "Fails");
  CHECK(ws.report.a_sq == 23);
  CHECK(ws.report.chi == 13);
  REQUIRE(!ws.report.trace.empty());
  CHECK(ws.report.trace.front().rule == "R1Family");

  const Outcome ci = run_analyze(parse_model_text(
      R"({"kind": "complete_intersection", "a": 1, "b": 1, "m": 23})"));
  CHECK(ci.exit_code == kExitOk);
  CHECK(ci.report.bott_state == "Holds");

  const Outcome dc = run_analyze(parse_model_text(
      R"({"kind": "double_cover", "l": 1, "m": 10})"));
  CHECK(dc.exit_code == kExitOk);
  CHECK(dc.report.bott_state == "Conditional");
  CHECK(dc.report.conditional_types == std::vector<std::string>{"III"});

  const Outcome dc_no_iii = run_analyze(parse_model_text(
      R"({"kind": "double_cover", "l": 1, "m": 10, "declared_types": []})"));
  CHECK(dc_no_iii.report.bott_state == "Holds");

  const Outcome hs_iv = run_analyze(parse_model_text(
      R"({"kind": "hypersurface", "a": 1, "m": 10, "declared_types": ["IV"]})"));
  CHECK(hs_iv.report.bott_state == "Fails");

  const Outcome summary = run_analyze(parse_model_text(
      R"({"kind": "declared_summary", "beta": 0, "r": 1, "A2": 4})"));
  CHECK(summary.report.bott_state == "Holds");

  // analysis of a weierstrass file without the polarization key
  CHECK_THROWS_AS(run_analyze(parse_model_text(
                      R"({"kind": "weierstrass", "beta": 1, "lambda": [1], "mu": [0, 1]})")),
                  ParseError);

  // non-minimal model: reported, exit 66
  const Outcome nonminimal = run_analyze(parse_model_text(
      R"({"kind": "weierstrass", "beta": 1, "lambda": [1], "mu": [1], "m": 12})"));
  CHECK(nonminimal.exit_code == kExitModel);
  CHECK(nonminimal.report.minimal == false);
}

TEST_CASE("reports round-trip through their machine form") {
  for (const char* text :
       {kWorked, R"({"kind": "double_cover", "l": 1, "m": 10})",
        R"({"kind": "hypersurface", "a": 1, "m": 10, "declared_types": ["IV"]})",
        R"({"kind": "declared_summary", "beta": 2, "r": 3, "A2": 170})"}) {
    const Outcome out = run_analyze(parse_model_text(text));
    const Report back = Report::from_json_string(out.report.to_json_string());
    CHECK(back == out.report);
    // and the serialized forms agree byte for byte
    CHECK(back.to_json_string() == out.report.to_json_string());
  }
  const Outcome classify = run_classify(parse_model_text(kWorked));
  CHECK(Report::from_json_string(classify.report.to_json_string()) == classify.report);
  const Outcome lemmas = run_verify_lemmas(2, 2);
  CHECK(Report::from_json_string(lemmas.report.to_json_string()) == lemmas.report);
}

TEST_CASE("lemma suite runs clean and respects its bounds") {
  const Outcome out = run_verify_lemmas(5, 4);  // default bounds
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report.lemma_rows.size() == 452);
  for (const auto& row : out.report.lemma_rows) CHECK(row.pass);

  // with a single component only the irreducible rows run
  const Outcome small = run_verify_lemmas(1, 3);
  CHECK(small.exit_code == kExitOk);
  for (const auto& row : small.report.lemma_rows) {
    CHECK(row.name.find("III") == std::string::npos);
    CHECK(row.name.find("IV") == std::string::npos);
    CHECK(row.name.find("I2") == std::string::npos);
  }
}
