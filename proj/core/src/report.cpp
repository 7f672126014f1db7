#include "ellbott/report.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

#include "ellbott/errors.hpp"

namespace ellbott {

namespace {

using nlohmann::json;

template <typename T>
json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

template <typename T>
void read_opt(const json& j, const char* key, std::optional<T>& out) {
  if (!j.contains(key) || j.at(key).is_null()) {
    out.reset();
    return;
  }
  out = j.at(key).get<T>();
}

json rows_json(const std::vector<CensusRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    a.push_back({{"place", r.place},
                 {"count", r.count},
                 {"a", r.ord_lambda},
                 {"b", r.ord_mu},
                 {"delta", r.delta},
                 {"type", r.type}});
  }
  return a;
}

std::vector<CensusRow> rows_from_json(const json& a) {
  std::vector<CensusRow> rows;
  for (const auto& j : a) {
    CensusRow r;
    r.place = j.at("place").get<std::string>();
    r.count = j.at("count").get<unsigned>();
    r.ord_lambda = j.at("a").get<std::string>();
    r.ord_mu = j.at("b").get<std::string>();
    r.delta = j.at("delta").get<unsigned>();
    r.type = j.at("type").get<std::string>();
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::string Report::to_json_string(int indent) const {
  json j;
  j["command"] = command;
  j["input"] = input_echo.empty() ? json(nullptr) : json::parse(input_echo);
  j["kind"] = kind;
  j["minimal"] = opt_json(minimal);
  j["offending_places"] = offending_places;
  j["census"] = census ? rows_json(*census) : json(nullptr);
  j["delta_sum"] = opt_json(delta_sum);
  j["euler_sum"] = opt_json(euler_sum);
  j["twelve_beta"] = opt_json(twelve_beta);
  j["beta"] = opt_json(beta);
  j["r"] = opt_json(r);
  j["A2"] = opt_json(a_sq);
  j["chi"] = opt_json(chi);
  j["a2_threshold"] = opt_json(a2_threshold_value);
  j["nef_big_shifts"] = nef_big_shifts;
  j["h0_gap_equals_r"] = opt_json(h0_gap_equals_r);
  j["census_mode"] = census_mode;
  j["declared_types"] = declared_types;
  j["h1"] = h1_state;
  j["bott"] = bott_state;
  j["conditional_types"] = conditional_types;
  j["bott_basis"] = bott_basis;
  json trace_json = json::array();
  for (const auto& t : trace) {
    trace_json.push_back({{"rule", t.rule}, {"citation", t.citation}, {"inputs", t.inputs}});
  }
  j["trace"] = std::move(trace_json);
  j["warnings"] = warnings;
  json lemma_json = json::array();
  for (const auto& row : lemma_rows) {
    lemma_json.push_back(
        {{"name", row.name}, {"expected", row.expected}, {"got", row.got}, {"pass", row.pass}});
  }
  j["lemma_rows"] = std::move(lemma_json);
  return j.dump(indent);
}

Report Report::from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.input_echo = j.at("input").is_null() ? "" : j.at("input").dump();
    r.kind = j.at("kind").get<std::string>();
    read_opt(j, "minimal", r.minimal);
    r.offending_places = j.at("offending_places").get<std::vector<std::string>>();
    if (!j.at("census").is_null()) r.census = rows_from_json(j.at("census"));
    read_opt(j, "delta_sum", r.delta_sum);
    read_opt(j, "euler_sum", r.euler_sum);
    read_opt(j, "twelve_beta", r.twelve_beta);
    read_opt(j, "beta", r.beta);
    read_opt(j, "r", r.r);
    read_opt(j, "A2", r.a_sq);
    read_opt(j, "chi", r.chi);
    read_opt(j, "a2_threshold", r.a2_threshold_value);
    r.nef_big_shifts = j.at("nef_big_shifts").get<std::vector<long long>>();
    read_opt(j, "h0_gap_equals_r", r.h0_gap_equals_r);
    r.census_mode = j.at("census_mode").get<std::string>();
    r.declared_types = j.at("declared_types").get<std::vector<std::string>>();
    r.h1_state = j.at("h1").get<std::string>();
    r.bott_state = j.at("bott").get<std::string>();
    r.conditional_types = j.at("conditional_types").get<std::vector<std::string>>();
    r.bott_basis = j.at("bott_basis").get<std::string>();
    for (const auto& t : j.at("trace")) {
      r.trace.push_back({t.at("rule").get<std::string>(), t.at("citation").get<std::string>(),
                         t.at("inputs").get<std::string>()});
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const auto& row : j.at("lemma_rows")) {
      r.lemma_rows.push_back({row.at("name").get<std::string>(),
                              row.at("expected").get<std::string>(),
                              row.at("got").get<std::string>(), row.at("pass").get<bool>()});
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON has the wrong shape: ") + e.what());
  }
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ", ";
    os << xs[i];
  }
  return os.str();
}

}  // namespace

void Report::print_text(std::ostream& os) const {
  os << "command: " << command << "\n";
  if (!kind.empty()) os << "model kind: " << kind << "\n";
  if (minimal) {
    os << "minimal: " << (*minimal ? "yes" : "no") << "\n";
    if (!*minimal) os << "  offending places: " << join(offending_places) << "\n";
  }
  if (census) {
    os << "census";
    if (delta_sum && twelve_beta) {
      os << " (sum count*delta = " << *delta_sum << ", sum count*euler = "
         << (euler_sum ? *euler_sum : 0ul) << ", 12*beta = " << *twelve_beta << ")";
    }
    os << ":\n";
    std::size_t place_w = 5;
    for (const auto& row : *census) place_w = std::max(place_w, row.place.size());
    os << "  " << pad("place", place_w) << "  count  a    b    delta  type\n";
    for (const auto& row : *census) {
      os << "  " << pad(row.place, place_w) << "  " << pad(std::to_string(row.count), 5) << "  "
         << pad(row.ord_lambda, 3) << "  " << pad(row.ord_mu, 3) << "  "
         << pad(std::to_string(row.delta), 5) << "  " << row.type << "\n";
    }
  } else if (!census_mode.empty() && census_mode != "known") {
    os << "census: " << census_mode;
    if (census_mode == "declared") os << " {" << join(declared_types) << "}";
    os << "\n";
  }
  if (beta) {
    os << "summary: beta=" << *beta;
    if (r) os << " r=" << *r;
    if (a_sq) os << " A^2=" << *a_sq;
    os << "\n";
    if (chi) os << "  chi(Omega^1 x A) = " << *chi << "\n";
    if (r) {
      os << "  A^2 threshold (r >= 2): "
         << (a2_threshold_value ? std::to_string(*a2_threshold_value) : std::string("n/a"))
         << "\n";
    }
    if (!nef_big_shifts.empty()) {
      os << "  certified nef&big shifts k (A - kE): " << join(nef_big_shifts) << "\n";
    }
    if (h0_gap_equals_r) {
      os << "  h^0 gap equals r: " << (*h0_gap_equals_r ? "yes" : "no") << "\n";
    }
  }
  if (!h1_state.empty()) {
    os << "verdict: h1 = " << h1_state << ", Bott vanishing = " << bott_state << "\n";
    if (!conditional_types.empty()) {
      os << "  conditional on fiber types: " << join(conditional_types)
         << " (h1 != 0 and Bott fails exactly when one occurs)\n";
    }
    if (!bott_basis.empty()) os << "  basis: " << bott_basis << "\n";
  }
  if (!trace.empty()) {
    os << "trace:\n";
    for (const auto& t : trace) {
      os << "  [" << t.rule << "] " << t.citation << "\n";
      if (!t.inputs.empty()) os << "      inputs: " << t.inputs << "\n";
    }
  }
  if (!lemma_rows.empty()) {
    unsigned passed = 0;
    for (const auto& row : lemma_rows) passed += row.pass ? 1 : 0;
    os << "lemma checks: " << passed << "/" << lemma_rows.size() << " passed\n";
    for (const auto& row : lemma_rows) {
      if (row.pass) continue;
      os << "  [FAIL] " << row.name << ": expected " << row.expected << ", got " << row.got
         << "\n";
    }
  }
  if (!warnings.empty()) {
    os << "warnings:\n";
    for (const auto& w : warnings) os << "  - " << w << "\n";
  }
}

}  // namespace ellbott
