#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ellbott {

/// One classified fiber cluster, rendered for reporting.
struct CensusRow {
  std::string place;
  unsigned count = 0;     // residue degree: geometric fibers in the cluster
  std::string ord_lambda; // "a" column; "inf" for the identically-zero form
  std::string ord_mu;     // "b" column
  unsigned delta = 0;
  std::string type;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct ReportTraceEntry {
  std::string rule;
  std::string citation;
  std::string inputs;

  friend bool operator==(const ReportTraceEntry&, const ReportTraceEntry&) = default;
};

struct LemmaRow {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;

  friend bool operator==(const LemmaRow&, const LemmaRow&) = default;
};

/// Full machine- and human-renderable result of a command. The JSON form
/// round-trips losslessly through from_json_string.
struct Report {
  std::string command;     // classify | analyze | verify-lemmas
  std::string input_echo;  // normalized JSON text of the model file
  std::string kind;        // model kind, when a model was read

  // classification
  std::optional<bool> minimal;
  std::vector<std::string> offending_places;
  std::optional<std::vector<CensusRow>> census;
  std::optional<unsigned long> delta_sum;
  std::optional<unsigned long> euler_sum;
  std::optional<unsigned long> twelve_beta;

  // summary consumed by the decision engine
  std::optional<unsigned> beta;
  std::optional<unsigned> r;
  std::optional<long long> a_sq;
  std::optional<long long> chi;
  std::optional<long long> a2_threshold_value;
  std::vector<long long> nef_big_shifts;
  std::optional<bool> h0_gap_equals_r;
  std::string census_mode;  // known | declared | unknown
  std::vector<std::string> declared_types;

  // verdict
  std::string h1_state;
  std::string bott_state;
  std::vector<std::string> conditional_types;
  std::string bott_basis;
  std::vector<ReportTraceEntry> trace;
  std::vector<std::string> warnings;

  // verify-lemmas
  std::vector<LemmaRow> lemma_rows;

  friend bool operator==(const Report&, const Report&) = default;

  std::string to_json_string(int indent = 2) const;
  static Report from_json_string(const std::string& text);
  void print_text(std::ostream& os) const;
};

}  // namespace ellbott
