#pragma once

#include <string>
#include <vector>

namespace ellbott {

struct LemmaCheck {
  std::string name;
  std::string expected;
  std::string got;
  bool pass;
};

struct LemmaSuiteResult {
  std::vector<LemmaCheck> checks;

  bool all_pass() const;
  unsigned passed() const;
  unsigned failed() const;
};

/// Runs the local-geometry oracles against the expected table:
/// critical-scheme degrees of the five local fiber models, and the
/// restriction ranks H^0(F, L) -> H^0(S_0, L) over all component-degree
/// splits up to the bounds. max_components caps the number of fiber
/// components (so I_n runs for n <= max_components, III needs >= 2,
/// IV needs >= 3); max_degree caps the polarization degrees.
LemmaSuiteResult run_lemma_suite(unsigned max_components = 5, unsigned max_degree = 4);

}  // namespace ellbott
