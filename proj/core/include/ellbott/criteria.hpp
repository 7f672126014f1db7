#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ellbott/families.hpp"

namespace ellbott {

/// Decision rules, in firing priority: the unconditional Euler-
/// characteristic obstruction, the exact r = 1 criterion, the large-A^2
/// criteria, the nef-and-big implications, then the family-level results.
enum class RuleId {
  ChiNegative,
  R1Theorem,
  ForwardFiberObstruction,
  ConverseWithH0Gap,
  Cor12Beta,
  CorA2Threshold,
  R1Family,
  R4Family,
};

std::string rule_name(RuleId id);

enum class H1State { Zero, Nonzero, Undetermined, Conditional };
enum class BottState { Holds, Fails, Undetermined, Conditional };

std::string h1_state_name(H1State s);
std::string bott_state_name(BottState s);

struct TraceEntry {
  RuleId rule;
  std::string citation;  // the criterion statement the verdict rests on
  std::string inputs;    // the facts it consumed
};

/// Outcome of the h^1 test and of the Bott-vanishing test, with the rule
/// trace that produced it. A Conditional verdict means: h^1 != 0 exactly
/// when one of conditional_types occurs among the singular fibers (and
/// Bott vanishing fails exactly then).
struct Verdict {
  H1State h1 = H1State::Undetermined;
  BottState bott = BottState::Undetermined;
  std::set<FiberType> conditional_types;
  std::vector<TraceEntry> trace;
  long long chi = 0;  // chi(Omega^1 x A) = A^2 - 10*beta, always reported
  std::optional<long long> a2_threshold_value;  // consulted when r >= 2
  std::string bott_basis;  // why the h^1 answer does or does not settle Bott
  std::vector<std::string> notes;
};

/// chi(Omega^1 x A) = A^2 - 10*beta.
long long chi_omega1_twist(long long a_sq, unsigned beta);

/// A^2 bound certifying that A - (12*beta - 2)E is nef and big:
/// 2 r^2 beta + 25 r beta - 4 r - 2 beta. Requires r >= 2.
long long a2_threshold(unsigned r, unsigned beta);

/// Decides whether h^1(Omega^1 x A) vanishes.
Verdict decide_h1(const SurfaceSummary& s);

/// Decides Bott vanishing for (X, A), building on decide_h1.
Verdict decide_bott(const SurfaceSummary& s);

}  // namespace ellbott
