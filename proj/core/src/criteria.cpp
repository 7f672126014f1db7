#include "ellbott/criteria.hpp"

#include <sstream>
#include <stdexcept>

#include "ellbott/errors.hpp"

namespace ellbott {

std::string rule_name(RuleId id) {
  switch (id) {
    case RuleId::ChiNegative: return "ChiNegative";
    case RuleId::R1Theorem: return "R1Theorem";
    case RuleId::ForwardFiberObstruction: return "ForwardFiberObstruction";
    case RuleId::ConverseWithH0Gap: return "ConverseWithH0Gap";
    case RuleId::Cor12Beta: return "Cor12Beta";
    case RuleId::CorA2Threshold: return "CorA2Threshold";
    case RuleId::R1Family: return "R1Family";
    case RuleId::R4Family: return "R4Family";
  }
  return "?";
}

std::string h1_state_name(H1State s) {
  switch (s) {
    case H1State::Zero: return "Zero";
    case H1State::Nonzero: return "Nonzero";
    case H1State::Undetermined: return "Undetermined";
    case H1State::Conditional: return "Conditional";
  }
  return "?";
}

std::string bott_state_name(BottState s) {
  switch (s) {
    case BottState::Holds: return "Holds";
    case BottState::Fails: return "Fails";
    case BottState::Undetermined: return "Undetermined";
    case BottState::Conditional: return "Conditional";
  }
  return "?";
}

long long chi_omega1_twist(long long a_sq, unsigned beta) {
  return a_sq - 10ll * beta;
}

long long a2_threshold(unsigned r, unsigned beta) {
  if (r < 2) throw std::invalid_argument("a2_threshold needs r >= 2");
  const long long rl = r, bl = beta;
  return 2 * rl * rl * bl + 25 * rl * bl - 4 * rl - 2 * bl;
}

namespace {

enum class Presence { Present, Absent, Unknown };

Presence presence(const SurfaceSummary& s, FiberType t) {
  // A trivial fibration (beta = 0) has no singular fibers at all.
  if (s.beta == 0) return Presence::Absent;
  switch (s.census.mode) {
    case CensusKnowledge::Mode::Known:
      return s.census.known->has_type(t) ? Presence::Present : Presence::Absent;
    case CensusKnowledge::Mode::Declared:
      return s.census.declared.count(t) ? Presence::Present : Presence::Absent;
    case CensusKnowledge::Mode::Unknown:
      return Presence::Unknown;
  }
  return Presence::Unknown;
}

std::optional<FiberType> obstructing_type(unsigned r) {
  switch (r) {
    case 1: return FiberType::II;
    case 2: return FiberType::III;
    case 3: return FiberType::IV;
    default: return std::nullopt;  // no fiber type obstructs r >= 4
  }
}

std::string describe_inputs(const SurfaceSummary& s) {
  std::ostringstream os;
  os << "beta=" << s.beta << ", r=" << s.r << ", A^2=" << s.a_sq;
  switch (s.census.mode) {
    case CensusKnowledge::Mode::Known: {
      os << ", census known (";
      bool first = true;
      for (const auto& f : s.census.known->fibers) {
        if (!first) os << ", ";
        first = false;
        os << f.count << "x" << f.type.str();
      }
      os << ")";
      break;
    }
    case CensusKnowledge::Mode::Declared: {
      os << ", declared types {";
      bool first = true;
      for (FiberType t : s.census.declared) {
        if (!first) os << ", ";
        first = false;
        os << fiber_type_name(t);
      }
      os << "}";
      break;
    }
    case CensusKnowledge::Mode::Unknown:
      os << ", census unknown";
      break;
  }
  return os.str();
}

void validate(const SurfaceSummary& s) {
  if (s.r < 1) throw InconsistentSummary("summary needs r >= 1");
  if (s.census.mode == CensusKnowledge::Mode::Known) {
    if (!s.census.known) throw InconsistentSummary("known census missing");
    if (s.census.known->beta != s.beta) {
      throw InconsistentSummary("census beta " + std::to_string(s.census.known->beta) +
                                " does not match summary beta " + std::to_string(s.beta));
    }
  }
}

const char* kChiNegativeCitation =
    "chi(Omega^1 x A) = A^2 - 10*beta < 0 forces h^1(Omega^1 x A) != 0, "
    "and Bott vanishing fails";
const char* kR1Citation =
    "r = 1: h^1(Omega^1 x A) != 0 iff A^2 <= 21*beta - 3 or a type II fiber occurs";
const char* kA2ThresholdCitation =
    "r >= 2 and A^2 >= 2*r^2*beta + 25*r*beta - 4*r - 2*beta certify "
    "A - (12*beta - 2)E nef and big; then h^1 != 0 iff a type III (r = 2) "
    "or type IV (r = 3) fiber occurs";
const char* kCor12BetaCitation =
    "A - (12*beta - 2)E nef and big: h^1 != 0 iff a type III (r = 2) or "
    "type IV (r = 3) fiber occurs; no fiber type obstructs r >= 4";
const char* kForwardCitation =
    "A - beta*E nef and big and the obstructing fiber type (II/III/IV for "
    "r = 1/2/3) occurs: h^1(Omega^1 x A) != 0";
const char* kConverseCitation =
    "A - beta*E nef and big with h^0(L) - h^0(L - E) = r for "
    "L = A - (11*beta - 1)E: h^1 = 0 once no obstructing fiber type occurs";

}  // namespace

Verdict decide_h1(const SurfaceSummary& s) {
  validate(s);
  Verdict v;
  v.chi = chi_omega1_twist(s.a_sq, s.beta);
  if (s.r >= 2) v.a2_threshold_value = a2_threshold(s.r, s.beta);
  const std::string inputs = describe_inputs(s);

  // (1) negative Euler characteristic: unconditional obstruction
  if (v.chi < 0) {
    v.h1 = H1State::Nonzero;
    v.trace.push_back({RuleId::ChiNegative, kChiNegativeCitation,
                       inputs + ", chi=" + std::to_string(v.chi)});
    return v;
  }

  // (2) the exact r = 1 criterion
  if (s.r == 1) {
    const long long bound = 21ll * s.beta - 3;
    if (s.a_sq <= bound) {
      v.h1 = H1State::Nonzero;
      v.trace.push_back({RuleId::R1Theorem, kR1Citation,
                         inputs + ", A^2 <= " + std::to_string(bound)});
      return v;
    }
    const Presence p = presence(s, FiberType::II);
    if (s.beta == 0) {
      v.notes.push_back(
          "beta = 0: the bound A^2 <= -3 is unsatisfiable and a trivial "
          "fibration has no singular fibers, so h^1 = 0");
    }
    switch (p) {
      case Presence::Present:
        v.h1 = H1State::Nonzero;
        v.trace.push_back({RuleId::R1Theorem, kR1Citation, inputs + ", type II present"});
        return v;
      case Presence::Absent:
        v.h1 = H1State::Zero;
        v.trace.push_back({RuleId::R1Theorem, kR1Citation,
                           inputs + ", A^2 > " + std::to_string(bound) + ", no type II"});
        return v;
      case Presence::Unknown:
        v.h1 = H1State::Conditional;
        v.conditional_types = {FiberType::II};
        v.trace.push_back({RuleId::R1Theorem, kR1Citation,
                           inputs + ", A^2 > " + std::to_string(bound) +
                               ", census unknown: conditional on type II"});
        return v;
    }
  }

  // (3) r >= 2 under a large-A^2 or certified 12*beta - 2 twist
  const bool threshold_met = s.a_sq >= *v.a2_threshold_value;
  const bool twist_certified = s.has_nef_big(12ll * s.beta - 2);
  if (threshold_met || twist_certified) {
    const RuleId rule = threshold_met ? RuleId::CorA2Threshold : RuleId::Cor12Beta;
    const char* citation = threshold_met ? kA2ThresholdCitation : kCor12BetaCitation;
    const std::optional<FiberType> obstruct = obstructing_type(s.r);
    if (!obstruct) {
      v.h1 = H1State::Zero;
      v.notes.push_back("r >= 4: the criterion lists no obstructing fiber type, so h^1 = 0");
      v.trace.push_back({rule, citation, inputs + ", r >= 4"});
      return v;
    }
    switch (presence(s, *obstruct)) {
      case Presence::Present:
        v.h1 = H1State::Nonzero;
        v.trace.push_back({rule, citation,
                           inputs + ", type " + fiber_type_name(*obstruct) + " present"});
        return v;
      case Presence::Absent:
        v.h1 = H1State::Zero;
        v.trace.push_back({rule, citation,
                           inputs + ", type " + fiber_type_name(*obstruct) + " absent"});
        return v;
      case Presence::Unknown:
        v.h1 = H1State::Conditional;
        v.conditional_types = {*obstruct};
        v.trace.push_back({rule, citation,
                           inputs + ", census unknown: conditional on type " +
                               fiber_type_name(*obstruct)});
        return v;
    }
  }

  // (4) nef-and-big twist by beta, forward and (with the section gap) converse
  if (s.has_nef_big(s.beta)) {
    const std::optional<FiberType> obstruct = obstructing_type(s.r);
    const Presence p = obstruct ? presence(s, *obstruct) : Presence::Absent;
    if (obstruct && p == Presence::Present) {
      v.h1 = H1State::Nonzero;
      v.trace.push_back({RuleId::ForwardFiberObstruction, kForwardCitation,
                         inputs + ", type " + fiber_type_name(*obstruct) + " present"});
      return v;
    }
    if (s.h0_gap_equals_r) {
      if (p == Presence::Absent) {
        v.h1 = H1State::Zero;
        v.trace.push_back({RuleId::ConverseWithH0Gap, kConverseCitation,
                           inputs + ", gap certified, no obstructing type"});
        return v;
      }
      // presence unknown: both directions are available, so the answer is
      // exactly "h^1 != 0 iff the obstructing type occurs"
      v.h1 = H1State::Conditional;
      v.conditional_types = {*obstruct};
      v.trace.push_back({RuleId::ForwardFiberObstruction, kForwardCitation, inputs});
      v.trace.push_back({RuleId::ConverseWithH0Gap, kConverseCitation,
                         inputs + ", gap certified: conditional on type " +
                             fiber_type_name(*obstruct)});
      return v;
    }
  }

  // (5) nothing applies
  v.h1 = H1State::Undetermined;
  return v;
}

namespace {

/// The stored facts, plus what the A^2 bound certifies on its own:
/// meeting the threshold makes A - (12*beta - 2)E nef and big, which
/// covers every smaller shift.
bool has_nef_big_certified(const SurfaceSummary& s, long long k) {
  if (s.has_nef_big(k)) return true;
  return s.r >= 2 && s.a_sq >= a2_threshold(s.r, s.beta) && 12ll * s.beta - 2 >= k;
}

void append_family_rules(const SurfaceSummary& s, Verdict& v) {
  if (!s.family) return;
  const long long beta = s.beta;
  const long long m = s.family->m;
  if (s.family->kind == FamilyKind::WeierstrassSection && m > 11 * beta - 1) {
    v.trace.insert(v.trace.begin(),
                   {RuleId::R1Family,
                    "section polarization A_0 + mE with m > 11*beta - 1: Bott "
                    "vanishing holds iff there is no type II fiber",
                    "m=" + std::to_string(m) + ", beta=" + std::to_string(beta)});
  } else if (s.family->kind == FamilyKind::CompleteIntersection && m > 12 * beta - 2) {
    v.trace.insert(v.trace.begin(),
                   {RuleId::R4Family,
                    "complete intersection of two quadric-fibered hypersurfaces "
                    "with m > 12*(a + b) - 2: Bott vanishing holds",
                    "m=" + std::to_string(m) + ", beta=" + std::to_string(beta)});
  }
}

}  // namespace

Verdict decide_bott(const SurfaceSummary& s) {
  Verdict v = decide_h1(s);

  if (v.chi < 0) {
    v.bott = BottState::Fails;
    v.bott_basis = "chi(Omega^1 x A) < 0 already falsifies Bott vanishing";
    append_family_rules(s, v);
    return v;
  }

  if (has_nef_big_certified(s, static_cast<long long>(s.beta) - 2)) {
    v.bott_basis =
        "A - (beta - 2)E nef and big: Bott vanishing holds iff h^1(Omega^1 x A) = 0";
    switch (v.h1) {
      case H1State::Zero: v.bott = BottState::Holds; break;
      case H1State::Nonzero: v.bott = BottState::Fails; break;
      case H1State::Conditional: v.bott = BottState::Conditional; break;
      case H1State::Undetermined: v.bott = BottState::Undetermined; break;
    }
  } else if (v.h1 == H1State::Nonzero) {
    v.bott = BottState::Fails;
    v.bott_basis = "h^1(Omega^1 x A) != 0 falsifies Bott vanishing directly";
  } else {
    v.bott = BottState::Undetermined;
    v.bott_basis = "no certificate that A - (beta - 2)E is nef and big";
  }
  append_family_rules(s, v);
  return v;
}

}  // namespace ellbott
