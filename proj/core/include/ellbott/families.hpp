#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>

#include "ellbott/weierstrass.hpp"

namespace ellbott {

/// Elliptic surface with a section, polarized by A = A_0 + mE; r = 1.
struct WeierstrassSectionSpec {
  WeierstrassData data;
  long long m;
};

/// Double cover of P^1 x P^1 branched over a smooth curve of bidegree
/// (2l, 4), polarized by O(m, 1); r = 2, beta = l.
struct DoubleCoverSpec {
  unsigned l;
  long long m;
  std::optional<std::set<FiberType>> declared_types;  // which of II/III/IV occur
};

/// Smooth hypersurface of bidegree (a, 3) in P^1 x P^2, polarized by
/// O(m, 1); r = 3, beta = a.
struct HypersurfaceSpec {
  unsigned a;
  long long m;
  std::optional<std::set<FiberType>> declared_types;
};

/// Complete intersection of hypersurfaces of bidegrees (a, 2) and (b, 2)
/// in P^1 x P^3, polarized by O(m, 1); r = 4, beta = a + b.
struct CompleteIntersectionSpec {
  unsigned a, b;
  long long m;
  std::optional<std::set<FiberType>> declared_types;
};

using FamilySpec = std::variant<WeierstrassSectionSpec, DoubleCoverSpec, HypersurfaceSpec,
                                CompleteIntersectionSpec>;

/// What is known about the singular fibers.
struct CensusKnowledge {
  enum class Mode { Known, Declared, Unknown };
  Mode mode = Mode::Unknown;
  std::optional<FiberCensus> known;
  std::set<FiberType> declared;  // complete assertion over {II, III, IV}

  static CensusKnowledge from_census(FiberCensus c);
  static CensusKnowledge from_declared(std::set<FiberType> types);
  static CensusKnowledge unknown() { return {}; }
};

enum class FamilyKind {
  WeierstrassSection,
  DoubleCover,
  Hypersurface,
  CompleteIntersection,
};

std::string family_kind_name(FamilyKind k);

/// Which family a summary came from, if any, with the parameter m; lets
/// the decision engine cite the family-level criteria.
struct FamilyContext {
  FamilyKind kind;
  long long m;
};

/// Everything the decision engine consumes: the numeric invariants, the
/// fiber knowledge, and the certified positivity facts.
struct SurfaceSummary {
  unsigned beta = 0;
  unsigned r = 1;
  long long a_sq = 0;
  CensusKnowledge census;
  /// k-values with A - kE certified nef and big. Adding a nonnegative
  /// multiple of the nef fiber class preserves nef and big, so a certified
  /// k covers every smaller k.
  std::set<long long> nef_big_shifts;
  /// h^0(L) - h^0(L - E) = r certified for L = A - (11*beta - 1)E.
  bool h0_gap_equals_r = false;
  std::optional<FamilyContext> family;

  bool has_nef_big(long long k) const;
};

/// Numeric invariants and census for a family member:
/// section case -> (beta, r = 1, A^2 = 2m - beta, census classified);
/// double cover -> (l, 2, 4m); hypersurface -> (a, 3, 6m + a);
/// complete intersection -> (a + b, 4, 8m + 2a + 2b), the last three
/// through the intersection calculator.
SurfaceSummary build_summary(const FamilySpec& spec);

struct H0Gap {
  long long h0_L;
  long long h0_L_minus_E;
  long long gap;
};

/// Closed-form section counts for L = A - (11*beta - 1)E on the double
/// cover and hypersurface families; valid for m >= 11*beta - 1, otherwise
/// throws OutOfValidityRange and no fact may be attached.
H0Gap h0_gap_fact(const FamilySpec& spec);

/// The k-values with A - kE certified nef and big for this family member.
std::set<long long> nef_big_facts(const FamilySpec& spec);

}  // namespace ellbott
