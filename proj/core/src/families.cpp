#include "ellbott/families.hpp"

#include "ellbott/criteria.hpp"
#include "ellbott/errors.hpp"
#include "ellbott/intersect.hpp"

namespace ellbott {

CensusKnowledge CensusKnowledge::from_census(FiberCensus c) {
  CensusKnowledge k;
  k.mode = Mode::Known;
  k.known = std::move(c);
  return k;
}

CensusKnowledge CensusKnowledge::from_declared(std::set<FiberType> types) {
  for (FiberType t : types) {
    if (t == FiberType::I) {
      throw ModelError("declared fiber types are asserted over II/III/IV only");
    }
  }
  CensusKnowledge k;
  k.mode = Mode::Declared;
  k.declared = std::move(types);
  return k;
}

std::string family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::WeierstrassSection: return "weierstrass";
    case FamilyKind::DoubleCover: return "double_cover";
    case FamilyKind::Hypersurface: return "hypersurface";
    case FamilyKind::CompleteIntersection: return "complete_intersection";
  }
  return "?";
}

bool SurfaceSummary::has_nef_big(long long k) const {
  // A certified A - k0 E covers every k <= k0 (adding a nonnegative
  // multiple of the nef fiber class). With beta = 0 and k <= 0 the class
  // A - kE is ample outright.
  if (beta == 0 && k <= 0) return true;
  for (long long k0 : nef_big_shifts) {
    if (k0 >= k) return true;
  }
  return false;
}

namespace {

void check_ample_range(long long m) {
  if (m < 1) {
    throw AmplenessRangeViolated("O(m, 1) needs m >= 1 to be ample, got m = " +
                                 std::to_string(m));
  }
}

CensusKnowledge knowledge_from(const std::optional<std::set<FiberType>>& declared) {
  return declared ? CensusKnowledge::from_declared(*declared) : CensusKnowledge::unknown();
}

struct AmbientNumbers {
  long long r;
  long long a_sq;
};

AmbientNumbers product_numbers(unsigned n, const std::vector<std::pair<long long, long long>>& cuts,
                               unsigned cover_degree, long long m) {
  AmbientRing ring(n);
  std::vector<CycleClass> cutting;
  cutting.reserve(cuts.size());
  for (const auto& [cd, cb] : cuts) cutting.push_back(CycleClass::divisor(ring, cd, cb));
  SubvarietySpec spec(ring, std::move(cutting), cover_degree);
  const CycleClass A = CycleClass::divisor(ring, m, 1);
  const CycleClass E = CycleClass::D(ring);
  return AmbientNumbers{intersection_number(spec, A, E), intersection_number(spec, A, A)};
}

}  // namespace

SurfaceSummary build_summary(const FamilySpec& spec) {
  SurfaceSummary s;
  if (const auto* ws = std::get_if<WeierstrassSectionSpec>(&spec)) {
    s.beta = ws->data.beta();
    s.r = 1;
    s.a_sq = 2 * ws->m - static_cast<long long>(s.beta);
    s.census = CensusKnowledge::from_census(ws->data.classify_fibers());
    s.family = FamilyContext{FamilyKind::WeierstrassSection, ws->m};
  } else if (const auto* dc = std::get_if<DoubleCoverSpec>(&spec)) {
    if (dc->l < 1) throw ModelError("double cover needs l >= 1");
    check_ample_range(dc->m);
    s.beta = dc->l;
    const AmbientNumbers nums = product_numbers(1, {}, 2, dc->m);
    s.r = static_cast<unsigned>(nums.r);
    s.a_sq = nums.a_sq;
    s.census = knowledge_from(dc->declared_types);
    s.family = FamilyContext{FamilyKind::DoubleCover, dc->m};
  } else if (const auto* hs = std::get_if<HypersurfaceSpec>(&spec)) {
    if (hs->a < 1) throw ModelError("hypersurface needs a >= 1");
    check_ample_range(hs->m);
    s.beta = hs->a;
    const AmbientNumbers nums = product_numbers(2, {{hs->a, 3}}, 1, hs->m);
    s.r = static_cast<unsigned>(nums.r);
    s.a_sq = nums.a_sq;
    s.census = knowledge_from(hs->declared_types);
    s.family = FamilyContext{FamilyKind::Hypersurface, hs->m};
  } else {
    const auto& ci = std::get<CompleteIntersectionSpec>(spec);
    if (ci.a < 1 || ci.b < 1) throw ModelError("complete intersection needs a, b >= 1");
    check_ample_range(ci.m);
    s.beta = ci.a + ci.b;
    const AmbientNumbers nums = product_numbers(3, {{ci.a, 2}, {ci.b, 2}}, 1, ci.m);
    s.r = static_cast<unsigned>(nums.r);
    s.a_sq = nums.a_sq;
    s.census = knowledge_from(ci.declared_types);
    s.family = FamilyContext{FamilyKind::CompleteIntersection, ci.m};
  }

  s.nef_big_shifts = nef_big_facts(spec);
  try {
    const H0Gap gap = h0_gap_fact(spec);
    s.h0_gap_equals_r = gap.gap == static_cast<long long>(s.r);
  } catch (const OutOfValidityRange&) {
    // fact simply not certified
  }
  return s;
}

H0Gap h0_gap_fact(const FamilySpec& spec) {
  long long beta, m, per_fiber;
  if (const auto* dc = std::get_if<DoubleCoverSpec>(&spec)) {
    beta = dc->l;
    m = dc->m;
    per_fiber = 2;
  } else if (const auto* hs = std::get_if<HypersurfaceSpec>(&spec)) {
    beta = hs->a;
    m = hs->m;
    per_fiber = 3;
  } else {
    throw OutOfValidityRange(
        "section gap is certified for the double-cover and hypersurface families only");
  }
  if (m < 11 * beta - 1) {
    throw OutOfValidityRange("section gap needs m >= 11*beta - 1 = " +
                             std::to_string(11 * beta - 1) + ", got m = " + std::to_string(m));
  }
  H0Gap gap{};
  gap.h0_L = per_fiber * (m - (11 * beta - 1) + 1);
  gap.h0_L_minus_E = per_fiber * (m - 11 * beta + 1);
  gap.gap = gap.h0_L - gap.h0_L_minus_E;
  return gap;
}

namespace {

std::set<long long> twisted_class_facts(long long beta, long long m) {
  // O(m - k, 1) restricted from the ambient product is ample when
  // m - k > 0, hence nef and big.
  std::set<long long> ks;
  for (long long k : {beta - 2, beta, 12 * beta - 2}) {
    if (m - k > 0) ks.insert(k);
  }
  return ks;
}

}  // namespace

std::set<long long> nef_big_facts(const FamilySpec& spec) {
  std::set<long long> ks;
  if (const auto* ws = std::get_if<WeierstrassSectionSpec>(&spec)) {
    const long long beta = ws->data.beta();
    const long long a_sq = 2 * ws->m - beta;
    // A - beta E = A_0 + (m - beta)E is nef and big once A^2 >= 3*beta,
    // and then A - (beta - 2)E gains the two extra nef fiber classes.
    if (a_sq >= 3 * beta) {
      ks.insert(beta);
      ks.insert(beta - 2);
    }
    return ks;
  }
  long long beta, m;
  unsigned r;
  if (const auto* dc = std::get_if<DoubleCoverSpec>(&spec)) {
    beta = dc->l;
    m = dc->m;
    r = 2;
  } else if (const auto* hs = std::get_if<HypersurfaceSpec>(&spec)) {
    beta = hs->a;
    m = hs->m;
    r = 3;
  } else {
    const auto& ci = std::get<CompleteIntersectionSpec>(spec);
    beta = ci.a + ci.b;
    m = ci.m;
    r = 4;
  }
  ks = twisted_class_facts(beta, m);
  long long a_sq = 0;
  switch (r) {
    case 2: a_sq = 4 * m; break;
    case 3: a_sq = 6 * m + beta; break;
    default: a_sq = 8 * m + 2 * beta; break;
  }
  if (a_sq >= a2_threshold(r, static_cast<unsigned>(beta))) {
    ks.insert(12 * beta - 2);
  }
  return ks;
}

}  // namespace ellbott
