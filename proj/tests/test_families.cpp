#include <doctest.h>

#include "ellbott/errors.hpp"
#include "ellbott/families.hpp"
#include "test_util.hpp"

using namespace ellbott;
using testutil::form;
using testutil::t_pow;

namespace {

WeierstrassData worked_model(unsigned beta) {
  return WeierstrassData(beta, form(4 * beta, t_pow(4 * beta)),
                         form(6 * beta, t_pow(6 * beta) + t_pow(1)));
}

}  // namespace

TEST_CASE("summaries of the four families") {
  const SurfaceSummary ws = build_summary(WeierstrassSectionSpec{worked_model(1), 12});
  CHECK(ws.beta == 1);
  CHECK(ws.r == 1);
  CHECK(ws.a_sq == 23);
  REQUIRE(ws.census.mode == CensusKnowledge::Mode::Known);
  CHECK(ws.census.known->has_type(FiberType::II));
  CHECK(ws.census.known->beta == ws.beta);

  const SurfaceSummary dc = build_summary(DoubleCoverSpec{1, 10, std::nullopt});
  CHECK(dc.beta == 1);
  CHECK(dc.r == 2);
  CHECK(dc.a_sq == 40);
  CHECK(dc.census.mode == CensusKnowledge::Mode::Unknown);

  const SurfaceSummary hs = build_summary(HypersurfaceSpec{2, 7, std::set<FiberType>{}});
  CHECK(hs.beta == 2);
  CHECK(hs.r == 3);
  CHECK(hs.a_sq == 44);
  CHECK(hs.census.mode == CensusKnowledge::Mode::Declared);
  CHECK(hs.census.declared.empty());

  const SurfaceSummary ci = build_summary(CompleteIntersectionSpec{1, 1, 23, std::nullopt});
  CHECK(ci.beta == 2);
  CHECK(ci.r == 4);
  CHECK(ci.a_sq == 188);
}

TEST_CASE("ampleness range and parameter validation") {
  CHECK_THROWS_AS(build_summary(DoubleCoverSpec{1, 0, std::nullopt}), AmplenessRangeViolated);
  CHECK_THROWS_AS(build_summary(HypersurfaceSpec{1, -3, std::nullopt}), AmplenessRangeViolated);
  CHECK_THROWS_AS(build_summary(DoubleCoverSpec{0, 5, std::nullopt}), ModelError);
  CHECK_THROWS_AS(CensusKnowledge::from_declared({FiberType::I}), ModelError);
}

TEST_CASE("section gap closed forms") {
  const H0Gap dc = h0_gap_fact(DoubleCoverSpec{1, 10, std::nullopt});
  CHECK(dc.h0_L == 2);
  CHECK(dc.h0_L_minus_E == 0);
  CHECK(dc.gap == 2);

  const H0Gap hs = h0_gap_fact(HypersurfaceSpec{1, 10, std::nullopt});
  CHECK(hs.h0_L == 3);
  CHECK(hs.h0_L_minus_E == 0);
  CHECK(hs.gap == 3);

  const H0Gap dc2 = h0_gap_fact(DoubleCoverSpec{2, 21, std::nullopt});
  CHECK(dc2.gap == 2);

  // below the certified range the fact must not be produced
  CHECK_THROWS_AS(h0_gap_fact(DoubleCoverSpec{2, 20, std::nullopt}), OutOfValidityRange);
  CHECK_THROWS_AS(h0_gap_fact(CompleteIntersectionSpec{1, 1, 23, std::nullopt}),
                  OutOfValidityRange);
  CHECK_THROWS_AS(h0_gap_fact(WeierstrassSectionSpec{worked_model(1), 12}), OutOfValidityRange);
}

TEST_CASE("the gap equals r across the certified range") {
  for (unsigned l = 1; l <= 3; ++l) {
    for (long long m = 11 * l - 1; m <= 11 * l + 6; ++m) {
      CHECK(h0_gap_fact(DoubleCoverSpec{l, m, std::nullopt}).gap == 2);
      const SurfaceSummary s = build_summary(DoubleCoverSpec{l, m, std::nullopt});
      CHECK(s.h0_gap_equals_r);
    }
  }
  for (unsigned a = 1; a <= 3; ++a) {
    for (long long m = 11 * a - 1; m <= 11 * a + 6; ++m) {
      CHECK(h0_gap_fact(HypersurfaceSpec{a, m, std::nullopt}).gap == 3);
    }
  }
  CHECK_FALSE(build_summary(DoubleCoverSpec{2, 20, std::nullopt}).h0_gap_equals_r);
}

TEST_CASE("certified nef-and-big shifts") {
  const SurfaceSummary dc = build_summary(DoubleCoverSpec{1, 10, std::nullopt});
  CHECK(dc.has_nef_big(1));    // A - beta E: m - 1 = 9 > 0
  CHECK(dc.has_nef_big(-1));   // A - (beta - 2)E
  CHECK_FALSE(dc.has_nef_big(10));  // m - (12 beta - 2) = 0: not certified

  // at A^2 = 48 = threshold(2, 1) the 12*beta - 2 shift becomes certified
  const SurfaceSummary dc12 = build_summary(DoubleCoverSpec{1, 12, std::nullopt});
  CHECK(dc12.a_sq == 48);
  CHECK(dc12.has_nef_big(10));

  const SurfaceSummary ws = build_summary(WeierstrassSectionSpec{worked_model(1), 12});
  CHECK(ws.has_nef_big(1));   // A^2 = 23 >= 3 beta
  CHECK(ws.has_nef_big(-1));

  // A^2 below 3 beta certifies nothing for the section family
  const SurfaceSummary tight = build_summary(WeierstrassSectionSpec{worked_model(3), 2});
  CHECK(tight.a_sq == 1);
  CHECK(tight.nef_big_shifts.empty());
}

TEST_CASE("certified shift covers every smaller twist") {
  SurfaceSummary s;
  s.beta = 2;
  s.nef_big_shifts = {10};
  CHECK(s.has_nef_big(10));
  CHECK(s.has_nef_big(0));
  CHECK(s.has_nef_big(-5));
  CHECK_FALSE(s.has_nef_big(11));

  SurfaceSummary trivial;
  trivial.beta = 0;
  CHECK(trivial.has_nef_big(-2));  // A + 2E is ample outright
  CHECK(trivial.has_nef_big(0));
  CHECK_FALSE(trivial.has_nef_big(1));
}

TEST_CASE("self-intersection parity by family") {
  for (long long m = 1; m <= 5; ++m) {
    for (unsigned p = 1; p <= 3; ++p) {
      const SurfaceSummary ws = build_summary(WeierstrassSectionSpec{worked_model(p), m});
      CHECK(((ws.a_sq % 2) + 2) % 2 == p % 2);
      const SurfaceSummary dc = build_summary(DoubleCoverSpec{p, m, std::nullopt});
      CHECK(dc.a_sq % 2 == 0);
      const SurfaceSummary hs = build_summary(HypersurfaceSpec{p, m, std::nullopt});
      CHECK(((hs.a_sq % 2) + 2) % 2 == p % 2);
      const SurfaceSummary ci = build_summary(CompleteIntersectionSpec{p, p, m, std::nullopt});
      CHECK(ci.a_sq % 2 == 0);
    }
  }
}
