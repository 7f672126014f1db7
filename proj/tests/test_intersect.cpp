#include <doctest.h>

#include "ellbott/criteria.hpp"
#include "ellbott/errors.hpp"
#include "ellbott/intersect.hpp"

using namespace ellbott;

namespace {

SubvarietySpec double_cover_spec() {
  AmbientRing ring(1);
  return SubvarietySpec(ring, {}, 2);
}

SubvarietySpec hypersurface_spec(long long a) {
  AmbientRing ring(2);
  return SubvarietySpec(ring, {CycleClass::divisor(ring, a, 3)}, 1);
}

SubvarietySpec ci_spec(long long a, long long b) {
  AmbientRing ring(3);
  return SubvarietySpec(ring,
                        {CycleClass::divisor(ring, a, 2), CycleClass::divisor(ring, b, 2)}, 1);
}

}  // namespace

TEST_CASE("double cover of the quadric surface") {
  const AmbientRing ring(1);
  const SubvarietySpec spec = double_cover_spec();
  for (long long m = 1; m <= 5; ++m) {
    const CycleClass A = CycleClass::divisor(ring, m, 1);
    const CycleClass E = CycleClass::D(ring);
    CHECK(intersection_number(spec, A, E) == 2);
    CHECK(intersection_number(spec, A, A) == 4 * m);
    CHECK(intersection_number(spec, E, E) == 0);
  }
}

TEST_CASE("hypersurface of bidegree (a, 3)") {
  for (long long a = 1; a <= 5; ++a) {
    const AmbientRing ring(2);
    const SubvarietySpec spec = hypersurface_spec(a);
    for (long long m = 1; m <= 5; ++m) {
      const CycleClass A = CycleClass::divisor(ring, m, 1);
      const CycleClass E = CycleClass::D(ring);
      CHECK(intersection_number(spec, A, E) == 3);
      CHECK(intersection_number(spec, A, A) == 6 * m + a);
      CHECK(intersection_number(spec, E, E) == 0);
    }
  }
}

TEST_CASE("complete intersection of two (., 2) hypersurfaces") {
  for (long long a = 1; a <= 5; ++a) {
    for (long long b = 1; b <= 5; ++b) {
      const AmbientRing ring(3);
      const SubvarietySpec spec = ci_spec(a, b);
      for (long long m = 1; m <= 5; ++m) {
        const CycleClass A = CycleClass::divisor(ring, m, 1);
        const CycleClass E = CycleClass::D(ring);
        CHECK(intersection_number(spec, A, E) == 4);
        CHECK(intersection_number(spec, A, A) == 2 * a + 2 * b + 8 * m);
        CHECK(intersection_number(spec, E, E) == 0);
      }
    }
  }
}

TEST_CASE("bilinearity and symmetry") {
  const AmbientRing ring(2);
  const SubvarietySpec spec = hypersurface_spec(2);
  const CycleClass c1 = CycleClass::divisor(ring, 3, 1);
  const CycleClass c2 = CycleClass::divisor(ring, 1, 2);
  const CycleClass c3 = CycleClass::divisor(ring, -2, 5);
  CHECK(intersection_number(spec, c1, c2) == intersection_number(spec, c2, c1));
  CHECK(intersection_number(spec, c1 + c3, c2) ==
        intersection_number(spec, c1, c2) + intersection_number(spec, c3, c2));
  CHECK(intersection_number(spec, 7 * c1, c2) == 7 * intersection_number(spec, c1, c2));
}

TEST_CASE("off-top-degree products are rejected") {
  const AmbientRing ring(2);
  const SubvarietySpec spec = hypersurface_spec(1);
  CHECK_THROWS_AS(intersection_number(spec, CycleClass::one(ring), CycleClass::D(ring)),
                  DegreeMismatch);
  // a surface needs n - 1 cutting classes
  CHECK_THROWS_AS(SubvarietySpec(ring, {}, 1), DegreeMismatch);
  // cutting classes must be hypersurface classes
  CycleClass quadratic(ring);
  quadratic.set(1, 1, 1);
  CHECK_THROWS_AS(SubvarietySpec(ring, {quadratic}, 1), DegreeMismatch);
}

TEST_CASE("Euler characteristic consistency across the families") {
  // beta is l, a, a + b; chi(Omega^1 x A) = A^2 - 10 beta on each family
  for (long long m = 1; m <= 4; ++m) {
    const AmbientRing r1(1);
    const CycleClass A1 = CycleClass::divisor(r1, m, 1);
    const long long dc = intersection_number(double_cover_spec(), A1, A1);
    for (long long l = 1; l <= 3; ++l) {
      CHECK(chi_omega1_twist(dc, static_cast<unsigned>(l)) == dc - 10 * l);
    }
    for (long long a = 1; a <= 3; ++a) {
      const AmbientRing r2(2);
      const CycleClass A2 = CycleClass::divisor(r2, m, 1);
      const long long hs = intersection_number(hypersurface_spec(a), A2, A2);
      CHECK(chi_omega1_twist(hs, static_cast<unsigned>(a)) == 6 * m + a - 10 * a);
      for (long long b = 1; b <= 3; ++b) {
        const AmbientRing r3(3);
        const CycleClass A3 = CycleClass::divisor(r3, m, 1);
        const long long ci = intersection_number(ci_spec(a, b), A3, A3);
        CHECK(chi_omega1_twist(ci, static_cast<unsigned>(a + b)) ==
              2 * a + 2 * b + 8 * m - 10 * (a + b));
      }
    }
  }
}
