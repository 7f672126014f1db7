#include "ellbott/intersect.hpp"

#include <string>

#include "ellbott/errors.hpp"

namespace ellbott {

AmbientRing::AmbientRing(unsigned n) : n_(n) {
  if (n < 1) throw ModelError("the second projective factor needs dimension >= 1");
}

CycleClass::CycleClass(const AmbientRing& ring)
    : ring_(ring), coeff_(2 * (ring.n() + 1), 0) {}

CycleClass CycleClass::one(const AmbientRing& ring) {
  CycleClass c(ring);
  c.set(0, 0, 1);
  return c;
}

CycleClass CycleClass::D(const AmbientRing& ring) {
  CycleClass c(ring);
  c.set(1, 0, 1);
  return c;
}

CycleClass CycleClass::B(const AmbientRing& ring) {
  CycleClass c(ring);
  c.set(0, 1, 1);
  return c;
}

CycleClass CycleClass::divisor(const AmbientRing& ring, long long m, long long b) {
  CycleClass c(ring);
  c.set(1, 0, m);
  c.set(0, 1, b);
  return c;
}

long long CycleClass::at(unsigned e1, unsigned e2) const {
  if (e1 > 1 || e2 > ring_.n()) return 0;
  return coeff_[e1 * (ring_.n() + 1) + e2];
}

void CycleClass::set(unsigned e1, unsigned e2, long long c) {
  if (e1 > 1 || e2 > ring_.n()) {
    throw DegreeMismatch("monomial D^" + std::to_string(e1) + " B^" + std::to_string(e2) +
                         " is outside the truncated ring");
  }
  coeff_[e1 * (ring_.n() + 1) + e2] = c;
}

CycleClass operator+(const CycleClass& a, const CycleClass& b) {
  if (!(a.ring_ == b.ring_)) throw DegreeMismatch("cycle classes from different ambient rings");
  CycleClass r = a;
  for (std::size_t i = 0; i < r.coeff_.size(); ++i) r.coeff_[i] += b.coeff_[i];
  return r;
}

CycleClass operator*(const CycleClass& a, const CycleClass& b) {
  if (!(a.ring_ == b.ring_)) throw DegreeMismatch("cycle classes from different ambient rings");
  const unsigned n = a.ring_.n();
  CycleClass r(a.ring_);
  for (unsigned e1 = 0; e1 <= 1; ++e1) {
    for (unsigned e2 = 0; e2 <= n; ++e2) {
      const long long ca = a.at(e1, e2);
      if (ca == 0) continue;
      for (unsigned f1 = 0; f1 <= 1; ++f1) {
        for (unsigned f2 = 0; f2 <= n; ++f2) {
          const long long cb = b.at(f1, f2);
          if (cb == 0) continue;
          // D^2 = 0 and B^(n+1) = 0 truncate everything past the point class.
          if (e1 + f1 > 1 || e2 + f2 > n) continue;
          r.set(e1 + f1, e2 + f2, r.at(e1 + f1, e2 + f2) + ca * cb);
        }
      }
    }
  }
  return r;
}

CycleClass operator*(long long s, const CycleClass& a) {
  CycleClass r = a;
  for (auto& c : r.coeff_) c *= s;
  return r;
}

SubvarietySpec::SubvarietySpec(AmbientRing ambient, std::vector<CycleClass> cutting_classes,
                               unsigned cover_degree)
    : ambient_(ambient), cutting_(std::move(cutting_classes)), cover_degree_(cover_degree) {
  if (cover_degree_ != 1 && cover_degree_ != 2) {
    throw ModelError("cover degree must be 1 or 2");
  }
  if (cutting_.size() != ambient_.n() - 1) {
    throw DegreeMismatch("need n - 1 = " + std::to_string(ambient_.n() - 1) +
                         " hypersurface classes to cut a surface, got " +
                         std::to_string(cutting_.size()));
  }
  for (const CycleClass& c : cutting_) {
    if (!(c.ring() == ambient_)) throw DegreeMismatch("cutting class from a different ambient ring");
    for (unsigned e1 = 0; e1 <= 1; ++e1) {
      for (unsigned e2 = 0; e2 <= ambient_.n(); ++e2) {
        if (c.at(e1, e2) != 0 && e1 + e2 != 1) {
          throw DegreeMismatch("cutting classes must be hypersurface (degree-1) classes");
        }
      }
    }
  }
}

long long intersection_number(const SubvarietySpec& spec, const CycleClass& c1,
                              const CycleClass& c2) {
  const unsigned n = spec.ambient().n();
  CycleClass prod = c1 * c2;
  for (const CycleClass& cut : spec.cutting_classes()) prod = prod * cut;
  for (unsigned e1 = 0; e1 <= 1; ++e1) {
    for (unsigned e2 = 0; e2 <= n; ++e2) {
      if ((e1 != 1 || e2 != n) && prod.at(e1, e2) != 0) {
        throw DegreeMismatch("product does not land in the top degree: coefficient " +
                             std::to_string(prod.at(e1, e2)) + " at D^" + std::to_string(e1) +
                             " B^" + std::to_string(e2));
      }
    }
  }
  return static_cast<long long>(spec.cover_degree()) * prod.at(1, n);
}

}  // namespace ellbott
