#pragma once

#include <cstdint>
#include <vector>

namespace ellbott {

/// Integer cohomology of P^1 x P^n: classes D (fiber of the first
/// projection, D^2 = 0) and B (hyperplane from the second factor,
/// B^(n+1) = 0); the point class is D * B^n.
class AmbientRing {
 public:
  explicit AmbientRing(unsigned n);
  unsigned n() const { return n_; }

  friend bool operator==(const AmbientRing& a, const AmbientRing& b) { return a.n_ == b.n_; }

 private:
  unsigned n_;
};

/// Integer combination of the monomials D^e1 B^e2 with e1 <= 1, e2 <= n.
class CycleClass {
 public:
  explicit CycleClass(const AmbientRing& ring);
  static CycleClass one(const AmbientRing& ring);
  static CycleClass D(const AmbientRing& ring);
  static CycleClass B(const AmbientRing& ring);
  /// m*D + b*B, the divisor classes the families use.
  static CycleClass divisor(const AmbientRing& ring, long long m, long long b);

  const AmbientRing& ring() const { return ring_; }
  long long at(unsigned e1, unsigned e2) const;
  void set(unsigned e1, unsigned e2, long long c);

  friend CycleClass operator+(const CycleClass& a, const CycleClass& b);
  friend CycleClass operator*(const CycleClass& a, const CycleClass& b);
  friend CycleClass operator*(long long s, const CycleClass& a);

  friend bool operator==(const CycleClass& a, const CycleClass& b) {
    return a.ring_ == b.ring_ && a.coeff_ == b.coeff_;
  }

 private:
  AmbientRing ring_;
  std::vector<long long> coeff_;  // index e1 * (n + 1) + e2
};

/// A surface cut out of P^1 x P^n by hypersurface classes (empty list for
/// the whole P^1 x P^1), optionally reached by a double cover, which
/// multiplies every point count by the covering degree.
class SubvarietySpec {
 public:
  SubvarietySpec(AmbientRing ambient, std::vector<CycleClass> cutting_classes,
                 unsigned cover_degree = 1);

  const AmbientRing& ambient() const { return ambient_; }
  const std::vector<CycleClass>& cutting_classes() const { return cutting_; }
  unsigned cover_degree() const { return cover_degree_; }

 private:
  AmbientRing ambient_;
  std::vector<CycleClass> cutting_;
  unsigned cover_degree_;
};

/// Coefficient of the point class in c1 * c2 * [X], times the covering
/// degree. Throws DegreeMismatch when the product does not land purely in
/// the top degree.
long long intersection_number(const SubvarietySpec& spec, const CycleClass& c1,
                              const CycleClass& c2);

}  // namespace ellbott
