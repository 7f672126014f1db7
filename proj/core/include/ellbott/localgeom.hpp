#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellbott/qmatrix.hpp"
#include "ellbott/rational.hpp"
#include "ellbott/weierstrass.hpp"

namespace ellbott {

/// Sparse bivariate polynomial over the rationals in local coordinates
/// (x, y) around a fiber singularity.
class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly constant(Rational c);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }
  static BiPoly monomial(Rational c, unsigned i, unsigned j);

  bool is_zero() const { return terms_.empty(); }
  Rational coeff(unsigned i, unsigned j) const;
  const std::map<std::pair<unsigned, unsigned>, Rational>& terms() const { return terms_; }

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Rational& s, const BiPoly& p);
  BiPoly pow(unsigned e) const;

  BiPoly dx() const;
  BiPoly dy() const;

  std::string str() const;

 private:
  void set(unsigned i, unsigned j, Rational c);
  std::map<std::pair<unsigned, unsigned>, Rational> terms_;
};

/// Local equation of a singular fiber at the origin; the origin must be a
/// critical point on the zero locus.
struct LocalEquation {
  BiPoly f;
  std::string label;

  LocalEquation(BiPoly f, std::string label);
};

/// The standard local models of the reduced singular fibers, keyed by
/// Kodaira type: I_1 -> x^2 - y^2, II -> x^2 - y^3, III -> x(x - y^2),
/// IV -> x(x^2 - y^2), I_n (n >= 2) -> xy at each node.
LocalEquation local_model(const KodairaType& type);

/// Dimension of the local quotient by the partial-derivative ideal,
/// truncated at total degree < truncation.
unsigned jacobian_dimension_at(const LocalEquation& eq, unsigned truncation);

/// Degree of the critical scheme at the origin. Starts at the given
/// truncation and doubles until two consecutive values agree; throws
/// NotStabilized when the dimension keeps growing (non-isolated
/// singularity).
unsigned jacobian_scheme_degree(const LocalEquation& eq, unsigned truncation = 6);

/// Degree of the singular scheme per singular point: I_n -> 1 (at each of
/// the n nodes), II -> 2, III -> 3, IV -> 4.
unsigned singular_scheme_degree(const KodairaType& type);

/// Explicit model of H^0(F, L) for a singular fiber F of the given type
/// with L of degree degrees[i] on the i-th component, together with the
/// matching conditions at the singular points.
struct SectionSpaceModel {
  KodairaType fiber_type;
  std::vector<unsigned> degrees;
  /// Type IV tangent-matching weights; any nonzero choice gives the same
  /// ranks (the derivative coordinates rescale along with them).
  std::array<Rational, 3> tangent_weights{Rational(1), Rational(1), Rational(1)};
};

struct RestrictionRank {
  unsigned h0_fiber;  // dim H^0(F, L)
  unsigned h0_s0;     // dim H^0(S_0, L) = degree of the singular scheme
  unsigned rank;      // rank of the restriction map
  bool surjective() const { return rank == h0_s0; }
};

/// Exact dimensions and rank of the restriction
/// H^0(F, L) -> H^0(S_0, L) to the singular scheme.
RestrictionRank restriction_rank(const SectionSpaceModel& model);

}  // namespace ellbott
