#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ellbott/rational.hpp"

namespace ellbott {

/// Dense univariate polynomial over the rationals in one affine coordinate.
/// coeff(k) is the coefficient of t^k. The zero polynomial stores no
/// coefficients; otherwise the leading coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;  // zero

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(Rational c);
  static UniPoly monomial(Rational c, unsigned k);
  static UniPoly variable() { return monomial(1, 1); }
  /// Builds from low-to-high coefficients, trimming trailing zeros.
  static UniPoly from_coeffs(std::vector<Rational> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(unsigned k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& p);

  /// Quotient and remainder with deg(r) < deg(d); d must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& n, const UniPoly& d);
  /// Exact quotient; throws DivisionNotExact when the remainder is nonzero.
  UniPoly exact_div(const UniPoly& d) const;
  bool divisible_by(const UniPoly& d) const;
  /// Largest k with d^k dividing *this (0 for coprime); *this nonzero,
  /// d nonconstant.
  unsigned order_of(const UniPoly& d) const;

  UniPoly derivative() const;
  UniPoly monic() const;  // zero stays zero
  /// Positive-rational rescaling with coprime integer coefficients; keeps
  /// Euclidean remainder sequences from blowing up.
  UniPoly primitive_integer() const;
  UniPoly pow(unsigned e) const;
  Rational eval(const Rational& x) const;
  /// Substitution t -> t + c.
  UniPoly shift(const Rational& c) const;

  /// Monic gcd (zero when both inputs are zero).
  static UniPoly gcd(UniPoly a, UniPoly b);
  bool is_squarefree() const;
  /// Monic product of the distinct roots' linear factors (the radical);
  /// 1 for nonzero constants. Input must be nonzero.
  UniPoly squarefree_part() const;
  /// Radicals of the chain f, f/rad(f), ...: the k-th entry is the monic
  /// product of factors of multiplicity > k. Empty for constants.
  std::vector<UniPoly> chain_radicals() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  /// Deterministic total order (degree, then coefficients from the top).
  friend std::strong_ordering operator<=>(const UniPoly& a, const UniPoly& b);

  std::string str(const char* var = "t") const;
  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p);

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace ellbott
