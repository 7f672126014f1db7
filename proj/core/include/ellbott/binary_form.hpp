#pragma once

#include <span>
#include <string>
#include <vector>

#include "ellbott/unipoly.hpp"

namespace ellbott {

/// Homogeneous binary form of fixed degree on the projective line, stored
/// through its affine part f(t) in the standard chart. The order of
/// vanishing at infinity is degree - deg(affine part); a zero affine part
/// means the identically-zero form.
class BinaryForm {
 public:
  BinaryForm(unsigned degree, UniPoly affine);

  unsigned degree() const { return degree_; }
  const UniPoly& affine() const { return affine_; }
  bool identically_zero() const { return affine_.is_zero(); }
  unsigned order_at_infinity() const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Rational& s, const BinaryForm& f);
  BinaryForm pow(unsigned e) const;
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.affine_ == b.affine_;
  }

 private:
  unsigned degree_;
  UniPoly affine_;
};

/// Closed-point locus on the line: either the point at infinity or the
/// vanishing locus of a monic squarefree nonconstant polynomial. The
/// residue degree counts the geometric points in the locus.
class Place {
 public:
  static Place at_infinity();
  static Place finite(UniPoly defining);

  bool is_infinity() const { return infinity_; }
  const UniPoly& defining() const;
  unsigned residue_degree() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.infinity_ == b.infinity_ && a.defining_ == b.defining_;
  }
  std::string str() const;

 private:
  Place() : infinity_(true) {}
  bool infinity_;
  UniPoly defining_;
};

/// Order of vanishing of f at the place p; throws IdenticallyZeroForm
/// when f is the zero form.
unsigned vanishing_order(const BinaryForm& f, const Place& p);

/// A place together with the (constant) vanishing orders of a list of
/// forms along it.
struct OrderCluster {
  Place place;
  std::vector<unsigned> orders;  // one entry per input form
};

/// Splits the union of the zero loci of the given forms into pairwise
/// coprime squarefree pieces (plus the point at infinity when some form
/// vanishes there) on which every input form has constant vanishing
/// order, and records those orders. No form may be identically zero.
std::vector<OrderCluster> coprime_refinement(std::span<const BinaryForm> forms);

}  // namespace ellbott
