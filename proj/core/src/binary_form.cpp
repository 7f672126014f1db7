#include "ellbott/binary_form.hpp"

#include <algorithm>
#include <stdexcept>

#include "ellbott/errors.hpp"

namespace ellbott {

BinaryForm::BinaryForm(unsigned degree, UniPoly affine)
    : degree_(degree), affine_(std::move(affine)) {
  if (affine_.degree() > static_cast<int>(degree_)) {
    throw Error(ErrorKind::Internal,
                "affine part of degree " + std::to_string(affine_.degree()) +
                    " exceeds form degree " + std::to_string(degree_));
  }
}

unsigned BinaryForm::order_at_infinity() const {
  if (affine_.is_zero()) return degree_;
  return degree_ - static_cast<unsigned>(affine_.degree());
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  return BinaryForm(a.degree_ + b.degree_, a.affine_ * b.affine_);
}

BinaryForm operator*(const Rational& s, const BinaryForm& f) {
  return BinaryForm(f.degree_, s * f.affine_);
}

BinaryForm BinaryForm::pow(unsigned e) const {
  return BinaryForm(degree_ * e, affine_.pow(e));
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree_ != b.degree_) {
    throw Error(ErrorKind::Internal, "adding forms of different degrees");
  }
  return BinaryForm(a.degree_, a.affine_ + b.affine_);
}

Place Place::at_infinity() { return Place(); }

Place Place::finite(UniPoly defining) {
  Place p;
  p.infinity_ = false;
  p.defining_ = defining.monic();
  if (p.defining_.degree() < 1) {
    throw Error(ErrorKind::Internal, "finite place needs a nonconstant defining polynomial");
  }
  if (!p.defining_.is_squarefree()) {
    throw Error(ErrorKind::Internal,
                "finite place defining polynomial is not squarefree: " + p.defining_.str());
  }
  return p;
}

const UniPoly& Place::defining() const {
  if (infinity_) {
    throw std::logic_error("the place at infinity has no defining polynomial");
  }
  return defining_;
}

unsigned Place::residue_degree() const {
  return infinity_ ? 1u : static_cast<unsigned>(defining_.degree());
}

std::string Place::str() const {
  return infinity_ ? "infinity" : "(" + defining_.str() + ")";
}

unsigned vanishing_order(const BinaryForm& f, const Place& p) {
  if (f.identically_zero()) {
    throw IdenticallyZeroForm("vanishing order of the identically-zero form");
  }
  if (p.is_infinity()) return f.order_at_infinity();
  if (f.affine().is_constant()) return 0;
  return f.affine().order_of(p.defining());
}

namespace {

/// Pairwise-coprime squarefree basis for the given monic squarefree
/// polynomials; each input is a product of basis elements.
std::vector<UniPoly> gcd_free_basis(std::vector<UniPoly> work) {
  std::vector<UniPoly> basis;
  while (!work.empty()) {
    UniPoly s = std::move(work.back());
    work.pop_back();
    if (s.degree() < 1) continue;
    bool split = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      UniPoly g = UniPoly::gcd(s, basis[i]);
      if (g.degree() < 1) continue;
      UniPoly b = std::move(basis[i]);
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      work.push_back(b.exact_div(g).monic());
      work.push_back(s.exact_div(g).monic());
      work.push_back(std::move(g));
      split = true;
      break;
    }
    if (!split) basis.push_back(std::move(s));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace

std::vector<OrderCluster> coprime_refinement(std::span<const BinaryForm> forms) {
  for (const BinaryForm& f : forms) {
    if (f.identically_zero()) {
      throw IdenticallyZeroForm("coprime refinement of an identically-zero form");
    }
  }

  // The chain radicals separate multiplicity classes, so every basis
  // element carries a single vanishing order per form.
  std::vector<UniPoly> inputs;
  for (const BinaryForm& f : forms) {
    if (f.affine().degree() < 1) continue;
    for (UniPoly& rad : f.affine().chain_radicals()) {
      inputs.push_back(std::move(rad));
    }
  }

  std::vector<OrderCluster> clusters;
  for (UniPoly& q : gcd_free_basis(std::move(inputs))) {
    OrderCluster c{Place::finite(std::move(q)), {}};
    c.orders.reserve(forms.size());
    for (const BinaryForm& f : forms) {
      c.orders.push_back(f.affine().is_constant()
                             ? 0u
                             : f.affine().order_of(c.place.defining()));
    }
    clusters.push_back(std::move(c));
  }

  std::vector<unsigned> inf_orders;
  inf_orders.reserve(forms.size());
  bool any_at_infinity = false;
  for (const BinaryForm& f : forms) {
    inf_orders.push_back(f.order_at_infinity());
    any_at_infinity = any_at_infinity || f.order_at_infinity() > 0;
  }
  if (any_at_infinity) {
    clusters.push_back(OrderCluster{Place::at_infinity(), std::move(inf_orders)});
  }
  return clusters;
}

}  // namespace ellbott
