#include "ellbott/unipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ellbott/errors.hpp"

namespace ellbott {

namespace {
const Rational kZero{};
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(Rational c) {
  UniPoly p;
  if (!c.is_zero()) p.c_.push_back(std::move(c));
  return p;
}

UniPoly UniPoly::monomial(Rational c, unsigned k) {
  UniPoly p;
  if (!c.is_zero()) {
    p.c_.assign(k + 1, Rational());
    p.c_.back() = std::move(c);
  }
  return p;
}

UniPoly UniPoly::from_coeffs(std::vector<Rational> coeffs) {
  UniPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

const Rational& UniPoly::coeff(unsigned k) const {
  return k < c_.size() ? c_[k] : kZero;
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
  r.trim();
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
  r.trim();
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
  if (s.is_zero()) return UniPoly();
  UniPoly r = p;
  for (auto& c : r.c_) c *= s;
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& n, const UniPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  UniPoly q, r = n;
  if (n.degree() < d.degree()) return {q, r};
  q.c_.assign(n.degree() - d.degree() + 1, Rational());
  const Rational lead_inv = d.leading().reciprocal();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const unsigned shift = static_cast<unsigned>(r.degree() - d.degree());
    const Rational factor = r.leading() * lead_inv;
    q.c_[shift] = factor;
    for (size_t i = 0; i < d.c_.size(); ++i) {
      r.c_[shift + i] -= factor * d.c_[i];
    }
    r.trim();
  }
  q.trim();
  return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
  auto [q, r] = divmod(*this, d);
  if (!r.is_zero()) {
    throw DivisionNotExact("(" + str() + ") is not divisible by (" + d.str() + ")");
  }
  return q;
}

bool UniPoly::divisible_by(const UniPoly& d) const {
  return divmod(*this, d).second.is_zero();
}

unsigned UniPoly::order_of(const UniPoly& d) const {
  if (is_zero()) throw std::invalid_argument("order of divisor in zero polynomial");
  if (d.is_constant()) throw std::invalid_argument("order with constant divisor");
  unsigned k = 0;
  UniPoly g = *this;
  while (g.degree() >= d.degree()) {
    auto [q, r] = divmod(g, d);
    if (!r.is_zero()) break;
    g = std::move(q);
    ++k;
  }
  return k;
}

UniPoly UniPoly::derivative() const {
  UniPoly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  r.trim();
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return leading().reciprocal() * *this;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = constant(1);
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + c_[i];
  }
  return acc;
}

UniPoly UniPoly::shift(const Rational& c) const {
  // Horner in (t + c)
  UniPoly t_plus_c = from_coeffs({c, Rational(1)});
  UniPoly acc;
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * t_plus_c + constant(c_[i]);
  }
  return acc;
}

UniPoly UniPoly::primitive_integer() const {
  if (is_zero()) return *this;
  mpz_class denom_lcm = 1;
  for (const Rational& c : c_) {
    if (!c.is_zero()) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  mpz_class content = 0;
  for (const Rational& c : c_) {
    if (c.is_zero()) continue;
    const mpz_class scaled = c.num() * (denom_lcm / c.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  return Rational(denom_lcm, content) * *this;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  // Remainders are reduced to primitive integer form at every step; the
  // growth then matches the primitive remainder sequence instead of the
  // doubly-exponential rational one.
  a = a.primitive_integer();
  b = b.primitive_integer();
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second.primitive_integer();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool UniPoly::is_squarefree() const {
  if (is_zero()) return false;
  if (is_constant()) return true;
  return gcd(*this, derivative()).is_constant();
}

UniPoly UniPoly::squarefree_part() const {
  if (is_zero()) throw std::invalid_argument("radical of the zero polynomial");
  if (is_constant()) return constant(1);
  UniPoly g = gcd(*this, derivative());
  return exact_div(g).monic();
}

std::vector<UniPoly> UniPoly::chain_radicals() const {
  std::vector<UniPoly> out;
  UniPoly cur = monic();
  while (cur.degree() > 0) {
    UniPoly rad = cur.squarefree_part();
    out.push_back(rad);
    cur = cur.exact_div(rad).monic();
  }
  return out;
}

std::strong_ordering operator<=>(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (size_t i = a.c_.size(); i-- > 0;) {
    auto c = a.c_[i] <=> b.c_[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

std::string UniPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = mag.is_one();
    if (i == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
  return os << p.str();
}

}  // namespace ellbott
