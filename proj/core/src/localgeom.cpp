#include "ellbott/localgeom.hpp"

#include <sstream>

#include "ellbott/errors.hpp"

namespace ellbott {

void BiPoly::set(unsigned i, unsigned j, Rational c) {
  if (c.is_zero()) {
    terms_.erase({i, j});
  } else {
    terms_[{i, j}] = std::move(c);
  }
}

BiPoly BiPoly::constant(Rational c) { return monomial(std::move(c), 0, 0); }

BiPoly BiPoly::monomial(Rational c, unsigned i, unsigned j) {
  BiPoly p;
  p.set(i, j, std::move(c));
  return p;
}

Rational BiPoly::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational() : it->second;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b.terms_) r.set(k.first, k.second, r.coeff(k.first, k.second) + c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b.terms_) r.set(k.first, k.second, r.coeff(k.first, k.second) - c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const unsigned i = ka.first + kb.first;
      const unsigned j = ka.second + kb.second;
      r.set(i, j, r.coeff(i, j) + ca * cb);
    }
  }
  return r;
}

BiPoly operator*(const Rational& s, const BiPoly& p) {
  BiPoly r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : p.terms_) r.set(k.first, k.second, s * c);
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r = constant(1);
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) {
    if (k.first == 0) continue;
    r.set(k.first - 1, k.second, Rational(static_cast<long>(k.first)) * c);
  }
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) {
    if (k.second == 0) continue;
    r.set(k.first, k.second - 1, Rational(static_cast<long>(k.second)) * c);
  }
  return r;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = mag.is_one() && (k.first > 0 || k.second > 0);
    if (!unit) os << mag.str();
    if (k.first > 0) {
      if (!unit) os << "*";
      os << "x";
      if (k.first > 1) os << "^" << k.first;
    }
    if (k.second > 0) {
      if (!unit || k.first > 0) os << "*";
      os << "y";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

LocalEquation::LocalEquation(BiPoly f_in, std::string label_in)
    : f(std::move(f_in)), label(std::move(label_in)) {
  if (!f.coeff(0, 0).is_zero() || !f.coeff(1, 0).is_zero() || !f.coeff(0, 1).is_zero()) {
    throw ModelError("local equation \"" + label +
                     "\" must vanish at the origin with both partials zero");
  }
}

LocalEquation local_model(const KodairaType& type) {
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  switch (type.family) {
    case FiberType::I:
      if (type.n <= 1) return LocalEquation(x * x - y * y, "I1");
      return LocalEquation(x * y, type.str() + " node");
    case FiberType::II:
      return LocalEquation(x * x - y.pow(3), "II");
    case FiberType::III:
      return LocalEquation(x * (x - y * y), "III");
    case FiberType::IV:
      return LocalEquation(x * (x * x - y * y), "IV");
  }
  throw InconsistentTable("unknown fiber type");
}

unsigned jacobian_dimension_at(const LocalEquation& eq, unsigned truncation) {
  const unsigned T = truncation;
  // Monomials x^i y^j with i + j < T span the truncated local algebra.
  std::vector<std::pair<unsigned, unsigned>> monos;
  for (unsigned i = 0; i < T; ++i) {
    for (unsigned j = 0; i + j < T; ++j) monos.emplace_back(i, j);
  }
  std::vector<std::vector<std::size_t>> id(T, std::vector<std::size_t>(T, 0));
  for (std::size_t k = 0; k < monos.size(); ++k) id[monos[k].first][monos[k].second] = k;

  const BiPoly gens[2] = {eq.f.dx(), eq.f.dy()};
  std::vector<std::vector<Rational>> rows;
  for (const BiPoly& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& [mi, mj] : monos) {
      std::vector<Rational> row(monos.size());
      bool nonzero = false;
      for (const auto& [k, c] : g.terms()) {
        const unsigned i = k.first + mi;
        const unsigned j = k.second + mj;
        if (i + j >= T) continue;
        row[id[i][j]] += c;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }

  QMatrix m(rows.size(), monos.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < monos.size(); ++c) m.at(r, c) = std::move(rows[r][c]);
  }
  return static_cast<unsigned>(monos.size() - m.rank());
}

unsigned jacobian_scheme_degree(const LocalEquation& eq, unsigned truncation) {
  constexpr unsigned kMaxTruncation = 24;
  if (truncation < 2) truncation = 2;
  unsigned prev = jacobian_dimension_at(eq, truncation);
  for (unsigned T = truncation * 2; T <= kMaxTruncation * 2; T *= 2) {
    const unsigned cur = jacobian_dimension_at(eq, T);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw NotStabilized("critical-scheme dimension of \"" + eq.label +
                      "\" keeps growing: the singularity is not isolated");
}

unsigned singular_scheme_degree(const KodairaType& type) {
  switch (type.family) {
    case FiberType::I: return 1;
    case FiberType::II: return 2;
    case FiberType::III: return 3;
    case FiberType::IV: return 4;
  }
  throw InconsistentTable("unknown fiber type");
}

namespace {

struct Layout {
  std::vector<std::size_t> offset;  // first coefficient index per component
  std::size_t total = 0;
};

Layout layout_for(const std::vector<unsigned>& degrees) {
  Layout l;
  for (unsigned d : degrees) {
    l.offset.push_back(l.total);
    l.total += d + 1;
  }
  return l;
}

void check_degrees(const SectionSpaceModel& m, std::size_t expected_components) {
  if (m.degrees.size() != expected_components) {
    throw UnsupportedSplit("type " + m.fiber_type.str() + " takes " +
                           std::to_string(expected_components) + " component degrees, got " +
                           std::to_string(m.degrees.size()));
  }
  for (unsigned d : m.degrees) {
    if (d < 1) throw UnsupportedSplit("ample degrees must be >= 1 on every component");
  }
}

RestrictionRank solve(const QMatrix& constraints, const QMatrix& map) {
  const QMatrix kernel = constraints.kernel_basis();
  const QMatrix restricted = QMatrix::mul(map, kernel);
  return RestrictionRank{static_cast<unsigned>(kernel.cols()),
                         static_cast<unsigned>(map.rows()),
                         static_cast<unsigned>(restricted.rank())};
}

/// Irreducible types: a single polynomial s of degree r on the
/// normalization.
/// II (cusp): sections are germs in the subalgebra generated by (t^2, t^3),
/// i.e. s'(0) = 0; the singular scheme is spanned by 1 and t^2 there.
/// I_1 (node): s(0) = s(1) glues the two preimages of the node; the
/// singular scheme sees the common value.
RestrictionRank rank_irreducible(const SectionSpaceModel& m) {
  check_degrees(m, 1);
  const unsigned r = m.degrees[0];
  const std::size_t n = r + 1;
  if (m.fiber_type.family == FiberType::II) {
    QMatrix constraints(1, n);
    constraints.at(0, 1) = 1;
    QMatrix map(2, n);
    map.at(0, 0) = 1;
    if (r >= 2) map.at(1, 2) = 1;
    return solve(constraints, map);
  }
  // I_1
  QMatrix constraints(1, n);
  for (std::size_t k = 1; k < n; ++k) constraints.at(0, k) = -1;
  QMatrix map(1, n);
  map.at(0, 0) = 1;
  return solve(constraints, map);
}

/// I_n, n >= 2: a cycle of n lines; on component i the nodes sit at 0 and
/// 1, sections match values around the cycle, and the singular scheme is
/// one reduced point per node.
RestrictionRank rank_cycle(const SectionSpaceModel& m) {
  const unsigned n = m.fiber_type.n;
  check_degrees(m, n);
  const Layout l = layout_for(m.degrees);
  QMatrix constraints(n, l.total);
  QMatrix map(n, l.total);
  for (unsigned i = 0; i < n; ++i) {
    const unsigned next = (i + 1) % n;
    for (unsigned k = 0; k <= m.degrees[i]; ++k) {
      constraints.at(i, l.offset[i] + k) = 1;  // f_i(1)
      map.at(i, l.offset[i] + k) = 1;
    }
    constraints.at(i, l.offset[next] + 0) -= 1;  // -f_{i+1}(0)
  }
  return solve(constraints, map);
}

/// III: two tangent lines x = 0 and x = y^2, both parametrized by y.
/// Sections match value and first derivative; the singular scheme lives on
/// the middle curve x = y^2 / 2 modulo y^3.
RestrictionRank rank_tangent_pair(const SectionSpaceModel& m) {
  check_degrees(m, 2);
  const Layout l = layout_for(m.degrees);
  QMatrix constraints(2, l.total);
  constraints.at(0, l.offset[0] + 0) = 1;
  constraints.at(0, l.offset[1] + 0) = -1;
  constraints.at(1, l.offset[0] + 1) = 1;
  constraints.at(1, l.offset[1] + 1) = -1;

  QMatrix map(3, l.total);
  map.at(0, l.offset[0] + 0) = 1;
  map.at(1, l.offset[0] + 1) = 1;
  const Rational half(1, 2);
  if (m.degrees[0] >= 2) map.at(2, l.offset[0] + 2) = half;
  if (m.degrees[1] >= 2) map.at(2, l.offset[1] + 2) = half;
  return solve(constraints, map);
}

/// IV: three concurrent lines x = 0, x = y, x = -y. With the branches
/// parametrized by y an ambient germ satisfies 2 f' - g' - h' = 0 at the
/// center; a weight triple (e1, e2, e3) corresponds to rescaling the
/// branch parameters by c1 = 2/e1, c2 = -1/e2, c3 = -1/e3, and the
/// coordinates of the singular scheme (basis 1, x, y, y^2 of the local
/// ring modulo <x^2 - y^2/3, xy>) rescale along.
RestrictionRank rank_concurrent_triple(const SectionSpaceModel& m) {
  check_degrees(m, 3);
  const Rational& e1 = m.tangent_weights[0];
  const Rational& e2 = m.tangent_weights[1];
  const Rational& e3 = m.tangent_weights[2];
  if (e1.is_zero() || e2.is_zero() || e3.is_zero()) {
    throw UnsupportedSplit("type IV tangent weights must all be nonzero");
  }
  const Layout l = layout_for(m.degrees);
  QMatrix constraints(3, l.total);
  constraints.at(0, l.offset[0] + 0) = 1;
  constraints.at(0, l.offset[1] + 0) = -1;
  constraints.at(1, l.offset[0] + 0) = 1;
  constraints.at(1, l.offset[2] + 0) = -1;
  constraints.at(2, l.offset[0] + 1) = e1;
  constraints.at(2, l.offset[1] + 1) = e2;
  constraints.at(2, l.offset[2] + 1) = e3;

  // Standard-parameter coefficients: F_k = f_k / c1^k, etc.
  const Rational half(1, 2);
  const Rational sixth(1, 6);
  QMatrix map(4, l.total);
  map.at(0, l.offset[0] + 0) = 1;                 // value
  map.at(1, l.offset[1] + 1) = -e2 * half;        // x-coordinate: (G1 - H1)/2
  map.at(1, l.offset[2] + 1) = e3 * half;
  map.at(2, l.offset[0] + 1) = e1 * half;         // y-coordinate: F1
  if (m.degrees[0] >= 2) map.at(3, l.offset[0] + 2) = e1 * e1 * sixth;
  if (m.degrees[1] >= 2) map.at(3, l.offset[1] + 2) = e2 * e2 * sixth;
  if (m.degrees[2] >= 2) map.at(3, l.offset[2] + 2) = e3 * e3 * sixth;
  return solve(constraints, map);
}

}  // namespace

RestrictionRank restriction_rank(const SectionSpaceModel& model) {
  switch (model.fiber_type.family) {
    case FiberType::II:
      return rank_irreducible(model);
    case FiberType::I:
      if (model.fiber_type.n < 1) throw UnsupportedSplit("I_n needs n >= 1");
      return model.fiber_type.n == 1 ? rank_irreducible(model) : rank_cycle(model);
    case FiberType::III:
      return rank_tangent_pair(model);
    case FiberType::IV:
      return rank_concurrent_triple(model);
  }
  throw InconsistentTable("unknown fiber type");
}

}  // namespace ellbott
