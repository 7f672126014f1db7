#include "ellbott/weierstrass.hpp"

#include <array>

#include "ellbott/errors.hpp"

namespace ellbott {

std::string fiber_type_name(FiberType t) {
  switch (t) {
    case FiberType::I: return "I";
    case FiberType::II: return "II";
    case FiberType::III: return "III";
    case FiberType::IV: return "IV";
  }
  return "?";
}

unsigned KodairaType::euler() const {
  switch (family) {
    case FiberType::I: return n;
    case FiberType::II: return 2;
    case FiberType::III: return 3;
    case FiberType::IV: return 4;
  }
  return 0;
}

unsigned KodairaType::singular_points() const {
  return family == FiberType::I ? n : 1;
}

std::string KodairaType::str() const {
  if (family == FiberType::I) return "I" + std::to_string(n);
  return fiber_type_name(family);
}

unsigned long FiberCensus::total_delta() const {
  unsigned long s = 0;
  for (const auto& f : fibers) s += static_cast<unsigned long>(f.count) * f.cluster.delta;
  return s;
}

unsigned long FiberCensus::total_euler() const {
  unsigned long s = 0;
  for (const auto& f : fibers) s += static_cast<unsigned long>(f.count) * f.type.euler();
  return s;
}

bool FiberCensus::has_type(FiberType t) const {
  for (const auto& f : fibers) {
    if (f.type.family == t) return true;
  }
  return false;
}

namespace {

BinaryForm checked_discriminant(unsigned beta, const BinaryForm& lambda, const BinaryForm& mu) {
  if (beta < 1) {
    throw ModelError("beta must be a positive integer");
  }
  if (lambda.degree() != 4 * beta) {
    throw ModelError("lambda must be a form of degree 4*beta = " + std::to_string(4 * beta) +
                     ", got " + std::to_string(lambda.degree()));
  }
  if (mu.degree() != 6 * beta) {
    throw ModelError("mu must be a form of degree 6*beta = " + std::to_string(6 * beta) +
                     ", got " + std::to_string(mu.degree()));
  }
  return Rational(4) * lambda.pow(3) + Rational(27) * mu.pow(2);
}

}  // namespace

WeierstrassData::WeierstrassData(unsigned beta, BinaryForm lambda, BinaryForm mu)
    : beta_(beta),
      lambda_(std::move(lambda)),
      mu_(std::move(mu)),
      delta_(checked_discriminant(beta_, lambda_, mu_)) {
  if (delta_.identically_zero()) {
    throw IdenticallyZeroDiscriminant("discriminant 4*lambda^3 + 27*mu^2 is identically zero");
  }

  // The identically-zero coefficient form has order +inf everywhere and is
  // left out of the refinement.
  std::vector<BinaryForm> forms;
  int i_lambda = -1, i_mu = -1;
  if (!lambda_.identically_zero()) {
    i_lambda = static_cast<int>(forms.size());
    forms.push_back(lambda_);
  }
  if (!mu_.identically_zero()) {
    i_mu = static_cast<int>(forms.size());
    forms.push_back(mu_);
  }
  const int i_delta = static_cast<int>(forms.size());
  forms.push_back(delta_);

  for (OrderCluster& c : coprime_refinement(forms)) {
    clusters_.push_back(PlaceCluster{
        c.place, i_lambda >= 0 ? VanOrder::finite(c.orders[i_lambda]) : VanOrder::inf(),
        i_mu >= 0 ? VanOrder::finite(c.orders[i_mu]) : VanOrder::inf(), c.orders[i_delta]});
  }
}

MinimalityCheck WeierstrassData::is_minimal() const {
  MinimalityCheck mc;
  for (const PlaceCluster& c : clusters()) {
    if (c.delta == 0) continue;
    if (c.a.at_most(3) || c.b.at_most(5)) continue;
    mc.minimal = false;
    mc.offending.push_back(c);
  }
  return mc;
}

namespace {

KodairaType classify_cluster(const PlaceCluster& c) {
  // Reduced rows of the minimal-fiber table, keyed by
  // (ord lambda, ord mu, ord delta).
  if (c.a.equals(0) && c.b.equals(0)) {
    if (c.delta < 1) throw InconsistentTable("I_n row reached with delta = 0");
    return KodairaType::In(c.delta);
  }
  if (c.a.at_least(1) && c.b.equals(1)) {
    if (c.delta != 2) {
      throw InconsistentTable("type II row at " + c.place.str() + " has delta = " +
                              std::to_string(c.delta) + ", expected 2");
    }
    return KodairaType::II();
  }
  if (c.a.equals(1) && c.b.at_least(2)) {
    if (c.delta != 3) {
      throw InconsistentTable("type III row at " + c.place.str() + " has delta = " +
                              std::to_string(c.delta) + ", expected 3");
    }
    return KodairaType::III();
  }
  if (c.a.at_least(2) && c.b.equals(2)) {
    if (c.delta != 4) {
      throw InconsistentTable("type IV row at " + c.place.str() + " has delta = " +
                              std::to_string(c.delta) + ", expected 4");
    }
    return KodairaType::IV();
  }
  // Everything else in the minimal table (I_0*, I_n*, IV*, III*, II*) is a
  // non-reduced fiber and out of scope.
  throw NonReducedFiber("fiber at " + c.place.str() + " with orders (a, b, delta) = (" +
                        c.a.str() + ", " + c.b.str() + ", " + std::to_string(c.delta) +
                        ") is not reduced");
}

}  // namespace

FiberCensus WeierstrassData::classify_fibers() const {
  MinimalityCheck mc = is_minimal();
  if (!mc.minimal) {
    std::string places;
    for (const auto& c : mc.offending) {
      if (!places.empty()) places += ", ";
      places += c.place.str();
    }
    throw NotMinimal("model is not minimal at: " + places);
  }

  FiberCensus census;
  census.beta = beta_;
  for (const PlaceCluster& c : clusters()) {
    if (c.delta == 0) continue;
    const KodairaType type = classify_cluster(c);
    census.fibers.push_back(KodairaFiber{c, type, c.place.residue_degree()});
  }
  if (census.total_delta() != 12ul * beta_) {
    throw InconsistentTable("census delta sum " + std::to_string(census.total_delta()) +
                            " does not equal 12*beta = " + std::to_string(12ul * beta_));
  }
  return census;
}

}  // namespace ellbott
