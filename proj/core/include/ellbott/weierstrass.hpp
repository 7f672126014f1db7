#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ellbott/binary_form.hpp"

namespace ellbott {

enum class FiberType : std::uint8_t { I, II, III, IV };

std::string fiber_type_name(FiberType t);

/// Kodaira type of a reduced singular fiber: I_n (n >= 1), II, III or IV.
struct KodairaType {
  FiberType family;
  unsigned n = 0;  // meaningful for family == I only

  static KodairaType In(unsigned n) { return {FiberType::I, n}; }
  static KodairaType II() { return {FiberType::II, 0}; }
  static KodairaType III() { return {FiberType::III, 0}; }
  static KodairaType IV() { return {FiberType::IV, 0}; }

  /// Topological Euler number of the fiber: n, 2, 3, 4.
  unsigned euler() const;
  /// Number of singular points on the fiber: n for I_n, otherwise 1.
  unsigned singular_points() const;
  std::string str() const;

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
  friend auto operator<=>(const KodairaType&, const KodairaType&) = default;
};

/// Vanishing order that may be infinite (order of the identically-zero
/// form at any place).
struct VanOrder {
  bool infinite = false;
  unsigned k = 0;

  static VanOrder finite(unsigned k) { return {false, k}; }
  static VanOrder inf() { return {true, 0}; }

  bool at_least(unsigned m) const { return infinite || k >= m; }
  bool equals(unsigned m) const { return !infinite && k == m; }
  bool at_most(unsigned m) const { return !infinite && k <= m; }
  std::string str() const { return infinite ? "inf" : std::to_string(k); }

  friend bool operator==(const VanOrder&, const VanOrder&) = default;
};

/// A locus on the base line with constant orders of vanishing
/// (a, b, delta) of the Weierstrass coefficients and the discriminant.
struct PlaceCluster {
  Place place;
  VanOrder a;      // order of the quartic coefficient form
  VanOrder b;      // order of the sextic coefficient form
  unsigned delta;  // order of the discriminant (finite: delta != identically 0)
};

struct KodairaFiber {
  PlaceCluster cluster;
  KodairaType type;
  unsigned count;  // residue degree: geometric fibers in the cluster
};

struct FiberCensus {
  unsigned beta = 0;
  std::vector<KodairaFiber> fibers;

  unsigned long total_delta() const;
  unsigned long total_euler() const;
  bool has_type(FiberType t) const;
};

struct MinimalityCheck {
  bool minimal = true;
  std::vector<PlaceCluster> offending;
};

/// Weierstrass data over the line: y^2 = x^3 + lambda(t) x + mu(t) with
/// lambda a form of degree 4*beta and mu a form of degree 6*beta, and
/// discriminant 4 lambda^3 + 27 mu^2 not identically zero.
class WeierstrassData {
 public:
  WeierstrassData(unsigned beta, BinaryForm lambda, BinaryForm mu);

  unsigned beta() const { return beta_; }
  const BinaryForm& lambda() const { return lambda_; }
  const BinaryForm& mu() const { return mu_; }

  /// 4 lambda^3 + 27 mu^2 as a form of degree 12*beta.
  const BinaryForm& discriminant() const { return delta_; }

  /// Clusters covering the zero locus of the discriminant (and the other
  /// coefficient zeros, with delta = 0 there). Computed once at
  /// construction.
  const std::vector<PlaceCluster>& clusters() const { return clusters_; }

  /// True iff at every zero of the discriminant, ord(lambda) <= 3 or
  /// ord(mu) <= 5; otherwise lists the violating places.
  MinimalityCheck is_minimal() const;

  /// Kodaira classification of every singular fiber from (a, b, delta).
  /// Throws NotMinimal or NonReducedFiber when the hypotheses fail.
  FiberCensus classify_fibers() const;

 private:
  unsigned beta_;
  BinaryForm lambda_;
  BinaryForm mu_;
  BinaryForm delta_;
  std::vector<PlaceCluster> clusters_;
};

}  // namespace ellbott
