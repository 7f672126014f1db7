#include <doctest.h>

#include <random>

#include "ellbott/binary_form.hpp"
#include "ellbott/errors.hpp"
#include "test_util.hpp"

using namespace ellbott;
using testutil::form;
using testutil::random_poly;
using testutil::t_pow;

TEST_CASE("vanishing orders at finite places and at infinity") {
  const Place at_t = Place::finite(t_pow(1));
  CHECK(vanishing_order(form(4, t_pow(4)), at_t) == 4);
  CHECK(vanishing_order(form(6, t_pow(6) + t_pow(1)), at_t) == 1);
  CHECK(vanishing_order(form(4, UniPoly::constant(1)), Place::at_infinity()) == 4);
  CHECK(vanishing_order(form(4, t_pow(4)), Place::at_infinity()) == 0);
  CHECK_THROWS_AS(vanishing_order(form(4, UniPoly::zero()), at_t), IdenticallyZeroForm);
}

TEST_CASE("places validate their defining polynomials") {
  CHECK(Place::finite(Rational(3) * t_pow(1)).defining() == t_pow(1));  // made monic
  CHECK(Place::finite(t_pow(2) + UniPoly::constant(1)).residue_degree() == 2);
  CHECK(Place::at_infinity().residue_degree() == 1);
  CHECK_THROWS(Place::finite(UniPoly::constant(2)));
  CHECK_THROWS(Place::finite(t_pow(2)));  // not squarefree
  CHECK(Place::at_infinity().str() == "infinity");
  CHECK(Place::finite(t_pow(1)).str() == "(t)");
}

TEST_CASE("coprime refinement of the worked pair") {
  // [t^4 as deg 4, t^6 + t as deg 6]: t^6 + t = t (t^5 + 1), so the basis
  // splits into (t) with orders (4, 1) and (t^5 + 1) with orders (0, 1).
  const std::vector<BinaryForm> forms = {form(4, t_pow(4)), form(6, t_pow(6) + t_pow(1))};
  const auto clusters = coprime_refinement(forms);
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0].place == Place::finite(t_pow(1)));
  CHECK(clusters[0].orders == std::vector<unsigned>{4, 1});
  CHECK(clusters[1].place == Place::finite(t_pow(5) + UniPoly::constant(1)));
  CHECK(clusters[1].orders == std::vector<unsigned>{0, 1});
}

TEST_CASE("coprime refinement single-form cases") {
  {
    const std::vector<BinaryForm> forms = {form(2, t_pow(2))};
    const auto clusters = coprime_refinement(forms);
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].place == Place::finite(t_pow(1)));
    CHECK(clusters[0].orders == std::vector<unsigned>{2});
  }
  {
    const std::vector<BinaryForm> forms = {form(2, UniPoly::constant(1))};
    const auto clusters = coprime_refinement(forms);
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].place.is_infinity());
    CHECK(clusters[0].orders == std::vector<unsigned>{2});
  }
  const std::vector<BinaryForm> zero = {form(3, UniPoly::zero())};
  CHECK_THROWS_AS(coprime_refinement(zero), IdenticallyZeroForm);
}

TEST_CASE("refinement output is pairwise coprime and squarefree") {
  std::mt19937_64 rng(20240818);
  for (int trial = 0; trial < 25; ++trial) {
    const UniPoly f = random_poly(rng, 3);
    const UniPoly g = random_poly(rng, 2);
    const UniPoly h = random_poly(rng, 2);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    // build forms with repeated factors to exercise the multiplicity split
    const UniPoly p1 = f * g.pow(2);
    const UniPoly p2 = g * h.pow(3);
    const std::vector<BinaryForm> forms = {
        form(static_cast<unsigned>(p1.degree()) + 1, p1),
        form(static_cast<unsigned>(p2.degree()) + 2, p2)};
    const auto clusters = coprime_refinement(forms);
    for (size_t i = 0; i < clusters.size(); ++i) {
      if (clusters[i].place.is_infinity()) continue;
      const UniPoly& qi = clusters[i].place.defining();
      CHECK(qi.is_squarefree());
      CHECK(UniPoly::gcd(qi, qi.derivative()).is_constant());
      for (size_t j = i + 1; j < clusters.size(); ++j) {
        if (clusters[j].place.is_infinity()) continue;
        CHECK(UniPoly::gcd(qi, clusters[j].place.defining()).is_constant());
      }
      // recorded orders really are the division-loop orders
      for (size_t k = 0; k < forms.size(); ++k) {
        CHECK(clusters[i].orders[k] == vanishing_order(forms[k], clusters[i].place));
      }
    }
  }
}

TEST_CASE("the basis covers exactly the union of zero loci") {
  std::mt19937_64 rng(90210);
  for (int trial = 0; trial < 20; ++trial) {
    const UniPoly f = random_poly(rng, 4);
    const UniPoly g = random_poly(rng, 3);
    if (f.is_zero() || g.is_zero()) continue;
    const UniPoly p1 = f * f;  // non-squarefree on purpose
    const UniPoly p2 = f * g;
    const std::vector<BinaryForm> forms = {
        form(static_cast<unsigned>(p1.degree()), p1),
        form(static_cast<unsigned>(p2.degree()), p2)};
    UniPoly basis_product = UniPoly::constant(1);
    for (const auto& c : coprime_refinement(forms)) {
      if (c.place.is_infinity()) continue;
      basis_product = basis_product * c.place.defining();
    }
    CHECK(basis_product == (p1 * p2).squarefree_part());
  }
}

TEST_CASE("degree equals the weighted sum of all vanishing orders") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly f = random_poly(rng, 5);
    if (f.is_zero()) continue;
    if (trial % 3 == 0) f = f * random_poly(rng, 2).pow(2);  // some multiple roots
    if (f.is_zero()) continue;
    const unsigned slack = trial % 4;  // extra vanishing at infinity
    const BinaryForm bf = form(static_cast<unsigned>(f.degree()) + slack, f);
    unsigned long total = 0;
    for (const auto& c : coprime_refinement(std::vector<BinaryForm>{bf})) {
      total += static_cast<unsigned long>(c.place.residue_degree()) * c.orders[0];
    }
    CHECK(total == bf.degree());
  }
}

TEST_CASE("vanishing order is additive under products") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    const UniPoly f = random_poly(rng, 4);
    const UniPoly g = random_poly(rng, 3);
    if (f.is_zero() || g.is_zero()) continue;
    const BinaryForm bf = form(static_cast<unsigned>(f.degree()) + 1, f);
    const BinaryForm bg = form(static_cast<unsigned>(g.degree()) + (trial % 2), g);
    const BinaryForm prod = bf * bg;
    std::vector<BinaryForm> pair = {bf, bg};
    for (const auto& c : coprime_refinement(pair)) {
      CHECK(vanishing_order(prod, c.place) ==
            vanishing_order(bf, c.place) + vanishing_order(bg, c.place));
    }
    CHECK(vanishing_order(prod, Place::at_infinity()) ==
          vanishing_order(bf, Place::at_infinity()) + vanishing_order(bg, Place::at_infinity()));
  }
}
