#include <gtest/gtest.h>

#include <random>

#include "blowup/error.hpp"
#include "blowup/invariant.hpp"
#include "blowup/parser.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace blowup;

namespace {

Ideal I(const std::vector<std::string>& vars, const std::string& text) {
  auto r = make_ring(vars);
  return Ideal(r, parse_polynomial_list(text, r));
}

Invariant inv(std::initializer_list<ExtRational> xs) { return Invariant(xs); }

InvariantResult at_origin(const Ideal& ideal) { return invariant_and_center(ideal, Point::origin(ideal.ring())); }

std::vector<Ideal> cases() { return corpus::ideals(); }

}  // namespace

TEST(Invariant, WhitneyUmbrella) {
  auto res = at_origin(I({"x", "y", "z"}, "x^2 - y^2*z"));
  EXPECT_EQ(res.invariant, inv({2, 3, 3}));
  EXPECT_EQ(res.center.to_string(), "(x^2, y^3, z^3)");
  auto rc = reduce_center(res.center);
  EXPECT_EQ(rc.ell, 6);
  EXPECT_EQ(rc.weights, (std::vector<std::uint64_t>{3, 2, 2}));
  EXPECT_EQ(rc.to_string(), "l=6 w=(3,2,2)");
}

TEST(Invariant, PlaneCurve) {
  auto res = at_origin(I({"x", "y"}, "x^5 + x^3*y^3 + y^100"));
  EXPECT_EQ(res.invariant, inv({5, Rational(15, 2)}));
  EXPECT_EQ(res.center.to_string(), "(x^5, y^(15/2))");
  auto rc = reduce_center(res.center);
  EXPECT_EQ(rc.ell, 15);
  EXPECT_EQ(rc.weights, (std::vector<std::uint64_t>{3, 2}));
}

TEST(Invariant, SmoothAndNonReducedCases) {
  EXPECT_EQ(at_origin(I({"x", "y"}, "x + y^2")).invariant, inv({1}));
  EXPECT_EQ(at_origin(I({"x", "y"}, "(x^2, y^3)")).invariant, inv({2, 3}));
  EXPECT_THROW(at_origin(I({"x", "y"}, "0")), Error);
}

TEST(Invariant, NonCoordinateContactElement) {
  // x + y^2 style contact after a change: (x - y^2)^2 + y^5.
  auto res = at_origin(I({"x", "y"}, "(x - y^2)^2 + y^5"));
  EXPECT_EQ(res.invariant, inv({2, 5}));
  EXPECT_TRUE(is_admissible(res.center, I({"x", "y"}, "(x - y^2)^2 + y^5")));
}

TEST(Invariant, ComparisonAndTruncationRule) {
  EXPECT_EQ(compare_invariants(inv({2}), inv({2, 3})), Comparison::Greater);
  EXPECT_EQ(compare_invariants(inv({3, 185}), inv({5, Rational(15, 2)})), Comparison::Less);
  EXPECT_EQ(compare_invariants(inv({2, 3, 3}), inv({2, 3, 3})), Comparison::Equal);
  EXPECT_EQ(compare_invariants(inv({2, ExtRational::infinite(1)}), inv({2, 1000})), Comparison::Greater);
  EXPECT_EQ(to_string(inv({2, 3, ExtRational::infinite(1)})), "(2, 3, inf+1)");
}

TEST(InvariantProperty, OrderingIsTotal) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> len(0, 3);
  std::uniform_int_distribution<int> val(1, 4);
  std::vector<Invariant> vals;
  for (int k = 0; k < 40; ++k) {
    Invariant v;
    for (int i = len(rng); i > 0; --i) v.push_back(k % 5 == 0 ? ExtRational::infinite(val(rng)) : ExtRational(val(rng)));
    vals.push_back(v);
  }
  for (const auto& a : vals) {
    for (const auto& b : vals) {
      auto ab = compare_invariants(a, b);
      auto ba = compare_invariants(b, a);
      EXPECT_EQ(ab == Comparison::Less, ba == Comparison::Greater);
      EXPECT_EQ(ab == Comparison::Equal, a == b);
      for (const auto& c : vals) {
        if (ab == Comparison::Less && compare_invariants(b, c) == Comparison::Less) {
          EXPECT_EQ(compare_invariants(a, c), Comparison::Less);
        }
      }
    }
  }
}

TEST(InvariantProperty, DiagonalHypersurfacesMatchExponentOracle) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> ex(2, 7);
  for (int k = 0; k < 15; ++k) {
    std::vector<int> e = {ex(rng), ex(rng), ex(rng)};
    std::sort(e.begin(), e.end());
    auto ideal = I({"x", "y", "z"}, "x^" + std::to_string(e[0]) + " + y^" + std::to_string(e[1]) + " + z^" +
                                        std::to_string(e[2]));
    EXPECT_EQ(at_origin(ideal).invariant, inv({e[0], e[1], e[2]})) << ideal.to_string();
  }
}

TEST(InvariantProperty, OrderMatchesTaylorOracle) {
  std::mt19937 rng(4);
  for (const auto& ideal : cases()) {
    for (int k = 0; k < 10; ++k) {
      auto p = oracle::random_point(ideal.ring()->size(), rng, 2);
      std::optional<unsigned> expect;
      for (const auto& g : ideal.generators()) {
        auto o = oracle::taylor_order(g, p);
        if (o && (!expect || *o < *expect)) expect = o;
      }
      Order got = order_at(ideal, Point(ideal.ring(), p));
      ASSERT_EQ(got.has_value(), expect.has_value());
      if (got) {
        EXPECT_EQ(*got, *expect);
      }
    }
  }
}

TEST(InvariantProperty, TranslationInvariance) {
  std::mt19937 rng(12);
  for (const auto& ideal : cases()) {
    auto p = oracle::random_point(ideal.ring()->size(), rng, 3);
    Point pt(ideal.ring(), p);
    // Move the singularity from the origin to -p... i.e. f(x + p) at -p.
    std::vector<Rational> minus;
    for (const auto& q : p) minus.push_back(-q);
    std::vector<Polynomial> moved;
    for (const auto& g : ideal.generators()) moved.push_back(translate(g, pt));
    Ideal shifted(ideal.ring(), moved);
    EXPECT_EQ(invariant_and_center(shifted, Point(ideal.ring(), minus)).invariant, at_origin(ideal).invariant)
        << ideal.to_string();
  }
}

TEST(InvariantProperty, SemicontinuityOffTheMaximalLocus) {
  std::mt19937 rng(31);
  for (const auto& ideal : cases()) {
    auto top = at_origin(ideal);
    const auto a = static_cast<unsigned>(to_int64(top.invariant.front().value()));
    Ideal locus = max_order_locus(ideal, a);
    for (int k = 0; k < 50; ++k) {
      Point p(ideal.ring(), oracle::random_point(ideal.ring()->size(), rng, 3));
      Order o = order_at(ideal, p);
      ASSERT_TRUE(o.has_value());
      EXPECT_LE(*o, a);
      bool on_locus = true;
      for (const auto& g : locus.generators()) on_locus = on_locus && g.evaluate(p) == 0;
      if (!on_locus) {
        EXPECT_LT(*o, a) << ideal.to_string() << " at " << p.to_string();
      }
      if (*o > 0) {
        auto here = invariant_and_center(ideal, p).invariant;
        EXPECT_NE(compare_invariants(here, top.invariant), Comparison::Greater);
      }
    }
  }
}

TEST(InvariantProperty, DummyVariableFunctoriality) {
  for (const auto& ideal : cases()) {
    auto names = ideal.ring()->names();
    names.push_back("w");
    auto bigger = make_ring(names);
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(embed(g, bigger));
    auto a = at_origin(ideal);
    auto b = invariant_and_center(Ideal(bigger, gens), Point::origin(bigger));
    EXPECT_EQ(a.invariant, b.invariant) << ideal.to_string();
    EXPECT_EQ(a.center.to_string(), b.center.to_string());
  }
}

TEST(InvariantProperty, ComputedCentersAreAdmissible) {
  for (const auto& ideal : cases()) {
    auto res = at_origin(ideal);
    auto rep = check_admissible(res.center, ideal);
    EXPECT_TRUE(rep.admissible) << ideal.to_string();
    EXPECT_TRUE(rep.graded) << ideal.to_string();
    for (const auto& [v, bound] : rep.graded_bounds) {
      if (v) {
        EXPECT_GE(Rational(static_cast<unsigned long>(*v)), bound);
      }
    }
  }
}

TEST(InvariantProperty, InadmissibleCenterIsRejected) {
  auto w = I({"x", "y", "z"}, "x^2 - y^2*z");
  auto c = coordinate_center(w.ring(), {{"x", 3}, {"y", 1}, {"z", 1}});
  EXPECT_FALSE(is_admissible(c, w));
}

TEST(InvariantProperty, SecondEntryMatchesExplicitCoefficientIdeal) {
  for (const auto& ideal : cases()) {
    auto res = at_origin(ideal);
    const auto a = static_cast<unsigned>(to_int64(res.invariant.front().value()));
    if (a < 2 || a > 3 || res.invariant.size() < 2 || res.levels.size() < 2) continue;
    Ideal C = coefficient_ideal_explicit(ideal, a);
    const Rational scale = Rational(1) / Rational(factorial(a - 1));
    MarkedSum sum{{MarkedComponent{C, scale}}};
    ASSERT_TRUE(res.levels.front().contact.has_value());
    MarkedSum restricted = restrict_marked(sum, *res.levels.front().contact, res.levels[1].ring);
    EXPECT_EQ(order_of_marked(restricted, Point::origin(res.levels[1].ring)), res.invariant[1])
        << ideal.to_string();
  }
}
