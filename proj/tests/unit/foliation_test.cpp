#include <gtest/gtest.h>

#include <random>

#include "blowup/foliation.hpp"
#include "blowup/groebner.hpp"
#include "blowup/parser.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace blowup;

namespace {

RingPtr xy() { return make_ring({"x", "y"}); }

Foliation span(const RingPtr& r, const std::string& text) { return Foliation(r, parse_derivation_list(text, r)); }
Ideal I(const RingPtr& r, const std::string& text) { return Ideal(r, parse_polynomial_list(text, r)); }

Derivation random_derivation(const RingPtr& r, std::mt19937& rng) {
  Derivation d(r);
  for (const auto& v : r->names()) d.set_coefficient(v, oracle::random_polynomial(r, rng, 3, 3));
  return d;
}

std::vector<corpus::FoliatedCase> cases() { return corpus::foliated(); }

// Iterates I -> F(I) + I until it stops growing.
Ideal f_closure(const Foliation& f, Ideal ideal) {
  for (int k = 0; k < 64; ++k) {
    Ideal next = f_derivative_ideal(f, ideal);
    if (ideal_contains(next.generators(), ideal.generators(), ideal.ring())) return ideal;
    ideal = next;
  }
  ADD_FAILURE() << "closure did not stabilize";
  return ideal;
}

}  // namespace

TEST(Derivation, AppliesAndRenders) {
  auto r = xy();
  auto d = parse_derivation("3*y^2*d/dx - 2*x*d/dy", r);
  EXPECT_TRUE(d.apply(parse_polynomial("x^2 + y^3", r)).is_zero());
  EXPECT_EQ(Foliation(r, {d}).to_string(), "Span(3*y^2*d/dx - 2*x*d/dy)");
  EXPECT_EQ(Foliation(r).to_string(), "Span()");
}

TEST(DerivationProperty, BracketLaws) {
  auto r = make_ring({"x", "y", "z"});
  std::mt19937 rng(13);
  for (int k = 0; k < 15; ++k) {
    auto a = random_derivation(r, rng);
    auto b = random_derivation(r, rng);
    auto c = random_derivation(r, rng);
    auto f = oracle::random_polynomial(r, rng, 4, 4);
    EXPECT_EQ(lie_bracket(a, b), Derivation(r) - lie_bracket(b, a));
    auto jacobi = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) + lie_bracket(c, lie_bracket(a, b));
    EXPECT_TRUE(jacobi.is_zero());
    EXPECT_EQ(lie_bracket(a, b).apply(f), a.apply(b.apply(f)) - b.apply(a.apply(f)));
  }
}

TEST(Foliation, Involutivity) {
  auto r = make_ring({"x", "y", "z"});
  EXPECT_TRUE(involutivity_check(span(r, "(d/dx, d/dy)")).involutive);
  auto bad = involutivity_check(span(r, "(d/dx, d/dy + x*d/dz)"));
  EXPECT_FALSE(bad.involutive);
  ASSERT_TRUE(bad.offending.has_value());
  EXPECT_TRUE(module_member(parse_derivation("x*y*d/dx", r), span(r, "(d/dx, d/dy)").generators));
  EXPECT_FALSE(module_member(parse_derivation("d/dz", r), span(r, "(d/dx, d/dy)").generators));
}

TEST(Foliation, FirstExample) {
  auto r = xy();
  auto f = span(r, "(d/dy)");
  auto ideal = I(r, "y^3 - x^2");
  EXPECT_EQ(f_order_at(f, ideal, Point::origin(r)), ExtRational(3));
  auto res = foliated_invariant_and_center(f, ideal, Point::origin(r));
  EXPECT_EQ(res.invariant, (Invariant{3, ExtRational::infinite(2)}));
  EXPECT_EQ(res.center.center.to_string(), "(y^3, x^2)");
  EXPECT_EQ(res.center.to_string(), "(y^3 | x^2)");
  EXPECT_TRUE(is_aligned_center(f, res.center, Point::origin(r)));
  auto t = transform_foliation(f, rees_presentation(res.center.center));
  EXPECT_EQ(t.foliation.to_string(), "Span(d/dy')");
}

TEST(Foliation, SecondExample) {
  auto r = xy();
  auto f = span(r, "(3*x*d/dx + 2*y*d/dy)");
  auto ideal = I(r, "y^3 - x^2");
  EXPECT_TRUE(is_f_invariant(f, ideal));
  auto res = foliated_invariant_and_center(f, ideal, Point::origin(r));
  EXPECT_EQ(res.invariant, (Invariant{ExtRational::infinite(2), ExtRational::infinite(3)}));
  EXPECT_EQ(res.center.center.to_string(), "(x^2, y^3)");
  EXPECT_EQ(res.center.transverse_count, 0u);
  auto t = transform_foliation(f, rees_presentation(res.center.center));
  EXPECT_EQ(t.foliation.generators.front(), parse_derivation("2*y'*d/dy' + 3*x'*d/dx'", t.foliation.ring));
}

TEST(Foliation, ThirdExampleThroughGraphReduction) {
  auto r = xy();
  auto g = graph_reduction({parse_polynomial("y^3 + x^2", r)}, Ideal(r));
  EXPECT_EQ(g.foliation.to_string(), "Span(3*y^2*d/dx - 2*x*d/dy)");
  EXPECT_EQ(g.invariant.invariant, (Invariant{2, 3, ExtRational::infinite(1)}));
  EXPECT_EQ(g.invariant.center.center.to_string(), "(x^2, y^3, z)");
  EXPECT_EQ(g.blowup_equation.generators.front(), parse_polynomial("z' - y'^3 - x'^2", g.blowup_equation.ring));
  EXPECT_EQ(g.transformed.foliation.generators.front(),
            parse_derivation("3*y'^2*d/dx' - 2*x'*d/dy'", g.transformed.foliation.ring));
  EXPECT_TRUE(g.singular_only_on_vertex);
  for (const auto& [q, st] : g.probes) EXPECT_NE(st, Smoothness::Singular) << q.to_string();
}

TEST(Foliation, Smoothness) {
  auto r = xy();
  auto f = span(r, "(3*y^2*d/dx - 2*x*d/dy)");
  auto at0 = smoothness_check(f, Point::origin(r));
  EXPECT_EQ(at0.status, Smoothness::Singular);
  EXPECT_EQ(at0.generic_rank, 1u);
  EXPECT_EQ(smoothness_check(f, Point(r, std::vector<Rational>{1, 0})).status, Smoothness::Smooth);
  Foliation log(r, {parse_derivation("x*d/dx", r)}, {"x"});
  EXPECT_EQ(smoothness_check(log, Point::origin(r)).status, Smoothness::LogSmooth);
}

TEST(FoliationProperty, FOrderDominatesOrder) {
  for (const auto& [f, ideal] : cases()) {
    auto p = Point::origin(ideal.ring());
    Order o = order_at(ideal, p);
    ASSERT_TRUE(o.has_value());
    ExtRational fo = f_order_at(f, ideal, p);
    EXPECT_GE(fo, ExtRational(Rational(static_cast<unsigned long>(*o)))) << ideal.to_string();
    auto full = Foliation::coordinate_span(ideal.ring());
    EXPECT_EQ(f_order_at(full, ideal, p), ExtRational(Rational(static_cast<unsigned long>(*o))));
  }
}

TEST(FoliationProperty, InvarianceDichotomy) {
  for (const auto& [f, ideal] : cases()) {
    auto p = Point::origin(ideal.ring());
    const bool infinite = f_order_at(f, ideal, p).is_infinite();
    if (is_f_invariant(f, ideal)) {
      EXPECT_TRUE(infinite) << f.to_string() << " " << ideal.to_string();
    }
    // Infinite F-order exactly when the chain stabilizes at a proper F-invariant ideal.
    Ideal closure = f_closure(f, ideal);
    EXPECT_TRUE(is_f_invariant(f, closure));
    EXPECT_EQ(infinite, order_at(closure, p).value_or(0) > 0) << f.to_string() << " " << ideal.to_string();
  }
}

TEST(FoliationProperty, InfiniteTierIsAbsorbing) {
  for (const auto& [f, ideal] : cases()) {
    auto res = foliated_invariant_and_center(f, ideal, Point::origin(ideal.ring()));
    bool seen = false;
    for (const auto& e : res.invariant) {
      if (seen) {
        EXPECT_TRUE(e.is_infinite()) << to_string(res.invariant);
      }
      seen = seen || e.is_infinite();
    }
    EXPECT_EQ(res.center.center.coords.size(), res.invariant.size() - (res.invariant.back() == ExtRational(0)));
  }
}

TEST(FoliationProperty, TransformSatisfiesChainRule) {
  std::mt19937 rng(19);
  auto r = xy();
  const std::vector<std::vector<std::pair<std::string, Rational>>> centers = {
      {{"y", 3}, {"x", 2}}, {{"x", 2}, {"y", 3}}, {{"x", 5}, {"y", Rational(15, 2)}}, {{"x", 1}, {"y", 1}}};
  for (const auto& [f, ideal] : cases()) {
    if (f.ring->size() != 2) continue;
    for (const auto& coords : centers) {
      auto rp = rees_presentation(coordinate_center(r, coords));
      auto t = transform_foliation(f, rp);
      auto s = Polynomial::variable(rp.ring, rp.s);
      for (int k = 0; k < 5; ++k) {
        auto g = oracle::random_polynomial(r, rng, 4, 5);
        for (std::size_t i = 0; i < f.generators.size(); ++i) {
          Polynomial lhs = substitute(f.generators[i].apply(g), rp.pullback, rp.ring);
          Polynomial rhs = t.foliation.generators[i].apply(substitute(g, rp.pullback, rp.ring));
          const auto m = t.s_powers[i];
          if (m >= 0) {
            EXPECT_EQ(lhs, s.pow(static_cast<unsigned>(m)) * rhs);
          } else {
            EXPECT_EQ(s.pow(static_cast<unsigned>(-m)) * lhs, rhs);
          }
        }
      }
    }
  }
}
