#include <gtest/gtest.h>

#include <random>

#include "blowup/coordinate_change.hpp"
#include "blowup/error.hpp"
#include "blowup/newton.hpp"
#include "blowup/parser.hpp"
#include "oracles.hpp"

using namespace blowup;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}); }

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

}  // namespace

TEST(Rational, RendersExactly) {
  EXPECT_EQ(to_string(Rational(15, 2)), "15/2");
  EXPECT_EQ(to_string(Rational(-4) / 2), "-2");
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(rational_lcm(Rational(3, 2), Rational(5, 3)), Rational(15));
}

TEST(ExtRational, InfiniteTierRanksAboveFinite) {
  ExtRational big(1000000);
  ExtRational inf1 = ExtRational::infinite(1);
  ExtRational inf2 = ExtRational::infinite(2);
  EXPECT_LT(big, inf1);
  EXPECT_LT(inf1, inf2);
  EXPECT_EQ(inf2.to_string(), "inf+2");
  EXPECT_EQ(ExtRational::parse("inf+2"), inf2);
  EXPECT_EQ(ExtRational::parse("15/2"), ExtRational(Rational(15, 2)));
  EXPECT_EQ(ExtRational::infinite().to_string(), "inf");
}

TEST(Polynomial, CanonicalRendering) {
  auto r = xyz();
  EXPECT_EQ(P("x^2 - y^2*z", r).to_string(), "-y^2*z + x^2");
  EXPECT_EQ(P("3/2*x", r).to_string(), "3/2*x");
  EXPECT_EQ(P("0", r).to_string(), "0");
  EXPECT_EQ(P("(x + y)^2 - 2*x*y", r), P("x^2 + y^2", r));
}

TEST(Polynomial, ArithmeticLaws) {
  auto r = xyz();
  std::mt19937 rng(7);
  for (int k = 0; k < 40; ++k) {
    auto f = oracle::random_polynomial(r, rng, 4, 4);
    auto g = oracle::random_polynomial(r, rng, 4, 4);
    auto h = oracle::random_polynomial(r, rng, 3, 3);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    EXPECT_EQ((f - f).is_zero(), true);
    EXPECT_EQ(f.pow(2), f * f);
    auto p = oracle::random_point(3, rng);
    Point pt(r, p);
    EXPECT_EQ((f * g).evaluate(pt), f.evaluate(pt) * g.evaluate(pt));
  }
}

TEST(Polynomial, DerivativeProductRule) {
  auto r = xyz();
  std::mt19937 rng(11);
  for (int k = 0; k < 30; ++k) {
    auto f = oracle::random_polynomial(r, rng, 4, 5);
    auto g = oracle::random_polynomial(r, rng, 4, 5);
    for (const auto& v : r->names()) {
      EXPECT_EQ(partial_derivative(f * g, v), partial_derivative(f, v) * g + f * partial_derivative(g, v));
    }
  }
}

TEST(Polynomial, VanishingOrderMatchesTaylorOracle) {
  auto r = xyz();
  std::mt19937 rng(3);
  for (int k = 0; k < 60; ++k) {
    auto f = oracle::random_polynomial(r, rng, 5, 5);
    auto p = oracle::random_point(3, rng, 2);
    if (k % 3 == 0) {
      // Force a zero of some order at p.
      Point pt(r, p);
      f = f - Polynomial::constant(r, f.evaluate(pt));
    }
    auto expect = oracle::taylor_order(f, p);
    Order got = vanishing_order(f, Point(r, p));
    ASSERT_EQ(got.has_value(), expect.has_value());
    if (got) {
      EXPECT_EQ(*got, *expect) << f.to_string();
    }
  }
}

TEST(Polynomial, WeightedValuation) {
  auto r = xyz();
  Weights w{{"x", 3}, {"y", 2}, {"z", 2}};
  EXPECT_EQ(weighted_valuation(P("x^2 - y^2*z", r), w), 6u);
  EXPECT_EQ(weighted_valuation(P("x + y^3", r), w), 3u);
  EXPECT_FALSE(weighted_valuation(P("0", r), w).has_value());
}

TEST(Polynomial, SubstituteAndTranslate) {
  auto r = xyz();
  auto f = P("x^2 - y^2*z", r);
  Substitution s{{"x", P("x + 1", r)}};
  EXPECT_EQ(substitute(f, s, r), P("x^2 + 2*x + 1 - y^2*z", r));
  Point p(r, std::vector<Rational>{1, 0, 0});
  EXPECT_EQ(translate(f, p), P("x^2 + 2*x + 1 - y^2*z", r));
  EXPECT_EQ(truncate(P("1 + x + x^2*y", r), 2), P("1 + x", r));
}

TEST(CoordinateChange, TriangularInverseComposesToIdentity) {
  auto r = make_ring({"x", "y"});
  Substitution fwd{{"x", P("x + y^2 + x*y", r)}};
  auto c = invert_triangular_change(r, fwd, 8);
  EXPECT_TRUE(composition_is_identity(c));
}

TEST(Newton, PlaneCurveAllPointsOnLowerHull) {
  auto r = make_ring({"x", "y"});
  auto n = newton_polyhedron(P("x^5 + x^3*y^3 + y^100", r));
  ASSERT_EQ(n.points.size(), 3u);
  std::vector<std::pair<long, long>> pts;
  for (const auto& e : n.points) pts.emplace_back(e[0], e[1]);
  auto hull = oracle::lower_hull_2d(pts);
  EXPECT_EQ(hull.size(), 3u);
  for (std::size_t i = 0; i < n.points.size(); ++i) EXPECT_TRUE(n.is_vertex[i]);
}

TEST(Newton, VerticesAgreeWithHullOracleOnRandomCurves) {
  auto r = make_ring({"x", "y"});
  std::mt19937 rng(5);
  for (int k = 0; k < 40; ++k) {
    auto f = oracle::random_polynomial(r, rng, 6, 9, false);
    if (f.is_zero()) continue;
    auto n = newton_polyhedron(f);
    std::vector<std::pair<long, long>> pts;
    for (const auto& e : n.points) pts.emplace_back(e[0], e[1]);
    auto hull = oracle::lower_hull_2d(pts);
    std::vector<bool> expect(pts.size(), false);
    for (auto i : hull) expect[i] = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_EQ(static_cast<bool>(n.is_vertex[i]), expect[i]) << f.to_string() << " point " << i;
    }
  }
}

TEST(Parser, ParsesPolynomialsAndDerivations) {
  auto r = make_ring({"x", "y"});
  auto e = parse_expression("3*y^2*d/dx - 2*x*d/dy", r);
  ASSERT_TRUE(std::holds_alternative<Derivation>(e));
  const auto& d = std::get<Derivation>(e);
  EXPECT_EQ(d.coefficient("x"), P("3*y^2", r));
  EXPECT_EQ(d.coefficient("y"), P("-2*x", r));
  EXPECT_TRUE(std::holds_alternative<Polynomial>(parse_expression("x^2 - y^3/2", r)));
}

TEST(Parser, RejectsMalformedInput) {
  auto r = make_ring({"x", "y"});
  auto kind_of = [&](const std::string& s) -> std::string {
    try {
      parse_polynomial(s, r);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(kind_of("x^(1/2)").find("fractional exponent"), std::string::npos);
  EXPECT_NE(kind_of("x^(-1)").find("negative exponent"), std::string::npos);
  EXPECT_NE(kind_of("(x + y").find("unbalanced"), std::string::npos);
  EXPECT_NE(kind_of("x + w").find("unknown variable 'w'"), std::string::npos);
  EXPECT_NE(kind_of("x / y").size(), 0u);
  EXPECT_NE(kind_of("1.5*x").size(), 0u);
}

TEST(Parser, ErrorCarriesPosition) {
  auto r = make_ring({"x", "y"});
  try {
    parse_polynomial("x + y + w", r, 4, 1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 9u);
  }
}

TEST(Parser, CenterAcceptsRationalExponents) {
  auto r = make_ring({"x", "y"});
  auto c = parse_center("(x^5, y^(15/2))", r);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[1].second, Rational(15, 2));
}

TEST(ParserProperty, RoundTripOnRandomSamples) {
  auto r = xyz();
  std::mt19937 rng(2024);
  for (int k = 0; k < 200; ++k) {
    auto f = oracle::random_polynomial(r, rng, 1 + k % 7, 1 + k % 9);
    EXPECT_EQ(parse_polynomial(f.to_string(), r), f) << f.to_string();
  }
}

TEST(ParserProperty, AgreesWithIndependentEvaluator) {
  auto r = xyz();
  std::mt19937 rng(99);
  const std::vector<std::string> shapes = {
      "x^2 - y^2*z", "(x + 2*y)^3 - z/3", "-(x - y)*(x + y) + 7/2", "x*(y*(z + 1) - 2)^2", "-x^2 + 3*-y",
  };
  for (const auto& s : shapes) {
    auto f = parse_polynomial(s, r);
    for (int k = 0; k < 10; ++k) {
      auto p = oracle::random_point(3, rng);
      std::map<std::string, Rational> vals{{"x", p[0]}, {"y", p[1]}, {"z", p[2]}};
      EXPECT_EQ(f.evaluate(Point(r, p)), oracle::eval_expression(s, vals)) << s;
    }
  }
}
