#include "corpus.hpp"

#include <algorithm>
#include <random>

#include "blowup/parser.hpp"

namespace corpus {

Ideal ideal(const std::vector<std::string>& vars, const std::string& text) {
  auto r = make_ring(vars);
  return Ideal(r, parse_polynomial_list(text, r));
}

Ideal whitney() { return ideal({"x", "y", "z"}, "x^2 - y^2*z"); }
Ideal plane_curve() { return ideal({"x", "y"}, "x^5 + x^3*y^3 + y^100"); }

std::vector<Ideal> ideals() {
  return {
      whitney(),
      ideal({"x", "y"}, "x^2 + y^3"),
      ideal({"x", "y"}, "x^2 - y^5"),
      ideal({"x", "y", "z"}, "x^3 + y^4 + z^5"),
      ideal({"x", "y", "z"}, "(x*y, z^2 + x^3)"),
      ideal({"x", "y", "z"}, "x^2 + y^2 + z^2"),
      ideal({"x", "y"}, "x*y"),
      ideal({"x", "y", "z"}, "x^2 + y^3*z^2 + z^7"),
      ideal({"x", "y"}, "(x^2, y^3)"),
      ideal({"x", "y"}, "x^3 + x*y^3 + y^7"),
      plane_curve(),
  };
}

namespace {

Center own(const Ideal& i) { return invariant_and_center(i, Point::origin(i.ring())).center; }

}  // namespace

std::vector<CenterPair> center_pairs() {
  std::vector<Ideal> base = {
      whitney(),
      plane_curve(),
      ideal({"x", "y"}, "x^2 + y^3"),
      ideal({"x", "y", "z"}, "x^3 + y^4 + z^5"),
      ideal({"x", "y", "z"}, "(x*y, z^2 + x^3)"),
      ideal({"x", "y"}, "x^2 - y^5"),
      ideal({"x", "y", "z"}, "x^2 + y^2 + z^2"),
  };
  std::vector<CenterPair> out;
  for (const auto& b : base) out.push_back({b, own(b), true});

  const std::vector<std::pair<std::size_t, std::string>> bumps = {
      {0, "y^4*z^3"}, {0, "x*y^5"}, {2, "x*y^3"}, {3, "x*y^4*z"}, {5, "y^7"},
  };
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coef(1, 5);
  for (const auto& [k, bump] : bumps) {
    const Ideal& b = base[k];
    std::vector<Polynomial> gens = b.generators();
    gens.front() += parse_polynomial(bump, b.ring()) * Rational(coef(rng));
    Ideal perturbed(b.ring(), gens);
    Center center = own(b);
    if (is_admissible(center, perturbed)) out.push_back({perturbed, center, true});
  }

  std::uniform_int_distribution<int> drop(0, 1);
  for (const auto& b : base) {
    Center c = own(b);
    std::vector<std::pair<std::string, Rational>> coords;
    for (const auto& cc : c.coords) {
      Rational e = cc.exponent - drop(rng);
      coords.emplace_back(cc.pivot, e > 0 ? e : cc.exponent);
    }
    std::stable_sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    Center lowered = coordinate_center(b.ring(), coords);
    if (lowered.to_string() != c.to_string() && is_admissible(lowered, b)) out.push_back({b, lowered, false});
  }
  return out;
}

std::vector<FoliatedCase> foliated() {
  auto r = make_ring({"x", "y"});
  auto r3 = make_ring({"x", "y", "z"});
  auto F = [](const RingPtr& ring, const std::string& text) {
    return Foliation(ring, parse_derivation_list(text, ring));
  };
  auto I = [](const RingPtr& ring, const std::string& text) { return Ideal(ring, parse_polynomial_list(text, ring)); };
  return {
      {F(r, "(d/dy)"), I(r, "y^3 - x^2")},
      {F(r, "(3*x*d/dx + 2*y*d/dy)"), I(r, "y^3 - x^2")},
      {F(r, "(3*y^2*d/dx - 2*x*d/dy)"), I(r, "y^3 + x^2")},
      {F(r, "(d/dx)"), I(r, "x^5 + x^3*y^3 + y^100")},
      {F(r, "(x*d/dx)"), I(r, "x*y + y^3")},
      {F(r, "(d/dy)"), I(r, "x^2 + x*y")},
      {F(r3, "(d/dx, d/dy)"), I(r3, "x^2 - y^2*z")},
      {F(r3, "(d/dz)"), I(r3, "x^2 - y^2*z")},
      {F(r3, "(x*d/dx + y*d/dy)"), I(r3, "(x*y, z^2 + x^3)")},
      {F(r3, "(d/dx, d/dy, d/dz)"), I(r3, "x^3 + y^4 + z^5")},
  };
}

}  // namespace corpus
