#include "blowup/ideal.hpp"

#include <algorithm>

namespace blowup {

Ideal::Ideal(RingPtr ring, const std::vector<Polynomial>& generators) : ring_(std::move(ring)) {
  for (const auto& g : generators) add(g);
}

void Ideal::add(const Polynomial& g) {
  require_same_ring(g.ring(), ring_, "ideal");
  if (g.is_zero()) return;
  Polynomial key = g.monic();
  if (std::find(keys_.begin(), keys_.end(), key) != keys_.end()) return;
  keys_.push_back(std::move(key));
  generators_.push_back(primitive_part(g));
}

bool Ideal::has_constant_generator() const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_constant(); });
}

std::string Ideal::to_string() const {
  if (generators_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ")";
}

Ideal derivative_ideal(const Ideal& ideal) {
  Ideal out = ideal;
  for (const auto& g : ideal.generators()) {
    for (std::size_t v = 0; v < ideal.ring()->size(); ++v) out.add(partial_derivative(g, v));
  }
  return out;
}

Ideal derivative_ideal(const Ideal& ideal, const std::vector<Derivation>& ops) {
  Ideal out = ideal;
  for (const auto& g : ideal.generators()) {
    for (const auto& d : ops) out.add(d.apply(g));
  }
  return out;
}

Ideal derivative_power(const Ideal& ideal, unsigned a) {
  Ideal out = ideal;
  for (unsigned i = 0; i < a; ++i) {
    Ideal next = derivative_ideal(out);
    if (next == out) break;
    out = std::move(next);
  }
  return out;
}

Ideal prune_covered(const Ideal& ideal) {
  const auto& gens = ideal.generators();
  std::vector<Exponents> monomials;
  for (const auto& g : gens) {
    if (g.size() == 1) monomials.push_back(g.terms().begin()->first);
  }
  auto covered = [&](const Exponents& e, const Exponents* self) {
    return std::any_of(monomials.begin(), monomials.end(), [&](const Exponents& m) {
      return (self == nullptr || m != *self) && divides(m, e);
    });
  };
  std::vector<Polynomial> kept;
  for (const auto& g : gens) {
    if (g.size() == 1) {
      if (!covered(g.terms().begin()->first, &g.terms().begin()->first)) kept.push_back(g);
      continue;
    }
    bool redundant = std::all_of(g.terms().begin(), g.terms().end(),
                                 [&](const auto& t) { return covered(t.first, nullptr); });
    if (!redundant) kept.push_back(g);
  }
  return Ideal(ideal.ring(), kept);
}

Ideal localize_at_origin(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    if (g.constant_term() != 0) return Ideal::unit(ring);
    auto [content, rest] = split_monomial_content(g);
    if (rest.constant_term() != 0) {
      gens.push_back(Polynomial::monomial(ring, content));
    } else {
      gens.push_back(g);
    }
  }
  return prune_covered(Ideal(ring, gens));
}

Order order_at(const Ideal& ideal, const Point& p) {
  Order best;
  for (const auto& g : ideal.generators()) {
    Order o = vanishing_order(g, p);
    if (o && (!best || *o < *best)) best = o;
    if (best && *best == 0) break;
  }
  return best;
}

Ideal max_order_locus(const Ideal& ideal, unsigned a) {
  return derivative_power(ideal, a == 0 ? 0 : a - 1);
}

std::string MarkedSum::to_string() const {
  if (components.empty()) return "0";
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += " + ";
    out += c.ideal.to_string() + "^" + blowup::to_string(c.exponent);
  }
  return out;
}

ExtRational order_of_marked(const MarkedSum& sum, const Point& p) {
  std::optional<Rational> best;
  for (const auto& c : sum.components) {
    Order o = order_at(c.ideal, p);
    if (!o) continue;
    Rational v = c.exponent * Rational(static_cast<unsigned long>(*o));
    if (!best || v < *best) best = v;
  }
  if (!best) return ExtRational::infinite();
  return ExtRational(*best);
}

MarkedSum normalize(MarkedSum sum) {
  MarkedSum out;
  for (auto& c : sum.components) {
    if (c.ideal.is_zero()) continue;
    auto it = std::find_if(out.components.begin(), out.components.end(),
                           [&](const MarkedComponent& o) { return o.ideal == c.ideal; });
    if (it == out.components.end()) {
      out.components.push_back(std::move(c));
    } else if (c.exponent < it->exponent) {
      it->exponent = c.exponent;
    }
  }
  return out;
}

}  // namespace blowup
