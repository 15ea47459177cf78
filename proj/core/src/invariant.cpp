#include "blowup/invariant.hpp"

#include <algorithm>
#include <tuple>

#include "blowup/error.hpp"
#include "blowup/groebner.hpp"

namespace blowup {

std::string to_string(const Invariant& inv) {
  std::string out = "(";
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i > 0) out += ", ";
    out += inv[i].to_string();
  }
  return out + ")";
}

Comparison compare_invariants(const Invariant& u, const Invariant& v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] < v[i]) return Comparison::Less;
    if (v[i] < u[i]) return Comparison::Greater;
  }
  if (u.size() == v.size()) return Comparison::Equal;
  return u.size() < v.size() ? Comparison::Greater : Comparison::Less;
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "less";
    case Comparison::Equal: return "equal";
    case Comparison::Greater: return "greater";
  }
  return "?";
}

namespace {

Ideal translate_ideal(const Ideal& ideal, const Point& p) {
  require_same_ring(ideal.ring(), p.ring(), "point");
  if (p.is_origin()) return ideal;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(translate(g, p));
  return Ideal(ideal.ring(), gens);
}

std::string exponent_suffix(const Rational& a) {
  if (a == 1) return "";
  if (is_integer(a)) return "^" + to_string(a);
  return "^(" + to_string(a) + ")";
}

// D^0 .. D^{count-1} of an ideal; localized when `local`.
std::vector<Ideal> derivative_chain(const Ideal& ideal, std::uint64_t count, bool local) {
  std::vector<Ideal> chain;
  chain.push_back(local ? localize_at_origin(ideal) : ideal);
  while (chain.size() < count) {
    Ideal next = derivative_ideal(chain.back());
    chain.push_back(local ? localize_at_origin(next) : std::move(next));
  }
  return chain;
}

}  // namespace

std::uint32_t working_truncation(std::uint64_t order, const InvariantOptions& options) {
  std::uint64_t deg = options.truncation;
  if (order <= 12) deg = std::max<std::uint64_t>(deg, factorial(static_cast<unsigned>(order)).get_ui());
  deg = std::min<std::uint64_t>(deg, std::max(options.max_degree, options.truncation));
  return static_cast<std::uint32_t>(deg);
}

CoordinateChange extend_change(const CoordinateChange& c, const RingPtr& target) {
  CoordinateChange out = CoordinateChange::identity(target);
  out.truncation_degree = c.truncation_degree;
  for (const auto& [v, f] : c.forward) out.forward.emplace(v, embed(f, target));
  for (const auto& [v, f] : c.inverse) out.inverse.emplace(v, embed(f, target));
  return out;
}

std::string Center::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ", ";
    const auto& c = coords[i];
    std::string e = c.element.to_string();
    if (c.element.size() != 1 || !(c.element.monic() == c.element) || c.element.degree() != 1) {
      e = "(" + e + ")";
    }
    out += e + exponent_suffix(c.exponent);
  }
  return out + ")";
}

bool Center::is_coordinate_center() const {
  return std::all_of(coords.begin(), coords.end(), [&](const CenterCoordinate& c) {
    return c.element == Polynomial::variable(ring, c.pivot);
  });
}

Weights ReducedCenter::weight_map() const {
  Weights w;
  for (std::size_t i = 0; i < coords.size(); ++i) w[coords[i].pivot] = weights[i];
  return w;
}

std::string ReducedCenter::to_string() const {
  std::string out = "l=" + blowup::to_string(ell) + " w=(";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(weights[i]);
  }
  return out + ")";
}

ContactChoice choose_contact(const Ideal& d_top, std::uint32_t truncation_degree) {
  const RingPtr& ring = d_top.ring();
  using Key = std::tuple<int, std::size_t, std::size_t, std::string>;
  std::optional<Key> best_key;
  const Polynomial* best = nullptr;

  for (const auto& g : d_top.generators()) {
    if (g.constant_term() != 0) continue;
    std::vector<Rational> linear(ring->size(), Rational(0));
    for (const auto& [e, c] : g.terms()) {
      if (total_degree(e) == 1) {
        linear[static_cast<std::size_t>(std::find(e.begin(), e.end(), 1U) - e.begin())] = c;
      }
    }
    auto first_linear = std::find_if(linear.begin(), linear.end(), [](const Rational& c) { return c != 0; });
    if (first_linear == linear.end()) continue;

    int cls = 3;
    std::size_t pivot = static_cast<std::size_t>(first_linear - linear.begin());
    auto [content, rest] = split_monomial_content(g);
    if (total_degree(content) == 1 && rest.constant_term() != 0) {
      cls = 1;
      pivot = static_cast<std::size_t>(std::find(content.begin(), content.end(), 1U) - content.begin());
    } else {
      for (std::size_t v = 0; v < ring->size() && cls == 3; ++v) {
        if (linear[v] == 0) continue;
        bool affine = std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& t) {
          return t.first[v] == 0 || total_degree(t.first) == 1;
        });
        if (affine) {
          cls = 2;
          pivot = v;
        }
      }
    }
    Key key{cls, pivot, g.size(), g.to_string()};
    if (!best_key || key < *best_key) {
      best_key = key;
      best = &g;
    }
  }
  if (best == nullptr) {
    throw Error(ErrorKind::NoMaximalContact, "no element of order one in " + d_top.to_string());
  }

  const int cls = std::get<0>(*best_key);
  const std::string pivot = ring->name(std::get<1>(*best_key));
  const Polynomial& g = *best;
  ContactChoice choice{Polynomial::variable(ring, pivot), pivot, CoordinateChange::identity(ring)};
  if (cls == 1) return choice;

  Polynomial var = Polynomial::variable(ring, pivot);
  Polynomial element = g * (Rational(1) / g.coefficient(var.terms().begin()->first));
  choice.element = element;
  if (cls == 2) {
    choice.change.forward.emplace(pivot, var - (element - var));
    choice.change.inverse.emplace(pivot, element);
    return choice;
  }
  CoordinateChange inv = invert_triangular_change(ring, {{pivot, element}}, truncation_degree);
  choice.change.forward = inv.inverse;
  choice.change.inverse = inv.forward;
  choice.change.truncation_degree = inv.truncation_degree;
  return choice;
}

ContactChoice maximal_contact(const Ideal& ideal, const Point& p, const InvariantOptions& options) {
  Ideal local = translate_ideal(ideal, p);
  Order a = order_at(local, Point::origin(local.ring()));
  if (!a) throw Error(ErrorKind::NoMaximalContact, "order is infinite; no maximal contact");
  if (*a == 0) throw Error(ErrorKind::NoMaximalContact, "order is zero; no maximal contact");
  return choose_contact(derivative_power(local, static_cast<unsigned>(*a - 1)), working_truncation(*a, options));
}

MarkedSum coefficient_marked(const Ideal& ideal, unsigned a, const Point& p) {
  Ideal local = translate_ideal(ideal, p);
  Order ord = order_at(local, Point::origin(local.ring()));
  if (a == 0 || !ord || *ord != a) {
    throw Error(ErrorKind::Precondition,
                "coefficient_marked needs a = ord_I(p) >= 1; got a=" + std::to_string(a) +
                    ", ord=" + to_string(ord));
  }
  auto chain = derivative_chain(local, a, false);
  MarkedSum sum;
  for (unsigned i = 1; i <= a; ++i) sum.components.push_back({chain[a - i], Rational(a, i)});
  return sum;
}

Ideal coefficient_ideal_explicit(const Ideal& ideal, unsigned a, unsigned cap) {
  std::vector<Derivation> ops;
  for (const auto& v : ideal.ring()->names()) ops.push_back(Derivation::partial(ideal.ring(), v));
  return coefficient_ideal_explicit(ideal, a, ops, cap);
}

Ideal coefficient_ideal_explicit(const Ideal& ideal, unsigned a, const std::vector<Derivation>& ops, unsigned cap) {
  if (a > cap) {
    throw Error(ErrorKind::CapExceeded, "explicit coefficient ideal capped at a <= " + std::to_string(cap));
  }
  if (a == 0) throw Error(ErrorKind::Precondition, "explicit coefficient ideal needs a >= 1");
  const RingPtr& ring = ideal.ring();
  const unsigned target = static_cast<unsigned>(factorial(a).get_ui());
  // Interreduced generators keep the products below small.
  auto reduced = [&](const Ideal& i) { return Ideal(ring, buchberger(i.generators(), ring).generators); };
  std::vector<Ideal> chain{reduced(ideal)};
  while (chain.size() < a) chain.push_back(reduced(derivative_ideal(chain.back(), ops)));

  auto multiply = [&](const std::vector<Polynomial>& x, const std::vector<Polynomial>& y) {
    Ideal out(ring);
    for (const auto& f : x) {
      for (const auto& g : y) out.add(f * g);
    }
    return prune_covered(out).generators();
  };
  // powers[i][b] = (D^{a-i}(I))^b
  std::vector<std::vector<std::vector<Polynomial>>> powers(a + 1);
  for (unsigned i = 1; i <= a; ++i) {
    powers[i].push_back({Polynomial::constant(ring, 1)});
    for (unsigned b = 1; b * i < target + a; ++b) {
      powers[i].push_back(multiply(powers[i].back(), chain[a - i].generators()));
    }
  }

  Ideal out(ring);
  std::vector<unsigned> b(a + 1, 0);
  auto recurse = [&](auto&& self, unsigned i, unsigned weight) -> void {
    if (i > a) {
      if (weight < target) return;
      std::vector<Polynomial> prod{Polynomial::constant(ring, 1)};
      for (unsigned j = 1; j <= a; ++j) {
        if (b[j] > 0) prod = multiply(prod, powers[j][b[j]]);
      }
      for (const auto& g : prod) out.add(g);
      return;
    }
    for (unsigned k = 0; weight + k * i < target + a; ++k) {
      b[i] = k;
      self(self, i + 1, weight + k * i);
    }
    b[i] = 0;
  };
  recurse(recurse, 1, 0);
  return prune_covered(out);
}

MarkedSum restrict_marked(const MarkedSum& sum, const ContactChoice& contact, const RingPtr& target) {
  MarkedSum out;
  for (const auto& comp : sum.components) {
    Ideal restricted(target);
    bool exact_zero = false;
    for (const auto& g : comp.ideal.generators()) {
      // Multiples of the contact element restrict to zero whatever the truncation.
      if (contact.change.truncation_degree && ideal_member(g, {contact.element}, g.ring())) {
        exact_zero = true;
        continue;
      }
      restricted.add(restrict_to_hyperplane(apply_coordinate_change(g, contact.change), contact.pivot, target));
    }
    if (exact_zero && restricted.is_zero()) continue;
    if (contact.change.truncation_degree) {
      Order o = order_at(restricted, Point::origin(target));
      if (!o || *o > *contact.change.truncation_degree) {
        throw Error(ErrorKind::TruncationOverflow,
                    "restriction along a truncated contact change lost precision; raise the truncation degree");
      }
    }
    out.components.push_back({std::move(restricted), comp.exponent});
  }
  return normalize(std::move(out));
}

InvariantResult invariant_and_center(const Ideal& ideal, const Point& p, const InvariantOptions& options) {
  if (ideal.is_zero()) throw Error(ErrorKind::InfiniteOrder, "the zero ideal has infinite order");
  const RingPtr& root_ring = ideal.ring();
  Ideal local = translate_ideal(ideal, p);

  InvariantResult result;
  result.center.ring = root_ring;
  result.center.change = CoordinateChange::identity(root_ring);
  result.center.base = p;
  result.max_order_locus = Ideal::unit(root_ring);

  MarkedSum sum;
  sum.components.push_back({local, Rational(1)});
  continue_invariant(result, root_ring, std::move(sum), true, options);
  return result;
}

void continue_invariant(InvariantResult& result, RingPtr ring, MarkedSum sum, bool root,
                        const InvariantOptions& options) {
  const RingPtr& root_ring = result.center.ring;
  while (!sum.empty()) {
    const Point origin = Point::origin(ring);
    std::vector<std::uint64_t> orders;
    for (const auto& comp : sum.components) orders.push_back(*order_at(comp.ideal, origin));

    InvariantLevel level{ring, sum, order_of_marked(sum, origin), std::nullopt};
    if (level.entry.value() == 0) {
      result.invariant.push_back(level.entry);
      result.levels.push_back(std::move(level));
      break;
    }
    std::size_t best = 0;
    for (std::size_t m = 1; m < sum.components.size(); ++m) {
      if (sum.components[m].exponent * orders[m] < sum.components[best].exponent * orders[best]) best = m;
    }

    std::vector<std::vector<Ideal>> chains;
    for (std::size_t m = 0; m < sum.components.size(); ++m) {
      chains.push_back(derivative_chain(sum.components[m].ideal, orders[m], !root));
    }
    const Ideal& top = chains[best].back();
    if (root) result.max_order_locus = top;
    ContactChoice contact = choose_contact(top, working_truncation(orders[best], options));

    result.invariant.push_back(level.entry);
    result.center.coords.push_back({embed(contact.element, root_ring), level.entry.value(), contact.pivot});
    result.center.change = compose(result.center.change, extend_change(contact.change, root_ring));
    level.contact = contact;
    result.levels.push_back(std::move(level));

    RingPtr next_ring = drop_variable(ring, contact.pivot);
    MarkedSum expanded;
    for (std::size_t m = 0; m < sum.components.size(); ++m) {
      const std::uint64_t b = orders[m];
      for (std::uint64_t i = 1; i <= b; ++i) {
        expanded.components.push_back(
            {chains[m][b - i], sum.components[m].exponent * Rational(static_cast<unsigned long>(b)) /
                                   Rational(static_cast<unsigned long>(i))});
      }
    }
    MarkedSum next = restrict_marked(normalize(std::move(expanded)), contact, next_ring);
    for (auto& comp : next.components) comp.ideal = localize_at_origin(comp.ideal);
    sum = normalize(std::move(next));
    ring = next_ring;
    root = false;
  }
}

ReducedCenter reduce_center(const Center& center) {
  ReducedCenter rc;
  rc.ring = center.ring;
  rc.coords = center.coords;
  rc.ell = 1;
  bool first = true;
  for (const auto& c : center.coords) {
    if (c.exponent <= 0) throw Error(ErrorKind::Precondition, "center exponents must be positive");
    rc.ell = first ? c.exponent : rational_lcm(rc.ell, c.exponent);
    first = false;
  }
  for (const auto& c : center.coords) {
    Rational w = rc.ell / c.exponent;
    rc.weights.push_back(static_cast<std::uint64_t>(to_int64(w)));
  }
  return rc;
}

AdmissibilityReport check_admissible(const Center& center, const Ideal& ideal) {
  AdmissibilityReport report;
  ReducedCenter rc = reduce_center(center);
  report.ell = rc.ell;
  const Weights weights = rc.weight_map();
  Ideal local = translate_ideal(ideal, center.base);

  auto valuation = [&](const Polynomial& g) {
    return weighted_valuation(apply_coordinate_change(g, center.change), weights);
  };
  auto meets = [](const Order& v, const Rational& bound) {
    return !v || Rational(static_cast<unsigned long>(*v)) >= bound;
  };
  for (const auto& g : local.generators()) {
    report.valuations.push_back(valuation(g));
    if (!meets(report.valuations.back(), rc.ell)) report.admissible = false;
  }
  if (center.coords.empty()) {
    report.admissible = local.is_zero();
    return report;
  }
  const Rational& a1 = center.coords.front().exponent;
  const Rational w1(static_cast<unsigned long>(rc.weights.front()));
  Ideal current = local;
  for (unsigned i = 1; Rational(i) < a1; ++i) {
    current = derivative_ideal(current);
    Order lowest;
    for (const auto& g : current.generators()) {
      Order v = valuation(g);
      if (v && (!lowest || *v < *lowest)) lowest = v;
    }
    Rational bound = rc.ell - Rational(i) * w1;
    report.graded_bounds.emplace_back(lowest, bound);
    if (!meets(lowest, bound)) report.graded = false;
  }
  return report;
}

bool is_admissible(const Center& center, const Ideal& ideal) {
  return check_admissible(center, ideal).admissible;
}

Center coordinate_center(const RingPtr& ring, const std::vector<std::pair<std::string, Rational>>& coords) {
  Center c;
  c.ring = ring;
  c.change = CoordinateChange::identity(ring);
  c.base = Point::origin(ring);
  for (const auto& [name, a] : coords) {
    ring->require(name);
    if (a <= 0) throw Error(ErrorKind::Precondition, "center exponents must be positive");
    c.coords.push_back({Polynomial::variable(ring, name), a, name});
  }
  return c;
}

}  // namespace blowup
