#include "blowup/foliation.hpp"

#include <algorithm>
#include <tuple>

#include "blowup/error.hpp"
#include "blowup/groebner.hpp"

namespace blowup {

Foliation::Foliation(RingPtr r, std::vector<Derivation> gens, std::vector<std::string> log)
    : ring(std::move(r)), log_vars(std::move(log)) {
  for (auto& g : gens) {
    require_same_ring(g.ring(), ring, "foliation");
    if (!g.is_zero()) generators.push_back(std::move(g));
  }
  for (const auto& v : log_vars) ring->require(v);
}

Foliation Foliation::coordinate_span(const RingPtr& ring, const std::vector<std::string>& vars) {
  Foliation f(ring);
  std::vector<std::string> names = vars.empty() ? ring->names() : vars;
  for (const auto& v : names) f.generators.push_back(Derivation::partial(ring, v));
  return f;
}

std::string Foliation::to_string() const {
  std::string out = "Span(";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i > 0) out += ", ";
    out += generators[i].to_string();
  }
  return out + ")";
}

namespace {

Foliation translate_foliation(const Foliation& f, const Point& p) {
  if (p.is_origin()) return f;
  Foliation out(f.ring);
  out.log_vars = f.log_vars;
  for (const auto& g : f.generators) {
    Derivation d(f.ring);
    for (const auto& [v, c] : g.coefficients()) d.set_coefficient(v, translate(c, p));
    out.generators.push_back(std::move(d));
  }
  return out;
}

Ideal translate_ideal(const Ideal& ideal, const Point& p) {
  require_same_ring(ideal.ring(), p.ring(), "point");
  if (p.is_origin()) return ideal;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(translate(g, p));
  return Ideal(ideal.ring(), gens);
}

bool unit_at_origin(const Ideal& ideal) {
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Polynomial& g) { return g.constant_term() != 0; });
}

// D_F^0 .. D_F^b where D_F^b is the first unit at the origin; nullopt order
// when the chain stabilizes first.
struct FChain {
  std::vector<Ideal> chain;
  Order order;
};

FChain f_chain(const Foliation& f, const Ideal& ideal, bool local, std::uint32_t limit) {
  FChain out;
  out.chain.push_back(local ? localize_at_origin(ideal) : ideal);
  for (std::uint32_t a = 0;; ++a) {
    const Ideal& cur = out.chain.back();
    if (unit_at_origin(cur)) {
      out.order = a;
      return out;
    }
    if (a >= limit) {
      throw Error(ErrorKind::Budget, "F-derivative chain did not settle within " + std::to_string(limit) + " steps");
    }
    Ideal next = f_derivative_ideal(f, cur);
    if (local) next = localize_at_origin(next);
    if (next == cur || ideal_contains(next.generators(), cur.generators(), cur.ring())) {
      out.order = std::nullopt;
      return out;
    }
    out.chain.push_back(std::move(next));
  }
}

}  // namespace

bool module_member(const Derivation& d, const std::vector<Derivation>& gens) {
  if (d.is_zero()) return true;
  if (gens.empty()) return false;
  const RingPtr& ring = d.ring();
  // Tag variables e_v; the module sits in tag degree one of (gens) + (e)^2.
  std::vector<std::string> tags;
  for (const auto& v : ring->names()) tags.push_back(fresh_name(*ring, "e_" + v, "_"));
  RingPtr tagged = extend_ring(ring, tags);
  auto encode = [&](const Derivation& x) {
    Polynomial out(tagged);
    for (std::size_t i = 0; i < ring->size(); ++i) {
      Polynomial c = x.coefficient(ring->name(i));
      if (!c.is_zero()) out += embed(c, tagged) * Polynomial::variable(tagged, tags[i]);
    }
    return out;
  };
  std::vector<Polynomial> ideal;
  for (const auto& g : gens) {
    require_same_ring(g.ring(), ring, "module membership");
    ideal.push_back(encode(g));
  }
  for (std::size_t i = 0; i < tags.size(); ++i) {
    for (std::size_t j = i; j < tags.size(); ++j) {
      ideal.push_back(Polynomial::variable(tagged, tags[i]) * Polynomial::variable(tagged, tags[j]));
    }
  }
  return ideal_member(encode(d), ideal, tagged);
}

InvolutivityReport involutivity_check(const Foliation& f) {
  InvolutivityReport report;
  for (std::size_t i = 0; i < f.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < f.generators.size(); ++j) {
      if (!module_member(lie_bracket(f.generators[i], f.generators[j]), f.generators)) {
        report.involutive = false;
        report.offending = std::make_pair(i, j);
        return report;
      }
    }
  }
  return report;
}

Ideal f_derivative_ideal(const Foliation& f, const Ideal& ideal) {
  Ideal out = ideal;
  for (const auto& g : ideal.generators()) {
    for (const auto& d : f.generators) out.add(d.apply(g));
  }
  return out;
}

ExtRational f_order_at(const Foliation& f, const Ideal& ideal, const Point& p) {
  require_same_ring(f.ring, ideal.ring(), "F-order");
  if (ideal.is_zero()) return ExtRational::infinite();
  FChain c = f_chain(translate_foliation(f, p), translate_ideal(ideal, p), false, 4096);
  if (!c.order) return ExtRational::infinite();
  return ExtRational(Rational(static_cast<unsigned long>(*c.order)));
}

bool is_f_invariant(const Foliation& f, const Ideal& ideal) {
  if (ideal.is_zero()) return true;
  GroebnerBasis gb = buchberger(ideal.generators(), ideal.ring());
  for (const auto& g : ideal.generators()) {
    for (const auto& d : f.generators) {
      if (!ideal_member(d.apply(g), gb)) return false;
    }
  }
  return true;
}

std::vector<CenterCoordinate> AlignedCenter::transverse() const {
  return {center.coords.begin(), center.coords.begin() + static_cast<std::ptrdiff_t>(transverse_count)};
}

std::vector<CenterCoordinate> AlignedCenter::invariant_part() const {
  return {center.coords.begin() + static_cast<std::ptrdiff_t>(transverse_count), center.coords.end()};
}

std::string AlignedCenter::to_string() const {
  std::string full = center.to_string();
  Center head = center;
  head.coords = transverse();
  Center tail = center;
  tail.coords = invariant_part();
  auto inner = [](const Center& c) {
    std::string s = c.to_string();
    return c.coords.empty() ? std::string("-") : s.substr(1, s.size() - 2);
  };
  return "(" + inner(head) + " | " + inner(tail) + ")";
}

namespace {

// Generators tangent to V(h), rewritten with h as the coordinate `pivot` and
// reduced mod it; the others are dropped.
Foliation residual_foliation(const Foliation& f, const ContactChoice& contact, const RingPtr& target) {
  Foliation out(target);
  for (const auto& v : f.log_vars) {
    if (v != contact.pivot) out.log_vars.push_back(v);
  }
  const Polynomial& h = contact.element;
  for (const auto& g : f.generators) {
    if (!ideal_member(g.apply(h), {h}, f.ring)) continue;
    Derivation d(target);
    for (const auto& [v, c] : g.coefficients()) {
      if (v == contact.pivot) continue;
      Polynomial r = restrict_to_hyperplane(apply_coordinate_change(c, contact.change), contact.pivot, target);
      if (!r.is_zero()) d.set_coefficient(v, std::move(r));
    }
    if (!d.is_zero() && std::find(out.generators.begin(), out.generators.end(), d) == out.generators.end()) {
      out.generators.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace

FoliatedResult foliated_invariant_and_center(const Foliation& f, const Ideal& ideal, const Point& p,
                                             const InvariantOptions& options) {
  if (ideal.is_zero()) throw Error(ErrorKind::InfiniteOrder, "the zero ideal has infinite order");
  const RingPtr& root_ring = ideal.ring();
  require_same_ring(f.ring, root_ring, "foliation");

  InvariantResult result;
  result.center.ring = root_ring;
  result.center.change = CoordinateChange::identity(root_ring);
  result.center.base = p;
  result.max_order_locus = Ideal::unit(root_ring);

  FoliatedResult out;
  RingPtr ring = root_ring;
  Foliation foliation = translate_foliation(f, p);
  MarkedSum sum;
  sum.components.push_back({translate_ideal(ideal, p), Rational(1)});
  bool root = true;
  std::size_t finite_entries = 0;

  while (!sum.empty()) {
    std::vector<FChain> chains;
    for (const auto& comp : sum.components) chains.push_back(f_chain(foliation, comp.ideal, !root, options.max_degree));

    std::optional<std::size_t> best;
    for (std::size_t m = 0; m < chains.size(); ++m) {
      if (!chains[m].order) continue;
      auto weight = [&](std::size_t k) {
        return sum.components[k].exponent * Rational(static_cast<unsigned long>(*chains[k].order));
      };
      if (!best || weight(m) < weight(*best)) {
        best = m;
      }
    }
    if (!best) {
      continue_invariant(result, ring, std::move(sum), root, options);
      for (std::size_t i = finite_entries; i < result.invariant.size(); ++i) {
        result.invariant[i] = ExtRational::infinite(result.invariant[i].value());
        result.levels[i].entry = result.invariant[i];
      }
      break;
    }
    const std::uint64_t a = *chains[*best].order;
    ExtRational entry(sum.components[*best].exponent * Rational(static_cast<unsigned long>(a)));
    InvariantLevel level{ring, sum, entry, std::nullopt};
    if (a == 0) {
      result.invariant.push_back(entry);
      result.levels.push_back(std::move(level));
      ++finite_entries;
      break;
    }

    const Ideal& top = chains[*best].chain[a - 1];
    if (root) result.max_order_locus = top;
    ContactChoice contact = choose_contact(top, working_truncation(a, options));

    result.invariant.push_back(entry);
    result.center.coords.push_back({embed(contact.element, root_ring), entry.value(), contact.pivot});
    result.center.change = compose(result.center.change, extend_change(contact.change, root_ring));
    level.contact = contact;
    result.levels.push_back(std::move(level));
    out.residual.push_back(foliation);
    ++finite_entries;

    RingPtr next_ring = drop_variable(ring, contact.pivot);
    MarkedSum expanded;
    for (std::size_t m = 0; m < sum.components.size(); ++m) {
      const auto& comp = sum.components[m];
      if (!chains[m].order) {
        expanded.components.push_back(comp);
        continue;
      }
      const std::uint64_t b = *chains[m].order;
      for (std::uint64_t i = 1; i <= b; ++i) {
        expanded.components.push_back({chains[m].chain[b - i], comp.exponent * Rational(static_cast<unsigned long>(b)) /
                                                                   Rational(static_cast<unsigned long>(i))});
      }
    }
    MarkedSum next = restrict_marked(normalize(std::move(expanded)), contact, next_ring);
    for (auto& comp : next.components) comp.ideal = localize_at_origin(comp.ideal);
    foliation = residual_foliation(foliation, contact, next_ring);
    sum = normalize(std::move(next));
    ring = next_ring;
    root = false;
  }

  out.invariant = std::move(result.invariant);
  out.levels = std::move(result.levels);
  out.center.center = std::move(result.center);
  out.center.transverse_count = std::min(finite_entries, out.center.center.coords.size());
  return out;
}

bool is_aligned_center(const Foliation& f, const AlignedCenter& c, const Point& p) {
  require_same_ring(f.ring, c.center.ring, "aligned center");
  Foliation local = translate_foliation(f, p);
  for (const auto& coord : c.transverse()) {
    bool paired = std::any_of(local.generators.begin(), local.generators.end(), [&](const Derivation& d) {
      return d.apply(coord.element).constant_term() != 0;
    });
    if (!paired) return false;
  }
  std::vector<Polynomial> rest;
  for (const auto& coord : c.invariant_part()) rest.push_back(coord.element);
  return is_f_invariant(local, Ideal(c.center.ring, rest));
}

FoliationTransform transform_foliation(const Foliation& f, const ReesPresentation& rp) {
  require_same_ring(f.ring, rp.base, "foliation transform");
  if (rp.change.truncation_degree) {
    throw Error(ErrorKind::Unsupported, "foliation transform along a truncated coordinate change");
  }
  // Coefficients in the center's coordinates: d(new u) = field applied to its old expression.
  auto in_center_coordinates = [&](const Derivation& g) {
    Derivation t(rp.base);
    for (const auto& [v, c] : g.coefficients()) t.set_coefficient(v, translate(c, rp.base_point));
    if (rp.change.is_identity()) return t;
    Derivation out(rp.base);
    for (const auto& u : rp.base->names()) {
      auto it = rp.change.inverse.find(u);
      Polynomial target = it == rp.change.inverse.end() ? Polynomial::variable(rp.base, u) : it->second;
      Polynomial c = apply_coordinate_change(t.apply(target), rp.change);
      if (!c.is_zero()) out.set_coefficient(u, std::move(c));
    }
    return out;
  };
  auto rename = [&](const std::string& v) {
    auto it = std::find(rp.center_vars.begin(), rp.center_vars.end(), v);
    return it == rp.center_vars.end() ? v : rp.primed[static_cast<std::size_t>(it - rp.center_vars.begin())];
  };
  auto weight = [&](const std::string& v) -> std::int64_t {
    auto it = std::find(rp.center_vars.begin(), rp.center_vars.end(), v);
    return it == rp.center_vars.end() ? 0 : static_cast<std::int64_t>(rp.weights[static_cast<std::size_t>(it - rp.center_vars.begin())]);
  };
  const std::size_t s_index = rp.ring->require(rp.s);

  FoliationTransform out;
  out.foliation = Foliation(rp.ring);
  for (const auto& v : f.log_vars) out.foliation.log_vars.push_back(rename(v));
  out.foliation.log_vars.push_back(rp.s);

  for (const auto& g : f.generators) {
    // Coefficient of d/dv' is s^{-w_v} times the pullback.
    std::vector<std::tuple<std::string, Polynomial, std::int64_t>> parts;
    std::optional<std::int64_t> power;
    const Derivation local = in_center_coordinates(g);
    for (const auto& [v, c] : local.coefficients()) {
      Polynomial pulled = substitute(c, rp.pullback, rp.ring);
      if (pulled.is_zero()) continue;
      std::int64_t val = INT64_MAX;
      for (const auto& [e, coeff] : pulled.terms()) val = std::min<std::int64_t>(val, e[s_index]);
      std::int64_t shift = -weight(v);
      if (!power || val + shift < *power) power = val + shift;
      parts.emplace_back(rename(v), std::move(pulled), shift);
    }
    Derivation d(rp.ring);
    for (auto& [v, pulled, shift] : parts) {
      std::int64_t k = shift - *power;
      Exponents e(rp.ring->size(), 0);
      if (k >= 0) {
        e[s_index] = static_cast<std::uint32_t>(k);
        d.set_coefficient(v, pulled * Polynomial::monomial(rp.ring, e));
      } else {
        e[s_index] = static_cast<std::uint32_t>(-k);
        d.set_coefficient(v, *divide_by_monomial(pulled, e));
      }
    }
    out.s_powers.push_back(power.value_or(0));
    out.foliation.generators.push_back(std::move(d));
  }
  return out;
}

const char* to_string(Smoothness s) {
  switch (s) {
    case Smoothness::Smooth: return "smooth";
    case Smoothness::LogSmooth: return "log-smooth";
    case Smoothness::Singular: return "singular";
  }
  return "?";
}

namespace {

using Matrix = std::vector<std::vector<Polynomial>>;

Polynomial determinant(const Matrix& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return m[0][0];
  Polynomial out(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * determinant(minor, ring);
    if (j % 2 == 0) out += term;
    else out -= term;
  }
  return out;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

std::vector<Polynomial> minors(const Matrix& m, std::size_t k, const RingPtr& ring) {
  std::vector<Polynomial> out;
  if (m.empty()) return out;
  for (const auto& rows : subsets(m.size(), k)) {
    for (const auto& cols : subsets(m[0].size(), k)) {
      Matrix sub;
      for (auto r : rows) {
        std::vector<Polynomial> row;
        for (auto c : cols) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      Polynomial d = determinant(sub, ring);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

struct RankData {
  std::size_t generic = 0;
  std::size_t at_point = 0;
  std::vector<Polynomial> locus;
};

RankData rank_data(const Matrix& m, const Point& p, const RingPtr& ring) {
  RankData r;
  r.locus = {Polynomial::constant(ring, 1)};
  const std::size_t max_k = m.empty() ? 0 : std::min(m.size(), m[0].size());
  for (std::size_t k = 1; k <= max_k; ++k) {
    auto ms = minors(m, k, ring);
    if (ms.empty()) break;
    r.generic = k;
    r.locus = ms;
    if (std::any_of(ms.begin(), ms.end(), [&](const Polynomial& d) { return d.evaluate(p) != 0; })) r.at_point = k;
  }
  return r;
}

}  // namespace

SmoothnessReport smoothness_check(const Foliation& f, const Point& p) {
  require_same_ring(f.ring, p.ring(), "smoothness point");
  const RingPtr& ring = f.ring;
  Matrix plain;
  Matrix log;
  bool logarithmic = true;
  for (const auto& g : f.generators) {
    std::vector<Polynomial> row;
    std::vector<Polynomial> log_row;
    for (std::size_t i = 0; i < ring->size(); ++i) {
      Polynomial c = g.coefficient(ring->name(i));
      row.push_back(c);
      if (std::find(f.log_vars.begin(), f.log_vars.end(), ring->name(i)) != f.log_vars.end()) {
        Exponents e(ring->size(), 0);
        e[i] = 1;
        auto q = divide_by_monomial(c, e);
        if (!q) logarithmic = false;
        log_row.push_back(q ? *q : Polynomial(ring));
      } else {
        log_row.push_back(c);
      }
    }
    plain.push_back(std::move(row));
    log.push_back(std::move(log_row));
  }
  SmoothnessReport report;
  RankData r = rank_data(plain, p, ring);
  report.generic_rank = r.generic;
  report.rank_at_point = r.at_point;
  report.singular_locus = Ideal(ring, r.locus);
  if (r.at_point == r.generic) {
    report.status = Smoothness::Smooth;
  } else if (logarithmic && !f.log_vars.empty()) {
    RankData lr = rank_data(log, p, ring);
    report.status = lr.at_point == lr.generic ? Smoothness::LogSmooth : Smoothness::Singular;
  } else {
    report.status = Smoothness::Singular;
  }
  return report;
}

namespace {

// Fields killing every df_m: for each (m+1)-subset of variables, the cofactor
// expansion of det(d/dv ; df_1 ; ... ; df_m).
Foliation kernel_foliation(const RingPtr& ring, const std::vector<Polynomial>& integrals) {
  Foliation out(ring);
  const std::size_t m = integrals.size();
  if (m >= ring->size()) return out;
  for (const auto& vars : subsets(ring->size(), m + 1)) {
    Derivation d(ring);
    for (std::size_t k = 0; k < vars.size(); ++k) {
      Matrix jac;
      for (const auto& f : integrals) {
        std::vector<Polynomial> row;
        for (std::size_t c = 0; c < vars.size(); ++c) {
          if (c != k) row.push_back(partial_derivative(f, vars[c]));
        }
        jac.push_back(std::move(row));
      }
      Polynomial cof = determinant(jac, ring);
      if (k % 2 == 1) cof = -cof;
      if (!cof.is_zero()) d.set_coefficient(ring->name(vars[k]), cof);
    }
    if (!d.is_zero() && std::find(out.generators.begin(), out.generators.end(), d) == out.generators.end()) {
      out.generators.push_back(std::move(d));
    }
  }
  return out;
}

// Solves each equation linear in one of `vars` (with constant coefficient)
// for that variable at q.
std::optional<Point> lift_to(const std::vector<Polynomial>& equations, const std::vector<std::string>& vars, Point q) {
  const RingPtr& ring = q.ring();
  std::vector<Rational> coords = q.coords();
  for (const auto& v : vars) {
    const std::size_t vi = ring->require(v);
    for (const auto& g : equations) {
      if (g.degree_in(vi) != 1) continue;
      Polynomial lin(ring);
      Polynomial rest(ring);
      for (const auto& [e, c] : g.terms()) {
        if (e[vi] == 1) {
          Exponents r = e;
          r[vi] = 0;
          lin.add_term(r, c);
        } else {
          rest.add_term(e, c);
        }
      }
      if (!lin.is_constant()) continue;
      coords[vi] = 0;
      coords[vi] = -rest.evaluate(Point(ring, coords)) / lin.constant_term();
      break;
    }
  }
  Point lifted(ring, coords);
  for (const auto& g : equations) {
    if (g.evaluate(lifted) != 0) return std::nullopt;
  }
  return lifted;
}

}  // namespace

GraphReduction graph_reduction(const std::vector<Polynomial>& first_integrals, const Ideal& ideal,
                               const InvariantOptions& options) {
  const RingPtr& base = ideal.ring();
  for (const auto& f : first_integrals) require_same_ring(f.ring(), base, "first integral");

  GraphReduction out;
  for (std::size_t m = 0; m < first_integrals.size(); ++m) {
    std::string name = first_integrals.size() == 1 ? "z" : "z" + std::to_string(m + 1);
    while (base->contains(name) ||
           std::find(out.graph_vars.begin(), out.graph_vars.end(), name) != out.graph_vars.end()) {
      name += "'";
    }
    out.graph_vars.push_back(name);
  }
  out.ring = extend_ring(base, out.graph_vars);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, out.ring));
  for (std::size_t m = 0; m < first_integrals.size(); ++m) {
    gens.push_back(Polynomial::variable(out.ring, out.graph_vars[m]) - embed(first_integrals[m], out.ring));
  }
  out.graph_ideal = Ideal(out.ring, gens);
  if (out.graph_ideal.is_zero()) throw Error(ErrorKind::Precondition, "graph reduction needs integrals or a nonzero ideal");

  out.ambient_foliation = Foliation::coordinate_span(out.ring, base->names());
  Foliation kernel = kernel_foliation(base, first_integrals);
  out.foliation = Foliation(out.ring);
  for (const auto& d : kernel.generators) out.foliation.generators.push_back(embed(d, out.ring));

  out.invariant = foliated_invariant_and_center(out.ambient_foliation, out.graph_ideal, Point::origin(out.ring), options);
  out.rees = rees_presentation(out.invariant.center.center);
  out.blowup_equation = controlled_transform(out.graph_ideal, out.rees);
  out.transformed = transform_foliation(out.foliation, out.rees);

  const auto& equations = out.blowup_equation.generators;
  std::vector<std::string> graph_primed;
  for (const auto& v : out.graph_vars) {
    auto it = std::find(out.rees.center_vars.begin(), out.rees.center_vars.end(), v);
    graph_primed.push_back(it == out.rees.center_vars.end() ? v : out.rees.primed[static_cast<std::size_t>(it - out.rees.center_vars.begin())]);
  }
  for (const auto& q : probe_points(out.rees)) {
    auto lifted = lift_to(equations, graph_primed, q);
    if (!lifted || on_vertex_locus(out.rees, *lifted)) continue;
    if (std::find_if(out.probes.begin(), out.probes.end(), [&](const auto& pr) { return pr.first == *lifted; }) !=
        out.probes.end()) {
      continue;
    }
    out.probes.emplace_back(*lifted, smoothness_check(out.transformed.foliation, *lifted).status);
  }

  // Singular locus of the transformed foliation on the strict transform lies in the vertex.
  SmoothnessReport sr = smoothness_check(out.transformed.foliation, Point::origin(out.rees.ring));
  std::vector<Polynomial> locus = sr.singular_locus.generators();
  for (const auto& g : equations) locus.push_back(g);
  GroebnerBasis gb = buchberger(locus, out.rees.ring);
  out.singular_only_on_vertex = std::all_of(out.rees.primed.begin(), out.rees.primed.end(), [&](const std::string& v) {
    Polynomial x = Polynomial::variable(out.rees.ring, v);
    Polynomial power = x;
    for (int k = 1; k <= 16; ++k, power = power * x) {
      if (ideal_member(power, gb)) return true;
    }
    return false;
  });
  return out;
}

}  // namespace blowup
