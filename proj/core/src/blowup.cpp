#include "blowup/blowup.hpp"

#include <algorithm>

#include "blowup/error.hpp"

namespace blowup {

namespace {

std::string exceptional_name(const std::vector<std::string>& taken, const std::string& base) {
  auto free = [&](const std::string& n) { return std::find(taken.begin(), taken.end(), n) == taken.end(); };
  if (free(base)) return base;
  for (int i = 1;; ++i) {
    std::string n = base + std::to_string(i);
    if (free(n)) return n;
  }
}

std::string primed_name(const std::vector<std::string>& taken, const std::string& base) {
  std::string n = base + "'";
  while (std::find(taken.begin(), taken.end(), n) != taken.end()) n += "'";
  return n;
}

Polynomial power_of(const RingPtr& ring, const std::string& var, std::uint64_t k) {
  Exponents e(ring->size(), 0);
  e[ring->require(var)] = static_cast<std::uint32_t>(k);
  return Polynomial::monomial(ring, e);
}

Order valuation_in(const Polynomial& f, const std::string& var) {
  if (f.is_zero()) return std::nullopt;
  const std::size_t v = f.ring()->require(var);
  std::uint64_t best = UINT64_MAX;
  for (const auto& [e, c] : f.terms()) best = std::min<std::uint64_t>(best, e[v]);
  return best;
}

Polynomial divide_by_power(const Polynomial& f, const std::string& var, std::uint64_t k) {
  Exponents e(f.ring()->size(), 0);
  e[f.ring()->require(var)] = static_cast<std::uint32_t>(k);
  return *divide_by_monomial(f, e);
}

}  // namespace

RingPtr ReesPresentation::relation_ring() const { return extend_ring(base, ring->names()); }

std::vector<Polynomial> ReesPresentation::relations() const {
  RingPtr r = relation_ring();
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < center_vars.size(); ++i) {
    out.push_back(Polynomial::variable(r, center_vars[i]) -
                  power_of(r, s, weights[i]) * Polynomial::variable(r, primed[i]));
  }
  return out;
}

std::vector<Polynomial> ReesPresentation::vertex_ideal() const {
  std::vector<Polynomial> out;
  for (const auto& p : primed) out.push_back(Polynomial::variable(ring, p));
  return out;
}

bool ReesPresentation::relations_homogeneous() const {
  RingPtr r = relation_ring();
  for (const auto& rel : relations()) {
    std::optional<std::int64_t> degree;
    for (const auto& [e, c] : rel.terms()) {
      std::int64_t d = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        auto it = grading.find(r->name(i));
        if (it != grading.end() && !base->contains(r->name(i))) d += it->second * e[i];
      }
      if (degree && *degree != d) return false;
      degree = d;
    }
    if (degree != 0) return false;
  }
  return true;
}

ReesPresentation rees_presentation(const ReducedCenter& rc, const Center& center) {
  for (const auto& c : center.coords) {
    bool coordinate = c.element == Polynomial::variable(center.ring, c.pivot);
    bool realized = center.change.inverse.count(c.pivot) > 0;
    if (!coordinate && !realized) {
      throw Error(ErrorKind::NonCoordinateCenter,
                  "center element " + c.element.to_string() + " is not a coordinate; apply its coordinate change first");
    }
  }
  ReesPresentation rp;
  rp.base = center.ring;
  rp.ell = rc.ell;
  rp.weights = rc.weights;
  rp.change = center.change;
  rp.base_point = center.base.ring() ? center.base : Point::origin(center.ring);

  std::vector<std::string> taken = center.ring->names();
  rp.s = exceptional_name(taken, "s");
  taken.push_back(rp.s);
  for (const auto& c : center.coords) {
    rp.center_vars.push_back(c.pivot);
    rp.primed.push_back(primed_name(taken, c.pivot));
    taken.push_back(rp.primed.back());
  }
  std::vector<std::string> names;
  for (const auto& v : center.ring->names()) {
    auto it = std::find(rp.center_vars.begin(), rp.center_vars.end(), v);
    names.push_back(it == rp.center_vars.end() ? v : rp.primed[static_cast<std::size_t>(it - rp.center_vars.begin())]);
  }
  names.push_back(rp.s);
  rp.ring = make_ring(names);

  rp.grading[rp.s] = -1;
  for (const auto& v : center.ring->names()) {
    auto it = std::find(rp.center_vars.begin(), rp.center_vars.end(), v);
    if (it == rp.center_vars.end()) {
      rp.pullback.emplace(v, Polynomial::variable(rp.ring, v));
      rp.grading[v] = 0;
    } else {
      auto i = static_cast<std::size_t>(it - rp.center_vars.begin());
      rp.pullback.emplace(v, power_of(rp.ring, rp.s, rp.weights[i]) * Polynomial::variable(rp.ring, rp.primed[i]));
      rp.grading[rp.primed[i]] = static_cast<std::int64_t>(rp.weights[i]);
    }
  }
  return rp;
}

ReesPresentation rees_presentation(const Center& center) {
  return rees_presentation(reduce_center(center), center);
}

const char* to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::Total: return "total";
    case TransformKind::Controlled: return "controlled";
    case TransformKind::Proper: return "proper";
  }
  return "?";
}

std::string TransformResult::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i > 0) out += ", ";
    const auto& g = generators[i];
    const Order k = kind == TransformKind::Total && i < s_exponents.size() ? s_exponents[i] : Order(0);
    if (k && *k > 0) {
      std::string sk = *k == 1 ? s : s + "^" + std::to_string(*k);
      out += sk + "*(" + divide_by_power(g, s, *k).to_string() + ")";
    } else {
      out += g.to_string();
    }
  }
  return out + ")";
}

Ideal in_center_coordinates(const Ideal& ideal, const ReesPresentation& rp) {
  require_same_ring(ideal.ring(), rp.base, "transform");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    gens.push_back(apply_coordinate_change(translate(g, rp.base_point), rp.change));
  }
  return Ideal(rp.base, gens);
}

TransformResult total_transform(const Ideal& ideal, const ReesPresentation& rp) {
  TransformResult t;
  t.kind = TransformKind::Total;
  t.ring = rp.ring;
  t.s = rp.s;
  const Ideal local = in_center_coordinates(ideal, rp);
  for (const auto& g : local.generators()) {
    Polynomial pulled = substitute(g, rp.pullback, rp.ring);
    t.s_exponents.push_back(valuation_in(pulled, rp.s));
    t.generators.push_back(std::move(pulled));
  }
  return t;
}

TransformResult controlled_transform(const Ideal& ideal, const ReesPresentation& rp, std::uint64_t power) {
  TransformResult t = total_transform(ideal, rp);
  t.kind = TransformKind::Controlled;
  t.divided = power;
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    const Order& k = t.s_exponents[i];
    if (k && *k < power) {
      throw Error(ErrorKind::InadmissibleCenter,
                  "center is not admissible: pullback of generator " + std::to_string(i + 1) + " is divisible only by " +
                      rp.s + "^" + std::to_string(*k) + ", need " + rp.s + "^" + std::to_string(power));
    }
    t.generators[i] = divide_by_power(t.generators[i], rp.s, power);
  }
  return t;
}

TransformResult controlled_transform(const Ideal& ideal, const ReesPresentation& rp) {
  if (!is_integer(rp.ell)) {
    throw Error(ErrorKind::Precondition, "reduced center has non-integer l=" + to_string(rp.ell));
  }
  return controlled_transform(ideal, rp, static_cast<std::uint64_t>(to_int64(rp.ell)));
}

TransformResult proper_transform(const Ideal& ideal, const ReesPresentation& rp) {
  TransformResult t = total_transform(ideal, rp);
  t.kind = TransformKind::Proper;
  if (t.generators.size() == 1) {
    t.generators[0] = divide_by_power(t.generators[0], rp.s, *t.s_exponents[0]);
  } else if (!t.generators.empty()) {
    t.generators = saturate(t.generators, Polynomial::variable(rp.ring, rp.s));
  }
  t.s_exponents.clear();
  for (const auto& g : t.generators) t.s_exponents.push_back(valuation_in(g, rp.s));
  return t;
}

std::vector<Polynomial> EtaleChart::relations(const ReesPresentation& rp) const {
  RingPtr r = relation_ring(rp);
  std::vector<Polynomial> out;
  for (const auto& c : rp.center_vars) {
    auto it = substitution.find(c);
    if (it == substitution.end()) continue;
    Polynomial lhs = Polynomial::variable(r, c);
    Polynomial rhs = embed(it->second, r);
    if (!(lhs == rhs)) out.push_back(lhs - rhs);
  }
  return out;
}

RingPtr EtaleChart::relation_ring(const ReesPresentation& rp) const {
  return extend_ring(rp.base, ring->names());
}

EtaleChart etale_chart(const ReesPresentation& rp, std::size_t index) {
  if (index >= rp.center_vars.size()) {
    throw Error(ErrorKind::Precondition, "chart index " + std::to_string(index + 1) + " out of range 1.." +
                                             std::to_string(rp.center_vars.size()));
  }
  EtaleChart chart;
  chart.index = index;
  chart.chart_var = rp.center_vars[index];
  const std::uint64_t wi = rp.weights[index];
  chart.group_order = wi;

  std::vector<std::string> taken = rp.base->names();
  for (const auto& n : rp.ring->names()) taken.push_back(n);
  chart.u = wi == 1 ? chart.chart_var : exceptional_name(taken, "u");

  std::vector<std::string> names;
  for (const auto& v : rp.base->names()) {
    auto it = std::find(rp.center_vars.begin(), rp.center_vars.end(), v);
    if (it == rp.center_vars.end()) {
      names.push_back(v);
    } else {
      auto j = static_cast<std::size_t>(it - rp.center_vars.begin());
      names.push_back(j == index ? chart.u : rp.primed[j]);
    }
  }
  chart.ring = make_ring(names);
  for (const auto& v : rp.base->names()) {
    auto it = std::find(rp.center_vars.begin(), rp.center_vars.end(), v);
    if (it == rp.center_vars.end()) {
      chart.substitution.emplace(v, Polynomial::variable(chart.ring, v));
      chart.action_weights[v] = 0;
      continue;
    }
    auto j = static_cast<std::size_t>(it - rp.center_vars.begin());
    Polynomial upow = power_of(chart.ring, chart.u, rp.weights[j]);
    if (j == index) {
      chart.substitution.emplace(v, upow);
      chart.action_weights[chart.u] = wi == 1 ? 0 : 1;
    } else {
      chart.substitution.emplace(v, upow * Polynomial::variable(chart.ring, rp.primed[j]));
      chart.action_weights[rp.primed[j]] = (wi - rp.weights[j] % wi) % wi;
    }
  }
  return chart;
}

ChartTransform chart_transform(const Ideal& ideal, const ReesPresentation& rp, const EtaleChart& chart) {
  if (!is_integer(rp.ell)) {
    throw Error(ErrorKind::Precondition, "reduced center has non-integer l=" + to_string(rp.ell));
  }
  const auto ell = static_cast<std::uint64_t>(to_int64(rp.ell));
  ChartTransform t;
  t.ring = chart.ring;
  t.group_order = chart.group_order;
  t.action_weights = chart.action_weights;
  const Ideal local = in_center_coordinates(ideal, rp);
  for (const auto& g : local.generators()) {
    Polynomial pulled = substitute(g, chart.substitution, chart.ring);
    Order k = valuation_in(pulled, chart.u);
    if (k && *k < ell) {
      throw Error(ErrorKind::InadmissibleCenter, "chart pullback is divisible only by " + chart.u + "^" +
                                                     std::to_string(*k) + ", need " + std::to_string(ell));
    }
    t.u_exponents.push_back(k);
    t.generators.push_back(k ? divide_by_power(pulled, chart.u, ell) : pulled);
  }
  return t;
}

}  // namespace blowup

namespace blowup {

std::vector<Derivation> relative_derivations(const ReesPresentation& rp) {
  std::vector<Derivation> ops;
  for (const auto& v : rp.ring->names()) {
    if (v != rp.s) ops.push_back(Derivation::partial(rp.ring, v));
  }
  return ops;
}

Ideal relative_derivative_ideal(const Ideal& on_b, const ReesPresentation& rp) {
  require_same_ring(on_b.ring(), rp.ring, "relative derivative");
  return derivative_ideal(on_b, relative_derivations(rp));
}

TransformResult derivative_transform(const Ideal& ideal, const ReesPresentation& rp) {
  if (!is_integer(rp.ell) || rp.weights.empty()) {
    throw Error(ErrorKind::Precondition, "derivative transform needs an integral reduced center");
  }
  const auto ell = static_cast<std::uint64_t>(to_int64(rp.ell));
  return controlled_transform(derivative_ideal(ideal), rp, ell - rp.weights.front());
}

}  // namespace blowup
