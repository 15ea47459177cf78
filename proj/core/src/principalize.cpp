#include <algorithm>
#include <set>

#include "blowup/blowup.hpp"
#include "blowup/error.hpp"

namespace blowup {

namespace {

Point unit_point(const RingPtr& ring, std::size_t i, const Rational& value = 1) {
  std::vector<Rational> coords(ring->size(), Rational(0));
  coords[i] = value;
  return Point(ring, coords);
}

Point shifted(const Point& base, const Point& offset) {
  std::vector<Rational> coords = base.coords();
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += offset[i];
  return Point(base.ring(), coords);
}

ProbeResult probe(const Ideal& ideal, const Point& p, bool on_vertex, const InvariantOptions& options) {
  ProbeResult r{p, on_vertex, {}, {}};
  auto res = invariant_and_center(ideal, p, options);
  r.invariant = res.invariant;
  r.center = res.center.to_string();
  return r;
}

bool worse(const ProbeResult& a, const std::optional<ProbeResult>& b) {
  return !b || compare_invariants(a.invariant, b->invariant) == Comparison::Greater;
}

}  // namespace

std::vector<Point> probe_points(const ReesPresentation& rp, const std::vector<Point>& extra) {
  std::vector<Point> out{Point::origin(rp.ring)};
  for (std::size_t i = 0; i < rp.ring->size(); ++i) out.push_back(unit_point(rp.ring, i));
  for (const auto& p : extra) {
    require_same_ring(p.ring(), rp.ring, "probe point");
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

bool on_vertex_locus(const ReesPresentation& rp, const Point& p) {
  return std::all_of(rp.primed.begin(), rp.primed.end(),
                     [&](const std::string& v) { return p[rp.ring->require(v)] == 0; });
}

CriterionReport check_criterion(const Ideal& ideal, const Center& center, const Point& p,
                                const std::vector<Point>& extra_probes, const InvariantOptions& options) {
  CriterionReport report;
  auto original = invariant_and_center(ideal, p, options);
  report.original = original.invariant;
  const RingPtr& ring = ideal.ring();

  // (a)
  std::vector<Polynomial> elements;
  for (const auto& c : center.coords) elements.push_back(c.element);
  bool contained = ideal_contains(original.max_order_locus.generators(), elements, ring);
  bool maximal = true;
  if (center.is_coordinate_center()) {
    for (std::size_t i = 0; i < ring->size(); ++i) {
      const std::string& v = ring->name(i);
      bool in_center = std::any_of(center.coords.begin(), center.coords.end(),
                                   [&](const CenterCoordinate& c) { return c.pivot == v; });
      if (in_center) continue;
      auto q = shifted(p, unit_point(ring, i));
      if (compare_invariants(invariant_and_center(ideal, q, options).invariant, report.original) !=
          Comparison::Equal) {
        maximal = false;
      }
    }
  }
  report.a = contained && maximal;
  if (!contained) report.note = "D^(a1-1)(I) is not contained in the center coordinates; ";
  if (!maximal) report.note += "V(center) has points of smaller invariant; ";

  // (b)
  ReesPresentation rp = rees_presentation(center);
  TransformResult controlled;
  try {
    controlled = controlled_transform(ideal, rp);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InadmissibleCenter) throw;
    report.b = false;
    report.note += e.what();
    return report;
  }
  Ideal transformed = controlled.ideal();
  bool ok = true;
  for (const auto& q : probe_points(rp, extra_probes)) {
    ProbeResult r = probe(transformed, q, on_vertex_locus(rp, q), options);
    Comparison c = compare_invariants(r.invariant, report.original);
    if (c == Comparison::Greater || (!r.on_vertex && c != Comparison::Less)) ok = false;
    if (worse(r, report.worst)) report.worst = r;
    if (!r.on_vertex && worse(r, report.worst_off_vertex)) report.worst_off_vertex = r;
    report.probes.push_back(std::move(r));
  }
  report.b = ok;
  return report;
}

const char* to_string(PrincipalizeTrace::Status status) {
  switch (status) {
    case PrincipalizeTrace::Status::Principalized: return "principalized";
    case PrincipalizeTrace::Status::AlreadyPrincipal: return "already-principal";
    case PrincipalizeTrace::Status::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

struct Pending {
  Ideal ideal;
  Point point;
  std::optional<std::size_t> parent;
  Invariant parent_invariant;
  std::set<std::string> exceptional;
};

// Unit, or a single monomial in exceptional variables, in the local ring at p.
bool resolved_at(const Ideal& ideal, const Point& p, const std::set<std::string>& exceptional) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(translate(g, p));
  Ideal local = localize_at_origin(Ideal(ideal.ring(), gens));
  if (local.has_constant_generator()) return true;
  if (local.generators().size() != 1 || local.generators()[0].size() != 1) return false;
  const auto& e = local.generators()[0].terms().begin()->first;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0 && !exceptional.count(ideal.ring()->name(i))) return false;
  }
  return true;
}

}  // namespace

PrincipalizeTrace principalize(const Ideal& ideal, const PrincipalizeOptions& options) {
  PrincipalizeTrace trace;
  const RingPtr& ring = ideal.ring();
  if (ideal.is_zero()) throw Error(ErrorKind::InfiniteOrder, "cannot principalize the zero ideal");
  if (buchberger(ideal.generators(), ring).is_unit()) {
    trace.status = PrincipalizeTrace::Status::AlreadyPrincipal;
    return trace;
  }

  std::vector<Point> starts{Point::origin(ring)};
  for (std::size_t i = 0; i < ring->size(); ++i) {
    starts.push_back(unit_point(ring, i));
    starts.push_back(unit_point(ring, i, -1));
  }
  std::optional<ProbeResult> best;
  for (const auto& q : starts) {
    ProbeResult r = probe(ideal, q, false, options.invariant);
    if (worse(r, best)) best = r;
  }
  if (best->invariant == Invariant{ExtRational(0)}) {
    throw Error(ErrorKind::NoRationalWitness,
                "no probe point lies on V(I); locus ideal " + ideal.to_string());
  }

  std::vector<Pending> stack;
  stack.push_back({ideal, best->point, std::nullopt, {}, {}});
  while (!stack.empty()) {
    if (trace.steps.size() >= options.max_steps) {
      trace.status = PrincipalizeTrace::Status::BudgetExhausted;
      return trace;
    }
    Pending node = std::move(stack.back());
    stack.pop_back();

    PrincipalizeStep step;
    step.index = trace.steps.size();
    step.parent = node.parent;
    step.point = node.point;
    auto res = invariant_and_center(node.ideal, node.point, options.invariant);
    step.invariant = res.invariant;
    step.center = res.center.to_string();
    if (node.parent && compare_invariants(res.invariant, node.parent_invariant) != Comparison::Less) {
      step.decrease_violation = true;
    }
    step.reduced = reduce_center(res.center);
    ReesPresentation rp = rees_presentation(step.reduced, res.center);
    step.exceptional = rp.s;
    step.transform = controlled_transform(node.ideal, rp);
    trace.exceptional.push_back(rp.s);

    std::set<std::string> exceptional{rp.s};
    for (const auto& v : node.exceptional) {
      auto it = std::find(rp.center_vars.begin(), rp.center_vars.end(), v);
      exceptional.insert(it == rp.center_vars.end() ? v : rp.primed[static_cast<std::size_t>(it - rp.center_vars.begin())]);
    }

    Ideal transformed = step.transform.ideal();
    std::vector<Pending> children;
    std::vector<Invariant> child_invariants;
    for (const auto& q : probe_points(rp)) {
      ProbeResult r = probe(transformed, q, on_vertex_locus(rp, q), options.invariant);
      bool branch = !r.on_vertex && !resolved_at(transformed, q, exceptional);
      if (branch) {
        children.push_back({transformed, q, step.index, step.invariant, exceptional});
        child_invariants.push_back(r.invariant);
      }
      step.probes.push_back(std::move(r));
    }
    // Worst child is explored first.
    std::vector<std::size_t> order(children.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return compare_invariants(child_invariants[a], child_invariants[b]) == Comparison::Less;
    });
    for (auto i : order) stack.push_back(std::move(children[i]));
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

}  // namespace blowup
