#include "blowup/groebner.hpp"

#include <algorithm>
#include <set>

#include "blowup/error.hpp"

namespace blowup {

MonomialOrder MonomialOrder::elimination(const RingPtr& ring, const std::vector<std::string>& eliminate) {
  MonomialOrder order;
  order.priority = eliminate;
  for (const auto& name : ring->names()) {
    if (std::find(eliminate.begin(), eliminate.end(), name) == eliminate.end()) {
      order.priority.push_back(name);
    }
  }
  order.block = eliminate.size();
  return order;
}

bool GroebnerBasis::is_unit() const {
  return generators.size() == 1 && generators.front().is_constant() && !generators.front().is_zero();
}

namespace {

// Exponents inside this file are permuted into priority order.
struct Term {
  Exponents e;
  Rational c;
};
using IPoly = std::vector<Term>;  // sorted, leading term first

class Orderer {
 public:
  Orderer(const RingPtr& ring, const MonomialOrder& order) : kind_(order.kind), block_(order.block) {
    const std::size_t n = ring->size();
    if (order.priority.empty()) {
      for (std::size_t i = 0; i < n; ++i) perm_.push_back(i);
    } else {
      for (const auto& name : order.priority) perm_.push_back(ring->require(name));
      if (perm_.size() != n) {
        throw Error(ErrorKind::Precondition, "monomial order must rank every ambient variable");
      }
    }
    if (block_ > n) block_ = n;
  }

  // >0 when a is larger.
  int compare(const Exponents& a, const Exponents& b) const {
    if (block_ > 0) {
      int c = compare_range(a, b, 0, block_);
      if (c != 0) return c;
      return compare_range(a, b, block_, a.size());
    }
    return compare_range(a, b, 0, a.size());
  }

  Exponents to_internal(const Exponents& e) const {
    Exponents out(e.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) out[i] = e[perm_[i]];
    return out;
  }
  Exponents to_external(const Exponents& e) const {
    Exponents out(e.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) out[perm_[i]] = e[i];
    return out;
  }

  IPoly convert(const Polynomial& f) const {
    IPoly p;
    p.reserve(f.size());
    for (const auto& [e, c] : f.terms()) p.push_back({to_internal(e), c});
    sort(p);
    return p;
  }
  Polynomial convert(const IPoly& p, const RingPtr& ring) const {
    Polynomial f(ring);
    for (const auto& t : p) f.add_term(to_external(t.e), t.c);
    return f;
  }
  void sort(IPoly& p) const {
    std::sort(p.begin(), p.end(), [this](const Term& a, const Term& b) { return compare(a.e, b.e) > 0; });
  }

 private:
  int compare_range(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) const {
    if (kind_ != OrderKind::Lex) {
      std::uint64_t da = 0, db = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da > db ? 1 : -1;
    }
    if (kind_ == OrderKind::GradedReverseLex) {
      for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
    for (std::size_t i = lo; i < hi; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }

  OrderKind kind_;
  std::size_t block_;
  std::vector<std::size_t> perm_;
};

Exponents lcm_of(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

void make_monic(IPoly& p) {
  if (p.empty() || p.front().c == 1) return;
  Rational inv = Rational(1) / p.front().c;
  for (auto& t : p) t.c *= inv;
}

IPoly reduce(const IPoly& f, const std::vector<const IPoly*>& basis, const Orderer& ord) {
  auto less = [&ord](const Exponents& a, const Exponents& b) { return ord.compare(a, b) > 0; };
  std::map<Exponents, Rational, decltype(less)> work(less);
  for (const auto& t : f) work.emplace(t.e, t.c);
  IPoly remainder;
  Exponents shifted;
  while (!work.empty()) {
    auto lead = work.begin();
    const IPoly* divisor = nullptr;
    for (const IPoly* g : basis) {
      if (divides(g->front().e, lead->first)) {
        divisor = g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back({lead->first, lead->second});
      work.erase(lead);
      continue;
    }
    const Rational factor = lead->second / divisor->front().c;
    Exponents shift = lead->first;
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= divisor->front().e[i];
    work.erase(lead);
    for (std::size_t k = 1; k < divisor->size(); ++k) {
      const Term& t = (*divisor)[k];
      shifted = t.e;
      for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += shift[i];
      auto [it, inserted] = work.try_emplace(shifted, 0);
      it->second -= factor * t.c;
      if (it->second == 0) work.erase(it);
    }
  }
  return remainder;
}

IPoly s_polynomial(const IPoly& f, const IPoly& g, const Orderer& ord) {
  Exponents l = lcm_of(f.front().e, g.front().e);
  IPoly out;
  auto append = [&](const IPoly& p, const Rational& scale) {
    Exponents shift = l;
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= p.front().e[i];
    for (std::size_t k = 1; k < p.size(); ++k) {
      Exponents e = p[k].e;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += shift[i];
      out.push_back({std::move(e), scale * p[k].c});
    }
  };
  append(f, Rational(1) / f.front().c);
  append(g, Rational(-1) / g.front().c);
  ord.sort(out);
  IPoly merged;
  for (auto& t : out) {
    if (!merged.empty() && merged.back().e == t.e) {
      merged.back().c += t.c;
      if (merged.back().c == 0) merged.pop_back();
    } else {
      merged.push_back(std::move(t));
    }
  }
  return merged;
}

std::vector<const IPoly*> pointers(const std::vector<IPoly>& g) {
  std::vector<const IPoly*> out;
  for (const auto& p : g) out.push_back(&p);
  return out;
}

std::vector<IPoly> buchberger_internal(std::vector<IPoly> g, const Orderer& ord, bool reduced) {
  std::erase_if(g, [](const IPoly& p) { return p.empty(); });
  for (auto& p : g) make_monic(p);
  auto is_unit = [](const IPoly& p) {
    return std::all_of(p.front().e.begin(), p.front().e.end(), [](auto x) { return x == 0; });
  };
  for (const auto& p : g) {
    if (is_unit(p)) return {IPoly{{p.front().e, Rational(1)}}};
  }

  std::set<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) queue.emplace(i, j);
  }
  while (!queue.empty()) {
    // Normal strategy: smallest lcm first.
    auto best = queue.begin();
    Exponents best_lcm = lcm_of(g[best->first].front().e, g[best->second].front().e);
    for (auto it = std::next(queue.begin()); it != queue.end(); ++it) {
      Exponents l = lcm_of(g[it->first].front().e, g[it->second].front().e);
      if (ord.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    queue.erase(best);
    if (coprime(g[i].front().e, g[j].front().e)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j || !divides(g[k].front().e, best_lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !queue.count(key(i, k)) && !queue.count(key(j, k));
    }
    if (chain) continue;
    IPoly r = reduce(s_polynomial(g[i], g[j], ord), pointers(g), ord);
    if (r.empty()) continue;
    make_monic(r);
    if (is_unit(r)) return {IPoly{{r.front().e, Rational(1)}}};
    g.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) queue.emplace(k, g.size() - 1);
  }

  // Minimize.
  std::vector<IPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].front().e, g[i].front().e)) continue;
      redundant = g[j].front().e != g[i].front().e || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  if (reduced) {
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<const IPoly*> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(&minimal[j]);
      }
      IPoly tail(minimal[i].begin() + 1, minimal[i].end());
      IPoly r = reduce(tail, others, ord);
      r.insert(r.begin(), minimal[i].front());
      minimal[i] = std::move(r);
    }
  }
  std::sort(minimal.begin(), minimal.end(),
            [&ord](const IPoly& a, const IPoly& b) { return ord.compare(a.front().e, b.front().e) > 0; });
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                         const MonomialOrder& order, bool reduced) {
  Orderer ord(ring, order);
  std::vector<IPoly> g;
  for (const auto& f : gens) {
    require_same_ring(f.ring(), ring, "buchberger");
    g.push_back(ord.convert(f));
  }
  GroebnerBasis gb;
  gb.ring = ring;
  gb.order = order;
  gb.reduced = reduced;
  for (const auto& p : buchberger_internal(std::move(g), ord, reduced)) {
    gb.generators.push_back(ord.convert(p, ring));
  }
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  require_same_ring(f.ring(), gb.ring, "normal_form");
  Orderer ord(gb.ring, gb.order);
  std::vector<IPoly> basis;
  for (const auto& g : gb.generators) basis.push_back(ord.convert(g));
  return ord.convert(reduce(ord.convert(f), pointers(basis), ord), gb.ring);
}

bool verify_groebner(const GroebnerBasis& gb) {
  Orderer ord(gb.ring, gb.order);
  std::vector<IPoly> basis;
  for (const auto& g : gb.generators) basis.push_back(ord.convert(g));
  auto ptrs = pointers(basis);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!reduce(s_polynomial(basis[i], basis[j], ord), ptrs, ord).empty()) return false;
    }
  }
  return true;
}

Exponents leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorKind::Precondition, "zero polynomial has no leading monomial");
  Orderer ord(f.ring(), order);
  return ord.to_external(ord.convert(f).front().e);
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& ideal, const RingPtr& ring) {
  if (f.is_zero()) return true;
  return ideal_member(f, buchberger(ideal, ring));
}

bool ideal_contains(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                    const RingPtr& ring) {
  auto gb = buchberger(b, ring);
  return std::all_of(a.begin(), a.end(), [&](const Polynomial& f) { return ideal_member(f, gb); });
}

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const RingPtr& ring) {
  return buchberger(a, ring).generators == buchberger(b, ring).generators;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                  const std::vector<std::string>& vars) {
  auto gb = buchberger(gens, ring, MonomialOrder::elimination(ring, vars));
  RingPtr target = ring;
  for (const auto& v : vars) target = drop_variable(target, v);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators) {
    bool free = std::none_of(vars.begin(), vars.end(),
                             [&](const std::string& v) { return g.involves(ring->require(v)); });
    if (free) out.push_back(embed(g, target));
  }
  return out;
}

std::vector<Polynomial> intersect(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                  const RingPtr& ring) {
  const std::string t = fresh_name(*ring, "_t", "'");
  RingPtr ext = extend_ring(ring, {t});
  Polynomial tp = Polynomial::variable(ext, t);
  Polynomial one = Polynomial::constant(ext, 1);
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(tp * embed(f, ext));
  for (const auto& f : b) gens.push_back((one - tp) * embed(f, ext));
  auto out = eliminate(gens, ext, {t});
  for (auto& f : out) f = embed(f, ring);
  return out;
}

namespace {

Polynomial exact_divide(const Polynomial& h, const Polynomial& f) {
  MonomialOrder order;
  Orderer ord(f.ring(), order);
  IPoly div = ord.convert(f);
  auto less = [&ord](const Exponents& a, const Exponents& b) { return ord.compare(a, b) > 0; };
  std::map<Exponents, Rational, decltype(less)> work(less);
  for (const auto& t : ord.convert(h)) work.emplace(t.e, t.c);
  IPoly quotient;
  while (!work.empty()) {
    auto lead = work.begin();
    if (!divides(div.front().e, lead->first)) {
      throw Error(ErrorKind::Precondition, "polynomial division is not exact");
    }
    Exponents shift = lead->first;
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= div.front().e[i];
    Rational factor = lead->second / div.front().c;
    quotient.push_back({shift, factor});
    for (const auto& t : div) {
      Exponents e = t.e;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += shift[i];
      auto [it, inserted] = work.try_emplace(e, 0);
      it->second -= factor * t.c;
      if (it->second == 0) work.erase(it);
    }
  }
  return ord.convert(quotient, f.ring());
}

}  // namespace

std::vector<Polynomial> colon(const std::vector<Polynomial>& gens, const Polynomial& f) {
  const RingPtr& ring = f.ring();
  if (f.is_zero()) return {Polynomial::constant(ring, 1)};
  std::vector<Polynomial> out;
  for (const auto& h : intersect(gens, {f}, ring)) out.push_back(exact_divide(h, f));
  return buchberger(out, ring).generators;
}

std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const Polynomial& f) {
  const RingPtr& ring = f.ring();
  if (f.is_zero()) throw Error(ErrorKind::Precondition, "saturation by the zero polynomial");
  const std::string t = fresh_name(*ring, "_t", "'");
  RingPtr ext = extend_ring(ring, {t});
  std::vector<Polynomial> all;
  for (const auto& g : gens) all.push_back(embed(g, ext));
  all.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, t) * embed(f, ext));
  auto out = eliminate(all, ext, {t});
  for (auto& g : out) g = embed(g, ring);
  return buchberger(out, ring).generators;
}

std::vector<Polynomial> saturate_by_colon_chain(const std::vector<Polynomial>& gens, const Polynomial& f) {
  const RingPtr& ring = f.ring();
  std::vector<Polynomial> current = buchberger(gens, ring).generators;
  while (true) {
    auto next = colon(current, f);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace blowup
