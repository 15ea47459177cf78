#include "blowup/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "blowup/error.hpp"

namespace blowup {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) {
        throw Error(ErrorKind::Precondition, "duplicate variable '" + names_[i] + "'");
      }
    }
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "'");
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra) {
  auto names = base->names();
  for (const auto& n : extra) {
    if (!base->contains(n)) names.push_back(n);
  }
  return make_ring(std::move(names));
}

RingPtr drop_variable(const RingPtr& base, std::string_view name) {
  auto names = base->names();
  std::erase(names, std::string(name));
  return make_ring(std::move(names));
}

std::string fresh_name(const Ring& ring, std::string base, std::string_view suffix) {
  std::string candidate = base + std::string(suffix);
  while (ring.contains(candidate)) candidate += suffix;
  return candidate;
}

std::uint64_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

std::string to_string(const Order& order) {
  return order ? std::to_string(*order) : std::string("inf");
}

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what) {
  if (!same_ring(a, b)) {
    throw Error(ErrorKind::AmbientMismatch, std::string(what) + ": ambient variable lists differ");
  }
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  p.add_term(Exponents(ring->size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  Exponents e(ring->size(), 0);
  e[ring->require(name)] = 1;
  return monomial(std::move(ring), std::move(e));
}

Polynomial Polynomial::monomial(RingPtr ring, Exponents e, const Rational& c) {
  Polynomial p(std::move(ring));
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const {
  return coefficient(Exponents(ring_->size(), 0));
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_, "sub");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b,
                    std::uint64_t max_degree = std::numeric_limits<std::uint64_t>::max()) {
  Polynomial r(a.ring());
  Exponents e(a.ring()->size());
  for (const auto& [ea, ca] : a.terms()) {
    const auto da = total_degree(ea);
    if (da > max_degree) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) > max_degree) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "mul");
  return multiply(a, b);
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

namespace {

// Graded-lex "greater": higher total degree first, then lexicographically larger.
bool graded_lex_greater(const Exponents& a, const Exponents& b) {
  auto da = total_degree(a);
  auto db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

const Polynomial::TermMap::value_type& Polynomial::leading_graded_lex() const {
  if (terms_.empty()) throw Error(ErrorKind::Precondition, "zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (graded_lex_greater(it->first, best->first)) best = it;
  }
  return *best;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational lc = leading_graded_lex().second;
  Polynomial r(*this);
  r *= Rational(1) / lc;
  return r;
}

Rational Polynomial::evaluate(const Point& p) const {
  require_same_ring(ring_, p.ring(), "evaluate");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size() && term != 0; ++i) {
      if (e[i] == 0) continue;
      Rational v = p[i];
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), v.get_num_mpz_t(), e[i]);
      mpz_pow_ui(power.get_den_mpz_t(), v.get_den_mpz_t(), e[i]);
      term *= power;
    }
    total += term;
  }
  return total;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return graded_lex_greater(a->first, b->first); });

  std::ostringstream out;
  bool first = true;
  for (const auto* term : order) {
    const auto& [e, c] = *term;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_->name(i);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    Rational magnitude = abs(c);
    std::string body;
    if (mono.empty()) {
      body = blowup::to_string(magnitude);
    } else if (magnitude == 1) {
      body = mono;
    } else {
      body = blowup::to_string(magnitude) + "*" + mono;
    }
    if (first) {
      out << (c < 0 ? "-" : "") << body;
    } else {
      out << (c < 0 ? " - " : " + ") << body;
    }
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

Point::Point(RingPtr ring) : ring_(std::move(ring)), coords_(ring_->size(), Rational(0)) {}

Point::Point(RingPtr ring, std::vector<Rational> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
  if (coords_.size() != ring_->size()) {
    throw Error(ErrorKind::Precondition, "point must assign every ambient variable");
  }
}

Point::Point(RingPtr ring, const std::map<std::string, Rational>& coords)
    : ring_(std::move(ring)), coords_(ring_->size(), Rational(0)) {
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto it = coords.find(ring_->name(i));
    if (it == coords.end()) {
      throw Error(ErrorKind::Precondition, "point does not assign '" + ring_->name(i) + "'");
    }
    coords_[i] = it->second;
  }
  for (const auto& [name, v] : coords) ring_->require(name);
}

bool Point::is_origin() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& v) { return v == 0; });
}

std::string Point::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) s += ", ";
    s += blowup::to_string(coords_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op, unsigned k) {
  switch (op) {
    case ArithOp::Add: return f + g;
    case ArithOp::Sub: return f - g;
    case ArithOp::Mul: return f * g;
    case ArithOp::Pow: return f.pow(k);
  }
  return f;
}

Polynomial partial_derivative(const Polynomial& f, std::string_view var) {
  return partial_derivative(f, f.ring()->require(var));
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  Polynomial r(f.ring());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

namespace {

// Powers of one substitution image, built on demand.
class PowerCache {
 public:
  PowerCache(Polynomial base, std::uint64_t max_degree)
      : max_degree_(max_degree), powers_{Polynomial::constant(base.ring(), 1), base} {}

  const Polynomial& get(std::uint32_t k) {
    while (powers_.size() <= k) powers_.push_back(multiply(powers_.back(), powers_[1], max_degree_));
    return powers_[k];
  }

 private:
  std::uint64_t max_degree_;
  std::vector<Polynomial> powers_;
};

Polynomial substitute_impl(const Polynomial& f, const Substitution& map, const RingPtr& target,
                           std::uint64_t max_degree) {
  const Ring& src = *f.ring();
  std::vector<std::optional<PowerCache>> cache(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = map.find(src.name(i));
    if (it != map.end()) {
      require_same_ring(it->second.ring(), target, "substitute");
      cache[i].emplace(it->second, max_degree);
    } else if (f.involves(i)) {
      cache[i].emplace(Polynomial::variable(target, src.name(i)), max_degree);
    }
  }
  Polynomial result(target);
  for (const auto& [e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      if (e[i] == 0) continue;
      term = multiply(term, cache[i]->get(e[i]), max_degree);
    }
    result += term;
  }
  return result;
}

}  // namespace

Polynomial substitute(const Polynomial& f, const Substitution& map, const RingPtr& target) {
  return substitute_impl(f, map, target, std::numeric_limits<std::uint64_t>::max());
}

Polynomial substitute_truncated(const Polynomial& f, const Substitution& map, const RingPtr& target,
                                std::uint32_t max_degree) {
  return substitute_impl(f, map, target, max_degree);
}

Polynomial embed(const Polynomial& f, const RingPtr& target) {
  if (same_ring(f.ring(), target)) {
    Polynomial r(target);
    for (const auto& [e, c] : f.terms()) r.add_term(e, c);
    return r;
  }
  const Ring& src = *f.ring();
  std::vector<std::optional<std::size_t>> index(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) index[i] = target->index_of(src.name(i));
  Polynomial r(target);
  for (const auto& [e, c] : f.terms()) {
    Exponents out(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!index[i]) {
        throw Error(ErrorKind::AmbientMismatch,
                    "variable '" + src.name(i) + "' is not in the target ambient");
      }
      out[*index[i]] = e[i];
    }
    r.add_term(out, c);
  }
  return r;
}

Polynomial restrict_to_hyperplane(const Polynomial& f, std::string_view var, const RingPtr& target) {
  const std::size_t v = f.ring()->require(var);
  Polynomial kept(f.ring());
  for (const auto& [e, c] : f.terms()) {
    if (e[v] == 0) kept.add_term(e, c);
  }
  return embed(kept, target);
}

Polynomial truncate(const Polynomial& f, std::uint32_t max_degree) {
  Polynomial r(f.ring());
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) <= max_degree) r.add_term(e, c);
  }
  return r;
}

Polynomial translate(const Polynomial& f, const Point& p) {
  require_same_ring(f.ring(), p.ring(), "translate");
  if (p.is_origin()) return f;
  Substitution shift;
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (p[i] == 0) continue;
    shift.emplace(f.ring()->name(i),
                  Polynomial::variable(f.ring(), f.ring()->name(i)) + Polynomial::constant(f.ring(), p[i]));
  }
  return substitute(f, shift, f.ring());
}

Order vanishing_order_at_origin(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (const auto& [e, c] : f.terms()) best = std::min(best, total_degree(e));
  return best;
}

Order vanishing_order(const Polynomial& f, const Point& p) {
  if (f.is_zero()) return std::nullopt;
  if (p.is_origin()) return vanishing_order_at_origin(f);
  if (f.evaluate(p) != 0) return 0;
  return vanishing_order_at_origin(translate(f, p));
}

Order weighted_valuation(const Polynomial& f, const Weights& weights) {
  if (f.is_zero()) return std::nullopt;
  std::vector<std::uint64_t> w(f.ring()->size(), 0);
  for (const auto& [name, weight] : weights) {
    if (auto i = f.ring()->index_of(name)) w[*i] = weight;
  }
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (const auto& [e, c] : f.terms()) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += std::uint64_t{e[i]} * w[i];
    best = std::min(best, v);
  }
  return best;
}

std::pair<Exponents, Polynomial> split_monomial_content(const Polynomial& f) {
  Exponents content(f.ring()->size(), 0);
  if (f.is_zero()) return {content, f};
  content = f.terms().begin()->first;
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) content[i] = std::min(content[i], e[i]);
  }
  return {content, *divide_by_monomial(f, content)};
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer den = 1;
  Integer num = 0;
  for (const auto& [e, c] : f.terms()) {
    den = lcm(den, Integer(c.get_den()));
    num = gcd(num, Integer(c.get_num()));
  }
  Polynomial r = f;
  r *= Rational(den) / Rational(num);
  return r;
}

std::optional<Polynomial> divide_by_monomial(const Polynomial& f, const Exponents& divisor) {
  Polynomial r(f.ring());
  for (const auto& [e, c] : f.terms()) {
    if (!divides(divisor, e)) return std::nullopt;
    Exponents q = e;
    for (std::size_t i = 0; i < q.size(); ++i) q[i] -= divisor[i];
    r.add_term(q, c);
  }
  return r;
}

}  // namespace blowup
