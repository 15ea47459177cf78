#include "blowup/derivation.hpp"

#include "blowup/error.hpp"

namespace blowup {

Derivation::Derivation(RingPtr ring, const std::map<std::string, Polynomial>& coefficients)
    : ring_(std::move(ring)) {
  for (const auto& [v, c] : coefficients) set_coefficient(v, c);
}

Derivation Derivation::partial(RingPtr ring, std::string_view var) {
  Derivation d(ring);
  d.set_coefficient(std::string(var), Polynomial::constant(ring, 1));
  return d;
}

Polynomial Derivation::coefficient(std::string_view var) const {
  auto it = coefficients_.find(std::string(var));
  return it == coefficients_.end() ? Polynomial(ring_) : it->second;
}

void Derivation::set_coefficient(const std::string& var, Polynomial c) {
  ring_->require(var);
  require_same_ring(c.ring(), ring_, "derivation");
  if (c.is_zero()) {
    coefficients_.erase(var);
  } else {
    coefficients_.insert_or_assign(var, std::move(c));
  }
}

Polynomial Derivation::apply(const Polynomial& f) const {
  require_same_ring(f.ring(), ring_, "derivation");
  Polynomial out(ring_);
  for (const auto& [v, c] : coefficients_) {
    auto d = partial_derivative(f, v);
    if (!d.is_zero()) out += c * d;
  }
  return out;
}

Derivation& Derivation::operator+=(const Derivation& other) {
  require_same_ring(other.ring_, ring_, "derivation");
  for (const auto& [v, c] : other.coefficients_) set_coefficient(v, coefficient(v) + c);
  return *this;
}

Derivation operator-(Derivation a, const Derivation& b) {
  require_same_ring(a.ring_, b.ring_, "derivation");
  for (const auto& [v, c] : b.coefficients_) a.set_coefficient(v, a.coefficient(v) - c);
  return a;
}

Derivation operator*(const Polynomial& f, const Derivation& d) {
  Derivation out(d.ring_);
  for (const auto& [v, c] : d.coefficients_) out.set_coefficient(v, f * c);
  return out;
}

std::string Derivation::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (const auto& name : ring_->names()) {
    auto it = coefficients_.find(name);
    if (it == coefficients_.end()) continue;
    const Polynomial& c = it->second;
    std::string coeff = c.to_string();
    bool negative = false;
    std::string body;
    if (c.size() == 1) {
      negative = c.terms().begin()->second < 0;
      if (negative) coeff = (-c).to_string();
      body = coeff == "1" ? "d/d" + name : coeff + "*d/d" + name;
    } else {
      body = "(" + coeff + ")*d/d" + name;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

Derivation lie_bracket(const Derivation& d1, const Derivation& d2) {
  require_same_ring(d1.ring(), d2.ring(), "lie bracket");
  Derivation out(d1.ring());
  for (const auto& name : d1.ring()->names()) {
    out.set_coefficient(name, d1.apply(d2.coefficient(name)) - d2.apply(d1.coefficient(name)));
  }
  return out;
}

Derivation embed(const Derivation& d, const RingPtr& target) {
  Derivation out(target);
  for (const auto& [v, c] : d.coefficients()) out.set_coefficient(v, embed(c, target));
  return out;
}

}  // namespace blowup
