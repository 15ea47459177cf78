#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blowup/rational.hpp"

namespace blowup {

/// Ordered list of distinct variable names; the ambient of a polynomial.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t require(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;
RingPtr make_ring(std::vector<std::string> names);
bool same_ring(const RingPtr& a, const RingPtr& b);
/// `base` followed by `extra` names not already present.
RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra);
/// `base` without `name`.
RingPtr drop_variable(const RingPtr& base, std::string_view name);
/// `base + suffix` made unique against the ring (x -> x', x' -> x'').
std::string fresh_name(const Ring& ring, std::string base, std::string_view suffix);

/// A monomial is stored densely: one exponent per ambient variable. Zero
/// entries are absent variables.
using Exponents = std::vector<std::uint32_t>;
std::uint64_t total_degree(const Exponents& e);

/// Vanishing order; `std::nullopt` stands for infinity (the zero polynomial).
using Order = std::optional<std::uint64_t>;
std::string to_string(const Order& order);

class Point;

/// Sparse multivariate polynomial over the rationals.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit Polynomial(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, Exponents e, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;
  /// Highest total degree; 0 for the zero polynomial.
  std::uint64_t degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  /// Adds `c * x^e`, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator+(Polynomial a, const Rational& c) {
    a.add_term(Exponents(a.ring_->size(), 0), c);
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Rational& c) {
    a.add_term(Exponents(a.ring_->size(), 0), -c);
    return a;
  }
  Polynomial pow(unsigned k) const;

  /// Term of highest total degree, ties broken lexicographically by ambient order.
  const TermMap::value_type& leading_graded_lex() const;
  /// Divides by the graded-lex leading coefficient.
  Polynomial monic() const;

  Rational evaluate(const Point& p) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical rendering: graded-lex descending, `*` between factors, `^`
  /// for powers, coefficients as `p/q`.
  std::string to_string() const;

 private:
  RingPtr ring_;
  TermMap terms_;
};

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what);

/// Assignment of a rational value to every ambient variable.
class Point {
 public:
  Point() = default;
  explicit Point(RingPtr ring);  // origin
  Point(RingPtr ring, std::vector<Rational> coords);
  Point(RingPtr ring, const std::map<std::string, Rational>& coords);

  static Point origin(RingPtr ring) { return Point(std::move(ring)); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  bool is_origin() const;
  std::string to_string() const;

  friend bool operator==(const Point& a, const Point& b) {
    return *a.ring_ == *b.ring_ && a.coords_ == b.coords_;
  }

 private:
  RingPtr ring_;
  std::vector<Rational> coords_;
};

using Substitution = std::map<std::string, Polynomial>;

enum class ArithOp { Add, Sub, Mul, Pow };
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op, unsigned k = 0);

Polynomial partial_derivative(const Polynomial& f, std::string_view var);
Polynomial partial_derivative(const Polynomial& f, std::size_t var);

/// Replaces each mapped variable by its image; unmapped variables must exist
/// in `target` under the same name. Images must live in `target`.
Polynomial substitute(const Polynomial& f, const Substitution& map, const RingPtr& target);
/// As `substitute`, discarding terms of total degree above `max_degree`.
Polynomial substitute_truncated(const Polynomial& f, const Substitution& map, const RingPtr& target,
                                std::uint32_t max_degree);
/// Renames into a ring containing every variable `f` actually uses.
Polynomial embed(const Polynomial& f, const RingPtr& target);
/// Sets `var` to zero and drops it from the ambient.
Polynomial restrict_to_hyperplane(const Polynomial& f, std::string_view var, const RingPtr& target);
Polynomial truncate(const Polynomial& f, std::uint32_t max_degree);

/// g(q) = f(q + p).
Polynomial translate(const Polynomial& f, const Point& p);
/// Minimal total degree of `translate(f, p)`.
Order vanishing_order(const Polynomial& f, const Point& p);
Order vanishing_order_at_origin(const Polynomial& f);

using Weights = std::map<std::string, std::uint64_t>;
/// min over monomials of sum(e_v * w_v); unlisted variables weigh 0.
Order weighted_valuation(const Polynomial& f, const Weights& weights);

/// Largest monomial dividing every term, and f divided by it.
std::pair<Exponents, Polynomial> split_monomial_content(const Polynomial& f);
/// Integer coefficients with gcd 1, same sign as the input.
Polynomial primitive_part(const Polynomial& f);
/// Exact division; `nullopt` when `divisor` does not divide `f`.
std::optional<Polynomial> divide_by_monomial(const Polynomial& f, const Exponents& divisor);
bool divides(const Exponents& a, const Exponents& b);

}  // namespace blowup
