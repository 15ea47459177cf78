#pragma once

#include <string>
#include <vector>

#include "blowup/derivation.hpp"
#include "blowup/polynomial.hpp"

namespace blowup {

/// Finitely generated ideal. Generators are nonzero, scaled to primitive
/// integer coefficients (sign kept), distinct up to scalars, in first-seen order.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, const std::vector<Polynomial>& generators);

  static Ideal unit(RingPtr ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  /// Some generator is a nonzero constant.
  bool has_constant_generator() const;
  void add(const Polynomial& g);

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return same_ring(a.ring_, b.ring_) && a.keys_ == b.keys_;
  }

  /// `(x^2 - y^2*z, x)`.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> keys_;  // monic forms
};

/// I plus the first partials of its generators.
Ideal derivative_ideal(const Ideal& ideal);
/// I plus the images of its generators under the given derivations.
Ideal derivative_ideal(const Ideal& ideal, const std::vector<Derivation>& ops);
Ideal derivative_power(const Ideal& ideal, unsigned a);

/// Drops generators whose every term is divisible by another monomial generator.
Ideal prune_covered(const Ideal& ideal);

/// Local model at the origin: generators that are a monomial times a unit
/// become the monomial, generators lying in the ideal of a monomial
/// generator are dropped, and a unit generator collapses the ideal to (1).
/// Valid only for computations in the local ring at the origin.
Ideal localize_at_origin(const Ideal& ideal);

/// min over generators of vanishing_order(g, p): 0 iff I is a unit at p.
Order order_at(const Ideal& ideal, const Point& p);
/// D^{a-1}(I), the ideal of the locus where ord >= a.
Ideal max_order_locus(const Ideal& ideal, unsigned a);

struct MarkedComponent {
  Ideal ideal;
  Rational exponent;
};

/// Formal sum of Q-ideals J_1^{e_1} + ... ; empty means the zero object.
struct MarkedSum {
  std::vector<MarkedComponent> components;

  bool empty() const { return components.empty(); }
  std::string to_string() const;
};

/// min over components of e * ord(J); infinite tier when every component is zero.
ExtRational order_of_marked(const MarkedSum& sum, const Point& p);

/// Drops zero ideals and merges identical ideals keeping the smallest exponent.
MarkedSum normalize(MarkedSum sum);

}  // namespace blowup
