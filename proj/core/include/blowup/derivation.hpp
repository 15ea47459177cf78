#pragma once

#include <map>
#include <string>
#include <vector>

#include "blowup/polynomial.hpp"

namespace blowup {

/// Vector field sum c_v * d/dv; absent coefficients are zero.
class Derivation {
 public:
  explicit Derivation(RingPtr ring) : ring_(std::move(ring)) {}
  Derivation(RingPtr ring, const std::map<std::string, Polynomial>& coefficients);
  /// d/d<var>.
  static Derivation partial(RingPtr ring, std::string_view var);

  const RingPtr& ring() const { return ring_; }
  const std::map<std::string, Polynomial>& coefficients() const { return coefficients_; }
  Polynomial coefficient(std::string_view var) const;
  void set_coefficient(const std::string& var, Polynomial c);
  bool is_zero() const { return coefficients_.empty(); }

  Polynomial apply(const Polynomial& f) const;

  Derivation& operator+=(const Derivation& other);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b);
  friend Derivation operator*(const Polynomial& f, const Derivation& d);
  friend bool operator==(const Derivation& a, const Derivation& b) {
    return same_ring(a.ring_, b.ring_) && a.coefficients_ == b.coefficients_;
  }

  /// `3*y^2*d/dx - 2*x*d/dy`, terms in ambient variable order.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::map<std::string, Polynomial> coefficients_;
};

/// [d1, d2] with coefficients d1(c2_v) - d2(c1_v).
Derivation lie_bracket(const Derivation& d1, const Derivation& d2);

/// Renames into another ambient containing every variable the field touches.
Derivation embed(const Derivation& d, const RingPtr& target);

}  // namespace blowup
