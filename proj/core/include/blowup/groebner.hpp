#pragma once

#include <string>
#include <vector>

#include "blowup/polynomial.hpp"

namespace blowup {

enum class OrderKind { GradedReverseLex, Lex, GradedLex };

/// Monomial order over the ambient. `priority` lists variables from most to
/// least significant (empty: ambient order). With `block > 0` the first
/// `block` variables of the priority list form an elimination block compared
/// before the rest; both blocks use `kind`.
struct MonomialOrder {
  OrderKind kind = OrderKind::GradedReverseLex;
  std::vector<std::string> priority;
  std::size_t block = 0;

  static MonomialOrder elimination(const RingPtr& ring, const std::vector<std::string>& eliminate);
};

struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> generators;
  bool reduced = false;

  bool is_unit() const;
  bool is_zero() const { return generators.empty(); }
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                         const MonomialOrder& order = {}, bool reduced = true);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
/// Re-checks that every S-polynomial reduces to zero.
bool verify_groebner(const GroebnerBasis& gb);
/// Leading monomial of `f` under `order`; `f` must be nonzero.
Exponents leading_monomial(const Polynomial& f, const MonomialOrder& order);

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& ideal, const RingPtr& ring);
bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);
/// A is contained in B.
bool ideal_contains(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                    const RingPtr& ring);
bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const RingPtr& ring);

/// Generators of I intersected with the subring without `vars`, expressed in
/// `ring` minus those variables.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                  const std::vector<std::string>& vars);
std::vector<Polynomial> intersect(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                  const RingPtr& ring);
/// (I : f).
std::vector<Polynomial> colon(const std::vector<Polynomial>& gens, const Polynomial& f);
/// (I : f^inf), computed as (I + (1 - t f)) intersected with the original ring.
std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const Polynomial& f);
/// (I : f^inf) as the stabilized chain (I : f) c (I : f^2) c ...
std::vector<Polynomial> saturate_by_colon_chain(const std::vector<Polynomial>& gens, const Polynomial& f);

}  // namespace blowup
