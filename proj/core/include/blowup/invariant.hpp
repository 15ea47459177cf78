#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blowup/coordinate_change.hpp"
#include "blowup/ideal.hpp"

namespace blowup {

/// Lexicographic sequence of extended rationals; a proper prefix ranks above
/// every extension of it.
using Invariant = std::vector<ExtRational>;
std::string to_string(const Invariant& inv);  // "(2, 3, 3)"

enum class Comparison { Less, Equal, Greater };
Comparison compare_invariants(const Invariant& u, const Invariant& v);
const char* to_string(Comparison c);

struct InvariantOptions {
  std::uint32_t truncation = 24;
  std::uint32_t max_degree = 512;
};

/// A maximal contact element realized as the coordinate `pivot`.
struct ContactChoice {
  Polynomial element;
  std::string pivot;
  CoordinateChange change;
};

/// One entry x^a of a center: `element` in the original (translated)
/// coordinates, realized as coordinate `pivot` by the center's change.
struct CenterCoordinate {
  Polynomial element;
  Rational exponent;
  std::string pivot;
};

struct Center {
  RingPtr ring;
  std::vector<CenterCoordinate> coords;
  /// New coordinates are named like the old ones; each pivot becomes its element.
  CoordinateChange change;
  /// Point the coordinates are centered at.
  Point base;

  std::string to_string() const;  // "(x^2, y^3, z^3)"
  bool is_coordinate_center() const;
};

struct ReducedCenter {
  RingPtr ring;
  Rational ell;
  std::vector<std::uint64_t> weights;
  std::vector<CenterCoordinate> coords;

  Weights weight_map() const;
  std::string to_string() const;  // "l=6 w=(3,2,2)"
};

/// Recursion trace for one level.
struct InvariantLevel {
  RingPtr ring;
  MarkedSum sum;
  ExtRational entry;
  std::optional<ContactChoice> contact;
};

struct InvariantResult {
  Invariant invariant;
  Center center;
  std::vector<InvariantLevel> levels;
  /// D^{a1-1}(I) in coordinates centered at the point.
  Ideal max_order_locus;
};

/// Picks x in D^{a-1}(I) of order one at the origin and realizes it as a coordinate.
/// Candidates of the form variable * unit win, then affine ones, then truncated inversions.
ContactChoice choose_contact(const Ideal& d_top, std::uint32_t truncation_degree);
/// As above for I at p (translated to the origin); throws NoMaximalContact for order 0 or infinity.
ContactChoice maximal_contact(const Ideal& ideal, const Point& p, const InvariantOptions& options = {});

/// Components (D^{a-i}(I), a/i), i = 1..a.
MarkedSum coefficient_marked(const Ideal& ideal, unsigned a, const Point& p);
/// Kollar's C(I,a): products over tuples with sum i*b_i in [a!, a!+a-1]. Throws CapExceeded above `cap`.
Ideal coefficient_ideal_explicit(const Ideal& ideal, unsigned a, unsigned cap = 3);
/// As above with derivatives taken along `ops` only.
Ideal coefficient_ideal_explicit(const Ideal& ideal, unsigned a, const std::vector<Derivation>& ops, unsigned cap = 3);
/// Apply the contact change, set the pivot to zero and drop zero components.
MarkedSum restrict_marked(const MarkedSum& sum, const ContactChoice& contact, const RingPtr& target);

InvariantResult invariant_and_center(const Ideal& ideal, const Point& p, const InvariantOptions& options = {});
/// Truncation degree for contact changes at order `order`: at least order! up to order 12.
std::uint32_t working_truncation(std::uint64_t order, const InvariantOptions& options);
/// A change on a subspace ring extended to `target` by the identity.
CoordinateChange extend_change(const CoordinateChange& c, const RingPtr& target);

/// Runs the recursion from a marked sum in `ring` (a coordinate subspace of
/// result.center.ring at the origin), appending entries, levels and center coordinates.
void continue_invariant(InvariantResult& result, RingPtr ring, MarkedSum sum, bool root,
                        const InvariantOptions& options = {});

/// Throws Precondition if some exponent is not positive.
ReducedCenter reduce_center(const Center& center);

struct AdmissibilityReport {
  bool admissible = true;
  bool graded = true;
  Rational ell;
  /// Weighted valuation of each generator of I in center coordinates.
  std::vector<Order> valuations;
  /// For i = 1..a1-1: minimum valuation over D^i(I) against the bound ell - i*w1.
  std::vector<std::pair<Order, Rational>> graded_bounds;
};
/// I in the coordinates of the center has v_J >= 1 (weighted valuation >= ell).
AdmissibilityReport check_admissible(const Center& center, const Ideal& ideal);
bool is_admissible(const Center& center, const Ideal& ideal);

/// Rebuilds a center from explicit coordinate exponents, e.g. a user center (x^2, y^(15/2)).
Center coordinate_center(const RingPtr& ring, const std::vector<std::pair<std::string, Rational>>& coords);

}  // namespace blowup
