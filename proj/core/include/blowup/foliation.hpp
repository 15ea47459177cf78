#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blowup/blowup.hpp"
#include "blowup/derivation.hpp"
#include "blowup/ideal.hpp"
#include "blowup/invariant.hpp"

namespace blowup {

/// Module of vector fields spanned by `generators`; `log_vars` are boundary
/// divisors (the log frame uses v*d/dv for them).
struct Foliation {
  RingPtr ring;
  std::vector<Derivation> generators;
  std::vector<std::string> log_vars;

  Foliation() = default;
  explicit Foliation(RingPtr r) : ring(std::move(r)) {}
  Foliation(RingPtr r, std::vector<Derivation> gens, std::vector<std::string> log = {});

  /// Span of d/dv over `vars` (all variables when empty).
  static Foliation coordinate_span(const RingPtr& ring, const std::vector<std::string>& vars = {});

  bool empty() const { return generators.empty(); }
  /// `Span(d/dy)`, `Span()` when empty.
  std::string to_string() const;
};

/// Whether `d` lies in the polynomial module spanned by `gens`.
bool module_member(const Derivation& d, const std::vector<Derivation>& gens);

struct InvolutivityReport {
  bool involutive = true;
  /// Indices of the first pair whose bracket leaves the module.
  std::optional<std::pair<std::size_t, std::size_t>> offending;
};
InvolutivityReport involutivity_check(const Foliation& f);

/// I plus every generator of F applied to every generator of I.
Ideal f_derivative_ideal(const Foliation& f, const Ideal& ideal);
/// Least a with the a-fold F-derivative ideal a unit at p; infinite tier when
/// the chain stabilizes first.
ExtRational f_order_at(const Foliation& f, const Ideal& ideal, const Point& p);
/// F(I) contained in I.
bool is_f_invariant(const Foliation& f, const Ideal& ideal);

/// Center split into a transverse part followed by an F-invariant part.
struct AlignedCenter {
  Center center;
  std::size_t transverse_count = 0;

  std::vector<CenterCoordinate> transverse() const;
  std::vector<CenterCoordinate> invariant_part() const;
  /// `(y^3 | x^2)`.
  std::string to_string() const;
};

struct FoliatedResult {
  Invariant invariant;
  AlignedCenter center;
  std::vector<InvariantLevel> levels;
  /// Residual foliation at each F-stage level.
  std::vector<Foliation> residual;
};

/// F-derivatives and F-maximal contact while the F-order is finite, then full
/// derivatives with entries in the infinite tier.
FoliatedResult foliated_invariant_and_center(const Foliation& f, const Ideal& ideal, const Point& p,
                                             const InvariantOptions& options = {});

/// Checks the presented generators only: every transverse element is paired
/// to a unit at p by some generator, and the invariant part is F-invariant.
bool is_aligned_center(const Foliation& f, const AlignedCenter& c, const Point& p);

struct FoliationTransform {
  Foliation foliation;
  /// Each pulled back generator equals s^power times the reported one.
  std::vector<std::int64_t> s_powers;
};
/// Pulls back along x_i = s^{w_i} x'_i with d/dx_i = s^{-w_i} d/dx'_i,
/// relative to s; s joins the log variables.
FoliationTransform transform_foliation(const Foliation& f, const ReesPresentation& rp);

enum class Smoothness { Smooth, LogSmooth, Singular };
const char* to_string(Smoothness s);

struct SmoothnessReport {
  Smoothness status = Smoothness::Smooth;
  std::size_t rank_at_point = 0;
  std::size_t generic_rank = 0;
  /// Ideal of the generic-rank minors of the coefficient matrix.
  Ideal singular_locus;
};
SmoothnessReport smoothness_check(const Foliation& f, const Point& p);

struct GraphReduction {
  RingPtr ring;
  std::vector<std::string> graph_vars;
  Ideal graph_ideal;
  Foliation ambient_foliation;
  /// Foliation on X killing every first integral.
  Foliation foliation;
  FoliatedResult invariant;
  ReesPresentation rees;
  TransformResult blowup_equation;
  FoliationTransform transformed;
  /// Off-vertex probes of B with their smoothness.
  std::vector<std::pair<Point, Smoothness>> probes;
  bool singular_only_on_vertex = false;
};

/// Graph embedding of X = V(I) under z_m = f_m, foliated invariant, one
/// weighted blowup, and smoothness of the transformed foliation.
GraphReduction graph_reduction(const std::vector<Polynomial>& first_integrals, const Ideal& ideal,
                               const InvariantOptions& options = {});

}  // namespace blowup
