#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "blowup/groebner.hpp"
#include "blowup/invariant.hpp"

namespace blowup {

/// Weighted blowup of a reduced center as the extended Rees algebra
/// presentation: x_i = s^{w_i} x'_i on the center coordinates, other
/// coordinates untouched. Ambient of B: base variables in order (center ones
/// primed), then s.
struct ReesPresentation {
  RingPtr base;
  RingPtr ring;
  std::string s;
  std::vector<std::string> center_vars;
  std::vector<std::string> primed;
  std::vector<std::uint64_t> weights;
  Rational ell;
  /// Center change on the base and the point the center is centered at.
  CoordinateChange change;
  Point base_point;
  /// base variable -> its pullback on B.
  Substitution pullback;
  /// Degree of each B variable: s -> -1, x'_i -> w_i, others 0.
  std::map<std::string, std::int64_t> grading;

  /// Ambient with both the base and the B variables (for the relations).
  RingPtr relation_ring() const;
  /// x_i - s^{w_i} x'_i.
  std::vector<Polynomial> relations() const;
  /// Ideal of the vertex: (x'_1, ..., x'_k).
  std::vector<Polynomial> vertex_ideal() const;
  /// Every relation is homogeneous of degree 0 (base variables have degree 0).
  bool relations_homogeneous() const;
};

/// Throws NonCoordinateCenter if the center has a non-coordinate element and no change.
ReesPresentation rees_presentation(const ReducedCenter& rc, const Center& center);
ReesPresentation rees_presentation(const Center& center);

enum class TransformKind { Total, Controlled, Proper };
const char* to_string(TransformKind kind);

struct TransformResult {
  TransformKind kind = TransformKind::Total;
  RingPtr ring;
  std::string s;
  std::vector<Polynomial> generators;
  /// s-adic valuation of each pulled back generator.
  std::vector<Order> s_exponents;
  /// Power of s divided out (controlled transforms).
  std::optional<std::uint64_t> divided;

  Ideal ideal() const { return Ideal(ring, generators); }
  /// Total transforms render each generator as s^k*(g'); others plainly.
  std::string to_string() const;
};

/// I in the center's coordinates (translated to the base point).
Ideal in_center_coordinates(const Ideal& ideal, const ReesPresentation& rp);

TransformResult total_transform(const Ideal& ideal, const ReesPresentation& rp);
/// Divides every pullback by s^ell; InadmissibleCenter if some is not divisible.
TransformResult controlled_transform(const Ideal& ideal, const ReesPresentation& rp);
/// As above dividing by s^power.
TransformResult controlled_transform(const Ideal& ideal, const ReesPresentation& rp, std::uint64_t power);
/// Saturation of the total transform by s.
TransformResult proper_transform(const Ideal& ideal, const ReesPresentation& rp);

/// d/dv for every B variable except s.
std::vector<Derivation> relative_derivations(const ReesPresentation& rp);
/// D_{B/A^1}: the ideal plus its partials in every B variable except s.
Ideal relative_derivative_ideal(const Ideal& on_b, const ReesPresentation& rp);
/// (D(I))': the pullback of D(I) divided by s^{l - w_1}.
TransformResult derivative_transform(const Ideal& ideal, const ReesPresentation& rp);

/// Etale chart i: x_i = u^{w_i}, x_j = u^{w_j} x'_j for the other center
/// coordinates, untouched coordinates fixed; mu_{w_i} acts with weight 1 on u
/// and -w_j mod w_i on x'_j. When w_i = 1 the chart variable u is x_i itself.
struct EtaleChart {
  std::size_t index = 0;
  std::string chart_var;
  RingPtr ring;
  std::string u;
  Substitution substitution;
  std::uint64_t group_order = 1;
  std::map<std::string, std::uint64_t> action_weights;

  /// x_j - u^{w_j} x'_j style relations (x_j - x_i x'_j in the classical case).
  std::vector<Polynomial> relations(const ReesPresentation& rp) const;
  RingPtr relation_ring(const ReesPresentation& rp) const;
};

EtaleChart etale_chart(const ReesPresentation& rp, std::size_t index);

struct ChartTransform {
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::vector<Order> u_exponents;
  std::uint64_t group_order = 1;
  std::map<std::string, std::uint64_t> action_weights;
};
/// Pulls back to the chart and divides by u^ell.
ChartTransform chart_transform(const Ideal& ideal, const ReesPresentation& rp, const EtaleChart& chart);

struct ProbeResult {
  Point point;
  bool on_vertex = false;
  Invariant invariant;
  std::string center;
};

struct CriterionReport {
  bool a = false;
  bool b = false;
  Invariant original;
  std::vector<ProbeResult> probes;
  std::optional<ProbeResult> worst;
  std::optional<ProbeResult> worst_off_vertex;
  std::string note;
};

/// Probe points of B: the origin, each coordinate set to 1 with the others
/// 0, plus `extra`. A probe lies on the vertex locus when every primed
/// coordinate vanishes.
std::vector<Point> probe_points(const ReesPresentation& rp, const std::vector<Point>& extra = {});
bool on_vertex_locus(const ReesPresentation& rp, const Point& p);

/// (a): D^{a1-1}(I) lies in the ideal of the center coordinates and probes of
/// V(center) carry the maximal invariant. (b): no probe of the controlled
/// transform exceeds inv_I(p), and probes off the vertex locus drop strictly.
CriterionReport check_criterion(const Ideal& ideal, const Center& center, const Point& p,
                                const std::vector<Point>& extra_probes = {},
                                const InvariantOptions& options = {});

struct PrincipalizeOptions {
  std::size_t max_steps = 20;
  InvariantOptions invariant;
};

struct PrincipalizeStep {
  std::size_t index = 0;
  std::optional<std::size_t> parent;
  Point point;
  Invariant invariant;
  std::string center;
  ReducedCenter reduced;
  std::string exceptional;
  TransformResult transform;
  std::vector<ProbeResult> probes;
  /// Invariant did not drop below the parent's.
  bool decrease_violation = false;
};

struct PrincipalizeTrace {
  enum class Status { Principalized, AlreadyPrincipal, BudgetExhausted };
  Status status = Status::Principalized;
  std::vector<PrincipalizeStep> steps;
  std::vector<std::string> exceptional;
};
const char* to_string(PrincipalizeTrace::Status status);

/// Throws NoRationalWitness when I is not the unit ideal but has order 0 at
/// every starting probe.
PrincipalizeTrace principalize(const Ideal& ideal, const PrincipalizeOptions& options = {});

}  // namespace blowup
