#pragma once

#include <cstdint>
#include <optional>

#include "blowup/polynomial.hpp"

namespace blowup {

/// Change of coordinates on one ambient. `forward` expresses each old
/// variable in the new coordinates (same names), `inverse` each new
/// coordinate in the old ones. Unlisted variables are left alone. A
/// truncation degree means both maps are only correct modulo terms of
/// higher total degree.
struct CoordinateChange {
  RingPtr ring;
  Substitution forward;
  Substitution inverse;
  std::optional<std::uint32_t> truncation_degree;

  static CoordinateChange identity(RingPtr ring);
  bool is_exact() const { return !truncation_degree.has_value(); }
  bool is_identity() const { return forward.empty(); }
};

/// substitute(f, c.forward), truncated beyond c.truncation_degree. A working
/// degree above the truncation degree throws TruncationOverflow.
Polynomial apply_coordinate_change(const Polynomial& f, const CoordinateChange& c,
                                   std::uint32_t working_degree = 0);

/// Inverse of an invertible linear map plus higher order terms, by fixed
/// point iteration modulo degree > `degree`. If the iteration reproduces the
/// identity exactly, the result is marked exact.
CoordinateChange invert_triangular_change(const RingPtr& ring, const Substitution& forward,
                                          std::uint32_t degree);

/// `first` then `second`: the new coordinates of `first` are the old ones of `second`.
CoordinateChange compose(const CoordinateChange& first, const CoordinateChange& second);

/// forward(inverse(w)) == w for every coordinate, modulo the truncation degree.
bool composition_is_identity(const CoordinateChange& c);

}  // namespace blowup
