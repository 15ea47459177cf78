#pragma once

#include <vector>

#include "blowup/polynomial.hpp"

namespace blowup {

/// Supporting hyperplane normal . x = offset of the Newton polyhedron
/// conv(points) + R_{>=0}^n. Normals are nonnegative primitive integer vectors.
struct NewtonFacet {
  std::vector<Rational> normal;
  Rational offset;
  std::vector<std::size_t> points;  // indices of exponent vectors on the facet
  bool compact = false;             // all normal entries positive
};

struct NewtonPolyhedron {
  RingPtr ring;
  std::vector<Exponents> points;
  std::vector<bool> is_vertex;
  std::vector<NewtonFacet> facets;
};

/// Throws Precondition for the zero polynomial.
NewtonPolyhedron newton_polyhedron(const Polynomial& f);

}  // namespace blowup
