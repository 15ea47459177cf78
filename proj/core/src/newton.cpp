#include "blowup/newton.hpp"

#include <algorithm>
#include <functional>

#include "blowup/error.hpp"

namespace blowup {

namespace {

using Row = std::vector<Rational>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Row>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank_of(std::vector<Row> m, std::size_t cols) { return rref(m, cols).size(); }

// One-dimensional kernel of `rows`, or nullopt.
std::optional<Row> kernel_line(std::vector<Row> rows, std::size_t n) {
  auto pivots = rref(rows, n);
  if (pivots.size() + 1 != n) return std::nullopt;
  std::size_t free = 0;
  while (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) ++free;
  Row v(n, Rational(0));
  v[free] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
  return v;
}

// Scale to coprime integers.
Row primitive(Row v) {
  Integer den = 1;
  for (const auto& x : v) {
    if (x != 0) den = lcm(den, Integer(x.get_den()));
  }
  Integer g = 0;
  for (auto& x : v) {
    x *= den;
    if (x != 0) g = gcd(g, Integer(x.get_num()));
  }
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

Rational dot(const Row& w, const Exponents& e) {
  Rational s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
  return s;
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::Precondition, "Newton polyhedron of the zero polynomial");
  NewtonPolyhedron poly;
  poly.ring = f.ring();
  for (const auto& [e, c] : f.terms()) poly.points.push_back(e);
  const std::size_t n = poly.ring->size();
  const std::size_t m = poly.points.size();

  auto add_candidate = [&](Row w) {
    bool nonneg = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x >= 0; });
    bool nonpos = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x <= 0; });
    if (!nonneg && !nonpos) return;
    if (nonpos) {
      for (auto& x : w) x = -x;
    }
    w = primitive(std::move(w));
    for (const auto& facet : poly.facets) {
      if (facet.normal == w) return;
    }
    Rational offset = dot(w, poly.points[0]);
    for (const auto& p : poly.points) offset = std::min(offset, dot(w, p));
    NewtonFacet facet{w, offset, {}, false};
    std::vector<Row> span;
    for (std::size_t i = 0; i < m; ++i) {
      if (dot(w, poly.points[i]) == offset) facet.points.push_back(i);
    }
    // A facet needs n-1 independent directions among on-facet differences and
    // recession directions e_j with w_j = 0.
    for (std::size_t i = 1; i < facet.points.size(); ++i) {
      Row d(n);
      for (std::size_t j = 0; j < n; ++j) {
        d[j] = Rational(poly.points[facet.points[i]][j]) - Rational(poly.points[facet.points[0]][j]);
      }
      span.push_back(std::move(d));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] == 0) {
        Row d(n, Rational(0));
        d[j] = 1;
        span.push_back(std::move(d));
      }
    }
    if (rank_of(span, n) + 1 != n) return;
    facet.compact = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x > 0; });
    poly.facets.push_back(std::move(facet));
  };

  // Choose a base point, up to n-1 further points and the rest coordinate directions.
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::size_t)> pick_points;
  std::function<void(std::size_t, std::vector<std::size_t>&)> pick_dirs;
  pick_dirs = [&](std::size_t start, std::vector<std::size_t>& dirs) {
    if (chosen.size() - 1 + dirs.size() == n - 1) {
      std::vector<Row> rows;
      for (std::size_t i = 1; i < chosen.size(); ++i) {
        Row d(n);
        for (std::size_t j = 0; j < n; ++j) {
          d[j] = Rational(poly.points[chosen[i]][j]) - Rational(poly.points[chosen[0]][j]);
        }
        rows.push_back(std::move(d));
      }
      for (auto j : dirs) {
        Row d(n, Rational(0));
        d[j] = 1;
        rows.push_back(std::move(d));
      }
      if (auto w = kernel_line(rows, n)) add_candidate(std::move(*w));
      return;
    }
    for (std::size_t j = start; j < n; ++j) {
      dirs.push_back(j);
      pick_dirs(j + 1, dirs);
      dirs.pop_back();
    }
  };
  pick_points = [&](std::size_t start, std::size_t remaining) {
    std::vector<std::size_t> dirs;
    pick_dirs(0, dirs);
    if (remaining == 0) return;
    for (std::size_t i = start; i < m; ++i) {
      chosen.push_back(i);
      pick_points(i + 1, remaining - 1);
      chosen.pop_back();
    }
  };
  for (std::size_t base = 0; base < m; ++base) {
    chosen = {base};
    pick_points(base + 1, n - 1);
  }

  std::sort(poly.facets.begin(), poly.facets.end(),
            [](const NewtonFacet& a, const NewtonFacet& b) { return a.normal > b.normal; });

  poly.is_vertex.assign(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Row> normals;
    for (const auto& facet : poly.facets) {
      if (std::find(facet.points.begin(), facet.points.end(), i) != facet.points.end()) {
        normals.push_back(facet.normal);
      }
    }
    poly.is_vertex[i] = rank_of(normals, n) == n;
  }
  return poly;
}

}  // namespace blowup
