#include "blowup/coordinate_change.hpp"

#include <algorithm>

#include "blowup/error.hpp"

namespace blowup {

CoordinateChange CoordinateChange::identity(RingPtr ring) {
  CoordinateChange c;
  c.ring = std::move(ring);
  return c;
}

Polynomial apply_coordinate_change(const Polynomial& f, const CoordinateChange& c,
                                   std::uint32_t working_degree) {
  require_same_ring(f.ring(), c.ring, "coordinate change");
  if (c.is_identity()) return f;
  if (c.truncation_degree) {
    if (working_degree > *c.truncation_degree) {
      throw Error(ErrorKind::TruncationOverflow,
                  "working degree " + std::to_string(working_degree) + " exceeds truncation degree " +
                      std::to_string(*c.truncation_degree));
    }
    return substitute_truncated(f, c.forward, c.ring, *c.truncation_degree);
  }
  return substitute(f, c.forward, c.ring);
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

std::optional<Matrix> invert_matrix(Matrix m) {
  const std::size_t n = m.size();
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale = Rational(1) / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= factor * m[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

CoordinateChange invert_triangular_change(const RingPtr& ring, const Substitution& forward,
                                          std::uint32_t degree) {
  const std::size_t n = ring->size();
  std::vector<Polynomial> phi;
  phi.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = forward.find(ring->name(i));
    if (it == forward.end()) {
      phi.push_back(Polynomial::variable(ring, ring->name(i)));
    } else {
      require_same_ring(it->second.ring(), ring, "coordinate change");
      phi.push_back(it->second);
    }
  }

  Matrix linear(n, std::vector<Rational>(n, Rational(0)));
  std::vector<Polynomial> nonlinear;
  for (std::size_t i = 0; i < n; ++i) {
    if (phi[i].constant_term() != 0) {
      throw Error(ErrorKind::NotInvertible,
                  "image of '" + ring->name(i) + "' has a constant term; the change does not fix the origin");
    }
    Polynomial rest(ring);
    for (const auto& [e, c] : phi[i].terms()) {
      if (total_degree(e) == 1) {
        auto j = static_cast<std::size_t>(std::find(e.begin(), e.end(), 1U) - e.begin());
        linear[i][j] = c;
      } else {
        rest.add_term(e, c);
      }
    }
    nonlinear.push_back(std::move(rest));
  }
  auto linv = invert_matrix(linear);
  if (!linv) throw Error(ErrorKind::NotInvertible, "linear part of the coordinate change is singular");

  // phi = L + N, so psi = L^{-1}(id - N(psi)).
  auto apply_linv = [&](const std::vector<Polynomial>& v) {
    std::vector<Polynomial> out(n, Polynomial(ring));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((*linv)[i][j] != 0) out[i] += (*linv)[i][j] * v[j];
      }
    }
    return out;
  };
  std::vector<Polynomial> identity;
  for (std::size_t i = 0; i < n; ++i) identity.push_back(Polynomial::variable(ring, ring->name(i)));

  std::vector<Polynomial> psi = apply_linv(identity);
  auto build = [&](std::optional<std::uint32_t> truncation) {
    CoordinateChange c;
    c.ring = ring;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(phi[i] == identity[i])) c.forward.emplace(ring->name(i), phi[i]);
      if (!(psi[i] == identity[i])) c.inverse.emplace(ring->name(i), psi[i]);
    }
    c.truncation_degree = truncation;
    return c;
  };

  // Each round fixes one more degree, so the working truncation grows with it.
  for (std::uint32_t t = 1; t <= 2 * degree + 2; ++t) {
    const std::uint32_t cut = std::min(t, degree);
    Substitution current;
    for (std::size_t i = 0; i < n; ++i) current.emplace(ring->name(i), psi[i]);
    std::vector<Polynomial> rhs;
    for (std::size_t i = 0; i < n; ++i) {
      rhs.push_back(identity[i] - substitute_truncated(nonlinear[i], current, ring, cut));
    }
    auto next = apply_linv(rhs);
    for (auto& p : next) p = truncate(p, cut);
    const bool same = next == psi;
    psi = std::move(next);
    if (!same) continue;
    std::uint64_t top = 0;
    for (const auto& p : psi) top = std::max(top, p.degree());
    if (top < cut) {
      // A polynomial inverse, exact when it composes to the identity on the nose.
      CoordinateChange c = build(std::nullopt);
      if (composition_is_identity(c)) return c;
    }
    if (cut == degree) break;
  }
  return build(degree);
}

CoordinateChange compose(const CoordinateChange& first, const CoordinateChange& second) {
  require_same_ring(first.ring, second.ring, "compose");
  CoordinateChange c;
  c.ring = first.ring;
  if (first.truncation_degree || second.truncation_degree) {
    c.truncation_degree = std::min(first.truncation_degree.value_or(UINT32_MAX),
                                   second.truncation_degree.value_or(UINT32_MAX));
  }
  auto subst = [&](const Polynomial& f, const Substitution& m) {
    return c.truncation_degree ? substitute_truncated(f, m, c.ring, *c.truncation_degree)
                               : substitute(f, m, c.ring);
  };
  for (const auto& name : c.ring->names()) {
    auto var = Polynomial::variable(c.ring, name);
    auto fw = first.forward.count(name) ? subst(first.forward.at(name), second.forward)
                                        : subst(var, second.forward);
    if (!(fw == var)) c.forward.emplace(name, fw);
    auto inv = second.inverse.count(name) ? subst(second.inverse.at(name), first.inverse)
                                          : subst(var, first.inverse);
    if (!(inv == var)) c.inverse.emplace(name, inv);
  }
  return c;
}

bool composition_is_identity(const CoordinateChange& c) {
  for (const auto& name : c.ring->names()) {
    auto var = Polynomial::variable(c.ring, name);
    auto it = c.inverse.find(name);
    Polynomial image = it == c.inverse.end() ? var : it->second;
    Polynomial back = c.truncation_degree
                          ? substitute_truncated(image, c.forward, c.ring, *c.truncation_degree)
                          : substitute(image, c.forward, c.ring);
    if (!(back == var)) return false;
  }
  return true;
}

}  // namespace blowup
