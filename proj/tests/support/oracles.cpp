#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace oracle {

namespace {

struct Token {
  char kind;  // 'n' number, 'v' variable, or the operator character; 'u' unary minus
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  for (std::size_t i = 0; i < s.size();) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({'n', s.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
      out.push_back({'v', s.substr(i, j - i)});
      i = j;
    } else {
      out.push_back({c, std::string(1, c)});
      ++i;
    }
  }
  return out;
}

int precedence(char op) {
  switch (op) {
    case '+': case '-': return 1;
    case '*': case '/': return 2;
    case 'u': return 3;
    case '^': return 4;
  }
  return 0;
}

Rational power(const Rational& b, const Rational& e) {
  if (e.get_den() != 1 || e < 0) throw std::runtime_error("oracle: bad exponent");
  Rational r = 1;
  for (long k = 0; k < e.get_num().get_si(); ++k) r *= b;
  return r;
}

}  // namespace

Rational eval_expression(const std::string& text, const std::map<std::string, Rational>& values) {
  std::vector<Token> rpn;
  std::vector<Token> ops;
  bool expect_operand = true;
  for (const auto& t : tokenize(text)) {
    if (t.kind == 'n' || t.kind == 'v') {
      rpn.push_back(t);
      expect_operand = false;
    } else if (t.kind == '(') {
      ops.push_back(t);
      expect_operand = true;
    } else if (t.kind == ')') {
      while (!ops.empty() && ops.back().kind != '(') {
        rpn.push_back(ops.back());
        ops.pop_back();
      }
      if (ops.empty()) throw std::runtime_error("oracle: unbalanced");
      ops.pop_back();
      expect_operand = false;
    } else {
      Token op = t;
      if (expect_operand) {
        if (t.kind == '+') continue;
        if (t.kind == '-') op.kind = 'u';
      }
      const bool right = op.kind == '^' || op.kind == 'u';
      while (!ops.empty() && ops.back().kind != '(') {
        int top = precedence(ops.back().kind);
        int cur = precedence(op.kind);
        if (top > cur || (top == cur && !right)) {
          rpn.push_back(ops.back());
          ops.pop_back();
        } else {
          break;
        }
      }
      ops.push_back(op);
      expect_operand = true;
    }
  }
  while (!ops.empty()) {
    rpn.push_back(ops.back());
    ops.pop_back();
  }

  std::vector<Rational> stack;
  for (const auto& t : rpn) {
    if (t.kind == 'n') {
      stack.emplace_back(t.text);
    } else if (t.kind == 'v') {
      stack.push_back(values.at(t.text));
    } else if (t.kind == 'u') {
      stack.back() = -stack.back();
    } else {
      Rational b = stack.back();
      stack.pop_back();
      Rational& a = stack.back();
      switch (t.kind) {
        case '+': a += b; break;
        case '-': a -= b; break;
        case '*': a *= b; break;
        case '/': a /= b; break;
        case '^': a = power(a, b); break;
        default: throw std::runtime_error("oracle: operator " + t.text);
      }
    }
  }
  if (stack.size() != 1) throw std::runtime_error("oracle: malformed expression");
  return stack.back();
}

std::optional<unsigned> taylor_order(const Polynomial& f, const std::vector<Rational>& p) {
  std::map<std::vector<unsigned>, Rational> shifted;
  for (const auto& [e, c] : f.terms()) {
    // Expand prod (p_i + t_i)^{e_i} one variable at a time.
    std::map<std::vector<unsigned>, Rational> partial{{std::vector<unsigned>(e.size(), 0), c}};
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::map<std::vector<unsigned>, Rational> next;
      for (const auto& [k, v] : partial) {
        mpz_class binom = 1;
        for (unsigned j = 0; j <= e[i]; ++j) {
          Rational pp = 1;
          for (unsigned r = 0; r < e[i] - j; ++r) pp *= p[i];
          auto kk = k;
          kk[i] = j;
          next[kk] += v * Rational(binom) * pp;
          binom = binom * (e[i] - j) / (j + 1);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [k, v] : partial) shifted[k] += v;
  }
  std::optional<unsigned> best;
  for (const auto& [k, v] : shifted) {
    if (v == 0) continue;
    unsigned d = 0;
    for (auto x : k) d += x;
    if (!best || d < *best) best = d;
  }
  return best;
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

namespace {

void monomials_upto(std::size_t n, unsigned bound, std::vector<unsigned>& cur, std::size_t i,
                    std::vector<std::vector<unsigned>>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  unsigned used = 0;
  for (std::size_t k = 0; k < i; ++k) used += cur[k];
  for (unsigned d = 0; used + d <= bound; ++d) {
    cur[i] = d;
    monomials_upto(n, bound, cur, i + 1, out);
  }
  cur[i] = 0;
}

}  // namespace

bool linear_membership(const Polynomial& f, const std::vector<Polynomial>& gens, unsigned bound) {
  if (f.is_zero()) return true;
  const std::size_t n = f.ring()->size();
  std::vector<std::vector<unsigned>> mons;
  std::vector<unsigned> cur(n, 0);
  monomials_upto(n, bound, cur, 0, mons);

  // One column per (generator, multiplier monomial), then f.
  std::map<std::vector<unsigned>, std::size_t> row_of;
  std::vector<std::map<std::size_t, Rational>> columns;
  auto row = [&](const std::vector<unsigned>& e) {
    auto [it, fresh] = row_of.emplace(e, row_of.size());
    return it->second;
  };
  for (const auto& g : gens) {
    for (const auto& m : mons) {
      std::map<std::size_t, Rational> col;
      for (const auto& [e, c] : g.terms()) {
        std::vector<unsigned> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = e[i] + m[i];
        col[row(s)] += c;
      }
      columns.push_back(std::move(col));
    }
  }
  std::map<std::size_t, Rational> rhs;
  for (const auto& [e, c] : f.terms()) rhs[row(std::vector<unsigned>(e.begin(), e.end()))] += c;

  auto build = [&](bool with_rhs) {
    std::vector<std::vector<Rational>> m(row_of.size(), std::vector<Rational>(columns.size() + 1, 0));
    for (std::size_t j = 0; j < columns.size(); ++j) {
      for (const auto& [i, v] : columns[j]) m[i][j] = v;
    }
    if (with_rhs) {
      for (const auto& [i, v] : rhs) m[i][columns.size()] = v;
    }
    return m;
  };
  return rank(build(false)) == rank(build(true));
}

std::vector<std::size_t> lower_hull_2d(const std::vector<std::pair<long, long>>& pts) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return pts[a] < pts[b]; });
  std::vector<std::size_t> hull;
  for (auto i : idx) {
    while (hull.size() >= 2) {
      const auto& o = pts[hull[hull.size() - 2]];
      const auto& a = pts[hull.back()];
      const auto& b = pts[i];
      long cross = (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(i);
  }
  // Keep the part with negative slopes: from the leftmost point down to the lowest.
  std::size_t lowest = 0;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    if (pts[hull[k]].second < pts[hull[lowest]].second) lowest = k;
  }
  hull.resize(lowest + 1);
  return hull;
}

Polynomial random_polynomial(const RingPtr& ring, std::mt19937& rng, unsigned terms, unsigned max_degree,
                             bool rational_coefficients) {
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<unsigned> var(0, static_cast<unsigned>(ring->size() - 1));
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  Polynomial f(ring);
  for (unsigned t = 0; t < terms; ++t) {
    blowup::Exponents e(ring->size(), 0);
    unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) ++e[var(rng)];
    int c = coef(rng);
    if (c == 0) c = 1;
    Rational q(c, rational_coefficients ? den(rng) : 1);
    q.canonicalize();
    f.add_term(e, q);
  }
  return f;
}

std::vector<Rational> random_point(std::size_t n, std::mt19937& rng, int spread) {
  std::uniform_int_distribution<int> num(-spread, spread);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

}  // namespace oracle
