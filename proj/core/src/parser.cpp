#include "blowup/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "blowup/error.hpp"

namespace blowup {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column)
      : text_(text), ring_(ring), line_(line), column_(column) {}

  Expression parse_all() {
    skip_space();
    if (at_end()) fail("empty expression");
    Expression e = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return e;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    std::string name;
    while (!at_end() && ident_char(peek())) {
      name += peek();
      advance();
    }
    while (peek() == '\'') {
      name += '\'';
      advance();
    }
    return name;
  }

  Integer integer() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    if (peek() == '.') fail("decimal literals are not exact; write p/q");
    return Integer(digits);
  }

  // Longest declared variable matching after "d/d", if any.
  std::optional<std::string> derivative_token() const {
    if (text_.substr(pos_, 3) != "d/d") return std::nullopt;
    std::size_t end = pos_ + 3;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    while (end < text_.size() && text_[end] == '\'') ++end;
    std::string name(text_.substr(pos_ + 3, end - pos_ - 3));
    if (name.empty() || !ident_start(name[0])) return std::nullopt;
    return name;
  }

  Expression expr() {
    Expression lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = combine(lhs, term(), '+');
      } else if (accept('-')) {
        lhs = combine(lhs, term(), '-');
      } else {
        return lhs;
      }
    }
  }

  Expression term() {
    Expression lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = combine(lhs, unary(), '*');
      } else if (lookahead_division()) {
        advance();
        Expression rhs = unary();
        const auto* p = std::get_if<Polynomial>(&rhs);
        if (p == nullptr || !p->is_constant() || p->is_zero()) fail("division only by a nonzero constant");
        Rational inv = Rational(1) / p->constant_term();
        if (auto* lp = std::get_if<Polynomial>(&lhs)) {
          *lp *= inv;
        } else {
          lhs = Polynomial::constant(ring_, inv) * std::get<Derivation>(lhs);
        }
      } else {
        return lhs;
      }
    }
  }

  bool lookahead_division() {
    skip_space();
    return peek() == '/';
  }

  Expression unary() {
    if (accept('-')) {
      Expression e = unary();
      if (auto* p = std::get_if<Polynomial>(&e)) return -*p;
      return Polynomial::constant(ring_, -1) * std::get<Derivation>(e);
    }
    if (accept('+')) return unary();
    return power();
  }

  Expression power() {
    Expression base = atom();
    if (!accept('^')) return base;
    skip_space();
    bool paren = accept('(');
    skip_space();
    if (peek() == '-') fail("negative exponent in polynomial position");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
    Integer k = integer();
    skip_space();
    if (paren && peek() == '/') fail("fractional exponent in polynomial position");
    if (paren) expect(')');
    if (!k.fits_uint_p() || k > 100000) fail("exponent too large");
    auto* p = std::get_if<Polynomial>(&base);
    if (p == nullptr) fail("derivations cannot be raised to a power");
    return p->pow(static_cast<unsigned>(k.get_ui()));
  }

  Expression atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (c == '(') {
      advance();
      Expression e = expr();
      if (!accept(')')) fail("unbalanced parentheses: expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, Rational(integer()));
    if (auto var = derivative_token(); var && ring_->contains(*var)) {
      for (std::size_t i = 0; i < 3 + var->size(); ++i) advance();
      return Derivation::partial(ring_, *var);
    }
    if (ident_start(c)) {
      const std::size_t line = line_;
      const std::size_t column = column_;
      std::string name = identifier();
      if (!ring_->contains(name)) throw ParseError("unknown variable '" + name + "'", line, column);
      return Polynomial::variable(ring_, name);
    }
    if (c == ')') fail("unbalanced parentheses: unexpected ')'");
    fail(std::string("unexpected '") + c + "'");
  }

  Expression combine(const Expression& a, const Expression& b, char op) {
    const auto* pa = std::get_if<Polynomial>(&a);
    const auto* pb = std::get_if<Polynomial>(&b);
    if (op == '*') {
      if (pa && pb) return *pa * *pb;
      if (pa) return *pa * std::get<Derivation>(b);
      if (pb) return *pb * std::get<Derivation>(a);
      fail("product of two derivations");
    }
    if (pa && pb) return op == '+' ? *pa + *pb : *pa - *pb;
    if (pa || pb) {
      const auto* p = pa ? pa : pb;
      if (!p->is_zero()) fail("sum of a polynomial and a derivation");
      return pa ? (op == '+' ? b : Expression(Polynomial::constant(ring_, -1) * std::get<Derivation>(b))) : a;
    }
    const auto& da = std::get<Derivation>(a);
    const auto& db = std::get<Derivation>(b);
    return op == '+' ? da + db : da - db;
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

struct Piece {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

// Splits "(a, b, c)" or "a, b, c" at top-level commas, tracking positions.
std::vector<Piece> split_list(std::string_view text, std::size_t line, std::size_t column) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  auto position = [&](std::size_t upto) {
    std::size_t l = line;
    std::size_t c = column;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++l;
        c = 1;
      } else {
        ++c;
      }
    }
    return std::make_pair(l, c);
  };
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin < end && text[begin] == '(') {
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = begin; i < end; ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == end - 1) {
      ++begin;
      --end;
    }
  }
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = begin;
  for (std::size_t i = begin; i <= end; ++i) {
    if (i < end && text[i] == '(') ++depth;
    if (i < end && text[i] == ')') {
      if (--depth < 0) {
        auto [l, c] = position(i);
        throw ParseError("unbalanced parentheses: unexpected ')'", l, c);
      }
    }
    if (i == end || (text[i] == ',' && depth == 0)) {
      auto [l, c] = position(start);
      out.push_back({text.substr(start, i - start), l, c});
      start = i + 1;
    }
  }
  if (depth != 0) {
    auto [l, c] = position(end);
    throw ParseError("unbalanced parentheses: expected ')'", l, c);
  }
  if (out.size() == 1 && out[0].text.find_first_not_of(" \t\r\n") == std::string_view::npos) out.clear();
  return out;
}

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty() || !ident_start(name[0])) return false;
  std::size_t i = 1;
  while (i < name.size() && ident_char(name[i])) ++i;
  while (i < name.size() && name[i] == '\'') ++i;
  return i == name.size();
}

Expression parse_expression(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column) {
  return Parser(text, ring, line, column).parse_all();
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column) {
  Expression e = parse_expression(text, ring, line, column);
  if (auto* p = std::get_if<Polynomial>(&e)) return *p;
  throw ParseError("expected a polynomial, got a derivation", line, column);
}

Derivation parse_derivation(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column) {
  Expression e = parse_expression(text, ring, line, column);
  if (auto* d = std::get_if<Derivation>(&e)) return *d;
  const auto& p = std::get<Polynomial>(e);
  if (p.is_zero()) return Derivation(ring);
  throw ParseError("expected a derivation (use d/dx), got a polynomial", line, column);
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring, std::size_t line,
                                              std::size_t column) {
  std::vector<Polynomial> out;
  for (const auto& piece : split_list(text, line, column)) {
    Polynomial p = parse_polynomial(piece.text, ring, piece.line, piece.column);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Derivation> parse_derivation_list(std::string_view text, const RingPtr& ring, std::size_t line,
                                              std::size_t column) {
  std::vector<Derivation> out;
  for (const auto& piece : split_list(text, line, column)) {
    Derivation d = parse_derivation(piece.text, ring, piece.line, piece.column);
    if (!d.is_zero()) out.push_back(std::move(d));
  }
  return out;
}

std::vector<std::pair<std::string, Rational>> parse_center(std::string_view text, const RingPtr& ring,
                                                           std::size_t line, std::size_t column) {
  std::vector<std::pair<std::string, Rational>> out;
  for (const auto& piece : split_list(text, line, column)) {
    std::string_view t = piece.text;
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    const std::size_t lead = std::min(t.find_first_not_of(" \t\r\n"), t.size());
    t = trim(t);
    const std::size_t col = piece.column + lead;
    const std::size_t caret = t.find('^');
    std::string name(trim(t.substr(0, caret)));
    if (!is_identifier(name)) throw ParseError("center entries must be variables, got '" + name + "'", piece.line, col);
    if (!ring->contains(name)) throw ParseError("unknown variable '" + name + "'", piece.line, col);
    Rational a = 1;
    if (caret != std::string_view::npos) {
      std::string_view e = trim(t.substr(caret + 1));
      if (e.size() >= 2 && e.front() == '(' && e.back() == ')') e = trim(e.substr(1, e.size() - 2));
      try {
        a = parse_rational(e);
      } catch (const std::exception&) {
        throw ParseError("malformed center exponent '" + std::string(e) + "'", piece.line, col + caret + 1);
      }
    }
    if (a <= 0) throw ParseError("center exponents must be positive", piece.line, col);
    out.emplace_back(std::move(name), a);
  }
  return out;
}

Point parse_point(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t == "origin") return Point::origin(ring);
  auto pieces = split_list(text, line, column);
  if (pieces.size() != ring->size()) {
    throw ParseError("point needs " + std::to_string(ring->size()) + " coordinates, got " +
                         std::to_string(pieces.size()),
                     line, column);
  }
  std::vector<Rational> coords;
  for (const auto& piece : pieces) {
    Polynomial p = parse_polynomial(piece.text, ring, piece.line, piece.column);
    if (!p.is_constant()) throw ParseError("point coordinates must be rational constants", piece.line, piece.column);
    coords.push_back(p.constant_term());
  }
  return Point(ring, coords);
}

}  // namespace blowup
