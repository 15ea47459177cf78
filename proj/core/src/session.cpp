#include "blowup/session.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <set>

#include "blowup/error.hpp"
#include "blowup/parser.hpp"

namespace blowup {

void OptionOverrides::apply(SessionOptions& options) const {
  if (max_steps) options.max_steps = *max_steps;
  if (max_degree) options.max_degree = *max_degree;
  if (truncation) options.truncation = *truncation;
}

namespace {

std::uint64_t positive(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || out == 0 || out > UINT32_MAX) {
    throw Error(ErrorKind::Precondition,
                std::string(key) + " needs a positive integer, got '" + std::string(value) + "'");
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

void set_option(OptionOverrides& o, std::string_view key, std::string_view value) {
  if (key == "max-steps") {
    o.max_steps = positive(key, value);
  } else if (key == "max-degree") {
    o.max_degree = static_cast<std::uint32_t>(positive(key, value));
  } else if (key == "truncation") {
    o.truncation = static_cast<std::uint32_t>(positive(key, value));
  } else {
    throw Error(ErrorKind::Precondition,
                "unknown option '" + std::string(key) + "' (max-steps, max-degree, truncation)");
  }
}

OptionOverrides environment_overrides(const std::function<const char*(const char*)>& getenv) {
  OptionOverrides o;
  const std::pair<const char*, const char*> vars[] = {
      {"BLOWUP_LAB_MAX_STEPS", "max-steps"},
      {"BLOWUP_LAB_MAX_DEGREE", "max-degree"},
      {"BLOWUP_LAB_TRUNCATION", "truncation"},
  };
  for (const auto& [env, key] : vars) {
    if (const char* v = getenv(env); v != nullptr && *v != '\0') set_option(o, key, v);
  }
  return o;
}

Session parse_session(std::string_view text) {
  Session s;
  std::set<std::string> names;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data()) + 1;
    auto ws = words(line);
    const std::string& head = ws[0];
    auto fail = [&](const std::string& message, std::size_t column = 0) -> void {
      throw ParseError(message, line_no, column == 0 ? indent : column);
    };

    if (head == "vars") {
      if (s.ring) fail("variables already declared");
      if (ws.size() < 2) fail("vars needs at least one variable");
      std::vector<std::string> vars(ws.begin() + 1, ws.end());
      for (const auto& v : vars) {
        if (!is_identifier(v)) fail("bad variable name '" + v + "'");
      }
      try {
        s.ring = make_ring(vars);
      } catch (const Error& e) {
        fail(e.what());
      }
      continue;
    }
    if (head == "set") {
      if (ws.size() != 3) fail("expected: set <max-steps|max-degree|truncation> <N>");
      try {
        set_option(s.directives, ws[1], ws[2]);
      } catch (const Error& e) {
        fail(e.what());
      }
      continue;
    }
    static const std::set<std::string> decls = {"ideal", "poly", "foliation", "point", "center"};
    if (decls.count(head) && (head != "center" || line.find('=') != std::string_view::npos)) {
      if (!s.ring) fail("declare vars before " + head);
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) fail("expected: " + head + " <name> = <value>");
      std::string name(trim(line.substr(head.size(), eq - head.size())));
      if (!is_identifier(name)) fail("bad name '" + name + "'");
      if (names.count(name)) fail("'" + name + "' already declared");
      if (s.ring->contains(name)) fail("'" + name + "' is a variable");
      names.insert(name);
      std::string_view value = line.substr(eq + 1);
      const std::size_t col = indent + eq + 1;
      if (head == "ideal") {
        s.ideals.emplace(name, Ideal(s.ring, parse_polynomial_list(value, s.ring, line_no, col)));
      } else if (head == "poly") {
        s.polys.emplace(name, parse_polynomial(value, s.ring, line_no, col));
      } else if (head == "foliation") {
        std::vector<std::string> log;
        auto lw = words(value);
        auto it = std::find(lw.begin(), lw.end(), "log");
        if (it != lw.end()) {
          const std::size_t at = value.find(" log ");
          std::string_view tail = value.substr(at + 5);
          for (const auto& v : words(tail)) {
            if (!s.ring->contains(v)) fail("unknown log variable '" + v + "'");
            log.push_back(v);
          }
          value = value.substr(0, at);
        }
        s.foliations.emplace(name, Foliation(s.ring, parse_derivation_list(value, s.ring, line_no, col), log));
      } else if (head == "point") {
        s.points.emplace(name, parse_point(value, s.ring, line_no, col));
      } else {
        s.centers.emplace(name, parse_center(value, s.ring, line_no, col));
      }
      continue;
    }
    if (std::find(command_names().begin(), command_names().end(), head) == command_names().end()) {
      fail("unknown command or declaration '" + head + "'");
    }
    if (!s.ring) fail("declare vars before commands");
    s.commands.push_back({std::string(line), line_no});
  }
  s.directives.apply(s.options);
  return s;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "order",     "invariant", "center", "reduce", "blowup", "transform",  "charts",     "criterion",
      "principalize", "newton", "forder", "finvariant", "ftransform", "graphreduce",
  };
  return names;
}

std::vector<std::string> infer_variables(std::string_view text) {
  static const std::set<std::string> reserved = {"at", "center", "kind", "on", "log", "origin",
                                                 "total", "controlled", "proper"};
  std::set<std::string> found;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      while (j < text.size() && text[j] == '\'') ++j;
      std::string w(text.substr(i, j - i));
      if (w == "d" && text.substr(j, 2) == "/d") {
        i = j + 2;
        continue;
      }
      const bool command = std::find(command_names().begin(), command_names().end(), w) != command_names().end();
      if (!command && !reserved.count(w)) found.insert(w);
      i = j;
    } else {
      ++i;
    }
  }
  return {found.begin(), found.end()};
}

int exit_code(const std::vector<Report>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.ok) continue;
    if (r.error_kind == to_string(ErrorKind::Parse)) return 2;
    if (r.error_kind == to_string(ErrorKind::Budget)) {
      code = 3;
    } else if (code == 0) {
      code = 1;
    }
  }
  return code;
}

namespace {

struct Args {
  std::string main;
  std::map<std::string, std::string> opts;
};

Args split_args(std::string_view text) {
  static const std::set<std::string> keywords = {"at", "center", "kind", "on"};
  Args a;
  auto ws = words(text);
  std::string* current = &a.main;
  for (std::size_t i = 1; i < ws.size(); ++i) {
    if (keywords.count(ws[i])) {
      if (a.opts.count(ws[i])) throw ParseError("'" + ws[i] + "' given twice", 0, 0);
      current = &a.opts[ws[i]];
      continue;
    }
    if (!current->empty()) *current += " ";
    *current += ws[i];
  }
  return a;
}

class Dispatcher {
 public:
  Dispatcher(Session& s, const SessionCommand& c, Report& r) : s_(s), cmd_(c), r_(r) {}

  void run() {
    const std::string head = words(cmd_.text).front();
    args_ = split_args(cmd_.text);
    if (head == "order") return order();
    if (head == "invariant") return invariant();
    if (head == "center") return center();
    if (head == "reduce") return reduce();
    if (head == "blowup") return blowup();
    if (head == "transform") return transform();
    if (head == "charts") return charts();
    if (head == "criterion") return criterion();
    if (head == "principalize") return principalize_cmd();
    if (head == "newton") return newton();
    if (head == "forder") return forder();
    if (head == "finvariant") return finvariant();
    if (head == "ftransform") return ftransform();
    if (head == "graphreduce") return graphreduce();
    throw ParseError("unknown command '" + head + "'", cmd_.line, 1);
  }

 private:
  void line(std::string text) { r_.lines.push_back(std::move(text)); }

  std::size_t column_of(const std::string& text) const {
    auto pos = cmd_.text.find(text);
    return pos == std::string::npos ? 1 : pos + 1;
  }

  void need(const std::string& what, const std::string& text) const {
    if (text.empty()) throw ParseError("missing " + what, cmd_.line, cmd_.text.size() + 1);
  }

  Ideal ideal_arg(const std::string& text) const {
    need("ideal", text);
    if (auto it = s_.ideals.find(text); it != s_.ideals.end()) return it->second;
    if (auto it = s_.polys.find(text); it != s_.polys.end()) return Ideal(s_.ring, {it->second});
    return Ideal(s_.ring, parse_polynomial_list(text, s_.ring, cmd_.line, column_of(text)));
  }

  Polynomial poly_arg(const std::string& text) const {
    need("polynomial", text);
    if (auto it = s_.polys.find(text); it != s_.polys.end()) return it->second;
    if (auto it = s_.ideals.find(text); it != s_.ideals.end()) {
      if (it->second.generators().size() != 1) {
        throw Error(ErrorKind::Precondition, "ideal " + text + " is not principal");
      }
      return it->second.generators().front();
    }
    return parse_polynomial(text, s_.ring, cmd_.line, column_of(text));
  }

  Point point() const {
    auto it = args_.opts.find("at");
    if (it == args_.opts.end()) return Point::origin(s_.ring);
    if (auto p = s_.points.find(it->second); p != s_.points.end()) return p->second;
    return parse_point(it->second, s_.ring, cmd_.line, column_of(it->second));
  }

  std::optional<Center> given_center() const {
    auto it = args_.opts.find("center");
    if (it == args_.opts.end()) return std::nullopt;
    std::vector<std::pair<std::string, Rational>> coords;
    if (auto c = s_.centers.find(it->second); c != s_.centers.end()) {
      coords = c->second;
    } else {
      coords = parse_center(it->second, s_.ring, cmd_.line, column_of(it->second));
    }
    Center c = coordinate_center(s_.ring, coords);
    c.base = point();
    return c;
  }

  Foliation foliation_arg(const std::string& text) const {
    need("foliation", text);
    if (auto it = s_.foliations.find(text); it != s_.foliations.end()) return it->second;
    return Foliation(s_.ring, parse_derivation_list(text, s_.ring, cmd_.line, column_of(text)));
  }

  // "F rest": first word names a foliation, the rest an ideal.
  std::pair<Foliation, Ideal> foliation_and_ideal() const {
    auto ws = words(args_.main);
    if (ws.size() < 2) throw ParseError("expected: <foliation> <ideal>", cmd_.line, cmd_.text.size() + 1);
    std::string rest = args_.main.substr(args_.main.find(ws[0]) + ws[0].size());
    return {foliation_arg(ws[0]), ideal_arg(std::string(trim(rest)))};
  }

  // The computed center at the point unless one is given.
  Center center_for(const Ideal& ideal) {
    if (auto c = given_center()) return *c;
    InvariantResult res = invariant_and_center(ideal, point(), s_.options.invariant());
    return res.center;
  }

  void order() {
    Ideal ideal = ideal_arg(args_.main);
    Order o = order_at(ideal, point());
    line("ord = " + to_string(o));
    r_.payload["order"] = to_string(o);
  }

  void invariant() {
    Ideal ideal = ideal_arg(args_.main);
    InvariantResult res = invariant_and_center(ideal, point(), s_.options.invariant());
    line("inv = " + to_string(res.invariant));
    line("center = " + res.center.to_string());
    r_.payload["invariant"] = to_json(res.invariant);
    r_.payload["center"] = to_json(res.center);
    if (!res.center.coords.empty()) {
      ReducedCenter rc = reduce_center(res.center);
      line("reduced: " + rc.to_string());
      r_.payload["reduced"] = to_json(rc);
    }
    Json levels = Json::array();
    for (const auto& l : res.levels) {
      Json x = Json::object();
      x["ring"] = l.ring->names();
      x["marked"] = l.sum.to_string();
      x["entry"] = to_json(l.entry);
      if (l.contact) x["contact"] = l.contact->element.to_string();
      levels.push_back(std::move(x));
    }
    r_.payload["levels"] = std::move(levels);
  }

  void center() {
    Ideal ideal = ideal_arg(args_.main);
    Center c = center_for(ideal);
    AdmissibilityReport adm = check_admissible(c, ideal);
    line("center = " + c.to_string());
    line(std::string("admissible = ") + (adm.admissible && adm.graded ? "true" : "false"));
    r_.payload["center"] = to_json(c);
    r_.payload["admissible"] = adm.admissible;
    r_.payload["graded"] = adm.graded;
  }

  void reduce() {
    Center c;
    if (auto it = s_.centers.find(args_.main); it != s_.centers.end()) {
      c = coordinate_center(s_.ring, it->second);
    } else if (!args_.main.empty() && args_.main.front() == '(' && !s_.ideals.count(args_.main)) {
      c = coordinate_center(s_.ring, parse_center(args_.main, s_.ring, cmd_.line, column_of(args_.main)));
    } else {
      c = center_for(ideal_arg(args_.main));
    }
    ReducedCenter rc = reduce_center(c);
    line("center = " + c.to_string());
    line("reduced: " + rc.to_string());
    r_.payload["center"] = to_json(c);
    r_.payload["reduced"] = to_json(rc);
  }

  void blowup() {
    Ideal ideal = ideal_arg(args_.main);
    ReesPresentation rp = rees_presentation(center_for(ideal));
    line("B = Q[" + join(rp.ring->names()) + "]");
    std::vector<std::string> rels;
    for (const auto& rel : rp.relations()) rels.push_back(rel.to_string());
    line("relations: " + join(rels));
    std::vector<std::string> grading;
    for (const auto& v : rp.ring->names()) grading.push_back(v + ":" + std::to_string(rp.grading.at(v)));
    line("grading: " + join(grading));
    std::vector<std::string> vertex;
    for (const auto& v : rp.vertex_ideal()) vertex.push_back(v.to_string());
    line("vertex = (" + join(vertex) + ")");
    line("l = " + to_string(rp.ell));
    r_.payload["ring"] = rp.ring->names();
    r_.payload["exceptional"] = rp.s;
    r_.payload["relations"] = rels;
    r_.payload["grading"] = grading;
    r_.payload["ell"] = to_json(rp.ell);
    r_.payload["weights"] = rp.weights;
    r_.payload["homogeneous"] = rp.relations_homogeneous();
  }

  void transform() {
    Ideal ideal = ideal_arg(args_.main);
    ReesPresentation rp = rees_presentation(center_for(ideal));
    std::vector<TransformKind> kinds = {TransformKind::Total, TransformKind::Controlled, TransformKind::Proper};
    if (auto it = args_.opts.find("kind"); it != args_.opts.end()) {
      if (it->second == "total") kinds = {TransformKind::Total};
      else if (it->second == "controlled") kinds = {TransformKind::Controlled};
      else if (it->second == "proper") kinds = {TransformKind::Proper};
      else throw ParseError("unknown transform kind '" + it->second + "'", cmd_.line, column_of(it->second));
    }
    for (auto k : kinds) {
      TransformResult t = k == TransformKind::Total        ? total_transform(ideal, rp)
                          : k == TransformKind::Controlled ? controlled_transform(ideal, rp)
                                                           : proper_transform(ideal, rp);
      line(std::string(to_string(k)) + " = " + t.to_string());
      r_.payload[to_string(k)] = to_json(t);
    }
  }

  void charts() {
    Ideal ideal = ideal_arg(args_.main);
    ReesPresentation rp = rees_presentation(center_for(ideal));
    Json arr = Json::array();
    for (std::size_t i = 0; i < rp.center_vars.size(); ++i) {
      EtaleChart ch = etale_chart(rp, i);
      ChartTransform t = chart_transform(ideal, rp, ch);
      std::vector<std::string> gens;
      for (const auto& g : t.generators) gens.push_back(g.to_string());
      std::vector<std::string> rels;
      for (const auto& rel : ch.relations(rp)) rels.push_back(rel.to_string());
      std::vector<std::string> action;
      for (const auto& [v, w] : ch.action_weights) action.push_back(v + ":" + std::to_string(w));
      line("chart " + ch.chart_var + ": (" + join(gens) + ") mu_" + std::to_string(ch.group_order) + " weights " +
           join(action));
      line("  relations: " + join(rels));
      Json x = Json::object();
      x["chart"] = ch.chart_var;
      x["ring"] = ch.ring->names();
      x["generators"] = gens;
      x["relations"] = rels;
      x["group_order"] = ch.group_order;
      x["action"] = ch.action_weights;
      arr.push_back(std::move(x));
    }
    r_.payload["charts"] = std::move(arr);
  }

  void criterion() {
    Ideal ideal = ideal_arg(args_.main);
    Center c = center_for(ideal);
    CriterionReport cr = check_criterion(ideal, c, point(), {}, s_.options.invariant());
    line("center = " + c.to_string());
    line("original = " + to_string(cr.original));
    line(std::string("a = ") + (cr.a ? "true" : "false"));
    line(std::string("b = ") + (cr.b ? "true" : "false"));
    if (cr.worst) line("worst = " + to_string(cr.worst->invariant) + " at " + cr.worst->point.to_string());
    if (cr.worst_off_vertex) {
      line("worst off vertex = " + to_string(cr.worst_off_vertex->invariant) + " at " +
           cr.worst_off_vertex->point.to_string());
    }
    if (!cr.note.empty()) line("note: " + cr.note);
    for (const auto& p : cr.probes) r_.probes.push_back(p.point.to_string());
    r_.payload = to_json(cr);
  }

  void principalize_cmd() {
    Ideal ideal = ideal_arg(args_.main);
    PrincipalizeOptions opts{s_.options.max_steps, s_.options.invariant()};
    PrincipalizeTrace t = principalize(ideal, opts);
    line(std::string("status = ") + to_string(t.status));
    for (const auto& st : t.steps) {
      std::string parent = st.parent ? std::to_string(*st.parent) : "-";
      line("step " + std::to_string(st.index) + " (parent " + parent + ") at " + st.point.to_string() +
           ": inv=" + to_string(st.invariant) + " center=" + st.center + " " + st.reduced.to_string() +
           (st.decrease_violation ? " [no decrease]" : ""));
    }
    r_.payload = to_json(t);
    if (t.status == PrincipalizeTrace::Status::BudgetExhausted) {
      throw Error(ErrorKind::Budget, "step budget of " + std::to_string(opts.max_steps) + " exhausted");
    }
  }

  void newton() {
    NewtonPolyhedron n = newton_polyhedron(poly_arg(args_.main));
    std::vector<std::string> pts;
    std::vector<std::string> verts;
    for (std::size_t i = 0; i < n.points.size(); ++i) {
      std::vector<std::string> e;
      for (auto k : n.points[i]) e.push_back(std::to_string(k));
      pts.push_back("(" + join(e, ",") + ")");
      if (n.is_vertex[i]) verts.push_back(pts.back());
    }
    line("points: " + join(pts, " "));
    line("vertices: " + join(verts, " "));
    for (const auto& f : n.facets) {
      std::vector<std::string> normal;
      for (const auto& c : f.normal) normal.push_back(to_string(c));
      line("facet (" + join(normal, ",") + ").e >= " + to_string(f.offset) + (f.compact ? " compact" : ""));
    }
    r_.payload = to_json(n);
  }

  void forder() {
    auto [f, ideal] = foliation_and_ideal();
    ExtRational o = f_order_at(f, ideal, point());
    line("ford = " + o.to_string());
    line(std::string("invariant = ") + (is_f_invariant(f, ideal) ? "true" : "false"));
    r_.payload["f_order"] = to_json(o);
    r_.payload["f_invariant"] = is_f_invariant(f, ideal);
  }

  void finvariant() {
    auto [f, ideal] = foliation_and_ideal();
    FoliatedResult res = foliated_invariant_and_center(f, ideal, point(), s_.options.invariant());
    line("finv = " + to_string(res.invariant));
    line("center = " + res.center.center.to_string());
    line("aligned = " + res.center.to_string());
    r_.payload["invariant"] = to_json(res.invariant);
    r_.payload["center"] = to_json(res.center);
    if (!res.center.center.coords.empty()) {
      ReducedCenter rc = reduce_center(res.center.center);
      line("reduced: " + rc.to_string());
      r_.payload["reduced"] = to_json(rc);
    }
  }

  void ftransform() {
    auto [f, ideal] = foliation_and_ideal();
    Center c;
    if (auto given = given_center()) {
      c = *given;
    } else {
      c = foliated_invariant_and_center(f, ideal, point(), s_.options.invariant()).center.center;
    }
    ReesPresentation rp = rees_presentation(c);
    FoliationTransform t = transform_foliation(f, rp);
    std::vector<std::string> powers;
    for (auto k : t.s_powers) powers.push_back(std::to_string(k));
    line("center = " + c.to_string());
    line("F' = " + t.foliation.to_string());
    line("s-powers: " + join(powers));
    r_.payload["center"] = to_json(c);
    r_.payload["foliation"] = to_json(t.foliation);
    r_.payload["s_powers"] = t.s_powers;
  }

  void graphreduce() {
    need("first integrals", args_.main);
    std::vector<Polynomial> integrals;
    if (s_.polys.count(args_.main) || s_.ideals.count(args_.main)) {
      integrals.push_back(poly_arg(args_.main));
    } else {
      integrals = parse_polynomial_list(args_.main, s_.ring, cmd_.line, column_of(args_.main));
    }
    Ideal ideal(s_.ring);
    if (auto it = args_.opts.find("on"); it != args_.opts.end()) ideal = ideal_arg(it->second);
    GraphReduction g = graph_reduction(integrals, ideal, s_.options.invariant());
    line("graph ideal = " + g.graph_ideal.to_string());
    line("H = " + g.ambient_foliation.to_string());
    line("F = " + g.foliation.to_string());
    line("finv = " + to_string(g.invariant.invariant));
    line("center = " + g.invariant.center.to_string());
    ReducedCenter rc = reduce_center(g.invariant.center.center);
    line("reduced: " + rc.to_string());
    line("blowup equation = " + g.blowup_equation.to_string());
    line("F' = " + g.transformed.foliation.to_string());
    for (const auto& [q, st] : g.probes) line("probe " + q.to_string() + ": " + to_string(st));
    line(std::string("singular only on vertex = ") + (g.singular_only_on_vertex ? "true" : "false"));
    r_.payload["graph_ideal"] = g.graph_ideal.to_string();
    r_.payload["invariant"] = to_json(g.invariant.invariant);
    r_.payload["center"] = to_json(g.invariant.center);
    r_.payload["reduced"] = to_json(rc);
    r_.payload["blowup_equation"] = to_json(g.blowup_equation);
    r_.payload["foliation"] = to_json(g.foliation);
    r_.payload["transformed"] = to_json(g.transformed.foliation);
    Json probes = Json::array();
    for (const auto& [q, st] : g.probes) {
      Json x = Json::object();
      x["point"] = q.to_string();
      x["status"] = to_string(st);
      probes.push_back(std::move(x));
      r_.probes.push_back(q.to_string());
    }
    r_.payload["probes"] = std::move(probes);
    r_.payload["singular_only_on_vertex"] = g.singular_only_on_vertex;
  }

  static std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += sep;
      out += parts[i];
    }
    return out;
  }

  Session& s_;
  const SessionCommand& cmd_;
  Report& r_;
  Args args_;
};

}  // namespace

Report run_command(Session& session, const SessionCommand& command) {
  Report r;
  r.command = command.text;
  const auto start = std::chrono::steady_clock::now();
  try {
    Dispatcher(session, command, r).run();
  } catch (const ParseError& e) {
    r.ok = false;
    r.error_kind = to_string(e.kind());
    // Positions inside a command are relative to the command line.
    r.lines = {e.line() == 0 ? std::to_string(command.line) + ": " + std::string(e.what()).substr(5) : e.what()};
  } catch (const Error& e) {
    r.ok = false;
    r.error_kind = to_string(e.kind());
    r.lines.insert(r.lines.begin(), e.what());
  }
  r.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Report> run_session(Session& session) {
  std::vector<Report> out;
  for (const auto& c : session.commands) out.push_back(run_command(session, c));
  return out;
}

}  // namespace blowup
