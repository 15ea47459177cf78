#include "blowup/report.hpp"

#include "blowup/error.hpp"

namespace blowup {

const char* to_string(Format f) { return f == Format::Text ? "text" : "structured"; }

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "structured" || name == "json") return Format::Structured;
  throw Error(ErrorKind::Precondition, "unknown format '" + std::string(name) + "' (text or structured)");
}

std::string emit_report(const Report& report, Format format) {
  if (format == Format::Structured) return to_json(report).dump(2) + "\n";
  std::string out = "> " + report.command + "\n";
  if (!report.ok) out += "  error[" + report.error_kind + "]: ";
  for (std::size_t i = 0; i < report.lines.size(); ++i) {
    out += (i == 0 && !report.ok) ? report.lines[i] + "\n" : "  " + report.lines[i] + "\n";
  }
  if (!report.probes.empty()) {
    out += "  probes:";
    for (const auto& p : report.probes) out += " " + p;
    out += "\n";
  }
  return out;
}

std::string emit_reports(const std::vector<Report>& reports, Format format) {
  if (format == Format::Structured) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    Json doc = Json::object();
    doc["reports"] = std::move(arr);
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out += "\n";
    out += emit_report(reports[i], format);
  }
  return out;
}

Json to_json(const Report& report) {
  Json j = Json::object();
  j["command"] = report.command;
  j["ok"] = report.ok;
  if (!report.ok) j["error"] = report.error_kind;
  j["lines"] = report.lines;
  j["result"] = report.payload;
  j["probes"] = report.probes;
  j["elapsed_us"] = report.elapsed_us;
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.ok = j.at("ok").get<bool>();
  if (j.contains("error")) r.error_kind = j.at("error").get<std::string>();
  r.lines = j.at("lines").get<std::vector<std::string>>();
  r.payload = j.at("result");
  r.probes = j.at("probes").get<std::vector<std::string>>();
  r.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
  return r;
}

std::vector<Report> parse_structured(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("structured report: ") + e.what());
  }
  std::vector<Report> out;
  if (doc.contains("reports")) {
    for (const auto& r : doc.at("reports")) out.push_back(report_from_json(r));
  } else {
    out.push_back(report_from_json(doc));
  }
  return out;
}

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const ExtRational& q) { return q.to_string(); }

Json to_json(const Invariant& inv) {
  Json j = Json::array();
  for (const auto& e : inv) j.push_back(to_json(e));
  return j;
}

Json to_json(const Polynomial& f) { return f.to_string(); }

Json to_json(const Center& c) {
  Json coords = Json::array();
  for (const auto& x : c.coords) {
    Json e = Json::object();
    e["element"] = x.element.to_string();
    e["exponent"] = to_json(x.exponent);
    e["pivot"] = x.pivot;
    coords.push_back(std::move(e));
  }
  Json j = Json::object();
  j["text"] = c.to_string();
  j["coordinates"] = std::move(coords);
  j["point"] = c.base.ring() ? c.base.to_string() : Point::origin(c.ring).to_string();
  return j;
}

Json to_json(const ReducedCenter& rc) {
  Json j = Json::object();
  j["ell"] = to_json(rc.ell);
  j["weights"] = rc.weights;
  j["text"] = rc.to_string();
  return j;
}

Json to_json(const TransformResult& t) {
  Json j = Json::object();
  j["kind"] = to_string(t.kind);
  j["exceptional"] = t.s;
  j["text"] = t.to_string();
  Json gens = Json::array();
  for (const auto& g : t.generators) gens.push_back(g.to_string());
  j["generators"] = std::move(gens);
  Json vals = Json::array();
  for (const auto& v : t.s_exponents) vals.push_back(blowup::to_string(v));
  j["s_valuations"] = std::move(vals);
  if (t.divided) j["divided"] = *t.divided;
  return j;
}

Json to_json(const NewtonPolyhedron& n) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < n.points.size(); ++i) {
    Json p = Json::object();
    p["exponent"] = n.points[i];
    p["vertex"] = static_cast<bool>(n.is_vertex[i]);
    pts.push_back(std::move(p));
  }
  Json facets = Json::array();
  for (const auto& f : n.facets) {
    Json x = Json::object();
    Json normal = Json::array();
    for (const auto& c : f.normal) normal.push_back(to_json(c));
    x["normal"] = std::move(normal);
    x["offset"] = to_json(f.offset);
    x["points"] = f.points;
    x["compact"] = f.compact;
    facets.push_back(std::move(x));
  }
  Json j = Json::object();
  j["variables"] = n.ring->names();
  j["points"] = std::move(pts);
  j["facets"] = std::move(facets);
  return j;
}

namespace {

Json probe_json(const ProbeResult& p) {
  Json j = Json::object();
  j["point"] = p.point.to_string();
  j["on_vertex"] = p.on_vertex;
  j["invariant"] = to_json(p.invariant);
  j["center"] = p.center;
  return j;
}

}  // namespace

Json to_json(const CriterionReport& c) {
  Json j = Json::object();
  j["a"] = c.a;
  j["b"] = c.b;
  j["original"] = to_json(c.original);
  Json probes = Json::array();
  for (const auto& p : c.probes) probes.push_back(probe_json(p));
  j["probes"] = std::move(probes);
  if (c.worst) j["worst"] = probe_json(*c.worst);
  if (c.worst_off_vertex) j["worst_off_vertex"] = probe_json(*c.worst_off_vertex);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const PrincipalizeTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json x = Json::object();
    x["index"] = s.index;
    x["parent"] = s.parent ? Json(*s.parent) : Json(nullptr);
    x["point"] = s.point.to_string();
    x["invariant"] = to_json(s.invariant);
    x["center"] = s.center;
    x["reduced"] = to_json(s.reduced);
    x["exceptional"] = s.exceptional;
    x["transform"] = s.transform.to_string();
    x["decrease_violation"] = s.decrease_violation;
    Json probes = Json::array();
    for (const auto& p : s.probes) probes.push_back(probe_json(p));
    x["probes"] = std::move(probes);
    steps.push_back(std::move(x));
  }
  Json j = Json::object();
  j["status"] = to_string(t.status);
  j["steps"] = std::move(steps);
  j["exceptional"] = t.exceptional;
  return j;
}

Json to_json(const Foliation& f) {
  Json gens = Json::array();
  for (const auto& g : f.generators) gens.push_back(g.to_string());
  Json j = Json::object();
  j["text"] = f.to_string();
  j["generators"] = std::move(gens);
  j["log"] = f.log_vars;
  return j;
}

Json to_json(const AlignedCenter& c) {
  Json j = to_json(c.center);
  j["aligned"] = c.to_string();
  j["transverse_count"] = c.transverse_count;
  return j;
}

}  // namespace blowup
