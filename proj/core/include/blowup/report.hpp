#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "blowup/blowup.hpp"
#include "blowup/foliation.hpp"
#include "blowup/invariant.hpp"
#include "blowup/newton.hpp"

namespace blowup {

using Json = nlohmann::ordered_json;

enum class Format { Text, Structured };
const char* to_string(Format f);
/// `text` or `structured`; throws Precondition otherwise.
Format parse_format(std::string_view name);

/// One command's outcome. Every rational leaf of `payload` is a `p/q` string.
struct Report {
  std::string command;
  bool ok = true;
  /// Error kind name when !ok.
  std::string error_kind;
  std::vector<std::string> lines;
  Json payload = Json::object();
  /// Probe points used by criterion-style commands.
  std::vector<std::string> probes;
  std::int64_t elapsed_us = 0;

  friend bool operator==(const Report& a, const Report& b) = default;
};

/// Text: `> command`, then the indented lines; no timing, so output is stable.
/// Structured: a JSON document per report.
std::string emit_report(const Report& report, Format format);
/// Text joins reports with blank lines; structured writes {"reports": [...]}.
std::string emit_reports(const std::vector<Report>& reports, Format format);

Json to_json(const Report& report);
Report report_from_json(const Json& j);
/// Inverse of the structured emit_reports.
std::vector<Report> parse_structured(const std::string& text);

// Payload builders shared by the command dispatcher.
Json to_json(const Rational& q);
Json to_json(const ExtRational& q);
Json to_json(const Invariant& inv);
Json to_json(const Polynomial& f);
Json to_json(const Center& c);
Json to_json(const ReducedCenter& rc);
Json to_json(const TransformResult& t);
Json to_json(const NewtonPolyhedron& n);
Json to_json(const CriterionReport& c);
Json to_json(const PrincipalizeTrace& t);
Json to_json(const Foliation& f);
Json to_json(const AlignedCenter& c);

}  // namespace blowup
