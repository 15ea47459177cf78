#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blowup/foliation.hpp"
#include "blowup/report.hpp"

namespace blowup {

struct SessionOptions {
  std::size_t max_steps = 20;
  std::uint32_t max_degree = 512;
  std::uint32_t truncation = 24;

  InvariantOptions invariant() const { return {truncation, max_degree}; }
};

/// Partial settings from one source; later sources override earlier ones.
struct OptionOverrides {
  std::optional<std::size_t> max_steps;
  std::optional<std::uint32_t> max_degree;
  std::optional<std::uint32_t> truncation;

  void apply(SessionOptions& options) const;
};

/// BLOWUP_LAB_MAX_STEPS, BLOWUP_LAB_MAX_DEGREE, BLOWUP_LAB_TRUNCATION.
/// `getenv` is injectable for tests. Malformed values throw Precondition.
OptionOverrides environment_overrides(const std::function<const char*(const char*)>& getenv);
/// `max-steps`, `max-degree` or `truncation` with a positive integer value.
void set_option(OptionOverrides& o, std::string_view key, std::string_view value);

struct SessionCommand {
  std::string text;
  std::size_t line = 0;
};

/// Declarations and commands of a session file:
///   vars x y z
///   ideal I = x^2 - y^2*z          (or a list: (f, g))
///   poly f = x^5 + x^3*y^3 + y^100
///   foliation F = (d/dx, d/dy) log z
///   point O = (0, 0, 0)
///   center C = (x^2, y^3, z^3)
///   set max-steps 10
///   invariant I at O               (any other line is a command)
/// `#` starts a comment.
struct Session {
  RingPtr ring;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, Polynomial> polys;
  std::map<std::string, Foliation> foliations;
  std::map<std::string, Point> points;
  std::map<std::string, std::vector<std::pair<std::string, Rational>>> centers;
  OptionOverrides directives;
  SessionOptions options;
  std::vector<SessionCommand> commands;
};

/// Throws ParseError on malformed declarations, duplicate or undeclared names.
Session parse_session(std::string_view text);

/// Names of the commands run_command understands.
const std::vector<std::string>& command_names();

/// Runs one command; domain errors become a failed report.
Report run_command(Session& session, const SessionCommand& command);
std::vector<Report> run_session(Session& session);

/// 0 success, 1 domain error, 2 parse error, 3 budget exhausted (highest wins
/// in the order parse, budget, domain).
int exit_code(const std::vector<Report>& reports);

/// Variables appearing in an expression, sorted; `d/dv` tokens count as v.
std::vector<std::string> infer_variables(std::string_view text);

}  // namespace blowup
