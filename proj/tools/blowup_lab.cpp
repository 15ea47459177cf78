#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "blowup/error.hpp"
#include "blowup/session.hpp"

using namespace blowup;

namespace {

struct Flags {
  std::string format = "text";
  std::string out;
  std::optional<std::size_t> max_steps;
  std::optional<std::uint32_t> max_degree;
  std::optional<std::uint32_t> truncation;
};

void add_budget_flags(CLI::App* app, Flags& f) {
  app->add_option("--max-steps", f.max_steps, "principalization step budget")->check(CLI::PositiveNumber);
  app->add_option("--max-degree", f.max_degree, "degree cap for intermediate ideals")->check(CLI::PositiveNumber);
  app->add_option("--truncation", f.truncation, "truncation order for coordinate changes")->check(CLI::PositiveNumber);
  app->add_option("--format", f.format, "text or structured")->check(CLI::IsMember({"text", "structured", "json"}));
  app->add_option("--out", f.out, "write the report here instead of stdout");
}

// Defaults, then `set` directives in the file, then the environment, then flags.
void resolve_options(Session& s, const Flags& f) {
  s.options = SessionOptions{};
  s.directives.apply(s.options);
  environment_overrides([](const char* name) { return std::getenv(name); }).apply(s.options);
  OptionOverrides{f.max_steps, f.max_degree, f.truncation}.apply(s.options);
}

int finish(const std::vector<Report>& reports, const Flags& f) {
  const std::string text = emit_reports(reports, parse_format(f.format));
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(f.out);
    if (!os) {
      std::cerr << "blowup-lab: cannot write " << f.out << "\n";
      return 1;
    }
    os << text;
  }
  return exit_code(reports);
}

int parse_failure(const std::string& command, const Error& e, const Flags& f) {
  Report r;
  r.command = command;
  r.ok = false;
  r.error_kind = to_string(e.kind());
  r.lines.push_back(e.what());
  return finish({r}, f);
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Precondition, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_file(const std::string& path, const Flags& f) {
  std::string text;
  try {
    text = read_input(path);
  } catch (const Error& e) {
    return parse_failure("run " + path, e, f);
  }
  Session s;
  try {
    s = parse_session(text);
    resolve_options(s, f);
  } catch (const Error& e) {
    return parse_failure("run " + path, e, f);
  }
  return finish(run_session(s), f);
}

// A one-shot command; variables are inferred unless --vars is given.
// Several lines may be joined with ';'.
int eval(const std::string& command, const std::string& vars, const Flags& f) {
  std::string body = command;
  for (auto& c : body) {
    if (c == ';') c = '\n';
  }
  std::string header = "vars";
  if (!vars.empty()) {
    header += " " + vars;
  } else {
    for (const auto& v : infer_variables(body)) header += " " + v;
    if (header == "vars") header += " x";
  }
  Session s;
  try {
    s = parse_session(header + "\n" + body);
    resolve_options(s, f);
  } catch (const Error& e) {
    return parse_failure(command, e, f);
  }
  return finish(run_session(s), f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blowup-lab: weighted blowups, invariants and principalization"};
  app.require_subcommand(1);

  Flags run_flags;
  std::string path;
  auto* run = app.add_subcommand("run", "run a session file ('-' reads stdin)");
  run->add_option("file", path, "session file")->required();
  add_budget_flags(run, run_flags);

  Flags eval_flags;
  std::string command;
  std::string vars;
  auto* ev = app.add_subcommand("eval", "run one command, e.g. \"invariant x^2 - y^2*z\"");
  ev->add_option("command", command, "command text; ';' separates lines")->required();
  ev->add_option("--vars", vars, "space separated variable list");
  add_budget_flags(ev, eval_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*run) return run_file(path, run_flags);
    return eval(command, vars, eval_flags);
  } catch (const Error& e) {
    std::cerr << "blowup-lab: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  }
}
