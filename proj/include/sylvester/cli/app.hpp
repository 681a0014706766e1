#pragma once

// Command-line front end: solve / decompose / reduce / check.
//
// Exit codes: 0 success, 2 parse or usage error, 3 leading coefficient is
// zero, 4 check failed, 5 internal degeneracy (including decompose on a
// non-generic cubic). Diagnostics go to the error stream only.

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sylvester/cli/complex_literal.hpp"
#include "sylvester/oracle.hpp"
#include "sylvester/reduction.hpp"
#include "sylvester/solver.hpp"

namespace sylvester::cli {

enum class Command { Solve, Decompose, Reduce, Check };
enum class Format { Text, Jsonl, Csv };

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitDegenerate = 3,
  kExitCheckFailed = 4,
  kExitInternal = 5,
};

/// A x^3 + B x^2 + C x + D, with the literals as typed.
struct CoefficientQuad {
  std::array<std::string, 4> text;
  std::array<Complex, 4> values;
};

/// x^3 - 3 p x + q given directly.
struct ReducedPair {
  std::array<std::string, 2> text;
  ReducedCubic cubic;
};

struct InputFile {
  std::string path;
};

using CoefficientSource = std::variant<CoefficientQuad, ReducedPair, InputFile>;

struct CliRequest {
  Command command = Command::Solve;
  CoefficientSource source;
  Format format = Format::Text;
  SolveOptions solve;
  double tol = 1e-8;
  std::vector<Complex> check_roots;
};

/// Raised when `decompose` meets a cubic outside the generic case.
class NotGeneric : public Error {
 public:
  explicit NotGeneric(CaseTag tag)
      : Error("decomposition requires a generic cubic; classification is " +
              std::string(to_string(tag))) {}
};

namespace detail {

using Json = nlohmann::ordered_json;

inline std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_fields(std::string_view s) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    fields.emplace_back(trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

inline std::vector<Complex> parse_list(std::string_view s, std::size_t expected, std::string_view what) {
  const auto fields = split_fields(s);
  if (expected != 0 && fields.size() != expected) {
    throw InvalidInput(std::string(what) + ": expected " + std::to_string(expected) +
                       " comma-separated values, got " + std::to_string(fields.size()));
  }
  std::vector<Complex> values;
  values.reserve(fields.size());
  for (const auto& f : fields) {
    try {
      values.push_back(parse_complex(f));
    } catch (const ParseError& e) {
      throw ParseError(e.offset(), e.expected() + " in " + std::string(what) + " value '" + f + "'");
    }
  }
  return values;
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += sep;
    out += parts[i];
  }
  return out;
}

// Resolved problem: the reduced cubic, plus the original when one exists.
struct Problem {
  std::vector<std::string> input;
  ReducedCubic reduced;
  std::optional<GeneralCubic> general;
  Complex shift;
};

inline Problem prepare(const CoefficientQuad& quad) {
  const auto& v = quad.values;
  const GeneralCubic g = normalize(v[0], v[1], v[2], v[3]);
  const DepressionRecord dep = depress(g);
  return {{quad.text.begin(), quad.text.end()}, dep.reduced, g, dep.shift};
}

inline Problem prepare(const ReducedPair& pair) {
  require_finite(pair.cubic);
  return {{pair.text.begin(), pair.text.end()}, pair.cubic, std::nullopt, Complex{}};
}

inline Problem prepare(const CoefficientSource& source) {
  if (const auto* quad = std::get_if<CoefficientQuad>(&source)) return prepare(*quad);
  if (const auto* pair = std::get_if<ReducedPair>(&source)) return prepare(*pair);
  throw InvalidInput("an input file is only accepted by 'solve'");
}

}  // namespace detail

/// One solved cubic in output form. Either `error` is set, or every other
/// optional member is (decomposition only for generic cubics).
struct SolveRecord {
  int line = 1;
  std::vector<std::string> input;
  std::optional<CaseTag> classification;
  std::optional<ReducedCubic> reduced;
  std::optional<Complex> shift;
  std::optional<std::array<Complex, 3>> roots;
  std::optional<std::array<double, 3>> residuals;
  std::optional<Decomposition> decomposition;
  std::optional<std::string> error;
  bool general_input = true;
};

/// Solves the problem and maps roots back to the original variable.
/// Residuals are measured against the cubic the user supplied.
inline SolveRecord solve_problem(const detail::Problem& problem, const SolveOptions& opts, int line) {
  SolveRecord rec;
  rec.line = line;
  rec.input = problem.input;
  rec.general_input = problem.general.has_value();
  const SolveResult result = solve_reduced(problem.reduced, opts);

  std::array<Complex, 3> roots = result.roots;
  std::array<double, 3> residuals = result.residuals;
  if (problem.general) {
    roots = lift_roots(roots, problem.shift);
    std::sort(roots.begin(), roots.end(), root_less);
    for (std::size_t k = 0; k < 3; ++k) residuals[k] = residual(roots[k], *problem.general);
  }
  rec.classification = result.classification.tag;
  rec.reduced = problem.reduced;
  rec.shift = problem.shift;
  rec.roots = roots;
  rec.residuals = residuals;
  rec.decomposition = result.decomposition;
  return rec;
}

inline SolveRecord solve_csv_line(std::string_view text, int line, const SolveOptions& opts) {
  SolveRecord rec;
  rec.line = line;
  const auto fields = detail::split_fields(text);
  rec.input = fields;
  try {
    if (fields.size() != 4) {
      throw InvalidInput("expected 4 comma-separated coefficients, got " +
                         std::to_string(fields.size()));
    }
    CoefficientQuad quad;
    for (std::size_t i = 0; i < 4; ++i) {
      quad.text[i] = fields[i];
      quad.values[i] = parse_complex(fields[i]);
    }
    return solve_problem(detail::prepare(quad), opts, line);
  } catch (const Error& e) {
    rec.error = e.what();
    return rec;
  }
}

inline nlohmann::ordered_json to_json(const SolveRecord& rec) {
  using detail::Json;
  Json j;
  j["line"] = rec.line;
  j["input"] = rec.input;
  const auto str_or_null = [](const auto& opt, auto&& f) -> Json {
    return opt ? Json(f(*opt)) : Json(nullptr);
  };
  j["classification"] = str_or_null(rec.classification, [](CaseTag t) { return std::string(to_string(t)); });
  j["p"] = str_or_null(rec.reduced, [](const ReducedCubic& rc) { return render_complex(rc.p); });
  j["q"] = str_or_null(rec.reduced, [](const ReducedCubic& rc) { return render_complex(rc.q); });
  j["shift"] = str_or_null(rec.shift, [](Complex z) { return render_complex(z); });
  if (rec.roots) {
    Json roots = Json::array();
    for (const auto& z : *rec.roots) roots.push_back(render_complex(z));
    j["roots"] = roots;
  } else {
    j["roots"] = nullptr;
  }
  j["residuals"] = rec.residuals ? Json(*rec.residuals) : Json(nullptr);
  if (rec.decomposition) {
    const auto& d = *rec.decomposition;
    j["decomposition"] = {{"r", render_complex(d.r)},
                          {"s", render_complex(d.s)},
                          {"alpha", render_complex(d.alpha)},
                          {"beta", render_complex(d.beta)}};
  } else {
    j["decomposition"] = nullptr;
  }
  j["error"] = rec.error ? Json(*rec.error) : Json(nullptr);
  return j;
}

inline constexpr std::string_view kSolveCsvHeader =
    "line,input,classification,p,q,shift,root1,root2,root3,residual1,residual2,residual3,"
    "r,s,alpha,beta,error";

inline std::string to_csv_row(const SolveRecord& rec) {
  std::vector<std::string> cols;
  cols.push_back(std::to_string(rec.line));
  cols.push_back(detail::join(rec.input, ";"));
  cols.push_back(rec.classification ? std::string(to_string(*rec.classification)) : "");
  cols.push_back(rec.reduced ? render_complex(rec.reduced->p) : "");
  cols.push_back(rec.reduced ? render_complex(rec.reduced->q) : "");
  cols.push_back(rec.shift ? render_complex(*rec.shift) : "");
  for (std::size_t k = 0; k < 3; ++k) cols.push_back(rec.roots ? render_complex((*rec.roots)[k]) : "");
  for (std::size_t k = 0; k < 3; ++k) cols.push_back(rec.residuals ? render_real((*rec.residuals)[k]) : "");
  const auto* d = rec.decomposition ? &*rec.decomposition : nullptr;
  cols.push_back(d ? render_complex(d->r) : "");
  cols.push_back(d ? render_complex(d->s) : "");
  cols.push_back(d ? render_complex(d->alpha) : "");
  cols.push_back(d ? render_complex(d->beta) : "");
  cols.push_back(rec.error.value_or(""));
  for (auto& c : cols) c = detail::csv_field(c);
  return detail::join(cols, ",");
}

inline void write_text(std::ostream& out, const SolveRecord& rec) {
  if (rec.error) {
    out << "error: " << *rec.error << '\n';
    return;
  }
  out << "classification: " << to_string(*rec.classification) << '\n';
  if (rec.general_input) {
    out << "p: " << render_complex(rec.reduced->p) << '\n';
    out << "q: " << render_complex(rec.reduced->q) << '\n';
    out << "shift: " << render_complex(*rec.shift) << '\n';
  }
  for (std::size_t k = 0; k < 3; ++k) {
    out << "root " << k + 1 << ": " << render_complex((*rec.roots)[k])
        << "  residual: " << render_real((*rec.residuals)[k]) << '\n';
  }
  if (rec.decomposition) {
    const auto& d = *rec.decomposition;
    out << "decomposition: r=" << render_complex(d.r) << " s=" << render_complex(d.s)
        << " alpha=" << render_complex(d.alpha) << " beta=" << render_complex(d.beta) << '\n';
  }
}

/// "f(x) = (alpha)*(x-(r))^3 + (beta)*(x-(s))^3" with the values filled in.
inline std::string identity_string(const Decomposition& d) {
  return "f(x) = (" + render_complex(d.alpha) + ")*(x-(" + render_complex(d.r) + "))^3 + (" +
         render_complex(d.beta) + ")*(x-(" + render_complex(d.s) + "))^3";
}

/// Solves one cubic per line of `in` (CSV A,B,C,D; '#' comments and blank
/// lines skipped). Records come out in input order; per-line failures are
/// embedded in the record. Returns 0.
inline int run_batch(std::istream& in, Format format, const SolveOptions& opts, std::ostream& out) {
  std::string raw;
  int line = 0;
  bool header_written = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = detail::trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const SolveRecord rec = solve_csv_line(text, line, opts);
    switch (format) {
      case Format::Jsonl:
        out << to_json(rec).dump() << '\n';
        break;
      case Format::Csv:
        if (!header_written) {
          out << kSolveCsvHeader << '\n';
          header_written = true;
        }
        out << to_csv_row(rec) << '\n';
        break;
      case Format::Text:
        out << "line " << rec.line << '\n';
        write_text(out, rec);
        break;
    }
  }
  return kExitOk;
}

inline int run_batch(const std::string& path, Format format, const SolveOptions& opts,
                     std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read input file '" << path << "'\n";
    return kExitUsage;
  }
  return run_batch(in, format, opts, out);
}

namespace detail {

inline int run_solve(const CliRequest& req, std::ostream& out, std::ostream& err) {
  if (const auto* file = std::get_if<InputFile>(&req.source)) {
    return run_batch(file->path, req.format, req.solve, out, err);
  }
  const SolveRecord rec = solve_problem(prepare(req.source), req.solve, 1);
  switch (req.format) {
    case Format::Jsonl:
      out << to_json(rec).dump() << '\n';
      break;
    case Format::Csv:
      out << kSolveCsvHeader << '\n' << to_csv_row(rec) << '\n';
      break;
    case Format::Text:
      write_text(out, rec);
      break;
  }
  return kExitOk;
}

inline int run_reduce(const CliRequest& req, std::ostream& out) {
  const Problem problem = prepare(req.source);
  const std::string p = render_complex(problem.reduced.p);
  const std::string q = render_complex(problem.reduced.q);
  const std::string shift = render_complex(problem.shift);
  switch (req.format) {
    case Format::Jsonl:
      out << Json{{"p", p}, {"q", q}, {"shift", shift}}.dump() << '\n';
      break;
    case Format::Csv:
      out << "p,q,shift\n" << p << ',' << q << ',' << shift << '\n';
      break;
    case Format::Text:
      out << "p: " << p << "\nq: " << q << "\nshift: " << shift << '\n';
      break;
  }
  return kExitOk;
}

inline int run_decompose(const CliRequest& req, std::ostream& out) {
  const Problem problem = prepare(req.source);
  const Classification cls = classify(problem.reduced, req.solve.eps_class);
  if (cls.tag != CaseTag::Generic) throw NotGeneric(cls.tag);
  const Decomposition d = decompose(resolvent(problem.reduced));

  const std::string p = render_complex(problem.reduced.p);
  const std::string q = render_complex(problem.reduced.q);
  const std::string shift = render_complex(problem.shift);
  const std::string identity = identity_string(d);
  switch (req.format) {
    case Format::Jsonl:
      out << Json{{"p", p},
                  {"q", q},
                  {"shift", shift},
                  {"r", render_complex(d.r)},
                  {"s", render_complex(d.s)},
                  {"alpha", render_complex(d.alpha)},
                  {"beta", render_complex(d.beta)},
                  {"identity", identity}}
                 .dump()
          << '\n';
      break;
    case Format::Csv:
      out << "p,q,shift,r,s,alpha,beta,identity\n"
          << p << ',' << q << ',' << shift << ',' << render_complex(d.r) << ','
          << render_complex(d.s) << ',' << render_complex(d.alpha) << ','
          << render_complex(d.beta) << ',' << csv_field(identity) << '\n';
      break;
    case Format::Text:
      if (problem.general) out << "p: " << p << "\nq: " << q << "\nshift: " << shift << '\n';
      out << "r: " << render_complex(d.r) << '\n'
          << "s: " << render_complex(d.s) << '\n'
          << "alpha: " << render_complex(d.alpha) << '\n'
          << "beta: " << render_complex(d.beta) << '\n'
          << "identity: " << identity << '\n';
      break;
  }
  return kExitOk;
}

inline int run_check(const CliRequest& req, std::ostream& out) {
  const Problem problem = prepare(req.source);
  if (req.check_roots.empty() || req.check_roots.size() > 3) {
    throw InvalidInput("check needs between 1 and 3 roots via --roots");
  }
  for (const auto& z : req.check_roots) require_finite(z, "root");

  std::vector<double> residuals;
  for (const auto& z : req.check_roots) {
    residuals.push_back(problem.general ? residual(z, *problem.general) : residual(z, problem.reduced));
  }
  const bool pass = std::all_of(residuals.begin(), residuals.end(), [&](double r) { return r <= req.tol; });

  std::optional<double> oracle_distance;
  if (req.check_roots.size() == 3) {
    const auto coeffs = problem.general ? oracle::from_general(*problem.general)
                                        : oracle::from_reduced(problem.reduced);
    const auto reference = oracle::iterate_all_roots(coeffs);
    const std::array<Complex, 3> given{req.check_roots[0], req.check_roots[1], req.check_roots[2]};
    oracle_distance = oracle::match_roots(given, reference).max_distance;
  }

  switch (req.format) {
    case Format::Jsonl: {
      Json roots = Json::array();
      for (const auto& z : req.check_roots) roots.push_back(render_complex(z));
      out << Json{{"roots", roots},
                  {"residuals", residuals},
                  {"oracle_distance", oracle_distance ? Json(*oracle_distance) : Json(nullptr)},
                  {"tol", req.tol},
                  {"pass", pass}}
                 .dump()
          << '\n';
      break;
    }
    case Format::Csv:
      out << "root,residual\n";
      for (std::size_t k = 0; k < residuals.size(); ++k) {
        out << render_complex(req.check_roots[k]) << ',' << render_real(residuals[k]) << '\n';
      }
      break;
    case Format::Text:
      for (std::size_t k = 0; k < residuals.size(); ++k) {
        out << "root " << k + 1 << ": " << render_complex(req.check_roots[k])
            << "  residual: " << render_real(residuals[k]) << '\n';
      }
      if (oracle_distance) out << "oracle distance: " << render_real(*oracle_distance) << '\n';
      break;
  }
  if (req.format != Format::Jsonl) {
    out << (pass ? "PASS" : "FAIL") << " (tol " << render_real(req.tol) << ")\n";
  }
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace detail

inline int run(const CliRequest& req, std::ostream& out, std::ostream& err) {
  try {
    switch (req.command) {
      case Command::Solve:
        return detail::run_solve(req, out, err);
      case Command::Reduce:
        return detail::run_reduce(req, out);
      case Command::Decompose:
        return detail::run_decompose(req, out);
      case Command::Check:
        return detail::run_check(req, out);
    }
  } catch (const DegenerateLeadingCoefficient& e) {
    err << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

namespace detail {

struct RawArgs {
  std::string coeffs;
  std::string reduced;
  std::string input;
  std::string format = "text";
  std::string roots;
  double eps_class = kDefaultEpsClass;
  int polish = 2;
  double tol = 1e-8;
};

inline CliRequest build_request(Command command, const RawArgs& raw) {
  CliRequest req;
  req.command = command;

  const int sources = int(!raw.coeffs.empty()) + int(!raw.reduced.empty()) + int(!raw.input.empty());
  if (sources != 1) {
    throw InvalidInput("exactly one of --coeffs, --reduced or --input is required");
  }
  if (!raw.coeffs.empty()) {
    CoefficientQuad quad;
    const auto fields = split_fields(raw.coeffs);
    const auto values = parse_list(raw.coeffs, 4, "--coeffs");
    for (std::size_t i = 0; i < 4; ++i) {
      quad.text[i] = fields[i];
      quad.values[i] = values[i];
    }
    req.source = quad;
  } else if (!raw.reduced.empty()) {
    ReducedPair pair;
    const auto fields = split_fields(raw.reduced);
    const auto values = parse_list(raw.reduced, 2, "--reduced");
    pair.text = {fields[0], fields[1]};
    pair.cubic = {values[0], values[1]};
    req.source = pair;
  } else {
    if (command != Command::Solve) throw InvalidInput("--input is only accepted by 'solve'");
    req.source = InputFile{raw.input};
  }

  if (raw.format == "text") {
    req.format = Format::Text;
  } else if (raw.format == "jsonl") {
    req.format = Format::Jsonl;
  } else if (raw.format == "csv") {
    req.format = Format::Csv;
  } else {
    throw InvalidInput("--format must be one of text, jsonl, csv");
  }

  req.solve = {raw.eps_class, raw.polish};
  validate(req.solve);
  if (!(raw.tol > 0.0) || !std::isfinite(raw.tol)) throw InvalidInput("--tol must be positive");
  req.tol = raw.tol;

  if (command == Command::Check) {
    if (raw.roots.empty()) throw InvalidInput("check requires --roots");
    req.check_roots = parse_list(raw.roots, 0, "--roots");
  }
  return req;
}

}  // namespace detail

/// Parses argv and runs the request.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve cubic equations through Sylvester's sum of two cubes", "sylvester"};
  app.require_subcommand(1, 1);

  detail::RawArgs raw;
  const auto add_common = [&raw](CLI::App* sub, bool with_input) {
    sub->add_option("--coeffs", raw.coeffs, "A,B,C,D for A x^3 + B x^2 + C x + D (complex literals allowed)");
    sub->add_option("--reduced", raw.reduced, "p,q for x^3 - 3 p x + q");
    if (with_input) sub->add_option("--input", raw.input, "file with one A,B,C,D cubic per line");
    sub->add_option("--format", raw.format, "text, jsonl or csv")->capture_default_str();
    sub->add_option("--eps-class", raw.eps_class, "relative band for the case split")->capture_default_str();
    sub->add_option("--polish", raw.polish, "Newton polish steps per root, 0..8")->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "all three roots with classification and residuals");
  add_common(solve, true);
  auto* decompose_cmd = app.add_subcommand("decompose", "resolvent roots and the two-cube weights");
  add_common(decompose_cmd, false);
  auto* reduce = app.add_subcommand("reduce", "depressed form p, q and the shift");
  add_common(reduce, false);
  auto* check = app.add_subcommand("check", "residuals of candidate roots");
  add_common(check, false);
  check->add_option("--roots", raw.roots, "comma-separated candidate roots");
  check->add_option("--tol", raw.tol, "residual threshold")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Command command = Command::Solve;
  if (decompose_cmd->parsed()) command = Command::Decompose;
  if (reduce->parsed()) command = Command::Reduce;
  if (check->parsed()) command = Command::Check;

  CliRequest req;
  try {
    req = detail::build_request(command, raw);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return run(req, out, err);
}

}  // namespace sylvester::cli
