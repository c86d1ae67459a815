#include "numevent/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "numevent/bell.hpp"
#include "numevent/concrete_logic.hpp"
#include "numevent/embeddability.hpp"
#include "numevent/error.hpp"
#include "numevent/format.hpp"
#include "numevent/io.hpp"

namespace numevent::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  Json report;
  int code;
};

Json number(double v) {
  if (v == 0.0) return 0;
  if (std::abs(v) < 1e15 && std::floor(v) == v) return static_cast<std::int64_t>(v);
  return v;
}

Json values_json(const Event& e) {
  Json a = Json::array();
  for (double v : e.values()) a.push_back(number(v));
  return a;
}

Json coefficients_json(const SetFunction& f) {
  Json a = Json::array();
  for (double v : f.values()) a.push_back(number(v));
  return a;
}

std::string render_number(const Json& j) {
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  return format_real(j.get<double>());
}

std::string render_values(const Json& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += render_number(values[i]);
  }
  return s + ")";
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 1, 1, "cannot open file");
  return in;
}

// ---------------------------------------------------------------------------
// classify

Outcome cmd_classify(const RunConfig& cfg) {
  auto in = open_input(cfg.input_path);
  const EventFamily family = read_events_csv(in, cfg.input_path);

  Json r;
  r["command"] = "classify";
  r["eps"] = cfg.eps;
  r["states"] = family.space()->labels();
  r["events"] = family.names();

  EmbeddingReport report;
  try {
    report = classify_embedding(family);
  } catch (const ImproperEventError& e) {
    report.verdict = Verdict::kNotEmbeddable;
    report.reasons.push_back(e.what());
    report.witnesses.push_back({e.name(), e.event()});
  }
  r["verdict"] = to_string(report.verdict);
  r["container"] = report.container ? Json(to_string(*report.container)) : Json(nullptr);
  r["reasons"] = report.reasons;
  Json w = Json::array();
  for (const auto& le : report.witnesses) w.push_back({{"label", le.label}, {"values", values_json(le.event)}});
  r["witnesses"] = std::move(w);

  int code = kUndecided;
  if (report.verdict == Verdict::kEmbeddable) code = kOk;
  if (report.verdict == Verdict::kNotEmbeddable) code = kNegative;
  r["exit_code"] = code;
  return {std::move(r), code};
}

void render_eps(const Json& r, std::ostream& out) {
  out << "eps: " << format_real(r["eps"].get<double>()) << '\n';
}

void render_classify(const Json& r, std::ostream& out) {
  render_eps(r, out);
  out << "verdict: " << r["verdict"].get<std::string>() << '\n';
  out << "container: " << (r["container"].is_null() ? "none" : r["container"].get<std::string>()) << '\n';
  for (const auto& reason : r["reasons"]) out << "reason: " << reason.get<std::string>() << '\n';
  for (const auto& w : r["witnesses"]) {
    out << "witness " << w["label"].get<std::string>() << ": " << render_values(w["values"]) << '\n';
  }
}

// ---------------------------------------------------------------------------
// boolean

Outcome cmd_boolean(const RunConfig& cfg) {
  auto in = open_input(cfg.input_path);
  const LogicInput input = read_logic_json(in, cfg.input_path);
  const ConcreteLogic logic(input.logic);

  std::vector<Event> members;
  std::vector<std::string> names;
  for (std::size_t idx : input.family) {
    members.push_back(logic[idx]);
    names.push_back("p" + std::to_string(names.size() + 1));
  }
  const EventFamily family(std::move(members), std::move(names));
  const BooleanVerdict verdict = boolean_by_minima(logic, family);

  Json r;
  r["command"] = "boolean";
  r["eps"] = cfg.eps;
  r["states"] = input.space->labels();
  r["logic_size"] = logic.size();
  r["family"] = input.family;
  r["verdict"] = verdict.boolean ? "BOOLEAN" : "NOT_BOOLEAN";
  r["missing_minimum"] = verdict.missing_minimum ? Json(verdict.missing_minimum->to_string()) : Json(nullptr);

  Json witnesses = Json::array();
  Json relations = Json::array();
  if (verdict.witnesses) {
    for (const auto& [name, event] : verdict.witnesses->witnesses) {
      witnesses.push_back({{"name", name}, {"values", values_json(event)}, {"in_logic", logic.contains(event)}});
    }
    for (const auto& rel : verdict.witnesses->relations) {
      const bool holds = is_commute_witness(verdict.witnesses->at(rel.witness), verdict.minima->at(rel.f),
                                            verdict.minima->at(rel.g));
      relations.push_back({{"witness", rel.witness},
                           {"f", "p" + rel.f.to_string()},
                           {"g", "p" + rel.g.to_string()},
                           {"holds", holds}});
    }
  }
  r["witnesses"] = std::move(witnesses);
  r["relations"] = std::move(relations);

  Json oracle;
  try {
    const OracleResult res = boolean_oracle(logic, family, {cfg.budget, 4096});
    oracle["verdict"] = res.boolean ? "BOOLEAN" : "NOT_BOOLEAN";
    Json atoms = Json::array();
    for (const auto& a : res.atoms) atoms.push_back(values_json(a));
    oracle["atoms"] = std::move(atoms);
    oracle["nodes"] = res.nodes;
  } catch (const BudgetExceeded& e) {
    oracle["verdict"] = nullptr;
    oracle["error"] = e.what();
  }
  r["oracle"] = std::move(oracle);

  const int code = verdict.boolean ? kOk : kNegative;
  r["exit_code"] = code;
  return {std::move(r), code};
}

void render_boolean(const Json& r, std::ostream& out) {
  render_eps(r, out);
  out << "logic: " << r["logic_size"].get<std::size_t>() << " members over " << r["states"].size()
      << " states\n";
  out << "family:";
  for (const auto& i : r["family"]) out << ' ' << i.get<std::size_t>();
  out << '\n';
  out << "verdict: " << r["verdict"].get<std::string>() << '\n';
  if (!r["missing_minimum"].is_null()) {
    out << "missing minimum: " << r["missing_minimum"].get<std::string>() << '\n';
  }
  for (const auto& w : r["witnesses"]) {
    out << "witness " << w["name"].get<std::string>() << ": " << render_values(w["values"])
        << (w["in_logic"].get<bool>() ? "" : " (not in logic)") << '\n';
  }
  for (const auto& rel : r["relations"]) {
    out << "relation " << rel["f"].get<std::string>() << " C(" << rel["witness"].get<std::string>() << ") "
        << rel["g"].get<std::string>() << ": " << (rel["holds"].get<bool>() ? "holds" : "FAILS") << '\n';
  }
  const auto& o = r["oracle"];
  if (o["verdict"].is_null()) {
    out << "oracle: " << o["error"].get<std::string>() << '\n';
  } else {
    const auto nodes = o["nodes"].get<std::size_t>();
    out << "oracle: " << o["verdict"].get<std::string>() << " (" << nodes << (nodes == 1 ? " node" : " nodes");
    if (!o["atoms"].empty()) out << ", " << o["atoms"].size() << " atoms";
    out << ")\n";
  }
}

// ---------------------------------------------------------------------------
// bell

struct BellFlags {
  bool all_valuations = false;
  bool pairs_only = false;
  bool override_cap = false;
};

Outcome cmd_bell(const RunConfig& cfg, const BellFlags& flags) {
  if (flags.all_valuations && flags.pairs_only) {
    throw Error("--all-valuations and --pairs-only are mutually exclusive");
  }
  auto in = open_input(cfg.input_path);
  const CorrelationTable table = read_correlation_csv(in, cfg.input_path);
  const int n = table.n();
  const bool has_rows = n >= 2 && n <= 4;

  std::string mode = "default";
  std::vector<InequalityResult> results;
  if (flags.all_valuations) {
    mode = "all-valuations";
    const auto absent = table.missing();
    if (!absent.empty()) {
      std::string list;
      for (const auto& a : absent) list += (list.empty() ? "" : ", ") + a.to_string();
      throw Error("missing correlation entries: " + list);
    }
    results = evaluate_inequalities(enumerate_01_valuations(n, {flags.override_cap}), table);
  } else if (flags.pairs_only) {
    mode = "pairs-only";
    results = check_bell_like(table);
  } else {
    if (has_rows) results = check_bell_like(table);
    // for n = 2 the sum over all elementary valuations is the pair row itself
    if (n != 2) results.push_back(evaluate_inequality(sum_all_elementary(n), table));
  }

  Json r;
  r["command"] = "bell";
  r["eps"] = cfg.eps;
  r["n"] = n;
  r["states"] = table.space()->labels();
  r["mode"] = mode;
  Json rows = Json::array();
  std::size_t violations = 0;
  for (const auto& res : results) {
    violations += res.violated ? 1 : 0;
    rows.push_back({{"inequality", res.label},
                    {"coefficients", coefficients_json(res.coefficients)},
                    {"min", number(res.min_value)},
                    {"max", number(res.max_value)},
                    {"violated", res.violated},
                    {"violating_state", res.violating_state ? Json(*res.violating_state) : Json(nullptr)}});
  }
  r["rows"] = std::move(rows);
  r["violations"] = violations;
  r["verdict"] = violations ? "VIOLATION" : "NO_VIOLATION";
  const int code = violations ? kNegative : kOk;
  r["exit_code"] = code;
  return {std::move(r), code};
}

void render_bell(const Json& r, std::ostream& out) {
  render_eps(r, out);
  out << "n: " << r["n"].get<int>() << "  states: " << r["states"].size()
      << "  mode: " << r["mode"].get<std::string>() << '\n';
  std::size_t k = 0;
  for (const auto& row : r["rows"]) {
    ++k;
    out << '[' << k << "] 0 <= " << row["inequality"].get<std::string>() << " <= 1  min "
        << render_number(row["min"]) << "  max " << render_number(row["max"]) << "  ";
    if (row["violated"].get<bool>()) {
      out << "VIOLATED at " << row["violating_state"].get<std::string>();
    } else {
      out << "ok";
    }
    out << '\n';
  }
  const auto v = r["violations"].get<std::size_t>();
  if (v) {
    out << "verdict: VIOLATION (" << v << " of " << r["rows"].size()
        << " inequalities violated; the system is not classical)\n";
  } else {
    const auto rows = r["rows"].size();
    out << "verdict: NO_VIOLATION (" << rows << (rows == 1 ? " inequality holds" : " inequalities hold")
        << "; no obstruction to classicality found)\n";
  }
}

// ---------------------------------------------------------------------------
// enumerate (streamed: the listing can be large)

int cmd_enumerate(const RunConfig& cfg, int n, bool override_cap, std::ostream& out) {
  const EnumerationOptions opts{override_cap};
  // Validate before writing anything.
  for_each_01_valuation(n, opts, [](const SetFunction&) { return false; });
  const std::uint64_t count = count_01_valuations(n);
  const bool json = cfg.output_format == OutputFormat::kJson;
  if (json) {
    out << "{\"command\":\"enumerate\",\"n\":" << n << ",\"count\":" << count << ",\"valuations\":[";
  } else {
    out << count << '\n';
  }
  bool first = true;
  for_each_01_valuation(n, opts, [&](const SetFunction& f) {
    if (json) out << (first ? "" : ",") << '[';
    bool first_value = true;
    for (double v : f.values()) {
      if (!first_value) out << (json ? "," : " ");
      out << render_number(number(v));
      first_value = false;
    }
    out << (json ? "]" : "\n");
    first = false;
    return true;
  });
  if (json) out << "],\"exit_code\":0}\n";
  return kOk;
}

std::optional<double> eps_from_env() {
  const char* raw = std::getenv("NUMEVENT_EPS");
  if (!raw || !*raw) return std::nullopt;
  const std::string text(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error("NUMEVENT_EPS is not a number: '" + text + "'");
  }
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classicality checks for numerical events", "numevent"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::optional<double> eps_flag;
  std::string format = "text";
  app.add_option("--eps", eps_flag, "Comparison tolerance (overrides NUMEVENT_EPS)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", cfg.budget, "Node budget of the Boolean search oracle")
      ->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Embeddability of measured events (events CSV)");
  classify->add_option("input", cfg.input_path, "Events CSV")->required();

  auto* boolean = app.add_subcommand("boolean", "Minima criterion inside a concrete logic (logic JSON)");
  boolean->add_option("input", cfg.input_path, "Concrete-logic JSON")->required();

  BellFlags bell_flags;
  auto* bell = app.add_subcommand("bell", "Bell-type inequalities on a correlation table (correlation CSV)");
  bell->add_option("input", cfg.input_path, "Correlation CSV")->required();
  bell->add_flag("--all-valuations", bell_flags.all_valuations, "Check every 0/1 Bell valuation");
  bell->add_flag("--pairs-only", bell_flags.pairs_only, "Check only the Bell-like pair inequalities");
  bell->add_flag("--override-enumeration-cap", bell_flags.override_cap, "Allow n = 5 enumeration");

  int enum_n = 0;
  bool enum_override = false;
  auto* enumerate = app.add_subcommand("enumerate", "List every non-zero 0/1 Bell valuation");
  enumerate->add_option("n", enum_n, "Ground set size")->required();
  enumerate->add_flag("--override-enumeration-cap", enum_override, "Allow n = 5");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (const auto env = eps_from_env()) cfg.eps = *env;
    if (eps_flag) cfg.eps = *eps_flag;
    ScopedEps scoped(cfg.eps);
    cfg.output_format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;

    if (enumerate->parsed()) {
      cfg.mode = "enumerate";
      return cmd_enumerate(cfg, enum_n, enum_override, out);
    }

    Outcome outcome;
    void (*render)(const Json&, std::ostream&) = nullptr;
    if (classify->parsed()) {
      cfg.mode = "classify";
      outcome = cmd_classify(cfg);
      render = render_classify;
    } else if (boolean->parsed()) {
      cfg.mode = "boolean";
      outcome = cmd_boolean(cfg);
      render = render_boolean;
    } else {
      cfg.mode = "bell";
      outcome = cmd_bell(cfg, bell_flags);
      render = render_bell;
    }
    if (cfg.output_format == OutputFormat::kJson) {
      out << outcome.report.dump(2) << '\n';
    } else {
      render(outcome.report, out);
    }
    return outcome.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace numevent::cli
