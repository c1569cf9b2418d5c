// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <ostream>
#include <sstream>

#include "knotforge/cache.hpp"
#include "knotforge/completion.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/error.hpp"
#include "knotforge/holonomy.hpp"
#include "knotforge/serialize.hpp"
#include "knotforge/statesum.hpp"
#include "knotforge/version.hpp"

namespace knotforge::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string knot;
  std::string format = "text";
  std::string engine = "dp";
  bool no_cache = false;
  int r = 1;
  int n = 0;
  int bound = 0;
  int m = 1;
  bool m_given = false;
  std::string alexander_file;
  std::string recurrence_file;
  int n_max = -1;
  int deg_q = -1;
  int deg_e = -1;
  int max_deg_q = 8;
  int max_deg_e = 3;
  int max_qdeg = 48;
  std::vector<int> roots;
};

struct Output {
  std::string text;
  int code = kOk;
};

bool json_out(const Options& o) { return o.format == "json"; }

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError(std::string(what) + " '" + path + "': file not found");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json read_json(const std::string& path, const char* what) {
  const Json j = Json::parse(read_file(path, what), nullptr, false);
  if (j.is_discarded()) throw ValidationError(std::string(what) + " '" + path + "' is not valid JSON");
  return j;
}

TangleDiagram load_knot(const std::string& source) {
  std::error_code ec;
  if (fs::is_regular_file(source, ec)) return parse_tangle(read_file(source, "knot file"));
  if (is_corpus_name(source)) return corpus_diagram(source);
  std::string bundled;
  for (const auto& name : corpus_names()) bundled += (bundled.empty() ? "" : ", ") + name;
  throw ArgumentError("knot '" + source + "': file not found and not a bundled diagram (" +
                      bundled + ")");
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

/// Framing annotation for values that omit the prefactor.
std::string framing_note(int f) {
  if (f == 0) return "";
  return "× q^{" + std::to_string(f) + "·α²/2}\n";
}

std::string verdict(bool holds) { return holds ? "holds" : "fails"; }

// ------------------------------------------------------------------ commands

Output cmd_ado(const TangleDiagram& d, const Options& o) {
  const AdoResult a = ado(d, o.r, parse_engine(o.engine));
  if (json_out(o))
    return {dump(result_json({d.name(), "ado", {{"r", o.r}}, a.framing, std::nullopt},
                             to_json(a.value)))};
  return {a.value.to_string() + "\n" + framing_note(a.framing)};
}

Output cmd_jones(const TangleDiagram& d, const Options& o) {
  const JonesValue j = jones(d, o.n, parse_engine(o.engine));
  if (json_out(o))
    return {dump(result_json({d.name(), "jones", {{"n", o.n}}, d.framing(), std::nullopt},
                             to_json(j.value)))};
  return {j.value.to_string() + "\n"};
}

Output cmd_unified(const TangleDiagram& d, const Options& o) {
  const TruncatedUnified u = unified_truncated(d, o.bound, parse_engine(o.engine));
  if (json_out(o))
    return {dump(result_json({d.name(), "unified", {{"B", o.bound}}, u.framing, u.certified_order},
                             to_json(u.value)))};
  return {u.value.to_string() + "\n" + framing_note(u.framing) + "mod I_" +
          std::to_string(u.certified_order) + "\n"};
}

Output cmd_cseries(const TangleDiagram& d, const Options& o) {
  const CycSeries s = c_series(d, o.r, o.m, parse_engine(o.engine));
  if (json_out(o))
    return {dump(result_json({d.name(), "cseries", {{"r", o.r}, {"m", o.m}}, d.framing(), std::nullopt},
                             to_json(s)))};
  return {s.value().to_string() + "\nmod {" + std::to_string(o.r) + "α}^" + std::to_string(o.m) +
          "\n"};
}

Output cmd_alexander(const TangleDiagram& d, const Options& o) {
  const int m = o.m_given ? o.m : alexander_min_precision(d);
  const AlexanderPoly a = alexander_from_diagram(d, m);
  if (json_out(o))
    return {dump(result_json({d.name(), "alexander", {{"m", m}}, d.framing(), std::nullopt},
                             to_json(a)))};
  return {a.to_string() + "\n"};
}

Output cmd_verify_factorization(const TangleDiagram& d, const Options& o) {
  if (!o.m_given) throw ArgumentError("verify-factorization: --m is required");
  if (o.m > (o.bound + 1) / o.r)
    throw ArgumentError("verify-factorization: precision m = " + std::to_string(o.m) +
                        " exceeds floor((B + 1) / r) = " + std::to_string((o.bound + 1) / o.r));
  const FactorizationReport rep =
      o.alexander_file.empty()
          ? verify_factorization(d, o.r, o.bound, o.m)
          : verify_factorization(d, o.r, o.bound, o.m,
                                 alexander_from_json(read_json(o.alexander_file, "alexander file")));
  const int code = rep.holds ? kOk : kVerificationFailed;
  if (json_out(o))
    return {dump(result_json({d.name(), "verify-factorization",
                              {{"r", o.r}, {"B", o.bound}, {"m", o.m}}, d.framing(), std::nullopt},
                             to_json(rep))),
            code};
  std::string text = verdict(rep.holds) + "\n";
  if (!rep.holds) text += "witness: " + rep.witness.to_string() + "\n";
  return {text, code};
}

Output cmd_verify_jones(const TangleDiagram& d, const Options& o) {
  const ConsistencyReport rep = verify_jones_ado_consistency(d, o.r, o.n);
  const int code = rep.holds ? kOk : kVerificationFailed;
  if (json_out(o))
    return {dump(result_json({d.name(), "verify-jones", {{"r", o.r}, {"n", o.n}}, d.framing(),
                              std::nullopt},
                             to_json(rep))),
            code};
  std::string text = verdict(rep.holds) + "\n";
  if (!rep.holds)
    text += "ado: " + rep.ado_value.to_string() + "\njones: " + rep.jones_value.to_string() + "\n";
  return {text, code};
}

Output cmd_fit_recurrence(const TangleDiagram& d, const Options& o) {
  const int n_max = o.n_max < 0 ? 8 : o.n_max;
  if ((o.deg_q < 0) != (o.deg_e < 0))
    throw ArgumentError("fit-recurrence: give both --degQ and --degE, or neither to search");
  const JonesSequence s = jones_sequence(d, 0, n_max, parse_engine(o.engine));
  std::optional<RecurrenceFit> fit;
  if (o.deg_q >= 0) {
    if (auto p = fit_recurrence(s, o.deg_q, o.deg_e, o.max_qdeg))
      fit = RecurrenceFit{o.deg_q, o.deg_e, *p};
  } else {
    fit = search_recurrence(s, o.max_deg_q, o.max_deg_e, o.max_qdeg);
  }
  Json params = {{"n_max", n_max}, {"max_qdeg", o.max_qdeg}};
  if (o.deg_q >= 0) {
    params["degQ"] = o.deg_q;
    params["degE"] = o.deg_e;
  } else {
    params["max_degQ"] = o.max_deg_q;
    params["max_degE"] = o.max_deg_e;
  }
  if (!fit) {
    if (json_out(o))
      return {dump(result_json({d.name(), "fit-recurrence", params, d.framing(), std::nullopt},
                               "underdetermined")),
              kVerificationFailed};
    return {"underdetermined\n", kVerificationFailed};
  }
  if (json_out(o)) {
    Json value = to_json(fit->poly);
    value["degQ"] = fit->deg_q;
    value["degE"] = fit->deg_e;
    return {dump(result_json({d.name(), "fit-recurrence", params, d.framing(), std::nullopt}, value))};
  }
  return {fit->poly.to_string() + "\ndegQ = " + std::to_string(fit->deg_q) +
          ", degE = " + std::to_string(fit->deg_e) + "\n"};
}

Output cmd_check_recurrence(const TangleDiagram& d, const Options& o) {
  if (o.recurrence_file.empty()) throw ArgumentError("check-recurrence: --recurrence is required");
  Json j = read_json(o.recurrence_file, "recurrence file");
  // Accept the output of fit-recurrence as well as a bare recurrence.
  if (j.is_object() && j.contains("value") && j["value"].is_object()) j = j["value"];
  const RecurrencePoly p = recurrence_from_json(j);
  const int n_max = o.n_max < 0 ? 12 : o.n_max;
  if (n_max < p.degree_e())
    throw ArgumentError("check-recurrence: --n-max must be >= the E-degree " +
                        std::to_string(p.degree_e()));
  for (int r : o.roots)
    if (r < 1) throw ArgumentError("check-recurrence: roots must be >= 1");
  if (!o.roots.empty() && d.framing() != 0)
    throw ScopeError("check-recurrence: ADO annihilation needs a 0-framed diagram, got framing " +
                     std::to_string(d.framing()));

  const JonesSequence s = jones_sequence(d, 0, n_max, parse_engine(o.engine));
  std::vector<int> bad_n;
  for (int n = 0; n + p.degree_e() <= n_max; ++n)
    if (!apply_to_sequence(p, s, n).is_zero()) bad_n.push_back(n);
  std::vector<int> bad_r;
  for (int r : o.roots)
    if (!apply_to_ado(p, ado(d, r, parse_engine(o.engine))).is_zero()) bad_r.push_back(r);
  const bool holds = bad_n.empty() && bad_r.empty();
  const int code = holds ? kOk : kVerificationFailed;
  if (json_out(o)) {
    const Json value = {{"holds", holds}, {"failing_n", bad_n}, {"failing_r", bad_r}};
    return {dump(result_json({d.name(), "check-recurrence", {{"n_max", n_max}, {"r", o.roots}},
                              d.framing(), std::nullopt},
                             value)),
            code};
  }
  std::string text = verdict(holds) + "\n";
  for (int n : bad_n) text += "nonzero at n = " + std::to_string(n) + "\n";
  for (int r : bad_r) text += "nonzero on ado at r = " + std::to_string(r) + "\n";
  return {text, code};
}

Output cmd_validate(const TangleDiagram& d, const Options& o) {
  if (json_out(o)) {
    const Json value = {{"slices", d.slices().size()},
                        {"crossings", d.crossing_count()},
                        {"cups_caps", d.cupcap_count()},
                        {"seifert_circles", d.seifert_circles()},
                        {"max_width", d.max_width()},
                        {"canonical", d.canonical_text()}};
    return {dump(result_json({d.name(), "validate", Json::object(), d.framing(), std::nullopt}, value))};
  }
  std::ostringstream text;
  text << "valid tangle " << d.name() << "\n"
       << "crossings: " << d.crossing_count() << "\n"
       << "cups and caps: " << d.cupcap_count() << "\n"
       << "framing: " << d.framing() << "\n"
       << "seifert circles: " << d.seifert_circles() << "\n"
       << "max width: " << d.max_width() << "\n";
  return {text.str()};
}

struct Command {
  const char* name;
  const char* help;
  bool cached;
  Output (*handler)(const TangleDiagram&, const Options&);
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"ado", "ADO invariant at the 2r-th root of unity", true, cmd_ado},
      {"jones", "colored Jones polynomial J_n(q^2)", true, cmd_jones},
      {"unified", "truncated unified invariant", true, cmd_unified},
      {"cseries", "quotient series at the 2r-th root of unity", true, cmd_cseries},
      {"alexander", "Alexander polynomial recovered from the series at r = 1", true,
       cmd_alexander},
      {"verify-factorization", "check the factorization at a root of unity", true,
       cmd_verify_factorization},
      {"verify-jones", "compare ado and jones at a root of unity", true, cmd_verify_jones},
      {"fit-recurrence", "fit a recurrence to the colored Jones sequence", true,
       cmd_fit_recurrence},
      {"check-recurrence", "check a recurrence on jones and ado values", false,
       cmd_check_recurrence},
      {"validate", "parse and validate a diagram", false, cmd_validate},
  };
  return table;
}

std::string cache_key(const TangleDiagram& d, const std::string& command, const Options& o) {
  Json params = {{"format", o.format}, {"engine", o.engine},   {"r", o.r},
                 {"n", o.n},           {"B", o.bound},         {"m", o.m_given ? o.m : 0},
                 {"n_max", o.n_max},   {"degQ", o.deg_q},      {"degE", o.deg_e},
                 {"max_degQ", o.max_deg_q}, {"max_degE", o.max_deg_e},
                 {"max_qdeg", o.max_qdeg}};
  if (!o.alexander_file.empty())
    params["alexander"] = read_file(o.alexander_file, "alexander file");
  return d.canonical_text() + command + "\n" + params.dump();
}

int report_error(const std::string& kind, const std::string& message, int code,
                 const Options& o, std::ostream& out, std::ostream& err) {
  err << "error[" << kind << "]: " << message << "\n";
  if (json_out(o))
    out << dump({{"status", "error"}, {"kind", kind}, {"message", message}, {"exit", code}});
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quantum knot invariants from 1-1 tangle diagrams", "knotforge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  std::map<std::string, CLI::App*> subs;
  for (const Command& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    subs[c.name] = sub;
    sub->add_option("--knot", o.knot, "diagram file or bundled name")->required();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--engine", o.engine, "state-sum engine")
        ->check(CLI::IsMember({"dp", "naive"}));
    sub->add_flag("--no-cache", o.no_cache, "bypass the result cache");
  }
  const auto positive = CLI::Range(1, 1 << 20);
  const auto nonneg = CLI::Range(0, 1 << 20);
  subs["ado"]->add_option("--r", o.r, "root order r")->required()->check(positive);
  subs["jones"]->add_option("--n", o.n, "color n")->required()->check(nonneg);
  subs["unified"]->add_option("--B", o.bound, "summation bound B")->required()->check(nonneg);
  subs["cseries"]->add_option("--r", o.r)->required()->check(positive);
  subs["cseries"]->add_option("--m", o.m, "precision m")->required()->check(positive);
  subs["alexander"]->add_option("--m", o.m, "precision m (default: smallest certifying)")
      ->check(positive);
  auto* vf = subs["verify-factorization"];
  vf->add_option("--r", o.r)->required()->check(positive);
  vf->add_option("--B", o.bound)->required()->check(nonneg);
  vf->add_option("--m", o.m)->required()->check(positive);
  vf->add_option("--alexander", o.alexander_file, "JSON Alexander polynomial to use instead")
      ->check(CLI::ExistingFile);
  subs["verify-jones"]->add_option("--r", o.r)->required()->check(positive);
  subs["verify-jones"]->add_option("--n", o.n, "color n < r")->required()->check(nonneg);
  auto* fit = subs["fit-recurrence"];
  fit->add_option("--n-max", o.n_max, "largest color used (default 8)")->check(nonneg);
  fit->add_option("--degQ", o.deg_q, "Q-degree (search when omitted)")->check(nonneg);
  fit->add_option("--degE", o.deg_e, "E-degree (search when omitted)")->check(nonneg);
  fit->add_option("--max-degQ", o.max_deg_q, "search limit for the Q-degree")->check(nonneg);
  fit->add_option("--max-degE", o.max_deg_e, "search limit for the E-degree")->check(positive);
  fit->add_option("--max-qdeg", o.max_qdeg, "largest coefficient q-degree")->check(nonneg);
  auto* check = subs["check-recurrence"];
  check->add_option("--recurrence", o.recurrence_file, "recurrence JSON")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_option("--n-max", o.n_max, "largest color checked (default 12)")->check(nonneg);
  check->add_option("--r", o.roots, "roots at which to check ado annihilation");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), kUsage, o, out, err);
  }

  const Command* command = nullptr;
  for (const Command& c : commands())
    if (subs[c.name]->parsed()) command = &c;
  if (const CLI::Option* opt = subs[command->name]->get_option_no_throw("--m"))
    o.m_given = opt->count() > 0;

  try {
    const TangleDiagram d = load_knot(o.knot);
    std::optional<ResultCache> cache;
    std::string key;
    if (command->cached && !o.no_cache) {
      cache.emplace(ResultCache::default_directory(), kVersion, &err);
      key = cache_key(d, command->name, o);
      if (auto hit = cache->lookup(key)) {
        out << *hit;
        return kOk;
      }
    }
    const Output result = command->handler(d, o);
    // Only successful results are cached, so a hit always means exit 0.
    if (cache && result.code == kOk) cache->store(key, result.text);
    out << result.text;
    return result.code;
  } catch (const knotforge::ParseError& e) {
    return report_error("parse", e.what(), kUsage, o, out, err);
  } catch (const ScopeError& e) {
    return report_error("scope", e.what(), kUsage, o, out, err);
  } catch (const PrecisionError& e) {
    return report_error("precision", e.what(), kUsage, o, out, err);
  } catch (const ValidationError& e) {
    return report_error("validation", e.what(), kUsage, o, out, err);
  } catch (const InconsistencyError& e) {
    return report_error("inconsistency", e.what(), kVerificationFailed, o, out, err);
  } catch (const Error& e) {
    return report_error("argument", e.what(), kUsage, o, out, err);
  }
}

}  // namespace knotforge::cli
