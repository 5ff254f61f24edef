#pragma once

// The six commands behind the `invseq` executable. Each command writes to a
// stream and returns the process exit status: 0 when every requested check
// passed, 1 when a check failed, 2 on a usage or input error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "invseq/analysis.hpp"
#include "invseq/cli/acceptance.hpp"
#include "invseq/combinat.hpp"
#include "invseq/gentree.hpp"
#include "invseq/oracle.hpp"
#include "invseq/series.hpp"

namespace invseq::cli {

using json = nlohmann::json;

enum class Format { table, jsonl, bfile };
enum class EngineChoice { automatic, gentree, census, oracle };

inline constexpr const char* oracle_bound_variable = "INVSEQ_ORACLE_BOUND";

struct RunConfig {
  std::string command;
  // Selectors: at most one of these is set.
  std::string class_selector;
  std::string patterns;
  std::string triple;

  std::optional<int> n;  // count: 10, classify: 9
  int order = 20;
  std::optional<int> terms;
  Format format = Format::table;
  EngineChoice engine = EngineChoice::automatic;
  int oracle_bound = oracle::default_exhaustive_bound;
  unsigned workers = 1;

  std::string compare;  // b-file to compare the generated terms with
  bool verify_minpoly = false;
  std::string route = "quadratic-field";
  std::optional<std::string> model;
  int levels = 6;
  int k = 0;
  int b = 0;
  std::string rules = "R1R2";
  std::vector<int> criteria;  // verify-all: empty means all
};

class UsageError : public Error {
 public:
  using Error::Error;
};

inline Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "jsonl" || s == "json-lines") return Format::jsonl;
  if (s == "bfile" || s == "b-file") return Format::bfile;
  throw UsageError("unknown format '" + s + "'");
}

inline EngineChoice parse_engine(const std::string& s) {
  if (s == "auto") return EngineChoice::automatic;
  if (s == "gentree") return EngineChoice::gentree;
  if (s == "census") return EngineChoice::census;
  if (s == "oracle") return EngineChoice::oracle;
  throw UsageError("unknown engine '" + s + "'");
}

inline int parse_positive(const std::string& what, long v) {
  if (v < 1) throw UsageError(what + " must be positive");
  return static_cast<int>(v);
}

/// Reads the oracle bound from the environment, if set.
inline void apply_environment(RunConfig& cfg) {
  if (const char* v = std::getenv(oracle_bound_variable); v && *v) {
    char* end = nullptr;
    const long bound = std::strtol(v, &end, 10);
    if (*end != '\0') throw UsageError(std::string(oracle_bound_variable) + " is not an integer");
    cfg.oracle_bound = parse_positive(oracle_bound_variable, bound);
  }
}

/// Overlays the keys of a JSON object onto cfg. Keys use the long option
/// names with '-' or '_'.
inline void apply_json(RunConfig& cfg, const json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  for (const auto& [raw, v] : j.items()) {
    std::string key = raw;
    for (auto& c : key)
      if (c == '_') c = '-';
    if (key == "class") cfg.class_selector = v.get<std::string>();
    else if (key == "patterns") cfg.patterns = v.get<std::string>();
    else if (key == "triple") cfg.triple = v.get<std::string>();
    else if (key == "n") cfg.n = v.get<int>();
    else if (key == "order") cfg.order = v.get<int>();
    else if (key == "terms") cfg.terms = v.get<int>();
    else if (key == "format") cfg.format = parse_format(v.get<std::string>());
    else if (key == "engine") cfg.engine = parse_engine(v.get<std::string>());
    else if (key == "oracle-bound") cfg.oracle_bound = parse_positive("oracle-bound", v.get<long>());
    else if (key == "workers") cfg.workers = static_cast<unsigned>(parse_positive("workers", v.get<long>()));
    else if (key == "compare") cfg.compare = v.get<std::string>();
    else if (key == "verify-minpoly") cfg.verify_minpoly = v.get<bool>();
    else if (key == "route") cfg.route = v.get<std::string>();
    else if (key == "model") cfg.model = v.get<std::string>();
    else if (key == "levels") cfg.levels = v.get<int>();
    else if (key == "k") cfg.k = v.get<int>();
    else if (key == "b") cfg.b = v.get<int>();
    else if (key == "rules") cfg.rules = v.get<std::string>();
    else if (key == "criteria") cfg.criteria = v.get<std::vector<int>>();
    else throw UsageError("unknown config key '" + raw + "'");
  }
}

inline void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config '" + path + "': " + e.what());
  }
  apply_json(cfg, j);
}

// ---------------------------------------------------------------------------
// Selectors

struct Selection {
  std::optional<gentree::ClassId> id;
  PatternSet patterns;
  std::string label;  // class index or pattern list, for output
};

inline Selection resolve_selection(const RunConfig& cfg) {
  const int given = !cfg.class_selector.empty() + !cfg.patterns.empty() + !cfg.triple.empty();
  if (given == 0) throw UsageError("one of --class, --patterns, --triple is required");
  if (given > 1) throw UsageError("--class, --patterns and --triple are mutually exclusive");
  Selection s;
  if (!cfg.class_selector.empty()) {
    s.id = gentree::find_class(cfg.class_selector);
    if (!s.id) throw UsageError("unknown class '" + cfg.class_selector + "'");
    s.patterns = gentree::pattern_set(*s.id);
  } else if (!cfg.triple.empty()) {
    s.patterns = triple_to_pattern_set(RelationTriple::parse(cfg.triple));
  } else {
    s.patterns = PatternSet::parse(cfg.patterns);
  }
  if (!s.id)
    for (const auto& c : gentree::class_table)
      if (gentree::pattern_set(c.id) == s.patterns) s.id = c.id;
  s.label = s.id ? std::string(gentree::name(*s.id)) : s.patterns.to_string();
  return s;
}

inline gentree::ClassId require_class(const RunConfig& cfg) {
  const auto s = resolve_selection(cfg);
  if (!s.id) throw UsageError("no class with a succession rule has pattern set " + s.patterns.to_string());
  return *s.id;
}

// ---------------------------------------------------------------------------
// Sequence output and b-file comparison

inline std::string engine_name(EngineChoice e) {
  switch (e) {
    case EngineChoice::gentree: return "gentree";
    case EngineChoice::census: return "census";
    case EngineChoice::oracle: return "oracle";
    default: return "auto";
  }
}

/// Parses "index value" lines, skipping blank lines and '#' comments.
inline std::vector<std::pair<long, Integer>> read_bfile(std::istream& in) {
  std::vector<std::pair<long, Integer>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long index;
    std::string value, rest;
    if (!(ls >> index >> value) || (ls >> rest)) throw UsageError("b-file line " + std::to_string(line_no) + " is malformed");
    Integer v;
    if (v.set_str(value, 10) != 0) throw UsageError("b-file line " + std::to_string(line_no) + " has a bad value");
    out.emplace_back(index, v);
  }
  return out;
}

inline std::string bfile_text(const std::vector<Integer>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) out += std::to_string(i) + " " + seq[i].get_str() + "\n";
  return out;
}

struct Comparison {
  bool ok = false;
  std::string message;
};

/// Compares a generated sequence with the terms of a b-file. Every term in
/// the file must be regenerated, and the file's indices must be 0, 1, 2, ...
inline Comparison compare_with_bfile(const std::vector<Integer>& seq, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read b-file '" + path + "'");
  const auto terms = read_bfile(in);
  if (terms.empty()) return {false, "b-file " + path + " has no terms"};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto [index, value] = terms[i];
    if (index != static_cast<long>(i)) return {false, "b-file index " + std::to_string(index) + " out of sequence"};
    if (i >= seq.size())
      return {false, "b-file has " + std::to_string(terms.size()) + " terms, only " + std::to_string(seq.size()) +
                         " generated"};
    if (value != seq[i])
      return {false, "mismatch at index " + std::to_string(i) + ": file " + value.get_str() + ", generated " +
                         seq[i].get_str()};
  }
  std::ifstream again(path);
  std::stringstream raw;
  raw << again.rdbuf();
  const bool identical = raw.str() == bfile_text({seq.begin(), seq.begin() + static_cast<long>(terms.size())});
  return {true, "matches " + path + " (" + std::to_string(terms.size()) + " terms" +
                    (identical ? ", byte-identical" : "") + ")"};
}

inline void write_verdict(std::ostream& out, Format f, bool ok, const std::string& message, json extra = json::object()) {
  if (f == Format::jsonl) {
    extra["verdict"] = ok ? "OK" : "FAIL";
    extra["message"] = message;
    out << extra.dump() << "\n";
  } else {
    out << "# verdict " << (ok ? "OK" : "FAIL") << ": " << message << "\n";
  }
}

inline void write_sequence(std::ostream& out, Format f, const std::vector<Integer>& seq, const std::string& label,
                           const std::string& source) {
  if (f == Format::bfile) {
    out << bfile_text(seq);
    return;
  }
  if (f == Format::jsonl) {
    for (std::size_t i = 0; i < seq.size(); ++i)
      out << json{{"sequence", label}, {"source", source}, {"n", i}, {"value", seq[i].get_str()}}.dump() << "\n";
    return;
  }
  out << "# " << label << " (" << source << ")\n";
  for (std::size_t i = 0; i < seq.size(); ++i) out << i << " " << seq[i].get_str() << "\n";
}

// ---------------------------------------------------------------------------
// count

inline std::vector<Integer> generate(const Selection& s, const RunConfig& cfg, EngineChoice& used) {
  const int n = cfg.n.value_or(10);
  used = cfg.engine;
  if (used == EngineChoice::automatic) used = s.id ? EngineChoice::gentree : EngineChoice::oracle;
  if (used != EngineChoice::oracle && !s.id)
    throw UsageError("engine " + engine_name(used) + " needs one of the 14 classes with a succession rule");
  switch (used) {
    case EngineChoice::gentree: return gentree::count_class(*s.id, n);
    case EngineChoice::census: return gentree::count_class(*s.id, n, gentree::Engine::census);
    default: return oracle::count_sequence(n, s.patterns, cfg.oracle_bound, cfg.workers);
  }
}

inline int cmd_count(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n.value_or(0) < 0) throw UsageError("--n must be nonnegative");
  const auto s = resolve_selection(cfg);
  EngineChoice used{};
  const auto seq = generate(s, cfg, used);
  write_sequence(out, cfg.format, seq, s.label, engine_name(used));
  if (cfg.compare.empty()) return 0;
  const auto c = compare_with_bfile(seq, cfg.compare);
  write_verdict(out, cfg.format, c.ok, c.message, {{"sequence", s.label}});
  return c.ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// series

inline series::ConjugateRoute parse_route(const std::string& r) {
  if (r == "quadratic-field") return series::ConjugateRoute::quadratic_field;
  if (r == "symmetric") return series::ConjugateRoute::symmetric;
  throw UsageError("unknown route '" + r + "'");
}

inline int cmd_series(const RunConfig& cfg, std::ostream& out) {
  if (cfg.order < 0) throw UsageError("--order must be nonnegative");
  const auto id = require_class(cfg);
  const std::string label(gentree::name(id));
  if (!series::has_closed_form(id)) throw series::NoClosedForm(id);
  const auto closed = series::expand_closed_form(id, cfg.order, parse_route(cfg.route));
  const auto coeffs = series::to_integers(closed);
  write_sequence(out, cfg.format, coeffs, label, "closed form");

  bool ok = true;
  std::vector<std::string> checks;
  const bool tree = coeffs == gentree::count_class(id, cfg.order);
  ok = ok && tree;
  checks.push_back(std::string("generating tree ") + (tree ? "agrees" : "DISAGREES"));
  if (series::has_catalytic_system(id)) {
    const bool cat = series::iterate_catalytic_system(id, cfg.order) == closed;
    ok = ok && cat;
    checks.push_back(std::string("catalytic system ") + (cat ? "agrees" : "DISAGREES"));
  }
  if (cfg.verify_minpoly) {
    const auto mp = series::minimal_polynomial(id);
    const bool vanishes = mp && series::annihilates(mp->poly, closed);
    ok = ok && vanishes;
    checks.push_back(std::string(mp && mp->source == series::MinpolySource::stated ? "stated" : "derived") +
                     " minimal polynomial of degree " + std::to_string(mp ? mp->poly.degree() : 0) +
                     (vanishes ? " vanishes" : " does NOT vanish") + " mod z^" + std::to_string(cfg.order + 1));
  }
  std::string msg;
  for (const auto& c : checks) msg += (msg.empty() ? "" : "; ") + c;
  write_verdict(out, cfg.format, ok, msg, {{"sequence", label}, {"order", cfg.order}});
  if (!cfg.compare.empty()) {
    const auto c = compare_with_bfile(coeffs, cfg.compare);
    write_verdict(out, cfg.format, c.ok, c.message, {{"sequence", label}});
    ok = ok && c.ok;
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// classify

inline std::string sequence_text(const std::vector<Integer>& seq) {
  std::string s;
  for (const auto& v : seq) s += (s.empty() ? "" : ",") + v.get_str();
  return s;
}

inline int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  analysis::ClassifyOptions opt;
  opt.bound = cfg.oracle_bound;
  opt.workers = cfg.workers;
  const auto c = analysis::classify_triples(cfg.n.value_or(9), opt);
  std::size_t constant = 0;
  for (const auto& g : c.wilf_groups) {
    const auto& s = g.sequence;
    if (s.size() > 3 && s[s.size() - 1] == s[s.size() - 2] && s[s.size() - 2] == s[s.size() - 3]) ++constant;
  }
  if (cfg.format == Format::jsonl) {
    out << json{{"kind", "summary"},
                {"max_n", c.max_n},
                {"triples", c.triple_count},
                {"pattern_sets", c.pattern_sets.size()},
                {"equivalence_classes", c.groups.size()},
                {"wilf_classes", c.wilf_groups.size()}}
               .dump()
        << "\n";
    auto cell = [&](const char* kind, std::size_t i, const analysis::TripleGroup& g) {
      std::vector<std::string> seq;
      for (const auto& v : g.sequence) seq.push_back(v.get_str());
      out << json{{"kind", kind},
                  {"index", i},
                  {"representative", g.representative().to_string()},
                  {"members", g.members.size()},
                  {"patterns", g.patterns.to_string()},
                  {"sequence", seq}}
                 .dump()
          << "\n";
    };
    for (std::size_t i = 0; i < c.groups.size(); ++i) cell("equivalence", i, c.groups[i]);
    for (std::size_t i = 0; i < c.wilf_groups.size(); ++i) cell("wilf", i, c.wilf_groups[i]);
    return 0;
  }
  out << "triples " << c.triple_count << "\n";
  out << "pattern sets " << c.pattern_sets.size() << "\n";
  out << "equivalence classes " << c.groups.size() << "\n";
  out << "Wilf classes (n<=" << c.max_n << ") " << c.wilf_groups.size() << "\n";
  out << "eventually constant sequences " << constant << "\n";
  out << "\n# equivalence classes: index representative members closure\n";
  for (std::size_t i = 0; i < c.groups.size(); ++i) {
    const auto& g = c.groups[i];
    out << i << " " << g.representative().to_string() << " " << g.members.size() << " " << g.patterns.to_string()
        << "\n";
  }
  out << "\n# Wilf classes: index representative members I_0..I_" << c.max_n << "\n";
  for (std::size_t i = 0; i < c.wilf_groups.size(); ++i) {
    const auto& g = c.wilf_groups[i];
    out << i << " " << g.representative().to_string() << " " << g.members.size() << " " << sequence_text(g.sequence)
        << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// asymptotics

inline analysis::GrowthModel parse_model(const std::string& m) {
  if (m == "algebraic") return analysis::GrowthModel::algebraic;
  if (m == "stretched") return analysis::GrowthModel::stretched;
  throw UsageError("unknown model '" + m + "'");
}

inline int cmd_asymptotics(const RunConfig& cfg, std::ostream& out) {
  const auto id = require_class(cfg);
  const auto& target = analysis::growth_target(id);
  const int terms = cfg.terms.value_or(target.terms);
  if (terms < analysis::minimum_terms)
    throw UsageError("--terms must be at least " + std::to_string(analysis::minimum_terms));
  const auto model = cfg.model ? parse_model(*cfg.model) : target.model;
  analysis::GrowthOptions opt;
  opt.levels = cfg.levels;
  // count_class returns I_0..I_n, so n = terms - 1.
  const auto seq = gentree::count_class(id, terms - 1);
  const auto e = analysis::estimate_growth(seq, model, opt);

  const double rel = std::abs(e.mu - target.mu) / target.mu;
  const bool gated = target.gated && model == target.model && terms >= target.terms;
  const bool ok = !gated || rel < target.tolerance;
  const std::string label(gentree::name(id));

  if (cfg.format == Format::jsonl) {
    json j{{"sequence", label},     {"terms", terms}, {"model", model == analysis::GrowthModel::algebraic ? "algebraic" : "stretched"},
           {"mu", e.mu},            {"g", e.g},       {"stated_form", target.form},
           {"stated_mu", target.mu}, {"relative_error", rel}, {"fit_rms", e.diagnostics.fit_rms}};
    if (e.constant) j["constant"] = *e.constant;
    if (e.stretched) {
      j["sigma"] = e.stretched->sigma;
      j["log_mu1"] = e.stretched->log_mu1;
    } else {
      j["levels"] = e.diagnostics.levels;
      j["mu_by_level"] = e.diagnostics.mu_by_level;
      j["mu_spread"] = e.diagnostics.mu_spread;
      j["g_spread"] = e.diagnostics.g_spread;
    }
    out << j.dump() << "\n";
  } else {
    out << std::setprecision(10);
    out << "class " << label << " " << gentree::info(id).triple << ", " << terms << " terms\n";
    out << "stated form " << target.form << "\n";
    out << "mu " << e.mu << "  (stated " << target.mu << ", relative error " << std::setprecision(3) << rel << ")\n"
        << std::setprecision(10);
    out << "g " << e.g;
    if (target.g) out << "  (stated " << *target.g << ")";
    out << "\n";
    if (e.constant) out << "C " << *e.constant << "\n";
    if (e.stretched) {
      out << "sigma " << e.stretched->sigma << " (fixed)\n";
      out << "log mu1 " << e.stretched->log_mu1;
      if (target.log_mu1) out << "  (stated " << *target.log_mu1 << ")";
      out << "\n";
    } else {
      out << "levels " << e.diagnostics.levels << ", mu by level";
      for (double m : e.diagnostics.mu_by_level) out << " " << m;
      out << "\n" << std::setprecision(3) << "mu spread " << e.diagnostics.mu_spread << ", g spread "
          << e.diagnostics.g_spread << "\n";
    }
    out << std::setprecision(3) << "fit rms " << e.diagnostics.fit_rms << "\n";
  }
  std::ostringstream msg;
  msg << std::setprecision(3);
  if (gated)
    msg << "mu within " << target.tolerance << " of " << target.mu << " (relative error " << rel << ")";
  else
    msg << "diagnostic only, not checked against a tolerance";
  write_verdict(out, cfg.format, ok, msg.str(), {{"sequence", label}});
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// words

inline int cmd_words(const RunConfig& cfg, std::ostream& out) {
  if (cfg.k < 0 || cfg.b < 0) throw UsageError("--k and --b must be nonnegative");
  const bool r12 = cfg.rules == "R1R2";
  if (!r12 && cfg.rules != "R1R3") throw UsageError("--rules must be R1R2 or R1R3");
  const std::string patterns = r12 ? "212,112,213" : "111,212,112,213";
  const Integer formula = r12 ? combinat::words_R1R2(cfg.k, cfg.b) : combinat::words_R1R3(cfg.k, cfg.b);
  Integer brute;
  if (cfg.b == 0) brute = cfg.k == 0 ? 1 : 0;  // only the empty word lives on the empty alphabet
  else brute = oracle::count_words({cfg.k, cfg.b, oracle::parse_word_patterns(patterns), true}, cfg.oracle_bound);
  const bool ok = formula == brute;
  const std::string name = std::string(r12 ? "a" : "d") + "(" + std::to_string(cfg.k) + "," + std::to_string(cfg.b) + ")";
  if (cfg.format == Format::jsonl) {
    out << json{{"rules", cfg.rules}, {"patterns", patterns}, {"k", cfg.k}, {"b", cfg.b},
                {"formula", formula.get_str()}, {"oracle", brute.get_str()}}
               .dump()
        << "\n";
  } else {
    out << "surjective words of length " << cfg.k << " on " << cfg.b << " letters avoiding " << patterns << "\n";
    out << "formula " << name << " = " << formula.get_str() << "\n";
    out << "oracle  " << name << " = " << brute.get_str() << "\n";
  }
  write_verdict(out, cfg.format, ok, ok ? "formula and oracle agree" : "formula and oracle differ",
                {{"rules", cfg.rules}, {"k", cfg.k}, {"b", cfg.b}});
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify-all

inline int cmd_verify_all(const RunConfig& cfg, std::ostream& out) {
  AcceptanceOptions opt;
  opt.workers = cfg.workers;
  std::set<int> only(cfg.criteria.begin(), cfg.criteria.end());
  for (int c : only)
    if (!criteria().count(c)) throw UsageError("no criterion " + std::to_string(c));
  int failed = 0;
  run_acceptance(opt, only, [&](const CriterionResult& r) {
    if (!r.pass) ++failed;
    if (cfg.format == Format::jsonl)
      out << json{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}}
                 .dump()
          << "\n";
    else
      out << format_result(r) << "\n";
    out.flush();
  });
  if (cfg.format != Format::jsonl)
    out << (failed ? "FAIL " : "PASS ") << failed << " criteria failed\n";
  return failed ? 1 : 0;
}

inline int run_command(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "count") return cmd_count(cfg, out);
  if (cfg.command == "series") return cmd_series(cfg, out);
  if (cfg.command == "classify") return cmd_classify(cfg, out);
  if (cfg.command == "asymptotics") return cmd_asymptotics(cfg, out);
  if (cfg.command == "words") return cmd_words(cfg, out);
  if (cfg.command == "verify-all") return cmd_verify_all(cfg, out);
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace invseq::cli
