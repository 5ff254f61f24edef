// invseq: counting, series, classification and growth fits for inversion
// sequences avoiding a triple of relations.
//
// Option precedence: built-in defaults, then INVSEQ_ORACLE_BOUND, then the
// --config JSON file, then command-line flags.

#include <iostream>
#include <string>
#include <string_view>

#include "CLI11.hpp"

#include "invseq/cli/commands.hpp"

namespace {

using invseq::cli::RunConfig;

// The config file must be read before CLI11 assigns flags, so that flags win.
std::string find_config(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return std::string(a.substr(9));
  }
  return {};
}

void add_selector(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--class,-c", cfg.class_selector, "class index (1176, C663A) or triple such as \">,<=,!=\"");
  sub->add_option("--patterns,-p", cfg.patterns, "pattern set, e.g. 001 or \"010,120,210\"");
  sub->add_option("--triple,-t", cfg.triple, "relation triple, e.g. \"(>,<=,!=)\"; - means no restriction");
}

void add_compare(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--compare", cfg.compare, "b-file whose terms must be regenerated exactly");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  try {
    invseq::cli::apply_environment(cfg);
    if (const auto path = find_config(argc, argv); !path.empty()) invseq::cli::load_config_file(cfg, path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Inversion sequences avoiding triples of relations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "JSON file of option values (flags override it)");
  app.add_option_function<std::string>(
         "--format,-f", [&](const std::string& s) { cfg.format = invseq::cli::parse_format(s); },
         "table, jsonl or bfile")
      ->check(CLI::IsMember({"table", "jsonl", "json-lines", "bfile", "b-file"}));
  app.add_option_function<int>(
         "--oracle-bound", [&](int v) { cfg.oracle_bound = invseq::cli::parse_positive("--oracle-bound", v); },
         "largest length the brute-force oracle may enumerate");
  app.add_option_function<unsigned>(
         "--workers,-j", [&](unsigned v) { cfg.workers = static_cast<unsigned>(invseq::cli::parse_positive("--workers", v)); },
         "worker threads for oracle enumeration");

  auto* count = app.add_subcommand("count", "print I_0..I_n");
  add_selector(count, cfg);
  count->add_option_function<int>("--n,-n", [&](int v) { cfg.n = v; }, "largest length (default 10)");
  count->add_option_function<std::string>(
           "--engine,-e", [&](const std::string& s) { cfg.engine = invseq::cli::parse_engine(s); },
           "gentree, census or oracle (default: gentree when a rule exists)")
      ->check(CLI::IsMember({"auto", "gentree", "census", "oracle"}));
  add_compare(count, cfg);

  auto* series = app.add_subcommand("series", "expand the closed form and verify it");
  add_selector(series, cfg);
  series->add_option("--order,-o", cfg.order, "truncation order");
  series->add_flag("--verify-minpoly", cfg.verify_minpoly, "also check the minimal polynomial");
  series->add_option("--route", cfg.route, "733 only: quadratic-field or symmetric")
      ->check(CLI::IsMember({"quadratic-field", "symmetric"}));
  add_compare(series, cfg);

  auto* classify = app.add_subcommand("classify", "partition the 343 triples");
  classify->add_option_function<int>("--n,-n", [&](int v) { cfg.n = v; }, "length for the Wilf partition (default 9)");

  auto* asym = app.add_subcommand("asymptotics", "fit the growth of a class");
  add_selector(asym, cfg);
  asym->add_option_function<int>("--terms", [&](int v) { cfg.terms = v; }, "number of terms I_0.. to fit");
  asym->add_option_function<std::string>("--model", [&](const std::string& s) { cfg.model = s; },
                                         "algebraic or stretched (default per class)")
      ->check(CLI::IsMember({"algebraic", "stretched"}));
  asym->add_option("--levels", cfg.levels, "Richardson levels");

  auto* words = app.add_subcommand("words", "commitment-word counts, formula against brute force");
  words->add_option("--k", cfg.k, "word length")->required();
  words->add_option("--b", cfg.b, "alphabet size")->required();
  words->add_option("--rules", cfg.rules, "R1R2 or R1R3")->check(CLI::IsMember({"R1R2", "R1R3"}));

  auto* verify = app.add_subcommand("verify-all", "run every acceptance criterion");
  verify->add_option("--criteria", cfg.criteria, "criterion numbers to run (default all)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return invseq::cli::run_command(cfg, std::cout);
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
