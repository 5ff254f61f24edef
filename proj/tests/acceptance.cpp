// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails. Arguments select criteria by number.

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "invseq/cli/acceptance.hpp"

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  invseq::cli::AcceptanceOptions opt;
  int failed = 0;
  invseq::cli::run_acceptance(opt, only, [&](const invseq::cli::CriterionResult& r) {
    std::cout << invseq::cli::format_result(r) << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (failed ? "FAIL " : "PASS ") << failed << " of " << (only.empty() ? 9 : only.size())
            << " criteria failed" << std::endl;
  return failed ? 1 : 0;
}
