// Fitted growth constants for all fourteen classes next to the stated forms.

#include <iomanip>
#include <iostream>

#include "invseq/analysis.hpp"
#include "invseq/gentree.hpp"

using namespace invseq;

int main() {
  std::cout << std::left << std::setw(7) << "class" << std::setw(14) << "mu" << std::setw(12) << "g"
            << std::setw(12) << "C" << "stated\n";
  for (const auto& t : analysis::growth_targets()) {
    const auto seq = gentree::count_class(t.id, t.terms);
    const auto e = analysis::estimate_growth(seq, t.model);
    std::cout << std::setw(7) << gentree::name(t.id) << std::setprecision(8) << std::setw(14) << e.mu
              << std::setprecision(5) << std::setw(12) << e.g << std::setw(12) << e.constant.value_or(0) << t.form
              << (t.gated ? "" : "  (rough)") << "\n";
  }
}
