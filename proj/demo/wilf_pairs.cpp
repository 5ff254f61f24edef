// The three Wilf-equivalent pairs: each class with a rule next to its
// partner, counted by brute force.

#include <iostream>

#include "invseq/gentree.hpp"
#include "invseq/oracle.hpp"

using namespace invseq;

int main() {
  const int n = 9;
  for (const auto& c : gentree::class_table) {
    if (c.wilf_partner_index.empty()) continue;
    const auto rule = gentree::count_class(c.id, n);
    const auto partner = oracle::count_sequence(n, PatternSet::parse(c.wilf_partner_patterns));
    std::cout << c.index << " " << c.patterns << "\n" << c.wilf_partner_index << " " << c.wilf_partner_patterns << "\n ";
    for (const auto& v : rule) std::cout << " " << v;
    std::cout << "\n  " << (rule == partner ? "equal" : "DIFFERENT") << " through n = " << n << "\n\n";
  }
}
