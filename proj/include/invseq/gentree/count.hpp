#pragma once

#include <vector>

#include "invseq/gentree/class_id.hpp"
#include "invseq/gentree/dense.hpp"
#include "invseq/gentree/rules.hpp"
#include "invseq/gentree/succession_rule.hpp"

namespace invseq::gentree {

enum class Engine {
  dense,   ///< array form of the rule, O(n^2) work per level
  census,  ///< label-by-label expansion of a std::map census
};

/// I_0, ..., I_{n_max} of the class by iterating its succession rule.
inline std::vector<Integer> count_class(ClassId id, int n_max, Engine engine = Engine::dense) {
  if (n_max < 0) throw Error("length must be nonnegative");
  if (engine == Engine::dense) return dense::count(id, n_max);
  const SuccessionRule rule = make_rule(id);
  LevelState state = initial_state(rule);
  std::vector<Integer> out{counted_total(rule, state)};
  for (int n = 1; n <= n_max; ++n) {
    state = step(rule, state);
    out.push_back(counted_total(rule, state));
  }
  return out;
}

/// The labelled census at the given depth, auxiliary labels included.
inline Census label_census(ClassId id, int depth) {
  if (depth < 0) throw Error("depth must be nonnegative");
  const SuccessionRule rule = make_rule(id);
  LevelState state = initial_state(rule);
  while (state.depth < depth) state = step(rule, state);
  return state.census;
}

}  // namespace invseq::gentree
