#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "invseq/gentree/class_id.hpp"
#include "invseq/gentree/label.hpp"
#include "invseq/numeric.hpp"

namespace invseq::gentree {

class RuleError : public Error {
 public:
  using Error::Error;
};

struct Child {
  Label label;
  Integer multiplicity;
};

/// A generating tree given by a root label, an expansion map and the set of
/// labels that stand for genuine avoiders (the rest are auxiliary objects).
struct SuccessionRule {
  ClassId id{};
  Label root;
  std::function<void(const Label&, std::vector<Child>&)> expand;
  std::function<bool(const Label&)> counted;

  std::vector<Child> children(const Label& parent) const {
    std::vector<Child> out;
    expand(parent, out);
    return out;
  }
};

using Census = std::map<Label, Integer>;

struct LevelState {
  int depth = 0;
  Census census;
};

inline LevelState initial_state(const SuccessionRule& rule) {
  LevelState s;
  s.census.emplace(rule.root, 1);
  return s;
}

/// Expands every label of the census once. Each child must have positive
/// multiplicity and nonnegative parameters, and a length-carrying child must
/// sit exactly one level below its parent.
inline LevelState step(const SuccessionRule& rule, const LevelState& state) {
  LevelState next;
  next.depth = state.depth + 1;
  std::vector<Child> kids;
  for (const auto& [label, count] : state.census) {
    if (label.carries_length() && label[0] != state.depth) {
      throw RuleError("label " + label.to_string() + " found at depth " +
                      std::to_string(state.depth));
    }
    kids.clear();
    rule.expand(label, kids);
    for (const auto& kid : kids) {
      if (kid.multiplicity <= 0) {
        throw RuleError("child " + kid.label.to_string() + " of " + label.to_string() +
                        " has nonpositive multiplicity");
      }
      for (std::uint8_t i = 0; i < kid.label.arity; ++i) {
        if (kid.label[i] < 0) {
          throw RuleError("child " + kid.label.to_string() + " of " + label.to_string() +
                          " has a negative parameter");
        }
      }
      if (kid.label.carries_length() && kid.label[0] != next.depth) {
        throw RuleError("child " + kid.label.to_string() + " of " + label.to_string() +
                        " is not at depth " + std::to_string(next.depth));
      }
      next.census[kid.label] += count * kid.multiplicity;
    }
  }
  return next;
}

inline Integer counted_total(const SuccessionRule& rule, const LevelState& state) {
  Integer total = 0;
  for (const auto& [label, count] : state.census) {
    if (rule.counted(label)) total += count;
  }
  return total;
}

inline Integer census_total(const LevelState& state) {
  Integer total = 0;
  for (const auto& [label, count] : state.census) total += count;
  return total;
}

}  // namespace invseq::gentree
