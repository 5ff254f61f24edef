#pragma once

// Partitions of the 343 relation triples: by pattern set, by avoidance set
// (equivalence) and by counting sequence (Wilf equivalence).

#include <map>
#include <vector>

#include "invseq/core.hpp"
#include "invseq/oracle.hpp"

namespace invseq::analysis {

struct TripleGroup {
  std::vector<RelationTriple> members;  // in lexicographic order; the first is the representative
  PatternSet patterns;                  // closure for equivalence cells, the pattern set otherwise
  std::vector<Integer> sequence;        // I_0..I_max_n
  const RelationTriple& representative() const { return members.front(); }
};

struct TripleClassification {
  int max_n = 0;
  std::size_t triple_count = 0;
  std::vector<TripleGroup> pattern_sets;  // one cell per distinct pattern set
  std::vector<TripleGroup> groups;        // equivalence: identical avoidance sets
  std::vector<TripleGroup> wilf_groups;   // identical counting sequences

  /// Index into `groups` / `wilf_groups` of the cell holding t.
  std::size_t group_of(const RelationTriple& t) const { return find(groups, t); }
  std::size_t wilf_group_of(const RelationTriple& t) const { return find(wilf_groups, t); }

 private:
  static std::size_t find(const std::vector<TripleGroup>& cells, const RelationTriple& t) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (const auto& m : cells[i].members)
        if (m == t) return i;
    throw Error("triple " + t.to_string() + " is in no cell");
  }
};

struct ClassifyOptions {
  int closure_depth = 8;  // lengths compared when closing a pattern set
  int bound = oracle::default_exhaustive_bound;
  unsigned workers = 1;
};

/// S together with every length-3 pattern whose addition leaves the
/// avoiders of length <= depth unchanged. Two pattern sets with the same
/// closure have the same avoiders through that depth.
inline PatternSet pattern_closure(const PatternSet& s, int depth, int bound = oracle::default_exhaustive_bound) {
  const auto base = oracle::count_sequence(depth, s, bound);
  PatternSet out = s;
  for (const auto& p : length3_patterns()) {
    if (s.contains(p)) continue;
    PatternSet t = s;
    t.insert(p);
    // Av(S + p) is a subset of Av(S), so equal counts mean equal sets.
    if (oracle::count_sequence(depth, t, bound) == base) out.insert(p);
  }
  return out;
}

/// Partitions all 343 triples. The equivalence cells come from pattern-set
/// closures; the Wilf cells from oracle counts I_0..I_max_n.
inline TripleClassification classify_triples(int max_n, const ClassifyOptions& opt = {}) {
  if (max_n < 0) throw Error("max_n must be nonnegative");
  if (max_n > opt.bound) throw oracle::BoundExceeded("n", max_n, opt.bound);
  if (opt.closure_depth > opt.bound) throw oracle::BoundExceeded("closure depth", opt.closure_depth, opt.bound);
  TripleClassification out;
  out.max_n = max_n;
  const auto triples = all_triples();
  out.triple_count = triples.size();

  std::map<PatternSet, std::vector<RelationTriple>> by_set;
  for (const auto& t : triples) by_set[triple_to_pattern_set(t)].push_back(t);

  std::map<PatternSet, std::vector<Integer>> sequence;
  std::map<PatternSet, PatternSet> closure;
  for (const auto& [s, members] : by_set) {
    sequence[s] = oracle::count_sequence(max_n, s, opt.bound, opt.workers);
    closure.emplace(s, pattern_closure(s, opt.closure_depth, opt.bound));
  }

  auto build = [&](auto key_of, auto patterns_of) {
    using Key = decltype(key_of(by_set.begin()->first));
    std::map<Key, TripleGroup> cells;
    for (const auto& [s, members] : by_set) {
      auto& cell = cells[key_of(s)];
      if (cell.members.empty()) {
        cell.patterns = patterns_of(s);
        cell.sequence = sequence.at(s);
      }
      cell.members.insert(cell.members.end(), members.begin(), members.end());
    }
    std::vector<TripleGroup> v;
    for (auto& [k, cell] : cells) {
      std::sort(cell.members.begin(), cell.members.end());
      v.push_back(std::move(cell));
    }
    std::sort(v.begin(), v.end(), [](const TripleGroup& a, const TripleGroup& b) {
      return a.representative() < b.representative();
    });
    return v;
  };
  const auto identity = [](const PatternSet& s) { return s; };
  const auto closed = [&](const PatternSet& s) { return closure.at(s); };
  out.pattern_sets = build(identity, identity);
  out.groups = build(closed, closed);
  out.wilf_groups = build([&](const PatternSet& s) { return sequence.at(s); }, identity);
  return out;
}

}  // namespace invseq::analysis
