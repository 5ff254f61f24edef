#pragma once

// Exhaustive enumeration of pattern-avoiding inversion sequences and words.
// Exponential by design; every faster counter in the library is checked
// against these routines.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

#include "invseq/core.hpp"
#include "invseq/numeric.hpp"

namespace invseq::oracle {

inline constexpr int default_exhaustive_bound = 10;

class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what, long value, long bound)
      : Error(what + " = " + std::to_string(value) + " exceeds the exhaustive-search bound " +
              std::to_string(bound)) {}
};

namespace detail {

using invseq::detail::order_sign;

inline int sign_index(int s12, int s23, int s13) noexcept {
  return (s12 + 1) * 9 + (s23 + 1) * 3 + (s13 + 1);
}

// Does the last entry of `word` complete an occurrence of `p`?
inline bool occurs_ending_at_last(std::span<const int> word, std::span<const int> p) {
  const std::size_t m = p.size();
  const std::size_t last = word.size() - 1;
  if (m == 0 || m > word.size()) return m == 0;
  std::vector<std::size_t> chosen(m);
  chosen[m - 1] = last;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t t, std::size_t start) {
    if (t == m - 1) return true;
    for (std::size_t j = start; j + (m - 1 - t) <= last; ++j) {
      if (order_sign(word[j], word[last]) != order_sign(p[t], p[m - 1])) continue;
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s) {
        ok = order_sign(word[chosen[s]], word[j]) == order_sign(p[s], p[t]);
      }
      if (!ok) continue;
      chosen[t] = j;
      if (rec(t + 1, j + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace detail

/// Decides, for a word whose proper prefix avoids every pattern of a set,
/// whether appending the last letter creates an occurrence. Patterns of
/// length <= 3 use a sign table; longer ones fall back to a backtracking search.
class IncrementalChecker {
 public:
  explicit IncrementalChecker(const PatternSet& patterns) {
    table3_.fill(false);
    table2_.fill(false);
    for (const auto& p : patterns) {
      switch (p.size()) {
        case 0: forbids_empty_ = true; break;
        case 1: forbids_singleton_ = true; break;
        case 2: table2_[static_cast<std::size_t>(detail::order_sign(p[0], p[1]) + 1)] = true; break;
        case 3:
          table3_[static_cast<std::size_t>(detail::sign_index(detail::order_sign(p[0], p[1]),
                                                               detail::order_sign(p[1], p[2]),
                                                               detail::order_sign(p[0], p[2])))] =
              true;
          break;
        default: longer_.push_back(p); break;
      }
    }
    any3_ = std::find(table3_.begin(), table3_.end(), true) != table3_.end();
    any2_ = std::find(table2_.begin(), table2_.end(), true) != table2_.end();
  }

  bool forbids_everything() const noexcept { return forbids_empty_; }

  bool completes_occurrence(std::span<const int> word) const {
    if (word.empty()) return false;
    if (forbids_singleton_) return true;
    const std::size_t last = word.size() - 1;
    const int ak = word[last];
    if (any2_ || any3_) {
      for (std::size_t j = 0; j < last; ++j) {
        const int s23 = detail::order_sign(word[j], ak);
        if (any2_ && table2_[static_cast<std::size_t>(s23 + 1)]) return true;
        if (!any3_) continue;
        for (std::size_t i = 0; i < j; ++i) {
          const auto idx = detail::sign_index(detail::order_sign(word[i], word[j]), s23,
                                              detail::order_sign(word[i], ak));
          if (table3_[static_cast<std::size_t>(idx)]) return true;
        }
      }
    }
    for (const auto& p : longer_) {
      if (detail::occurs_ending_at_last(word, p.digits())) return true;
    }
    return false;
  }

 private:
  std::array<bool, 27> table3_{};
  std::array<bool, 3> table2_{};
  bool any3_ = false;
  bool any2_ = false;
  bool forbids_empty_ = false;
  bool forbids_singleton_ = false;
  std::vector<Pattern> longer_;
};

/// All avoiders of length n in lexicographic order. Scans every one of the
/// n! inversion sequences and tests each with contains_pattern.
inline std::vector<InversionSequence> enumerate_avoiders(int n, const PatternSet& s,
                                                         int bound = default_exhaustive_bound) {
  if (n < 0) throw Error("length must be nonnegative");
  if (n > bound) throw BoundExceeded("n", n, bound);
  std::vector<InversionSequence> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (;;) {
    if (n == 0 || avoids_all(a, s)) out.push_back(InversionSequence::validate(a));
    int pos = n - 1;
    while (pos >= 0 && ++a[static_cast<std::size_t>(pos)] > pos) a[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) return out;
  }
}

/// I_0(S), ..., I_{n_max}(S) from one pruned depth-first search: a prefix is
/// abandoned as soon as it contains a forbidden pattern. The search below
/// depth 3 is split across `workers` threads and merged by summation.
inline std::vector<Integer> count_sequence(int n_max, const PatternSet& s,
                                           int bound = default_exhaustive_bound,
                                           unsigned workers = 1) {
  if (n_max < 0) throw Error("length must be nonnegative");
  if (n_max > bound) throw BoundExceeded("n", n_max, bound);
  const IncrementalChecker checker(s);
  const auto depth_count = static_cast<std::size_t>(n_max + 1);
  if (checker.forbids_everything()) {
    std::vector<Integer> out(depth_count, 0);
    out[0] = 1;
    return out;
  }

  // Valid prefixes at the split depth.
  const int split = std::min(n_max, 3);
  std::vector<std::vector<int>> roots;
  std::vector<unsigned long long> shallow(depth_count, 0);
  {
    std::vector<int> word;
    std::function<void(int)> collect = [&](int depth) {
      ++shallow[static_cast<std::size_t>(depth)];
      if (depth == split) {
        roots.push_back(word);
        return;
      }
      for (int v = 0; v <= depth; ++v) {
        word.push_back(v);
        if (!checker.completes_occurrence(word)) collect(depth + 1);
        word.pop_back();
      }
    };
    collect(0);
    // Roots are recounted by the workers.
    shallow[static_cast<std::size_t>(split)] = 0;
  }

  auto search = [&](const std::vector<int>& root, std::vector<unsigned long long>& counts) {
    std::vector<int> word = root;
    word.reserve(depth_count);
    std::function<void()> rec = [&] {
      const auto depth = word.size();
      ++counts[depth];
      if (depth == static_cast<std::size_t>(n_max)) return;
      for (int v = 0; v <= static_cast<int>(depth); ++v) {
        word.push_back(v);
        if (!checker.completes_occurrence(word)) rec();
        word.pop_back();
      }
    };
    rec();
  };

  std::vector<unsigned long long> total = shallow;
  const unsigned pool = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(roots.size())));
  if (pool <= 1) {
    for (const auto& r : roots) search(r, total);
  } else {
    std::vector<std::vector<unsigned long long>> partial(pool, std::vector<unsigned long long>(depth_count, 0));
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < pool; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = next++; i < roots.size(); i = next++) search(roots[i], partial[w]);
      });
    }
    threads.clear();
    for (const auto& p : partial)
      for (std::size_t d = 0; d < depth_count; ++d) total[d] += p[d];
  }

  std::vector<Integer> out;
  out.reserve(depth_count);
  for (auto c : total) out.emplace_back(static_cast<unsigned long>(c));
  out[0] = 1;  // I_0(S) = 1 by convention, whatever S is.
  return out;
}

inline Integer count_avoiders(int n, const PatternSet& s, int bound = default_exhaustive_bound,
                              unsigned workers = 1) {
  return count_sequence(n, s, bound, workers).back();
}

/// Words of length k over {1..b}. `forbidden` holds classical patterns in
/// reduced form (the word pattern 212 is the Pattern 101).
struct WordConstraint {
  int length = 0;
  int max_letter = 1;
  PatternSet forbidden;
  bool surjective = false;
};

/// Parses word patterns written on letters 1..9 (e.g. "212,112,213") into reduced form.
inline PatternSet parse_word_patterns(std::string_view text) {
  PatternSet out;
  std::vector<int> word;
  auto flush = [&] {
    if (!word.empty()) out.insert(reduce(word));
    word.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      word.push_back(c - '0');
    } else if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '{' || c == '}') {
      flush();
    } else {
      throw Error("bad character in word pattern list '" + std::string(text) + "'");
    }
  }
  flush();
  return out;
}

inline Integer count_words(const WordConstraint& c, int bound = default_exhaustive_bound) {
  if (c.length < 0 || c.max_letter < 1) throw Error("word constraint needs k >= 0 and b >= 1");
  if (c.length > bound) throw BoundExceeded("k", c.length, bound);
  if (c.max_letter > bound) throw BoundExceeded("b", c.max_letter, bound);
  if (c.surjective && c.max_letter > c.length) return 0;
  const IncrementalChecker checker(c.forbidden);
  if (checker.forbids_everything()) return 0;

  std::vector<int> word;
  std::vector<int> uses(static_cast<std::size_t>(c.max_letter), 0);
  int distinct = 0;
  unsigned long long count = 0;
  std::function<void()> rec = [&] {
    const int placed = static_cast<int>(word.size());
    if (c.surjective && c.max_letter - distinct > c.length - placed) return;
    if (placed == c.length) {
      ++count;
      return;
    }
    for (int letter = 1; letter <= c.max_letter; ++letter) {
      word.push_back(letter);
      if (!checker.completes_occurrence(word)) {
        auto& u = uses[static_cast<std::size_t>(letter - 1)];
        if (u++ == 0) ++distinct;
        rec();
        if (--u == 0) --distinct;
      }
      word.pop_back();
    }
  };
  rec();
  return Integer(static_cast<unsigned long>(count));
}

}  // namespace invseq::oracle
