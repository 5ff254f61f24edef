#pragma once

// Inversion sequences, word patterns and triples of binary relations.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/numeric.hpp"

namespace invseq {

/// Raised by InversionSequence::validate; `position` is 1-based.
class InvalidInversionSequence : public Error {
 public:
  InvalidInversionSequence(std::size_t position, long value)
      : Error("entry " + std::to_string(value) + " at position " + std::to_string(position) +
              " violates 0 <= a_i < i"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

inline int order_sign(long a, long b) noexcept { return (a > b) - (a < b); }

inline std::string digits_to_string(std::span<const int> values) {
  bool wide = std::any_of(values.begin(), values.end(), [](int v) { return v > 9; });
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace detail

/// A sequence (a_1,...,a_n) with 0 <= a_i < i. Stored 0-indexed.
class InversionSequence {
 public:
  InversionSequence() = default;

  static InversionSequence validate(std::span<const long> values) {
    InversionSequence seq;
    seq.values_.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] < 0 || values[i] >= static_cast<long>(i + 1)) {
        throw InvalidInversionSequence(i + 1, values[i]);
      }
      seq.values_.push_back(static_cast<int>(values[i]));
    }
    return seq;
  }

  static InversionSequence validate(std::initializer_list<long> values) {
    return validate(std::span<const long>(values.begin(), values.size()));
  }

  static InversionSequence validate(const std::vector<int>& values) {
    std::vector<long> wide(values.begin(), values.end());
    return validate(std::span<const long>(wide));
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const noexcept { return values_; }

  /// Appends without re-checking earlier entries; throws if `value` is out of range.
  void push_back(int value) {
    if (value < 0 || value > static_cast<int>(values_.size())) {
      throw InvalidInversionSequence(values_.size() + 1, value);
    }
    values_.push_back(value);
  }

  std::string to_string() const { return detail::digits_to_string(values_); }

  auto operator<=>(const InversionSequence&) const = default;

 private:
  std::vector<int> values_;
};

/// A reduced word: every digit from 0 to max(digits) occurs.
class Pattern {
 public:
  Pattern() = default;

  explicit Pattern(std::vector<int> digits) : digits_(std::move(digits)) {
    int top = -1;
    for (int d : digits_) {
      if (d < 0) throw Error("pattern digits must be nonnegative");
      top = std::max(top, d);
    }
    std::vector<bool> seen(static_cast<std::size_t>(top + 1), false);
    for (int d : digits_) seen[static_cast<std::size_t>(d)] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw Error("pattern " + detail::digits_to_string(digits_) +
                  " does not contain every digit from 0 to its maximum");
    }
  }

  Pattern(std::initializer_list<int> digits) : Pattern(std::vector<int>(digits)) {}

  /// Parses a digit string such as "102".
  static Pattern parse(std::string_view text) {
    std::vector<int> digits;
    for (char c : text) {
      if (c < '0' || c > '9') throw Error("bad pattern digit in '" + std::string(text) + "'");
      digits.push_back(c - '0');
    }
    return Pattern(std::move(digits));
  }

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  int operator[](std::size_t i) const { return digits_[i]; }
  std::span<const int> digits() const noexcept { return digits_; }
  std::string to_string() const { return detail::digits_to_string(digits_); }

  auto operator<=>(const Pattern&) const = default;

 private:
  std::vector<int> digits_;
};

/// A finite set of patterns, kept sorted.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<Pattern> patterns) : patterns_(patterns) {}

  /// Parses "100,102,201", "(100, 102, 201)" or "100 102 201".
  static PatternSet parse(std::string_view text) {
    PatternSet out;
    std::string token;
    auto flush = [&] {
      if (!token.empty()) out.insert(Pattern::parse(token));
      token.clear();
    };
    for (char c : text) {
      if (c >= '0' && c <= '9') {
        token += c;
      } else if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '{' || c == '}') {
        flush();
      } else {
        throw Error("bad character in pattern set '" + std::string(text) + "'");
      }
    }
    flush();
    return out;
  }

  bool insert(const Pattern& p) { return patterns_.insert(p).second; }
  bool contains(const Pattern& p) const { return patterns_.count(p) != 0; }
  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

  std::string to_string() const {
    std::string out = "(";
    bool first = true;
    for (const auto& p : patterns_) {
      if (!first) out += ", ";
      out += p.to_string();
      first = false;
    }
    return out + ")";
  }

  auto operator<=>(const PatternSet&) const = default;

 private:
  std::set<Pattern> patterns_;
};

/// Order-isomorphic reduction: smallest entries become 0, the next smallest 1, ...
inline Pattern reduce(std::span<const int> word) {
  std::vector<int> distinct(word.begin(), word.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> out;
  out.reserve(word.size());
  for (int w : word) {
    out.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), w) -
                                   distinct.begin()));
  }
  return Pattern(std::move(out));
}

inline Pattern reduce(std::initializer_list<int> word) {
  return reduce(std::span<const int>(word.begin(), word.size()));
}

namespace detail {

// Backtracking subsequence search. Position t of the pattern is matched at
// some index > chosen[t-1]; every new choice is checked against all earlier
// ones so inconsistent partial embeddings are abandoned immediately.
inline bool embed(std::span<const int> word, std::span<const int> pattern, std::size_t t,
                  std::size_t start, std::vector<std::size_t>& chosen) {
  if (t == pattern.size()) return true;
  std::size_t remaining = pattern.size() - t;
  for (std::size_t j = start; j + remaining <= word.size(); ++j) {
    bool ok = true;
    for (std::size_t s = 0; s < t && ok; ++s) {
      ok = order_sign(word[chosen[s]], word[j]) == order_sign(pattern[s], pattern[t]);
    }
    if (!ok) continue;
    chosen[t] = j;
    if (embed(word, pattern, t + 1, j + 1, chosen)) return true;
  }
  return false;
}

}  // namespace detail

/// True iff some (not necessarily consecutive) subsequence of `word` reduces to `p`.
inline bool contains_pattern(std::span<const int> word, const Pattern& p) {
  if (p.empty()) return true;
  std::vector<std::size_t> chosen(p.size());
  return detail::embed(word, p.digits(), 0, 0, chosen);
}

inline bool contains_pattern(const InversionSequence& seq, const Pattern& p) {
  return contains_pattern(seq.values(), p);
}

inline bool avoids_all(std::span<const int> word, const PatternSet& s) {
  return std::none_of(s.begin(), s.end(),
                      [&](const Pattern& p) { return contains_pattern(word, p); });
}

inline bool avoids_all(const InversionSequence& seq, const PatternSet& s) {
  return avoids_all(seq.values(), s);
}

enum class Relation { lt, gt, le, ge, eq, ne, any };

inline constexpr std::array<Relation, 7> all_relations = {
    Relation::lt, Relation::gt, Relation::le, Relation::ge,
    Relation::eq, Relation::ne, Relation::any};

constexpr bool holds(Relation r, long a, long b) noexcept {
  switch (r) {
    case Relation::lt: return a < b;
    case Relation::gt: return a > b;
    case Relation::le: return a <= b;
    case Relation::ge: return a >= b;
    case Relation::eq: return a == b;
    case Relation::ne: return a != b;
    case Relation::any: return true;
  }
  return false;
}

constexpr std::string_view symbol(Relation r) noexcept {
  switch (r) {
    case Relation::lt: return "<";
    case Relation::gt: return ">";
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::eq: return "=";
    case Relation::ne: return "!=";
    case Relation::any: return "-";
  }
  return "?";
}

inline Relation parse_relation(std::string_view text) {
  if (text == "<" || text == "lt") return Relation::lt;
  if (text == ">" || text == "gt") return Relation::gt;
  if (text == "<=" || text == "le" || text == "≤") return Relation::le;
  if (text == ">=" || text == "ge" || text == "≥") return Relation::ge;
  if (text == "=" || text == "==" || text == "eq") return Relation::eq;
  if (text == "!=" || text == "ne" || text == "≠") return Relation::ne;
  if (text == "-" || text == "any") return Relation::any;
  throw Error("unknown relation '" + std::string(text) + "'");
}

/// Forbids i < j < k with a_i R1 a_j, a_j R2 a_k and a_i R3 a_k.
struct RelationTriple {
  Relation first = Relation::any;   // a_i vs a_j
  Relation second = Relation::any;  // a_j vs a_k
  Relation third = Relation::any;   // a_i vs a_k

  bool matches(long ai, long aj, long ak) const noexcept {
    return holds(first, ai, aj) && holds(second, aj, ak) && holds(third, ai, ak);
  }

  std::string to_string() const {
    return "(" + std::string(symbol(first)) + "," + std::string(symbol(second)) + "," +
           std::string(symbol(third)) + ")";
  }

  /// Parses "(>,<=,!=)" or ">,<=,!=".
  static RelationTriple parse(std::string_view text) {
    std::string body(text);
    body.erase(std::remove_if(body.begin(), body.end(),
                              [](char c) { return c == '(' || c == ')' || c == ' '; }),
               body.end());
    std::vector<std::string> parts;
    std::string cur;
    for (char c : body) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw Error("a relation triple needs exactly three relations");
    return {parse_relation(parts[0]), parse_relation(parts[1]), parse_relation(parts[2])};
  }

  auto operator<=>(const RelationTriple&) const = default;
};

/// All 7^3 triples in lexicographic order of `all_relations`.
inline std::vector<RelationTriple> all_triples() {
  std::vector<RelationTriple> out;
  out.reserve(343);
  for (auto r1 : all_relations)
    for (auto r2 : all_relations)
      for (auto r3 : all_relations) out.push_back({r1, r2, r3});
  return out;
}

inline bool avoids_triple(std::span<const int> word, const RelationTriple& t) {
  const std::size_t n = word.size();
  for (std::size_t k = 2; k < n; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (t.matches(word[i], word[j], word[k])) return false;
  return true;
}

inline bool avoids_triple(const InversionSequence& seq, const RelationTriple& t) {
  return avoids_triple(seq.values(), t);
}

/// Every reduced word of the given length, in lexicographic order.
inline std::vector<Pattern> reduced_words(std::size_t length) {
  std::vector<Pattern> out;
  std::vector<int> w(length, 0);
  const int base = static_cast<int>(length);
  for (;;) {
    if (std::ranges::equal(reduce(w).digits(), w)) out.emplace_back(w);
    std::size_t pos = length;
    while (pos > 0 && ++w[pos - 1] == base) w[--pos] = 0;
    if (pos == 0) return out;
  }
}

inline const std::vector<Pattern>& length3_patterns() {
  static const std::vector<Pattern> patterns = reduced_words(3);
  return patterns;
}

inline PatternSet triple_to_pattern_set(const RelationTriple& t) {
  PatternSet out;
  for (const auto& p : length3_patterns()) {
    if (t.matches(p[0], p[1], p[2])) out.insert(p);
  }
  return out;
}

/// a_i = #{ j < i : pi_j > pi_i } for a permutation of 1..n.
inline InversionSequence phi(std::span<const int> permutation) {
  const std::size_t n = permutation.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : permutation) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw Error("phi: input is not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (permutation[j] > permutation[i]) ++out[i];
  return InversionSequence::validate(out);
}

inline InversionSequence phi(std::initializer_list<int> permutation) {
  return phi(std::span<const int>(permutation.begin(), permutation.size()));
}

}  // namespace invseq
