#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include "invseq/numeric.hpp"

namespace invseq::gentree {

/// Label kinds. Right-grown classes use a..e (with the dagger and star
/// variants), s/t or p/q; left-grown classes use a/b or a plain tuple.
enum class Tag : std::uint8_t {
  plain,
  a,
  b,
  c,
  d,
  e,
  c_dagger,
  d_dagger,
  e_dagger,
  e_star,
  s,
  t,
  p,
  q,
};

inline std::string_view tag_name(Tag tag) {
  switch (tag) {
    case Tag::plain: return "";
    case Tag::a: return "a";
    case Tag::b: return "b";
    case Tag::c: return "c";
    case Tag::d: return "d";
    case Tag::e: return "e";
    case Tag::c_dagger: return "c†";
    case Tag::d_dagger: return "d†";
    case Tag::e_dagger: return "e†";
    case Tag::e_star: return "e*";
    case Tag::s: return "s";
    case Tag::t: return "t";
    case Tag::p: return "p";
    case Tag::q: return "q";
  }
  return "?";
}

struct Label {
  Tag tag = Tag::plain;
  std::uint8_t arity = 0;
  std::array<int, 3> params{};

  Label() = default;
  Label(Tag t, std::initializer_list<int> values) : tag(t) {
    if (values.size() > params.size()) throw Error("label takes at most three parameters");
    for (int v : values) params[arity++] = v;
  }

  int operator[](std::size_t i) const { return params[i]; }

  /// Whether the first parameter is the length n of the sequences the label stands for.
  bool carries_length() const {
    if (tag == Tag::a) return arity == 2;
    return tag == Tag::s || tag == Tag::t || tag == Tag::p || tag == Tag::q;
  }

  friend auto operator<=>(const Label&, const Label&) = default;

  /// "(3,1)_a", "(2)_e†", "(4,0)".
  std::string to_string() const {
    std::string out = "(";
    for (std::uint8_t i = 0; i < arity; ++i) {
      if (i) out += ',';
      out += std::to_string(params[i]);
    }
    out += ')';
    if (tag != Tag::plain) {
      out += '_';
      out += tag_name(tag);
    }
    return out;
  }
};

}  // namespace invseq::gentree
