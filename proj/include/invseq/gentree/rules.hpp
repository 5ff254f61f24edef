#pragma once

// Succession rules for the fourteen classes. Right-grown rules append an
// entry; left-grown rules prepend one and shift the rest up.

#include <vector>

#include "invseq/combinat.hpp"
#include "invseq/gentree/succession_rule.hpp"

namespace invseq::gentree {

namespace rules {

enum class RightVariant { plain, dagger, star };

// Shared by 1176 (plain), 1253 (dagger) and 1016 (star). A sequence of length
// n with maximum h has label (n,h)_a; b..e label auxiliary objects carrying a
// committed value k.
inline void expand_right_family(RightVariant v, const Label& l, std::vector<Child>& out) {
  const Tag e_tag = v == RightVariant::plain    ? Tag::e
                    : v == RightVariant::dagger ? Tag::e_dagger
                                                : Tag::e_star;
  const Tag c_tag = v == RightVariant::dagger ? Tag::c_dagger : Tag::c;
  const Tag d_tag = v == RightVariant::dagger ? Tag::d_dagger : Tag::d;
  switch (l.tag) {
    case Tag::a: {
      const int n = l[0];
      const int h = l[1];
      for (int i = h; i <= n; ++i) out.push_back({Label(Tag::a, {n + 1, i}), 1});
      for (int i = h; i < n; ++i) out.push_back({Label(Tag::b, {i}), n - i});
      for (int i = 0; i < h; ++i) out.push_back({Label(e_tag, {i}), 1});
      break;
    }
    case Tag::b:
      out.push_back({l, 1});
      out.push_back({Label(c_tag, {l[0]}), 1});
      break;
    case Tag::c:
      out.push_back({Label(d_tag, {l[0]}), 1});
      break;
    case Tag::c_dagger:
      out.push_back({l, 1});
      out.push_back({Label(Tag::d_dagger, {l[0]}), 1});
      break;
    case Tag::d:
      out.push_back({l, 1});
      if (v == RightVariant::plain)
        for (int i = 0; i < l[0]; ++i) out.push_back({Label(Tag::e, {i}), 1});
      break;
    case Tag::d_dagger:
      out.push_back({l, 2});
      break;
    case Tag::e:
      for (int i = 0; i < l[0]; ++i) out.push_back({Label(Tag::e, {i}), 1});
      break;
    case Tag::e_dagger:
      out.push_back({l, 1});
      break;
    case Tag::e_star:
      break;
    default:
      throw RuleError("unexpected label " + l.to_string());
  }
}

// (n,h,k)_s / _t: maximum h, k the largest entry below h (0 when h = 0).
inline void expand_830(const Label& l, std::vector<Child>& out) {
  const int n = l[0], h = l[1], k = l[2];
  out.push_back({Label(Tag::s, {n + 1, h, k}), 1});
  for (int i = h + 1; i <= n; ++i) out.push_back({Label(Tag::s, {n + 1, i, h}), 1});
  if (l.tag == Tag::s) {
    if (h > 0)
      for (int i = k + 1; i < h; ++i) out.push_back({Label(Tag::t, {n + 1, h, i}), 1});
  } else {
    for (int i = k; i < h; ++i) out.push_back({Label(Tag::t, {n + 1, h, i}), 1});
  }
}

// (n,h,k)_p / _q: maximum h, k the number of values still available below h.
inline void expand_2106(const Label& l, std::vector<Child>& out) {
  const int n = l[0], h = l[1], k = l[2];
  if (l.tag == Tag::p) {
    for (int i = h; i <= n; ++i) out.push_back({Label(Tag::p, {n + 1, i, k + i - h}), 1});
  } else {
    for (int i = h + 1; i <= n; ++i) out.push_back({Label(Tag::p, {n + 1, i, k + i - h - 1}), 1});
  }
  for (int i = 0; i < k; ++i) out.push_back({Label(Tag::q, {n + 1, h, i}), 1});
}

inline void expand_663A(const Label& l, std::vector<Child>& out) {
  const int p = l[0];
  if (l.tag == Tag::a) {
    for (int k = 1; k <= p + 1; ++k) out.push_back({Label(Tag::a, {k}), 1});
    for (int k = 1; k < p; ++k) out.push_back({Label(Tag::b, {k}), 1});
  } else {
    out.push_back({Label(Tag::a, {p + 1}), 1});
    out.push_back({Label(Tag::b, {p + 1}), 1});
  }
}

inline void expand_1420(const Label& l, std::vector<Child>& out) {
  const int p = l[0];
  for (int i = 0; i <= p; ++i) out.push_back({Label(Tag::a, {p + 1 - i}), 1});
  if (l.tag == Tag::b) out.push_back({Label(Tag::b, {p + 1}), 1});
  for (int i = 2; i <= p; ++i) out.push_back({Label(Tag::b, {p + 1 - i}), 1});
}

inline Label pair(int p, int s) { return Label(Tag::plain, {p, s}); }

// (p,s): p leading zeros, s pending commitments. 733 only branches from s = 0.
inline void expand_1833A(bool only_uncommitted, const Label& l, std::vector<Child>& out) {
  const int p = l[0], s = l[1];
  out.push_back({pair(p + 1, s), 1});
  if (s > 0) out.push_back({pair(p + 1, 0), 1});
  if (only_uncommitted && s != 0) return;
  for (int m = 0; m < p; ++m)
    for (int k = 0; k <= m; ++k) out.push_back({pair(p - m, k), 1});
}

inline void expand_214(const Label& l, std::vector<Child>& out) {
  const int p = l[0], s = l[1];
  out.push_back({pair(p + 1, s), 1});
  if (s > 0) {
    out.push_back({pair(p + 1, s - 1), 1});
    return;
  }
  for (int m = 0; m < p; ++m) out.push_back({pair(p - m, m), 1});
  for (int m = 0; m + 1 < p; ++m) out.push_back({pair(p - m - 1, m), 1});
}

inline void expand_1509(const Label& l, std::vector<Child>& out) {
  const int p = l[0], s = l[1];
  out.push_back({pair(p + 1, s), 1});
  if (s > 0) out.push_back({pair(p + 1, s - 1), 1});
  if (s > 1) return;
  for (int i = 0; i < p; ++i) out.push_back({pair(p - i, 0), 1});
  for (int m = 1; m < p; ++m)
    for (int k = 0; k < m; ++k) out.push_back({pair(p - m, m - k), 1});
}

inline void expand_1953A(const Label& l, std::vector<Child>& out) {
  const int p = l[0], s = l[1];
  for (int i = 0; i <= s; ++i) out.push_back({pair(p + 1, s - i), 1});
  for (int m = 1; m <= p; ++m)
    for (int k = 0; k < m; ++k) out.push_back({pair(p + 1 - m, k), 1});
}

// (p,c): p leading zeros, c outstanding commitments. From (p,0) the children
// (p-l, b) come with multiplicity m_{l,b} (759) or w_{l,b} (247).
inline void expand_759(bool weighted_w, const Label& l, std::vector<Child>& out) {
  const int p = l[0], c = l[1];
  out.push_back({pair(p + 1, c), 1});
  if (c > 0) {
    out.push_back({pair(p + 1, c - 1), 1});
    return;
  }
  for (int m = 0; m < p; ++m) {
    for (int b = 0; b <= m; ++b) {
      Integer mult = weighted_w ? combinat::multiplicity_w(m, b) : combinat::multiplicity_m(m, b);
      if (mult != 0) out.push_back({pair(p - m, b), std::move(mult)});
    }
  }
}

}  // namespace rules

inline SuccessionRule make_rule(ClassId id) {
  using namespace rules;
  SuccessionRule r;
  r.id = id;
  auto tagged = [](std::initializer_list<Tag> tags) {
    std::vector<Tag> keep(tags);
    return [keep](const Label& l) {
      for (Tag t : keep)
        if (l.tag == t) return true;
      return false;
    };
  };
  auto all = [](const Label&) { return true; };
  switch (id) {
    case ClassId::c1176:
      r.root = Label(Tag::a, {0, 0});
      r.expand = [](const Label& l, auto& out) { expand_right_family(RightVariant::plain, l, out); };
      r.counted = tagged({Tag::a, Tag::d, Tag::e});
      break;
    case ClassId::c1253:
      r.root = Label(Tag::a, {0, 0});
      r.expand = [](const Label& l, auto& out) { expand_right_family(RightVariant::dagger, l, out); };
      r.counted = tagged({Tag::a, Tag::d_dagger, Tag::e_dagger});
      break;
    case ClassId::c1016:
      r.root = Label(Tag::a, {0, 0});
      r.expand = [](const Label& l, auto& out) { expand_right_family(RightVariant::star, l, out); };
      r.counted = tagged({Tag::a, Tag::d, Tag::e_star});
      break;
    case ClassId::c830:
      r.root = Label(Tag::s, {0, 0, 0});
      r.expand = expand_830;
      r.counted = all;
      break;
    case ClassId::c2106:
      r.root = Label(Tag::p, {0, 0, 0});
      r.expand = expand_2106;
      r.counted = all;
      break;
    case ClassId::c663A:
      r.root = Label(Tag::a, {0});
      r.expand = expand_663A;
      r.counted = tagged({Tag::a});
      break;
    case ClassId::c1420:
      r.root = Label(Tag::a, {0});
      r.expand = expand_1420;
      r.counted = all;
      break;
    case ClassId::c1833A:
      r.root = pair(0, 0);
      r.expand = [](const Label& l, auto& out) { expand_1833A(false, l, out); };
      r.counted = all;
      break;
    case ClassId::c733:
      r.root = pair(0, 0);
      r.expand = [](const Label& l, auto& out) { expand_1833A(true, l, out); };
      r.counted = [](const Label& l) { return l[1] == 0; };
      break;
    case ClassId::c214:
      r.root = pair(0, 0);
      r.expand = expand_214;
      r.counted = [](const Label& l) { return l[1] == 0 && l[0] <= 2; };
      break;
    case ClassId::c1509:
      r.root = pair(0, 0);
      r.expand = expand_1509;
      r.counted = [](const Label& l) { return l[1] <= 1; };
      break;
    case ClassId::c1953A:
      r.root = pair(0, 0);
      r.expand = expand_1953A;
      r.counted = all;
      break;
    case ClassId::c759:
      r.root = pair(0, 0);
      r.expand = [](const Label& l, auto& out) { expand_759(false, l, out); };
      r.counted = [](const Label& l) { return l[1] == 0; };
      break;
    case ClassId::c247:
      r.root = pair(0, 0);
      r.expand = [](const Label& l, auto& out) { expand_759(true, l, out); };
      r.counted = [](const Label& l) { return l[1] == 0 && l[0] <= 2; };
      break;
  }
  return r;
}

}  // namespace invseq::gentree
