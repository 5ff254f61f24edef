#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "invseq/core.hpp"

namespace invseq::gentree {

/// The fourteen avoidance classes that have a succession rule here, named by
/// their index in the standard catalogue of relation-triple classes.
enum class ClassId {
  c214,
  c247,
  c663A,
  c733,
  c759,
  c830,
  c1016,
  c1176,
  c1253,
  c1420,
  c1509,
  c1833A,
  c1953A,
  c2106,
};

enum class Growth { right, left };

struct ClassInfo {
  ClassId id;
  std::string_view index;
  std::string_view triple;
  std::string_view patterns;
  Growth growth;
  /// Degree of the minimal polynomial of the generating function; 0 when not algebraic.
  int algebraic_degree;
  /// Pattern set of a distinct class with the same counting sequence, if any.
  std::string_view wilf_partner_index;
  std::string_view wilf_partner_patterns;
};

inline constexpr std::array<ClassInfo, 14> class_table = {{
    {ClassId::c214, "214", "(-,>=,>=)", "000,010,100,110,120,210", Growth::left, 0, "", ""},
    {ClassId::c247, "247", "(<=,-,>=)", "000,010,110,120", Growth::left, 0, "", ""},
    {ClassId::c663A, "663A", "(-,!=,>=)", "010,101,110,120,201,210", Growth::left, 3, "663B",
     "010,100,101,120,201,210"},
    {ClassId::c733, "733", "(!=,!=,>=)", "010,101,120,201,210", Growth::left, 4, "", ""},
    {ClassId::c759, "759", "(<=,!=,>=)", "010,110,120", Growth::left, 0, "", ""},
    {ClassId::c830, "830", "(!=,>,>=)", "010,120,210", Growth::right, 0, "", ""},
    {ClassId::c1016, "1016", "(>,-,!=)", "100,102,201,210", Growth::right, 2, "", ""},
    {ClassId::c1176, "1176", "(>,<=,!=)", "100,102,201", Growth::right, 2, "", ""},
    {ClassId::c1253, "1253", "(>,!=,!=)", "102,201,210", Growth::right, 2, "", ""},
    {ClassId::c1420, "1420", "(-,-,>)", "100,110,120,201,210", Growth::left, 3, "", ""},
    {ClassId::c1509, "1509", "(-,>=,>)", "100,110,120,210", Growth::left, 0, "", ""},
    {ClassId::c1833A, "1833A", "(-,!=,>)", "110,120,201,210", Growth::left, 6, "1833B",
     "100,120,201,210"},
    {ClassId::c1953A, "1953A", "(-,>,>)", "110,120,210", Growth::left, 0, "1953B",
     "100,120,210"},
    {ClassId::c2106, "2106", "(>,<=,>=)", "100,101,201", Growth::right, 0, "", ""},
}};

inline const ClassInfo& info(ClassId id) {
  return *std::find_if(class_table.begin(), class_table.end(),
                       [id](const ClassInfo& c) { return c.id == id; });
}

inline std::string_view name(ClassId id) { return info(id).index; }

inline PatternSet pattern_set(ClassId id) { return PatternSet::parse(info(id).patterns); }

inline RelationTriple triple(ClassId id) { return RelationTriple::parse(info(id).triple); }

inline bool is_algebraic(ClassId id) { return info(id).algebraic_degree > 0; }

/// Accepts "1176", "C1176", "663a", or a relation triple such as ">,<=,!=" whose
/// pattern set is that of one of the fourteen classes.
inline std::optional<ClassId> find_class(std::string_view selector) {
  std::string key(selector);
  if (!key.empty() && (key[0] == 'C' || key[0] == 'c') && key.size() > 1 &&
      std::isdigit(static_cast<unsigned char>(key[1]))) {
    key.erase(0, 1);
  }
  for (auto& ch : key) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (const auto& c : class_table) {
    if (c.index == key) return c.id;
  }
  if (selector.find(',') != std::string_view::npos) {
    RelationTriple t;
    try {
      t = RelationTriple::parse(selector);
    } catch (const Error&) {
      return std::nullopt;
    }
    const PatternSet s = triple_to_pattern_set(t);
    for (const auto& c : class_table) {
      if (pattern_set(c.id) == s) return c.id;
    }
  }
  return std::nullopt;
}

inline ClassId parse_class(std::string_view selector) {
  if (auto id = find_class(selector)) return *id;
  throw Error("unknown class '" + std::string(selector) + "'");
}

}  // namespace invseq::gentree
