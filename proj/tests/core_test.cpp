#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "invseq/core.hpp"
#include "invseq/oracle.hpp"

using namespace invseq;

namespace {

InversionSequence sample() { return InversionSequence::validate({0, 0, 2, 1, 4, 0, 3, 4, 8}); }

std::vector<int> digits(const Pattern& p) { return {p.digits().begin(), p.digits().end()}; }

}  // namespace

TEST(Validate, AcceptsEmptyAndSample) {
  EXPECT_EQ(InversionSequence::validate(std::initializer_list<long>{}).size(), 0u);
  const auto s = sample();
  EXPECT_EQ(s.size(), 9u);
  EXPECT_EQ(s.to_string(), "002140348");
}

TEST(Validate, ReportsFirstBadPosition) {
  try {
    InversionSequence::validate({1});
    FAIL() << "expected rejection";
  } catch (const InvalidInversionSequence& e) {
    EXPECT_EQ(e.position(), 1u);
  }
  try {
    InversionSequence::validate({0, 1, 3, 5});
    FAIL() << "expected rejection";
  } catch (const InvalidInversionSequence& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(InversionSequence::validate({0, -1}), InvalidInversionSequence);
}

TEST(Phi, CountsLargerEarlierEntries) {
  EXPECT_EQ(phi({1, 2, 3, 4}), InversionSequence::validate({0, 0, 0, 0}));
  EXPECT_EQ(phi({2, 1}), InversionSequence::validate({0, 1}));
  EXPECT_EQ(phi({3, 1, 2}), InversionSequence::validate({0, 1, 1}));
  EXPECT_THROW(phi({1, 1}), Error);
  EXPECT_THROW(phi({1, 3}), Error);
}

TEST(Phi, IsABijectionOntoInversionSequences) {
  std::vector<int> perm{1, 2, 3, 4, 5};
  std::set<InversionSequence> images;
  do {
    images.insert(phi(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(images.size(), 120u);
}

TEST(Reduce, Examples) {
  EXPECT_EQ(digits(reduce({1, 0, 3, 5, 5, 7, 3})), (std::vector<int>{1, 0, 2, 3, 3, 4, 2}));
  EXPECT_EQ(digits(reduce({0, 0, 0})), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(digits(reduce({4, 4, 9})), (std::vector<int>{0, 0, 1}));
  EXPECT_TRUE(reduce(std::initializer_list<int>{}).empty());
}

TEST(Reduce, IdempotentAndOrderPreserving) {
  const std::vector<std::vector<int>> words{{5, 2, 2, 9, 0}, {3, 3, 1}, {7}, {2, 8, 8, 2, 6, 0}};
  for (const auto& w : words) {
    const Pattern once = reduce(w);
    EXPECT_EQ(reduce(once.digits()), once);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j)
        EXPECT_EQ((w[i] > w[j]) - (w[i] < w[j]), (once[i] > once[j]) - (once[i] < once[j]));
  }
}

TEST(Pattern, RejectsUnreducedDigits) {
  EXPECT_THROW(Pattern({0, 2}), Error);
  EXPECT_THROW(Pattern({1, 1}), Error);
  EXPECT_EQ(Pattern::parse("102").to_string(), "102");
}

TEST(ContainsPattern, Examples) {
  const auto s = sample();
  EXPECT_TRUE(contains_pattern(s, Pattern::parse("011")));
  EXPECT_FALSE(contains_pattern(s, Pattern::parse("110")));
  EXPECT_FALSE(contains_pattern(InversionSequence{}, Pattern::parse("0")));
  EXPECT_TRUE(contains_pattern(InversionSequence{}, Pattern{}));
}

TEST(ContainsPattern, MonotoneUnderRightExtension) {
  const Pattern p = Pattern::parse("101");
  std::vector<int> w;
  bool seen = false;
  for (int v : {0, 1, 0, 2, 1, 5, 3}) {
    w.push_back(v);
    const bool now = contains_pattern(w, p);
    if (seen) EXPECT_TRUE(now);
    seen = seen || now;
  }
  EXPECT_TRUE(seen);
}

TEST(AvoidsAll, Examples) {
  const auto s = sample();
  EXPECT_TRUE(avoids_all(s, PatternSet::parse("110")));
  EXPECT_TRUE(avoids_all(s, PatternSet{}));
  EXPECT_FALSE(avoids_all(s, PatternSet::parse("011,110")));
}

TEST(AvoidsTriple, Examples) {
  const auto any = RelationTriple::parse("-,-,-");
  EXPECT_FALSE(avoids_triple(sample(), any));
  EXPECT_TRUE(avoids_triple(InversionSequence::validate({0, 0, 0, 0, 0}), RelationTriple::parse("<,>,<")));
  const auto ge = RelationTriple::parse(">=,>=,>=");
  EXPECT_TRUE(avoids_triple(InversionSequence::validate({0, 1, 0}), ge));
  EXPECT_FALSE(avoids_triple(InversionSequence::validate({0, 0, 0}), ge));
}

TEST(TripleToPatternSet, Examples) {
  EXPECT_EQ(triple_to_pattern_set(RelationTriple::parse("<,>,<")), PatternSet::parse("021"));
  EXPECT_EQ(triple_to_pattern_set(RelationTriple::parse(">=,>=,>=")), PatternSet::parse("000,100,110,210"));
  EXPECT_EQ(triple_to_pattern_set(RelationTriple::parse(">,<=,!=")), PatternSet::parse("100,102,201"));
  EXPECT_EQ(triple_to_pattern_set(RelationTriple::parse("<,<,>")).to_string(), "()");
}

TEST(TripleToPatternSet, ThirteenLengthThreePatterns) {
  EXPECT_EQ(length3_patterns().size(), 13u);
  EXPECT_EQ(all_triples().size(), 343u);
}

// Rows of the catalogue of triples with previously unlisted sequences. The
// catalogue pairs (>,<,<=) with (102,201); by definition that triple forbids
// 101 and 102, and (102,201) is the set of (>,<,!=). Both readings are checked.
TEST(TripleToPatternSet, CatalogueRows) {
  const std::vector<std::pair<const char*, const char*>> rows{
      {"-,>=,>=", "000,010,100,110,120,210"}, {"<=,-,>=", "000,010,110,120"},
      {"-,>=,=", "000,010"},                  {"-,!=,>=", "010,101,110,120,201,210"},
      {"!=,-,>=", "010,100,101,120,201,210"}, {"!=,!=,>=", "010,101,120,201,210"},
      {"-,>,>=", "010,110,120,210"},          {"!=,>=,>=", "010,100,120,210"},
      {"<=,!=,>=", "010,110,120"},            {"<=,>,!=", "021,110,120"},
      {"!=,>,>=", "010,120,210"},             {"<,-,>=", "010,120"},
      {"-,>,=", "010"},                       {">,-,!=", "100,102,201,210"},
      {">,!=,-", "101,102,201,210"},          {"<,>,!=", "021,120"},
      {">,<=,!=", "100,102,201"},             {">,!=,!=", "102,201,210"},
      {">=,=,-", "000,100"},                  {"-,-,>", "100,110,120,201,210"},
      {">,<,!=", "102,201"},                  {"-,>=,>", "100,110,120,210"},
      {"-,!=,>", "110,120,201,210"},          {"!=,-,>", "100,120,201,210"},
      {"-,>,>", "110,120,210"},               {"!=,>=,>", "100,120,210"},
      {"<=,>,>", "110,120"},                  {">,<=,>=", "100,101,201"},
      {"!=,!=,>", "120,201,210"},             {"!=,>,>", "120,210"},
      {"<,-,>", "120"},                       {">,=,-", "100"},
      {"-,<,>", "201"},                       {">,>,-", "210"},
  };
  ASSERT_EQ(rows.size(), 34u);
  for (const auto& [triple, patterns] : rows) {
    EXPECT_EQ(triple_to_pattern_set(RelationTriple::parse(triple)), PatternSet::parse(patterns)) << triple;
  }
  EXPECT_EQ(triple_to_pattern_set(RelationTriple::parse(">,<,<=")), PatternSet::parse("101,102"));
}

TEST(AvoidsTriple, AgreesWithPatternSetExhaustively) {
  std::vector<InversionSequence> everything;
  for (int n = 0; n <= 8; ++n) {
    auto level = oracle::enumerate_avoiders(n, PatternSet{});
    everything.insert(everything.end(), level.begin(), level.end());
  }
  ASSERT_EQ(everything.size(), 46234u);
  for (const auto& t : all_triples()) {
    const PatternSet s = triple_to_pattern_set(t);
    for (const auto& seq : everything) {
      ASSERT_EQ(avoids_triple(seq, t), avoids_all(seq, s)) << t.to_string() << " " << seq.to_string();
    }
  }
}

TEST(RelationTriple, ParsesUnicodeAndAscii) {
  EXPECT_EQ(RelationTriple::parse("(>, ≤, ≠)"), RelationTriple::parse(">,<=,!="));
  EXPECT_EQ(RelationTriple::parse(">,<=,!=").to_string(), "(>,<=,!=)");
  EXPECT_THROW(RelationTriple::parse(">,<="), Error);
  EXPECT_THROW(RelationTriple::parse(">,<=,?"), Error);
}
