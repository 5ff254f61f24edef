#include <gtest/gtest.h>

#include <vector>

#include "invseq/combinat.hpp"
#include "invseq/core.hpp"
#include "invseq/oracle.hpp"

using namespace invseq;
using namespace invseq::oracle;

TEST(EnumerateAvoiders, Examples) {
  const auto zero = enumerate_avoiders(0, PatternSet::parse("000,010"));
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].empty());
  EXPECT_EQ(enumerate_avoiders(5, PatternSet::parse("001")).size(), 16u);
  EXPECT_EQ(enumerate_avoiders(3, PatternSet{}).size(), 6u);
}

TEST(EnumerateAvoiders, LexicographicOrder) {
  const auto all = enumerate_avoiders(4, PatternSet{});
  ASSERT_EQ(all.size(), 24u);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1], all[i]);
}

TEST(EnumerateAvoiders, PowersOfTwoFor001) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(enumerate_avoiders(n, PatternSet::parse("001")).size(), std::size_t{1} << (n - 1));
  }
}

TEST(EnumerateAvoiders, RespectsBound) {
  EXPECT_THROW(enumerate_avoiders(11, PatternSet{}), BoundExceeded);
  EXPECT_NO_THROW(enumerate_avoiders(2, PatternSet{}, 2));
  EXPECT_THROW(count_sequence(4, PatternSet{}, 3), BoundExceeded);
}

TEST(CountAvoiders, Examples) {
  EXPECT_EQ(count_avoiders(7, PatternSet::parse("100,102,201")), 1176);
  EXPECT_EQ(count_avoiders(7, PatternSet::parse("010,101,110,120,201,210")), 663);
  EXPECT_EQ(count_avoiders(6, PatternSet::parse("110,120,201,210")), 396);
}

TEST(CountAvoiders, AgreesWithEnumeration) {
  for (const auto& t : all_triples()) {
    const PatternSet s = triple_to_pattern_set(t);
    const auto counts = count_sequence(7, s);
    for (int n = 0; n <= 7; ++n) {
      ASSERT_EQ(counts[static_cast<std::size_t>(n)], Integer(enumerate_avoiders(n, s).size()))
          << t.to_string() << " n=" << n;
    }
  }
}

TEST(CountAvoiders, ThreadedMatchesSerial) {
  const PatternSet s = PatternSet::parse("110,120,210");
  EXPECT_EQ(count_sequence(9, s, 10, 4), count_sequence(9, s, 10, 1));
}

TEST(CountAvoiders, EmptyPatternForbidsEverything) {
  PatternSet s;
  s.insert(Pattern{});
  const auto counts = count_sequence(3, s);
  EXPECT_EQ(counts, (std::vector<Integer>{1, 0, 0, 0}));
}

TEST(CountAvoiders, SingletonWilfPairs) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(count_avoiders(n, PatternSet::parse("101")), count_avoiders(n, PatternSet::parse("110")));
    EXPECT_EQ(count_avoiders(n, PatternSet::parse("201")), count_avoiders(n, PatternSet::parse("210")));
  }
}

TEST(CountAvoiders, LongerPatternsUseFallback) {
  const PatternSet s = PatternSet::parse("0000");
  const auto counts = count_sequence(7, s);
  for (int n = 0; n <= 7; ++n)
    EXPECT_EQ(counts[static_cast<std::size_t>(n)], Integer(enumerate_avoiders(n, s).size()));
}

TEST(CountWords, Examples) {
  EXPECT_EQ(count_words({3, 3, parse_word_patterns("212,112,213"), true}), 5);
  EXPECT_EQ(count_words({2, 1, parse_word_patterns("212,112,213"), true}), 1);
  EXPECT_EQ(count_words({3, 2, parse_word_patterns("111,212,112,213"), true}), 4);
}

TEST(CountWords, UnrestrictedIsPower) {
  for (int k = 0; k <= 6; ++k)
    for (int b = 1; b <= 4; ++b) {
      Integer expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(k));
      EXPECT_EQ(count_words({k, b, PatternSet{}, false}), expected);
    }
}

TEST(CountWords, MatchesCommitmentFormulas) {
  const PatternSet r12 = parse_word_patterns("212,112,213");
  const PatternSet r13 = parse_word_patterns("111,212,112,213");
  for (int k = 1; k <= 9; ++k) {
    for (int b = 1; b <= k; ++b) {
      EXPECT_EQ(count_words({k, b, r12, true}), combinat::words_R1R2(k, b)) << k << "," << b;
      EXPECT_EQ(count_words({k, b, r13, true}), combinat::words_R1R3(k, b)) << k << "," << b;
    }
  }
}
