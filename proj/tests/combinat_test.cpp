#include <gtest/gtest.h>

#include "invseq/combinat.hpp"
#include "invseq/oracle.hpp"

using namespace invseq;
using namespace invseq::combinat;

TEST(Catalan, Values) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(5), 42);
}

TEST(Catalan, Recurrence) {
  for (long n = 0; n < 25; ++n) {
    Integer s = 0;
    for (long i = 0; i <= n; ++i) s += catalan(i) * catalan(n - i);
    EXPECT_EQ(catalan(n + 1), s);
  }
}

TEST(WordsR1R2, Values) {
  for (long k = 1; k <= 12; ++k) EXPECT_EQ(words_R1R2(k, 1), 1);
  for (long b = 1; b <= 12; ++b) EXPECT_EQ(words_R1R2(b, b), catalan(b));
  EXPECT_EQ(words_R1R2(4, 2), 6);
  EXPECT_EQ(words_R1R2(3, 4), 0);
}

TEST(WordsR1R3, Values) {
  for (long b = 1; b <= 12; ++b) {
    EXPECT_EQ(words_R1R3(b, b), catalan(b));
    EXPECT_EQ(words_R1R3(2 * b + 1, b), 0);
  }
  EXPECT_EQ(words_R1R3(3, 2), 4);
}

TEST(Multiplicities, Values) {
  EXPECT_EQ(multiplicity_m(0, 0), 1);
  for (long l = 0; l < 10; ++l) EXPECT_EQ(multiplicity_m(l, 0), 1);
  EXPECT_EQ(multiplicity_m(4, 2), 12);
  EXPECT_EQ(multiplicity_w(0, 0), 1);
  EXPECT_EQ(multiplicity_w(3, 2), 6);
  EXPECT_EQ(multiplicity_w(2, 1), 2);
  EXPECT_EQ(multiplicity_w(5, 1), 0);
}

TEST(Multiplicities, PartialSumsOfWordCounts) {
  for (long l = 0; l <= 20; ++l) {
    for (long b = 0; b <= l; ++b) {
      Integer s = 0;
      for (long k = b; k <= l; ++k) s += words_R1R2(k, b);
      EXPECT_EQ(multiplicity_m(l, b), s) << l << "," << b;
      if (l > b) EXPECT_EQ(multiplicity_m(l, b) - multiplicity_m(l - 1, b), words_R1R2(l, b));
      EXPECT_EQ(multiplicity_w(l, b), words_R1R3(l - 1, b) + words_R1R3(l, b)) << l << "," << b;
    }
  }
}

TEST(WordCounts, AgreeWithEnumeration) {
  const PatternSet r12 = oracle::parse_word_patterns("212,112,213");
  const PatternSet r13 = oracle::parse_word_patterns("111,212,112,213");
  for (int k = 1; k <= 9; ++k) {
    for (int b = 1; b <= k; ++b) {
      EXPECT_EQ(words_R1R2(k, b), oracle::count_words({k, b, r12, true}));
      EXPECT_EQ(words_R1R3(k, b), oracle::count_words({k, b, r13, true}));
    }
  }
}
