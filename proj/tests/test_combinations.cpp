#include <gtest/gtest.h>

#include "subsum/combinations.hpp"
#include "subsum/errors.hpp"

using namespace subsum;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(5, 6), 0u);
  EXPECT_EQ(binomial(12, 7), 792u);
  EXPECT_EQ(binomial(14, 8), 3003u);
  EXPECT_EQ(binomial(16, 9), 11440u);
  EXPECT_EQ(binomial(19, 10), 92378u);
}

TEST(Binomial, PascalRule) {
  for (std::uint64_t n = 1; n <= 62; ++n) {
    for (std::uint64_t k = 1; k <= n; ++k) ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST(Binomial, LargeAndOverflow) {
  EXPECT_EQ(binomial(66, 33), 7219428434016265740ull);
  EXPECT_THROW(binomial(70, 35), BudgetExceeded);
}

TEST(Colex, FirstAndRankZero) {
  const std::vector<std::uint32_t> first{0, 1, 2};
  EXPECT_EQ(colex_rank(first), 0u);
  EXPECT_EQ(colex_unrank(0, 3), first);
  EXPECT_TRUE(colex_unrank(0, 0).empty());
}

TEST(Colex, NextWalksAllRanksInOrder) {
  for (std::uint32_t n = 1; n <= 11; ++n) {
    for (std::uint32_t k = 1; k <= n; ++k) {
      std::vector<std::uint32_t> c(k);
      for (std::uint32_t i = 0; i < k; ++i) c[i] = i;
      std::uint64_t rank = 0;
      while (true) {
        ASSERT_EQ(colex_rank(c), rank);
        ASSERT_EQ(colex_unrank(rank, k), c);
        for (std::uint32_t i = 1; i < k; ++i) ASSERT_LT(c[i - 1], c[i]);
        ASSERT_LT(c.back(), n);
        const auto before = c;
        const int j = colex_next(c, n);
        if (j < 0) break;
        // only positions 0..j change
        for (std::uint32_t i = static_cast<std::uint32_t>(j) + 1; i < k; ++i) ASSERT_EQ(c[i], before[i]);
        ASSERT_NE(c[static_cast<std::size_t>(j)], before[static_cast<std::size_t>(j)]);
        ++rank;
      }
      EXPECT_EQ(rank + 1, binomial(n, k)) << n << " choose " << k;
    }
  }
}

TEST(Colex, OrderExample) {
  // 2-subsets of {0..3}: 01 02 12 03 13 23
  std::vector<std::vector<std::uint32_t>> seen;
  std::vector<std::uint32_t> c{0, 1};
  do seen.push_back(c);
  while (colex_next(c, 4) >= 0);
  EXPECT_EQ(seen, (std::vector<std::vector<std::uint32_t>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}));
}
