#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

#include "numevent/bell.hpp"
#include "numevent/error.hpp"
#include "numevent/set_function.hpp"
#include "oracles.hpp"

using namespace numevent;

TEST(SubsetIndex, Construction) {
  const auto i = SubsetIndex::of({1, 3}, 3);
  EXPECT_EQ(i.bits(), 0b101u);
  EXPECT_EQ(i.size(), 2);
  EXPECT_TRUE(i.contains(3));
  EXPECT_FALSE(i.contains(2));
  EXPECT_EQ(i.to_string(), "{1,3}");
  EXPECT_EQ(i.compact(), "13");
  EXPECT_EQ(SubsetIndex::full(4).bits(), 0b1111u);
  EXPECT_EQ((SubsetIndex::of({1}, 3) | SubsetIndex::of({2}, 3)).to_string(), "{1,2}");
  EXPECT_EQ(SubsetIndex::of({1, 11}, 12).compact(), "1.11");
  EXPECT_EQ(i.members(), (std::vector<int>{1, 3}));

  EXPECT_THROW(SubsetIndex(0, 3), Error);
  EXPECT_THROW(SubsetIndex(0b1000, 3), Error);
  EXPECT_THROW(SubsetIndex::of({4}, 3), Error);
  EXPECT_THROW(SubsetIndex::of({}, 3), Error);
}

TEST(SetFunction, StorageAndAccess) {
  const std::vector<double> v{1, 2, 3};
  SetFunction f(2, v);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f[SubsetIndex::of({1, 2}, 2)], 3);
  EXPECT_EQ(f.dense()[0], 0);
  EXPECT_EQ(f.values(), v);
  f.set(SubsetIndex::of({2}, 2), -4);
  EXPECT_EQ(f.at(2), -4);
  EXPECT_THROW(f.at(0), Error);
  EXPECT_THROW(f.at(4), Error);
  EXPECT_THROW(SetFunction(2, std::vector<double>{1, 2}), Error);
  EXPECT_THROW(SetFunction(0), Error);
  EXPECT_TRUE(SetFunction(3).is_zero());
  EXPECT_TRUE(f.is_integral(1e-9));
  f.set(1, 0.5);
  EXPECT_FALSE(f.is_integral(1e-9));
}

TEST(Transforms, SmallExamples) {
  SetFunction h(2);
  h.set(SubsetIndex::of({1}, 2), 1);
  const SetFunction g = g_transform(h);
  EXPECT_EQ(g.values(), (std::vector<double>{1, 0, 1}));
  EXPECT_TRUE(g_transform(SetFunction(3)).is_zero());
  EXPECT_EQ(f_transform(h), elementary_valuation(SubsetIndex::of({1}, 2)));
}

TEST(Transforms, MatchDirectSums) {
  std::mt19937_64 rng(101);
  for (int n = 1; n <= 7; ++n) {
    for (int t = 0; t < 20; ++t) {
      const SetFunction h = oracle::random_set_function(n, rng);
      EXPECT_LE(max_abs_diff(g_transform(h), oracle::subset_sums(h)), 1e-12) << "n=" << n;
      EXPECT_LE(max_abs_diff(f_transform(h), oracle::alternating_sums(h)), 1e-12) << "n=" << n;
    }
  }
}

TEST(Transforms, FTransformIsTheSumOfElementaryValuations) {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 5; ++n) {
    const SetFunction h = oracle::random_set_function(n, rng);
    SetFunction sum(n);
    for (std::uint32_t j = 1; j < (1u << n); ++j) {
      const SetFunction fj = elementary_valuation(SubsetIndex(j, n));
      for (std::uint32_t i = 1; i < (1u << n); ++i) sum.set(i, sum.at(i) + h.at(j) * fj.at(i));
    }
    EXPECT_LE(max_abs_diff(f_transform(h), sum), 1e-12);
  }
}

TEST(Transforms, MutuallyInverse) {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 10; ++n) {
    for (int t = 0; t < 50; ++t) {
      const SetFunction h = oracle::random_set_function(n, rng, -5, 5);
      EXPECT_LE(max_abs_diff(g_transform(f_transform(h)), h), 1e-9);
      EXPECT_LE(max_abs_diff(f_transform(g_transform(h)), h), 1e-9);
    }
  }
}

TEST(Transforms, LargeGroundSetUsesParallelPathConsistently) {
  std::mt19937_64 rng(4);
  const SetFunction h = oracle::random_set_function(14, rng);
  EXPECT_LE(max_abs_diff(f_transform(g_transform(h)), h), 1e-9);
}

// sum over J subset of I of (-1)^|J| is 1 for I empty and 0 otherwise
TEST(Combinatorics, AlternatingSubsetSumVanishes) {
  for (int size = 0; size <= 10; ++size) {
    const std::uint32_t i = (1u << size) - 1;
    long long s = 0;
    for (std::uint32_t j = i;; j = (j - 1) & i) {
      s += std::popcount(j) % 2 ? -1 : 1;
      if (j == 0) break;
    }
    EXPECT_EQ(s, size == 0 ? 1 : 0) << "|I|=" << size;
  }
}

TEST(Combinatorics, HalfOfAllSubsetsHaveEvenSize) {
  for (int size = 1; size <= 10; ++size) {
    const std::uint32_t i = (1u << size) - 1;
    std::uint64_t even = 0, total = 0;
    for (std::uint32_t j = i;; j = (j - 1) & i) {
      ++total;
      if (std::popcount(j) % 2 == 0) ++even;
      if (j == 0) break;
    }
    EXPECT_EQ(2 * even, total) << "|I|=" << size;
  }
}

// g of an elementary valuation is the indicator of its index set
TEST(Transforms, ElementaryValuationsInvertToDeltas) {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint32_t i = 1; i < (1u << n); ++i) {
      const SetFunction g = g_transform(elementary_valuation(SubsetIndex(i, n)));
      for (std::uint32_t k = 1; k < (1u << n); ++k) ASSERT_EQ(g.at(k), k == i ? 1.0 : 0.0) << n << " " << i << " " << k;
    }
  }
}

TEST(Transforms, IntegralityIsPreservedBothWays) {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t < 50; ++t) {
      SetFunction h(n);
      for (std::uint32_t b = 1; b < (1u << n); ++b) h.set(b, d(rng));
      EXPECT_TRUE(g_transform(h).is_integral(1e-9));
      EXPECT_TRUE(f_transform(h).is_integral(1e-9));

      // nudge one value off the integers
      SetFunction off = h;
      const std::uint32_t b = 1 + rng() % ((1u << n) - 1);
      off.set(b, off.at(b) + 0.25);
      EXPECT_FALSE(off.is_integral(1e-9));
      EXPECT_FALSE(g_transform(off).is_integral(1e-9));
      EXPECT_FALSE(f_transform(off).is_integral(1e-9));
    }
  }
}
