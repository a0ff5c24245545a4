#include <gtest/gtest.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "abgold/partition.hpp"
#include "oracle.hpp"

namespace abgold {
namespace {

using Pairs = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

Pairs plain(const std::vector<OddPartition>& v) {
  Pairs out;
  for (const auto& p : v) out.emplace_back(p.a, p.b);
  return out;
}

TEST(OddPartitions, SpotValues) {
  EXPECT_EQ(odd_partitions(EvenTarget(10)), (Pairs{{3, 7}, {5, 5}}));
  EXPECT_EQ(odd_partitions(EvenTarget(8)), (Pairs{{3, 5}}));
  EXPECT_EQ(odd_partitions(EvenTarget(6)), (Pairs{{3, 3}}));
}

TEST(OddPartitions, CountMatchesClosedForm) {
  for (std::uint64_t two_n = 6; two_n <= 2000; two_n += 2) {
    const auto parts = odd_partitions(EvenTarget(two_n));
    ASSERT_EQ(parts.size(), odd_partition_count(two_n));
    ASSERT_EQ(parts.size(), (two_n - 6) / 4 + 1);
    for (const auto& [a, b] : parts) {
      ASSERT_EQ(a + b, two_n);
      ASSERT_LE(a, b);
      ASSERT_EQ(a % 2, 1u);
      ASSERT_GE(a, 3u);
    }
  }
}

TEST(ClassifyPartition, SpotValues) {
  const auto table = build_table(100);
  EXPECT_EQ(classify_partition(3, 7, EvenTarget(10), table), PartitionKind::AType);
  EXPECT_EQ(classify_partition(5, 5, EvenTarget(10), table), PartitionKind::BType);
  EXPECT_EQ(classify_partition(3, 9, EvenTarget(12), table), PartitionKind::BType);
}

TEST(ClassifyPartition, RejectsInvalid) {
  const auto table = build_table(100);
  const EvenTarget t(12);
  EXPECT_THROW(classify_partition(3, 7, t, table), UsageError);  // wrong sum
  EXPECT_THROW(classify_partition(9, 3, t, table), UsageError);  // a > b
  EXPECT_THROW(classify_partition(1, 11, t, table), UsageError);
  EXPECT_THROW(classify_partition(4, 8, t, table), UsageError);
}

TEST(GoldbachPartitions, SpotValues) {
  const auto table = build_table(200);
  EXPECT_EQ(goldbach_partitions(EvenTarget(10), table),
            (std::vector<OddPartition>{{3, 7, PartitionKind::AType}, {5, 5, PartitionKind::BType}}));
  EXPECT_EQ(goldbach_partitions(EvenTarget(6), table), (std::vector<OddPartition>{{3, 3, PartitionKind::BType}}));
  EXPECT_EQ(plain(goldbach_partitions(EvenTarget(100), table)),
            (Pairs{{3, 97}, {11, 89}, {17, 83}, {29, 71}, {41, 59}, {47, 53}}));
}

TEST(Census, SpotValues) {
  const auto table = build_table(200);
  const auto c10 = census(EvenTarget(10), table);
  EXPECT_EQ(c10.total, 2u);
  EXPECT_EQ(c10.a_count, 1u);
  EXPECT_EQ(c10.b_count, 1u);
  EXPECT_EQ(c10.mixed_count, 0u);
  EXPECT_EQ(c10.goldbach_count, 2u);

  const auto c16 = census(EvenTarget(16), table);
  EXPECT_EQ(c16.total, 3u);
  EXPECT_EQ(c16.a_count, 3u);
  EXPECT_EQ(c16.b_count, 0u);
  EXPECT_EQ(c16.goldbach_count, 2u);
  EXPECT_EQ(plain(c16.goldbach_pairs), (Pairs{{3, 13}, {5, 11}}));

  const auto c20 = census(EvenTarget(20), table);
  EXPECT_EQ(c20.total, 4u);
  EXPECT_EQ(odd_partitions(EvenTarget(20)), (Pairs{{3, 17}, {5, 15}, {7, 13}, {9, 11}}));
  EXPECT_EQ(c20.goldbach_count, 2u);
  EXPECT_EQ(c20.a_count, 3u);
  EXPECT_EQ(c20.b_count, 1u);

  const auto c100 = census(EvenTarget(100), table);
  EXPECT_EQ(c100.goldbach_count, 6u);
  EXPECT_EQ(c100.total, 24u);
}

// The census uses a divisibility mask; classify_partition uses the gcd and
// factor routes. They must agree partition by partition.
TEST(Census, MaskRouteAgreesWithPerPairClassification) {
  const auto table = build_table(2000);
  for (std::uint64_t two_n = 6; two_n <= 2000; two_n += 2) {
    const EvenTarget t(two_n);
    const auto c = census(t, table);
    std::uint64_t a = 0, b = 0, mixed = 0;
    std::vector<OddPartition> gold;
    for (const auto& [x, y] : odd_partitions(t)) {
      const auto kind = classify_partition(x, y, t, table);
      a += kind == PartitionKind::AType;
      b += kind == PartitionKind::BType;
      mixed += kind == PartitionKind::Mixed;
      if (oracle::td_is_prime(x) && oracle::td_is_prime(y)) gold.push_back({x, y, kind});
    }
    ASSERT_EQ(c.a_count, a) << two_n;
    ASSERT_EQ(c.b_count, b) << two_n;
    ASSERT_EQ(c.mixed_count, mixed) << two_n;
    ASSERT_EQ(c.goldbach_pairs, gold) << two_n;
    ASSERT_EQ(goldbach_partitions(t, table), gold) << two_n;
  }
}

TEST(Census, InvariantsAndOracleTo1e5) {
  const std::uint64_t hi = 100'000;
  const auto table = build_table(hi);
  const FactorTable spf(hi);
  const oracle::FlagSieve prime(hi);
  for (std::uint64_t two_n = 6; two_n <= hi; two_n += 2) {
    const auto c = census(EvenTarget(two_n), table, spf);
    ASSERT_EQ(c.a_count + c.b_count + c.mixed_count, c.total);
    ASSERT_EQ(c.total, (two_n - 6) / 4 + 1);
    ASSERT_EQ(c.mixed_count, 0u) << two_n;
    ASSERT_EQ(c.goldbach_count, c.goldbach_pairs.size());
    const auto expected = oracle::goldbach_pairs(two_n, prime);
    ASSERT_EQ(plain(c.goldbach_pairs), expected) << two_n;
    for (const auto& p : c.goldbach_pairs) {
      // B-type exactly for the self-pair 2N = 2p
      const bool self = p.a == p.b;
      ASSERT_EQ(p.kind == PartitionKind::BType, self) << two_n;
      ASSERT_NE(p.kind, PartitionKind::Mixed);
    }
  }
}

}  // namespace
}  // namespace abgold
