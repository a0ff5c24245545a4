#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "abgold/sieve.hpp"
#include "oracle.hpp"

namespace abgold {
namespace {

std::vector<std::uint64_t> as_vector(std::span<const std::uint64_t> s) { return {s.begin(), s.end()}; }

TEST(BuildTable, SmallLimits) {
  EXPECT_EQ(as_vector(build_table(10).primes()), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_EQ(as_vector(build_table(2).primes()), (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(build_table(100).primes().size(), 25u);
}

TEST(BuildTable, RejectsLimitBelowTwo) {
  EXPECT_THROW(build_table(1), UsageError);
  EXPECT_THROW(build_table(0), UsageError);
  EXPECT_THROW(build_table(100, 0), UsageError);
}

TEST(BuildTable, MatchesTrialDivisionForEveryLimitUpTo300) {
  for (std::uint64_t limit = 2; limit <= 300; ++limit)
    ASSERT_EQ(as_vector(build_table(limit, 5).primes()), oracle::td_primes_upto(limit)) << "limit=" << limit;
}

TEST(BuildTable, MatchesTrialDivisionAcrossSegmentSizes) {
  for (std::uint64_t limit : {1000u, 4097u, 65536u, 100003u}) {
    const auto expected = oracle::td_primes_upto(limit);
    for (std::size_t seg : {std::size_t{1}, std::size_t{7}, std::size_t{64}, std::size_t{1000}, kDefaultSegmentSize})
      ASSERT_EQ(as_vector(build_table(limit, seg).primes()), expected) << "limit=" << limit << " seg=" << seg;
  }
}

TEST(BuildTable, MillionMatchesTrialDivision) {
  const auto table = build_table(1'000'000, 4096);
  EXPECT_EQ(as_vector(table.primes()), oracle::td_primes_upto(1'000'000));
  EXPECT_EQ(table.primes().size(), 78498u);
}

TEST(BuildTable, OddBitsAgreeWithPrimeList) {
  const auto table = build_table(50'001, 333);
  std::vector<std::uint64_t> from_bits{2};
  for (std::uint64_t n = 3; n <= table.limit(); n += 2)
    if (table.odd_bit(n)) from_bits.push_back(n);
  EXPECT_EQ(from_bits, as_vector(table.primes()));
}

TEST(BuildTable, CountUptoMatchesPrimeList) {
  for (std::uint64_t limit : {2u, 3u, 127u, 128u, 129u, 10'007u}) {
    const auto table = build_table(limit, 17);
    const auto primes = table.primes();
    for (std::uint64_t x = 0; x <= limit + 5; ++x) {
      const auto expected = static_cast<std::size_t>(std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
      ASSERT_EQ(table.count_upto(x), expected) << "limit=" << limit << " x=" << x;
    }
  }
}

TEST(IsPrime, SpotValues) {
  const auto table = build_table(1000);
  EXPECT_FALSE(is_prime(0, table));
  EXPECT_FALSE(is_prime(1, table));
  EXPECT_TRUE(is_prime(2, table));
  EXPECT_TRUE(is_prime(97, table));
  EXPECT_FALSE(is_prime(91, table));
}

TEST(IsPrime, BeyondTheTable) {
  const auto table = build_table(100);
  EXPECT_TRUE(is_prime(2305843009213693951ull, table));   // 2^61 - 1
  EXPECT_TRUE(is_prime(18446744073709551557ull, table));  // largest prime below 2^64
  EXPECT_FALSE(is_prime(3215031751ull, table));           // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(3825123056546413051ull, table));  // strong pseudoprime to bases 2..23
  EXPECT_FALSE(is_prime(18446743979220271189ull, table)); // 4294967279 * 4294967291
  EXPECT_FALSE(is_prime(561, table));
  EXPECT_FALSE(is_prime(UINT64_MAX, table));
}

TEST(IsPrime, MillerRabinAgreesWithSieveBelowTwoMillion) {
  const oracle::FlagSieve flags(2'000'000);
  for (std::uint64_t n = 0; n <= 2'000'000; ++n) ASSERT_EQ(miller_rabin(n), flags(n)) << n;
}

TEST(IsPrime, RandomLargeAgainstTrialDivision) {
  const auto table = build_table(1000);
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::uint64_t> dist(1'000'000, 10'000'000'000ull);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t n = dist(rng) | 1;
    ASSERT_EQ(is_prime(n, table), oracle::td_is_prime(n)) << n;
  }
}

TEST(PrimesIn, SpotValues) {
  const auto table = build_table(100);
  EXPECT_EQ(primes_in(90, 100, table), (std::vector<std::uint64_t>{97}));
  EXPECT_TRUE(primes_in(8, 10, table).empty());
  EXPECT_EQ(primes_in(2, 12, table), (std::vector<std::uint64_t>{2, 3, 5, 7, 11}));
  EXPECT_EQ(primes_in(0, 2, table), (std::vector<std::uint64_t>{2}));
}

TEST(PrimesIn, Errors) {
  const auto table = build_table(10);
  EXPECT_THROW(primes_in(5, 4, table), UsageError);
  EXPECT_THROW(primes_in(100, 200, table), UsageError);  // sqrt(200) > 10
  EXPECT_NO_THROW(primes_in(100, 120, table));
  EXPECT_THROW(primes_in(100, 121, table), UsageError);  // 121 = 11 * 11 needs 11 in the table
}

TEST(PrimesIn, SampledWindowsMatchTableFilter) {
  std::mt19937_64 rng(7);
  const auto base = build_table(1000);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t hi = std::uniform_int_distribution<std::uint64_t>(2, 1'000'000)(rng);
    const std::uint64_t lo = std::uniform_int_distribution<std::uint64_t>(0, hi)(rng);
    const std::size_t seg = std::uniform_int_distribution<std::size_t>(1, 5000)(rng);
    std::vector<std::uint64_t> expected;
    const auto full = build_table(std::max<std::uint64_t>(hi, 2));
    for (std::uint64_t p : full.primes())
      if (p >= lo && p <= hi) expected.push_back(p);
    ASSERT_EQ(primes_in(lo, hi, base, seg), expected) << lo << ".." << hi << " seg=" << seg;
  }
}

TEST(PrimesIn, FarWindowAgainstMillerRabin) {
  const auto table = build_table(1'000'001);
  const std::uint64_t lo = 1'000'000'000'000ull, hi = lo + 5000;
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = lo; n <= hi; ++n)
    if (miller_rabin(n)) expected.push_back(n);
  EXPECT_EQ(primes_in(lo, hi, table, 777), expected);
}

TEST(Factorize, SpotValues) {
  const auto table = build_table(1000);
  EXPECT_TRUE(factorize(1, table).empty());
  EXPECT_EQ(factorize(12, table), (FactorMultiset{{2, 2}, {3, 1}}));
  EXPECT_EQ(factorize(9991, table), (FactorMultiset{{97, 1}, {103, 1}}));
  EXPECT_THROW(factorize(0, table), UsageError);
}

TEST(Factorize, LargeCofactorsUsePollard) {
  const auto table = build_table(1000);
  EXPECT_EQ(factorize(18446743979220271189ull, table), (FactorMultiset{{4294967279ull, 1}, {4294967291ull, 1}}));
  EXPECT_EQ(factorize(998244359987710471ull, table), (FactorMultiset{{998244353ull, 1}, {1000000007ull, 1}}));
  EXPECT_EQ(factorize(3825123056546413051ull, table),
            (FactorMultiset{{149491, 1}, {747451, 1}, {34233211, 1}}));
  EXPECT_EQ(factorize(18446744073709551557ull, table), (FactorMultiset{{18446744073709551557ull, 1}}));
  EXPECT_EQ(factorize(std::uint64_t{1} << 63, table), (FactorMultiset{{2, 63}}));
}

TEST(Factorize, ReconstructsEveryIntegerUpTo1e5) {
  const auto table = build_table(1000);
  const FactorTable spf(100'000);
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    const FactorMultiset f = factorize(n, table);
    ASSERT_EQ(f.product(), n);
    for (const auto& pp : f) ASSERT_TRUE(oracle::td_is_prime(pp.prime)) << n;
    for (std::size_t i = 1; i < f.size(); ++i) ASSERT_LT(f[i - 1].prime, f[i].prime);
    ASSERT_EQ(factorize(n, spf), f) << n;
  }
}

TEST(Factorize, RandomSixtyFourBitAgainstProduct) {
  const auto table = build_table(10'000);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = rng() | 1;
    const FactorMultiset f = factorize(n, table);
    ASSERT_EQ(f.product(), n);
    for (const auto& pp : f) ASSERT_TRUE(miller_rabin(pp.prime)) << n;
  }
}

TEST(FactorTable, BoundsChecked) {
  const FactorTable spf(100);
  EXPECT_THROW(factorize(101, spf), UsageError);
  EXPECT_THROW(FactorTable(1), UsageError);
}

TEST(Isqrt, ExactNearSquares) {
  for (std::uint64_t r : {0ull, 1ull, 2ull, 3ull, 1000ull, 4294967295ull}) {
    EXPECT_EQ(isqrt(r * r), r);
    if (r > 0) {
      EXPECT_EQ(isqrt(r * r - 1), r - 1);
    }
  }
  EXPECT_EQ(isqrt(UINT64_MAX), 4294967295ull);
}

TEST(BinaryGcd, AgreesWithStdGcd) {
  EXPECT_EQ(binary_gcd(0, 0), 0u);
  EXPECT_EQ(binary_gcd(0, 12), 12u);
  EXPECT_EQ(binary_gcd(12, 0), 12u);
  EXPECT_EQ(binary_gcd(UINT64_MAX, UINT64_MAX - 1), 1u);
  for (std::uint64_t a = 0; a < 300; ++a)
    for (std::uint64_t b = 0; b < 300; ++b) ASSERT_EQ(binary_gcd(a, b), std::gcd(a, b)) << a << "," << b;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100'000; ++i) {
    const std::uint64_t k = rng() >> (rng() % 40), a = k * (rng() >> 32), b = k * (rng() >> 30);
    ASSERT_EQ(binary_gcd(a, b), std::gcd(a, b)) << a << "," << b;
  }
}

}  // namespace
}  // namespace abgold
