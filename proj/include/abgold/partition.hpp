#pragma once

// Odd partitions 2N = a + b (3 <= a <= b, both odd) and their A/B type.
//
// A partition whose components have different types would contradict the
// same-type lemma: if b shares a prime p with 2N then p also divides
// a = 2N - b. Such partitions are reported as PartitionKind::Mixed.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abgold/classify.hpp"
#include "abgold/error.hpp"
#include "abgold/sieve.hpp"

namespace abgold {

enum class PartitionKind { AType, BType, Mixed };

constexpr std::string_view to_string(PartitionKind k) {
  switch (k) {
    case PartitionKind::AType:
      return "AType";
    case PartitionKind::BType:
      return "BType";
    case PartitionKind::Mixed:
      return "Mixed";
  }
  return "?";
}

struct OddPartition {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  PartitionKind kind = PartitionKind::AType;

  friend bool operator==(const OddPartition&, const OddPartition&) = default;
};

struct PartitionCensus {
  std::uint64_t two_n = 0;
  std::uint64_t total = 0;
  std::uint64_t a_count = 0;
  std::uint64_t b_count = 0;
  std::uint64_t mixed_count = 0;
  std::uint64_t goldbach_count = 0;  // r(2N)
  std::vector<OddPartition> goldbach_pairs;
  std::optional<OddPartition> first_mixed;
};

// floor((2N - 6) / 4) + 1
constexpr std::uint64_t odd_partition_count(std::uint64_t two_n) { return (two_n - 6) / 4 + 1; }

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> odd_partitions(const EvenTarget& t) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(odd_partition_count(t.two_n()));
  for (std::uint64_t a = 3; a <= t.n(); a += 2) out.emplace_back(a, t.two_n() - a);
  return out;
}

constexpr PartitionKind combine(NumberClass a, NumberClass b) {
  if (a != b) return PartitionKind::Mixed;
  return a == NumberClass::AType ? PartitionKind::AType : PartitionKind::BType;
}

template <FactorSource F>
PartitionKind classify_partition(std::uint64_t a, std::uint64_t b, const EvenTarget& t, const F& factors) {
  if (a + b != t.two_n() || a > b || a % 2 == 0 || a < 3)
    throw UsageError("classify_partition: (" + std::to_string(a) + ", " + std::to_string(b) +
                     ") is not an odd partition of " + std::to_string(t.two_n()));
  return combine(classify_odd(a, t, factors), classify_odd(b, t, factors));
}

// All Goldbach partitions p + q = 2N with p <= q, ascending in p.
template <FactorSource F>
std::vector<OddPartition> goldbach_partitions(const EvenTarget& t, const PrimeTable& table, const F& factors) {
  std::vector<OddPartition> out;
  for (std::uint64_t p = 3; p <= t.n(); p += 2) {
    const std::uint64_t q = t.two_n() - p;
    if (is_prime(p, table) && is_prime(q, table)) out.push_back({p, q, classify_partition(p, q, t, factors)});
  }
  return out;
}

inline std::vector<OddPartition> goldbach_partitions(const EvenTarget& t, const PrimeTable& table) {
  return goldbach_partitions(t, table, table);
}

// Classifies every odd partition of 2N. Component types come from a
// divisibility mask built from the odd prime divisors of 2N, so the cost is
// linear in N; classify_partition is the per-pair gcd/factor route.
template <FactorSource F>
PartitionCensus census(const EvenTarget& t, const PrimeTable& table, const F& factors) {
  const std::uint64_t two_n = t.two_n();
  PartitionCensus out;
  out.two_n = two_n;

  // shares[i] != 0 iff the odd number 2i+1 has a common factor with 2N
  std::vector<std::uint8_t> shares(t.n(), 0);
  for (std::uint64_t q : odd_prime_divisors(t, factors))
    for (std::uint64_t m = q; m <= two_n - 3; m += 2 * q) shares[m >> 1] = 1;

  const bool in_table = table.covers(two_n - 3);
  auto prime = [&](std::uint64_t m) { return in_table ? table.odd_bit(m) : is_prime(m, table); };

  for (std::uint64_t a = 3; a <= t.n(); a += 2) {
    const std::uint64_t b = two_n - a;
    const auto ca = shares[a >> 1] ? NumberClass::BType : NumberClass::AType;
    const auto cb = shares[b >> 1] ? NumberClass::BType : NumberClass::AType;
    const PartitionKind kind = combine(ca, cb);
    ++out.total;
    switch (kind) {
      case PartitionKind::AType:
        ++out.a_count;
        break;
      case PartitionKind::BType:
        ++out.b_count;
        break;
      case PartitionKind::Mixed:
        if (out.mixed_count++ == 0) out.first_mixed = OddPartition{a, b, kind};
        break;
    }
    if (prime(a) && prime(b)) {
      ++out.goldbach_count;
      out.goldbach_pairs.push_back({a, b, kind});
    }
  }
  return out;
}

inline PartitionCensus census(const EvenTarget& t, const PrimeTable& table) { return census(t, table, table); }

}  // namespace abgold
