#pragma once

// Goldbach comet export: one row "two_n,r,s,a_count,b_count" per even 2N.

#include <cstdint>
#include <ostream>
#include <vector>

#include "abgold/claims.hpp"
#include "abgold/classify.hpp"
#include "abgold/parallel.hpp"
#include "abgold/partition.hpp"
#include "abgold/sieve.hpp"

namespace abgold {

struct CometRow {
  std::uint64_t two_n = 0;
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::uint64_t a_count = 0;
  std::uint64_t b_count = 0;

  friend bool operator==(const CometRow&, const CometRow&) = default;
};

inline constexpr const char* kCometHeader = "two_n,r,s,a_count,b_count";

template <FactorSource F>
std::vector<CometRow> comet_rows(std::uint64_t lo, std::uint64_t hi, unsigned workers, const PrimeTable& table,
                                 const F& factors) {
  check_range(lo, hi);
  if (workers == 0) throw UsageError("workers must be >= 1");
  const std::uint64_t targets = (hi - lo) / 2 + 1;
  const std::size_t chunks = static_cast<std::size_t>((targets + kTargetsPerChunk - 1) / kTargetsPerChunk);
  auto parts = run_chunks<std::vector<CometRow>>(chunks, workers, [&](std::size_t c) {
    std::vector<CometRow> rows;
    const std::uint64_t first = lo + 2 * kTargetsPerChunk * c;
    const std::uint64_t last = std::min(hi, first + 2 * (kTargetsPerChunk - 1));
    for (std::uint64_t two_n = first; two_n <= last; two_n += 2) {
      const EvenTarget t(two_n);
      const PartitionCensus pc = census(t, table, factors);
      rows.push_back({two_n, pc.goldbach_count, split_primes(t, table, factors).s(), pc.a_count, pc.b_count});
    }
    return rows;
  });
  std::vector<CometRow> out;
  out.reserve(targets);
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

inline void write_comet_csv(std::ostream& os, const std::vector<CometRow>& rows) {
  os << kCometHeader << '\n';
  for (const auto& row : rows)
    os << row.two_n << ',' << row.r << ',' << row.s << ',' << row.a_count << ',' << row.b_count << '\n';
}

}  // namespace abgold
