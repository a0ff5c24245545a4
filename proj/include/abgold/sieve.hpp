#pragma once

// Prime generation, primality and factorization for 64-bit integers.
//
// PrimeTable is built by a segmented odd-only sieve and answers primality for
// n <= limit from a bitset; anything larger goes through a Miller-Rabin test
// with a base set that is deterministic on the whole 64-bit range.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abgold/error.hpp"

namespace abgold {

inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 18;

// floor(sqrt(n)) without floating point rounding surprises near 2^64.
inline std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && (r > UINT64_C(0xFFFFFFFF) || r * r > n)) --r;
  while (r < UINT64_C(0xFFFFFFFF) && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Stein's algorithm; std::gcd in older libstdc++ is division based.
constexpr std::uint64_t binary_gcd(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = std::countr_zero(a | b);
  a >>= std::countr_zero(a);
  do {
    b >>= std::countr_zero(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

namespace detail {

constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Simple Eratosthenes over [0, limit]; only used for the sqrt-sized seed.
inline std::vector<std::uint64_t> seed_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace detail

// Strong-probable-prime test to the 7 bases of Jim Sinclair; correct for
// every n < 2^64.
inline bool miller_rabin(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;

  std::uint64_t d = n - 1;
  int r = std::countr_zero(d);
  d >>= r;

  for (std::uint64_t a : {UINT64_C(2), UINT64_C(325), UINT64_C(9375), UINT64_C(28178),
                          UINT64_C(450775), UINT64_C(9780504), UINT64_C(1795265022)}) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-power factorization with primes strictly ascending. A 64-bit integer
// has at most 15 distinct prime factors, so storage is inline.
class FactorMultiset {
 public:
  static constexpr std::size_t kCapacity = 15;

  FactorMultiset() = default;
  FactorMultiset(std::initializer_list<PrimePower> items) {
    for (const auto& pp : items) add(pp.prime, pp.exponent);
  }

  // Adds prime^exponent, merging with an existing entry for the same prime.
  void add(std::uint64_t prime, std::uint32_t exponent = 1) {
    auto* first = data_.data();
    auto* last = first + size_;
    auto* it = std::lower_bound(first, last, prime,
                                [](const PrimePower& pp, std::uint64_t p) { return pp.prime < p; });
    if (it != last && it->prime == prime) {
      it->exponent += exponent;
      return;
    }
    if (size_ == kCapacity) throw std::logic_error("FactorMultiset capacity exceeded");
    std::move_backward(it, last, last + 1);
    *it = PrimePower{prime, exponent};
    ++size_;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const PrimePower* begin() const { return data_.data(); }
  const PrimePower* end() const { return data_.data() + size_; }
  const PrimePower& operator[](std::size_t i) const { return data_[i]; }

  std::uint32_t exponent_of(std::uint64_t prime) const {
    for (const auto& pp : *this)
      if (pp.prime == prime) return pp.exponent;
    return 0;
  }

  std::uint64_t product() const {
    std::uint64_t out = 1;
    for (const auto& pp : *this)
      for (std::uint32_t e = 0; e < pp.exponent; ++e) out *= pp.prime;
    return out;
  }

  friend bool operator==(const FactorMultiset& a, const FactorMultiset& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::array<PrimePower, kCapacity> data_{};
  std::size_t size_ = 0;
};

class PrimeTable;
PrimeTable build_table(std::uint64_t limit, std::size_t segment_size = kDefaultSegmentSize);

// Immutable prime oracle for [0, limit].
class PrimeTable {
 public:
  std::uint64_t limit() const { return limit_; }

  // All primes <= limit, ascending.
  std::span<const std::uint64_t> primes() const { return primes_; }

  // Bit i set iff 2i+1 is prime, for 2i+1 <= limit.
  std::span<const std::uint64_t> odd_bits() const { return odd_bits_; }

  // n must be odd and <= limit.
  bool odd_bit(std::uint64_t n) const {
    const std::uint64_t i = n >> 1;
    return (odd_bits_[i >> 6] >> (i & 63)) & 1u;
  }

  bool covers(std::uint64_t n) const { return n <= limit_; }

  // Number of primes <= x; x above the limit is clamped to it.
  std::size_t count_upto(std::uint64_t x) const {
    if (x < 2) return 0;
    const std::uint64_t i = (std::min(x, limit_) - 1) / 2;  // last odd index <= x
    const std::uint64_t w = i >> 6, b = i & 63;
    const std::uint64_t mask = b == 63 ? ~std::uint64_t{0} : (std::uint64_t{2} << b) - 1;
    return static_cast<std::size_t>(1 + word_rank_[w] + std::popcount(odd_bits_[w] & mask));
  }

 private:
  friend PrimeTable build_table(std::uint64_t, std::size_t);

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> odd_bits_;
  std::vector<std::uint64_t> word_rank_;  // odd primes in the words before this one
  std::vector<std::uint64_t> primes_;
};

// Segmented odd-only sieve. Working memory beyond the output is one segment
// of `segment_size` odd candidates plus the primes up to sqrt(limit).
inline PrimeTable build_table(std::uint64_t limit, std::size_t segment_size) {
  if (limit < 2) throw UsageError("build_table: limit must be >= 2, got " + std::to_string(limit));
  if (segment_size == 0) throw UsageError("build_table: segment size must be positive");
  if (limit > (UINT64_C(1) << 40)) throw UsageError("build_table: limit too large for an in-memory table");

  PrimeTable table;
  table.limit_ = limit;
  const std::uint64_t odd_count = (limit + 1) / 2;  // odd values 1, 3, ..., <= limit
  table.odd_bits_.assign((odd_count + 63) / 64, 0);
  table.primes_.push_back(2);

  const std::vector<std::uint64_t> seed = detail::seed_primes(isqrt(limit));
  std::vector<std::uint8_t> segment(segment_size);

  // Segment k covers odd values 2i+1 for i in [lo_index, hi_index).
  for (std::uint64_t lo_index = 1; lo_index < odd_count; lo_index += segment_size) {
    const std::uint64_t hi_index = std::min<std::uint64_t>(lo_index + segment_size, odd_count);
    const std::uint64_t len = hi_index - lo_index;
    std::fill_n(segment.begin(), len, std::uint8_t{1});

    const std::uint64_t lo_value = 2 * lo_index + 1;
    const std::uint64_t hi_value = 2 * (hi_index - 1) + 1;
    for (std::size_t k = 1; k < seed.size(); ++k) {
      const std::uint64_t p = seed[k];
      if (p * p > hi_value) break;
      std::uint64_t start = std::max(p * p, (lo_value + p - 1) / p * p);
      if ((start & 1) == 0) start += p;
      for (std::uint64_t i = (start - 1) / 2 - lo_index; i < len; i += p) segment[i] = 0;
    }

    for (std::uint64_t i = 0; i < len; ++i) {
      if (!segment[i]) continue;
      const std::uint64_t idx = lo_index + i;
      table.odd_bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
      table.primes_.push_back(2 * idx + 1);
    }
  }
  table.word_rank_.resize(table.odd_bits_.size());
  std::uint64_t running = 0;
  for (std::size_t w = 0; w < table.odd_bits_.size(); ++w) {
    table.word_rank_[w] = running;
    running += static_cast<std::uint64_t>(std::popcount(table.odd_bits_[w]));
  }
  return table;
}

inline bool is_prime(std::uint64_t n, const PrimeTable& table) {
  if (n <= table.limit()) {
    if (n < 2) return false;
    if ((n & 1) == 0) return n == 2;
    return table.odd_bit(n);
  }
  return miller_rabin(n);
}

// Primes in [lo, hi], sieved segment by segment from the table's primes.
// The table must reach sqrt(hi).
inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi, const PrimeTable& table,
                                            std::size_t segment_size = kDefaultSegmentSize) {
  if (lo > hi) throw UsageError("primes_in: lo > hi");
  const std::uint64_t root = isqrt(hi);
  if (root > table.limit())
    throw UsageError("primes_in: hi=" + std::to_string(hi) + " exceeds the width supported by a table of limit " +
                     std::to_string(table.limit()));
  if (segment_size == 0) throw UsageError("primes_in: segment size must be positive");

  std::vector<std::uint64_t> out;
  lo = std::max<std::uint64_t>(lo, 2);
  if (lo > hi) return out;

  const auto base = table.primes();
  const auto base_end = std::upper_bound(base.begin(), base.end(), root);
  std::vector<std::uint8_t> segment(segment_size);

  for (std::uint64_t seg_lo = lo;;) {
    const std::uint64_t seg_hi = (hi - seg_lo < segment_size - 1) ? hi : seg_lo + segment_size - 1;
    const std::uint64_t len = seg_hi - seg_lo + 1;
    std::fill_n(segment.begin(), len, std::uint8_t{1});
    const std::uint64_t seg_root = isqrt(seg_hi);
    for (auto it = base.begin(); it != base_end; ++it) {
      const std::uint64_t p = *it;
      if (p > seg_root) break;
      const std::uint64_t rem = seg_lo % p;
      const std::uint64_t offset = rem == 0 ? 0 : p - rem;
      if (offset > len - 1) continue;
      std::uint64_t start = seg_lo + offset;
      if (start < p * p) start = p * p;
      if (start > seg_hi) continue;
      for (std::uint64_t j = start - seg_lo;; j += p) {
        segment[j] = 0;
        if (len - 1 - j < p) break;
      }
    }
    for (std::uint64_t i = 0; i < len; ++i)
      if (segment[i]) out.push_back(seg_lo + i);
    if (seg_hi == hi) break;
    seg_lo = seg_hi + 1;
  }
  return out;
}

namespace detail {

// Brent's variant of Pollard rho. n must be odd, composite and > 3.
inline std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = binary_gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = binary_gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split_cofactor(std::uint64_t n, FactorMultiset& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out.add(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  split_cofactor(d, out);
  split_cofactor(n / d, out);
}

}  // namespace detail

// Trial division by table primes up to sqrt(n); a leftover cofactor that the
// table cannot certify is split by Pollard-Brent with Miller-Rabin leaves.
inline FactorMultiset factorize(std::uint64_t n, const PrimeTable& table) {
  if (n == 0) throw UsageError("factorize: n must be >= 1");
  FactorMultiset out;
  bool exhausted = true;
  for (std::uint64_t p : table.primes()) {
    if (p > n / p) {
      exhausted = false;
      break;
    }
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out.add(p, e);
  }
  if (n == 1) return out;
  if (!exhausted) {
    out.add(n);  // no factor <= sqrt(n) remains
  } else {
    detail::split_cofactor(n, out);
  }
  return out;
}

// Smallest-prime-factor table for bulk factorization of small integers.
class FactorTable {
 public:
  explicit FactorTable(std::uint32_t limit) : spf_(std::size_t{limit} + 1, 0) {
    if (limit < 2) throw UsageError("FactorTable: limit must be >= 2");
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        spf_[i] = static_cast<std::uint32_t>(i);
        primes.push_back(static_cast<std::uint32_t>(i));
      }
      for (std::uint32_t p : primes) {
        if (p > spf_[i] || i * p > limit) break;
        spf_[i * p] = p;
      }
    }
  }

  std::uint64_t limit() const { return spf_.size() - 1; }
  std::uint32_t smallest_factor(std::uint64_t n) const { return spf_[n]; }

 private:
  std::vector<std::uint32_t> spf_;
};

inline FactorMultiset factorize(std::uint64_t n, const FactorTable& table) {
  if (n == 0) throw UsageError("factorize: n must be >= 1");
  if (n > table.limit()) throw UsageError("factorize: n exceeds FactorTable limit");
  FactorMultiset out;
  while (n > 1) {
    const std::uint32_t p = table.smallest_factor(n);
    std::uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out.add(p, e);
  }
  return out;
}

// Anything that can factor a positive 64-bit integer through `factorize`.
template <class F>
concept FactorSource = requires(const F& f, std::uint64_t n) {
  { factorize(n, f) } -> std::same_as<FactorMultiset>;
};

}  // namespace abgold
