#pragma once

// A-type / B-type classification relative to an even target 2N.
//
// An odd prime q with 1 < q < 2N-1 is A-type when q does not divide 2N and
// B-type when it does. An odd number in the same interval is A-type when all
// of its prime factors are A-type, i.e. when it is coprime to 2N.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abgold/error.hpp"
#include "abgold/sieve.hpp"

namespace abgold {

class EvenTarget {
 public:
  // Throws UsageError unless two_n is even and >= 6.
  explicit EvenTarget(std::uint64_t two_n) : two_n_(two_n) {
    if (two_n % 2 != 0) throw UsageError("target must be even, got " + std::to_string(two_n));
    if (two_n < 6) throw UsageError("target must be >= 6, got " + std::to_string(two_n));
  }

  std::uint64_t two_n() const { return two_n_; }
  std::uint64_t n() const { return two_n_ / 2; }

  // Outside the "2N greater than 6" hypothesis.
  bool is_boundary() const { return two_n_ == 6; }

  friend bool operator==(const EvenTarget&, const EvenTarget&) = default;

 private:
  std::uint64_t two_n_;
};

struct EvenFactorization {
  std::uint32_t m = 0;         // exponent of 2
  FactorMultiset b_factors;  // odd part
};

enum class NumberClass { AType, BType };

constexpr std::string_view to_string(NumberClass c) { return c == NumberClass::AType ? "AType" : "BType"; }

template <FactorSource F>
EvenFactorization factorize_even(const EvenTarget& t, const F& factors) {
  EvenFactorization out;
  out.m = static_cast<std::uint32_t>(std::countr_zero(t.two_n()));
  out.b_factors = factorize(t.two_n() >> out.m, factors);
  return out;
}

// The A-type primes of 2N as a view over the odd primes of (1, 2N-1) with the
// few B-type primes skipped. Index j is the position of a prime in the
// ascending A-list, which is the basis order for exponent vectors.
class ABasis {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::uint64_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::uint64_t*;
    using reference = std::uint64_t;

    const_iterator() = default;
    std::uint64_t operator*() const { return basis_->odd_[pos_]; }
    const_iterator& operator++() {
      ++pos_;
      skip();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.pos_ == b.pos_; }

   private:
    friend class ABasis;
    const_iterator(const ABasis* basis, std::size_t pos, std::size_t next_b)
        : basis_(basis), pos_(pos), next_b_(next_b) {
      skip();
    }
    void skip() {
      while (next_b_ < basis_->b_pos_.size() && basis_->b_pos_[next_b_] == pos_) {
        ++pos_;
        ++next_b_;
      }
    }

    const ABasis* basis_ = nullptr;
    std::size_t pos_ = 0;
    std::size_t next_b_ = 0;
  };

  ABasis() = default;

  // odd_primes: all odd primes of the interval, ascending.
  // b_primes: the ascending subset that divides 2N.
  // With `table`, odd_primes must be table.primes() from index 1 onward; this
  // turns index_of into a rank query.
  ABasis(std::span<const std::uint64_t> odd_primes, const std::vector<std::uint64_t>& b_primes,
         const PrimeTable* table = nullptr)
      : odd_(odd_primes), table_(table) {
    b_pos_.reserve(b_primes.size());
    for (std::uint64_t b : b_primes) {
      auto it = std::lower_bound(odd_.begin(), odd_.end(), b);
      if (it == odd_.end() || *it != b) throw std::logic_error("ABasis: B-prime outside the odd-prime range");
      b_pos_.push_back(static_cast<std::size_t>(it - odd_.begin()));
    }
  }

  std::size_t size() const { return odd_.size() - b_pos_.size(); }
  bool empty() const { return size() == 0; }

  const_iterator begin() const { return const_iterator(this, 0, 0); }
  const_iterator end() const { return const_iterator(this, odd_.size(), b_pos_.size()); }

  // j-th A-prime, j < size().
  std::uint64_t at(std::size_t j) const {
    std::size_t pos = j;
    for (std::size_t bp : b_pos_) {
      if (bp <= pos)
        ++pos;
      else
        break;
    }
    return odd_[pos];
  }

  // Basis index of q, or nullopt when q is not an A-prime.
  std::optional<std::size_t> index_of(std::uint64_t q) const {
    std::size_t pos = 0;
    if (table_) {
      if (odd_.empty() || q < 3 || q % 2 == 0 || q > odd_.back() || !table_->odd_bit(q)) return std::nullopt;
      pos = table_->count_upto(q) - 2;
    } else {
      auto it = std::lower_bound(odd_.begin(), odd_.end(), q);
      if (it == odd_.end() || *it != q) return std::nullopt;
      pos = static_cast<std::size_t>(it - odd_.begin());
    }
    std::size_t skipped = 0;
    for (std::size_t bp : b_pos_) {
      if (bp == pos) return std::nullopt;
      if (bp > pos) break;
      ++skipped;
    }
    return pos - skipped;
  }

  bool contains(std::uint64_t q) const { return index_of(q).has_value(); }

  std::vector<std::uint64_t> to_vector() const { return {begin(), end()}; }

  // Every odd prime of the interval, A and B alike.
  std::span<const std::uint64_t> odd_primes() const { return odd_; }

 private:
  std::span<const std::uint64_t> odd_;
  std::vector<std::size_t> b_pos_;
  const PrimeTable* table_ = nullptr;
};

// Split of the odd primes in the open interval (1, 2N-1) into A and B.
// The A-list views the PrimeTable it was built from; the table must outlive it.
class PrimeSplit {
 public:
  PrimeSplit(EvenTarget target, std::span<const std::uint64_t> odd_primes, std::vector<std::uint64_t> b_primes,
             const PrimeTable* table = nullptr)
      : target_(target), b_primes_(std::move(b_primes)), a_primes_(odd_primes, b_primes_, table) {}

  const EvenTarget& target() const { return target_; }
  const ABasis& a_primes() const { return a_primes_; }
  std::span<const std::uint64_t> b_primes() const { return b_primes_; }
  std::size_t s() const { return a_primes_.size(); }

 private:
  EvenTarget target_;
  std::vector<std::uint64_t> b_primes_;
  ABasis a_primes_;
};

// Odd prime divisors of 2N, ascending.
template <FactorSource F>
std::vector<std::uint64_t> odd_prime_divisors(const EvenTarget& t, const F& factors) {
  std::vector<std::uint64_t> out;
  const std::uint64_t odd = t.two_n() >> std::countr_zero(t.two_n());
  for (const auto& pp : factorize(odd, factors)) out.push_back(pp.prime);
  return out;
}

// `factors` is used for 2N itself; the table supplies the interval's primes
// and must reach 2N - 2.
template <FactorSource F>
PrimeSplit split_primes(const EvenTarget& t, const PrimeTable& table, const F& factors) {
  const std::uint64_t top = t.two_n() - 2;  // largest integer inside (1, 2N-1)
  if (!table.covers(top))
    throw UsageError("split_primes: prime table limit " + std::to_string(table.limit()) + " is below 2N-2 = " +
                     std::to_string(top));
  const auto all = table.primes();
  const std::size_t upto = table.count_upto(top);
  // every B-prime divides 2N and is at most N < 2N-1, so it lies in the span
  return PrimeSplit(t, all.subspan(1, upto - 1), odd_prime_divisors(t, factors), &table);
}

inline PrimeSplit split_primes(const EvenTarget& t, const PrimeTable& table) { return split_primes(t, table, table); }

// gcd route only; m is assumed odd and in range.
constexpr NumberClass class_by_gcd(std::uint64_t m, std::uint64_t two_n) {
  return binary_gcd(m, two_n) == 1 ? NumberClass::AType : NumberClass::BType;
}

inline void check_partition_component(std::uint64_t m, const EvenTarget& t, std::string_view who) {
  if (m % 2 == 0 || m < 3 || m > t.two_n() - 3)
    throw UsageError(std::string(who) + ": " + std::to_string(m) + " is not an odd number in [3, " +
                     std::to_string(t.two_n() - 3) + "]");
}

// Classifies odd m in [3, 2N-3] both by gcd(m, 2N) and by checking each prime
// factor against A-membership; the two must agree.
template <FactorSource F>
NumberClass classify_odd(std::uint64_t m, const EvenTarget& t, const F& factors) {
  check_partition_component(m, t, "classify_odd");
  const NumberClass by_gcd = class_by_gcd(m, t.two_n());
  bool all_a = true;
  for (const auto& pp : factorize(m, factors)) {
    // any factor of m is odd and below 2N-1, so only divisibility decides
    if (t.two_n() % pp.prime == 0) {
      all_a = false;
      break;
    }
  }
  const NumberClass by_factors = all_a ? NumberClass::AType : NumberClass::BType;
  if (by_gcd != by_factors)
    throw std::logic_error("classify_odd: gcd and factor classification disagree for m=" + std::to_string(m) +
                           " 2N=" + std::to_string(t.two_n()));
  return by_gcd;
}

// Same, with the factor route checking membership in the split's A-list.
template <FactorSource F>
NumberClass classify_odd(std::uint64_t m, const PrimeSplit& split, const F& factors) {
  const EvenTarget& t = split.target();
  check_partition_component(m, t, "classify_odd");
  const NumberClass by_gcd = class_by_gcd(m, t.two_n());
  bool all_a = true;
  for (const auto& pp : factorize(m, factors)) {
    if (!split.a_primes().contains(pp.prime)) {
      all_a = false;
      break;
    }
  }
  const NumberClass by_factors = all_a ? NumberClass::AType : NumberClass::BType;
  if (by_gcd != by_factors)
    throw std::logic_error("classify_odd: gcd and A-list classification disagree for m=" + std::to_string(m) +
                           " 2N=" + std::to_string(t.two_n()));
  return by_gcd;
}

}  // namespace abgold
