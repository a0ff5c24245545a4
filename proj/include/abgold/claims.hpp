#pragma once

// Verifiers for the individual checkable statements about A-type primes:
// companion decompositions 2N - p over the A-basis, A-prime pairings,
// midpoint numbers, the s >= 2 bound and the prime-power exclusion. Each
// per-target verifier returns a ClaimOutcome; range_verify aggregates them
// over an even range with smallest-counterexample semantics.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abgold/classify.hpp"
#include "abgold/error.hpp"
#include "abgold/parallel.hpp"
#include "abgold/partition.hpp"
#include "abgold/sieve.hpp"

namespace abgold {

// Exponents of an odd number over the ascending A-prime basis of a split.
// Only non-zero terms are stored; every other basis entry is zero.
class ExponentVector {
 public:
  struct Term {
    std::uint64_t prime;
    std::uint32_t index;
    std::uint32_t exponent;

    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit ExponentVector(std::size_t basis_size = 0) : basis_size_(basis_size) {}

  // Terms must be appended in increasing index order.
  void push(std::size_t index, std::uint64_t prime, std::uint32_t exponent) {
    if (count_ == terms_.size()) throw std::logic_error("ExponentVector: too many terms");
    if (index >= basis_size_) throw std::logic_error("ExponentVector: index outside basis");
    if (count_ > 0 && terms_[count_ - 1].index >= index) throw std::logic_error("ExponentVector: unordered terms");
    terms_[count_++] = Term{prime, static_cast<std::uint32_t>(index), exponent};
  }

  std::size_t basis_size() const { return basis_size_; }

  std::uint32_t exponent_at(std::size_t j) const {
    for (const auto& term : terms())
      if (term.index == j) return term.exponent;
    return 0;
  }

  std::span<const Term> terms() const { return {terms_.data(), count_}; }

  std::uint64_t exponent_sum() const {
    std::uint64_t sum = 0;
    for (const auto& term : terms()) sum += term.exponent;
    return sum;
  }

  // Product of basis[j]^exps[j].
  std::uint64_t value() const {
    std::uint64_t out = 1;
    for (const auto& term : terms())
      for (std::uint32_t e = 0; e < term.exponent; ++e) out *= term.prime;
    return out;
  }

  std::vector<std::uint32_t> dense() const {
    std::vector<std::uint32_t> out(basis_size_, 0);
    for (const auto& term : terms()) out[term.index] = term.exponent;
    return out;
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.basis_size_ == b.basis_size_ && std::ranges::equal(a.terms(), b.terms());
  }

 private:
  std::size_t basis_size_ = 0;
  std::array<Term, FactorMultiset::kCapacity> terms_{};
  std::size_t count_ = 0;
};

// m has a prime factor outside the A-basis, so it shares a factor with 2N.
class NotAPureAProduct : public std::domain_error {
 public:
  NotAPureAProduct(std::uint64_t value, std::uint64_t prime, std::uint64_t two_n)
      : std::domain_error(std::to_string(value) + " has prime factor " + std::to_string(prime) +
                          " outside the A-basis of " + std::to_string(two_n)),
        value_(value),
        prime_(prime) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t prime() const { return prime_; }

 private:
  std::uint64_t value_;
  std::uint64_t prime_;
};

struct Decomposition {
  std::optional<ExponentVector> exps;
  std::uint64_t outside_prime = 0;  // set when exps is empty
};

// No range check on m; callers that hold a valid A-type number use this in
// hot loops.
template <FactorSource F>
Decomposition try_decompose(std::uint64_t m, const PrimeSplit& split, const F& factors) {
  const ABasis& basis = split.a_primes();
  ExponentVector exps(basis.size());
  for (const auto& pp : factorize(m, factors)) {
    const auto idx = basis.index_of(pp.prime);
    if (!idx) return {std::nullopt, pp.prime};
    exps.push(*idx, pp.prime, pp.exponent);
  }
  return {std::move(exps), 0};
}

template <FactorSource F>
ExponentVector decompose_over_a_basis(std::uint64_t m, const PrimeSplit& split, const F& factors) {
  const std::uint64_t two_n = split.target().two_n();
  if (m < 3 || m % 2 == 0 || m >= two_n - 1)
    throw UsageError("decompose_over_a_basis: " + std::to_string(m) + " is not an odd number in [3, 2N-1)");
  auto d = try_decompose(m, split, factors);
  if (!d.exps) throw NotAPureAProduct(m, d.outside_prime, two_n);
  return std::move(*d.exps);
}

struct CompanionRecord {
  std::uint64_t p = 0;          // the A-prime
  std::size_t p_index = 0;      // its position in the A-basis
  std::uint64_t companion = 0;  // 2N - p
  bool companion_is_prime = false;
  NumberClass companion_class = NumberClass::AType;
  std::optional<ExponentVector> exps;
  std::uint64_t outside_prime = 0;

  // exponent of p itself in the companion's decomposition must be zero
  bool self_exponent_zero() const { return exps && exps->exponent_at(p_index) == 0; }

  bool holds(std::uint64_t two_n) const {
    return p + companion == two_n && companion_class == NumberClass::AType && exps && exps->value() == companion &&
           self_exponent_zero();
  }
};

// Calls fn(const CompanionRecord&) for every A-prime in ascending order.
template <FactorSource F, class Fn>
void for_each_companion(const PrimeSplit& split, const PrimeTable& table, const F& factors, Fn&& fn) {
  const std::uint64_t two_n = split.target().two_n();
  std::size_t index = 0;
  for (std::uint64_t p : split.a_primes()) {
    CompanionRecord rec;
    rec.p = p;
    rec.p_index = index++;
    rec.companion = two_n - p;
    rec.companion_is_prime = is_prime(rec.companion, table);
    rec.companion_class = class_by_gcd(rec.companion, two_n);
    auto d = try_decompose(rec.companion, split, factors);
    rec.exps = std::move(d.exps);
    rec.outside_prime = d.outside_prime;
    fn(static_cast<const CompanionRecord&>(rec));
  }
}

// Empty when s = 0.
template <FactorSource F>
std::vector<CompanionRecord> companions(const PrimeSplit& split, const PrimeTable& table, const F& factors) {
  std::vector<CompanionRecord> out;
  out.reserve(split.s());
  for_each_companion(split, table, factors, [&](const CompanionRecord& rec) { out.push_back(rec); });
  return out;
}

inline std::vector<CompanionRecord> companions(const PrimeSplit& split, const PrimeTable& table) {
  return companions(split, table, table);
}

struct PairingReport {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // p_qa < p_qb, both A-primes
  std::vector<std::uint64_t> unpaired;                         // A-primes with composite companion
  std::optional<std::uint64_t> b_self_pair;                    // p with 2N = 2p, p prime

  bool has_witness() const { return !pairs.empty() || b_self_pair.has_value(); }
};

inline PairingReport pairing_report(const PrimeSplit& split, const PrimeTable& table) {
  PairingReport out;
  const EvenTarget& t = split.target();
  const ABasis& basis = split.a_primes();
  for (std::uint64_t p : basis) {
    const std::uint64_t c = t.two_n() - p;
    if (is_prime(c, table) && basis.contains(c)) {
      if (p < c) out.pairs.emplace_back(p, c);
    } else {
      out.unpaired.push_back(p);
    }
  }
  if (t.n() % 2 == 1 && is_prime(t.n(), table)) out.b_self_pair = t.n();
  return out;
}

struct MidpointValue {
  std::uint64_t value = 0;
  bool is_prime = false;
  bool coprime = false;  // gcd(value, 2N) = 1
  std::optional<ExponentVector> exps;
  std::uint64_t outside_prime = 0;
};

struct MidpointReport {
  bool n_even = true;
  std::array<MidpointValue, 2> values{};  // (N-1, N+1) or (N-2, N+2)
  bool both_prime = false;
  // both prime and verified as a Goldbach partition of 2N
  bool goldbach_confirmed = false;

  bool coprime() const { return values[0].coprime && values[1].coprime; }
  bool decomposes() const { return values[0].exps.has_value() && values[1].exps.has_value(); }
};

template <FactorSource F>
MidpointReport midpoint_report(const PrimeSplit& split, const PrimeTable& table, const F& factors) {
  const EvenTarget& t = split.target();
  if (t.two_n() < 8) throw UsageError("midpoint_report: requires 2N >= 8");
  MidpointReport out;
  out.n_even = t.n() % 2 == 0;
  const std::uint64_t offset = out.n_even ? 1 : 2;
  const std::array<std::uint64_t, 2> vals{t.n() - offset, t.n() + offset};
  for (std::size_t i = 0; i < 2; ++i) {
    MidpointValue& mv = out.values[i];
    mv.value = vals[i];
    mv.is_prime = is_prime(mv.value, table);
    mv.coprime = binary_gcd(mv.value, t.two_n()) == 1;
    auto d = try_decompose(mv.value, split, factors);
    mv.exps = std::move(d.exps);
    mv.outside_prime = d.outside_prime;
  }
  out.both_prime = out.values[0].is_prime && out.values[1].is_prime;
  if (out.both_prime) {
    const auto a = out.values[0].value, b = out.values[1].value;
    out.goldbach_confirmed = a + b == t.two_n() && a % 2 == 1 && a >= 3 && miller_rabin(a) && miller_rabin(b);
  }
  return out;
}

inline MidpointReport midpoint_report(const PrimeSplit& split, const PrimeTable& table) {
  return midpoint_report(split, table, table);
}

// ---------------------------------------------------------------------------
// Claim outcomes

enum class ClaimId {
  SameTypeLemma,
  SBound,
  PrimePowerExclusion,
  MidpointCoprime,
  MidpointDecomposes,
  PairingNonEmpty,
  GoldbachWitness,
};

inline constexpr std::array<ClaimId, 7> kAllClaims{
    ClaimId::SameTypeLemma,   ClaimId::SBound,          ClaimId::PrimePowerExclusion, ClaimId::MidpointCoprime,
    ClaimId::MidpointDecomposes, ClaimId::PairingNonEmpty, ClaimId::GoldbachWitness,
};

constexpr std::string_view to_string(ClaimId id) {
  switch (id) {
    case ClaimId::SameTypeLemma:
      return "SameTypeLemma";
    case ClaimId::SBound:
      return "SBound";
    case ClaimId::PrimePowerExclusion:
      return "PrimePowerExclusion";
    case ClaimId::MidpointCoprime:
      return "MidpointCoprime";
    case ClaimId::MidpointDecomposes:
      return "MidpointDecomposes";
    case ClaimId::PairingNonEmpty:
      return "PairingNonEmpty";
    case ClaimId::GoldbachWitness:
      return "GoldbachWitness";
  }
  return "?";
}

// Case-insensitive; '_' and '-' are ignored, so "sbound", "same_type_lemma"
// and "GoldbachWitness" all parse.
inline std::optional<ClaimId> parse_claim(std::string_view text) {
  auto norm = [](std::string_view s) {
    std::string out;
    for (char c : s)
      if (c != '_' && c != '-') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
  };
  const std::string key = norm(text);
  for (ClaimId id : kAllClaims)
    if (norm(to_string(id)) == key) return id;
  return std::nullopt;
}

enum class ClaimStatus { Pass, Fail, Boundary };

constexpr std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass:
      return "pass";
    case ClaimStatus::Fail:
      return "fail";
    case ClaimStatus::Boundary:
      return "boundary";
  }
  return "?";
}

struct ClaimPayload {
  std::optional<std::uint64_t> two_n;  // witness or counterexample target
  std::vector<std::uint64_t> values;   // offending or witnessing numbers
  std::string detail;
};

struct ClaimOutcome {
  ClaimId claim = ClaimId::SameTypeLemma;
  std::uint64_t lo = 0;  // scope; lo == hi for a single target
  std::uint64_t hi = 0;
  ClaimStatus status = ClaimStatus::Pass;
  ClaimPayload payload;
  std::uint64_t evaluated = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t boundary = 0;

  bool ok() const { return status != ClaimStatus::Fail; }
};

inline ClaimOutcome single_outcome(ClaimId id, const EvenTarget& t, ClaimStatus status,
                                   std::vector<std::uint64_t> values, std::string detail) {
  ClaimOutcome out;
  out.claim = id;
  out.lo = out.hi = t.two_n();
  out.status = status;
  out.payload = ClaimPayload{t.two_n(), std::move(values), std::move(detail)};
  out.evaluated = 1;
  out.passed = status == ClaimStatus::Pass;
  out.failed = status == ClaimStatus::Fail;
  out.boundary = status == ClaimStatus::Boundary;
  return out;
}

inline ClaimOutcome verify_s_bounds(const PrimeSplit& split) {
  const EvenTarget& t = split.target();
  const std::uint64_t s = split.s();
  const std::string detail = "s=" + std::to_string(s);
  if (t.is_boundary()) return single_outcome(ClaimId::SBound, t, ClaimStatus::Boundary, {s}, detail + " at 2N=6");
  return single_outcome(ClaimId::SBound, t, s >= 2 ? ClaimStatus::Pass : ClaimStatus::Fail, {s},
                        s >= 2 ? detail : detail + " < 2");
}

// 2N = p + p^k would make p divide 2N, so no A-prime may divide 2N - p.
inline ClaimOutcome prime_power_exclusion(const PrimeSplit& split) {
  const EvenTarget& t = split.target();
  if (t.is_boundary())
    return single_outcome(ClaimId::PrimePowerExclusion, t, ClaimStatus::Boundary, {}, "no A-primes at 2N=6");
  const std::uint64_t two_n = t.two_n();
  for (std::uint64_t p : split.a_primes()) {
    if ((two_n - p) % p == 0)
      return single_outcome(ClaimId::PrimePowerExclusion, t, ClaimStatus::Fail, {p, two_n - p},
                            "A-prime " + std::to_string(p) + " divides 2N - p = " + std::to_string(two_n - p));
  }
  return single_outcome(ClaimId::PrimePowerExclusion, t, ClaimStatus::Pass, {},
                        "checked " + std::to_string(split.s()) + " A-primes");
}

inline ClaimOutcome same_type_outcome(const EvenTarget& t, const PartitionCensus& c) {
  if (c.mixed_count > 0) {
    const auto& m = *c.first_mixed;
    return single_outcome(ClaimId::SameTypeLemma, t, ClaimStatus::Fail, {m.a, m.b},
                          std::to_string(c.mixed_count) + " mixed partitions; first " + std::to_string(m.a) + " + " +
                              std::to_string(m.b));
  }
  return single_outcome(ClaimId::SameTypeLemma, t, ClaimStatus::Pass, {},
                        std::to_string(c.total) + " partitions, none mixed");
}

template <FactorSource F>
ClaimOutcome verify_same_type_lemma(const EvenTarget& t, const PrimeTable& table, const F& factors) {
  return same_type_outcome(t, census(t, table, factors));
}

inline ClaimOutcome verify_same_type_lemma(const EvenTarget& t, const PrimeTable& table) {
  return verify_same_type_lemma(t, table, table);
}

inline ClaimOutcome midpoint_coprime_outcome(const EvenTarget& t, const MidpointReport& r) {
  const std::vector<std::uint64_t> vals{r.values[0].value, r.values[1].value};
  if (r.coprime()) return single_outcome(ClaimId::MidpointCoprime, t, ClaimStatus::Pass, vals, "both coprime to 2N");
  return single_outcome(ClaimId::MidpointCoprime, t, ClaimStatus::Fail, vals, "midpoint shares a factor with 2N");
}

inline ClaimOutcome midpoint_decomposes_outcome(const EvenTarget& t, const MidpointReport& r) {
  const std::vector<std::uint64_t> vals{r.values[0].value, r.values[1].value};
  if (!r.decomposes()) {
    const auto& bad = r.values[0].exps ? r.values[1] : r.values[0];
    return single_outcome(ClaimId::MidpointDecomposes, t, ClaimStatus::Fail, {bad.value, bad.outside_prime},
                          std::to_string(bad.value) + " has factor " + std::to_string(bad.outside_prime) +
                              " outside the A-basis");
  }
  if (r.both_prime && !r.goldbach_confirmed)
    return single_outcome(ClaimId::MidpointDecomposes, t, ClaimStatus::Fail, vals,
                          "both midpoints prime but not a Goldbach partition");
  return single_outcome(ClaimId::MidpointDecomposes, t, ClaimStatus::Pass, vals,
                        r.both_prime ? "both prime, Goldbach partition confirmed" : "at least one product");
}

inline ClaimOutcome pairing_outcome(const EvenTarget& t, const PairingReport& r) {
  if (t.is_boundary())
    return single_outcome(ClaimId::PairingNonEmpty, t, ClaimStatus::Boundary,
                          r.b_self_pair ? std::vector<std::uint64_t>{*r.b_self_pair, *r.b_self_pair}
                                        : std::vector<std::uint64_t>{},
                          "no A-primes at 2N=6");
  if (!r.pairs.empty())
    return single_outcome(ClaimId::PairingNonEmpty, t, ClaimStatus::Pass, {r.pairs[0].first, r.pairs[0].second},
                          std::to_string(r.pairs.size()) + " A-prime pairs");
  if (r.b_self_pair)
    return single_outcome(ClaimId::PairingNonEmpty, t, ClaimStatus::Pass, {*r.b_self_pair, *r.b_self_pair},
                          "B-type self-pair only");
  return single_outcome(ClaimId::PairingNonEmpty, t, ClaimStatus::Fail, {}, "no A-prime pair and no self-pair");
}

// Smallest p with p and 2N - p both odd primes.
inline ClaimOutcome goldbach_witness(const EvenTarget& t, const PrimeTable& table) {
  for (std::uint64_t p = 3; p <= t.n(); p += 2) {
    if (!is_prime(p, table)) continue;
    const std::uint64_t q = t.two_n() - p;
    if (!is_prime(q, table)) continue;
    const bool self = p == q;
    const std::string detail = self ? "B-type self-pair" : "A-type pair";
    return single_outcome(ClaimId::GoldbachWitness, t, t.is_boundary() ? ClaimStatus::Boundary : ClaimStatus::Pass,
                          {p, q}, detail);
  }
  return single_outcome(ClaimId::GoldbachWitness, t, ClaimStatus::Fail, {}, "no Goldbach partition");
}

// Evaluates `claims` for one target and hands each outcome to sink in the
// order given. The split is passed in so callers can also read s.
template <FactorSource F, class Sink>
void evaluate_claims(const PrimeSplit& split, std::span<const ClaimId> claims, const PrimeTable& table,
                     const F& factors, Sink&& sink) {
  const EvenTarget& t = split.target();
  std::optional<MidpointReport> midpoints;
  auto midpoint = [&]() -> const MidpointReport& {
    if (!midpoints) midpoints = midpoint_report(split, table, factors);
    return *midpoints;
  };
  for (ClaimId id : claims) {
    switch (id) {
      case ClaimId::SameTypeLemma:
        sink(verify_same_type_lemma(t, table, factors));
        break;
      case ClaimId::SBound:
        sink(verify_s_bounds(split));
        break;
      case ClaimId::PrimePowerExclusion:
        sink(prime_power_exclusion(split));
        break;
      case ClaimId::MidpointCoprime:
        if (t.is_boundary())
          sink(single_outcome(id, t, ClaimStatus::Boundary, {}, "midpoints need 2N >= 8"));
        else
          sink(midpoint_coprime_outcome(t, midpoint()));
        break;
      case ClaimId::MidpointDecomposes:
        if (t.is_boundary())
          sink(single_outcome(id, t, ClaimStatus::Boundary, {}, "midpoints need 2N >= 8"));
        else
          sink(midpoint_decomposes_outcome(t, midpoint()));
        break;
      case ClaimId::PairingNonEmpty:
        sink(pairing_outcome(t, pairing_report(split, table)));
        break;
      case ClaimId::GoldbachWitness:
        sink(goldbach_witness(t, table));
        break;
    }
  }
}

// ---------------------------------------------------------------------------
// Range verification

struct SExtremes {
  std::uint64_t min_s = 0;
  std::uint64_t min_s_at = 0;
  std::uint64_t max_s = 0;
  std::uint64_t max_s_at = 0;
  bool any = false;

  void add(std::uint64_t two_n, std::uint64_t s) {
    if (!any || s < min_s) min_s = s, min_s_at = two_n;
    if (!any || s > max_s) max_s = s, max_s_at = two_n;
    any = true;
  }
  // `later` covers strictly larger targets; ties keep the smaller 2N.
  void merge(const SExtremes& later) {
    if (!later.any) return;
    if (!any) {
      *this = later;
      return;
    }
    if (later.min_s < min_s) min_s = later.min_s, min_s_at = later.min_s_at;
    if (later.max_s > max_s) max_s = later.max_s, max_s_at = later.max_s_at;
  }
};

struct RangeReport {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<ClaimOutcome> outcomes;  // one per selected claim, in claim order
  SExtremes s_stats;

  bool all_ok() const {
    return std::ranges::all_of(outcomes, [](const ClaimOutcome& o) { return o.ok(); });
  }
};

inline constexpr std::uint64_t kTargetsPerChunk = 4096;

// Sorted, de-duplicated claim list.
inline std::vector<ClaimId> normalize_claims(std::span<const ClaimId> claims) {
  std::vector<ClaimId> out(claims.begin(), claims.end());
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline void check_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo % 2 != 0 || hi % 2 != 0) throw UsageError("range bounds must be even");
  if (lo < 6) throw UsageError("range must start at 6 or above");
  if (lo > hi) throw UsageError("empty range: lo > hi");
}

namespace detail {

struct ClaimAccumulator {
  std::uint64_t evaluated = 0, passed = 0, failed = 0, boundary = 0;
  std::optional<ClaimOutcome> first_fail;

  void add(ClaimOutcome&& o) {
    ++evaluated;
    passed += o.status == ClaimStatus::Pass;
    failed += o.status == ClaimStatus::Fail;
    boundary += o.status == ClaimStatus::Boundary;
    if (o.status == ClaimStatus::Fail && !first_fail) first_fail = std::move(o);
  }
  void merge(ClaimAccumulator&& later) {
    evaluated += later.evaluated;
    passed += later.passed;
    failed += later.failed;
    boundary += later.boundary;
    if (!first_fail) first_fail = std::move(later.first_fail);
  }
};

struct ChunkResult {
  std::vector<ClaimAccumulator> per_claim;
  SExtremes s_stats;
};

}  // namespace detail

// Evaluates every claim for every even 2N in [lo, hi]. The table must reach
// hi. Output is a function of (lo, hi, claims) only: chunks are merged in
// ascending order and the reported counterexample is the smallest failing 2N.
template <FactorSource F>
RangeReport range_verify(std::uint64_t lo, std::uint64_t hi, std::span<const ClaimId> claims, unsigned workers,
                         const PrimeTable& table, const F& factors) {
  check_range(lo, hi);
  if (workers == 0) throw UsageError("workers must be >= 1");
  if (!table.covers(hi)) throw UsageError("range_verify: prime table does not reach hi");
  const std::vector<ClaimId> selected = normalize_claims(claims);

  const std::uint64_t targets = (hi - lo) / 2 + 1;
  const std::size_t chunks = static_cast<std::size_t>((targets + kTargetsPerChunk - 1) / kTargetsPerChunk);

  auto results = run_chunks<detail::ChunkResult>(chunks, workers, [&](std::size_t c) {
    detail::ChunkResult res;
    res.per_claim.resize(selected.size());
    const std::uint64_t first = lo + 2 * kTargetsPerChunk * c;
    const std::uint64_t last = std::min(hi, first + 2 * (kTargetsPerChunk - 1));
    for (std::uint64_t two_n = first; two_n <= last; two_n += 2) {
      const EvenTarget t(two_n);
      const PrimeSplit split = split_primes(t, table, factors);
      res.s_stats.add(two_n, split.s());
      std::size_t k = 0;
      evaluate_claims(split, selected, table, factors, [&](ClaimOutcome&& o) { res.per_claim[k++].add(std::move(o)); });
    }
    return res;
  });

  RangeReport report;
  report.lo = lo;
  report.hi = hi;
  std::vector<detail::ClaimAccumulator> totals(selected.size());
  for (auto& chunk : results) {
    for (std::size_t k = 0; k < selected.size(); ++k) totals[k].merge(std::move(chunk.per_claim[k]));
    report.s_stats.merge(chunk.s_stats);
  }

  for (std::size_t k = 0; k < selected.size(); ++k) {
    auto& acc = totals[k];
    ClaimOutcome out;
    out.claim = selected[k];
    out.lo = lo;
    out.hi = hi;
    out.evaluated = acc.evaluated;
    out.passed = acc.passed;
    out.failed = acc.failed;
    out.boundary = acc.boundary;
    if (acc.first_fail) {
      out.status = ClaimStatus::Fail;
      out.payload = std::move(acc.first_fail->payload);
    } else {
      out.status = acc.passed > 0 ? ClaimStatus::Pass : ClaimStatus::Boundary;
      out.payload.detail = std::to_string(acc.passed) + " pass, " + std::to_string(acc.boundary) + " boundary";
    }
    report.outcomes.push_back(std::move(out));
  }
  return report;
}

// FactorTable is used for the per-target factorizations up to this limit;
// past it, trial division by the prime table takes over.
inline constexpr std::uint64_t kFactorTableMax = std::uint64_t{1} << 25;

// Builds a table reaching hi + 1 and verifies the range.
inline RangeReport range_verify(std::uint64_t lo, std::uint64_t hi, std::span<const ClaimId> claims,
                                unsigned workers, std::size_t segment_size = kDefaultSegmentSize) {
  check_range(lo, hi);
  const PrimeTable table = build_table(hi + 1, segment_size);
  if (hi + 1 <= kFactorTableMax) {
    const FactorTable factors(static_cast<std::uint32_t>(hi + 1));
    return range_verify(lo, hi, claims, workers, table, factors);
  }
  return range_verify(lo, hi, claims, workers, table, table);
}

}  // namespace abgold
