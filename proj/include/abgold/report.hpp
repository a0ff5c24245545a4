#pragma once

// JSON and CSV renderings of the analysis types. JSON keys mirror the
// struct fields in lower_snake_case.

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "abgold/claims.hpp"
#include "abgold/classify.hpp"
#include "abgold/partition.hpp"
#include "abgold/sieve.hpp"
#include "json.hpp"

namespace abgold {

using json = nlohmann::ordered_json;

inline void to_json(json& j, const FactorMultiset& f) {
  j = json::array();
  for (const auto& pp : f) j.push_back({{"prime", pp.prime}, {"exponent", pp.exponent}});
}

inline void to_json(json& j, const EvenFactorization& ef) { j = {{"m", ef.m}, {"b_factors", ef.b_factors}}; }

inline void to_json(json& j, const PrimeSplit& split) {
  j = {{"a_primes", split.a_primes().to_vector()},
       {"b_primes", std::vector<std::uint64_t>(split.b_primes().begin(), split.b_primes().end())},
       {"s", split.s()}};
}

inline void to_json(json& j, const OddPartition& p) { j = {{"a", p.a}, {"b", p.b}, {"kind", to_string(p.kind)}}; }

inline void to_json(json& j, const PartitionCensus& c) {
  j = {{"two_n", c.two_n},
       {"total", c.total},
       {"a_count", c.a_count},
       {"b_count", c.b_count},
       {"mixed_count", c.mixed_count},
       {"goldbach_count", c.goldbach_count},
       {"goldbach_pairs", c.goldbach_pairs}};
  if (c.first_mixed) j["first_mixed"] = *c.first_mixed;
}

// Sparse: the basis is the enclosing split's a_primes; omitted indices are 0.
inline void to_json(json& j, const ExponentVector& v) {
  json terms = json::array();
  for (const auto& t : v.terms()) terms.push_back({{"index", t.index}, {"prime", t.prime}, {"exponent", t.exponent}});
  j = {{"basis_size", v.basis_size()}, {"terms", terms}};
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

inline void to_json(json& j, const CompanionRecord& r) {
  j = {{"p", r.p},
       {"companion", r.companion},
       {"companion_is_prime", r.companion_is_prime},
       {"companion_class", to_string(r.companion_class)},
       {"exps", optional_json(r.exps)}};
}

inline void to_json(json& j, const PairingReport& r) {
  json pairs = json::array();
  for (const auto& [a, b] : r.pairs) pairs.push_back({a, b});
  j = {{"pairs", pairs}, {"unpaired", r.unpaired}, {"b_self_pair", optional_json(r.b_self_pair)}};
}

inline void to_json(json& j, const MidpointValue& v) {
  j = {{"value", v.value}, {"is_prime", v.is_prime}, {"coprime", v.coprime}, {"exps", optional_json(v.exps)}};
}

inline void to_json(json& j, const MidpointReport& r) {
  j = {{"parity", r.n_even ? "N even" : "N odd"},
       {"values", {r.values[0], r.values[1]}},
       {"both_prime", r.both_prime},
       {"goldbach_confirmed", r.goldbach_confirmed}};
}

inline void to_json(json& j, const ClaimOutcome& o) {
  j = {{"claim_id", to_string(o.claim)},
       {"scope", {{"lo", o.lo}, {"hi", o.hi}}},
       {"status", to_string(o.status)},
       {"payload",
        {{"two_n", optional_json(o.payload.two_n)}, {"values", o.payload.values}, {"detail", o.payload.detail}}},
       {"evaluated", o.evaluated},
       {"passed", o.passed},
       {"failed", o.failed},
       {"boundary", o.boundary}};
}

inline void to_json(json& j, const SExtremes& s) {
  j = {{"min_s", s.min_s}, {"min_s_at", s.min_s_at}, {"max_s", s.max_s}, {"max_s_at", s.max_s_at}};
}

inline void to_json(json& j, const RangeReport& r) {
  j = {{"lo", r.lo}, {"hi", r.hi}, {"all_ok", r.all_ok()}, {"outcomes", r.outcomes}, {"s_stats", r.s_stats}};
}

// Everything known about one target.
struct Analysis {
  EvenTarget target;
  EvenFactorization factorization;
  PrimeSplit split;
  PartitionCensus census;
  std::vector<CompanionRecord> companions;
  PairingReport pairing;
  std::optional<MidpointReport> midpoints;  // absent at 2N = 6
  std::vector<ClaimOutcome> claims;

  bool all_ok() const {
    return std::ranges::all_of(claims, [](const ClaimOutcome& o) { return o.ok(); });
  }
};

template <FactorSource F>
Analysis analyze(const EvenTarget& t, const PrimeTable& table, const F& factors) {
  PrimeSplit split = split_primes(t, table, factors);
  Analysis a{t,
             factorize_even(t, factors),
             split,
             census(t, table, factors),
             companions(split, table, factors),
             pairing_report(split, table),
             std::nullopt,
             {}};
  if (!t.is_boundary()) a.midpoints = midpoint_report(a.split, table, factors);
  evaluate_claims(a.split, kAllClaims, table, factors, [&](ClaimOutcome&& o) { a.claims.push_back(std::move(o)); });
  return a;
}

inline void to_json(json& j, const Analysis& a) {
  j = {{"two_n", a.target.two_n()},
       {"n", a.target.n()},
       {"boundary", a.target.is_boundary()},
       {"even_factorization", a.factorization},
       {"prime_split", a.split},
       {"partition_census", a.census},
       {"companions", a.companions},
       {"pairing_report", a.pairing},
       {"midpoint_report", optional_json(a.midpoints)},
       {"claims", a.claims}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <class Range>
std::string joined(const Range& r, char sep = ';') {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : r) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

}  // namespace detail

// Flat "section,key,value" listing; list values are ';'-separated.
inline void write_analysis_csv(std::ostream& os, const Analysis& a) {
  using detail::csv_field;
  using detail::joined;
  auto row = [&](const char* section, const std::string& key, const std::string& value) {
    os << section << ',' << csv_field(key) << ',' << csv_field(value) << '\n';
  };
  os << "section,key,value\n";
  row("target", "two_n", std::to_string(a.target.two_n()));
  row("target", "boundary", a.target.is_boundary() ? "true" : "false");
  row("even_factorization", "m", std::to_string(a.factorization.m));
  std::vector<std::string> bf;
  for (const auto& pp : a.factorization.b_factors)
    bf.push_back(std::to_string(pp.prime) + "^" + std::to_string(pp.exponent));
  row("even_factorization", "b_factors", joined(bf));
  row("prime_split", "a_primes", joined(a.split.a_primes()));
  row("prime_split", "b_primes", joined(a.split.b_primes()));
  row("prime_split", "s", std::to_string(a.split.s()));
  row("partition_census", "total", std::to_string(a.census.total));
  row("partition_census", "a_count", std::to_string(a.census.a_count));
  row("partition_census", "b_count", std::to_string(a.census.b_count));
  row("partition_census", "mixed_count", std::to_string(a.census.mixed_count));
  row("partition_census", "goldbach_count", std::to_string(a.census.goldbach_count));
  std::vector<std::string> gp;
  for (const auto& p : a.census.goldbach_pairs)
    gp.push_back(std::to_string(p.a) + "+" + std::to_string(p.b) + ":" + std::string(to_string(p.kind)));
  row("partition_census", "goldbach_pairs", joined(gp));
  for (const auto& c : a.companions) {
    std::vector<std::string> terms;
    if (c.exps)
      for (const auto& t : c.exps->terms()) terms.push_back(std::to_string(t.prime) + "^" + std::to_string(t.exponent));
    row("companions", std::to_string(c.p),
        std::to_string(c.companion) + (c.companion_is_prime ? " prime " : " composite ") +
            (c.exps ? joined(terms) : std::string("not-decomposable")));
  }
  std::vector<std::string> pairs;
  for (const auto& [p, q] : a.pairing.pairs) pairs.push_back(std::to_string(p) + "+" + std::to_string(q));
  row("pairing_report", "pairs", joined(pairs));
  row("pairing_report", "unpaired", joined(a.pairing.unpaired));
  row("pairing_report", "b_self_pair", a.pairing.b_self_pair ? std::to_string(*a.pairing.b_self_pair) : "");
  if (a.midpoints) {
    for (const auto& v : a.midpoints->values)
      row("midpoint_report", std::to_string(v.value),
          std::string(v.is_prime ? "prime" : "composite") + (v.coprime ? " coprime" : " not-coprime"));
    row("midpoint_report", "goldbach_confirmed", a.midpoints->goldbach_confirmed ? "true" : "false");
  }
  for (const auto& o : a.claims)
    row("claims", std::string(to_string(o.claim)),
        std::string(to_string(o.status)) + (o.payload.detail.empty() ? "" : " " + o.payload.detail));
}

inline constexpr const char* kVerifyCsvHeader =
    "claim,status,lo,hi,evaluated,passed,failed,boundary,two_n,values,detail,min_s,min_s_at,max_s,max_s_at";

inline void write_range_csv(std::ostream& os, const RangeReport& r) {
  os << kVerifyCsvHeader << '\n';
  for (const auto& o : r.outcomes) {
    os << to_string(o.claim) << ',' << to_string(o.status) << ',' << o.lo << ',' << o.hi << ',' << o.evaluated << ','
       << o.passed << ',' << o.failed << ',' << o.boundary << ','
       << (o.payload.two_n ? std::to_string(*o.payload.two_n) : "") << ',' << detail::joined(o.payload.values) << ','
       << detail::csv_field(o.payload.detail) << ',' << r.s_stats.min_s << ',' << r.s_stats.min_s_at << ','
       << r.s_stats.max_s << ',' << r.s_stats.max_s_at << '\n';
  }
}

inline constexpr const char* kCensusCsvHeader = "two_n,total,a_count,b_count,mixed_count,r";

inline void write_census_csv_row(std::ostream& os, const PartitionCensus& c) {
  os << c.two_n << ',' << c.total << ',' << c.a_count << ',' << c.b_count << ',' << c.mixed_count << ','
     << c.goldbach_count << '\n';
}

}  // namespace abgold
