// abgold: per-target A/B analysis, range verification and Goldbach comet export.
//
// Exit codes: 0 all claims pass (boundary allowed), 1 counterexample found,
// 2 usage error.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "abgold/abgold.hpp"
#include "abgold/report.hpp"

namespace {

using abgold::UsageError;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::size_t segment_size = abgold::kDefaultSegmentSize;
  std::string format;
  std::string out;
};

struct RangeArgs {
  std::vector<std::uint64_t> bounds;  // positional: one value or LO HI
  std::string range;                  // --range LO..HI
};

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not a non-negative integer: '" + s + "'");
  return v;
}

std::pair<std::uint64_t, std::uint64_t> resolve_range(const RangeArgs& args) {
  if (!args.range.empty()) {
    if (!args.bounds.empty()) throw UsageError("give either --range or positional bounds, not both");
    const auto dots = args.range.find("..");
    if (dots == std::string::npos) throw UsageError("--range expects LO..HI");
    return {parse_u64(args.range.substr(0, dots)), parse_u64(args.range.substr(dots + 2))};
  }
  if (args.bounds.size() == 1) return {args.bounds[0], args.bounds[0]};
  if (args.bounds.size() == 2) return {args.bounds[0], args.bounds[1]};
  throw UsageError("expected a range: LO HI or --range LO..HI");
}

void add_common(CLI::App* sub, CommonOptions& opts, const std::string& default_format) {
  opts.format = default_format;
  sub->add_option("--workers", opts.workers, "Worker threads")->envname("ABGOLD_WORKERS")->check(CLI::PositiveNumber);
  sub->add_option("--segment-size", opts.segment_size, "Sieve segment size (odd candidates)")
      ->envname("ABGOLD_SEGMENT_SIZE")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", opts.out, "Output path (default: standard output)");
}

// Writes through to --out when given, otherwise standard output.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

// Runs fn(table, factors) with the fastest factor source that fits in memory.
template <class Fn>
int with_tables(std::uint64_t hi, std::size_t segment_size, Fn&& fn) {
  const abgold::PrimeTable table = abgold::build_table(hi + 1, segment_size);
  if (hi + 1 <= abgold::kFactorTableMax) {
    const abgold::FactorTable factors(static_cast<std::uint32_t>(hi + 1));
    return fn(table, factors);
  }
  return fn(table, table);
}

std::vector<abgold::ClaimId> parse_claim_list(const std::string& text, bool all) {
  if (all || text.empty() || text == "all") return {abgold::kAllClaims.begin(), abgold::kAllClaims.end()};
  std::vector<abgold::ClaimId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) {
      const auto id = abgold::parse_claim(item);
      if (!id) throw UsageError("unknown claim '" + item + "'");
      out.push_back(*id);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw UsageError("no claims selected");
  return out;
}

int cmd_analyze(std::uint64_t two_n, const CommonOptions& opts) {
  const abgold::EvenTarget t(two_n);
  return with_tables(two_n, opts.segment_size, [&](const auto& table, const auto& factors) {
    const abgold::Analysis a = abgold::analyze(t, table, factors);
    Output out(opts.out);
    if (opts.format == "csv")
      abgold::write_analysis_csv(out.stream(), a);
    else
      out.stream() << abgold::json(a).dump(2) << '\n';
    return a.all_ok() ? kExitPass : kExitCounterexample;
  });
}

int cmd_verify(std::uint64_t lo, std::uint64_t hi, const std::vector<abgold::ClaimId>& claims,
               const CommonOptions& opts) {
  abgold::check_range(lo, hi);
  return with_tables(hi, opts.segment_size, [&](const auto& table, const auto& factors) {
    const abgold::RangeReport report = abgold::range_verify(lo, hi, claims, opts.workers, table, factors);
    Output out(opts.out);
    if (opts.format == "json")
      out.stream() << abgold::json(report).dump(2) << '\n';
    else
      abgold::write_range_csv(out.stream(), report);
    for (const auto& o : report.outcomes) {
      if (o.ok()) continue;
      std::cerr << "counterexample: " << abgold::to_string(o.claim) << " at 2N=" << o.payload.two_n.value_or(0)
                << ": " << o.payload.detail << '\n';
    }
    return report.all_ok() ? kExitPass : kExitCounterexample;
  });
}

int cmd_comet(std::uint64_t lo, std::uint64_t hi, const CommonOptions& opts) {
  abgold::check_range(lo, hi);
  return with_tables(hi, opts.segment_size, [&](const auto& table, const auto& factors) {
    const auto rows = abgold::comet_rows(lo, hi, opts.workers, table, factors);
    Output out(opts.out);
    if (opts.format == "json") {
      abgold::json arr = abgold::json::array();
      for (const auto& r : rows)
        arr.push_back({{"two_n", r.two_n}, {"r", r.r}, {"s", r.s}, {"a_count", r.a_count}, {"b_count", r.b_count}});
      out.stream() << arr.dump(2) << '\n';
    } else {
      abgold::write_comet_csv(out.stream(), rows);
    }
    return kExitPass;
  });
}

int cmd_census(std::uint64_t lo, std::uint64_t hi, const CommonOptions& opts) {
  abgold::check_range(lo, hi);
  return with_tables(hi, opts.segment_size, [&](const auto& table, const auto& factors) {
    Output out(opts.out);
    bool mixed = false;
    abgold::json arr = abgold::json::array();
    if (opts.format == "csv") out.stream() << abgold::kCensusCsvHeader << '\n';
    for (std::uint64_t two_n = lo; two_n <= hi; two_n += 2) {
      const auto c = abgold::census(abgold::EvenTarget(two_n), table, factors);
      mixed = mixed || c.mixed_count > 0;
      if (opts.format == "csv")
        abgold::write_census_csv_row(out.stream(), c);
      else
        arr.push_back(c);
    }
    if (opts.format == "json") out.stream() << (lo == hi ? arr[0] : arr).dump(2) << '\n';
    return mixed ? kExitCounterexample : kExitPass;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A/B-type prime classification and Goldbach partition verification"};
  app.require_subcommand(1);

  CommonOptions analyze_opts, verify_opts, comet_opts, census_opts;

  std::uint64_t analyze_target = 0;
  auto* analyze = app.add_subcommand("analyze", "Full report for one even target 2N");
  analyze->add_option("two_n", analyze_target, "Even target >= 6")->required();
  add_common(analyze, analyze_opts, "json");

  RangeArgs verify_range;
  std::string claim_text;
  bool all_claims = false;
  auto* verify = app.add_subcommand("verify", "Verify claims over an even range");
  verify->add_option("bounds", verify_range.bounds, "LO HI")->expected(1, 2)->type_name("UINT");
  verify->add_option("--range", verify_range.range, "LO..HI");
  verify->add_option("--claims", claim_text, "Comma-separated claim names, or 'all'");
  verify->add_flag("--all", all_claims, "Verify every claim");
  add_common(verify, verify_opts, "csv");

  RangeArgs comet_range;
  auto* comet = app.add_subcommand("comet", "Export two_n,r,s,a_count,b_count rows");
  comet->add_option("bounds", comet_range.bounds, "LO HI")->expected(1, 2)->type_name("UINT");
  comet->add_option("--range", comet_range.range, "LO..HI");
  add_common(comet, comet_opts, "csv");

  RangeArgs census_range;
  auto* census = app.add_subcommand("census", "Odd-partition census for one target or a range");
  census->add_option("bounds", census_range.bounds, "2N, or LO HI")->expected(1, 2)->type_name("UINT");
  census->add_option("--range", census_range.range, "LO..HI");
  add_common(census, census_opts, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_target, analyze_opts);
    if (*verify) {
      const auto [lo, hi] = resolve_range(verify_range);
      return cmd_verify(lo, hi, parse_claim_list(claim_text, all_claims), verify_opts);
    }
    if (*comet) {
      const auto [lo, hi] = resolve_range(comet_range);
      return cmd_comet(lo, hi, comet_opts);
    }
    if (*census) {
      const auto [lo, hi] = resolve_range(census_range);
      return cmd_census(lo, hi, census_opts);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return kExitUsage;
}
