// pretzel: slice obstructions for odd pretzel knots.
//
//   pretzel analyze -- -3,-7,-19,3,47 --json
//   pretzel census --max 21 --pairs 0 --out census.jsonl
//   pretzel selftest

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pretzel/error.hpp"
#include "pretzel/pipeline.hpp"
#include "pretzel/record.hpp"
#include "pretzel/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftestFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int cmd_analyze(std::vector<std::string> args, bool json, bool csv) {
  // Flags given after a `--` sentinel arrive as positionals.
  std::string text;
  for (const auto& a : args) {
    if (a == "--json") json = true;
    else if (a == "--csv") csv = true;
    else text += (text.empty() || text.back() == ',' || a.front() == ',' ? "" : ",") + a;
  }
  if (json && csv) {
    std::cerr << "analyze: --json and --csv are exclusive\n";
    return kExitUsage;
  }
  pretzel::PretzelTuple t;
  try {
    t = pretzel::PretzelTuple::parse(text);
  } catch (const pretzel::PretzelError& e) {
    std::cerr << "analyze: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto record = pretzel::make_record(t, pretzel::evaluate(t));
  if (json)
    std::cout << pretzel::to_json(record).dump() << "\n";
  else if (csv)
    std::cout << pretzel::csv_header() << "\n" << pretzel::to_csv_row(record) << "\n";
  else
    std::cout << pretzel::to_text(record);
  return kExitOk;
}

int cmd_census(const pretzel::CensusOptions& opts, bool csv, const std::string& out_path) {
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::out | std::ios::trunc);
    if (!file) {
      std::cerr << "census: cannot open " << out_path << "\n";
      return kExitIo;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  std::map<std::string, long> counts;
  long total = 0;
  try {
    if (csv) out << pretzel::csv_header() << "\n";
    pretzel::census(opts, [&](const pretzel::CensusRecord& rec) {
      const auto r = pretzel::make_record(rec.tuple, rec.verdict);
      if (csv)
        out << pretzel::to_csv_row(r) << "\n";
      else
        out << pretzel::to_json(r).dump() << "\n";
      if (!out) throw std::ios_base::failure("write failed");
      ++total;
      ++counts[r.verdict + (r.reason ? "/" + *r.reason : "")];
    });
    out.flush();
    if (!out) throw std::ios_base::failure("flush failed");
  } catch (const pretzel::PretzelError& e) {
    std::cerr << "census: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "census: I/O error: " << e.what() << "\n";
    return kExitIo;
  }
  std::cerr << "census: " << total << " records";
  for (const auto& [k, n] : counts) std::cerr << "  " << k << "=" << n;
  std::cerr << "\n";
  return kExitOk;
}

int cmd_selftest(int bound, unsigned threads) {
  const auto results = pretzel::run_selftest(bound, threads);
  bool ok = true;
  for (const auto& r : results) {
    std::printf("[%s] %-48s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    ok = ok && r.passed;
  }
  std::printf("%s\n", ok ? "selftest passed" : "selftest FAILED");
  return ok ? kExitOk : kExitSelftestFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice obstructions for odd pretzel knots"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Evaluate one pretzel tuple (use -- before negative values)");
  std::vector<std::string> tuple_args;
  bool json = false, csv = false;
  analyze->add_option("tuple", tuple_args, "Comma-separated nonzero twist parameters")->required();
  analyze->add_flag("--json", json, "Emit one JSON record");
  analyze->add_flag("--csv", csv, "Emit a CSV header and row");

  auto* census = app.add_subcommand(
      "census",
      "Evaluate every multiset {-a,-b,-c,d,e} with odd 1 <= a <= b <= c <= MAX and odd "
      "d <= e <= DE_MAX that has vanishing signature");
  pretzel::CensusOptions opts;
  int pairs = -1;
  bool census_json = false, census_csv = false;
  std::string out_path;
  census->add_option("--max", opts.odd_bound, "Odd bound on a, b, c")->default_val(21);
  census->add_option("--de-max", opts.de_bound,
                     "Odd cap on d, e; 0 uses (a+b+c)*MAX, default MAX")
      ->default_val(-1);
  census->add_option("--pairs", pairs, "Keep only t-pair multisets")->check(CLI::Range(0, 2));
  census->add_flag("--no-single-twists", opts.no_single_twists, "Drop multisets containing +-1");
  census->add_flag("--simple-ribbon-only", opts.simple_ribbon_only,
                   "Keep only multisets with a simple-ribbon ordering");
  census->add_flag("--json", census_json, "JSONL output (default)");
  census->add_flag("--csv", census_csv, "CSV output");
  census->add_option("--out", out_path, "Output file (default stdout)");
  census->add_option("--threads", opts.threads, "Worker threads (0 = all cores)")->default_val(0);

  auto* selftest = app.add_subcommand("selftest", "Check every identity the obstructions rely on");
  int selftest_bound = 15;
  unsigned selftest_threads = 0;
  selftest->add_option("--max", selftest_bound, "Census bound for census-backed checks")->default_val(15);
  selftest->add_option("--threads", selftest_threads, "Worker threads (0 = all cores)")->default_val(0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (analyze->parsed()) return cmd_analyze(tuple_args, json, csv);
  if (census->parsed()) {
    if (census_json && census_csv) {
      std::cerr << "census: --json and --csv are exclusive\n";
      return kExitUsage;
    }
    if (pairs >= 0) opts.pairs = pairs;
    return cmd_census(opts, census_csv, out_path);
  }
  return cmd_selftest(selftest_bound, selftest_threads);
}
