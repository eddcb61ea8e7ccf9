// Flat, serializable view of a verdict: one JSON object (JSONL line) or CSV
// row per knot. Field order is fixed; see docs/record_format.md.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pretzel/pipeline.hpp"

namespace pretzel {

struct SolutionRecord {
  std::vector<long> solution;  ///< alpha, beta, gamma, x, y, z
  std::vector<long> v1_tilde, v2_tilde;
  long R = 0, H = 0, H_bar = 0;
  bool cond_I = false, cond_II = false, full_coverage = false;
  std::optional<long> H_bar_bound;
  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

struct VerdictRecord {
  std::vector<int> tuple;
  std::vector<int> key;
  std::string knot_class;
  std::string verdict;
  std::optional<std::string> reason;
  std::optional<int> sigma;
  std::optional<std::string> det;  ///< decimal string, arbitrary precision
  std::optional<int> pairs;
  std::optional<std::vector<int>> normalized;  ///< a, b, c, d, e
  std::optional<bool> mirrored;
  std::optional<int> num_embedding_solutions;
  std::vector<SolutionRecord> solutions;
  bool single_twists = false;
  bool simple_ribbon = false;
  bool mutant_ribbon = false;
  std::optional<std::vector<std::vector<int>>> ribbon_witness;  ///< arrangements before each removal
  std::optional<std::vector<int>> ribbon_mutant;
  std::optional<std::vector<int>> unit_pair_reduced;

  friend bool operator==(const VerdictRecord&, const VerdictRecord&) = default;
};

VerdictRecord make_record(const PretzelTuple& t, const Verdict& v);

nlohmann::ordered_json to_json(const VerdictRecord& r);
VerdictRecord record_from_json(const nlohmann::json& j);

std::string csv_header();
std::string to_csv_row(const VerdictRecord& r);

/// Multi-line human-readable report.
std::string to_text(const VerdictRecord& r);

}  // namespace pretzel
