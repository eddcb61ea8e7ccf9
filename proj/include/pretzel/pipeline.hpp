// Composition of the three obstructions into a per-knot verdict, and the
// parameter-range census.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pretzel/cosets.hpp"
#include "pretzel/invariants.hpp"
#include "pretzel/lattice_embed.hpp"
#include "pretzel/pretzel_core.hpp"

namespace pretzel {

enum class VerdictKind { NotAKnot, NotSlice, Slice, Inconclusive };
enum class NotSliceReason { Signature, LatticeEmbedding, CosetCoverage };

const char* to_string(VerdictKind v);
const char* to_string(NotSliceReason r);

/// Everything the pipeline computed, filled only as far as it got.
struct ObstructionTrace {
  KnotClass knot_class = KnotClass::Link;
  std::optional<PairProfile> pairs;
  std::optional<SignatureReport> signature;
  std::optional<BigInt> determinant;
  std::optional<NormalizedQuintuple> normalized;
  bool embedding_checked = false;
  std::vector<EmbeddingSolution> embedding_solutions;
  std::vector<CosetReport> coset_reports;  ///< parallel to embedding_solutions
  bool single_twists = false;
  bool simple_ribbon = false;
  bool mutant_ribbon = false;
  std::optional<RibbonReduction> ribbon_witness;
  std::optional<PretzelTuple> ribbon_mutant;
  std::optional<PretzelTuple> unit_pair_reduced;
};

struct Verdict {
  VerdictKind kind = VerdictKind::NotAKnot;
  std::optional<NotSliceReason> reason;  ///< set iff kind == NotSlice
  ObstructionTrace trace;

  bool not_slice() const { return kind == VerdictKind::NotSlice; }
};

/// Never throws for a valid tuple; every outcome is a verdict. Throws
/// std::logic_error if an obstruction fires on a (mutant) ribbon knot, which
/// would mean an implementation bug.
Verdict evaluate(const PretzelTuple& t);

struct CensusOptions {
  int odd_bound = 21;
  /// Cap on the positive parameters d <= e; 0 selects (a + b + c) * odd_bound.
  int de_bound = -1;  ///< -1: same as odd_bound
  std::optional<int> pairs;
  bool no_single_twists = false;
  bool simple_ribbon_only = false;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

struct CensusRecord {
  PretzelTuple tuple;
  std::vector<int> key;
  Verdict verdict;
};

/// Multisets {-a,-b,-c,d,e}, odd 1 <= a <= b <= c <= odd_bound, odd
/// 1 <= d <= e <= cap, with vanishing signature, that pass the filters; in
/// lexicographic (a, b, c, d, e) order. Each is represented by its least
/// simple-ribbon ordering when it has one, else by its sorted key.
/// Throws InvalidBound.
std::vector<PretzelTuple> census_candidates(const CensusOptions& opts);

/// Evaluates candidates on a worker pool; `sink` sees records in candidate
/// order regardless of completion order.
void census(const CensusOptions& opts, const std::function<void(const CensusRecord&)>& sink);

std::vector<CensusRecord> census(const CensusOptions& opts);

}  // namespace pretzel
