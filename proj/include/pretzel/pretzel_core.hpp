// Pretzel tuples and the combinatorial moves on them: parity classification,
// mirroring, mutation keys, isotopy moves, canceling pairs and simple-ribbon
// reduction.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pretzel {

/// Ordered, nonempty list of nonzero twist parameters P(p_1, ..., p_k).
class PretzelTuple {
 public:
  PretzelTuple() = default;
  explicit PretzelTuple(std::vector<int> params);
  PretzelTuple(std::initializer_list<int> params)
      : PretzelTuple(std::vector<int>(params)) {}

  /// Parses "3,-5,7" (whitespace tolerated). Throws PretzelError(InvalidTuple).
  static PretzelTuple parse(std::string_view text);

  const std::vector<int>& params() const { return params_; }
  std::size_t size() const { return params_.size(); }
  int operator[](std::size_t i) const { return params_[i]; }
  auto begin() const { return params_.begin(); }
  auto end() const { return params_.end(); }

  std::string str() const;

  friend bool operator==(const PretzelTuple&, const PretzelTuple&) = default;
  friend auto operator<=>(const PretzelTuple&, const PretzelTuple&) = default;

 private:
  std::vector<int> params_;
};

std::ostream& operator<<(std::ostream& os, const PretzelTuple& t);

enum class KnotClass { OddKnot, EvenKnot, Link };

const char* to_string(KnotClass c);

KnotClass classify(const PretzelTuple& t);
inline bool is_knot(const PretzelTuple& t) { return classify(t) != KnotClass::Link; }

PretzelTuple mirror(const PretzelTuple& t);

/// Sorted multiset of parameters. Mutants share a key.
std::vector<int> mutation_key(const PretzelTuple& t);

/// Lexicographically least tuple among all rotations and reversals.
PretzelTuple canonical_form(const PretzelTuple& t);

/// Closure of t under rotation, reversal, and adjacent swaps that involve a
/// +-1 strand. Sorted and free of duplicates. Throws NotAKnot for links.
std::vector<PretzelTuple> isotopy_orbit(const PretzelTuple& t);

bool isotopy_equivalent(const PretzelTuple& t1, const PretzelTuple& t2);

struct PairProfile {
  int t = 0;
  /// One entry {p, -p} (p > 0) per matched canceling pair.
  std::vector<std::pair<int, int>> removable_pairs;
  bool has_single_twists = false;
  bool contains_unit_pair = false;
};

PairProfile pair_profile(const PretzelTuple& t);

/// One ribbon move: `arrangement` is isotopic to the previous state, and the
/// canceling strands at `position` and `position + 1` (cyclically) are
/// removed from it.
struct RibbonMove {
  PretzelTuple arrangement;
  std::size_t position = 0;
};

struct RibbonReduction {
  std::vector<RibbonMove> moves;
  PretzelTuple reduced;
};

/// Exhaustive search for a simple-ribbon reduction. Returns the witness when
/// one exists. Throws NotAKnot for links.
std::optional<RibbonReduction> simple_ribbon_reduction(const PretzelTuple& t);

inline bool is_simple_ribbon(const PretzelTuple& t) {
  return simple_ribbon_reduction(t).has_value();
}

/// Some reordering of the parameters that is simple ribbon, if any; the
/// lexicographically least such ordering is returned.
std::optional<PretzelTuple> simple_ribbon_mutant(const PretzelTuple& t);

inline bool mutant_ribbon(const PretzelTuple& t) {
  return simple_ribbon_mutant(t).has_value();
}

/// For a tuple containing both 1 and -1: the tuple with one of each removed,
/// remaining order preserved. Flypes move the +-1 strands together, so the
/// result is concordant to the input.
std::optional<PretzelTuple> unit_pair_reduction(const PretzelTuple& t);

}  // namespace pretzel
