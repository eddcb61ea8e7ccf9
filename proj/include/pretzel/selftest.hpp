// Executable checks of the identities the obstructions rely on. Shared by
// `pretzel selftest` and the acceptance suite.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pretzel/lattice_embed.hpp"
#include "pretzel/pretzel_core.hpp"

namespace pretzel {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Odd pretzel knot with k in {3, 5, 7} and odd |p_i| <= max_abs.
PretzelTuple random_odd_knot(std::mt19937_64& rng, int max_abs = 99);

/// Two of alpha, beta, gamma (or of x, y, z) zero forces d (or e) into {a, b, c}.
bool sparse_solution_pins_weight(const NormalizedQuintuple& q, const EmbeddingSolution& sol);

/// For a 0-pair quintuple with solutions: d >= 4a + b and e >= a + b + c,
/// or d, e >= a + b + c.
bool weights_clear_lower_bounds(const NormalizedQuintuple& q);

/// For a 0-pair quintuple with solutions: when d sits at one of the lower
/// bounds 4a + b or a + b + c, e >= 4a + 4b + c.
bool boundary_weight_bounds_e(const NormalizedQuintuple& q);

/// Runs every check; `census_bound` sizes the census-backed ones.
std::vector<CheckResult> run_selftest(int census_bound = 15, unsigned threads = 0);

}  // namespace pretzel
