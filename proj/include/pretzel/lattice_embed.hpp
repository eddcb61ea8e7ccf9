// Lattice embedding condition for odd 5-stranded pretzel knots
// P(-a,-b,-c,d,e): the reduced six-integer system, the explicit block
// embedding matrix, and a generic Gram-factorization search used to
// cross-check it.
#pragma once

#include <optional>
#include <vector>

#include "pretzel/numeric.hpp"
#include "pretzel/pretzel_core.hpp"

namespace pretzel {

struct NormalizedQuintuple {
  int a = 0, b = 0, c = 0;  ///< negated strands, a <= b <= c
  int d = 0, e = 0;         ///< positive strands, d <= e
  bool mirrored = false;

  /// P(-a,-b,-c,d,e).
  PretzelTuple tuple() const;
  int rank() const { return a + b + c; }
  friend bool operator==(const NormalizedQuintuple&, const NormalizedQuintuple&) = default;
};

/// Mirrors to three negative strands and sorts. Throws NotOddKnot,
/// NotFiveStranded, SignatureNonzero.
NormalizedQuintuple normalize(const PretzelTuple& t);

struct EmbeddingSolution {
  long alpha = 0, beta = 0, gamma = 0;
  long x = 0, y = 0, z = 0;

  bool satisfies(const NormalizedQuintuple& q) const;
  friend bool operator==(const EmbeddingSolution&, const EmbeddingSolution&) = default;
  friend auto operator<=>(const EmbeddingSolution&, const EmbeddingSolution&) = default;
};

/// Every integer solution, lexicographically ordered by
/// (alpha, beta, gamma, x, y, z). Empty means no embedding exists.
std::vector<EmbeddingSolution> solve_embedding(const NormalizedQuintuple& q);

/// Intersection form of the expanded graph for P(-a,-b,-c,d,e); basis
/// v0, v1, v2, then the a-, b- and c-chains.
IntSymMatrix gamma_plus_form(const NormalizedQuintuple& q);

/// Block embedding matrix; column order matches gamma_plus_form.
/// Throws InvalidSolution.
IntMatrix build_embedding_matrix(const NormalizedQuintuple& q, const EmbeddingSolution& sol);

/// Backtracking search for an integer square matrix B with B^T B = form.
/// Throws DimensionTooLarge when form.rows() > max_dim.
std::optional<IntMatrix> generic_embedding_search(const IntSymMatrix& form, int max_dim = 30);

}  // namespace pretzel
