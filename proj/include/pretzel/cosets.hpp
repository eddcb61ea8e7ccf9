// Reduction of the coset-counting condition to Z^2: the lattice spanned by
// the images of v1 and v2, the image H of the +-1 vectors, and exact
// residue counting of H modulo that lattice.
#pragma once

#include <optional>
#include <vector>

#include "pretzel/lattice_embed.hpp"
#include "pretzel/numeric.hpp"

namespace pretzel {

struct HexRegion {
  int a = 0, b = 0, c = 0;
  /// Sorted lexicographically, no duplicates.
  std::vector<Vec2> points;

  static long expected_size(long a, long b, long c) { return a * b + a * c + b * c + a + b + c + 1; }
};

/// {(q - s, r - s)} over q in {-a, -a+2, ..., a}, r over b, s over c.
HexRegion enumerate_H(int a, int b, int c);

/// Sublattice of Z^2 spanned by two vectors, with a Hermite basis
/// (h11, h12), (0, h22) with h11, h22 > 0 and 0 <= h12 < h22.
class QuotientLattice {
 public:
  QuotientLattice(const Vec2& v1, const Vec2& v2);

  const Vec2& v1_tilde() const { return v1_; }
  const Vec2& v2_tilde() const { return v2_; }
  long det_abs() const { return det_abs_; }
  /// Rows of the Hermite basis: (h11, h12) and (0, h22).
  const Eigen::Matrix<std::int64_t, 2, 2>& hermite_basis() const { return hermite_; }

  /// Canonical representative in [0, h11) x [0, h22).
  Vec2 residue(const Vec2& p) const;

 private:
  Vec2 v1_, v2_;
  long det_abs_ = 0;
  Eigen::Matrix<std::int64_t, 2, 2> hermite_;
};

/// v1~ = (a alpha - c gamma, b beta - c gamma), v2~ = (a x - c z, b y - c z).
/// Throws DegenerateLattice when they are dependent.
QuotientLattice quotient_from_solution(const NormalizedQuintuple& q, const EmbeddingSolution& sol);

/// det_abs^2 == det(P(-a,-b,-c,d,e)).
bool r_equals_sqrt_det(const NormalizedQuintuple& q, const QuotientLattice& lat);

/// Solution shapes with their closed-form index identities.
enum class SolutionCase { None, PairA, PairB, PairC };

SolutionCase solution_case(const EmbeddingSolution& sol);

struct CosetReport {
  Vec2 v1_tilde = Vec2::Zero();
  Vec2 v2_tilde = Vec2::Zero();
  long R = 0;
  long H = 0;
  long H_bar = 0;
  bool cond_I = false;
  bool cond_II = false;
  bool full_coverage = false;
  SolutionCase shape = SolutionCase::None;
  /// One-generator collapsing bound on H_bar for the recognized shapes.
  std::optional<long> H_bar_bound;
};

CosetReport coset_conditions(const NormalizedQuintuple& q, const EmbeddingSolution& sol);

}  // namespace pretzel
