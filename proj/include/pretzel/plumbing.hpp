// Star-shaped plumbing graphs, their intersection forms, and exact
// congruence diagonalization of symmetric integer forms.
#pragma once

#include <cstddef>
#include <vector>

#include "pretzel/error.hpp"
#include "pretzel/numeric.hpp"
#include "pretzel/pretzel_core.hpp"

namespace pretzel {

/// Central vertex plus arms; each arm lists its vertex weights starting from
/// the vertex adjacent to the center. An arm may be empty (a blown-down -1
/// strand of the expanded graph).
struct WeightedStarGraph {
  long central_weight = 0;
  std::vector<std::vector<long>> arms;

  std::size_t vertex_count() const;
  friend bool operator==(const WeightedStarGraph&, const WeightedStarGraph&) = default;
};

/// Center of weight 0 with one single-vertex arm of weight p_i per strand.
/// Throws NotOddKnot.
WeightedStarGraph build_gamma0(const PretzelTuple& t);

/// Replaces every negative arm -b by a chain of b - 1 weight-2 vertices and
/// raises the central weight by one per replaced arm. Positive arms keep
/// their order and come first; chains follow in the original arm order.
WeightedStarGraph expand_to_gamma_plus(const WeightedStarGraph& g0);

/// Intersection form: vertex weights on the diagonal, 1 per edge.
/// Basis: center, then arm vertices arm by arm.
IntSymMatrix incidence_matrix(const WeightedStarGraph& g);

/// Result of a rational congruence transform: transform^T * m * transform
/// equals diag(diagonal).
struct CongruenceDiagonalization {
  Vector<Rational> diagonal;
  Matrix<Rational> transform;
};

namespace detail {

// Symmetric elimination; touches only the nonzero pattern of each pivot row,
// so tree-shaped forms cost O(n) rational operations. `transform` may be null.
template <typename Derived>
Vector<Rational> congruence_diagonal(const Eigen::MatrixBase<Derived>& m, Matrix<Rational>* transform) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw PretzelError(ErrorCode::InvalidGraph, "form must be square");
  Matrix<Rational> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Rational(m(i, j));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i)) throw PretzelError(ErrorCode::InvalidGraph, "form must be symmetric");
  if (transform) *transform = Matrix<Rational>::Identity(n, n);

  std::vector<Eigen::Index> nz;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap_with = -1;
      for (Eigen::Index j = k + 1; j < n && swap_with < 0; ++j)
        if (a(j, j) != 0) swap_with = j;
      if (swap_with >= 0) {
        a.row(k).swap(a.row(swap_with));
        a.col(k).swap(a.col(swap_with));
        if (transform) transform->col(k).swap(transform->col(swap_with));
      } else {
        // Every remaining diagonal entry vanishes: fold in a partner with a
        // nonzero off-diagonal entry, giving pivot 2*a(k,j).
        Eigen::Index partner = -1;
        for (Eigen::Index j = k + 1; j < n && partner < 0; ++j)
          if (a(k, j) != 0) partner = j;
        if (partner < 0) continue;
        a.row(k) += a.row(partner);
        a.col(k) += a.col(partner);
        if (transform) transform->col(k) += transform->col(partner);
      }
    }
    nz.clear();
    for (Eigen::Index j = k + 1; j < n; ++j)
      if (a(k, j) != 0) nz.push_back(j);
    const Rational pivot = a(k, k);
    for (Eigen::Index j : nz) {
      const Rational f = a(k, j) / pivot;
      for (Eigen::Index l : nz) a(j, l) -= f * a(k, l);
      if (transform) transform->col(j) -= f * transform->col(k);
    }
    for (Eigen::Index j : nz) a(k, j) = a(j, k) = 0;
  }
  return a.diagonal();
}

}  // namespace detail

template <typename Derived>
CongruenceDiagonalization diagonalize(const Eigen::MatrixBase<Derived>& m) {
  CongruenceDiagonalization out;
  out.diagonal = detail::congruence_diagonal(m, &out.transform);
  return out;
}

struct SignatureRank {
  int signature = 0;
  int rank = 0;
  friend bool operator==(const SignatureRank&, const SignatureRank&) = default;
};

template <typename Derived>
SignatureRank signature_and_rank(const Eigen::MatrixBase<Derived>& m) {
  SignatureRank out;
  const auto diag = detail::congruence_diagonal(m, nullptr);
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    const int s = diag(i).sign();
    out.signature += s;
    out.rank += s != 0;
  }
  return out;
}

template <typename Derived>
bool is_positive_definite(const Eigen::MatrixBase<Derived>& m) {
  const auto sr = signature_and_rank(m);
  return sr.signature == sr.rank && sr.rank == m.rows();
}

/// Fraction-free (Bareiss) determinant.
BigInt exact_determinant(const IntSymMatrix& m);

/// sigma(Q_{P+}) - sigma(Q_{P0}) for an odd knot of vanishing signature,
/// after mirroring so that s = -1. Throws NotOddKnot or SignatureNonzero.
long kirby_signature_delta(const PretzelTuple& t);

}  // namespace pretzel
