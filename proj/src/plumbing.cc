#include "pretzel/plumbing.hpp"

#include <algorithm>
#include <string>

namespace pretzel {

std::size_t WeightedStarGraph::vertex_count() const {
  std::size_t n = 1;
  for (const auto& arm : arms) n += arm.size();
  return n;
}

WeightedStarGraph build_gamma0(const PretzelTuple& t) {
  if (classify(t) != KnotClass::OddKnot)
    throw PretzelError(ErrorCode::NotOddKnot, t.str() + " is not an odd pretzel knot");
  WeightedStarGraph g;
  for (int p : t) g.arms.push_back({p});
  return g;
}

WeightedStarGraph expand_to_gamma_plus(const WeightedStarGraph& g0) {
  if (g0.central_weight != 0 ||
      std::any_of(g0.arms.begin(), g0.arms.end(), [](const auto& arm) { return arm.size() != 1; }))
    throw PretzelError(ErrorCode::InvalidGraph, "expected a star with center 0 and unit arms");
  WeightedStarGraph out;
  std::vector<std::vector<long>> chains;
  for (const auto& arm : g0.arms) {
    const long w = arm.front();
    if (w > 0) {
      out.arms.push_back(arm);
    } else {
      // A -1 arm blows down to nothing and still bumps the center.
      chains.emplace_back(static_cast<std::size_t>(-w - 1), 2);
      ++out.central_weight;
    }
  }
  if (chains.empty())
    throw PretzelError(ErrorCode::InvalidGraph, "no negative arm to expand");
  for (auto& c : chains) out.arms.push_back(std::move(c));
  return out;
}

IntSymMatrix incidence_matrix(const WeightedStarGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  IntSymMatrix m = IntSymMatrix::Zero(n, n);
  m(0, 0) = g.central_weight;
  Eigen::Index idx = 1;
  for (const auto& arm : g.arms) {
    for (std::size_t r = 0; r < arm.size(); ++r, ++idx) {
      m(idx, idx) = arm[r];
      const Eigen::Index prev = r == 0 ? 0 : idx - 1;
      m(idx, prev) = 1;
      m(prev, idx) = 1;
    }
  }
  return m;
}

BigInt exact_determinant(const IntSymMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  IntSymMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.row(k).swap(a.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

long kirby_signature_delta(const PretzelTuple& t) {
  const WeightedStarGraph g0 = build_gamma0(t);
  const SignatureRank s0 = signature_and_rank(incidence_matrix(g0));
  if (s0.signature != 0)
    throw PretzelError(ErrorCode::SignatureNonzero,
                       t.str() + " has signature " + std::to_string(s0.signature));
  const long negatives = std::count_if(t.begin(), t.end(), [](int p) { return p < 0; });
  const bool needs_mirror = 2 * negatives < static_cast<long>(t.size());
  const PretzelTuple normalized = needs_mirror ? mirror(t) : t;
  const auto q0 = incidence_matrix(build_gamma0(normalized));
  const auto qplus = incidence_matrix(expand_to_gamma_plus(build_gamma0(normalized)));
  return signature_and_rank(qplus).signature - signature_and_rank(q0).signature;
}

}  // namespace pretzel
