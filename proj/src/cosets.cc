#include "pretzel/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pretzel/error.hpp"
#include "pretzel/invariants.hpp"

namespace pretzel {

namespace {

long floor_mod(long v, long m) {
  const long r = v % m;
  return r < 0 ? r + m : r;
}

long floor_div(long v, long m) { return (v - floor_mod(v, m)) / m; }

// Returns g = gcd(p, q) >= 0 with s p + t q = g.
long ext_gcd(long p, long q, long& s, long& t) {
  long old_r = p, r = q, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    const long k = old_r / r;
    old_r -= k * r; std::swap(old_r, r);
    old_s -= k * cur_s; std::swap(old_s, cur_s);
    old_t -= k * cur_t; std::swap(old_t, cur_t);
  }
  if (old_r < 0) {
    old_r = -old_r; old_s = -old_s; old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

}  // namespace

HexRegion enumerate_H(int a, int b, int c) {
  HexRegion h{a, b, c, {}};
  std::set<std::pair<long, long>> pts;
  for (long q = -a; q <= a; q += 2)
    for (long r = -b; r <= b; r += 2)
      for (long s = -c; s <= c; s += 2) pts.emplace(q - s, r - s);
  h.points.reserve(pts.size());
  for (const auto& [u, w] : pts) h.points.emplace_back(u, w);
  return h;
}

QuotientLattice::QuotientLattice(const Vec2& v1, const Vec2& v2) : v1_(v1), v2_(v2) {
  const long det = v1(0) * v2(1) - v1(1) * v2(0);
  if (det == 0) throw PretzelError(ErrorCode::DegenerateLattice, "v1~ and v2~ are dependent");
  det_abs_ = std::abs(det);
  long s = 0, t = 0;
  const long g = ext_gcd(v1(0), v2(0), s, t);
  // (g, s v1y + t v2y) and (0, (v2x v1y - v1x v2y) / g) span the same lattice.
  const long h22 = std::abs((v2(0) * v1(1) - v1(0) * v2(1)) / g);
  hermite_ << g, floor_mod(s * v1(1) + t * v2(1), h22), 0, h22;
}

Vec2 QuotientLattice::residue(const Vec2& p) const {
  const long h11 = hermite_(0, 0), h12 = hermite_(0, 1), h22 = hermite_(1, 1);
  const long k = floor_div(p(0), h11);
  Vec2 r(p(0) - k * h11, p(1) - k * h12);
  r(1) = floor_mod(r(1), h22);
  return r;
}

QuotientLattice quotient_from_solution(const NormalizedQuintuple& q, const EmbeddingSolution& sol) {
  const Vec2 v1(q.a * sol.alpha - q.c * sol.gamma, q.b * sol.beta - q.c * sol.gamma);
  const Vec2 v2(q.a * sol.x - q.c * sol.z, q.b * sol.y - q.c * sol.z);
  return QuotientLattice(v1, v2);
}

bool r_equals_sqrt_det(const NormalizedQuintuple& q, const QuotientLattice& lat) {
  return BigInt(lat.det_abs()) * lat.det_abs() == determinant(q.tuple());
}

SolutionCase solution_case(const EmbeddingSolution& s) {
  if (s.alpha == 1 && s.beta == 0 && s.gamma == 0 && s.x == 0) return SolutionCase::PairA;
  if (s.beta == 1 && s.alpha == 0 && s.gamma == 0 && s.y == 0) return SolutionCase::PairB;
  if (s.gamma == 1 && s.alpha == 0 && s.beta == 0 && s.z == 0) return SolutionCase::PairC;
  return SolutionCase::None;
}

CosetReport coset_conditions(const NormalizedQuintuple& q, const EmbeddingSolution& sol) {
  const QuotientLattice lat = quotient_from_solution(q, sol);
  const HexRegion hex = enumerate_H(q.a, q.b, q.c);
  std::set<std::pair<long, long>> residues;
  for (const Vec2& p : hex.points) {
    const Vec2 r = lat.residue(p);
    residues.emplace(r(0), r(1));
  }
  CosetReport out;
  out.v1_tilde = lat.v1_tilde();
  out.v2_tilde = lat.v2_tilde();
  out.R = lat.det_abs();
  out.H = static_cast<long>(hex.points.size());
  out.H_bar = static_cast<long>(residues.size());
  out.cond_I = out.R <= out.H;
  out.cond_II = out.R <= out.H_bar;
  out.full_coverage = out.H_bar == out.R;
  out.shape = solution_case(sol);
  switch (out.shape) {
    case SolutionCase::PairA: out.H_bar_bound = long{q.a} * (q.b + q.c + 1); break;
    case SolutionCase::PairB: out.H_bar_bound = long{q.b} * (q.a + q.c + 1); break;
    case SolutionCase::PairC: out.H_bar_bound = out.H - long{q.a + 1} * (q.b + 1); break;
    case SolutionCase::None: break;
  }
  return out;
}

}  // namespace pretzel
