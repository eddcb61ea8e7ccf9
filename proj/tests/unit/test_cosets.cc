#include <doctest.h>

#include <random>
#include <set>

#include "pretzel/cosets.hpp"
#include "pretzel/error.hpp"

using namespace pretzel;

namespace {

// Image of every +-1 vector under B, by brute force over 2^(a+b+c) vectors.
std::set<std::pair<long, long>> brute_H(int a, int b, int c) {
  std::set<std::pair<long, long>> out;
  const int m = a + b + c;
  for (long mask = 0; mask < (1L << m); ++mask) {
    long xs = 0, ys = 0, zs = 0;
    for (int i = 0; i < m; ++i) {
      const long v = (mask >> i) & 1 ? 1 : -1;
      (i < a ? xs : i < a + b ? ys : zs) += v;
    }
    out.emplace(xs - zs, ys - zs);
  }
  return out;
}

// Coset identity through rational coordinates in the (v1, v2) basis.
std::pair<Rational, Rational> coset_id(const Vec2& p, const Vec2& v1, const Vec2& v2) {
  const long det = v1(0) * v2(1) - v1(1) * v2(0);
  auto frac = [](Rational q) {
    BigInt n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
    BigInt r = n % d;
    if (r < 0) r += d;
    return Rational(r, d);
  };
  return {frac(Rational(p(0) * v2(1) - p(1) * v2(0)) / det),
          frac(Rational(v1(0) * p(1) - v1(1) * p(0)) / det)};
}

}  // namespace

TEST_CASE("H for a = b = c = 1") {
  const auto h = enumerate_H(1, 1, 1);
  std::vector<Vec2> expected{{-2, -2}, {-2, 0}, {0, -2}, {0, 0}, {0, 2}, {2, 0}, {2, 2}};
  CHECK(h.points == expected);
}

TEST_CASE("H matches brute force and the closed form") {
  for (int a = 1; a <= 5; a += 2)
    for (int b = a; b <= 5; b += 2)
      for (int c = b; c <= 7 && a + b + c <= 15; c += 2) {
        const auto h = enumerate_H(a, b, c);
        std::set<std::pair<long, long>> got;
        for (const auto& p : h.points) got.emplace(p(0), p(1));
        CHECK(got == brute_H(a, b, c));
      }
  for (int a = 1; a <= 15; a += 2)
    for (int b = 1; b <= 15; b += 2)
      for (int c = 1; c <= 15; c += 2) {
        const auto h = enumerate_H(a, b, c);
        CHECK(static_cast<long>(h.points.size()) == HexRegion::expected_size(a, b, c));
        for (const auto& p : h.points) {
          CHECK(p(0) % 2 == 0);
          CHECK(p(1) % 2 == 0);
          CHECK(std::abs(p(0)) <= a + c);
          CHECK(std::abs(p(1)) <= b + c);
        }
      }
}

TEST_CASE("quotient lattices from worked solutions") {
  auto lat = quotient_from_solution({3, 7, 19, 3, 47}, {1, 0, 0, 0, 2, -1});
  CHECK(lat.v1_tilde() == Vec2(3, 0));
  CHECK(lat.v2_tilde() == Vec2(19, 33));
  CHECK(lat.det_abs() == 99);
  CHECK(r_equals_sqrt_det({3, 7, 19, 3, 47}, lat));

  lat = quotient_from_solution({3, 7, 19, 19, 55}, {0, 0, 1, 3, -2, 0});
  CHECK(lat.v1_tilde() == Vec2(-19, -19));
  CHECK(lat.v2_tilde() == Vec2(9, -14));
  CHECK(lat.det_abs() == 437);
  CHECK(r_equals_sqrt_det({3, 7, 19, 19, 55}, lat));

  lat = quotient_from_solution({3, 5, 7, 3, 5}, {1, 0, 0, 0, 1, 0});
  CHECK(lat.v1_tilde() == Vec2(3, 0));
  CHECK(lat.v2_tilde() == Vec2(0, 5));
  CHECK(lat.det_abs() == 15);
  CHECK(r_equals_sqrt_det({3, 5, 7, 3, 5}, lat));
  CHECK_FALSE(r_equals_sqrt_det({3, 5, 7, 3, 7}, lat));

  CHECK_THROWS_AS(QuotientLattice(Vec2(2, 4), Vec2(1, 2)), PretzelError);
}

TEST_CASE("residues are canonical coset representatives") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> coord(-40, 40);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec2 v1(coord(rng), coord(rng)), v2(coord(rng), coord(rng));
    if (v1(0) * v2(1) - v1(1) * v2(0) == 0) continue;
    const QuotientLattice lat(v1, v2);
    const auto& h = lat.hermite_basis();
    CHECK(h(0, 0) * h(1, 1) == lat.det_abs());
    CHECK(lat.residue(v1) == lat.residue(Vec2::Zero()));
    CHECK(lat.residue(v2) == lat.residue(Vec2::Zero()));
    for (int k = 0; k < 20; ++k) {
      const Vec2 p(coord(rng), coord(rng)), q(coord(rng), coord(rng));
      const Vec2 r = lat.residue(p);
      CHECK(r(0) >= 0);
      CHECK(r(0) < h(0, 0));
      CHECK(r(1) >= 0);
      CHECK(r(1) < h(1, 1));
      CHECK(lat.residue(p + 3 * v1 - 2 * v2) == r);
      CHECK((lat.residue(p) == lat.residue(q)) == (coset_id(p, v1, v2) == coset_id(q, v1, v2)));
    }
    if (lat.det_abs() <= 400) {
      // The box [0, det)^2 meets every coset.
      std::set<std::pair<long, long>> seen;
      for (long x = 0; x < lat.det_abs(); ++x)
        for (long y = 0; y < lat.det_abs(); ++y) {
          const Vec2 r = lat.residue(Vec2(x, y));
          seen.emplace(r(0), r(1));
        }
      CHECK(static_cast<long>(seen.size()) == lat.det_abs());
    }
  }
}

TEST_CASE("coset conditions on the worked examples") {
  auto r = coset_conditions({3, 7, 19, 3, 47}, {1, 0, 0, 0, 2, -1});
  CHECK(r.R == 99);
  CHECK(r.H == 241);
  CHECK(r.H_bar == 81);
  CHECK(r.cond_I);
  CHECK_FALSE(r.cond_II);
  CHECK_FALSE(r.full_coverage);
  CHECK(r.shape == SolutionCase::PairA);
  CHECK(r.H_bar_bound == 81);

  r = coset_conditions({3, 7, 19, 19, 55}, {0, 0, 1, 3, -2, 0});
  CHECK(r.R == 437);
  CHECK(r.H == 241);
  CHECK(r.H_bar == 209);
  CHECK_FALSE(r.cond_I);
  CHECK_FALSE(r.full_coverage);
  CHECK(r.shape == SolutionCase::PairC);
  CHECK(r.H_bar_bound == 209);

  r = coset_conditions({3, 7, 19, 7, 31}, {0, 1, 0, 2, 0, -1});
  CHECK(r.R == 175);
  CHECK(r.R == 7 * std::abs(3 * 2 - 19 * -1));
  CHECK(r.H_bar == 161);
  CHECK(r.shape == SolutionCase::PairB);
  CHECK(r.H_bar_bound == 7 * (3 + 19 + 1));

  r = coset_conditions({3, 5, 7, 3, 5}, {1, 0, 0, 0, 1, 0});
  CHECK(r.R == 15);
  CHECK(r.full_coverage);
  CHECK(r.cond_II);
  CHECK(r.cond_I);
}

TEST_CASE("exact H_bar matches a rational-coordinate count") {
  for (const auto& [q, s] : std::vector<std::pair<NormalizedQuintuple, EmbeddingSolution>>{
           {{3, 7, 19, 3, 47}, {1, 0, 0, 0, 2, -1}},
           {{3, 7, 19, 19, 55}, {0, 0, 1, 3, -2, 0}},
           {{3, 7, 19, 7, 31}, {0, 1, 0, 2, 0, -1}},
           {{3, 5, 7, 3, 5}, {1, 0, 0, 0, 1, 0}}}) {
    const auto lat = quotient_from_solution(q, s);
    std::set<std::pair<Rational, Rational>> ids;
    for (const auto& p : enumerate_H(q.a, q.b, q.c).points) ids.insert(coset_id(p, lat.v1_tilde(), lat.v2_tilde()));
    const auto rep = coset_conditions(q, s);
    CHECK(rep.H_bar == static_cast<long>(ids.size()));
    CHECK(rep.H_bar <= rep.H);
  }
}
