#include <doctest.h>

#include <algorithm>

#include "pretzel/error.hpp"
#include "pretzel/pipeline.hpp"

using namespace pretzel;

TEST_CASE("evaluate worked examples") {
  auto v = evaluate({5, 5, 5, -3, -3});
  CHECK(v.kind == VerdictKind::NotSlice);
  CHECK(v.reason == NotSliceReason::Signature);
  CHECK_FALSE(v.trace.embedding_checked);

  v = evaluate({-3, -5, -7, 9, 27});
  CHECK(v.kind == VerdictKind::NotSlice);
  CHECK(v.reason == NotSliceReason::LatticeEmbedding);
  CHECK(v.trace.signature->sigma == 0);
  CHECK(v.trace.embedding_solutions.empty());

  v = evaluate({-3, -7, -19, 3, 47});
  CHECK(v.kind == VerdictKind::NotSlice);
  CHECK(v.reason == NotSliceReason::CosetCoverage);
  CHECK(v.trace.embedding_solutions.size() == 1);
  CHECK(v.trace.coset_reports.front().R == 99);

  v = evaluate({3, 5, -3, -5, 7});
  CHECK(v.kind == VerdictKind::Inconclusive);
  CHECK(v.trace.mutant_ribbon);
  CHECK_FALSE(v.trace.simple_ribbon);

  v = evaluate({3, -3, 5, -5, 7});
  CHECK(v.kind == VerdictKind::Slice);
  REQUIRE(v.trace.ribbon_witness);
  CHECK(v.trace.ribbon_witness->reduced.size() == 1);
  CHECK(v.trace.signature->sigma == 0);
  CHECK(std::any_of(v.trace.coset_reports.begin(), v.trace.coset_reports.end(),
                    [](const CosetReport& r) { return r.full_coverage; }));

  CHECK(evaluate({2, 4, 6}).kind == VerdictKind::NotAKnot);
  CHECK(evaluate({7}).kind == VerdictKind::Slice);
}

TEST_CASE("non-quintuple and even knots") {
  auto v = evaluate({3, 5, 7});
  CHECK(v.kind == VerdictKind::NotSlice);
  CHECK(v.reason == NotSliceReason::Signature);
  v = evaluate({-3, -17, 29});  // sigma = 0, no supported lattice path for k = 3
  CHECK(v.trace.signature->sigma == 0);
  CHECK(v.kind == VerdictKind::Inconclusive);
  CHECK(evaluate({5, -5, 2, -3}).kind == VerdictKind::Slice);
  CHECK(evaluate({2, 3, 5}).kind == VerdictKind::Inconclusive);
}

TEST_CASE("unit pair knots carry their reduction") {
  auto v = evaluate({1, -3, -1, 5, -7});
  REQUIRE(v.trace.unit_pair_reduced);
  CHECK(*v.trace.unit_pair_reduced == PretzelTuple{-3, 5, -7});
  v = evaluate({1, -1, 3, -3, 5});
  CHECK(v.kind == VerdictKind::Slice);
}

TEST_CASE("verdicts are mutation and mirror invariant on the NotSlice split") {
  for (std::vector<int> p : {std::vector<int>{-7, -5, -3, 9, 27}, {-19, -7, -3, 3, 47},
                             {-7, -5, -3, 3, 5}, {-9, -5, -1, 11, 31}, {-5, -3, -3, 5, 5}}) {
    std::sort(p.begin(), p.end());
    const bool ref = evaluate(PretzelTuple(p)).not_slice();
    do {
      const PretzelTuple t(p);
      CHECK(evaluate(t).not_slice() == ref);
      CHECK(evaluate(mirror(t)).not_slice() == ref);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("census ordering and filters") {
  CensusOptions opts;
  opts.odd_bound = 9;
  opts.simple_ribbon_only = true;
  opts.threads = 3;
  const auto ribbons = census(opts);
  REQUIRE_FALSE(ribbons.empty());
  for (const auto& r : ribbons) CHECK(r.verdict.kind == VerdictKind::Slice);

  opts = {};
  opts.odd_bound = 11;
  opts.pairs = 0;
  opts.threads = 4;
  const auto zero_pairs = census(opts);
  REQUIRE_FALSE(zero_pairs.empty());
  for (const auto& r : zero_pairs) {
    CHECK(r.verdict.not_slice());
    CHECK(r.verdict.trace.signature->sigma == 0);
  }
  opts.threads = 1;
  const auto serial = census(opts);
  REQUIRE(serial.size() == zero_pairs.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].tuple == zero_pairs[i].tuple);

  const auto candidates = census_candidates(opts);
  CHECK(std::is_sorted(candidates.begin(), candidates.end(), [](const PretzelTuple& x, const PretzelTuple& y) {
    auto k = [](const PretzelTuple& t) {
      auto m = mutation_key(t);
      return std::vector<int>{-m[2], -m[1], -m[0], m[3], m[4]};
    };
    return k(x) < k(y);
  }));

  opts.odd_bound = 8;
  CHECK_THROWS_AS(census_candidates(opts), PretzelError);
  opts.odd_bound = 1;
  CHECK_THROWS_AS(census_candidates(opts), PretzelError);
}

TEST_CASE("census sink failures propagate") {
  CensusOptions opts;
  opts.odd_bound = 7;
  int seen = 0;
  CHECK_THROWS_AS(census(opts, [&](const CensusRecord&) {
                    if (++seen == 3) throw std::runtime_error("sink");
                  }),
                  std::runtime_error);
  CHECK(seen == 3);
}
