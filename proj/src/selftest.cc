#include "pretzel/selftest.hpp"

#include <sstream>

#include "pretzel/cosets.hpp"
#include "pretzel/invariants.hpp"
#include "pretzel/pipeline.hpp"
#include "pretzel/plumbing.hpp"

namespace pretzel {

PretzelTuple random_odd_knot(std::mt19937_64& rng, int max_abs) {
  std::uniform_int_distribution<int> strands(1, 3);
  std::uniform_int_distribution<int> half(0, max_abs / 2);
  std::bernoulli_distribution negative(0.5);
  const int k = 2 * strands(rng) + 1;
  std::vector<int> p(k);
  for (int& v : p) v = (2 * half(rng) + 1) * (negative(rng) ? -1 : 1);
  return PretzelTuple(std::move(p));
}

bool sparse_solution_pins_weight(const NormalizedQuintuple& q, const EmbeddingSolution& s) {
  auto zeros = [](long u, long v, long w) { return (u == 0) + (v == 0) + (w == 0); };
  auto among = [&](int v) { return v == q.a || v == q.b || v == q.c; };
  if (zeros(s.alpha, s.beta, s.gamma) >= 2 && !among(q.d)) return false;
  if (zeros(s.x, s.y, s.z) >= 2 && !among(q.e)) return false;
  return true;
}

bool weights_clear_lower_bounds(const NormalizedQuintuple& q) {
  const int abc = q.a + q.b + q.c;
  return (q.d >= 4 * q.a + q.b && q.e >= abc) || (q.d >= abc && q.e >= abc);
}

bool boundary_weight_bounds_e(const NormalizedQuintuple& q) {
  const bool at_bound = q.d == 4 * q.a + q.b || q.d == q.a + q.b + q.c;
  return !at_bound || q.e >= 4 * q.a + 4 * q.b + q.c;
}

namespace {

template <typename Pred>
CheckResult random_agreement(const std::string& name, Pred pred) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 1000; ++i) {
    PretzelTuple t = random_odd_knot(rng);
    if (!pred(t)) return {name, false, "disagrees on " + t.str()};
  }
  return {name, true, "1000 random knots"};
}

}  // namespace

std::vector<CheckResult> run_selftest(int census_bound, unsigned threads) {
  std::vector<CheckResult> out;

  out.push_back(random_agreement("signature formula = Gamma_0 signature", [](const PretzelTuple& t) {
    return signature_formula(t).sigma == signature_oracle(t);
  }));
  out.push_back(random_agreement("determinant formula = |det Q_P0|", [](const PretzelTuple& t) {
    return determinant(t) == determinant_oracle(t);
  }));

  {
    CheckResult r{"|H| closed form, odd a <= b <= c <= 15", true, ""};
    for (int a = 1; a <= 15 && r.passed; a += 2)
      for (int b = a; b <= 15 && r.passed; b += 2)
        for (int c = b; c <= 15 && r.passed; c += 2)
          if (static_cast<long>(enumerate_H(a, b, c).points.size()) != HexRegion::expected_size(a, b, c)) {
            r.passed = false;
            r.detail = "mismatch at " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
          }
    if (r.passed) r.detail = "all 120 triples";
    out.push_back(r);
  }

  {
    struct Fixture { NormalizedQuintuple q; EmbeddingSolution s; long R, H, H_bar; const char* det; };
    const Fixture fixtures[] = {
        {{3, 7, 19, 3, 47}, {1, 0, 0, 0, 2, -1}, 99, 241, 81, "9801"},
        {{3, 7, 19, 19, 55}, {0, 0, 1, 3, -2, 0}, 437, 241, 209, "190969"},
        {{3, 5, 7, 3, 5}, {1, 0, 0, 0, 1, 0}, 15, 87, 15, "225"},
    };
    for (const auto& f : fixtures) {
      const auto rep = coset_conditions(f.q, f.s);
      const bool ok = rep.R == f.R && rep.H == f.H && rep.H_bar == f.H_bar &&
                      determinant(f.q.tuple()).str() == f.det;
      std::ostringstream os;
      os << "R=" << rep.R << " H=" << rep.H << " H_bar=" << rep.H_bar;
      out.push_back({"worked example " + f.q.tuple().str(), ok, os.str()});
    }
  }

  CensusOptions opts;
  opts.odd_bound = census_bound;
  opts.threads = threads;
  long knots = 0, sols = 0;
  CheckResult sqrt_det{"|R|^2 = det(K) on every census solution", true, ""};
  CheckResult gram{"A^T A = Q_P+ on every census solution", true, ""};
  CheckResult definite{"Q_P+ positive definite of rank a+b+c", true, ""};
  CheckResult kirby{"sigma(Q_P+) - sigma(Q_P0) = a+b+c", true, ""};
  CheckResult bounds{"solution-shape and weight bounds over the census", true, ""};
  auto fail = [](CheckResult& r, const std::string& why) {
    if (r.passed) r.detail = why;
    r.passed = false;
  };
  census(opts, [&](const CensusRecord& rec) {
    ++knots;
    const auto& tr = rec.verdict.trace;
    if (!tr.normalized) return;
    const NormalizedQuintuple& q = *tr.normalized;
    const IntSymMatrix qplus = gamma_plus_form(q);
    const auto sr = signature_and_rank(qplus);
    if (!(sr.signature == q.rank() && sr.rank == q.rank() && qplus.rows() == q.rank()))
      fail(definite, q.tuple().str());
    if (kirby_signature_delta(q.tuple()) != q.rank()) fail(kirby, q.tuple().str());
    const bool zero_pair = tr.pairs && tr.pairs->t == 0;
    if (zero_pair && !tr.embedding_solutions.empty() && (!weights_clear_lower_bounds(q) || !boundary_weight_bounds_e(q)))
      fail(bounds, "weight bound at " + q.tuple().str());
    for (std::size_t i = 0; i < tr.embedding_solutions.size(); ++i) {
      const auto& s = tr.embedding_solutions[i];
      ++sols;
      if (!r_equals_sqrt_det(q, quotient_from_solution(q, s))) fail(sqrt_det, q.tuple().str());
      const IntMatrix a = build_embedding_matrix(q, s);
      IntSymMatrix gram_big = (a.transpose() * a).cast<BigInt>();
      if (gram_big != qplus) fail(gram, q.tuple().str());
      if (!sparse_solution_pins_weight(q, s)) fail(bounds, "sparse solution at " + q.tuple().str());
    }
  });
  const std::string summary = std::to_string(knots) + " knots, " + std::to_string(sols) + " solutions";
  for (CheckResult* r : {&sqrt_det, &gram, &definite, &kirby, &bounds}) {
    if (r->passed) r->detail = summary;
    out.push_back(*r);
  }
  return out;
}

}  // namespace pretzel
