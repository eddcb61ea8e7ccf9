#include "pretzel/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "pretzel/error.hpp"

namespace pretzel {

const char* to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::NotAKnot: return "NOT_A_KNOT";
    case VerdictKind::NotSlice: return "NOT_SLICE";
    case VerdictKind::Slice: return "SLICE";
    case VerdictKind::Inconclusive: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

const char* to_string(NotSliceReason r) {
  switch (r) {
    case NotSliceReason::Signature: return "signature";
    case NotSliceReason::LatticeEmbedding: return "lattice_embedding";
    case NotSliceReason::CosetCoverage: return "coset_coverage";
  }
  return "unknown";
}

Verdict evaluate(const PretzelTuple& t) {
  Verdict v;
  ObstructionTrace& tr = v.trace;
  tr.knot_class = classify(t);
  if (tr.knot_class == KnotClass::Link) return v;

  tr.pairs = pair_profile(t);
  tr.single_twists = tr.pairs->has_single_twists;
  tr.ribbon_witness = simple_ribbon_reduction(t);
  tr.simple_ribbon = tr.ribbon_witness.has_value();
  tr.ribbon_mutant = simple_ribbon_mutant(t);
  tr.mutant_ribbon = tr.ribbon_mutant.has_value();
  if (tr.pairs->contains_unit_pair) tr.unit_pair_reduced = unit_pair_reduction(t);

  std::optional<NotSliceReason> obstruction;
  if (tr.knot_class == KnotClass::OddKnot) {
    tr.signature = signature_formula(t);
    tr.determinant = determinant(t);
    if (tr.signature->sigma != 0) {
      obstruction = NotSliceReason::Signature;
    } else if (t.size() == 5) {
      tr.normalized = normalize(t);
      tr.embedding_checked = true;
      tr.embedding_solutions = solve_embedding(*tr.normalized);
      for (const auto& sol : tr.embedding_solutions)
        tr.coset_reports.push_back(coset_conditions(*tr.normalized, sol));
      if (tr.embedding_solutions.empty()) {
        obstruction = NotSliceReason::LatticeEmbedding;
      } else if (std::none_of(tr.coset_reports.begin(), tr.coset_reports.end(),
                              [](const CosetReport& r) { return r.full_coverage; })) {
        obstruction = NotSliceReason::CosetCoverage;
      }
    }
  }

  // Mutants share a double branched cover, so none of the obstructions may
  // fire on a multiset that has a ribbon ordering.
  if (obstruction && tr.mutant_ribbon)
    throw std::logic_error("obstruction " + std::string(to_string(*obstruction)) +
                           " fired on mutant-ribbon knot " + t.str());

  if (tr.simple_ribbon) {
    v.kind = VerdictKind::Slice;
  } else if (obstruction) {
    v.kind = VerdictKind::NotSlice;
    v.reason = obstruction;
  } else {
    v.kind = VerdictKind::Inconclusive;
  }
  return v;
}

std::vector<PretzelTuple> census_candidates(const CensusOptions& opts) {
  if (opts.odd_bound < 3 || opts.odd_bound % 2 == 0)
    throw PretzelError(ErrorCode::InvalidBound, "odd bound must be odd and at least 3");
  if (opts.de_bound < -1 || (opts.de_bound > 0 && opts.de_bound % 2 == 0))
    throw PretzelError(ErrorCode::InvalidBound, "positive-parameter cap must be odd");
  if (opts.pairs && (*opts.pairs < 0 || *opts.pairs > 2))
    throw PretzelError(ErrorCode::InvalidBound, "pair count must be 0, 1 or 2");

  std::vector<PretzelTuple> out;
  const int lo = opts.no_single_twists ? 3 : 1;
  const int n = opts.odd_bound;
  for (int a = lo; a <= n; a += 2)
    for (int b = a; b <= n; b += 2)
      for (int c = b; c <= n; c += 2) {
        const int cap = opts.de_bound == -1  ? n
                        : opts.de_bound == 0 ? (a + b + c) * n
                                             : opts.de_bound;
        for (int d = lo; d <= cap; d += 2)
          for (int e = d; e <= cap; e += 2) {
            PretzelTuple key{-c, -b, -a, d, e};
            if (signature_formula(key).sigma != 0) continue;
            if (opts.pairs && pair_profile(key).t != *opts.pairs) continue;
            auto ribbon = simple_ribbon_mutant(key);
            if (opts.simple_ribbon_only && !ribbon) continue;
            out.push_back(ribbon ? *ribbon : key);
          }
      }
  return out;
}

void census(const CensusOptions& opts, const std::function<void(const CensusRecord&)>& sink) {
  const std::vector<PretzelTuple> candidates = census_candidates(opts);
  const std::size_t total = candidates.size();
  std::vector<std::optional<CensusRecord>> slots(total);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable ready;
  std::exception_ptr failure;

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));

  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        CensusRecord rec{candidates[i], mutation_key(candidates[i]), evaluate(candidates[i])};
        std::lock_guard lock(mu);
        slots[i] = std::move(rec);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = total;
      }
      ready.notify_one();
    }
    ready.notify_one();
  };

  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);

  for (std::size_t emitted = 0; emitted < total; ++emitted) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return slots[emitted].has_value() || failure; });
    if (failure) break;
    CensusRecord rec = std::move(*slots[emitted]);
    slots[emitted].reset();
    lock.unlock();
    try {
      sink(rec);
    } catch (...) {
      lock.lock();
      failure = std::current_exception();
      next = total;
      break;
    }
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

std::vector<CensusRecord> census(const CensusOptions& opts) {
  std::vector<CensusRecord> out;
  census(opts, [&](const CensusRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace pretzel
