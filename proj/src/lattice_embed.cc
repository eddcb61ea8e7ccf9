#include "pretzel/lattice_embed.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>

#include <boost/multiprecision/integer.hpp>

#include "pretzel/error.hpp"
#include "pretzel/invariants.hpp"
#include "pretzel/plumbing.hpp"

namespace pretzel {

namespace {

long isqrt(long n) { return n <= 0 ? 0 : static_cast<long>(boost::multiprecision::sqrt(BigInt(n))); }

}  // namespace

PretzelTuple NormalizedQuintuple::tuple() const { return PretzelTuple{-a, -b, -c, d, e}; }

NormalizedQuintuple normalize(const PretzelTuple& t) {
  if (classify(t) != KnotClass::OddKnot)
    throw PretzelError(ErrorCode::NotOddKnot, t.str() + " is not an odd pretzel knot");
  if (t.size() != 5)
    throw PretzelError(ErrorCode::NotFiveStranded, t.str() + " does not have five strands");
  const SignatureReport sig = signature_formula(t);
  if (sig.sigma != 0)
    throw PretzelError(ErrorCode::SignatureNonzero,
                       t.str() + " has signature " + std::to_string(sig.sigma));
  NormalizedQuintuple q;
  q.mirrored = sig.s > 0;
  std::vector<int> neg, pos;
  for (int p : t) {
    const int v = q.mirrored ? -p : p;
    (v < 0 ? neg : pos).push_back(std::abs(v));
  }
  std::sort(neg.begin(), neg.end());
  std::sort(pos.begin(), pos.end());
  q.a = neg[0];
  q.b = neg[1];
  q.c = neg[2];
  q.d = pos[0];
  q.e = pos[1];
  return q;
}

bool EmbeddingSolution::satisfies(const NormalizedQuintuple& q) const {
  return alpha + beta + gamma == 1 && x + y + z == 1 &&
         q.a * alpha * x + q.b * beta * y + q.c * gamma * z == 0 &&
         q.a * alpha * alpha + q.b * beta * beta + q.c * gamma * gamma == q.d &&
         q.a * x * x + q.b * y * y + q.c * z * z == q.e;
}

std::vector<EmbeddingSolution> solve_embedding(const NormalizedQuintuple& q) {
  // Each quadratic term is nonnegative, so a*alpha^2 <= d bounds alpha, etc.
  struct Triple { long p, q, r; };
  auto triples = [&](long norm) {
    std::vector<Triple> out;
    const long bp = isqrt(norm / q.a), bq = isqrt(norm / q.b);
    for (long u = -bp; u <= bp; ++u)
      for (long v = -bq; v <= bq; ++v) {
        const long w = 1 - u - v;
        if (q.a * u * u + q.b * v * v + q.c * w * w == norm) out.push_back({u, v, w});
      }
    return out;
  };
  std::vector<EmbeddingSolution> out;
  const auto first = triples(q.d);
  const auto second = triples(q.e);
  for (const auto& f : first)
    for (const auto& s : second)
      if (q.a * f.p * s.p + q.b * f.q * s.q + q.c * f.r * s.r == 0)
        out.push_back({f.p, f.q, f.r, s.p, s.q, s.r});
  std::sort(out.begin(), out.end());
  return out;
}

IntSymMatrix gamma_plus_form(const NormalizedQuintuple& q) {
  return incidence_matrix(expand_to_gamma_plus(build_gamma0(q.tuple())));
}

IntMatrix build_embedding_matrix(const NormalizedQuintuple& q, const EmbeddingSolution& sol) {
  if (!sol.satisfies(q))
    throw PretzelError(ErrorCode::InvalidSolution, "solution violates the embedding conditions");
  const long m = q.rank();
  IntMatrix a = IntMatrix::Zero(m, m);
  const int sizes[3] = {q.a, q.b, q.c};
  const long v1[3] = {sol.alpha, sol.beta, sol.gamma};
  const long v2[3] = {sol.x, sol.y, sol.z};
  long row = 0;
  long col = 3;
  for (int blk = 0; blk < 3; ++blk) {
    a(row, 0) = 1;
    a.block(row, 1, sizes[blk], 1).setConstant(v1[blk]);
    a.block(row, 2, sizes[blk], 1).setConstant(v2[blk]);
    // Chain vectors alternate sign so consecutive ones pair to +1.
    for (long r = 1; r < sizes[blk]; ++r, ++col) {
      const long s = r % 2 == 1 ? 1 : -1;
      a(row + r - 1, col) = s;
      a(row + r, col) = -s;
    }
    row += sizes[blk];
  }
  return a;
}

namespace {

// Column-by-column backtracking for B^T B = form. Coordinates that no
// placed column touches are interchangeable up to sign, so they are always
// a suffix and a new column fills them with a non-increasing nonnegative
// pattern.
class GramSearch {
 public:
  explicit GramSearch(const IntMatrix& form) : form_(form), n_(form.rows()) {
    order_ = column_order();
    basis_ = IntMatrix::Zero(n_, n_);
  }

  std::optional<IntMatrix> run() {
    if (!place(0, 0)) return std::nullopt;
    IntMatrix out(n_, n_);
    for (long k = 0; k < n_; ++k) out.col(order_[k]) = basis_.col(k);
    return out;
  }

 private:
  std::vector<long> column_order() const {
    std::vector<long> order;
    std::vector<bool> used(n_, false);
    for (long step = 0; step < n_; ++step) {
      long best = -1, best_links = -1;
      for (long j = 0; j < n_; ++j) {
        if (used[j]) continue;
        long links = 0;
        for (long i : order) links += form_(i, j) != 0;
        if (links > best_links || (links == best_links && form_(j, j) < form_(best, best))) {
          best = j;
          best_links = links;
        }
      }
      used[best] = true;
      order.push_back(best);
    }
    return order;
  }

  // Place the step-th column (in search order); `touched` coordinates in use.
  bool place(long step, long touched) {
    if (step == n_) return true;
    const long col = order_[step];
    const long norm = form_(col, col);
    std::vector<long> targets(step);
    for (long i = 0; i < step; ++i) targets[i] = form_(order_[i], col);
    // last_nz[i]: last touched coordinate where previous column i is nonzero.
    std::vector<long> last_nz(step, -1);
    for (long i = 0; i < step; ++i)
      for (long k = 0; k < touched; ++k)
        if (basis_(k, i) != 0) last_nz[i] = k;
    std::vector<long> rest(step, 0);
    for (long i = 0; i < step; ++i)
      for (long k = 0; k < touched; ++k) rest[i] += basis_(k, i) * basis_(k, i);
    std::vector<long> partial(step, 0);
    Eigen::Matrix<long, Eigen::Dynamic, 1> v = Eigen::Matrix<long, Eigen::Dynamic, 1>::Zero(n_);
    return fill_touched(step, touched, 0, norm, targets, last_nz, rest, partial, v);
  }

  bool fill_touched(long step, long touched, long k, long remaining,
                    const std::vector<long>& targets, const std::vector<long>& last_nz,
                    std::vector<long>& rest, std::vector<long>& partial,
                    Eigen::Matrix<long, Eigen::Dynamic, 1>& v) {
    if (k == touched) {
      for (long i = 0; i < step; ++i)
        if (partial[i] != targets[i]) return false;
      return fill_fresh(step, touched, touched, remaining, remaining, v);
    }
    // Cauchy-Schwarz feasibility of each dot-product constraint.
    for (long i = 0; i < step; ++i) {
      const long gap = targets[i] - partial[i];
      if (gap * gap > remaining * rest[i]) return false;
    }
    long lo = -isqrt(remaining), hi = isqrt(remaining);
    // A constraint whose support ends here forces the value.
    for (long i = 0; i < step; ++i) {
      if (last_nz[i] != k) continue;
      const long coef = basis_(k, i);
      const long gap = targets[i] - partial[i];
      if (gap % coef != 0) return false;
      const long forced = gap / coef;
      lo = std::max(lo, forced);
      hi = std::min(hi, forced);
    }
    for (long i = 0; i < step; ++i) rest[i] -= basis_(k, i) * basis_(k, i);
    bool found = false;
    for (long val = lo; val <= hi && !found; ++val) {
      if (val * val > remaining) continue;
      for (long i = 0; i < step; ++i) partial[i] += basis_(k, i) * val;
      v(k) = val;
      found = fill_touched(step, touched, k + 1, remaining - val * val, targets, last_nz, rest,
                           partial, v);
      for (long i = 0; i < step; ++i) partial[i] -= basis_(k, i) * val;
    }
    for (long i = 0; i < step; ++i) rest[i] += basis_(k, i) * basis_(k, i);
    v(k) = 0;
    return found;
  }

  bool fill_fresh(long step, long touched, long k, long remaining, long cap,
                  Eigen::Matrix<long, Eigen::Dynamic, 1>& v) {
    if (remaining == 0) {
      basis_.col(step) = v;
      long new_touched = touched;
      while (new_touched < n_ && v(new_touched) != 0) ++new_touched;
      if (place(step + 1, new_touched)) return true;
      basis_.col(step).setZero();
      return false;
    }
    if (k == n_) return false;
    // Nonincreasing: at most `remaining` more squares fit in n_ - k slots.
    for (long val = std::min(cap, isqrt(remaining)); val >= 1; --val) {
      if ((n_ - k) * val * val < remaining) break;
      v(k) = val;
      if (fill_fresh(step, touched, k + 1, remaining - val * val, val, v)) return true;
    }
    v(k) = 0;
    return false;
  }

  IntMatrix form_;
  long n_;
  std::vector<long> order_;
  IntMatrix basis_;
};

}  // namespace

std::optional<IntMatrix> generic_embedding_search(const IntSymMatrix& form, int max_dim) {
  if (form.rows() > max_dim)
    throw PretzelError(ErrorCode::DimensionTooLarge,
                       "form of dimension " + std::to_string(form.rows()) + " exceeds " +
                           std::to_string(max_dim));
  IntMatrix small(form.rows(), form.cols());
  for (Eigen::Index i = 0; i < form.rows(); ++i)
    for (Eigen::Index j = 0; j < form.cols(); ++j) small(i, j) = static_cast<std::int64_t>(form(i, j));
  return GramSearch(small).run();
}

}  // namespace pretzel
