#include "pretzel/invariants.hpp"

#include <boost/multiprecision/integer.hpp>

#include "pretzel/error.hpp"
#include "pretzel/plumbing.hpp"

namespace pretzel {

namespace {

void require_odd_knot(const PretzelTuple& t) {
  if (classify(t) != KnotClass::OddKnot)
    throw PretzelError(ErrorCode::NotOddKnot, t.str() + " is not an odd pretzel knot");
}

}  // namespace

SignatureReport signature_formula(const PretzelTuple& t) {
  require_odd_knot(t);
  SignatureReport r;
  for (int p : t) {
    r.s += p > 0 ? 1 : -1;
    r.e_hat += make_rational(1, p);
  }
  if (r.e_hat == 0)
    throw PretzelError(ErrorCode::EulerZero, t.str() + " has vanishing Euler sum");
  r.sigma = r.s - r.e_hat.sign();
  return r;
}

int signature_oracle(const PretzelTuple& t) {
  return signature_and_rank(incidence_matrix(build_gamma0(t))).signature;
}

BigInt determinant(const PretzelTuple& t) {
  require_odd_knot(t);
  BigInt sum = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    BigInt prod = 1;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) prod *= t[j];
    sum += prod;
  }
  return abs(sum);
}

BigInt determinant_oracle(const PretzelTuple& t) {
  return abs(exact_determinant(incidence_matrix(build_gamma0(t))));
}

}  // namespace pretzel
