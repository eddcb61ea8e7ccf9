// Signature and determinant of odd pretzel knots, each by a closed form and
// by an independent matrix computation on the Gamma_0 plumbing form.
#pragma once

#include "pretzel/numeric.hpp"
#include "pretzel/pretzel_core.hpp"

namespace pretzel {

struct SignatureReport {
  int s = 0;         ///< #positive - #negative parameters
  Rational e_hat;    ///< sum of 1/p_i
  int sigma = 0;     ///< s - sgn(e_hat)
};

/// Closed form sigma = s - sgn(e_hat). Throws NotOddKnot, EulerZero.
SignatureReport signature_formula(const PretzelTuple& t);

/// Signature of the Gamma_0 intersection form. Throws NotOddKnot.
int signature_oracle(const PretzelTuple& t);

/// |sum_i prod_{j != i} p_j|. Throws NotOddKnot.
BigInt determinant(const PretzelTuple& t);

/// |det Q_{P0}|. Throws NotOddKnot.
BigInt determinant_oracle(const PretzelTuple& t);

}  // namespace pretzel
