#include "pretzel/error.hpp"

namespace pretzel {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTuple: return "InvalidTuple";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::NotOddKnot: return "NotOddKnot";
    case ErrorCode::EulerZero: return "EulerZero";
    case ErrorCode::SignatureNonzero: return "SignatureNonzero";
    case ErrorCode::NotFiveStranded: return "NotFiveStranded";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidSolution: return "InvalidSolution";
    case ErrorCode::DegenerateLattice: return "DegenerateLattice";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::InvalidBound: return "InvalidBound";
  }
  return "Unknown";
}

}  // namespace pretzel
