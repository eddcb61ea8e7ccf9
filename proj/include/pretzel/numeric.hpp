// Exact scalar types and Eigen aliases shared by every module.
#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace pretzel {

using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense symmetric integer matrix. Symmetry is checked where it matters,
/// not enforced by the type.
using IntSymMatrix = Matrix<BigInt>;
using IntMatrix = Matrix<std::int64_t>;
using Vec2 = Eigen::Matrix<std::int64_t, 2, 1>;

// Entrywise helpers for exact scalars. Eigen's operator== and matrix products
// trip a byte-container trait in Boost 1.74 when the scalar is a Boost number.
template <typename S>
bool equal(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      S acc = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

// Boost 1.74 rejects a negative denominator in the two-argument constructor,
// so normalize the sign first.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline int sign(const Rational& q) { return q.sign(); }

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() +
         (boost::multiprecision::denominator(q) == 1
              ? std::string()
              : "/" + boost::multiprecision::denominator(q).str());
}

}  // namespace pretzel
