#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>

namespace weylarr {

// Exact scalars. Expression templates are off so that `auto` and Eigen's
// internal temporaries always hold concrete values.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<int>;
using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const BigInt& z) { return z.sign(); }
inline int sign_of(int v) { return (v > 0) - (v < 0); }

template <typename Derived>
RationalVector to_rational(const Eigen::MatrixBase<Derived>& v) {
  RationalVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

// Smallest positive integer multiple of a rational vector (gcd of the
// numerators divided out). Zero maps to zero.
IntVector primitive_direction(const RationalVector& v);

std::string to_string(const BigInt& z);
std::string to_string(const Rational& q);

}  // namespace weylarr
