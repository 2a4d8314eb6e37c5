#include "weylarr/scalar.hpp"

#include <vector>

namespace weylarr {

IntVector primitive_direction(const RationalVector& v) {
  BigInt den(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const BigInt d = boost::multiprecision::denominator(v(i));
    den = den / boost::multiprecision::gcd(den, d) * d;
  }
  std::vector<BigInt> scaled(static_cast<std::size_t>(v.size()));
  BigInt g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Rational r = v(i) * Rational(den);
    scaled[static_cast<std::size_t>(i)] = boost::multiprecision::numerator(r);
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(scaled[static_cast<std::size_t>(i)]));
  }
  IntVector out = IntVector::Zero(v.size());
  if (g == 0) return out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out(i) = (scaled[static_cast<std::size_t>(i)] / g).convert_to<int>();
  return out;
}

std::string to_string(const BigInt& z) { return z.str(); }
std::string to_string(const Rational& q) { return q.str(); }

}  // namespace weylarr
