#pragma once

// Sign vectors over the restricted arrangement: the weights
// lambda_{i,j}(x) = x_i + x_j (1 <= i <= j <= n) and the consecutive roots
// x_i - x_{i+1}. Weights are stored row by row: (1,1), (1,2), ..., (1,n),
// (2,2), ..., (n,n).

#include "weylarr/scalar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace weylarr {

inline int weight_count(int n) { return n * (n + 1) / 2; }

/// Position of lambda_{i,j} in row-by-row order (1-based i <= j).
inline int weight_slot(int n, int i, int j) { return (i - 1) * (n + 1) - (i - 1) * i / 2 + (j - i); }

template <typename Derived>
typename Derived::Scalar weight_value(const Eigen::MatrixBase<Derived>& x, int i, int j) {
  return x(i - 1) + x(j - 1);
}

struct SignCondition {
  int n = 0;
  std::vector<std::int8_t> weights;  // sigma(i,j) in {-1, 0, +1}
  std::vector<std::int8_t> roots;    // tau(i) in {0, +1}, i = 1..n-1

  explicit SignCondition(int rank = 0)
      : n(rank), weights(static_cast<std::size_t>(weight_count(rank)), 0),
        roots(static_cast<std::size_t>(rank > 0 ? rank - 1 : 0), 0) {}

  int weight(int i, int j) const { return weights[static_cast<std::size_t>(weight_slot(n, i, j))]; }
  void set_weight(int i, int j, int s) { weights[static_cast<std::size_t>(weight_slot(n, i, j))] = static_cast<std::int8_t>(s); }

  friend bool operator==(const SignCondition&, const SignCondition&) = default;
  friend auto operator<=>(const SignCondition&, const SignCondition&) = default;
};

/// Signs of every weight and consecutive root at x.
template <typename Derived>
SignCondition sign_condition_at(const Eigen::MatrixBase<Derived>& x) {
  const int n = static_cast<int>(x.size());
  SignCondition c(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) c.set_weight(i, j, sign_of(weight_value(x, i, j)));
  for (int i = 1; i < n; ++i) c.roots[static_cast<std::size_t>(i - 1)] = static_cast<std::int8_t>(sign_of(typename Derived::Scalar(x(i - 1) - x(i))));
  return c;
}

/// Compact text: weight signs row by row separated by '/', then '|' and the
/// root signs, e.g. "++/+|+" for n = 2.
std::string to_string(const SignCondition& c);

}  // namespace weylarr
