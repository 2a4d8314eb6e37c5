#pragma once

// Dense tableau simplex over an exact scalar.
//
//   maximize c.z  subject to  A z <= b,  z >= 0,  with b >= 0.
//
// b >= 0 makes the all-slack basis feasible, so a single phase suffices.
// Bland's rule (smallest-index entering and leaving variables) prevents
// cycling on the heavily degenerate homogeneous systems the oracle builds.

#include "weylarr/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace weylarr {

enum class LpStatus { optimal, unbounded };

template <typename Scalar>
struct LpSolution {
  LpStatus status = LpStatus::optimal;
  Scalar value{};
  Vector<Scalar> z;
  long pivots = 0;
};

template <typename Scalar>
LpSolution<Scalar> maximize(const Matrix<Scalar>& a, const Vector<Scalar>& b,
                            const Vector<Scalar>& c) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (b.size() != m || c.size() != n)
    throw std::invalid_argument("maximize: dimension mismatch");
  for (Eigen::Index i = 0; i < m; ++i)
    if (b(i) < 0) throw std::invalid_argument("maximize: requires b >= 0");

  // Dictionary rows: x_basic[i] = t(i,n) - sum_j t(i,j) x_nonbasic[j].
  // Objective row m: z = t(m,n) - sum_j t(m,j) x_nonbasic[j].
  Matrix<Scalar> t(m + 1, n + 1);
  t.topLeftCorner(m, n) = a;
  t.topRightCorner(m, 1) = b;
  for (Eigen::Index j = 0; j < n; ++j) t(m, j) = -c(j);
  t(m, n) = Scalar(0);

  std::vector<Eigen::Index> nonbasic(n), basic(m);
  for (Eigen::Index j = 0; j < n; ++j) nonbasic[j] = j;
  for (Eigen::Index i = 0; i < m; ++i) basic[i] = n + i;

  LpSolution<Scalar> out;
  for (;;) {
    Eigen::Index s = -1;
    for (Eigen::Index j = 0; j < n; ++j)
      if (t(m, j) < 0 && (s < 0 || nonbasic[j] < nonbasic[s])) s = j;
    if (s < 0) break;

    Eigen::Index r = -1;
    Scalar best{};
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, s) <= 0) continue;
      Scalar ratio = t(i, n) / t(i, s);
      if (r < 0 || ratio < best || (ratio == best && basic[i] < basic[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r < 0) {
      out.status = LpStatus::unbounded;
      return out;
    }

    const Scalar p = t(r, s);
    for (Eigen::Index j = 0; j <= n; ++j)
      if (j != s) t(r, j) /= p;
    t(r, s) = Scalar(1) / p;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == r) continue;
      const Scalar f = t(i, s);
      if (f == 0) continue;
      for (Eigen::Index j = 0; j <= n; ++j)
        if (j != s) t(i, j) -= f * t(r, j);
      t(i, s) = -f * t(r, s);
    }
    std::swap(basic[r], nonbasic[s]);
    ++out.pivots;
  }

  out.value = t(m, n);
  out.z = Vector<Scalar>::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i)
    if (basic[i] < n) out.z(basic[i]) = t(i, n);
  return out;
}

}  // namespace weylarr
