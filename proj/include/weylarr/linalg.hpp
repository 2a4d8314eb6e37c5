#pragma once

// Exact dense linear algebra over Eigen matrices with an exact scalar
// (BigInt, Rational, or a small integer type when entries stay bounded).
// Nothing here uses tolerances: a pivot is usable iff it is != 0.

#include "weylarr/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace weylarr {

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) return false;
  return true;
}

/// Rank by fraction-free (Bareiss) elimination. Every division is exact, so
/// integer scalars never see a remainder and rationals never grow beyond the
/// size of a minor.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index rank = 0;
  Scalar previous(1);
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index c = col + 1; c < cols; ++c)
        m(r, c) = (m(rank, col) * m(r, c) - m(r, col) * m(rank, c)) / previous;
      m(r, col) = Scalar(0);
    }
    previous = m(rank, col);
    ++rank;
  }
  return rank;
}

/// Solves the square system a*x = b. Returns nullopt when a is singular.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_exact(Matrix<Scalar> a, Vector<Scalar> b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) return std::nullopt;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      std::swap(b(pivot), b(col));
    }
    const Scalar p = a(col, col);
    for (Eigen::Index c = col; c < n; ++c) a(col, c) /= p;
    b(col) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Scalar f = a(r, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b(r) -= f * b(col);
    }
  }
  return b;
}

/// Incrementally grown row space in echelon form with unit pivots.
template <typename Scalar>
class RowSpace {
 public:
  explicit RowSpace(Eigen::Index dim) : dim_(dim) {}

  Eigen::Index dim() const { return dim_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(basis_.size()); }

  bool contains(const Vector<Scalar>& v) const { return is_zero(reduce(v)); }

  /// Adds v; returns true iff the rank went up.
  bool insert(const Vector<Scalar>& v) {
    Vector<Scalar> r = reduce(v);
    Eigen::Index pivot = 0;
    while (pivot < dim_ && r(pivot) == 0) ++pivot;
    if (pivot == dim_) return false;
    const Scalar p = r(pivot);
    for (Eigen::Index i = pivot; i < dim_; ++i) r(i) /= p;
    basis_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
  }

  template <typename Derived>
  bool insert(const Eigen::MatrixBase<Derived>& v) {
    return insert(Vector<Scalar>(v.template cast<Scalar>()));
  }
  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    return contains(Vector<Scalar>(v.template cast<Scalar>()));
  }

 private:
  Vector<Scalar> reduce(Vector<Scalar> v) const {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const Scalar f = v(pivots_[b]);
      if (f == 0) continue;
      for (Eigen::Index i = pivots_[b]; i < dim_; ++i) v(i) -= f * basis_[b](i);
    }
    return v;
  }

  Eigen::Index dim_;
  std::vector<Vector<Scalar>> basis_;
  std::vector<Eigen::Index> pivots_;
};

}  // namespace weylarr
