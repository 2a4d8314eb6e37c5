#pragma once

// Chambers of the weight arrangement inside the Weyl chamber
// W = { x_1 >= ... >= x_n }: subsets of [n], sign tableaux, extreme rays
// and point classification.

#include "weylarr/poset.hpp"
#include "weylarr/scalar.hpp"
#include "weylarr/sign_condition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weylarr {

class Chamber {
 public:
  int n() const { return n_; }
  /// S listed as a_1 > a_2 > ... > a_k.
  const std::vector<int>& subset() const { return subset_; }
  bool contains(int i) const;
  /// s_i = +1 if i is in S, else -1.
  IntVector characteristic() const;
  /// Characteristic vector as a string of '+' and '-', e.g. "+-+".
  std::string label() const;
  /// Binary code with s_1 as the most significant bit and '+' = 1.
  std::uint64_t code() const;

  friend bool operator==(const Chamber&, const Chamber&) = default;

 private:
  Chamber(int n, std::vector<int> subset) : n_(n), subset_(std::move(subset)) {}
  friend Chamber chamber_from_subset(int n, std::vector<int> subset);
  int n_ = 0;
  std::vector<int> subset_;
};

/// Throws std::domain_error for elements outside [1, n]. Duplicates are merged.
Chamber chamber_from_subset(int n, std::vector<int> subset);
Chamber chamber_from_code(int n, std::uint64_t code);
/// All 2^n chambers in increasing code order.
std::vector<Chamber> all_chambers(int n);

/// Signs of x_i + x_j, 1 <= i <= j <= n, in the right-justified triangular
/// layout: row i holds columns i..n.
class SignTableau {
 public:
  explicit SignTableau(int n);
  int n() const { return n_; }
  bool plus(int i, int j) const { return cells_[index(i, j)]; }
  void set(int i, int j, bool plus) { cells_[index(i, j)] = plus; }

  /// One line per row, row i indented by i-1 spaces.
  std::string render() const;
  /// Inverse of render(); throws std::invalid_argument on a malformed grid.
  static SignTableau parse(const std::string& text);

  friend bool operator==(const SignTableau&, const SignTableau&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(weight_slot(n_, i, j)); }
  int n_;
  std::vector<bool> cells_;
};

SignTableau tableau_of(const Chamber& chamber);

struct Box {
  int i;
  int j;
  friend bool operator==(Box, Box) = default;
};

struct TableauVerdict {
  std::optional<Chamber> chamber;
  /// On rejection: a + box and the - box above or to its left.
  std::optional<std::pair<Box, Box>> violation;
  std::string message;

  explicit operator bool() const { return chamber.has_value(); }
};

/// Checks the sign-flow rules; on success the chamber has S = the nonzero
/// row counts of plus signs.
TableauVerdict tableau_validate(const SignTableau& tableau);

/// Vector (1^a, 0^{n-a-b}, (-1)^b) with a+b >= 1.
class RayVector {
 public:
  /// Throws std::domain_error unless coordinates have that form.
  explicit RayVector(IntVector coordinates);
  const IntVector& coordinates() const { return coordinates_; }
  int n() const { return static_cast<int>(coordinates_.size()); }

  friend bool operator==(const RayVector& x, const RayVector& y) { return x.coordinates_ == y.coordinates_; }

 private:
  IntVector coordinates_;
};

PosetPoint ray_index(const RayVector& ray);
/// Throws std::domain_error unless P lies in E*_n.
RayVector ray_from_index(int n, PosetPoint p);

/// e_1^S, ..., e_n^S with e_l = (1^{pi_l}, 0^{n-l}, (-1)^{l-pi_l}) and
/// pi_l = |S cap [n-l+1, n]|.
std::vector<RayVector> extreme_rays(const Chamber& chamber);

/// The maximal chain of ray indices of a chamber (one point per level).
Chain chain_of(const Chamber& chamber);
/// Inverse of chain_of; throws std::domain_error unless c is a maximal chain.
Chamber chamber_from_chain(int n, const Chain& c);

/// Sum of l * e_l: a canonical interior point.
RationalVector interior_point(const Chamber& chamber);

/// Sign pattern that holds on the whole open chamber.
SignCondition chamber_sign_condition(const Chamber& chamber);

struct PointClass {
  std::optional<Chamber> chamber;  // set iff all |x_i| are distinct and nonzero
  SignCondition signature;
};

/// Throws std::domain_error unless x lies in the closed Weyl chamber.
PointClass classify_point(int n, const RationalVector& x);

}  // namespace weylarr
