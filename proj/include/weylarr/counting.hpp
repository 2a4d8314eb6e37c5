#pragma once

// Face counts g(n,k) and flat counts h(n,k): recurrences, rational
// generating functions and closed forms, all in exact integers.
//
//   G(s,t) = (1 - s) / (1 - 2s + s^2 - 2st + s^2 t)
//   H(s,t) = (1 - s)(1 - st + s^2 t) /
//            (1 - 2s + s^2 - 2st + 3s^2 t - 2s^3 t + s^2 t^2 - 2s^3 t^2 + s^4 t^2)

#include "weylarr/scalar.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace weylarr {

/// Polynomial in s and t; coefficient (i, j) multiplies s^i t^j.
class BivariatePolynomial {
 public:
  struct Term {
    long coefficient;
    int s;
    int t;
  };

  BivariatePolynomial() = default;
  BivariatePolynomial(std::initializer_list<Term> terms);

  int degree_s() const { return static_cast<int>(c_.rows()) - 1; }
  int degree_t() const { return static_cast<int>(c_.cols()) - 1; }
  BigInt coefficient(int i, int j) const;

  friend BivariatePolynomial operator*(const BivariatePolynomial& p, const BivariatePolynomial& q);
  friend bool operator==(const BivariatePolynomial& p, const BivariatePolynomial& q);

 private:
  void grow(int i, int j);
  Matrix<BigInt> c_;
};

/// Power series in s and t truncated at s^max_n t^max_k.
class BiSeries {
 public:
  BiSeries(int max_n, int max_k);

  int max_n() const { return static_cast<int>(c_.rows()) - 1; }
  int max_k() const { return static_cast<int>(c_.cols()) - 1; }
  /// Zero outside the truncation window and for negative indices.
  BigInt operator()(int n, int k) const;
  BigInt& at(int n, int k) { return c_(n, k); }
  std::vector<BigInt> row(int n) const;

  friend bool operator==(const BiSeries& x, const BiSeries& y) { return x.c_ == y.c_; }

 private:
  Matrix<BigInt> c_;
};

/// Solves Q * F = P coefficient by coefficient. Throws std::domain_error if
/// Q(0,0) = 0 or a coefficient is not an integer.
BiSeries expand_rational(const BivariatePolynomial& p, const BivariatePolynomial& q, int max_n, int max_k);

/// Product truncated to the window of f.
BiSeries truncated_product(const BivariatePolynomial& p, const BiSeries& f);

BivariatePolynomial g_numerator();
BivariatePolynomial g_denominator();
BivariatePolynomial h_numerator();
BivariatePolynomial h_denominator();

/// g(n,k) = [k=0] + sum_{l=1}^{n-k+1} (l+1) g(n-l, k-1); zero for n < 0 or k outside [0,n].
BigInt g_recurrence(int n, int k);
/// g(n,k) = 2g(n-1,k) - g(n-2,k) + 2g(n-1,k-1) - g(n-2,k-1) from rows G_0 = 1, G_1 = 1 + 2t.
BigInt g_linear_recurrence(int n, int k);
/// sum_{i=0}^{k} (-1)^{k-i} 2^i C(k,i) C(n+i, 2k).
BigInt g_closed_form(int n, int k);
/// g(n, n-k) by the alternating sum over i <= min(k, floor((n+1)/2)).
BigInt g_near_top(int n, int k);
/// Coefficients of G_n(t), from G_n = (2+2t) G_{n-1} - (1+t) G_{n-2}.
std::vector<BigInt> g_polynomial(int n);

/// Pseudo-ensemble counts: rho(n,k) = [k=-1] + sum_{l=0}^{n} (l+1) h(n-l, k),
/// with rho(-1,k) = [k=-1] and rho = 0 for n < -1.
BigInt rho(int n, int k);
/// h(n,k) = [n=k] + sum_{l=0}^{n-1} (l+1) rho(n-l-2, k-l-1).
BigInt h_recurrence(int n, int k);
/// Eight-term recurrence read off the denominator of H, rows n <= 3 from the series.
BigInt h_linear_recurrence(int n, int k);

/// n-th row of the binomial simplex counts C(n,k).
BigInt binomial(int n, int k);

enum class Provenance { recurrence, rational_expansion, closed_form, enumeration, oracle, reference };
std::string to_string(Provenance p);

enum class CountKind { faces, flats };
std::string to_string(CountKind kind);

/// (n,k) -> count, tagged with how it was obtained.
class CountTable {
 public:
  CountTable(CountKind kind, Provenance provenance) : kind_(kind), provenance_(provenance) {}

  CountKind kind() const { return kind_; }
  Provenance provenance() const { return provenance_; }
  void set(int n, int k, BigInt value) { values_[{n, k}] = std::move(value); }
  /// Zero for entries never set.
  BigInt get(int n, int k) const;
  bool has(int n, int k) const { return values_.count({n, k}) != 0; }
  /// Entries k = 0..n of row n (missing ones are zero).
  std::vector<BigInt> row(int n) const;
  const std::map<std::pair<int, int>, BigInt>& values() const { return values_; }

  /// Lines "kind,n,k,value,provenance" without a header.
  std::string to_csv() const;
  /// Array of {"kind","n","k","value","provenance"} objects; values as strings.
  std::string to_json() const;

 private:
  CountKind kind_;
  Provenance provenance_;
  std::map<std::pair<int, int>, BigInt> values_;
};

}  // namespace weylarr
