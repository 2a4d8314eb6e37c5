#pragma once

// Reference counts as originally printed (misprints included) and the
// errata file that records which printed values are wrong.

#include "weylarr/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylarr {

namespace reference {

/// Rows 0..10 of the printed face-count table.
const std::vector<std::vector<long>>& g_table();
/// Coefficients of the printed polynomials G_0(t), ..., G_10(t).
const std::vector<std::vector<long>>& g_polynomials();
/// Rows 0..10 of the printed flat-count table.
const std::vector<std::vector<long>>& h_table();
/// Coefficients of s^0 .. s^10 in the printed expansion of H(s,t).
const std::vector<std::vector<long>>& h_series();

/// Printed polynomial formula for g(n,k), k = 0..4.
std::optional<Rational> g_small_k(int n, int k);
/// Printed polynomial formula for g(n,n-k), k = 0..4.
std::optional<Rational> g_near_top(int n, int k);

}  // namespace reference

struct Erratum {
  std::string id;
  std::string table;  // g-table, g-polynomials, h-table, h-series, g-small-k, g-near-top, formula
  int n = -1;         // -1: every n
  int k = -1;
  std::string printed;
  std::string arbitrated;
  std::string arbiter;
  std::string note;
};

struct Errata {
  int version = 0;
  std::vector<Erratum> entries;

  /// Entry for (table, n, k); an entry with n = -1 matches every n.
  const Erratum* find(const std::string& table, int n, int k) const;
};

/// Throws std::runtime_error if the file cannot be read or parsed.
Errata load_errata(const std::string& path);
Errata parse_errata(const std::string& text);

}  // namespace weylarr
