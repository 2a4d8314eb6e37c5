#include "weylarr/weight_system.hpp"

#include "weylarr/linalg.hpp"

#include <stdexcept>

namespace weylarr {

namespace {

RationalVector unit(int dim, int i, const Rational& c = Rational(1)) {
  RationalVector v = RationalVector::Zero(dim);
  v(i) = c;
  return v;
}

RationalVector vec(std::initializer_list<Rational> entries) {
  RationalVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Rational& e : entries) v(i++) = e;
  return v;
}

// +-e_i +- e_j for i < j.
void add_long_type(std::vector<RationalVector>& out, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) out.push_back(unit(n, i, si) + unit(n, j, sj));
}

void add_signed_units(std::vector<RationalVector>& out, int n, const Rational& scale) {
  for (int i = 0; i < n; ++i) {
    out.push_back(unit(n, i, scale));
    out.push_back(unit(n, i, -scale));
  }
}

void add_zeros(std::vector<RationalVector>& out, int dim, int count) {
  for (int z = 0; z < count; ++z) out.push_back(RationalVector::Zero(dim));
}

std::vector<RationalVector> consecutive_walls(int n) {
  std::vector<RationalVector> walls;
  for (int i = 0; i + 1 < n; ++i) walls.push_back(unit(n, i) - unit(n, i + 1));
  return walls;
}

bool zero(const RationalVector& v) { return is_zero(v); }

// Returns c with v = c * w, if any.
std::optional<Rational> ratio(const RationalVector& v, const RationalVector& w) {
  std::optional<Rational> c;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (w(i) == 0) {
      if (v(i) != 0) return std::nullopt;
      continue;
    }
    const Rational q = v(i) / w(i);
    if (c && *c != q) return std::nullopt;
    c = q;
  }
  return c;
}

WeightSystem so_odd(int n) {
  if (n < 1) throw std::domain_error("so_{2n+1}: n must be at least 1");
  WeightSystem s;
  s.rank = n;
  add_long_type(s.roots, n);
  add_signed_units(s.roots, n, Rational(1));
  s.walls = consecutive_walls(n);
  s.walls.push_back(unit(n, n - 1));
  add_signed_units(s.weights, n, Rational(1));
  add_zeros(s.weights, n, 1);
  return s;
}

WeightSystem sp(int n, bool vector_part, bool wedge_part) {
  if (n < (wedge_part ? 2 : 1)) throw std::domain_error("sp_n: rank too small for this module");
  WeightSystem s;
  s.rank = n;
  add_long_type(s.roots, n);
  add_signed_units(s.roots, n, Rational(2));
  s.walls = consecutive_walls(n);
  s.walls.push_back(unit(n, n - 1, Rational(2)));
  if (vector_part) add_signed_units(s.weights, n, Rational(1));
  if (wedge_part) {
    add_long_type(s.weights, n);
    add_zeros(s.weights, n, n - 1);
  }
  return s;
}

WeightSystem f4() {
  WeightSystem s;
  s.rank = 4;
  std::vector<RationalVector> short_roots;
  add_signed_units(short_roots, 4, Rational(1));
  const Rational h(1, 2);
  for (int mask = 0; mask < 16; ++mask) {
    RationalVector v(4);
    for (int i = 0; i < 4; ++i) v(i) = (mask >> i & 1) ? -h : h;
    short_roots.push_back(v);
  }
  add_long_type(s.roots, 4);
  s.roots.insert(s.roots.end(), short_roots.begin(), short_roots.end());
  s.walls = {vec({0, 1, -1, 0}), vec({0, 0, 1, -1}), vec({0, 0, 0, 1}), vec({h, -h, -h, -h})};
  s.weights = short_roots;
  add_zeros(s.weights, 4, 2);
  return s;
}

// Coordinates are coefficients in the simple roots; a point of the dual space
// is given by its values on the simple roots, so the chamber is x >= 0.
WeightSystem g2() {
  WeightSystem s;
  s.rank = 2;
  const std::vector<RationalVector> short_roots = {vec({1, 0}), vec({1, 1}), vec({2, 1})};
  const std::vector<RationalVector> long_roots = {vec({0, 1}), vec({3, 1}), vec({3, 2})};
  for (const auto* group : {&short_roots, &long_roots})
    for (const RationalVector& r : *group) {
      s.roots.push_back(r);
      s.roots.push_back(-r);
    }
  s.walls = {vec({1, 0}), vec({0, 1})};
  for (const RationalVector& r : short_roots) {
    s.weights.push_back(r);
    s.weights.push_back(-r);
  }
  add_zeros(s.weights, 2, 1);
  return s;
}

WeightSystem gl(int n) {
  if (n < 1) throw std::domain_error("gl_n: n must be at least 1");
  WeightSystem s;
  s.rank = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s.roots.push_back(unit(n, i) - unit(n, j));
  s.walls = consecutive_walls(n);
  for (int i = 0; i < n; ++i) s.weights.push_back(unit(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.weights.push_back(unit(n, i) + unit(n, j));
  return s;
}

}  // namespace

std::string to_string(WeightSystemTag tag) {
  switch (tag) {
    case WeightSystemTag::so_odd_vector: return "so_odd:V";
    case WeightSystemTag::sp_vector: return "sp:V";
    case WeightSystemTag::sp_wedge2_0: return "sp:L2_0";
    case WeightSystemTag::sp_vector_wedge2_0: return "sp:V+L2_0";
    case WeightSystemTag::f4_26: return "f4:26";
    case WeightSystemTag::g2_7: return "g2:7";
    case WeightSystemTag::gl_vector_wedge2: return "gl:V+L2";
  }
  return "?";
}

std::optional<WeightSystemTag> parse_weight_system_tag(const std::string& text) {
  for (WeightSystemTag tag : proportional_tags())
    if (to_string(tag) == text) return tag;
  if (text == to_string(WeightSystemTag::gl_vector_wedge2)) return WeightSystemTag::gl_vector_wedge2;
  return std::nullopt;
}

std::vector<WeightSystemTag> proportional_tags() {
  return {WeightSystemTag::so_odd_vector, WeightSystemTag::sp_vector, WeightSystemTag::sp_wedge2_0,
          WeightSystemTag::sp_vector_wedge2_0, WeightSystemTag::f4_26, WeightSystemTag::g2_7};
}

WeightSystem make_weight_system(WeightSystemTag tag, int n) {
  WeightSystem s;
  std::string label;
  switch (tag) {
    case WeightSystemTag::so_odd_vector:
      s = so_odd(n);
      label = "so_" + std::to_string(2 * n + 1) + ":V";
      break;
    case WeightSystemTag::sp_vector:
      s = sp(n, true, false);
      label = "sp_" + std::to_string(n) + ":V";
      break;
    case WeightSystemTag::sp_wedge2_0:
      s = sp(n, false, true);
      label = "sp_" + std::to_string(n) + ":L2_0";
      break;
    case WeightSystemTag::sp_vector_wedge2_0:
      s = sp(n, true, true);
      label = "sp_" + std::to_string(n) + ":V+L2_0";
      break;
    case WeightSystemTag::f4_26:
      s = f4();
      label = "f4:26";
      break;
    case WeightSystemTag::g2_7:
      s = g2();
      label = "g2:7";
      break;
    case WeightSystemTag::gl_vector_wedge2:
      s = gl(n);
      label = "gl_" + std::to_string(n) + ":V+L2";
      break;
  }
  s.tag = tag;
  s.name = label;
  return s;
}

ProportionalityCertificate check_weights_proportional_to_roots(const WeightSystem& system) {
  ProportionalityCertificate cert;
  for (std::size_t w = 0; w < system.weights.size(); ++w) {
    const RationalVector& mu = system.weights[w];
    ProportionalityEntry entry;
    entry.weight = w;
    if (zero(mu)) {
      entry.multiplier = 0;
      cert.entries.push_back(entry);
      continue;
    }
    for (std::size_t r = 0; r < system.roots.size() && !entry.root; ++r) {
      const std::optional<Rational> c = ratio(mu, system.roots[r]);
      if (c && *c > 0) {
        entry.root = r;
        entry.multiplier = *c;
      }
    }
    if (!entry.root) {
      cert.counterexample = w;
      return cert;
    }
    cert.entries.push_back(entry);
  }
  cert.proportional = true;
  return cert;
}

Arrangement weight_arrangement(const WeightSystem& system) {
  Arrangement arr;
  arr.name = system.name;
  arr.dim = system.rank;
  arr.walls = system.walls;
  for (const RationalVector& mu : system.weights) {
    if (zero(mu)) continue;
    bool repeated = false;
    for (const RationalVector& h : arr.hyperplanes)
      if (ratio(mu, h)) repeated = true;
    if (!repeated) arr.hyperplanes.push_back(mu);
  }
  return arr;
}

std::vector<std::uint64_t> geometric_face_counts(const WeightSystem& system, unsigned threads) {
  return enumerate_cone_cells(weight_arrangement(system), threads).counts;
}

std::vector<std::uint64_t> simplex_counts(int rank) {
  std::vector<std::uint64_t> row{1};
  for (int r = 1; r <= rank; ++r) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(r) + 1, 1);
    for (int k = 1; k < r; ++k) next[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k) - 1] + row[static_cast<std::size_t>(k)];
    row = std::move(next);
  }
  return row;
}

}  // namespace weylarr
