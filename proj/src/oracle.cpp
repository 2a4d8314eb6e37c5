#include "weylarr/oracle.hpp"

#include "weylarr/chamber.hpp"
#include "weylarr/linalg.hpp"
#include "weylarr/simplex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <thread>

namespace weylarr {

Feasibility strict_feasible(const LinearSystem& system) {
  const int d = system.dim;
  const Eigen::Index vars = 2 * d + 1;
  const Eigen::Index rows = static_cast<Eigen::Index>(2 * system.equalities.size() + system.strict.size() +
                                                      system.nonstrict.size()) + vars;
  RationalMatrix a = RationalMatrix::Zero(rows, vars);
  RationalVector b = RationalVector::Zero(rows);
  Eigen::Index r = 0;
  // Row  f.x+ - f.x- + slack * e <= 0, i.e. -f(x) + e <= 0 for strict f.
  auto add = [&](const RationalVector& f, int sign, bool with_slack) {
    for (int i = 0; i < d; ++i) {
      a(r, i) = sign * f(i);
      a(r, d + i) = -sign * f(i);
    }
    if (with_slack) a(r, 2 * d) = Rational(1);
    ++r;
  };
  for (const RationalVector& f : system.equalities) {
    add(f, 1, false);
    add(f, -1, false);
  }
  for (const RationalVector& f : system.strict) add(f, -1, true);
  for (const RationalVector& f : system.nonstrict) add(f, -1, false);
  for (Eigen::Index v = 0; v < vars; ++v) {
    a(r, v) = Rational(1);
    b(r) = Rational(1);
    ++r;
  }
  RationalVector c = RationalVector::Zero(vars);
  c(2 * d) = Rational(1);

  const LpSolution<Rational> lp = maximize<Rational>(a, b, c);
  Feasibility out;
  out.pivots = lp.pivots;
  if (lp.status != LpStatus::optimal) throw std::logic_error("strict_feasible: bounded LP reported unbounded");
  out.feasible = lp.value > 0;
  out.witness = RationalVector(d);
  for (int i = 0; i < d; ++i) out.witness(i) = lp.z(i) - lp.z(d + i);
  return out;
}

Arrangement gl_arrangement(int n) {
  Arrangement arr;
  arr.name = "gl_" + std::to_string(n) + ":V+L2";
  arr.dim = n;
  for (int i = 0; i + 1 < n; ++i) {
    RationalVector w = RationalVector::Zero(n);
    w(i) = 1;
    w(i + 1) = -1;
    arr.walls.push_back(w);
  }
  arr.hyperplanes.resize(static_cast<std::size_t>(weight_count(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      RationalVector h = RationalVector::Zero(n);
      h(i - 1) += 1;
      h(j - 1) += 1;
      arr.hyperplanes[static_cast<std::size_t>(weight_slot(n, i, j))] = h;
    }
  return arr;
}

namespace {

LinearSystem system_of(const Arrangement& arr, const std::vector<std::int8_t>& signs) {
  LinearSystem sys;
  sys.dim = arr.dim;
  const std::size_t walls = arr.walls.size();
  for (std::size_t c = 0; c < signs.size(); ++c) {
    const RationalVector& f = c < walls ? arr.walls[c] : arr.hyperplanes[c - walls];
    if (signs[c] == 0)
      sys.equalities.push_back(f);
    else
      sys.strict.push_back(signs[c] > 0 ? f : RationalVector(-f));
  }
  return sys;
}

Rational dot(const RationalVector& f, const RationalVector& x) {
  Rational s(0);
  for (Eigen::Index i = 0; i < f.size(); ++i) s += f(i) * x(i);
  return s;
}

class CellSearch {
 public:
  explicit CellSearch(const Arrangement& arr) : arr_(arr), total_(arr.walls.size() + arr.hyperplanes.size()) {}

  // Feasible complete sign vectors below the given prefix, in depth-first order.
  void run(std::vector<std::int8_t> prefix, const RationalVector& witness, std::size_t stop_depth,
           std::vector<std::pair<std::vector<std::int8_t>, RationalVector>>& out) {
    ++stats.nodes;
    const std::size_t depth = prefix.size();
    if (depth == stop_depth) {
      out.emplace_back(std::move(prefix), witness);
      return;
    }
    const bool wall = depth < arr_.walls.size();
    const RationalVector& f = wall ? arr_.walls[depth] : arr_.hyperplanes[depth - arr_.walls.size()];
    const int here = sign_of(dot(f, witness));
    static const std::int8_t wall_choices[] = {0, 1};
    static const std::int8_t plane_choices[] = {-1, 0, 1};
    const std::int8_t* choices = wall ? wall_choices : plane_choices;
    const int count = wall ? 2 : 3;
    for (int c = 0; c < count; ++c) {
      prefix.push_back(choices[c]);
      if (choices[c] == here) {
        run(prefix, witness, stop_depth, out);
      } else {
        const Feasibility f2 = strict_feasible(system_of(arr_, prefix));
        ++stats.lp_solves;
        stats.pivots += f2.pivots;
        if (f2.feasible) run(prefix, f2.witness, stop_depth, out);
      }
      prefix.pop_back();
    }
  }

  std::size_t total() const { return total_; }
  OracleStats stats;

 private:
  const Arrangement& arr_;
  std::size_t total_;
};

int cell_dimension(const Arrangement& arr, const std::vector<std::int8_t>& signs) {
  const LinearSystem sys = system_of(arr, signs);
  if (sys.equalities.empty()) return arr.dim;
  RationalMatrix m(static_cast<Eigen::Index>(sys.equalities.size()), arr.dim);
  for (std::size_t r = 0; r < sys.equalities.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = sys.equalities[r].transpose();
  return arr.dim - static_cast<int>(exact_rank(m));
}

}  // namespace

CellEnumeration enumerate_cone_cells(const Arrangement& arr, unsigned threads) {
  CellEnumeration out;
  out.counts.assign(static_cast<std::size_t>(arr.dim) + 1, 0);
  CellSearch head(arr);
  std::vector<std::pair<std::vector<std::int8_t>, RationalVector>> prefixes;
  head.run({}, RationalVector::Zero(arr.dim), arr.walls.size(), prefixes);
  out.stats += head.stats;

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(prefixes.size())));
  std::vector<std::vector<std::pair<std::vector<std::int8_t>, RationalVector>>> leaves(prefixes.size());
  std::vector<OracleStats> stats(threads);
  auto work = [&](unsigned t) {
    for (std::size_t p = t; p < prefixes.size(); p += threads) {
      CellSearch search(arr);
      search.run(prefixes[p].first, prefixes[p].second, search.total(), leaves[p]);
      stats[t] += search.stats;
    }
  };
  if (threads <= 1) {
    if (!prefixes.empty()) work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const OracleStats& s : stats) out.stats += s;

  const std::size_t walls = arr.walls.size();
  for (auto& group : leaves)
    for (auto& [signs, witness] : group) {
      ConeCell cell;
      cell.wall_signs.assign(signs.begin(), signs.begin() + static_cast<std::ptrdiff_t>(walls));
      cell.hyperplane_signs.assign(signs.begin() + static_cast<std::ptrdiff_t>(walls), signs.end());
      cell.witness = witness;
      cell.dimension = cell_dimension(arr, signs);
      ++out.counts[static_cast<std::size_t>(cell.dimension)];
      out.cells.push_back(std::move(cell));
    }
  return out;
}

Feasibility cell_feasible(int n, const SignCondition& condition) {
  const Arrangement arr = gl_arrangement(n);
  std::vector<std::int8_t> signs(condition.roots.begin(), condition.roots.end());
  signs.insert(signs.end(), condition.weights.begin(), condition.weights.end());
  return strict_feasible(system_of(arr, signs));
}

std::string search_space_cells(int n) {
  return "3^(n(n+1)/2) * 2^(n-1) = 3^" + std::to_string(weight_count(n)) + " * 2^" + std::to_string(std::max(n - 1, 0)) +
         " sign conditions";
}

std::string search_space_flats(int n) {
  return "2^(n(n+1)/2) = 2^" + std::to_string(weight_count(n)) + " hyperplane subsets";
}

CellEnumeration enumerate_cells(int n, const OracleLimits& limits) {
  if (n < 0) throw std::domain_error("enumerate_cells: n must be non-negative");
  if (n > limits.max_cells_n)
    throw OracleRefusal("cell enumeration refused for n = " + std::to_string(n) + " (cap " +
                        std::to_string(limits.max_cells_n) + "): search space " + search_space_cells(n));
  return enumerate_cone_cells(gl_arrangement(n), limits.threads);
}

SignCondition to_sign_condition(int n, const ConeCell& cell) {
  SignCondition c(n);
  c.roots = cell.wall_signs;
  c.weights = cell.hyperplane_signs;
  return c;
}

// ---------------------------------------------------------------------------

GeometricFlat cone_flat(const Arrangement& arr, const std::vector<int>& generators, OracleStats* stats) {
  RowSpace<Rational> span(arr.dim);
  LinearSystem base;
  base.dim = arr.dim;
  for (int g : generators) {
    const RationalVector& h = arr.hyperplanes[static_cast<std::size_t>(g)];
    if (span.insert(h)) base.equalities.push_back(h);
  }
  for (std::size_t w = 0; w < arr.walls.size(); ++w) {
    LinearSystem probe = base;
    for (std::size_t other = 0; other < arr.walls.size(); ++other)
      if (other != w) probe.nonstrict.push_back(arr.walls[other]);
    probe.strict.push_back(arr.walls[w]);
    const Feasibility f = strict_feasible(probe);
    if (stats) {
      ++stats->lp_solves;
      stats->pivots += f.pivots;
    }
    if (!f.feasible) span.insert(arr.walls[w]);
  }
  GeometricFlat flat;
  flat.generators = generators;
  flat.dimension = arr.dim - static_cast<int>(span.rank());
  for (std::size_t h = 0; h < arr.hyperplanes.size(); ++h)
    if (span.contains(arr.hyperplanes[h])) flat.vanishing |= std::uint64_t{1} << h;
  return flat;
}

FlatEnumeration enumerate_cone_flats(const Arrangement& arr) {
  if (arr.hyperplanes.size() > 64) throw OracleRefusal("flat enumeration supports at most 64 hyperplanes");
  FlatEnumeration out;
  out.counts.assign(static_cast<std::size_t>(arr.dim) + 1, 0);

  std::map<std::uint64_t, std::size_t> seen;          // vanishing mask -> index in out.flats
  std::map<std::uint64_t, std::uint64_t> by_span;     // linear-span mask -> vanishing mask
  auto span_mask = [&](const std::vector<int>& generators) {
    RowSpace<Rational> span(arr.dim);
    for (int g : generators) span.insert(arr.hyperplanes[static_cast<std::size_t>(g)]);
    std::uint64_t mask = 0;
    for (std::size_t h = 0; h < arr.hyperplanes.size(); ++h)
      if (span.contains(arr.hyperplanes[h])) mask |= std::uint64_t{1} << h;
    return mask;
  };

  std::deque<std::size_t> queue;
  auto visit = [&](const std::vector<int>& generators) {
    ++out.stats.nodes;
    const std::uint64_t linear = span_mask(generators);
    if (by_span.count(linear)) return;
    GeometricFlat flat = cone_flat(arr, generators, &out.stats);
    by_span[linear] = flat.vanishing;
    if (seen.count(flat.vanishing)) return;
    seen[flat.vanishing] = out.flats.size();
    queue.push_back(out.flats.size());
    out.flats.push_back(std::move(flat));
  };

  visit({});
  while (!queue.empty()) {
    const std::size_t index = queue.front();
    queue.pop_front();
    const std::uint64_t mask = out.flats[index].vanishing;
    const std::vector<int> generators = out.flats[index].generators;
    for (std::size_t h = 0; h < arr.hyperplanes.size(); ++h) {
      if (mask >> h & 1) continue;
      std::vector<int> extended = generators;
      extended.push_back(static_cast<int>(h));
      visit(extended);
    }
  }

  std::sort(out.flats.begin(), out.flats.end(), [](const GeometricFlat& x, const GeometricFlat& y) {
    return x.dimension != y.dimension ? x.dimension > y.dimension : x.vanishing < y.vanishing;
  });
  for (const GeometricFlat& f : out.flats) ++out.counts[static_cast<std::size_t>(f.dimension)];
  return out;
}

FlatEnumeration enumerate_flats_geometric(int n, const OracleLimits& limits) {
  if (n < 0) throw std::domain_error("enumerate_flats_geometric: n must be non-negative");
  if (n > limits.max_flats_n)
    throw OracleRefusal("flat enumeration refused for n = " + std::to_string(n) + " (cap " +
                        std::to_string(limits.max_flats_n) + "): search space " + search_space_flats(n));
  return enumerate_cone_flats(gl_arrangement(n));
}

std::vector<IntVector> rays_geometric(int n, const OracleLimits& limits) {
  const CellEnumeration cells = enumerate_cells(n, limits);
  std::vector<IntVector> rays;
  for (const ConeCell& c : cells.cells)
    if (c.dimension == 1) rays.push_back(primitive_direction(c.witness));
  std::sort(rays.begin(), rays.end(), [](const IntVector& x, const IntVector& y) {
    return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(), y.data() + y.size());
  });
  return rays;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> geometric_adjacency(int n, const OracleLimits& limits) {
  const CellEnumeration cells = enumerate_cells(n, limits);
  std::vector<const ConeCell*> chambers, facets;
  for (const ConeCell& c : cells.cells) {
    if (c.dimension == n) chambers.push_back(&c);
    if (c.dimension == n - 1) facets.push_back(&c);
  }
  auto face_of = [](const ConeCell& f, const ConeCell& c) {
    for (std::size_t i = 0; i < f.wall_signs.size(); ++i)
      if (f.wall_signs[i] != 0 && f.wall_signs[i] != c.wall_signs[i]) return false;
    for (std::size_t i = 0; i < f.hyperplane_signs.size(); ++i)
      if (f.hyperplane_signs[i] != 0 && f.hyperplane_signs[i] != c.hyperplane_signs[i]) return false;
    return true;
  };
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (const ConeCell* f : facets) {
    std::vector<std::uint64_t> owners;
    for (const ConeCell* c : chambers)
      if (face_of(*f, *c)) owners.push_back(classify_point(n, c->witness).chamber.value().code());
    if (owners.size() == 2) pairs.emplace_back(std::min(owners[0], owners[1]), std::max(owners[0], owners[1]));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace weylarr
