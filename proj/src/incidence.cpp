#include "weylarr/incidence.hpp"

#include "weylarr/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace weylarr {

void check_weight_index(int n, WeightIndex w) {
  if (w.i < 1 || w.i > w.j || w.j > n)
    throw std::domain_error("weight index " + to_string(w) + " outside 1 <= i <= j <= " + std::to_string(n));
}

std::vector<WeightIndex> all_weights(int n) {
  std::vector<WeightIndex> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back({i, j});
  return out;
}

std::string to_string(WeightIndex w) {
  return "(" + std::to_string(w.i) + "," + std::to_string(w.j) + ")";
}

int weight_on_ray(int n, WeightIndex w, PosetPoint p) {
  auto coordinate = [&](int i) { return i <= p.a ? 1 : (i > n - p.b ? -1 : 0); };
  return coordinate(w.i) + coordinate(w.j);
}

Ensemble hyperplane_rays(int n, WeightIndex w) {
  check_weight_index(n, w);
  const PosetPoint phi = w.phi(n);
  const Interval below(kOrigin, phi);
  const Interval above(phi + kDiagonalStep, ExtendedPoint::infinity());
  std::vector<PosetPoint> points;
  for (const PosetPoint& p : poset_points(n, Ambient::without_origin))
    if (below.contains(p) || above.contains(p)) points.push_back(p);
  auto ensemble = Ensemble::from_points(n, std::move(points));
  if (!ensemble) throw std::logic_error("hyperplane_rays: ray set is not an ensemble");
  return *ensemble;
}

std::vector<PosetPoint> rays_of(int n, const std::vector<WeightIndex>& region) {
  std::vector<PosetPoint> out = poset_points(n, Ambient::without_origin);
  for (const WeightIndex& w : region) {
    const Ensemble rays = hyperplane_rays(n, w);
    std::erase_if(out, [&](PosetPoint p) { return !rays.contains(p); });
  }
  return out;
}

// ---------------------------------------------------------------------------

Face face_from_chain(int n, const Chain& c) {
  for (const PosetPoint& p : c.elements())
    if (!in_ambient(p, n, Ambient::without_origin))
      throw std::domain_error("face_from_chain: " + to_string(p) + " is not a point of E*_" + std::to_string(n));
  return Face(n, c);
}

Chain extend_to_maximal(int n, const Chain& c) {
  std::vector<PosetPoint> points;
  PosetPoint current = kOrigin;
  auto walk_to = [&](PosetPoint target) {
    while (current.a < target.a) points.push_back(current = {current.a + 1, current.b});
    while (current.b < target.b) points.push_back(current = {current.a, current.b + 1});
  };
  for (const PosetPoint& p : c.elements()) walk_to(p);
  walk_to({current.a + (n - current.level()), current.b});
  return Chain(std::move(points));
}

Chain rays_of_face(const Face& face) {
  const int n = face.n();
  const Chain basis = extend_to_maximal(n, face.chain());
  Matrix<Rational> columns(n, n);
  std::vector<bool> in_face(static_cast<std::size_t>(n), false);
  for (int l = 0; l < n; ++l) {
    const PosetPoint p = basis.elements()[static_cast<std::size_t>(l)];
    columns.col(l) = to_rational(ray_from_index(n, p).coordinates());
    const auto& chain = face.chain().elements();
    in_face[static_cast<std::size_t>(l)] = std::find(chain.begin(), chain.end(), p) != chain.end();
  }
  std::vector<PosetPoint> members;
  for (const PosetPoint& p : poset_points(n, Ambient::without_origin)) {
    auto coefficients = solve_exact<Rational>(columns, to_rational(ray_from_index(n, p).coordinates()));
    if (!coefficients) throw std::logic_error("rays_of_face: maximal chain is not a basis");
    bool inside = true;
    for (int l = 0; l < n && inside; ++l) {
      const Rational& t = (*coefficients)(l);
      inside = t >= 0 && (t == 0 || in_face[static_cast<std::size_t>(l)]);
    }
    if (inside) members.push_back(p);
  }
  return Chain(std::move(members));
}

// ---------------------------------------------------------------------------

Flat flat_from_two_point_data(int n, const ExtendedPoint& b, const ExtendedPoint& a) {
  if (b.is_infinite()) throw std::domain_error("flat_from_two_point_data: B must be finite");
  const PosetPoint bp = b.point();
  if (bp.a < 0 || bp.b < 0 || bp.level() > n)
    throw std::domain_error("flat_from_two_point_data: B = " + to_string(bp) + " is not in E_n");
  if (!leq(bp + kDiagonalStep, a))
    throw std::domain_error("flat_from_two_point_data: B + (1,1) <= A fails for B = " + to_string(bp) +
                            ", A = " + to_string(a));
  std::vector<WeightIndex> generators;
  std::vector<Interval> target{Interval(kOrigin, bp)};
  const int x = bp.a, y = bp.b;
  if (a.is_infinite()) {
    if (bp.level() >= n)
      throw std::domain_error("flat_from_two_point_data: level(B) must be below n when A is infinite");
    generators = {{x + 1, x + 1}, {n - y, n - y}};
  } else {
    const PosetPoint ap = a.point();
    if (ap.level() > n)
      throw std::domain_error("flat_from_two_point_data: A = " + to_string(ap) + " is not in E_n");
    generators = {{x + 1, n - ap.b + 1}, {ap.a, n - y}};
    target.emplace_back(ap, ExtendedPoint::infinity());
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  std::vector<PosetPoint> expected;
  for (const PosetPoint& p : poset_points(n, Ambient::without_origin))
    if (std::any_of(target.begin(), target.end(), [&](const Interval& iv) { return iv.contains(p); }))
      expected.push_back(p);
  if (rays_of(n, generators) != expected)
    throw std::logic_error("flat_from_two_point_data: generators do not cut out the target ray set");
  auto ensemble = Ensemble::from_points(n, expected);
  if (!ensemble) throw std::logic_error("flat_from_two_point_data: target is not an ensemble");
  return Flat(n, *ensemble, std::move(generators));
}

Flat flat_from_ensemble(const Ensemble& ensemble) {
  const int n = ensemble.n();
  const auto& intervals = ensemble.intervals();
  std::vector<WeightIndex> generators;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const ExtendedPoint& b = intervals[i].hi();
    if (b.is_infinite()) continue;
    const ExtendedPoint a = i + 1 < intervals.size() ? ExtendedPoint(intervals[i + 1].lo())
                                                     : ExtendedPoint::infinity();
    const Flat piece = flat_from_two_point_data(n, b, a);
    generators.insert(generators.end(), piece.generators().begin(), piece.generators().end());
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (rays_of(n, generators) != ensemble.realize())
    throw std::logic_error("flat_from_ensemble: generators do not reproduce the ensemble");
  return Flat(n, ensemble, std::move(generators));
}

// ---------------------------------------------------------------------------

ChamberGraph chamber_adjacency_graph(int n, unsigned threads) {
  if (n < 1) throw std::domain_error("chamber_adjacency_graph: n must be positive");
  ChamberGraph graph;
  graph.n = n;
  graph.vertices = all_chambers(n);
  const std::size_t count = graph.vertices.size();
  std::vector<std::vector<PosetPoint>> chains;
  chains.reserve(count);
  for (const Chamber& c : graph.vertices) chains.push_back(chain_of(c).elements());

  // Chains are sorted by level with one point per level, so shared elements
  // are exactly the levels where they agree.
  auto shared = [&](std::size_t u, std::size_t v) {
    int same = 0;
    for (int l = 0; l < n; ++l) same += chains[u][static_cast<std::size_t>(l)] == chains[v][static_cast<std::size_t>(l)];
    return same;
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> parts(threads);
  auto work = [&](unsigned t) {
    for (std::size_t u = t; u < count; u += threads)
      for (std::size_t v = u + 1; v < count; ++v)
        if (shared(u, v) == n - 1) parts[t].emplace_back(u, v);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& part : parts) graph.edges.insert(graph.edges.end(), part.begin(), part.end());
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

std::string to_dot(const ChamberGraph& graph) {
  std::string out = "graph chambers_gl" + std::to_string(graph.n) + " {\n";
  for (const Chamber& c : graph.vertices) out += "  \"" + c.label() + "\";\n";
  for (const auto& [u, v] : graph.edges)
    out += "  \"" + graph.vertices[u].label() + "\" -- \"" + graph.vertices[v].label() + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace weylarr
