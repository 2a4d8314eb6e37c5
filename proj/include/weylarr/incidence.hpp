#pragma once

// Faces as chains and flats as ensembles of ray indices, the ray sets of the
// weight hyperplanes, and the chamber adjacency graph.

#include "weylarr/chamber.hpp"
#include "weylarr/poset.hpp"

#include <string>
#include <utility>
#include <vector>

namespace weylarr {

/// The weight lambda_{i,j} = x_i + x_j, 1 <= i <= j <= n.
struct WeightIndex {
  int i = 1;
  int j = 1;

  /// phi(i,j) = (i-1, n-j).
  PosetPoint phi(int n) const { return {i - 1, n - j}; }

  friend bool operator==(WeightIndex, WeightIndex) = default;
  friend auto operator<=>(WeightIndex, WeightIndex) = default;
};

/// Throws std::domain_error unless 1 <= i <= j <= n.
void check_weight_index(int n, WeightIndex w);
std::vector<WeightIndex> all_weights(int n);
std::string to_string(WeightIndex w);

/// Value of lambda_w on the ray v(P), evaluated directly on (1^a, 0^.., (-1)^b).
int weight_on_ray(int n, WeightIndex w, PosetPoint p);

/// ((0, phi] u [phi + (1,1), inf]) cap E*_n: the rays lying on lambda_w = 0.
Ensemble hyperplane_rays(int n, WeightIndex w);

/// Intersection of hyperplane ray sets; all of E*_n for an empty list.
std::vector<PosetPoint> rays_of(int n, const std::vector<WeightIndex>& region);

class Face {
 public:
  int n() const { return n_; }
  const Chain& chain() const { return chain_; }
  int dimension() const { return static_cast<int>(chain_.size()); }

  friend bool operator==(const Face&, const Face&) = default;

 private:
  Face(int n, Chain chain) : n_(n), chain_(std::move(chain)) {}
  friend Face face_from_chain(int n, const Chain& c);
  int n_;
  Chain chain_;
};

/// Throws std::domain_error unless every element lies in E*_n.
Face face_from_chain(int n, const Chain& c);

/// The rays of E*_n whose vectors lie in the closed face, found by solving for
/// coordinates in the basis of a maximal chain through the face.
Chain rays_of_face(const Face& face);

/// A maximal chain of E*_n containing c.
Chain extend_to_maximal(int n, const Chain& c);

class Flat {
 public:
  Flat(int n, Ensemble ensemble, std::vector<WeightIndex> generators)
      : n_(n), ensemble_(std::move(ensemble)), generators_(std::move(generators)) {}

  int n() const { return n_; }
  const Ensemble& ensemble() const { return ensemble_; }
  /// Empty for the whole Weyl chamber.
  const std::vector<WeightIndex>& generators() const { return generators_; }
  int dimension() const { return ensemble_.rank(); }

 private:
  int n_;
  Ensemble ensemble_;
  std::vector<WeightIndex> generators_;
};

/// The flat with ray set ([0,B] u [A,inf]) cap E*_n. B must be finite with
/// B + (1,1) <= A; when A is infinite, level(B) < n. Throws std::domain_error
/// otherwise. Coinciding generators are merged.
Flat flat_from_two_point_data(int n, const ExtendedPoint& b, const ExtendedPoint& a);

/// Intersects the two-point flats (0,B_i] u [A_{i+1},inf) of the ensemble.
Flat flat_from_ensemble(const Ensemble& ensemble);

struct ChamberGraph {
  int n = 0;
  std::vector<Chamber> vertices;                           // increasing code order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (u, v) with u < v, sorted
};

/// Chambers are adjacent iff their maximal chains share n-1 elements.
ChamberGraph chamber_adjacency_graph(int n, unsigned threads = 1);

/// Undirected DOT graph, nodes labelled by characteristic strings.
std::string to_dot(const ChamberGraph& graph);

}  // namespace weylarr
