#pragma once

// Independent geometric enumeration of the faces and flats cut out of a
// polyhedral cone by a set of hyperplanes, using exact rational LPs only.
//
// An arrangement here is a cone { x : w(x) >= 0 for every wall w } together
// with hyperplanes h(x) = 0. Cells are the non-empty sets with a fixed sign
// (0 or + on walls, -, 0 or + on hyperplanes); flats are the non-empty
// intersections of hyperplanes with the cone.

#include "weylarr/scalar.hpp"
#include "weylarr/sign_condition.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylarr {

struct OracleStats {
  long lp_solves = 0;
  long pivots = 0;
  long nodes = 0;

  OracleStats& operator+=(const OracleStats& other) {
    lp_solves += other.lp_solves;
    pivots += other.pivots;
    nodes += other.nodes;
    return *this;
  }
};

struct OracleLimits {
  int max_cells_n = 4;
  int max_flats_n = 6;
  unsigned threads = 1;
};

/// Thrown when a request exceeds a configured cap.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// { x : e(x) = 0, s(x) > 0, u(x) >= 0 } in Q^dim.
struct LinearSystem {
  int dim = 0;
  std::vector<RationalVector> equalities;
  std::vector<RationalVector> strict;
  std::vector<RationalVector> nonstrict;
};

struct Feasibility {
  bool feasible = false;
  RationalVector witness;  // satisfies the system exactly when feasible
  long pivots = 0;
};

/// Maximizes a common slack e on the strict rows inside the box |x_i| <= 1;
/// the system is feasible iff the optimum is positive.
Feasibility strict_feasible(const LinearSystem& system);

/// Decides the gl_n sign condition over the weights x_i + x_j and the
/// consecutive roots x_i - x_{i+1}.
Feasibility cell_feasible(int n, const SignCondition& condition);

struct Arrangement {
  std::string name;
  int dim = 0;
  std::vector<RationalVector> walls;
  std::vector<RationalVector> hyperplanes;
};

/// Walls x_i - x_{i+1}; hyperplanes x_i + x_j in weight_slot order.
Arrangement gl_arrangement(int n);

struct ConeCell {
  std::vector<std::int8_t> wall_signs;
  std::vector<std::int8_t> hyperplane_signs;
  RationalVector witness;
  int dimension = 0;
};

struct CellEnumeration {
  std::vector<ConeCell> cells;          // depth-first order of sign vectors
  std::vector<std::uint64_t> counts;    // by dimension 0..dim
  OracleStats stats;
};

/// Depth-first search over sign vectors, pruning infeasible prefixes.
CellEnumeration enumerate_cone_cells(const Arrangement& arrangement, unsigned threads = 1);

/// The gl_n cells; refuses n above limits.max_cells_n.
CellEnumeration enumerate_cells(int n, const OracleLimits& limits = {});

SignCondition to_sign_condition(int n, const ConeCell& cell);

struct GeometricFlat {
  std::uint64_t vanishing = 0;  // bit h set iff hyperplane h vanishes on the flat
  std::vector<int> generators;  // hyperplanes whose intersection with the cone gives it
  int dimension = 0;
};

struct FlatEnumeration {
  std::vector<GeometricFlat> flats;  // sorted by decreasing dimension, then mask
  std::vector<std::uint64_t> counts;
  OracleStats stats;
};

/// Breadth-first search over hyperplane sets closed under "vanishes on the
/// cone"; every subset of hyperplanes yields one of the flats visited.
FlatEnumeration enumerate_cone_flats(const Arrangement& arrangement);

/// Cone cut out by the listed hyperplanes, identified by the hyperplanes that
/// vanish on it (implicit equalities of the walls included).
GeometricFlat cone_flat(const Arrangement& arrangement, const std::vector<int>& generators,
                        OracleStats* stats = nullptr);

/// The gl_n flats; refuses n above limits.max_flats_n.
FlatEnumeration enumerate_flats_geometric(int n, const OracleLimits& limits = {});

/// Primitive integer direction of every one-dimensional gl_n cell, sorted.
std::vector<IntVector> rays_geometric(int n, const OracleLimits& limits = {});

/// Pairs of chamber codes whose cells share a codimension-one cell, sorted.
std::vector<std::pair<std::uint64_t, std::uint64_t>> geometric_adjacency(int n, const OracleLimits& limits = {});

std::string search_space_cells(int n);
std::string search_space_flats(int n);

}  // namespace weylarr
