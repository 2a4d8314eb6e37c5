#pragma once

// Root and weight data for the representations whose nonzero weights are all
// proportional to roots. For those the weight arrangement restricted to the
// Weyl chamber is the chamber's own wall arrangement, so its face counts are
// binomial. gl_n on V + wedge^2 V is included as the contrasting case.

#include "weylarr/oracle.hpp"
#include "weylarr/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylarr {

enum class WeightSystemTag {
  so_odd_vector,       // so_{2n+1} on V
  sp_vector,           // sp_n on V
  sp_wedge2_0,         // sp_n on the traceless part of wedge^2 V
  sp_vector_wedge2_0,  // sp_n on V + wedge^2_0 V
  f4_26,               // f_4 on its 26-dimensional module
  g2_7,                // g_2 on its 7-dimensional module
  gl_vector_wedge2,    // gl_n on V + wedge^2 V
};

struct WeightSystem {
  WeightSystemTag tag{};
  std::string name;
  int rank = 0;
  std::vector<RationalVector> roots;    // all roots
  std::vector<RationalVector> walls;    // linear forms cutting out the closed chamber
  std::vector<RationalVector> weights;  // with multiplicity, zeros included
};

/// Throws std::domain_error for ranks where the tag makes no sense (n < 1,
/// or n < 2 for the wedge modules). The rank is ignored for f_4 and g_2.
WeightSystem make_weight_system(WeightSystemTag tag, int n = 0);

/// The six systems whose weights are proportional to roots.
std::vector<WeightSystemTag> proportional_tags();
std::string to_string(WeightSystemTag tag);
std::optional<WeightSystemTag> parse_weight_system_tag(const std::string& text);

struct ProportionalityEntry {
  std::size_t weight = 0;              // index into WeightSystem::weights
  std::optional<std::size_t> root;     // nullopt for the zero weight
  Rational multiplier;                 // weight = multiplier * root
};

struct ProportionalityCertificate {
  bool proportional = false;
  std::vector<ProportionalityEntry> entries;  // one per weight while the check succeeds
  std::optional<std::size_t> counterexample;  // first nonzero weight with no proportional root
};

ProportionalityCertificate check_weights_proportional_to_roots(const WeightSystem& system);

/// Chamber walls plus one hyperplane per nonzero weight up to scalar.
Arrangement weight_arrangement(const WeightSystem& system);

/// Face counts of the weight arrangement on the closed chamber, by dimension.
std::vector<std::uint64_t> geometric_face_counts(const WeightSystem& system, unsigned threads = 1);

/// C(rank, k) for k = 0..rank.
std::vector<std::uint64_t> simplex_counts(int rank);

}  // namespace weylarr
