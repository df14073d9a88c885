#pragma once

// Dimension and Fano index of G/P for maximal parabolics, computed from the
// positive roots:
//
//   dim G/P_k           = #{beta in Phi+ : beta_k > 0}
//   index G/P_k         = sum over those beta of <beta, alpha_k^vee>
//   dim G/(P_j cap P_k) = #{beta in Phi+ : beta_j > 0 or beta_k > 0}

#include <cstdint>

#include "horo/root_system.hpp"

namespace horo {

struct HomogeneousSpace {
  LieType type;
  int node;  // 1-based

  /// Validates node against the rank.
  HomogeneousSpace(LieType t, int k);

  /// "B5/P3"
  std::string descriptor() const;

  friend auto operator<=>(const HomogeneousSpace&, const HomogeneousSpace&) = default;
};

std::int64_t dim_gp(const LieType& t, int k);
std::int64_t index_gp(const LieType& t, int k);
/// Requires j != k; use dim_gp for a single node.
std::int64_t dim_gp_pair(const LieType& t, int j, int k);

}  // namespace horo
