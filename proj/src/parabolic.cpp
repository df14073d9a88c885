#include "horo/parabolic.hpp"

#include "horo/errors.hpp"

namespace horo {

namespace {

void check_node(const LieType& t, int k) {
  if (k < 1 || k > t.rank())
    throw DomainError("node " + std::to_string(k) + " out of range for " + t.name());
}

}  // namespace

HomogeneousSpace::HomogeneousSpace(LieType t, int k) : type(t), node(k) { check_node(t, k); }

std::string HomogeneousSpace::descriptor() const {
  return type.name() + "/P" + std::to_string(node);
}

std::int64_t dim_gp(const LieType& t, int k) {
  check_node(t, k);
  return root_system(t)->node_dim[static_cast<std::size_t>(k - 1)];
}

std::int64_t index_gp(const LieType& t, int k) {
  check_node(t, k);
  const std::int64_t sum = root_system(t)->node_index[static_cast<std::size_t>(k - 1)];
  if (sum <= 0)
    throw ConsistencyError("non-positive index " + std::to_string(sum) + " for " + t.name() +
                           "/P" + std::to_string(k));
  return sum;
}

std::int64_t dim_gp_pair(const LieType& t, int j, int k) {
  check_node(t, j);
  check_node(t, k);
  if (j == k) throw DomainError("dim_gp_pair needs two distinct nodes; use dim_gp");
  std::int64_t count = 0;
  for (const auto& beta : positive_roots(t))
    if (beta.coeff(j) > 0 || beta.coeff(k) > 0) ++count;
  return count;
}

}  // namespace horo
