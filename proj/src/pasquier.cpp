#include "horo/pasquier.hpp"

#include <utility>

#include "horo/errors.hpp"
#include "horo/parabolic.hpp"

namespace horo {

namespace {

struct Derived {
  std::int64_t c1_y, c1_z, codim_y, codim_z, dim_x, dim_y, dim_z;
};

Derived derive(const LieType& t, int node_y, int node_z) {
  Derived d{};
  d.dim_y = dim_gp(t, node_y);
  d.dim_z = dim_gp(t, node_z);
  // The exceptional divisor is G/(P_Y cap P_Z).
  d.dim_x = dim_gp_pair(t, node_y, node_z) + 1;
  d.codim_y = d.dim_x - d.dim_y;
  d.codim_z = d.dim_x - d.dim_z;
  d.c1_y = index_gp(t, node_y);
  d.c1_z = index_gp(t, node_z);
  return d;
}

bool matches(const Derived& d, const ReferenceRow& row) {
  return d.c1_y == row.c1_y && d.c1_z == row.c1_z && d.codim_y == row.codim_y &&
         d.codim_z == row.codim_z;
}

int agreement(const Derived& d, const ReferenceRow& row) {
  return (d.c1_y == row.c1_y) + (d.c1_z == row.c1_z) + (d.codim_y == row.codim_y) +
         (d.codim_z == row.codim_z);
}

// The weight pair (omega_Y, omega_Z) as listed for each family.
std::pair<int, int> listed_nodes(const HorosphericalFamily& f) {
  switch (f.kind()) {
    case FamilyKind::X1: return {f.n() - 1, f.n()};
    case FamilyKind::X2: return {1, 3};
    case FamilyKind::X3: return {f.m(), f.m() - 1};
    case FamilyKind::X4: return {2, 3};
    case FamilyKind::X5: return {1, 2};
  }
  return {0, 0};
}

}  // namespace

HorosphericalFamily HorosphericalFamily::X1(int n) {
  if (n < 3) throw DomainError("X1(n) requires n >= 3, got n=" + std::to_string(n));
  if (n > rank_cap())
    throw CapExceeded("X1(" + std::to_string(n) + ") exceeds rank cap " +
                      std::to_string(rank_cap()));
  return {FamilyKind::X1, n, 0};
}

HorosphericalFamily HorosphericalFamily::X2() { return {FamilyKind::X2, 0, 0}; }

HorosphericalFamily HorosphericalFamily::X3(int n, int m) {
  if (n < 2 || m < 2 || m > n)
    throw DomainError("X3(n,m) requires n >= 2 and 2 <= m <= n, got (" + std::to_string(n) +
                      "," + std::to_string(m) + ")");
  if (n > rank_cap())
    throw CapExceeded("X3(" + std::to_string(n) + "," + std::to_string(m) +
                      ") exceeds rank cap " + std::to_string(rank_cap()));
  return {FamilyKind::X3, n, m};
}

HorosphericalFamily HorosphericalFamily::X4() { return {FamilyKind::X4, 0, 0}; }

HorosphericalFamily HorosphericalFamily::X5() { return {FamilyKind::X5, 0, 0}; }

LieType HorosphericalFamily::lie_type() const {
  switch (kind_) {
    case FamilyKind::X1: return {Series::B, n_};
    case FamilyKind::X2: return {Series::B, 3};
    case FamilyKind::X3: return {Series::C, n_};
    case FamilyKind::X4: return {Series::F, 4};
    case FamilyKind::X5: return {Series::G, 2};
  }
  throw DomainError("unknown family");
}

std::string HorosphericalFamily::descriptor() const {
  switch (kind_) {
    case FamilyKind::X1: return "X1(" + std::to_string(n_) + ")";
    case FamilyKind::X2: return "X2";
    case FamilyKind::X3: return "X3(" + std::to_string(n_) + "," + std::to_string(m_) + ")";
    case FamilyKind::X4: return "X4";
    case FamilyKind::X5: return "X5";
  }
  return "?";
}

ReferenceRow reference_row(const HorosphericalFamily& f) {
  const std::int64_t n = f.n();
  const std::int64_t m = f.m();
  switch (f.kind()) {
    case FamilyKind::X1: return {n + 2, n + 1, 2 * n, 2, n};
    case FamilyKind::X2: return {7, 5, 6, 4, 3};
    case FamilyKind::X3: return {2 * n + 2 - m, 2 * n + 1 - m, 2 * n + 2 - m, m, 2 * (n + 1 - m)};
    case FamilyKind::X4: return {6, 5, 7, 3, 3};
    case FamilyKind::X5: return {4, 3, 5, 2, 2};
  }
  return {};
}

NodeBinding node_binding(const HorosphericalFamily& f) {
  const LieType t = f.lie_type();
  const auto [a, b] = listed_nodes(f);
  const ReferenceRow row = reference_row(f);

  const bool direct = matches(derive(t, a, b), row);
  const bool swapped = matches(derive(t, b, a), row);
  if (direct == swapped) {
    throw ConsistencyError(f.descriptor() + ": node binding " +
                           (direct ? std::string("is ambiguous") : std::string("not found")) +
                           " for nodes (" + std::to_string(a) + "," + std::to_string(b) +
                           ") of " + t.name());
  }
  return direct ? NodeBinding{t, a, b} : NodeBinding{t, b, a};
}

InvariantRecord invariants(const HorosphericalFamily& f) {
  const NodeBinding binding = node_binding(f);
  const Derived d = derive(binding.lie_type, binding.node_y, binding.node_z);
  InvariantRecord r;
  r.c1_x = reference_row(f).c1_x;
  r.c1_y = d.c1_y;
  r.c1_z = d.c1_z;
  r.codim_y = d.codim_y;
  r.codim_z = d.codim_z;
  r.dim_x = d.dim_x;
  r.dim_y = d.dim_y;
  r.dim_z = d.dim_z;
  if (r.codim_y < 2 || r.codim_z < 2)
    throw ConsistencyError(f.descriptor() + ": orbit codimension below 2");
  return r;
}

CheckReport cross_check_reference(const HorosphericalFamily& f) {
  return cross_check_reference(f, reference_row(f));
}

CheckReport cross_check_reference(const HorosphericalFamily& f, const ReferenceRow& reference) {
  const auto [a, b] = listed_nodes(f);
  const LieType t = f.lie_type();
  // Report against the orientation agreeing on more columns so that a
  // tampered reference still yields a column-by-column report.
  const Derived direct = derive(t, a, b);
  const Derived swapped = derive(t, b, a);
  const Derived& d = agreement(swapped, reference) > agreement(direct, reference) ? swapped : direct;

  CheckReport report;
  report.subject = f.descriptor();
  report.add("c1_Y", std::to_string(d.c1_y), std::to_string(reference.c1_y));
  report.add("c1_Z", std::to_string(d.c1_z), std::to_string(reference.c1_z));
  report.add("codim_Y", std::to_string(d.codim_y), std::to_string(reference.codim_y));
  report.add("codim_Z", std::to_string(d.codim_z), std::to_string(reference.codim_z));
  report.add("dim_X", std::to_string(d.dim_y + reference.codim_y),
             std::to_string(d.dim_z + reference.codim_z));
  return report;
}

}  // namespace horo
