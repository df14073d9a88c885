#pragma once

// The five two-orbit families of smooth horospherical varieties of Picard
// number one: X1(n), X2, X3(n,m), X4, X5.

#include <cstdint>
#include <string>

#include "horo/checks.hpp"
#include "horo/root_system.hpp"

namespace horo {

enum class FamilyKind { X1 = 1, X2 = 2, X3 = 3, X4 = 4, X5 = 5 };

class HorosphericalFamily {
 public:
  /// n >= 3.
  static HorosphericalFamily X1(int n);
  static HorosphericalFamily X2();
  /// n >= 2, 2 <= m <= n.
  static HorosphericalFamily X3(int n, int m);
  static HorosphericalFamily X4();
  static HorosphericalFamily X5();

  FamilyKind kind() const { return kind_; }
  int n() const { return n_; }
  int m() const { return m_; }

  /// Type of G: B_n, B_3, C_n, F_4, G_2.
  LieType lie_type() const;

  /// "X1(5)", "X2", "X3(6,5)", ...
  std::string descriptor() const;

  friend auto operator<=>(const HorosphericalFamily&, const HorosphericalFamily&) = default;

 private:
  HorosphericalFamily(FamilyKind kind, int n, int m) : kind_(kind), n_(n), m_(m) {}

  FamilyKind kind_;
  int n_;  // 0 when unused
  int m_;  // 0 when unused
};

struct NodeBinding {
  LieType lie_type;
  int node_y;
  int node_z;
};

struct InvariantRecord {
  std::int64_t c1_x = 0;
  std::int64_t c1_y = 0;
  std::int64_t c1_z = 0;
  std::int64_t codim_y = 0;
  std::int64_t codim_z = 0;
  std::int64_t dim_x = 0;
  std::int64_t dim_y = 0;
  std::int64_t dim_z = 0;

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

/// Reference row: c1(X), c1(Y), c1(Z), codim Y, codim Z.
struct ReferenceRow {
  std::int64_t c1_x = 0;
  std::int64_t c1_y = 0;
  std::int64_t c1_z = 0;
  std::int64_t codim_y = 0;
  std::int64_t codim_z = 0;

  friend bool operator==(const ReferenceRow&, const ReferenceRow&) = default;
};

/// Closed forms of the invariants table evaluated at the family's parameters.
ReferenceRow reference_row(const HorosphericalFamily& f);

/// The Bourbaki (node_Y, node_Z) pair. Tries the listed weight pair in both
/// orientations and keeps the one reproducing the reference c1 and codim
/// columns; throws ConsistencyError unless exactly one orientation matches.
NodeBinding node_binding(const HorosphericalFamily& f);

/// All columns from root data, except c1_x which is the reference value.
InvariantRecord invariants(const HorosphericalFamily& f);

/// Compares the root-derived c1_Y, c1_Z, codim_Y, codim_Z (and the dimension
/// identity) against the reference row.
CheckReport cross_check_reference(const HorosphericalFamily& f);
CheckReport cross_check_reference(const HorosphericalFamily& f, const ReferenceRow& reference);

}  // namespace horo
