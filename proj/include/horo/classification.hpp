#pragma once

// 2-Fano verdicts for every class of variety the engine knows about:
// rational homogeneous G/P_k, the two-orbit horospherical families, general
// linear sections of G(k,n) and OG+(k,2k), and weighted complete
// intersections.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "horo/parabolic.hpp"
#include "horo/pasquier.hpp"
#include "horo/wps_ci.hpp"

namespace horo {

enum class SectionKind { Grassmannian, OrthogonalGrassmannian };

/// General codimension-c linear section of G(k,n) (Pluecker) or OG+(k,2k)
/// (half-spinor).
class LinearSection {
 public:
  /// G(k,n) with 2 <= k <= n/2, 0 <= c < dim.
  static LinearSection grassmannian(int k, int n, int codim);
  /// OG+(k,2k) with k >= 4, 0 <= c < dim.
  static LinearSection orthogonal(int k, int codim);

  SectionKind kind() const { return kind_; }
  int k() const { return k_; }
  int n() const { return n_; }
  int codim() const { return codim_; }
  /// Dimension of the ambient homogeneous space.
  int ambient_dim() const;

  /// "G(3,6)+c1", "OG(5,10)+c3"
  std::string descriptor() const;

  friend auto operator<=>(const LinearSection&, const LinearSection&) = default;

 private:
  LinearSection(SectionKind kind, int k, int n, int codim)
      : kind_(kind), k_(k), n_(n), codim_(codim) {}

  SectionKind kind_;
  int k_;
  int n_;
  int codim_;
};

using ClassifiedVariety =
    std::variant<HomogeneousSpace, HorosphericalFamily, LinearSection, CompleteIntersection>;

std::string descriptor(const ClassifiedVariety& v);
std::string kind_name(const ClassifiedVariety& v);

struct Verdict {
  bool two_fano = false;
  /// Rule ids from rule_registry(), joined by " + ".
  std::string rule;
  std::optional<bool> tangent_stable;
  std::optional<bool> k_polystable;
};

/// Fixed registry of classification rules: id -> statement.
const std::map<std::string, std::string>& rule_registry();

/// Splits a Verdict::rule into its ids.
std::vector<std::string> rule_ids(const std::string& rule);

Verdict homogeneous_two_fano(const LieType& t, int k);

/// Decides by the closed-form list and by the ch2 derivation; throws
/// ConsistencyError if they disagree.
Verdict horospherical_two_fano(const HorosphericalFamily& f);

Verdict linear_section_two_fano(const LinearSection& s);

Verdict wci_two_fano(const CompleteIntersection& x);

/// Closed-form membership: X2, or X3(3k, 2k+1).
bool in_two_orbit_two_fano_list(const HorosphericalFamily& f);

struct StabilityAnnotations {
  bool tangent_stable = false;
  bool k_polystable = false;
};

StabilityAnnotations stability_annotations(const HorosphericalFamily& f);

Verdict classify(const ClassifiedVariety& v);

struct EnumerationBounds {
  bool homogeneous = false;
  bool horospherical = false;
  bool linear_sections = false;
  bool hypersurfaces = false;
  /// Restricts the homogeneous sweep to one series.
  std::optional<Series> series;
  /// Homogeneous: rank of G.
  int max_rank = 0;
  /// Horospherical: rank of G. Linear sections: n of G(k,n), 2k of OG(k,2k).
  /// Hypersurfaces: dimension of the ambient P^n.
  int max_n = 0;
  /// Linear sections: largest codimension.
  int max_codim = 0;
  /// Hypersurfaces: largest degree.
  int max_degree = 0;
  /// Every bound above must be <= cap.
  int cap = 64;
};

using Classified = std::pair<ClassifiedVariety, Verdict>;

/// Canonical order: homogeneous by (series, rank, node); horospherical as
/// X1(n) by n, X2, X3(n,m) by (n,m), X4, X5, each parameterless family kept
/// when the rank of its G is <= max_n; G(k,n) sections by (n,k,c) then
/// OG(k,2k) sections by (k,c); hypersurfaces by (n,d). Throws CapExceeded
/// when a bound exceeds the cap.
std::vector<Classified> enumerate(const EnumerationBounds& bounds);

}  // namespace horo
