#pragma once

// Complete intersections in weighted projective space P(a_0, ..., a_n).
//
// For a smooth complete intersection X of hypersurfaces of degrees
// d_1, ..., d_c the Chern character is
//
//   ch(X) = (n - c) + sum_{k=1}^{n} (sum_i a_i^k - sum_j d_j^k) / k! * H^k
//
// Smoothness is assumed, not checked.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "horo/rational.hpp"

namespace horo {

/// True iff every leave-one-out gcd of the weights is 1. Throws DomainError
/// on an empty list.
bool is_well_formed(std::span<const std::int64_t> weights);

class WeightedProjectiveSpace {
 public:
  /// Needs at least two positive weights.
  explicit WeightedProjectiveSpace(std::vector<std::int64_t> weights);

  const std::vector<std::int64_t>& weights() const { return weights_; }
  int n() const { return static_cast<int>(weights_.size()) - 1; }
  bool well_formed() const { return is_well_formed(weights_); }

  friend auto operator<=>(const WeightedProjectiveSpace&, const WeightedProjectiveSpace&) = default;

 private:
  std::vector<std::int64_t> weights_;
};

class CompleteIntersection {
 public:
  /// Needs positive degrees and fewer of them than n.
  CompleteIntersection(WeightedProjectiveSpace ambient, std::vector<std::int64_t> degrees);

  const WeightedProjectiveSpace& ambient() const { return ambient_; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  int codim() const { return static_cast<int>(degrees_.size()); }
  int dimension() const { return ambient_.n() - codim(); }

  /// "WCI(1,1,2,3; 6)"; "WCI(1,1,1;)" with no degrees.
  std::string descriptor() const;

  friend auto operator<=>(const CompleteIntersection&, const CompleteIntersection&) = default;

 private:
  WeightedProjectiveSpace ambient_;
  std::vector<std::int64_t> degrees_;
};

/// Coefficient of H^k: (sum a_i^k - sum d_j^k) / k!, for 1 <= k <= n.
Rational ch_coefficient(const CompleteIntersection& x, int k);

/// sum d_j < sum a_i. Throws DomainError for an ill-formed ambient.
bool is_fano(const CompleteIntersection& x);
/// is_fano and sum d_j^2 < sum a_i^2. Throws DomainError for an ill-formed
/// ambient.
bool is_two_fano(const CompleteIntersection& x);

}  // namespace horo
