#pragma once

// Root data for the simple Lie types, Bourbaki numbering throughout.
//
//   B_n: node n short.      C_n: node n long.
//   F_4: nodes 1,2 long, nodes 3,4 short.
//   G_2: node 1 short, node 2 long.
//
// Node indices are 1-based everywhere in the public API.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace horo {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Upper bound on the rank of any constructible LieType. Default 64.
int rank_cap();
void set_rank_cap(int cap);

/// A simple Lie type. Construction validates the rank for the series
/// (A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F=4, G=2) and against rank_cap().
class LieType {
 public:
  LieType(Series series, int rank);

  Series series() const { return series_; }
  int rank() const { return rank_; }

  /// "B3", "E8", ...
  std::string name() const;

  /// True iff (series, rank) satisfies the per-series rank rule.
  static bool valid(Series series, int rank);
  static int min_rank(Series series);

  friend auto operator<=>(const LieType&, const LieType&) = default;

 private:
  Series series_;
  int rank_;
};

/// A[j][k] = <alpha_j, alpha_k^vee>, 0-based storage.
class CartanMatrix {
 public:
  explicit CartanMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }
  /// 1-based access.
  int operator()(int j, int k) const { return entries_[idx(j, k)]; }
  int& at(int j, int k) { return entries_[idx(j, k)]; }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  std::size_t idx(int j, int k) const {
    return static_cast<std::size_t>(j - 1) * n_ + static_cast<std::size_t>(k - 1);
  }
  int n_;
  std::vector<int> entries_;
};

/// A positive root in simple-root coordinates.
struct PositiveRoot {
  std::vector<int> coeffs;

  int height() const;
  /// 1-based coefficient.
  int coeff(int k) const { return coeffs[static_cast<std::size_t>(k - 1)]; }

  friend auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

/// Immutable root data for one type.
struct RootSystem {
  LieType type;
  CartanMatrix cartan;
  std::vector<PositiveRoot> positive;  // graded by height, then lexicographic
  // Per node k (slot k-1): #{beta : beta_k > 0} and the sum of
  // <beta, alpha_k^vee> over those beta.
  std::vector<std::int64_t> node_dim;
  std::vector<std::int64_t> node_index;
};

CartanMatrix cartan_matrix(const LieType& t);

/// Computes the positive roots by root-string closure from the simple roots.
std::vector<PositiveRoot> generate_positive_roots(const LieType& t);

/// Memoized root data; thread-safe.
std::shared_ptr<const RootSystem> root_system(const LieType& t);

const std::vector<PositiveRoot>& positive_roots(const LieType& t);

/// <beta, alpha_k^vee> = sum_j beta_j A[j][k].
int pairing(const CartanMatrix& a, const PositiveRoot& beta, int k);
int pairing(const LieType& t, const PositiveRoot& beta, int k);

/// Classical |Phi^+| for the type; used only as an assertion.
std::int64_t expected_positive_root_count(const LieType& t);

}  // namespace horo
