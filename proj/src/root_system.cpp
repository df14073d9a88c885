#include "horo/root_system.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_set>

#include "horo/errors.hpp"

namespace horo {

namespace {

std::atomic<int> g_rank_cap{64};

struct CoeffHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int c : v) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
    return h;
  }
};

void link(CartanMatrix& a, int j, int k) {
  a.at(j, k) = -1;
  a.at(k, j) = -1;
}

}  // namespace

int rank_cap() { return g_rank_cap.load(std::memory_order_relaxed); }

void set_rank_cap(int cap) {
  if (cap < 2) throw DomainError("rank cap must be at least 2");
  g_rank_cap.store(cap, std::memory_order_relaxed);
}

int LieType::min_rank(Series series) {
  switch (series) {
    case Series::A: return 1;
    case Series::B: return 2;
    case Series::C: return 2;
    case Series::D: return 4;
    case Series::E: return 6;
    case Series::F: return 4;
    case Series::G: return 2;
  }
  return 1;
}

bool LieType::valid(Series series, int rank) {
  switch (series) {
    case Series::A:
    case Series::B:
    case Series::C:
    case Series::D: return rank >= min_rank(series);
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

LieType::LieType(Series series, int rank) : series_(series), rank_(rank) {
  if (!valid(series, rank))
    throw DomainError("invalid rank " + std::to_string(rank) + " for series " +
                      std::string(1, static_cast<char>(series)));
  if (rank > rank_cap())
    throw CapExceeded("rank " + std::to_string(rank) + " exceeds rank cap " +
                      std::to_string(rank_cap()));
}

std::string LieType::name() const {
  return std::string(1, static_cast<char>(series_)) + std::to_string(rank_);
}

int PositiveRoot::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

CartanMatrix cartan_matrix(const LieType& t) {
  const int n = t.rank();
  CartanMatrix a(n);
  for (int k = 1; k <= n; ++k) a.at(k, k) = 2;

  switch (t.series()) {
    case Series::A:
      for (int k = 1; k < n; ++k) link(a, k, k + 1);
      break;
    case Series::B:
      for (int k = 1; k < n; ++k) link(a, k, k + 1);
      // alpha_{n-1} long, alpha_n short.
      a.at(n - 1, n) = -2;
      break;
    case Series::C:
      for (int k = 1; k < n; ++k) link(a, k, k + 1);
      // alpha_{n-1} short, alpha_n long.
      a.at(n, n - 1) = -2;
      break;
    case Series::D:
      for (int k = 1; k < n - 1; ++k) link(a, k, k + 1);
      link(a, n - 2, n);
      break;
    case Series::E:
      // 1-3-4-5-...-n with 2 attached to 4.
      link(a, 1, 3);
      link(a, 2, 4);
      for (int k = 3; k < n; ++k) link(a, k, k + 1);
      break;
    case Series::F:
      link(a, 1, 2);
      link(a, 2, 3);
      link(a, 3, 4);
      // alpha_2 long, alpha_3 short.
      a.at(2, 3) = -2;
      break;
    case Series::G:
      // alpha_1 short, alpha_2 long.
      a.at(1, 2) = -1;
      a.at(2, 1) = -3;
      break;
  }
  return a;
}

int pairing(const CartanMatrix& a, const PositiveRoot& beta, int k) {
  if (k < 1 || k > a.size())
    throw DomainError("node index " + std::to_string(k) + " out of range 1.." +
                      std::to_string(a.size()));
  if (static_cast<int>(beta.coeffs.size()) != a.size())
    throw DomainError("root length does not match rank");
  int sum = 0;
  for (int j = 1; j <= a.size(); ++j) sum += beta.coeff(j) * a(j, k);
  return sum;
}

int pairing(const LieType& t, const PositiveRoot& beta, int k) {
  return pairing(root_system(t)->cartan, beta, k);
}

std::vector<PositiveRoot> generate_positive_roots(const LieType& t) {
  const CartanMatrix a = cartan_matrix(t);
  const int n = t.rank();

  std::unordered_set<std::vector<int>, CoeffHash> known;
  std::vector<PositiveRoot> out;
  std::set<std::vector<int>> layer;
  for (int k = 0; k < n; ++k) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(k)] = 1;
    layer.insert(e);
  }

  // The alpha_k-string through beta runs from beta - p alpha_k to
  // beta + q alpha_k with p - q = <beta, alpha_k^vee>. Roots of height h+1 are
  // exactly the beta + alpha_k with q > 0 for beta of height h.
  while (!layer.empty()) {
    for (const auto& c : layer) known.insert(c);
    std::set<std::vector<int>> next;
    for (const auto& c : layer) {
      const PositiveRoot beta{c};
      out.push_back(beta);
      for (int k = 1; k <= n; ++k) {
        const auto slot = static_cast<std::size_t>(k - 1);
        int p = 0;
        std::vector<int> down = c;
        while (down[slot] > 0) {
          --down[slot];
          if (!known.contains(down)) break;
          ++p;
        }
        const int q = p - pairing(a, beta, k);
        if (q > 0) {
          std::vector<int> up = c;
          ++up[slot];
          next.insert(std::move(up));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::shared_ptr<const RootSystem> root_system(const LieType& t) {
  static std::mutex mutex;
  static std::map<LieType, std::shared_ptr<const RootSystem>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(t); it != cache.end()) return it->second;
  }
  RootSystem rs{t, cartan_matrix(t), generate_positive_roots(t), {}, {}};
  rs.node_dim.assign(static_cast<std::size_t>(t.rank()), 0);
  rs.node_index.assign(static_cast<std::size_t>(t.rank()), 0);
  for (const auto& beta : rs.positive) {
    for (int k = 1; k <= t.rank(); ++k) {
      if (beta.coeff(k) == 0) continue;
      rs.node_dim[static_cast<std::size_t>(k - 1)] += 1;
      rs.node_index[static_cast<std::size_t>(k - 1)] += pairing(rs.cartan, beta, k);
    }
  }
  auto built = std::make_shared<const RootSystem>(std::move(rs));
  std::lock_guard lock(mutex);
  return cache.emplace(t, std::move(built)).first->second;
}

const std::vector<PositiveRoot>& positive_roots(const LieType& t) {
  // Cached entries are never evicted, so the reference stays valid.
  return root_system(t)->positive;
}

std::int64_t expected_positive_root_count(const LieType& t) {
  const std::int64_t n = t.rank();
  switch (t.series()) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return 0;
}

}  // namespace horo
