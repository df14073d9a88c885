#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <thread>

#include "horo/errors.hpp"
#include "horo/root_system.hpp"
#include "oracle/root_oracle.hpp"

using namespace horo;

namespace {

std::vector<LieType> all_types(int max_classical_rank) {
  std::vector<LieType> out;
  for (Series s : {Series::A, Series::B, Series::C, Series::D})
    for (int r = LieType::min_rank(s); r <= max_classical_rank; ++r) out.emplace_back(s, r);
  for (int r : {6, 7, 8}) out.emplace_back(Series::E, r);
  out.emplace_back(Series::F, 4);
  out.emplace_back(Series::G, 2);
  return out;
}

std::set<std::vector<int>> as_set(const std::vector<PositiveRoot>& roots) {
  std::set<std::vector<int>> s;
  for (const auto& r : roots) s.insert(r.coeffs);
  return s;
}

}  // namespace

TEST_CASE("LieType rank rules") {
  CHECK_NOTHROW(LieType(Series::A, 1));
  CHECK_THROWS_AS(LieType(Series::A, 0), DomainError);
  CHECK_THROWS_AS(LieType(Series::B, 1), DomainError);
  CHECK_THROWS_AS(LieType(Series::C, 1), DomainError);
  CHECK_THROWS_AS(LieType(Series::D, 3), DomainError);
  CHECK_THROWS_AS(LieType(Series::E, 5), DomainError);
  CHECK_THROWS_AS(LieType(Series::E, 9), DomainError);
  CHECK_THROWS_AS(LieType(Series::F, 3), DomainError);
  CHECK_THROWS_AS(LieType(Series::G, 3), DomainError);
  CHECK_THROWS_AS(LieType(Series::A, 65), CapExceeded);
  CHECK(LieType(Series::E, 7).name() == "E7");
}

TEST_CASE("cartan_matrix examples") {
  const auto a2 = cartan_matrix(LieType(Series::A, 2));
  CHECK(a2(1, 1) == 2);
  CHECK(a2(1, 2) == -1);
  CHECK(a2(2, 1) == -1);
  CHECK(a2(2, 2) == 2);

  // G2, node 1 short.
  const auto g2 = cartan_matrix(LieType(Series::G, 2));
  CHECK(g2(1, 2) == -1);
  CHECK(g2(2, 1) == -3);

  // B3: the (2,3) edge has product 2, node 3 short.
  const auto b3 = cartan_matrix(LieType(Series::B, 3));
  CHECK(b3(2, 3) * b3(3, 2) == 2);
  CHECK(b3(2, 3) == -2);
}

TEST_CASE("cartan_matrix agrees with the Euclidean realization for every type") {
  for (const auto& t : all_types(12)) {
    CAPTURE(t.name());
    const auto a = cartan_matrix(t);
    const auto expected = oracle::cartan(t);
    for (int j = 1; j <= t.rank(); ++j)
      for (int k = 1; k <= t.rank(); ++k) {
        CHECK(a(j, k) == expected[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)]);
        if (j == k) continue;
        CHECK(a(j, k) <= 0);
        CHECK((a(j, k) == 0) == (a(k, j) == 0));
        const int product = a(j, k) * a(k, j);
        CHECK((product >= 0 && product <= 3));
      }
  }
}

TEST_CASE("positive_roots examples") {
  const auto& a1 = positive_roots(LieType(Series::A, 1));
  REQUIRE(a1.size() == 1);
  CHECK(a1[0].coeffs == std::vector<int>{1});

  const auto& g2 = positive_roots(LieType(Series::G, 2));
  CHECK(as_set(g2) == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});

  const auto b3 = as_set(positive_roots(LieType(Series::B, 3)));
  CHECK(b3.size() == 9);
  CHECK(b3.contains({1, 1, 1}));
  CHECK(b3.contains({1, 2, 2}));
}

TEST_CASE("closure matches the Euclidean root oracle") {
  for (const auto& t : all_types(12)) {
    CAPTURE(t.name());
    const auto& roots = positive_roots(t);
    CHECK(static_cast<std::int64_t>(roots.size()) == expected_positive_root_count(t));
    CHECK(as_set(roots) == oracle::positive_roots(t));
  }
}

TEST_CASE("positive root invariants") {
  for (const auto& t : all_types(12)) {
    CAPTURE(t.name());
    const auto& roots = positive_roots(t);
    const auto s = as_set(roots);
    CHECK(s.size() == roots.size());
    for (int k = 0; k < t.rank(); ++k) {
      std::vector<int> e(static_cast<std::size_t>(t.rank()), 0);
      e[static_cast<std::size_t>(k)] = 1;
      CHECK(s.contains(e));
    }
    for (std::size_t i = 1; i < roots.size(); ++i) {
      const auto& prev = roots[i - 1];
      const auto& cur = roots[i];
      const bool ordered = prev.height() < cur.height() ||
                           (prev.height() == cur.height() && prev.coeffs < cur.coeffs);
      CHECK(ordered);
    }
    for (const auto& beta : roots)
      for (int k = 1; k <= t.rank(); ++k) {
        const int p = pairing(t, beta, k);
        CHECK((p >= -3 && p <= 3));
      }
  }
}

TEST_CASE("generation is deterministic and the cache is transparent") {
  const LieType e8(Series::E, 8);
  const auto fresh = generate_positive_roots(e8);
  CHECK(fresh == generate_positive_roots(e8));
  CHECK(fresh == positive_roots(e8));

  const LieType c20(Series::C, 20);
  std::vector<std::shared_ptr<const RootSystem>> seen(8);
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < seen.size(); ++i)
    workers.emplace_back([&, i] { seen[i] = root_system(c20); });
  for (auto& w : workers) w.join();
  for (const auto& rs : seen) CHECK(rs->positive == generate_positive_roots(c20));
}

TEST_CASE("pairing examples and errors") {
  CHECK(pairing(LieType(Series::A, 2), PositiveRoot{{1, 0}}, 1) == 2);
  CHECK(pairing(LieType(Series::G, 2), PositiveRoot{{3, 2}}, 1) == 0);
  CHECK(pairing(LieType(Series::B, 2), PositiveRoot{{1, 2}}, 1) == 0);
  CHECK_THROWS_AS(pairing(LieType(Series::B, 2), PositiveRoot{{1, 2}}, 3), DomainError);
  CHECK_THROWS_AS(pairing(LieType(Series::B, 2), PositiveRoot{{1, 2}}, 0), DomainError);
  CHECK_THROWS_AS(pairing(LieType(Series::B, 2), PositiveRoot{{1, 2, 0}}, 1), DomainError);
}
