#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horo/errors.hpp"
#include "horo/parabolic.hpp"
#include "oracle/root_oracle.hpp"

using namespace horo;

namespace {

// Counts straight from the Euclidean oracle.
std::int64_t oracle_pair_dim(const LieType& t, int j, int k) {
  std::int64_t n = 0;
  for (const auto& c : oracle::positive_roots(t))
    if (c[static_cast<std::size_t>(j - 1)] > 0 || c[static_cast<std::size_t>(k - 1)] > 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("dim_gp examples") {
  for (int n = 1; n <= 12; ++n) CHECK(dim_gp(LieType(Series::A, n), 1) == n);
  CHECK(dim_gp(LieType(Series::B, 3), 3) == 6);
  CHECK(dim_gp(LieType(Series::G, 2), 1) == 5);
  CHECK(dim_gp(LieType(Series::G, 2), 2) == 5);
}

TEST_CASE("index_gp examples") {
  for (int n = 1; n <= 12; ++n) CHECK(index_gp(LieType(Series::A, n), 1) == n + 1);
  CHECK(index_gp(LieType(Series::B, 3), 3) == 6);
  for (int n = 2; n <= 12; ++n)
    for (int m = 2; m <= n; ++m) CHECK(index_gp(LieType(Series::C, n), m) == 2 * n + 1 - m);
  CHECK(index_gp(LieType(Series::G, 2), 1) == 5);
  CHECK(index_gp(LieType(Series::G, 2), 2) == 3);
}

TEST_CASE("dim_gp_pair examples") {
  CHECK(dim_gp_pair(LieType(Series::A, 2), 1, 2) == 3);
  CHECK(dim_gp_pair(LieType(Series::B, 3), 1, 3) == 8);
  CHECK(dim_gp_pair(LieType(Series::B, 3), 1, 3) == oracle_pair_dim(LieType(Series::B, 3), 1, 3));
  CHECK(dim_gp_pair(LieType(Series::G, 2), 1, 2) == 6);
  CHECK(dim_gp_pair(LieType(Series::G, 2), 1, 2) == oracle_pair_dim(LieType(Series::G, 2), 1, 2));
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(dim_gp(LieType(Series::A, 3), 0), DomainError);
  CHECK_THROWS_AS(index_gp(LieType(Series::A, 3), 4), DomainError);
  CHECK_THROWS_AS(dim_gp_pair(LieType(Series::A, 3), 2, 2), DomainError);
  CHECK_THROWS_AS(HomogeneousSpace(LieType(Series::F, 4), 5), DomainError);
  CHECK(HomogeneousSpace(LieType(Series::B, 5), 3).descriptor() == "B5/P3");
}

TEST_CASE("Grassmannians G(k,n) = A_{n-1}/P_k") {
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(dim_gp(LieType(Series::A, n - 1), k) == k * (n - k));
      CHECK(index_gp(LieType(Series::A, n - 1), k) == n);
    }
}

TEST_CASE("quadrics and spinor/Lagrangian varieties") {
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(index_gp(LieType(Series::B, n), 1) == 2 * n - 1);
    CHECK(dim_gp(LieType(Series::B, n), 1) == 2 * n - 1);
    CHECK(index_gp(LieType(Series::B, n), n) == 2 * n);
    CHECK(index_gp(LieType(Series::C, n), n) == n + 1);
    if (n >= 4) {
      CHECK(index_gp(LieType(Series::D, n), 1) == 2 * n - 2);
      CHECK(dim_gp(LieType(Series::D, n), 1) == 2 * n - 2);
    }
  }
}

TEST_CASE("pair dimension bounds") {
  std::vector<LieType> types;
  for (Series s : {Series::A, Series::B, Series::C, Series::D})
    for (int r = LieType::min_rank(s); r <= 9; ++r) types.emplace_back(s, r);
  for (int r : {6, 7, 8}) types.emplace_back(Series::E, r);
  types.emplace_back(Series::F, 4);
  types.emplace_back(Series::G, 2);
  for (const auto& t : types)
    for (int j = 1; j <= t.rank(); ++j)
      for (int k = 1; k <= t.rank(); ++k) {
        if (j == k) continue;
        CAPTURE(t.name());
        const auto pair = dim_gp_pair(t, j, k);
        CHECK(std::max(dim_gp(t, j), dim_gp(t, k)) < pair);
        CHECK(pair <= dim_gp(t, j) + dim_gp(t, k));
      }
}

TEST_CASE("exceptional indices and dimensions") {
  // E6/P1 Cayley plane, E7/P7 Freudenthal variety, F4/P4, F4/P1.
  CHECK(dim_gp(LieType(Series::E, 6), 1) == 16);
  CHECK(index_gp(LieType(Series::E, 6), 1) == 12);
  CHECK(dim_gp(LieType(Series::E, 7), 7) == 27);
  CHECK(index_gp(LieType(Series::E, 7), 7) == 18);
  CHECK(dim_gp(LieType(Series::F, 4), 4) == 15);
  CHECK(index_gp(LieType(Series::F, 4), 4) == 11);
  CHECK(dim_gp(LieType(Series::F, 4), 1) == 15);
  CHECK(index_gp(LieType(Series::F, 4), 1) == 8);
}
