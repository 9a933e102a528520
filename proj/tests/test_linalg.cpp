#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algen/linalg.hpp"

using namespace algen;

namespace {

RatMat from_rows(const std::vector<std::vector<long>>& rows) {
  RatMat m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[0].size(); ++c) m.at(r, c) = Rat(rows[r][c]);
  return m;
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(from_rows({{1, 2}, {3, 4}})) == 2);
  CHECK(rank(from_rows({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("kernel vectors satisfy M x = 0 with free coordinate 1") {
  RatMat m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  for (size_t r = 0; r < m.rows(); ++r) {
    Rat acc(0);
    for (size_t c = 0; c < m.cols(); ++c) acc += m.at(r, c) * basis[0][c];
    CHECK(acc == Rat(0));
  }
  bool has_one = false;
  for (const Rat& v : basis[0]) has_one = has_one || v == Rat(1);
  CHECK(has_one);
}

TEST_CASE("solve and inverse") {
  RatMat m = from_rows({{2, 1}, {1, 3}});
  auto x = solve(m, {Rat(5), Rat(10)});
  CHECK(m.at(0, 0) * x[0] + m.at(0, 1) * x[1] == Rat(5));
  CHECK(m.at(1, 0) * x[0] + m.at(1, 1) * x[1] == Rat(10));

  RatMat inv = inverse(m);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      Rat acc(0);
      for (size_t l = 0; l < 2; ++l) acc += m.at(i, l) * inv.at(l, j);
      CHECK(acc == (i == j ? Rat(1) : Rat(0)));
    }

  CHECK_THROWS_AS(solve(from_rows({{1, 2}, {2, 4}}), {Rat(1), Rat(1)}),
                  std::domain_error);
}

TEST_CASE("random solve round trip") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 2 + rng() % 4;
    RatMat m(n, n);
    std::vector<Rat> x0;
    for (size_t i = 0; i < n; ++i) {
      x0.emplace_back(static_cast<long>(rng() % 19) - 9);
      for (size_t j = 0; j < n; ++j)
        m.at(i, j) = Rat(static_cast<long>(rng() % 19) - 9);
    }
    if (rank(m) < n) continue;
    std::vector<Rat> b(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) b[i] += m.at(i, j) * x0[j];
    CHECK(solve(m, b) == x0);
  }
}
