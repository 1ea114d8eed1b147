#include <doctest.h>

#include <random>

#include "toricmirror/errors.hpp"
#include "toricmirror/matrix.hpp"

using namespace toricmirror;

namespace {

RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> sparse(0, 2);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = sparse(rng) == 0 ? Rat(0) : Rat(entry(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  CHECK(to_string(Rat(6, 4)) == "3/2");
  CHECK(to_string(Rat(-6, 4)) == "-3/2");
  CHECK(to_string(Rat(Integer(6), Integer(-4))) == "-3/2");
  CHECK(to_string(Rat(0, 5)) == "0");
  CHECK(denominator_of(Rat(0, 5)) == 1);
  CHECK(to_string(parse_rat("-10/4")) == "-5/2");
  CHECK(to_string(parse_rat("+7")) == "7");
}

TEST_CASE("parse_rat rejects anything that is not exact") {
  for (const char* bad : {"1.5", "1e3", "", "/2", "3/", "1/0", "x", "--1", "1/-2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rat(bad), Error);
  }
}

TEST_CASE("big integers survive elimination") {
  Rat big = parse_rat("123456789012345678901234567890/7");
  RatMatrix m{{big, 1}, {1, big}};
  CHECK(determinant(m) == big * big - 1);
  CHECK(rank(m) == 2);
}

TEST_CASE("rref examples") {
  const auto a = rref(RatMatrix{{1, 2}, {2, 4}});
  CHECK(a.reduced == RatMatrix{{1, 2}, {0, 0}});
  CHECK(a.pivots == std::vector<std::size_t>{0});

  const auto id = rref(RatMatrix::identity(3));
  CHECK(id.reduced == RatMatrix::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  CHECK(rref(RatMatrix{{2, 1}, {1, 1}}).reduced == RatMatrix::identity(2));
}

TEST_CASE("kernel examples") {
  const auto k = kernel_basis(RatMatrix{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
  CHECK(kernel_basis(RatMatrix::identity(2)).empty());
  CHECK(kernel_basis(RatMatrix{{1, 2, 3}}).size() == 2);
}

TEST_CASE("solve examples") {
  CHECK(solve(RatMatrix{{2, 0}, {0, 3}}, {4, 9}) == RatVector{2, 3});
  const auto x = solve(RatMatrix{{1, 1}}, {5});
  REQUIRE(x);
  CHECK((*x)[0] + (*x)[1] == 5);
  CHECK_FALSE(solve(RatMatrix{{1}, {2}}, {1, 3}));
}

TEST_CASE("determinant and products") {
  CHECK(determinant(RatMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(RatMatrix{{Rat(1, 2), 0, 0}, {7, 3, 0}, {1, 1, 4}}) == 6);
  const RatMatrix a{{1, 2}, {3, 4}};
  CHECK(a * RatMatrix::identity(2) == a);
  CHECK(a.transpose().transpose() == a);
  CHECK(a * RatVector{1, -1} == RatVector{-1, -1});
}

TEST_CASE("elimination properties on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const RatMatrix m = random_matrix(rng, dim(rng), dim(rng));
    CAPTURE(trial);
    const auto r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    const auto k = kernel_basis(m);
    CHECK(r.rank() + k.size() == m.cols());
    for (const auto& v : k) CHECK(is_zero(m * v));

    // A right-hand side built from a known x is always solvable, and the
    // returned solution reproduces it.
    RatVector x(m.cols());
    for (auto& xi : x) xi = Rat(static_cast<int>(rng() % 7) - 3);
    const RatVector b = m * x;
    const auto sol = solve(m, b);
    REQUIRE(sol);
    CHECK(m * *sol == b);

    if (m.rows() == m.cols()) CHECK((determinant(m) != 0) == (r.rank() == m.cols()));
  }
}
