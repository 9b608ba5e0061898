#include <random>

#include "doctest.h"
#include "nga/errors.hpp"
#include "nga/matrix.hpp"
#include "oracles.hpp"

using namespace nga;

TEST_CASE("rational construction normalizes") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-3, -6) == rat(1, 2));
  CHECK(rat(3, -6) == rat(-1, 2));
  CHECK(rat(0, 7) == Rational(0));
  CHECK(numerator(rat(0, 7)) == 0);
  CHECK(denominator(rat(0, 7)) == 1);
  CHECK_THROWS_AS(rat(1, 0), InputError);
}

TEST_CASE("rational strings") {
  CHECK(fraction_string(rat(-3, 6)) == "-1/2");
  CHECK(fraction_string(Rational(5)) == "5/1");
  CHECK(pretty_string(Rational(5)) == "5");
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3/2") == rat(-3, 2));
  CHECK(parse_rational("4/6") == rat(2, 3));
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x/2"), InputError);
}

TEST_CASE("rank on fixed matrices") {
  CHECK(rank(RatMatrix::identity(3)) == 3);
  CHECK(rank(RatMatrix(2, 5)) == 0);
  // vertex-edge incidence of the path on 4 vertices
  const RatMatrix incidence{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  CHECK(rank(incidence) == 3);
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(RatMatrix::identity(2)).empty());

  const RatMatrix row{{1, 1}};
  const auto k1 = kernel_basis(row);
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == std::vector<Rational>{1, -1});

  // rows are the edge functionals of the path a-b-c-d
  const RatMatrix lambda{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const auto k2 = kernel_basis(lambda);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == std::vector<Rational>{1, -1, 1, -1});
}

namespace {

RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = oracles::random_rational(rng);
  return m;
}

}  // namespace

TEST_CASE("rank-nullity and exact kernels on random matrices") {
  std::mt19937 rng(20260809);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 7;
    const RatMatrix m = random_matrix(rng, rows, cols);
    const auto kernel = kernel_basis(m);
    CHECK(rank(m) + kernel.size() == cols);
    for (const auto& v : kernel) {
      const auto image = m.apply(v);
      for (const auto& x : image) CHECK(x == 0);
    }
  }
}

TEST_CASE("rank is invariant under row and column scaling") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    RatMatrix m = random_matrix(rng, rows, cols);
    const std::size_t before = rank(m);
    for (std::size_t r = 0; r < rows; ++r) {
      Rational s = oracles::random_rational(rng);
      if (s == 0) s = rat(1, 2);
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) *= s;
    }
    for (std::size_t c = 0; c < cols; ++c) {
      Rational s = oracles::random_rational(rng);
      if (s == 0) s = 3;
      for (std::size_t r = 0; r < rows; ++r) m.at(r, c) *= s;
    }
    CHECK(rank(m) == before);
  }
}

TEST_CASE("integer fast path agrees with rational elimination") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    RatMatrix m(rows, cols);
    std::vector<std::int64_t> ints;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        const int v = entry(rng);
        m.at(r, c) = v;
        ints.push_back(v);
      }
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    const auto fast = detail::bareiss_rank_int64(std::move(ints), rows, cols);
    REQUIRE(fast.has_value());
    CHECK(*fast == pivots.size());
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const RatMatrix m = random_matrix(rng, n, n);
    const auto inv = inverse(m);
    if (rank(m) < n) {
      CHECK(!inv);
      continue;
    }
    REQUIRE(inv.has_value());
    CHECK(m * *inv == RatMatrix::identity(n));
  }

  const RatMatrix a{{1, 2}, {2, 4}};
  CHECK(!inverse(a));
  CHECK(!solve(a, {Rational(1), Rational(3)}));  // inconsistent
  const auto x = solve(a, {Rational(1), Rational(2)});
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == std::vector<Rational>{1, 2});
}

TEST_CASE("normalize_span") {
  std::vector<Rational> v{Rational(0), rat(-1, 2), Rational(3)};
  normalize_span(v);
  CHECK(v == std::vector<Rational>{Rational(0), Rational(1), Rational(-6)});
  std::vector<Rational> zero{Rational(0), Rational(0)};
  normalize_span(zero);
  CHECK(zero == std::vector<Rational>{Rational(0), Rational(0)});
}
