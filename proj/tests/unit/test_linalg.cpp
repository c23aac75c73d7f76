#include "nrf/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace nrf;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3,
                     double zero_prob = 0.3) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::bernoulli_distribution z(zero_prob);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) ? 0 : d(rng);
  return m;
}

}  // namespace

TEST_CASE("rank and kernel of a fixed matrix") {
  Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  auto k = rank_and_kernel(m, Rational(0), Rational(1));
  CHECK(k.rank == 2);
  REQUIRE(k.kernel.size() == 1);
  CHECK(is_zero(nrf::apply(m, k.kernel[0])));
}

TEST_CASE("fractions stay exact") {
  Matrix m = from_rows({{Rational(1, 3), Rational(1, 2)}, {Rational(2, 5), Rational(-7, 11)}}, 2);
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(multiply(m, *inv) == identity(2));
  CHECK(multiply(*inv, m) == identity(2));
}

TEST_CASE("singular matrix has no inverse") {
  CHECK_FALSE(inverse(from_rows({{1, 2}, {2, 4}}, 2)));
}

TEST_CASE("property: kernel dimension plus rank equals width") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix m = random_matrix(rng, r, c);
    auto k = rank_and_kernel(m, Rational(0), Rational(1));
    CHECK(k.rank + k.kernel.size() == c);
    for (const auto& v : k.kernel) CHECK(is_zero(nrf::apply(m, v)));
    CHECK(k.rank == rank(transpose(m)));
  }
}

TEST_CASE("property: rank over Q agrees with rank mod a large prime for small entries") {
  std::mt19937_64 rng(11);
  const std::uint64_t p = 1000000007ULL;
  for (int t = 0; t < 100; ++t) {
    Matrix m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5);
    CHECK(rank(m) == rank(reduce_mod(m, p)));
  }
}

TEST_CASE("solve finds solutions exactly when they exist") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    Matrix a = random_matrix(rng, 4, 3);
    Vector x0{Rational(rng() % 5), Rational(-1, 2), Rational(2)};
    Vector b = nrf::apply(a, x0);
    auto x = solve(a, b, Rational(0));
    REQUIRE(x);
    CHECK(nrf::apply(a, *x) == b);
  }
  Matrix a = from_rows({{1, 0}, {1, 0}}, 2);
  CHECK_FALSE(solve(a, Vector{1, 2}, Rational(0)));
}

TEST_CASE("sparse elimination agrees with dense") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    Matrix m = random_matrix(rng, 5, 7, -2, 2, 0.6);
    std::vector<SparseVec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Vector r(m.cols());
      for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m(i, j);
      rows.push_back(to_sparse(r));
    }
    auto s = sparse_rank_and_kernel(rows, m.cols());
    CHECK(s.rank == rank(m));
    for (const auto& v : s.kernel) CHECK(is_zero(nrf::apply(m, v)));
  }
}

TEST_CASE("echelon basis tracks coordinates") {
  Echelon e(3, true);
  CHECK(e.insert({1, 1, 0}));
  CHECK(e.insert({0, 1, 1}));
  CHECK_FALSE(e.insert({1, 2, 1}));
  CHECK(e.dim() == 2);
  auto c = e.coordinates({2, 3, 1});
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 1);
  CHECK_FALSE(e.coordinates({1, 0, 0}));
}

TEST_CASE("prime field arithmetic") {
  Fp a(3, 7), b(5, 7);
  CHECK((a * b).value() == 1);
  CHECK((a / b * b).value() == 3);
  CHECK((a - b).value() == 5);
  CHECK_THROWS(Fp(1, 7) + Fp(1, 11));
}
