#include "util.hpp"

#include <doctest.h>

using namespace nrf;
using namespace nrf::test;

namespace {

struct Dynkin {
  const char* file;
  std::size_t h;  // Coxeter number
};

const Dynkin kDynkin[] = {{"a2.alg", 3},          {"a3_linear.alg", 4}, {"a3_sink.alg", 4},
                          {"a4_linear.alg", 5},   {"d4.alg", 6},        {"a5_symmetric.alg", 6},
                          {"d5_symmetric.alg", 8}};

}  // namespace

TEST_CASE("hereditary Dynkin algebras satisfy nu^h = [2 - h]") {
  for (const auto& d : kDynkin) {
    auto a = corpus(d.file);
    CHECK(check_twisted_cy(a, d.h, static_cast<long>(d.h) - 2));
    CHECK_FALSE(check_twisted_cy(a, d.h, static_cast<long>(d.h) - 1));
  }
}

TEST_CASE("smallest twisted certificates") {
  auto c = find_twisted_cy(a2(), 12, 12);
  REQUIRE(c);
  CHECK(c->ell == 3);
  CHECK(c->m == 1);
  c = find_twisted_cy(a3_linear(), 12, 12);
  REQUIRE(c);
  CHECK(c->ell == 4);
  CHECK(c->m == 2);
  c = find_twisted_cy(a3_sink(), 12, 12);
  REQUIRE(c);
  CHECK(c->ell == 2);
  CHECK(c->m == 1);
  CHECK(to_string(cy_dimension(*c)) == "1/2");
  CHECK_FALSE(find_twisted_cy(kronecker(), 6, 6));
}

TEST_CASE("property: certificates scale") {
  for (const char* f : {"a2.alg", "a3_sink.alg", "a3_rad2.alg"}) {
    auto a = corpus(f);
    auto c = find_twisted_cy(a, 12, 12);
    REQUIRE(c);
    for (std::size_t k = 2; k <= 3; ++k) CHECK(check_twisted_cy(a, k * c->ell, static_cast<long>(k) * c->m));
  }
}

TEST_CASE("property: twisted dimension equals n(b - a)/b for homogeneous and non-homogeneous inputs") {
  const std::pair<const char*, std::size_t> inputs[] = {
      {"a2.alg", 1}, {"a3_linear.alg", 1}, {"a3_sink.alg", 1}, {"d4.alg", 1}, {"a3_rad2.alg", 2}};
  for (const auto& [f, n] : inputs) {
    auto a = corpus(f);
    auto r = decide_nrf(a, n);
    REQUIRE(r.is_nrf == Verdict::True);
    auto c = find_twisted_cy(a, 12, 24);
    REQUIRE(c);
    CHECK(cy_dimension(*c) == reduce(static_cast<long>(n * (r.b - r.a)), static_cast<long>(r.b)));
  }
}

TEST_CASE("untwisted certificates") {
  CHECK(check_untwisted_cy(a2(), 3, 1));
  CHECK_FALSE(check_untwisted_cy(a2(), 3, 2));
  // A3 with a sink is only twisted fractionally Calabi-Yau at ell = 2
  CHECK(check_twisted_cy(a3_sink(), 2, 1));
  CHECK_FALSE(check_untwisted_cy(a3_sink(), 2, 1));
  CHECK(check_untwisted_cy(corpus("a2_x_a2.alg"), 3, 2));
}

TEST_CASE("tensor certificates") {
  CyCertificate x{3, 1, true, ""}, y{4, 2, true, ""};
  auto t = tensor_certificate({x, y});
  CHECK(t.ell == 12);
  CHECK(t.m == 10);
  CHECK(cy_dimension(t) == Fraction{5, 6});
  CHECK(reduce(-4, 6) == Fraction{-2, 3});
  CHECK(to_string(Fraction{0, 1}) == "0/1");
  // the tensor certificate really holds for A2 (x) A2
  auto sq = tensor_certificate({x, x});
  CHECK(sq.ell == 3);
  CHECK(sq.m == 2);
  CHECK(check_twisted_cy(corpus("a2_x_a2.alg"), sq.ell, sq.m));
}
