#include "util.hpp"

#include <doctest.h>

#include <functional>

using namespace nrf;
using namespace nrf::test;

namespace {

// Number of paths in an acyclic quiver, by depth-first search.
std::size_t count_paths(const Quiver& q) {
  std::size_t total = 0;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    ++total;
    for (auto a : q.arrows_from(v)) walk(q.arrow(a).target);
  };
  for (std::size_t v = 0; v < q.num_vertices(); ++v) walk(v);
  return total;
}

}  // namespace

TEST_CASE("path algebras of acyclic quivers have the path count as dimension") {
  for (const char* f : {"a2.alg", "a3_linear.alg", "a3_sink.alg", "d4.alg", "d5_symmetric.alg", "e6_symmetric.alg",
                        "kronecker.alg"}) {
    auto a = corpus(f);
    CHECK(a->dim() == count_paths(a->quiver()));
    CHECK(a->check_associativity());
  }
}

TEST_CASE("zero and commutativity relations") {
  auto r = corpus("a3_rad2.alg");
  CHECK(r->dim() == 5);
  auto sq = corpus("a2_x_a2.alg");
  CHECK(sq->dim() == 9);
  CHECK(sq->check_associativity());
}

TEST_CASE("tensor product dimension is the product") {
  auto a = a3_sink();
  auto t = tensor_product(a, a);
  CHECK(t->dim() == 25);
  CHECK(t->num_vertices() == 9);
  CHECK(t->check_associativity());
  // The hand-written file presents the same algebra.
  CHECK(corpus("a3sink_x_a3sink.alg")->dim() == 25);
}

TEST_CASE("opposite algebra reverses words and products") {
  auto a = a3_linear();
  auto op = opposite(a);
  CHECK(op->dim() == a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j) CHECK(op->product(j, i) == a->product(i, j));
}

TEST_CASE("malformed relations are rejected") {
  Quiver q({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}});
  Relation short_term;
  short_term.terms.push_back({1, Path{0, {2}}});
  CHECK_THROWS_AS(build_algebra(q, {short_term}), Error);
  Relation mixed;
  mixed.terms.push_back({1, Path{0, {0, 1}}});
  mixed.terms.push_back({-1, Path{0, {2}}});
  CHECK_THROWS_AS(build_algebra(q, {mixed}), Error);
  Relation broken;
  broken.terms.push_back({1, Path{0, {1, 0}}});
  CHECK_THROWS_AS(build_algebra(q, {broken}), Error);
}

TEST_CASE("an oriented cycle without relations is not finite-dimensional") {
  Quiver q({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}});
  try {
    build_algebra(q, {}, 12);
    FAIL("expected NotFiniteDimensional");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFiniteDimensional);
  }
  // with both length-two paths killed the algebra has dim 4
  auto a = build_algebra(q, {word(q, 0, {0, 1}), word(q, 1, {1, 0})});
  CHECK(a->dim() == 4);
}

TEST_CASE("presentation recovers quiver and dimension") {
  for (const char* f : {"a3_linear.alg", "a2_x_a2.alg", "a3_rad2.alg"}) {
    auto a = corpus(f);
    auto p = present_algebra(*a);
    CHECK(p.algebra->dim() == a->dim());
    CHECK(p.algebra->quiver().num_arrows() == a->quiver().num_arrows());
    CHECK(p.algebra->check_associativity());
  }
}

TEST_CASE("algebra morphisms") {
  auto a = a3_sink();
  AlgebraMorphism swap{{2, 1, 0}, {a->unit(*a->arrow_element(1)), a->unit(*a->arrow_element(0))}};
  CHECK_NOTHROW(check_morphism(*a, swap));
  AlgebraMorphism bad{{0, 1, 2}, {a->unit(*a->arrow_element(1)), a->unit(*a->arrow_element(0))}};
  CHECK_THROWS_AS(check_morphism(*a, bad), Error);
}
