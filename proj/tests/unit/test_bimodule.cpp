#include "util.hpp"

#include <doctest.h>

using namespace nrf;
using namespace nrf::test;

namespace {

bool nonnegative_nonzero(const Vector& v) {
  bool any = false;
  for (const auto& x : v) {
    if (sgn(x) < 0) return false;
    any = any || sgn(x) > 0;
  }
  return any;
}

Rational total(const Vector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

// Dimensions of sum_i tau^{-k} P_i for a hereditary algebra of finite type,
// from the inverse Coxeter matrix alone.
std::vector<std::size_t> preprojective_degree_dims(const Algebra& a) {
  Matrix phi_inv = *inverse(coxeter(a));
  Matrix c = cartan(a);
  std::vector<std::size_t> out;
  std::vector<Vector> cur;
  for (std::size_t i = 0; i < a.num_vertices(); ++i) {
    Vector row;
    for (std::size_t j = 0; j < a.num_vertices(); ++j) row.push_back(c(i, j));
    cur.push_back(row);
  }
  while (!cur.empty()) {
    Rational s = 0;
    for (const auto& v : cur) s += total(v);
    out.push_back(static_cast<std::size_t>(s.get_num().get_ui()));
    std::vector<Vector> next;
    for (const auto& v : cur) {
      Vector w = row_times(v, phi_inv);
      if (nonnegative_nonzero(w)) next.push_back(w);
    }
    cur = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("regular and dual bimodules") {
  for (auto a : {a2(), a3_sink(), corpus("a2_x_a2.alg")}) {
    auto env = enveloping_of(a);
    CHECK(env == enveloping_of(a));
    Rep r = regular_bimodule(a), d = dual_bimodule(a);
    CHECK(r.alg == env);
    CHECK(satisfies_relations(r));
    CHECK(satisfies_relations(d));
    CHECK(r.total_dim() == a->dim());
    CHECK(d.total_dim() == a->dim());
    CHECK(is_isomorphic(as_right_module(r, a), regular(a)));
    CHECK(is_isomorphic(as_right_module(d, a), dual_regular(a)));
    CHECK(is_isomorphic(as_left_module(r, a), regular(opposite_of(a))));
  }
}

TEST_CASE("A tensored over A with a bimodule is the bimodule") {
  for (auto a : {a3_linear(), corpus("a3_rad2.alg")}) {
    Rep r = regular_bimodule(a), d = dual_bimodule(a);
    CHECK(is_isomorphic(tensor_over(r, r, a).rep, r));
    CHECK(is_isomorphic(tensor_over(r, d, a).rep, d));
    CHECK(is_isomorphic(tensor_over(d, r, a).rep, d));
  }
}

TEST_CASE("twisting by an automorphism") {
  auto a = a3_sink();
  CHECK(is_isomorphic(twist_bimodule(a, identity_morphism(*a)), regular_bimodule(a)));
  AlgebraMorphism swap{{2, 1, 0}, {a->unit(*a->arrow_element(1)), a->unit(*a->arrow_element(0))}};
  Rep t = twist_bimodule(a, swap);
  CHECK(t.total_dim() == a->dim());
  CHECK(satisfies_relations(t));
  CHECK_FALSE(is_isomorphic(t, regular_bimodule(a)));
  AlgebraMorphism bad{{0, 1, 2}, {a->unit(*a->arrow_element(1)), a->unit(*a->arrow_element(0))}};
  CHECK_THROWS_AS(twist_bimodule(a, bad), Error);
}

TEST_CASE("outer tensor of projectives is projective") {
  auto a = a2(), b = a3_sink();
  auto ab = tensor_product(a, b);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      Rep t = outer_tensor(projective(a, x), projective(b, y), ab);
      CHECK(is_isomorphic(t, projective(ab, x * 3 + y)));
    }
}

TEST_CASE("tensor powers of the higher extension bimodule follow the Coxeter oracle") {
  for (const char* f : {"a2.alg", "a3_linear.alg", "a3_sink.alg", "d4.alg", "a4_linear.alg"}) {
    auto a = corpus(f);
    auto expected = preprojective_degree_dims(*a);
    Rep t = ext_dual_bimodule(a, 1, 8);
    REQUIRE(expected.size() >= 2);
    CHECK(t.total_dim() == expected[1]);
    auto ta = tensor_algebra(a, t, 16);
    CHECK(ta.degree_dims == expected);
    std::size_t sum = 0;
    for (auto d : expected) sum += d;
    CHECK(ta.algebra()->dim() == sum);
  }
}
