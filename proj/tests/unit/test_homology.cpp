#include "util.hpp"

#include <doctest.h>

using namespace nrf;
using namespace nrf::test;

namespace {

std::vector<Rep> test_modules(const AlgebraPtr& a) {
  std::vector<Rep> out;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    out.push_back(projective(a, v));
    out.push_back(injective(a, v));
    out.push_back(simple(a, v));
  }
  return out;
}

// Euler form <x, y> = x C^{-1} y^T on dimension vectors.
Rational euler_form(const Matrix& c_inv, const Vector& x, const Vector& y) {
  Vector t = row_times(x, c_inv);
  Rational s = 0;
  for (std::size_t i = 0; i < y.size(); ++i) s += t[i] * y[i];
  return s;
}

}  // namespace

TEST_CASE("global dimensions") {
  CHECK(global_dimension(a2(), 8) == 1);
  CHECK(global_dimension(corpus("d4.alg"), 8) == 1);
  CHECK(global_dimension(corpus("a3_rad2.alg"), 8) == 2);
  CHECK(global_dimension(corpus("a2_x_a2.alg"), 8) == 2);
  CHECK(global_dimension(corpus("a3sink_x_a3sink.alg"), 8) == 2);
  auto sem = quiver_algebra({"1"}, {});
  CHECK(global_dimension(sem, 8) == 0);
}

TEST_CASE("ext between simples of A2") {
  auto a = a2();
  CHECK(ext_dim(1, simple(a, 0), simple(a, 1), 4) == 1);
  CHECK(ext_dim(1, simple(a, 1), simple(a, 0), 4) == 0);
  CHECK(ext_dim(0, simple(a, 0), simple(a, 0), 4) == 1);
  CHECK(ext_dim(2, simple(a, 0), simple(a, 1), 4) == 0);
}

TEST_CASE("property: alternating sum of ext dimensions is the Euler form") {
  for (const char* f : {"a3_linear.alg", "a3_rad2.alg", "a2_x_a2.alg", "kronecker.alg"}) {
    auto a = corpus(f);
    std::size_t gd = global_dimension(a, 8);
    Matrix c_inv = *inverse(cartan(*a));
    auto mods = test_modules(a);
    for (const auto& m : mods) {
      auto res = min_proj_resolution(m, 8);
      CHECK(d_squared_zero(res.complex));
      CHECK(is_minimal(res.complex));
      CHECK(res.projective_dimension <= gd);
      for (const auto& n : mods) {
        Rational chi = 0;
        for (std::size_t i = 0; i <= gd; ++i) {
          auto e = static_cast<long>(ext_dim(i, res.complex, n));
          chi += (i % 2 ? -e : e);
        }
        CHECK(chi == euler_form(c_inv, dim_row(m), dim_row(n)));
      }
    }
  }
}

TEST_CASE("resolution of the simple at a source of A3") {
  auto a = a3_linear();
  auto r = min_proj_resolution(simple(a, 0), 8);
  CHECK(r.projective_dimension == 1);
  CHECK(r.complex.rank() == 2);
  auto proj = min_proj_resolution(projective(a, 0), 8);
  CHECK(proj.projective_dimension == 0);
}

TEST_CASE("property: the injective complex realizes the module") {
  for (const char* f : {"a3_rad2.alg", "a2_x_a2.alg", "d4.alg"}) {
    auto a = corpus(f);
    for (const auto& m : test_modules(a)) {
      auto q = to_injective_complex(stalk(m), 8);
      auto x = realize(q, nakayama_functor(a));
      CHECK(d_squared_zero(x));
      CHECK(cohomology_support(x) == std::vector<int>{0});
      CHECK(is_isomorphic(cohomology(x, 0), m));
    }
  }
}

TEST_CASE("the Nakayama functor sends projectives to injectives") {
  auto a = corpus("a2_x_a2.alg");
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    auto x = realize(nakayama(shift(projective_resolution(projective(a, v), 8), 0), 8), identity_functor(a));
    CHECK(is_isomorphic(cohomology(x, 0), injective(a, v)));
  }
}

TEST_CASE("selfinjective Nakayama algebra with two vertices") {
  Quiver q({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}});
  auto a = build_algebra(q, {word(q, 0, {0, 1}), word(q, 1, {1, 0})});
  CHECK(is_selfinjective(a));
  CHECK(nakayama_permutation(a) == std::vector<std::size_t>{1, 0});
  CHECK(dominant_dimension(a, 8).infinite);
  CHECK_FALSE(is_selfinjective(a2()));
  try {
    nakayama_permutation(a2());
    FAIL("expected NotSelfinjective");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSelfinjective);
  }
}

TEST_CASE("capped resolutions report CapExceeded") {
  Quiver q({"1"}, {{"x", 0, 0}});
  auto a = build_algebra(q, {word(q, 0, {0, 0})});
  CHECK(a->dim() == 2);
  try {
    min_proj_resolution(simple(a, 0), 5);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  try {
    global_dimension(a, 5);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}
