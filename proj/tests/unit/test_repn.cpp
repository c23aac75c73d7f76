#include "util.hpp"

#include <doctest.h>

using namespace nrf;
using namespace nrf::test;

TEST_CASE("projectives and injectives have Cartan dimension vectors") {
  for (const char* f : {"a3_linear.alg", "a2_x_a2.alg", "a3_rad2.alg", "d4.alg"}) {
    auto a = corpus(f);
    Matrix c = cartan(*a);
    for (std::size_t i = 0; i < a->num_vertices(); ++i) {
      auto p = projective(a, i), inj = injective(a, i);
      CHECK(satisfies_relations(p));
      CHECK(satisfies_relations(inj));
      for (std::size_t j = 0; j < a->num_vertices(); ++j) {
        CHECK(Rational(static_cast<long>(p.dims[j])) == c(i, j));
        CHECK(Rational(static_cast<long>(inj.dims[j])) == c(j, i));
      }
    }
  }
}

TEST_CASE("property: Hom(P_i, M) and Hom(M, I_i) have dimension dim M_i") {
  std::mt19937_64 rng(17);
  for (const char* f : {"a3_sink.alg", "kronecker.alg", "d4.alg"}) {
    auto a = corpus(f);
    for (int t = 0; t < 10; ++t) {
      std::vector<std::size_t> dims;
      for (std::size_t v = 0; v < a->num_vertices(); ++v) dims.push_back(rng() % 3);
      Rep m = random_rep(a, dims, rng);
      for (std::size_t i = 0; i < a->num_vertices(); ++i) {
        CHECK(hom_dim(projective(a, i), m) == dims[i]);
        CHECK(hom_dim(m, injective(a, i)) == dims[i]);
      }
      for (const auto& f : hom(m, m)) CHECK(is_intertwiner(m, m, f));
    }
  }
}

TEST_CASE("property: change of basis gives an isomorphic module") {
  std::mt19937_64 rng(23);
  auto a = corpus("kronecker.alg");
  for (int t = 0; t < 20; ++t) {
    Rep m = random_rep(a, {2, 2}, rng);
    Rep n = change_basis(m, {random_invertible(rng, 2), random_invertible(rng, 2)});
    CHECK(is_isomorphic(m, n, t));
  }
  // regular modules with different parameters are not isomorphic
  Rep r0{a, {1, 1}, {from_rows({{1}}, 1), from_rows({{0}}, 1)}};
  Rep r1{a, {1, 1}, {from_rows({{1}}, 1), from_rows({{1}}, 1)}};
  CHECK_FALSE(is_isomorphic(r0, r1));
}

TEST_CASE("kernel, image and cokernel fit together") {
  std::mt19937_64 rng(29);
  auto a = a3_linear();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (const auto& f : hom(projective(a, i), projective(a, j))) {
        auto p = projective(a, i), q = projective(a, j);
        auto k = kernel(p, q, f), im = image(p, q, f), ck = cokernel(p, q, f);
        CHECK(k.rep.total_dim() + im.rep.total_dim() == p.total_dim());
        CHECK(im.rep.total_dim() + ck.rep.total_dim() == q.total_dim());
        CHECK(is_zero(compose(f, k.map)));
        CHECK(satisfies_relations(ck.rep));
      }
}

TEST_CASE("duality is an involution on dimension vectors") {
  auto a = a3_sink();
  auto op = opposite_of(a);
  for (std::size_t i = 0; i < 3; ++i) {
    Rep d = dual(projective(a, i), op);
    CHECK(is_isomorphic(d, injective(op, i)));
    CHECK(is_isomorphic(dual(d, a), projective(a, i)));
  }
}

TEST_CASE("Krull-Schmidt decomposition counts summands") {
  auto a = a3_linear();
  Rep m = direct_sum({projective(a, 0), projective(a, 1), projective(a, 0), simple(a, 1)}, a);
  auto d = decompose(m, 3);
  CHECK(d.certified);
  CHECK(d.count() == 4);
  CHECK(d.distinct() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(has_local_endomorphism_ring(projective(a, i)));
  CHECK_FALSE(has_local_endomorphism_ring(direct_sum(simple(a, 0), simple(a, 0))));
  std::mt19937_64 rng(1);
  Rep moved = change_basis(m, {random_invertible(rng, m.dims[0]), random_invertible(rng, m.dims[1]),
                               random_invertible(rng, m.dims[2])});
  CHECK(same_decomposition(d, decompose(moved, 9)));
}

TEST_CASE("property: decomposition is independent of the seed") {
  std::mt19937_64 rng(31);
  auto a = corpus("d4.alg");
  for (int t = 0; t < 8; ++t) {
    Rep m = random_rep(a, {1, 2, 1, 1}, rng);
    CHECK(decompose(m, 1).count() == decompose(m, 2).count());
  }
}
