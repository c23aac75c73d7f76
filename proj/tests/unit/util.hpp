#pragma once

#include "nrf/algebra_file.hpp"
#include "nrf/report.hpp"
#include "nrf/ar.hpp"
#include "nrf/cy.hpp"
#include "nrf/type_a.hpp"

#include <string>

namespace nrf::test {

inline AlgebraPtr corpus(const std::string& name) {
  return to_algebra(load_algebra_file(std::string(NRF_CORPUS_DIR) + "/" + name));
}

inline AlgebraPtr quiver_algebra(std::vector<std::string> v, std::vector<Arrow> a, std::vector<Relation> r = {}) {
  return build_algebra(Quiver(std::move(v), std::move(a)), std::move(r));
}

inline AlgebraPtr a2() { return quiver_algebra({"1", "2"}, {{"a", 0, 1}}); }
inline AlgebraPtr a3_linear() { return quiver_algebra({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}); }
inline AlgebraPtr a3_sink() { return quiver_algebra({"1", "2", "3"}, {{"a", 0, 1}, {"b", 2, 1}}); }
inline AlgebraPtr kronecker() { return quiver_algebra({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}}); }

inline Relation word(const Quiver& q, std::size_t src, std::vector<std::size_t> arrows, Rational c = 1) {
  (void)q;
  Relation r;
  r.terms.push_back({c, Path{src, std::move(arrows)}});
  return r;
}

}  // namespace nrf::test

#include <random>

namespace nrf::test {

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (inverse(m)) return m;
  }
}

/// Random representation of a path algebra (no relations to satisfy).
inline Rep random_rep(const AlgebraPtr& a, const std::vector<std::size_t>& dims, std::mt19937_64& rng) {
  Rep m{a, dims, {}};
  for (const auto& ar : a->quiver().arrows()) m.maps.push_back(random_matrix(rng, dims[ar.target], dims[ar.source]));
  return m;
}

/// Cartan matrix C(i, j) = dim e_i A e_j; row i is the dimension vector of P_i.
inline Matrix cartan(const Algebra& a) {
  std::size_t n = a.num_vertices();
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = static_cast<long>(a.between(i, j).size());
  return c;
}

inline Vector dim_row(const Rep& m) {
  Vector v;
  for (auto d : m.dims) v.push_back(static_cast<long>(d));
  return v;
}

/// v * M for a row vector v.
inline Vector row_times(const Vector& v, const Matrix& m) { return nrf::apply(transpose(m), v); }

/// Coxeter matrix -C^{-1} C^T: sends dim P_i to -dim I_i.
inline Matrix coxeter(const Algebra& a) {
  Matrix c = cartan(a);
  return scale(multiply(*inverse(c), transpose(c)), -1);
}

}  // namespace nrf::test
