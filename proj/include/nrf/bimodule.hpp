#pragma once

// Bimodules as representations of the enveloping algebra A (x) A^op.
//
// Vertex (x, v) of the enveloping algebra has index x * n + v and holds
// e_v B e_x: the A factor acts by post-composition (right action) and the
// A^op factor by pre-composition (left action). The regular bimodule has
// e_v A e_x = paths v -> x at (x, v).

#include "nrf/homology.hpp"
#include "nrf/presentation.hpp"

namespace nrf {

/// Cached: the same pointer is returned for the same algebra.
AlgebraPtr enveloping_of(const AlgebraPtr& a);

/// M (x)_K N over ab = tensor_product(m.alg, n.alg).
Rep outer_tensor(const Rep& m, const Rep& n, const AlgebraPtr& ab);

Rep regular_bimodule(const AlgebraPtr& a);
Rep dual_bimodule(const AlgebraPtr& a);
/// A_phi: right action twisted by phi. Throws NotAHomomorphism.
Rep twist_bimodule(const AlgebraPtr& a, const AlgebraMorphism& phi);

/// Restriction to the right action: the direct sum over v of e_v B.
Rep as_right_module(const Rep& b, const AlgebraPtr& a);
/// Restriction to the left action, as a representation of A^op.
Rep as_left_module(const Rep& b, const AlgebraPtr& a);

/// M (x)_A N. Basis vectors of the result are images of pairs of basis
/// vectors (m, n); `pairs` records them.
struct BimoduleTensor {
  Rep rep;
  struct Pair {
    std::size_t w, m, n;  // m in M(w, v), n in N(x, w)
  };
  std::vector<std::vector<Pair>> pairs;  // per enveloping vertex
  std::vector<std::vector<std::size_t>> offsets;  // raw block offsets per w
  std::vector<Matrix> projection;                 // raw -> quotient
};
BimoduleTensor tensor_over(const Rep& m, const Rep& n, const AlgebraPtr& a);

/// Ext^n_A(DA, A) with its bimodule structure, via a projective bimodule
/// resolution of DA.
Rep ext_dual_bimodule(const AlgebraPtr& a, std::size_t n, std::size_t cap);

struct TensorAlgebra {
  Presentation presentation;
  std::vector<std::size_t> degree_dims;  // dim of T^{(x) k} for k = 0, 1, ...
  AlgebraPtr algebra() const { return presentation.algebra; }
};

/// The graded algebra sum_k T^{(x)_A k}. Throws NotNilpotent when the
/// tensor powers do not vanish by degree `cap`.
TensorAlgebra tensor_algebra(const AlgebraPtr& a, const Rep& t, std::size_t cap);

}  // namespace nrf
