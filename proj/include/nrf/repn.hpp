#pragma once

// Finite-dimensional representations of a bound quiver.
//
// A representation assigns a space K^{dims[x]} to each vertex and to each
// arrow a: x -> y a dims[y] x dims[x] matrix acting on column vectors.
// The basis element with word (a1, ..., ak) therefore acts as
// M_{ak} * ... * M_{a1}.

#include "nrf/algebra.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nrf {

struct Rep {
  AlgebraPtr alg;
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;

  std::size_t total_dim() const;
  /// Matrix of a basis element, dims[target] x dims[source].
  Matrix action(std::size_t basis_index) const;
  /// Matrix of a linear combination of basis elements from x to y.
  Matrix action(const SparseVec& element, std::size_t x, std::size_t y) const;
  bool is_zero() const { return total_dim() == 0; }
  std::vector<std::size_t> dim_vector() const { return dims; }
};

/// A homomorphism given by one matrix per vertex.
struct Morphism {
  std::vector<Matrix> comps;
};

Rep zero_rep(const AlgebraPtr& a);
/// True iff every relation acts as zero.
bool satisfies_relations(const Rep& m);

/// P_i: basis paths starting at i; an arrow acts by right multiplication.
Rep projective(const AlgebraPtr& a, std::size_t i);
/// I_i: dual of the paths ending at i.
Rep injective(const AlgebraPtr& a, std::size_t i);
Rep simple(const AlgebraPtr& a, std::size_t i);
Rep regular(const AlgebraPtr& a);
Rep dual_regular(const AlgebraPtr& a);

Rep direct_sum(const Rep& a, const Rep& b);
Rep direct_sum(const std::vector<Rep>& parts, const AlgebraPtr& a);

/// Vertex spaces dualized and arrow matrices transposed; `op` must be the
/// opposite algebra of m.alg.
Rep dual(const Rep& m, const AlgebraPtr& op);
Morphism dual(const Morphism& f);

Morphism identity(const Rep& m);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, const Rational& c);
bool is_zero(const Morphism& f);
bool is_intertwiner(const Rep& m, const Rep& n, const Morphism& f);
bool is_invertible(const Morphism& f);

/// Basis of Hom(m, n).
std::vector<Morphism> hom(const Rep& m, const Rep& n);
std::size_t hom_dim(const Rep& m, const Rep& n);

struct SubRep {
  Rep rep;
  Morphism map;  // inclusion (kernel, image) or projection (cokernel)
};

SubRep kernel(const Rep& m, const Rep& n, const Morphism& f);
SubRep image(const Rep& m, const Rep& n, const Morphism& f);
SubRep cokernel(const Rep& m, const Rep& n, const Morphism& f);
/// Subrepresentation spanned by the given columns at each vertex; the
/// columns must be independent and the span closed under the arrows.
SubRep subrep(const Rep& m, const std::vector<Matrix>& spans);

/// Radical rad m = sum of images of arrows, as subspaces per vertex.
std::vector<Matrix> radical_spans(const Rep& m);
std::vector<std::size_t> top_dims(const Rep& m);

/// m transported along invertible vertex matrices g: new maps g_y M_a g_x^{-1}.
Rep change_basis(const Rep& m, const std::vector<Matrix>& g);

/// Exact isomorphism test. Dimension vectors, then seeded random elements
/// of Hom(m, n) checked for invertibility, then a comparison of
/// Krull-Schmidt decompositions.
bool is_isomorphic(const Rep& m, const Rep& n, std::uint64_t seed = 0);

// Column-space helpers shared by the homology code.
/// Independent columns spanning the column space of m.
Matrix column_basis(const Matrix& m);
Matrix kernel_basis(const Matrix& m);
/// Solves basis * X = v for X (v given column-wise); nullopt if some
/// column is outside the span.
std::optional<Matrix> coordinates_in(const Matrix& basis, const Matrix& v);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

}  // namespace nrf
