#pragma once

// Bounded complexes. Two flavours:
//  * Complex: arbitrary representations in each degree, d^k : X^k -> X^{k+1}.
//  * ProjComplex: a compact description of a complex of indecomposable
//    projectives. Degree k holds summands P_{v} for v in verts[k]; the
//    differential entry diff[k][b][a] is an algebra element with source
//    v_b and target v_a, acting P_{v_a} -> P_{v_b} by left multiplication.
//
// A ProjComplex can be realized through any additive functor on
// projectives (the identity, the Nakayama functor, tensor products of
// these over enveloping algebras).

#include "nrf/repn.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace nrf {

struct Complex {
  AlgebraPtr alg;
  int lo = 0;
  std::vector<Rep> terms;       // terms[k] sits in degree lo + k
  std::vector<Morphism> diffs;  // diffs[k] : terms[k] -> terms[k+1]

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool empty() const { return terms.empty(); }
  Rep term(int deg) const;
};

Complex stalk(const Rep& m, int degree = 0);
/// X[s]: (X[s])^k = X^{k+s}, so [1] moves terms one degree to the left.
Complex shift(const Complex& x, int s);
Rep cohomology(const Complex& x, int degree);
/// Degrees with nonzero cohomology.
std::vector<int> cohomology_support(const Complex& x);
bool d_squared_zero(const Complex& x);

struct ProjComplex {
  AlgebraPtr alg;
  int lo = 0;
  std::vector<std::vector<std::size_t>> verts;
  std::vector<std::vector<std::vector<SparseVec>>> diff;  // diff[k] : degree lo+k -> lo+k+1

  int hi() const { return lo + static_cast<int>(verts.size()) - 1; }
  bool is_zero() const;
  std::size_t rank() const;  // total number of indecomposable summands
};

ProjComplex shift(const ProjComplex& p, int s);
bool d_squared_zero(const ProjComplex& p);
/// Minimal: no differential entry has a nonzero idempotent component.
bool is_minimal(const ProjComplex& p);
/// Removes contractible summands P_v -> P_v by Gaussian elimination.
ProjComplex minimize(const ProjComplex& p);

/// An additive functor on proj(source), given on indecomposables and on
/// basis elements: morphism(b) for b with source s, target t is the map
/// F(P_t) -> F(P_s) (the image of left multiplication by b).
class ProjFunctor {
public:
  ProjFunctor(AlgebraPtr source, AlgebraPtr target, std::function<Rep(std::size_t)> object,
              std::function<Morphism(std::size_t)> morphism);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const Rep& object(std::size_t v) const;
  const Morphism& morphism(std::size_t b) const;
  /// Image of a linear combination of basis elements from (source s, target t).
  Morphism morphism(const SparseVec& element, std::size_t s, std::size_t t) const;

private:
  AlgebraPtr source_, target_;
  std::function<Rep(std::size_t)> make_object_;
  std::function<Morphism(std::size_t)> make_morphism_;
  mutable std::vector<std::optional<Rep>> objects_;
  mutable std::vector<std::optional<Morphism>> morphisms_;
};

ProjFunctor identity_functor(const AlgebraPtr& a);
/// nu = D Hom(-, A): P_v |-> I_v.
ProjFunctor nakayama_functor(const AlgebraPtr& a);
/// F (x) G on projectives of source(F) (x) source(G), landing in
/// representations of `target` = target(F) (x) target(G) (vertex and basis
/// indexing as in tensor_product).
ProjFunctor tensor_functor(const ProjFunctor& f, const ProjFunctor& g, const AlgebraPtr& source,
                           const AlgebraPtr& target);

Complex realize(const ProjComplex& p, const ProjFunctor& f);
Complex realize(const ProjComplex& p);  // identity functor

/// Quasi-isomorphic minimal complex of projectives, built from the top
/// degree down by covering cocycles of the mapping cone. Throws
/// CapExceeded when more than `cap` degrees below the support are needed.
ProjComplex to_projective_complex(const Complex& x, std::size_t cap);
ProjComplex projective_resolution(const Rep& m, std::size_t cap);

/// Data Q with realize(Q, nakayama_functor(A)) quasi-isomorphic to x, i.e.
/// a complex of injectives; obtained by duality from the opposite algebra.
ProjComplex to_injective_complex(const Complex& x, std::size_t cap);

/// dim Hom_D(P, Y) for P a bounded complex of projectives: degree-zero
/// chain maps modulo homotopy.
std::size_t hom_derived_dim(const ProjComplex& p, const Complex& y);

/// 4 * (number of vertices) + 8.
std::size_t default_cap(const Algebra& a);

/// Cached opposite: opposite_of(opposite_of(a)) == a.
AlgebraPtr opposite_of(const AlgebraPtr& a);

}  // namespace nrf
