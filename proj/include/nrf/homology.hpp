#pragma once

// Resolutions, Ext and Tor, global and dominant dimension, and the derived
// Nakayama functor on complexes of projectives.

#include "nrf/complex.hpp"

#include <optional>
#include <vector>

namespace nrf {

struct ProjectiveCover {
  std::vector<std::size_t> verts;  // P = sum of P_v
  Rep p;
  Morphism epi;
};

ProjectiveCover projective_cover(const Rep& m);

struct Resolution {
  ProjComplex complex;  // terms in degrees -pd .. 0
  std::size_t projective_dimension = 0;
  bool minimal = true;
};

/// Throws CapExceeded when the resolution is longer than max_len.
Resolution min_proj_resolution(const Rep& m, std::size_t max_len);

/// dim Ext^i(m, n) = dim Hom_D(m, n[i]).
std::size_t ext_dim(std::size_t i, const Rep& m, const Rep& n, std::size_t cap);
/// Same, reusing a projective resolution of m.
std::size_t ext_dim(std::size_t i, const ProjComplex& pm, const Rep& n);

/// Functor P_v |-> P_v (x) B for a bimodule B given as a representation of
/// A (x) A^op (see bimodule.hpp for the vertex convention).
ProjFunctor bimodule_functor(const Rep& b, const AlgebraPtr& a);
/// Tor_i(m, B) with its leftover module structure.
Rep tor(std::size_t i, const Rep& b_bimodule, const Rep& m, std::size_t cap);
/// Tor_i(m, D A), computed through the Nakayama functor.
Rep tor_dual(std::size_t i, const Rep& m, std::size_t cap);

/// Throws CapExceeded if some simple has projective dimension > cap.
std::size_t global_dimension(const AlgebraPtr& a, std::size_t cap);

struct DominantDimension {
  std::size_t value = 0;
  bool infinite = false;  // every term of the coresolution is projective
};
DominantDimension dominant_dimension(const AlgebraPtr& a, std::size_t cap);

ProjComplex stalk_regular(const AlgebraPtr& a);
ProjComplex nakayama(const ProjComplex& p, std::size_t cap);
ProjComplex nakayama_power(const ProjComplex& p, std::size_t k, std::size_t cap);
ProjComplex nakayama_inverse(const ProjComplex& p, std::size_t cap);
/// nu_n = nu o [-n].
ProjComplex shifted_nakayama(const ProjComplex& p, std::size_t n, std::size_t cap);
ProjComplex shifted_nakayama_inverse(const ProjComplex& p, std::size_t n, std::size_t cap);

/// m with H^{-m}(p) the only cohomology and H^{-m}(p) isomorphic to A.
std::optional<int> is_shifted_regular(const ProjComplex& p, std::uint64_t seed = 0);

/// I_v is projective iff it is isomorphic to some P_w; returns w.
std::optional<std::size_t> injective_as_projective(const AlgebraPtr& a, std::size_t v);
bool is_selfinjective(const AlgebraPtr& a);
/// i |-> j with I_i isomorphic to P_j; throws NotSelfinjective.
std::vector<std::size_t> nakayama_permutation(const AlgebraPtr& a);

}  // namespace nrf
