#pragma once

// Krull-Schmidt decomposition by Fitting splitting.

#include "nrf/repn.hpp"

#include <cstdint>
#include <vector>

namespace nrf {

struct Summand {
  Rep rep;
  std::size_t multiplicity = 1;
};

struct Decomposition {
  std::vector<Summand> summands;
  /// False when some summand could be neither split nor certified
  /// indecomposable (its endomorphism ring modulo radical is a division
  /// algebra larger than the base field, or splitting was not found).
  bool certified = true;

  std::size_t count() const;  // with multiplicity
  std::size_t distinct() const { return summands.size(); }
};

/// Certifies indecomposability of m: End(m)/rad End(m) is one-dimensional.
/// The radical is the kernel of the trace form (characteristic zero).
bool has_local_endomorphism_ring(const Rep& m);

/// Seeded and deterministic per seed.
Decomposition decompose(const Rep& m, std::uint64_t seed = 0);

/// Compares two decompositions summand by summand.
bool same_decomposition(const Decomposition& a, const Decomposition& b, std::uint64_t seed = 0);

/// Isomorphism test for modules already known to be indecomposable: a
/// random element of Hom is invertible iff they are isomorphic (the
/// non-invertible maps form a proper subspace).
bool indecomposables_isomorphic(const Rep& a, const Rep& b, std::uint64_t seed = 0);

}  // namespace nrf
