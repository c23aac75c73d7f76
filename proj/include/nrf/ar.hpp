#pragma once

// Higher Auslander-Reiten translates, the n-representation-finite decision
// procedure, preprojective algebras and n-Auslander algebras.

#include "nrf/bimodule.hpp"
#include "nrf/decompose.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nrf {

/// Tor_n(DA, m) = H^{-n}(nu P_m).
Rep tau_n(const Rep& m, std::size_t n, std::size_t cap);
/// Ext^n(DA, m) = H^n(nu^{-1} m).
Rep tau_n_minus(const Rep& m, std::size_t n, std::size_t cap);

/// Projective iff the projective cover has the same dimension.
bool is_projective(const Rep& m);
std::optional<std::size_t> as_indecomposable_projective(const Rep& m);

enum class Verdict { False, True, Undecided };
const char* to_string(Verdict v);

struct NrfReport {
  std::size_t n = 0;
  Verdict is_nrf = Verdict::False;
  std::string reason;  // first failed check, or the cap that was hit
  std::size_t gl_dim = 0;
  bool gl_dim_known = false;
  std::size_t a = 0;  // number of simples
  std::size_t b = 0;  // sum of orbit lengths
  /// orbit_table[i] = I_i, tau_n I_i, ..., ending at P_{sigma(i)}.
  std::vector<std::vector<Rep>> orbit_table;
  std::vector<std::size_t> ell;
  std::vector<std::size_t> sigma;
  bool homogeneous = false;
  bool ring_indecomposable = false;
  Rep cluster_tilting;
  std::vector<Rep> summands;  // one per orbit entry, pairwise non-isomorphic
};

struct NrfOptions {
  std::size_t cap = 0;  // 0 means default_cap(a)
  std::uint64_t seed = 0;
  bool parallel = true;  // fan out over injectives
};

NrfReport decide_nrf(const AlgebraPtr& a, std::size_t n, const NrfOptions& opt = {});

/// All orbit lengths equal. Throws logic_error when this disagrees with
/// the sigma-invariance of the lengths on a ring-indecomposable input.
bool homogeneity(const NrfReport& r);

/// Tensor algebra of Ext^n(DA, A). Throws NotNRF unless decide_nrf says
/// true (reusing `known` when given) and NotSelfinjective if the result is
/// not selfinjective.
TensorAlgebra preprojective(const AlgebraPtr& a, std::size_t n, std::size_t cap, const NrfReport* known = nullptr);

struct AuslanderAlgebra {
  Presentation presentation;
  /// hom_basis[i][j] = basis of Hom(M_i, M_j); basis element k of the
  /// structure constants is a map M_source -> M_target, and the product
  /// f*g is g after f.
  std::vector<std::vector<std::vector<Morphism>>> hom_basis;
  std::size_t dim = 0;
  AlgebraPtr algebra() const { return presentation.algebra; }
};

/// Endomorphism algebra of the direct sum of pairwise non-isomorphic
/// indecomposables (each with local endomorphism ring).
AuslanderAlgebra auslander_algebra(const std::vector<Rep>& summands);

/// sum_{k=0}^{ell-1} (ell - k) dim T^{(x) k}, with T^{(x) 0} = A.
std::size_t triangular_dimension(const std::vector<std::size_t>& tensor_power_dims, std::size_t ell);

struct TensorNrf {
  AlgebraPtr algebra;
  NrfReport report;
  /// sum over i < ell of the outer tensor of tau^{-i} A_j.
  Rep formula_module;
  std::size_t formula_summands = 0;
  bool formula_matches = false;
};

/// Factors must each be ell-homogeneous n_i-RF (FactorNotHomogeneous
/// otherwise).
TensorNrf tensor_nrf(const std::vector<std::pair<AlgebraPtr, std::size_t>>& factors, std::size_t ell,
                     const NrfOptions& opt = {});

}  // namespace nrf
