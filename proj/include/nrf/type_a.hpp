#pragma once

// The quivers Q^(n,s), the algebras Gamma^(n,s), cuts and their truncations.

#include "nrf/ar.hpp"
#include "nrf/dynkin.hpp"

#include <set>
#include <string>
#include <vector>

namespace nrf {

struct TypeAQuiver {
  std::size_t n = 1, s = 1;
  std::vector<std::vector<int>> points;  // vertex coordinates, sum s - 1
  std::vector<std::size_t> arrow_type;   // i in 1..n+1 for x -> x + f_i
  Quiver quiver;
  std::optional<std::size_t> vertex_of(const std::vector<int>& x) const;
};

/// Vertices in lexicographically decreasing order of coordinates.
TypeAQuiver type_a_quiver(std::size_t n, std::size_t s);
/// Vector f_i (1-based i).
std::vector<int> f_vector(std::size_t n, std::size_t i);

AlgebraPtr gamma_algebra(const TypeAQuiver& q);
std::vector<Relation> gamma_relations(const TypeAQuiver& q);

using Cut = std::set<std::size_t>;  // arrow indices

/// Arrow sets of the (n+1)-cycles.
std::vector<std::set<std::size_t>> cycles(const TypeAQuiver& q);
bool is_cut(const TypeAQuiver& q, const Cut& c);
std::vector<Cut> enumerate_cuts(const TypeAQuiver& q);

std::size_t omega_vertex(const TypeAQuiver& q, std::size_t v);
std::size_t omega_arrow(const TypeAQuiver& q, std::size_t a);
Cut omega_on_cuts(const TypeAQuiver& q, const Cut& c);

/// Gamma / <C>. Throws NotACut.
AlgebraPtr cut_algebra(const TypeAQuiver& q, const Cut& c);
/// A / <arrows> for an algebra given by a quiver with relations.
AlgebraPtr kill_arrows(const AlgebraPtr& a, const std::set<std::size_t>& arrows);

/// For n = 1: the orientation of A_s left after removing the cut, with
/// vertex (s-1-k, k) of Q^(1,s) becoming vertex k+1.
DynkinSpec cut_to_orientation(const TypeAQuiver& q, const Cut& c);

/// (s + n) / (n + 1) when integral.
std::optional<std::size_t> homogeneous_ell(std::size_t n, std::size_t s);

struct CutVerdict {
  Cut cut;
  bool omega_stable = false;
  NrfReport report;
};

struct TypeAReport {
  std::size_t n = 0, s = 0;
  std::size_t vertices = 0, arrows = 0, num_cycles = 0;
  std::vector<CutVerdict> cuts;
  std::size_t omega_stable = 0;
  std::size_t omega_stable_classes = 0;  // up to isomorphism of cut algebras
  std::optional<std::size_t> expected_ell;
  std::size_t expected_b = 0;  // C(s+n, n+1)
  bool all_nrf = true;
  bool homogeneous_iff_stable = true;
  bool ell_matches = true;
  bool b_matches = true;
  bool a_matches = true;
  bool passed() const { return all_nrf && homogeneous_iff_stable && ell_matches && b_matches && a_matches; }
};

struct TypeAOptions {
  bool omega_stable_only = false;
  bool parallel = true;  // fan out over cuts
  NrfOptions nrf;
};

/// Decides every cut algebra of Q^(n,s) and compares a, b, ell and
/// homogeneity with the values predicted from (n, s) and omega-stability.
TypeAReport verify_type_a_cuts(std::size_t n, std::size_t s, const TypeAOptions& opt = {});

/// Number of isomorphism classes among the algebras, where an isomorphism
/// is a quiver isomorphism sending arrows to arrows and relations into the
/// ideal of the target.
std::size_t count_isomorphism_classes(const std::vector<AlgebraPtr>& algs);
bool arrow_isomorphic(const AlgebraPtr& a, const AlgebraPtr& b);

/// Checks the socle pairing of Gamma^(n,s) twisted by omega: every basis
/// path p from x to z has exactly one basis partner q from z to omega(x)
/// with multidegree g(pq) = x and pq != 0, the pairing is nondegenerate,
/// and lambda(a u) = lambda(u omega(a)) for arrows a. On failure the
/// offending path is written to `failure`.
bool verify_nakayama_bijection(const TypeAQuiver& q, const AlgebraPtr& g, std::string* failure = nullptr);

/// Multidegree g of a basis element of an algebra on Q^(n,s).
std::vector<int> multidegree(const TypeAQuiver& q, const Algebra& g, std::size_t basis_index);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace nrf
