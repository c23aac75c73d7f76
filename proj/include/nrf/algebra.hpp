#pragma once

// Finite-dimensional algebras KQ/I with an explicit path basis.
//
// Paths compose left to right: the basis element with word (a, b) is the
// residue of "a first, then b". A basis element with source x and target y
// lies in e_x A e_y under this convention, and product(i, j) is nonzero only
// when target(i) == source(j).

#include "nrf/linalg.hpp"
#include "nrf/quiver.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nrf {

struct BasisElement {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> word;
  std::size_t degree() const { return word.size(); }
};

class Algebra {
public:
  using ProductFn = std::function<SparseVec(std::size_t, std::size_t)>;

  /// Assembles an algebra from a basis of path words and a product rule.
  /// `product` is called once per composable pair. The words must be paths
  /// in `q` and degree-0 words must be exactly the vertex idempotents.
  Algebra(Quiver q, std::vector<Relation> relations, std::vector<BasisElement> basis, const ProductFn& product);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t num_vertices() const { return quiver_.num_vertices(); }
  const BasisElement& basis(std::size_t i) const { return basis_.at(i); }
  const std::vector<BasisElement>& basis() const { return basis_; }

  std::size_t vertex_element(std::size_t v) const { return vertex_elem_.at(v); }
  std::optional<std::size_t> arrow_element(std::size_t a) const;
  const std::vector<std::size_t>& starting_at(std::size_t v) const { return starts_.at(v); }
  const std::vector<std::size_t>& ending_at(std::size_t v) const { return ends_.at(v); }
  /// Basis elements with the given source and target, in basis order.
  std::vector<std::size_t> between(std::size_t source, std::size_t target) const;

  /// Product of basis elements i then j (empty when not composable).
  const SparseVec& product(std::size_t i, std::size_t j) const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  /// x times the arrow a (x first).
  SparseVec right_arrow(const SparseVec& x, std::size_t a) const;
  /// Residue class of a path.
  SparseVec path_element(const Path& p) const;
  SparseVec unit(std::size_t i) const { return SparseVec{{i, Rational(1)}}; }

  std::size_t max_degree() const;
  /// Checks associativity on all composable triples when the number of
  /// triples is at most `limit`, otherwise on a deterministic sample.
  bool check_associativity(std::size_t limit = 200000) const;

  std::string name;

private:
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<BasisElement> basis_;
  std::vector<std::size_t> vertex_elem_;
  std::vector<std::optional<std::size_t>> arrow_elem_;
  std::vector<std::vector<std::size_t>> starts_, ends_;
  std::vector<std::size_t> pos_in_start_;
  std::vector<std::vector<SparseVec>> prod_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline constexpr std::size_t kDefaultLengthCap = 64;

/// Graded basis computation of KQ/<rels>. Throws MalformedRelation or
/// NotFiniteDimensional.
AlgebraPtr build_algebra(const Quiver& q, std::vector<Relation> rels, std::size_t length_cap = kDefaultLengthCap);
AlgebraPtr path_algebra(const Quiver& q, std::size_t length_cap = kDefaultLengthCap);

/// Reversed quiver; basis element i of the result is basis element i of `a`
/// read backwards.
AlgebraPtr opposite(const AlgebraPtr& a);

/// Basis element (i, j) has index i * b.dim() + j; vertex (x, y) has index
/// x * b.num_vertices() + y. Arrows alpha x id come first, then id x beta.
AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b);
AlgebraPtr enveloping(const AlgebraPtr& a);

/// The one-vertex algebra K.
AlgebraPtr ground_field();

/// True if the two algebras have the same quiver shape and identical
/// structure constants on their bases.
bool same_basis_data(const Algebra& a, const Algebra& b);

/// Algebra morphism determined on vertices (a map of vertex idempotents)
/// and on arrows.
struct AlgebraMorphism {
  std::vector<std::size_t> vertex_map;
  std::vector<SparseVec> arrow_images;
};

/// Image of a basis element under phi, or NotAHomomorphism when phi is
/// inconsistent with vertices or relations.
SparseVec apply_morphism(const Algebra& a, const AlgebraMorphism& phi, std::size_t basis_index);
void check_morphism(const Algebra& a, const AlgebraMorphism& phi);
AlgebraMorphism identity_morphism(const Algebra& a);

}  // namespace nrf
