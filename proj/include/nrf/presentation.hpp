#pragma once

// Recovering a quiver-with-relations presentation from structure constants.

#include "nrf/algebra.hpp"

#include <functional>
#include <string>
#include <vector>

namespace nrf {

/// A basic algebra given by a basis adapted to a complete set of primitive
/// orthogonal idempotents. Each basis element lies in e_x A e_y (x = source,
/// y = target, products follow the left-to-right convention), the
/// idempotents are themselves basis elements, and the remaining basis
/// elements span the radical.
struct StructureConstants {
  std::size_t num_vertices = 0;
  std::vector<std::size_t> source, target;
  std::vector<std::size_t> idempotent;  // basis index of e_x
  std::function<SparseVec(std::size_t, std::size_t)> multiply;
  /// Optional names for basis elements; used for arrow labels.
  std::vector<std::string> names;
  std::vector<std::string> vertex_names;
};

struct Presentation {
  AlgebraPtr algebra;
  /// Every relation found, including ones mixing path lengths.
  std::vector<Relation> relations;
  bool homogeneous = true;
  /// to_original[k] = coordinates of the k-th basis element of `algebra`
  /// in the input basis.
  std::vector<SparseVec> to_original;
  /// arrows[a] = input basis index chosen as arrow a.
  std::vector<std::size_t> arrows;
};

/// Gabriel quiver by radical / radical^2 analysis, a monomial basis chosen
/// greedily by path length, and relations expressing every other
/// extension of a basis word by an arrow.
Presentation present_algebra(const StructureConstants& sc);

/// Re-presents an algebra from its own structure constants.
Presentation present_algebra(const Algebra& a);

}  // namespace nrf
