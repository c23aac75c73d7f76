#pragma once

// Dynkin diagrams with their Coxeter numbers and diagram involutions.

#include "nrf/algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nrf {

struct DynkinSpec {
  char type = 'A';  // 'A', 'D' or 'E'
  std::size_t rank = 1;
  /// forward[e] orients edge e = (u, v) of dynkin_edges as u -> v.
  std::vector<bool> forward;
};

/// Edges of the diagram, vertices numbered 1..rank. Throws InvalidSpec.
std::vector<std::pair<std::size_t, std::size_t>> dynkin_edges(char type, std::size_t rank);
std::size_t coxeter_number(char type, std::size_t rank);
/// omega[i - 1] = omega(i).
std::vector<std::size_t> diagram_involution(char type, std::size_t rank);
std::string diagram_name(char type, std::size_t rank);

struct DynkinQuiver {
  Quiver quiver;  // vertex labels "1".."rank"
  std::size_t h = 0;
  std::vector<std::size_t> omega;  // on 0-based vertex indices
};

DynkinQuiver dynkin_quiver(const DynkinSpec& spec);
/// Every orientation (2^edges of them), in binary counting order.
std::vector<DynkinSpec> all_orientations(char type, std::size_t rank);
/// The all-forward orientation when `forward` is empty.
DynkinSpec linear_orientation(char type, std::size_t rank);
bool is_omega_stable_orientation(const DynkinSpec& spec);

/// Diagram names admitting an omega-stable orientation with ell = h / 2.
std::vector<std::string> classify_homogeneous_dynkin(std::size_t ell);

}  // namespace nrf
