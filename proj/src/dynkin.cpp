#include "nrf/dynkin.hpp"

#include "nrf/errors.hpp"

#include <set>

namespace nrf {

std::vector<std::pair<std::size_t, std::size_t>> dynkin_edges(char type, std::size_t rank) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  switch (type) {
    case 'A':
      if (rank < 1) break;
      for (std::size_t i = 1; i < rank; ++i) e.emplace_back(i, i + 1);
      return e;
    case 'D':
      if (rank < 3) break;
      for (std::size_t i = 1; i + 1 < rank; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(rank - 2, rank);
      return e;
    case 'E':
      if (rank == 6) return {{1, 2}, {2, 3}, {3, 5}, {5, 6}, {3, 4}};
      if (rank == 7) return {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
      if (rank == 8) return {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
      break;
    default: break;
  }
  throw Error(ErrorKind::InvalidSpec, "no Dynkin diagram " + std::string(1, type) + std::to_string(rank));
}

std::size_t coxeter_number(char type, std::size_t rank) {
  dynkin_edges(type, rank);
  if (type == 'A') return rank + 1;
  if (type == 'D') return 2 * (rank - 1);
  return rank == 6 ? 12 : rank == 7 ? 18 : 30;
}

std::vector<std::size_t> diagram_involution(char type, std::size_t rank) {
  dynkin_edges(type, rank);
  std::vector<std::size_t> w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = i + 1;
  if (type == 'A') {
    for (std::size_t i = 1; i <= rank; ++i) w[i - 1] = rank + 1 - i;
  } else if (type == 'D' && rank % 2 == 1) {
    std::swap(w[rank - 2], w[rank - 1]);
  } else if (type == 'E' && rank == 6) {
    w = {6, 5, 3, 4, 2, 1};
  }
  return w;
}

std::string diagram_name(char type, std::size_t rank) { return std::string(1, type) + std::to_string(rank); }

DynkinSpec linear_orientation(char type, std::size_t rank) {
  return DynkinSpec{type, rank, std::vector<bool>(dynkin_edges(type, rank).size(), true)};
}

DynkinQuiver dynkin_quiver(const DynkinSpec& spec) {
  auto edges = dynkin_edges(spec.type, spec.rank);
  std::vector<bool> fw = spec.forward.empty() ? std::vector<bool>(edges.size(), true) : spec.forward;
  if (fw.size() != edges.size()) throw Error(ErrorKind::InvalidSpec, "orientation has the wrong number of edges");
  std::vector<std::string> verts;
  for (std::size_t i = 1; i <= spec.rank; ++i) verts.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (!fw[e]) std::swap(u, v);
    arrows.push_back({"a" + std::to_string(e + 1), u - 1, v - 1});
  }
  DynkinQuiver d{Quiver(std::move(verts), std::move(arrows)), coxeter_number(spec.type, spec.rank), {}};
  for (auto w : diagram_involution(spec.type, spec.rank)) d.omega.push_back(w - 1);
  return d;
}

std::vector<DynkinSpec> all_orientations(char type, std::size_t rank) {
  std::size_t m = dynkin_edges(type, rank).size();
  std::vector<DynkinSpec> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    DynkinSpec s{type, rank, std::vector<bool>(m)};
    for (std::size_t e = 0; e < m; ++e) s.forward[e] = (mask >> e) & 1;
    out.push_back(std::move(s));
  }
  return out;
}

bool is_omega_stable_orientation(const DynkinSpec& spec) {
  DynkinQuiver d = dynkin_quiver(spec);
  std::set<std::pair<std::size_t, std::size_t>> arrows;
  for (const auto& a : d.quiver.arrows()) arrows.emplace(a.source, a.target);
  for (const auto& [u, v] : arrows)
    if (!arrows.count({d.omega[u], d.omega[v]})) return false;
  return true;
}

std::vector<std::string> classify_homogeneous_dynkin(std::size_t ell) {
  if (ell < 2) throw Error(ErrorKind::InvalidSpec, "ell must be at least 2");
  std::vector<std::string> out{diagram_name('A', 2 * ell - 1), diagram_name('D', ell + 1)};
  if (ell == 6) out.push_back("E6");
  if (ell == 9) out.push_back("E7");
  if (ell == 15) out.push_back("E8");
  return out;
}

}  // namespace nrf
