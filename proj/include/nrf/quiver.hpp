#pragma once

#include "nrf/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace nrf {

struct Arrow {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;
};

class Quiver {
public:
  Quiver() = default;
  /// Throws Error(InvalidSpec) on duplicate labels or dangling endpoints.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::string& vertex(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<std::size_t> vertex_index(const std::string& label) const;
  std::optional<std::size_t> arrow_index(const std::string& label) const;
  const std::vector<std::size_t>& arrows_from(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& arrows_to(std::size_t v) const { return in_.at(v); }

  /// Same vertex and arrow indices with every arrow reversed.
  Quiver opposite() const;
  bool is_connected() const;
  bool has_oriented_cycle() const;

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> out_, in_;
};

/// A path is a start vertex plus a sequence of composable arrows; the
/// first arrow is traversed first.
struct Path {
  std::size_t source = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  std::size_t target(const Quiver& q) const { return arrows.empty() ? source : q.arrow(arrows.back()).target; }
  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

struct RelationTerm {
  Rational coeff;
  Path path;
};

/// Linear combination of parallel paths of one common length >= 2.
struct Relation {
  std::vector<RelationTerm> terms;
};

/// Throws Error(MalformedRelation) unless terms are nonempty, composable,
/// parallel and of one common length at least 2.
void validate_relation(const Quiver& q, const Relation& r);
std::string to_string(const Quiver& q, const Path& p);
std::string to_string(const Quiver& q, const Relation& r);

}  // namespace nrf
