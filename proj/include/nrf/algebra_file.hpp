#pragma once

// Text format for bound quivers.
//
//   # comment
//   name: A3 symmetric
//   field: Q
//   vertices: 1 2 3
//   arrows:
//     a: 1 -> 2
//     b: 3 -> 2
//   relations:
//     a*b - 1/2*c*d
//   zero:
//     c*a
//
// A section header may carry its first items on the same line; items are
// separated by newlines or commas. Arrow labels must not start with a digit
// so that coefficients can be told apart from words.

#include "nrf/algebra.hpp"
#include "nrf/errors.hpp"

#include <string>

namespace nrf {

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(ErrorKind::Parse, std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

struct AlgebraFile {
  std::string name;
  std::string field = "Q";
  Quiver quiver;
  std::vector<Relation> relations;
};

/// Throws ParseError (with line and column) or MalformedRelation.
AlgebraFile parse_algebra_file(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);
AlgebraPtr to_algebra(const AlgebraFile& f, std::size_t length_cap = kDefaultLengthCap);
std::string write_algebra_file(const Quiver& q, const std::vector<Relation>& rels, const std::string& name = "");

}  // namespace nrf
