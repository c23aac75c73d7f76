#include "nrf/quiver.hpp"

#include "nrf/errors.hpp"

#include <set>
#include <sstream>

namespace nrf {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedRelation: return "MalformedRelation";
    case ErrorKind::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotNRF: return "NotNRF";
    case ErrorKind::NotSelfinjective: return "NotSelfinjective";
    case ErrorKind::FactorNotHomogeneous: return "FactorNotHomogeneous";
    case ErrorKind::NotACut: return "NotACut";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::BijectionFailure: return "BijectionFailure";
    case ErrorKind::Undecided: return "Undecided";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw Error(ErrorKind::InvalidSpec, "duplicate vertex label");
  std::set<std::string> alabels;
  for (const auto& a : arrows_) {
    if (!alabels.insert(a.label).second) throw Error(ErrorKind::InvalidSpec, "duplicate arrow label " + a.label);
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw Error(ErrorKind::InvalidSpec, "arrow " + a.label + " has an undeclared endpoint");
  }
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    out_[arrows_[i].source].push_back(i);
    in_[arrows_[i].target].push_back(i);
  }
}

std::optional<std::size_t> Quiver::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return i;
  return std::nullopt;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev = arrows_;
  for (auto& a : rev) std::swap(a.source, a.target);
  return Quiver(vertices_, std::move(rev));
}

bool Quiver::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    auto visit = [&](std::size_t w) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    };
    for (auto a : out_[v]) visit(arrows_[a].target);
    for (auto a : in_[v]) visit(arrows_[a].source);
  }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

bool Quiver::has_oriented_cycle() const {
  std::vector<std::size_t> indeg(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t done = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++done;
    for (auto a : out_[v])
      if (--indeg[arrows_[a].target] == 0) ready.push_back(arrows_[a].target);
  }
  return done != vertices_.size();
}

void validate_relation(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) throw Error(ErrorKind::MalformedRelation, "empty relation");
  const Path& first = r.terms.front().path;
  if (first.length() < 2) throw Error(ErrorKind::MalformedRelation, "relation term of length < 2: " + to_string(q, first));
  for (const auto& t : r.terms) {
    const Path& p = t.path;
    if (p.source >= q.num_vertices()) throw Error(ErrorKind::MalformedRelation, "bad start vertex");
    std::size_t at = p.source;
    for (auto a : p.arrows) {
      if (a >= q.num_arrows()) throw Error(ErrorKind::MalformedRelation, "unknown arrow");
      if (q.arrow(a).source != at) throw Error(ErrorKind::MalformedRelation, "non-composable path " + to_string(q, p));
      at = q.arrow(a).target;
    }
    if (p.source != first.source || p.target(q) != first.target(q))
      throw Error(ErrorKind::MalformedRelation, "terms are not parallel: " + to_string(q, r));
    if (p.length() != first.length())
      throw Error(ErrorKind::MalformedRelation, "terms of different lengths: " + to_string(q, r));
  }
}

std::string to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertex(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) s += (i ? "*" : "") + q.arrow(p.arrows[i]).label;
  return s;
}

std::string to_string(const Quiver& q, const Relation& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    const auto& t = r.terms[i];
    if (i) os << (sgn(t.coeff) < 0 ? " - " : " + ");
    else if (sgn(t.coeff) < 0) os << "-";
    Rational a = abs(t.coeff);
    if (a != 1) os << a.get_str() << "*";
    os << to_string(q, t.path);
  }
  return os.str();
}

}  // namespace nrf
