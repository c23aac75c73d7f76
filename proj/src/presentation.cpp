#include "nrf/presentation.hpp"

#include "nrf/errors.hpp"

#include <map>
#include <set>

namespace nrf {

namespace {

struct Word {
  std::size_t source, target;
  std::vector<std::size_t> arrows;
  Vector value;
};

}  // namespace

Presentation present_algebra(const StructureConstants& sc) {
  std::size_t dim = sc.source.size();
  std::size_t nv = sc.num_vertices;
  auto mul = [&](const Vector& x, const Vector& y) {
    Vector out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (sgn(y[j]) == 0 || sc.target[i] != sc.source[j]) continue;
        Rational c = x[i] * y[j];
        for (const auto& [k, v] : sc.multiply(i, j)) out[k] += c * v;
      }
    }
    return out;
  };
  auto unit = [&](std::size_t i) {
    Vector v(dim);
    v[i] = 1;
    return v;
  };

  std::vector<bool> is_idem(dim, false);
  for (auto e : sc.idempotent) is_idem[e] = true;
  Echelon rad2(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (is_idem[i]) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (is_idem[j] || sc.target[i] != sc.source[j]) continue;
      Vector v(dim);
      for (const auto& [k, c] : sc.multiply(i, j)) v[k] = c;
      if (!is_zero(v)) rad2.insert(v);
    }
  }

  Presentation out;
  std::vector<Arrow> arrows;
  std::set<std::string> used;
  Echelon top = rad2;
  for (std::size_t i = 0; i < dim; ++i) {
    if (is_idem[i]) continue;
    if (!top.insert(unit(i))) continue;
    std::string label = i < sc.names.size() ? sc.names[i] : "";
    if (label.empty() || used.count(label)) label = "a" + std::to_string(arrows.size());
    used.insert(label);
    arrows.push_back({label, sc.source[i], sc.target[i]});
    out.arrows.push_back(i);
  }
  std::vector<std::string> vnames = sc.vertex_names;
  if (vnames.size() != nv) {
    vnames.clear();
    for (std::size_t v = 0; v < nv; ++v) vnames.push_back(std::to_string(v + 1));
  }
  Quiver q(vnames, arrows);

  std::vector<Word> words;
  Echelon span(dim, true);
  std::vector<std::size_t> level;
  for (std::size_t v = 0; v < nv; ++v) {
    words.push_back({v, v, {}, unit(sc.idempotent[v])});
    span.insert(words.back().value);
    level.push_back(words.size() - 1);
  }
  std::vector<Relation> rels;
  auto path_of = [&](const Word& w) { return Path{w.source, w.arrows}; };
  while (!level.empty()) {
    std::vector<std::size_t> next;
    for (auto w : level) {
      for (auto a : q.arrows_from(words[w].target)) {
        Word cand{words[w].source, q.arrow(a).target, words[w].arrows, mul(words[w].value, unit(out.arrows[a]))};
        cand.arrows.push_back(a);
        if (words[w].arrows.empty()) {
          // Length-one words are the arrows themselves.
          span.insert(cand.value);
          words.push_back(std::move(cand));
          next.push_back(words.size() - 1);
          continue;
        }
        if (!is_zero(cand.value) && span.insert(cand.value)) {
          words.push_back(std::move(cand));
          next.push_back(words.size() - 1);
          continue;
        }
        Relation r;
        r.terms.push_back({1, path_of(cand)});
        if (!is_zero(cand.value)) {
          auto c = span.coordinates(cand.value);
          for (std::size_t k = 0; k < c->size(); ++k)
            if (sgn((*c)[k]) != 0) r.terms.push_back({-(*c)[k], path_of(words[k])});
        }
        rels.push_back(std::move(r));
      }
    }
    level = std::move(next);
  }
  if (words.size() != dim) throw std::logic_error("present_algebra: arrows do not generate the algebra");

  for (const auto& r : rels) {
    std::size_t len = r.terms.front().path.length();
    for (const auto& t : r.terms)
      if (t.path.length() != len) out.homogeneous = false;
  }
  std::vector<BasisElement> basis;
  for (const auto& w : words) {
    basis.push_back({w.source, w.target, w.arrows});
    out.to_original.push_back(to_sparse(w.value));
  }
  auto product = [&](std::size_t i, std::size_t j) {
    Vector v = mul(words[i].value, words[j].value);
    if (is_zero(v)) return SparseVec{};
    return to_sparse(*span.coordinates(v));
  };
  out.algebra = std::make_shared<Algebra>(q, out.homogeneous ? rels : std::vector<Relation>{}, std::move(basis), product);
  out.relations = std::move(rels);
  return out;
}

Presentation present_algebra(const Algebra& a) {
  StructureConstants sc;
  sc.num_vertices = a.num_vertices();
  for (const auto& b : a.basis()) {
    sc.source.push_back(b.source);
    sc.target.push_back(b.target);
  }
  for (std::size_t v = 0; v < a.num_vertices(); ++v) sc.idempotent.push_back(a.vertex_element(v));
  sc.multiply = [&a](std::size_t i, std::size_t j) { return a.product(i, j); };
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& w = a.basis(i).word;
    sc.names.push_back(w.size() == 1 ? a.quiver().arrow(w[0]).label : "");
  }
  sc.vertex_names = a.quiver().vertices();
  return present_algebra(sc);
}

}  // namespace nrf
