#include "nrf/algebra.hpp"

#include "nrf/errors.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace nrf {

namespace {
const SparseVec kZero;
}

Algebra::Algebra(Quiver q, std::vector<Relation> relations, std::vector<BasisElement> basis, const ProductFn& product)
    : quiver_(std::move(q)), relations_(std::move(relations)), basis_(std::move(basis)) {
  std::size_t nv = quiver_.num_vertices();
  vertex_elem_.assign(nv, basis_.size());
  arrow_elem_.assign(quiver_.num_arrows(), std::nullopt);
  starts_.assign(nv, {});
  ends_.assign(nv, {});
  pos_in_start_.assign(basis_.size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& b = basis_[i];
    if (b.degree() == 0) {
      if (b.source != b.target || vertex_elem_[b.source] != basis_.size())
        throw std::logic_error("Algebra: degree-0 basis elements must be the vertex idempotents");
      vertex_elem_[b.source] = i;
    } else if (b.degree() == 1) {
      arrow_elem_[b.word[0]] = i;
    }
    pos_in_start_[i] = starts_[b.source].size();
    starts_[b.source].push_back(i);
    ends_[b.target].push_back(i);
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (vertex_elem_[v] == basis_.size()) throw std::logic_error("Algebra: missing vertex idempotent");
  prod_.assign(basis_.size(), {});
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& after = starts_[basis_[i].target];
    prod_[i].reserve(after.size());
    for (auto j : after) prod_[i].push_back(product(i, j));
  }
}

std::optional<std::size_t> Algebra::arrow_element(std::size_t a) const { return arrow_elem_.at(a); }

std::vector<std::size_t> Algebra::between(std::size_t source, std::size_t target) const {
  std::vector<std::size_t> out;
  for (auto i : starts_.at(source))
    if (basis_[i].target == target) out.push_back(i);
  return out;
}

const SparseVec& Algebra::product(std::size_t i, std::size_t j) const {
  if (basis_[i].target != basis_[j].source) return kZero;
  return prod_[i][pos_in_start_[j]];
}

SparseVec Algebra::multiply(const SparseVec& x, const SparseVec& y) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      const auto& p = product(i, j);
      if (p.empty()) continue;
      Rational ab = a * b;
      for (const auto& [k, c] : p) acc[k] += ab * c;
    }
  SparseVec out;
  for (auto& [k, c] : acc)
    if (sgn(c) != 0) out.emplace_back(k, std::move(c));
  return out;
}

SparseVec Algebra::right_arrow(const SparseVec& x, std::size_t a) const {
  auto e = arrow_elem_.at(a);
  if (!e) return {};
  return multiply(x, unit(*e));
}

SparseVec Algebra::path_element(const Path& p) const {
  SparseVec v = unit(vertex_elem_.at(p.source));
  for (auto a : p.arrows) {
    v = right_arrow(v, a);
    if (v.empty()) break;
  }
  return v;
}

std::size_t Algebra::max_degree() const {
  std::size_t d = 0;
  for (const auto& b : basis_) d = std::max(d, b.degree());
  return d;
}

bool Algebra::check_associativity(std::size_t limit) const {
  std::size_t triples = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (auto j : starts_[basis_[i].target]) triples += starts_[basis_[j].target].size();
  std::mt19937_64 rng(12345);
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    SparseVec lhs = multiply(product(i, j), unit(k));
    SparseVec rhs = multiply(unit(i), product(j, k));
    return lhs == rhs;
  };
  if (triples <= limit) {
    for (std::size_t i = 0; i < dim(); ++i)
      for (auto j : starts_[basis_[i].target])
        for (auto k : starts_[basis_[j].target])
          if (!check(i, j, k)) return false;
    return true;
  }
  for (std::size_t s = 0; s < limit; ++s) {
    std::size_t i = rng() % dim();
    const auto& js = starts_[basis_[i].target];
    std::size_t j = js[rng() % js.size()];
    const auto& ks = starts_[basis_[j].target];
    std::size_t k = ks[rng() % ks.size()];
    if (!check(i, j, k)) return false;
  }
  return true;
}

AlgebraPtr build_algebra(const Quiver& q, std::vector<Relation> rels, std::size_t length_cap) {
  for (const auto& r : rels) validate_relation(q, r);
  std::vector<BasisElement> basis;
  std::vector<std::vector<std::size_t>> by_degree(1);
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    by_degree[0].push_back(basis.size());
    basis.push_back({v, v, {}});
  }
  // rmul[b][k]: b times the k-th arrow leaving target(b), in basis coordinates.
  std::vector<std::vector<SparseVec>> rmul;
  auto ensure_rmul = [&]() {
    rmul.resize(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (rmul[b].empty()) rmul[b].assign(q.arrows_from(basis[b].target).size(), {});
  };
  auto arrow_pos = [&](std::size_t at, std::size_t a) {
    const auto& out = q.arrows_from(at);
    return static_cast<std::size_t>(std::find(out.begin(), out.end(), a) - out.begin());
  };
  auto times_arrow = [&](const SparseVec& x, std::size_t a) {
    SparseVec out;
    for (const auto& [b, c] : x) sparse_axpy(out, c, rmul[b][arrow_pos(basis[b].target, a)]);
    return out;
  };
  ensure_rmul();

  for (std::size_t d = 1;; ++d) {
    // Candidates b*alpha with b of degree d-1.
    struct Cand {
      std::size_t b, arrow;
      std::vector<std::size_t> word;
    };
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Cand>> blocks;
    for (auto b : by_degree[d - 1])
      for (auto a : q.arrows_from(basis[b].target)) {
        Cand c{b, a, basis[b].word};
        c.word.push_back(a);
        blocks[{basis[b].source, q.arrow(a).target}].push_back(std::move(c));
      }
    if (blocks.empty()) break;
    by_degree.emplace_back();
    for (auto& [key, cands] : blocks) {
      std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.word < y.word; });
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
      for (std::size_t i = 0; i < cands.size(); ++i) index[{cands[i].b, cands[i].arrow}] = i;
      // Relation consequences u*r with u of degree d - len(r).
      std::vector<Vector> rows;
      for (const auto& r : rels) {
        std::size_t len = r.terms.front().path.length();
        if (len > d || r.terms.front().path.source == q.num_vertices()) continue;
        const Path& p0 = r.terms.front().path;
        if (p0.target(q) != key.second) continue;
        for (auto u : by_degree[d - len]) {
          if (basis[u].source != key.first || basis[u].target != p0.source) continue;
          Vector row(cands.size());
          for (const auto& t : r.terms) {
            SparseVec v{{u, Rational(1)}};
            for (std::size_t k = 0; k + 1 < t.path.arrows.size(); ++k) v = times_arrow(v, t.path.arrows[k]);
            std::size_t last = t.path.arrows.back();
            for (const auto& [b, c] : v) row[index.at({b, last})] += t.coeff * c;
          }
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
      }
      // Reverse column order so pivots fall on the largest words and the
      // lexicographically smallest words survive as basis elements.
      std::size_t n = cands.size();
      Matrix m(rows.size(), n);
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, n - 1 - c) = rows[r][c];
      auto piv = rref_in_place(m);
      std::vector<long> pivot_row(n, -1);
      for (std::size_t r = 0; r < piv.size(); ++r) pivot_row[n - 1 - piv[r]] = static_cast<long>(r);
      std::vector<std::size_t> new_index(n, 0);
      for (std::size_t c = 0; c < n; ++c) {
        if (pivot_row[c] >= 0) continue;
        new_index[c] = basis.size();
        by_degree[d].push_back(basis.size());
        basis.push_back({key.first, key.second, cands[c].word});
      }
      ensure_rmul();
      for (std::size_t c = 0; c < n; ++c) {
        SparseVec nf;
        if (pivot_row[c] < 0) {
          nf.emplace_back(new_index[c], Rational(1));
        } else {
          std::size_t r = static_cast<std::size_t>(pivot_row[c]);
          for (std::size_t f = 0; f < n; ++f) {
            if (f == c || pivot_row[f] >= 0) continue;
            const Rational& x = m(r, n - 1 - f);
            if (sgn(x) != 0) nf.emplace_back(new_index[f], -x);
          }
          std::sort(nf.begin(), nf.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        }
        rmul[cands[c].b][arrow_pos(basis[cands[c].b].target, cands[c].arrow)] = std::move(nf);
      }
    }
    if (by_degree[d].empty()) break;
    if (d >= length_cap)
      throw Error(ErrorKind::NotFiniteDimensional, "nonzero paths of length " + std::to_string(d) + " persist at the length cap");
  }
  ensure_rmul();

  auto product = [&](std::size_t i, std::size_t j) {
    SparseVec v{{i, Rational(1)}};
    for (auto a : basis[j].word) {
      v = times_arrow(v, a);
      if (v.empty()) break;
    }
    return v;
  };
  auto alg = std::make_shared<Algebra>(q, std::move(rels), basis, product);
  return alg;
}

AlgebraPtr path_algebra(const Quiver& q, std::size_t length_cap) { return build_algebra(q, {}, length_cap); }

AlgebraPtr opposite(const AlgebraPtr& a) {
  Quiver qop = a->quiver().opposite();
  std::vector<Relation> rels;
  for (const auto& r : a->relations()) {
    Relation o;
    for (const auto& t : r.terms) {
      Path p;
      p.source = t.path.target(a->quiver());
      p.arrows.assign(t.path.arrows.rbegin(), t.path.arrows.rend());
      o.terms.push_back({t.coeff, std::move(p)});
    }
    rels.push_back(std::move(o));
  }
  std::vector<BasisElement> basis;
  for (const auto& b : a->basis()) basis.push_back({b.target, b.source, {b.word.rbegin(), b.word.rend()}});
  auto out = std::make_shared<Algebra>(std::move(qop), std::move(rels), std::move(basis),
                                       [&](std::size_t i, std::size_t j) { return a->product(j, i); });
  out->name = a->name.empty() ? "" : a->name + "^op";
  return out;
}

AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  const Quiver& qa = a->quiver();
  const Quiver& qb = b->quiver();
  std::size_t nb = qb.num_vertices();
  std::size_t na_arrows = qa.num_arrows();
  std::vector<std::string> verts;
  for (std::size_t x = 0; x < qa.num_vertices(); ++x)
    for (std::size_t y = 0; y < nb; ++y) verts.push_back(qa.vertex(x) + "." + qb.vertex(y));
  std::vector<Arrow> arrows;
  for (std::size_t al = 0; al < na_arrows; ++al)
    for (std::size_t y = 0; y < nb; ++y)
      arrows.push_back({qa.arrow(al).label + "." + qb.vertex(y), qa.arrow(al).source * nb + y, qa.arrow(al).target * nb + y});
  std::size_t offset = arrows.size();
  for (std::size_t x = 0; x < qa.num_vertices(); ++x)
    for (std::size_t be = 0; be < qb.num_arrows(); ++be)
      arrows.push_back({qa.vertex(x) + "." + qb.arrow(be).label, x * nb + qb.arrow(be).source, x * nb + qb.arrow(be).target});
  auto left = [&](std::size_t al, std::size_t y) { return al * nb + y; };
  auto right = [&](std::size_t x, std::size_t be) { return offset + x * qb.num_arrows() + be; };
  Quiver q(std::move(verts), std::move(arrows));

  std::vector<Relation> rels;
  for (const auto& r : a->relations())
    for (std::size_t y = 0; y < nb; ++y) {
      Relation o;
      for (const auto& t : r.terms) {
        Path p{t.path.source * nb + y, {}};
        for (auto al : t.path.arrows) p.arrows.push_back(left(al, y));
        o.terms.push_back({t.coeff, std::move(p)});
      }
      rels.push_back(std::move(o));
    }
  for (const auto& r : b->relations())
    for (std::size_t x = 0; x < qa.num_vertices(); ++x) {
      Relation o;
      for (const auto& t : r.terms) {
        Path p{x * nb + t.path.source, {}};
        for (auto be : t.path.arrows) p.arrows.push_back(right(x, be));
        o.terms.push_back({t.coeff, std::move(p)});
      }
      rels.push_back(std::move(o));
    }
  for (std::size_t al = 0; al < na_arrows; ++al)
    for (std::size_t be = 0; be < qb.num_arrows(); ++be) {
      std::size_t s = qa.arrow(al).source, t = qa.arrow(al).target;
      std::size_t u = qb.arrow(be).source, v = qb.arrow(be).target;
      Relation o;
      o.terms.push_back({1, Path{s * nb + u, {left(al, u), right(t, be)}}});
      o.terms.push_back({-1, Path{s * nb + u, {right(s, be), left(al, v)}}});
      rels.push_back(std::move(o));
    }

  std::size_t db = b->dim();
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < db; ++j) {
      const auto& ei = a->basis(i);
      const auto& ej = b->basis(j);
      BasisElement e{ei.source * nb + ej.source, ei.target * nb + ej.target, {}};
      for (auto al : ei.word) e.word.push_back(left(al, ej.source));
      for (auto be : ej.word) e.word.push_back(right(ei.target, be));
      basis.push_back(std::move(e));
    }
  auto product = [&](std::size_t p, std::size_t r) {
    const auto& x = a->product(p / db, r / db);
    const auto& y = b->product(p % db, r % db);
    SparseVec out;
    for (const auto& [i, c] : x)
      for (const auto& [j, d] : y) out.emplace_back(i * db + j, c * d);
    return out;
  };
  auto out = std::make_shared<Algebra>(std::move(q), std::move(rels), std::move(basis), product);
  if (!a->name.empty() && !b->name.empty()) out->name = a->name + " (x) " + b->name;
  return out;
}

AlgebraPtr enveloping(const AlgebraPtr& a) { return tensor_product(a, opposite(a)); }

AlgebraPtr ground_field() {
  auto k = build_algebra(Quiver({"1"}, {}), {});
  return k;
}

bool same_basis_data(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim() || a.num_vertices() != b.num_vertices() || a.quiver().num_arrows() != b.quiver().num_arrows())
    return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& x = a.basis(i);
    const auto& y = b.basis(i);
    if (x.source != y.source || x.target != y.target || x.word != y.word) return false;
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (auto j : a.starting_at(a.basis(i).target))
      if (a.product(i, j) != b.product(i, j)) return false;
  return true;
}

SparseVec apply_morphism(const Algebra& a, const AlgebraMorphism& phi, std::size_t basis_index) {
  const auto& b = a.basis(basis_index);
  // Build the image of the word arrow by arrow.
  SparseVec v{{a.vertex_element(phi.vertex_map.at(b.source)), Rational(1)}};
  for (auto ar : b.word) {
    v = a.multiply(v, phi.arrow_images.at(ar));
    if (v.empty()) break;
  }
  return v;
}

void check_morphism(const Algebra& a, const AlgebraMorphism& phi) {
  const Quiver& q = a.quiver();
  if (phi.vertex_map.size() != q.num_vertices() || phi.arrow_images.size() != q.num_arrows())
    throw Error(ErrorKind::NotAHomomorphism, "morphism data has the wrong size");
  for (auto v : phi.vertex_map)
    if (v >= q.num_vertices()) throw Error(ErrorKind::NotAHomomorphism, "vertex image out of range");
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
    std::size_t s = phi.vertex_map[q.arrow(ar).source], t = phi.vertex_map[q.arrow(ar).target];
    for (const auto& [i, c] : phi.arrow_images[ar]) {
      (void)c;
      if (a.basis(i).source != s || a.basis(i).target != t)
        throw Error(ErrorKind::NotAHomomorphism, "image of arrow " + q.arrow(ar).label + " is not in the right corner");
    }
  }
  for (const auto& r : a.relations()) {
    SparseVec total;
    for (const auto& t : r.terms) {
      SparseVec v{{a.vertex_element(phi.vertex_map[t.path.source]), Rational(1)}};
      for (auto ar : t.path.arrows) v = a.multiply(v, phi.arrow_images[ar]);
      sparse_axpy(total, t.coeff, v);
    }
    if (!total.empty()) throw Error(ErrorKind::NotAHomomorphism, "relation " + to_string(q, r) + " is not preserved");
  }
}

AlgebraMorphism identity_morphism(const Algebra& a) {
  AlgebraMorphism phi;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) phi.vertex_map.push_back(v);
  for (std::size_t ar = 0; ar < a.quiver().num_arrows(); ++ar) phi.arrow_images.push_back(a.unit(*a.arrow_element(ar)));
  return phi;
}

}  // namespace nrf
