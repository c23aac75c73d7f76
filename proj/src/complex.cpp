#include "nrf/complex.hpp"

#include "nrf/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace nrf {

namespace {

Matrix zero_map(const Rep& from, const Rep& to, std::size_t x) { return Matrix(to.dims[x], from.dims[x]); }

Morphism zero_morphism(const Rep& from, const Rep& to) {
  Morphism f;
  for (std::size_t x = 0; x < from.dims.size(); ++x) f.comps.push_back(zero_map(from, to, x));
  return f;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

}  // namespace

std::size_t default_cap(const Algebra& a) { return 4 * a.num_vertices() + 8; }

AlgebraPtr opposite_of(const AlgebraPtr& a) {
  static std::mutex mu;
  static std::map<const Algebra*, AlgebraPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(a.get());
  if (it != cache.end()) return it->second;
  AlgebraPtr op = opposite(a);
  cache[a.get()] = op;
  cache[op.get()] = a;
  return op;
}

// ---------------------------------------------------------------- Complex

Rep Complex::term(int deg) const {
  if (deg < lo || deg > hi()) return zero_rep(alg);
  return terms[static_cast<std::size_t>(deg - lo)];
}

Complex stalk(const Rep& m, int degree) { return Complex{m.alg, degree, {m}, {}}; }

Complex shift(const Complex& x, int s) {
  Complex y = x;
  y.lo = x.lo - s;
  if (s % 2 != 0)
    for (auto& d : y.diffs) d = scale(d, -1);
  return y;
}

namespace {

Morphism diff_at(const Complex& x, int deg) {
  Rep from = x.term(deg), to = x.term(deg + 1);
  if (deg < x.lo || deg >= x.hi()) return zero_morphism(from, to);
  return x.diffs[static_cast<std::size_t>(deg - x.lo)];
}

}  // namespace

Rep cohomology(const Complex& x, int degree) {
  Rep here = x.term(degree);
  if (here.total_dim() == 0) return here;
  auto k = kernel(here, x.term(degree + 1), diff_at(x, degree));
  Rep before = x.term(degree - 1);
  Morphism din = diff_at(x, degree - 1);
  Morphism into;
  for (std::size_t v = 0; v < here.dims.size(); ++v) {
    auto c = coordinates_in(k.map.comps[v], din.comps[v]);
    if (!c) throw std::logic_error("cohomology: d^2 != 0");
    into.comps.push_back(std::move(*c));
  }
  return cokernel(before, k.rep, into).rep;
}

std::vector<int> cohomology_support(const Complex& x) {
  std::vector<int> out;
  for (int d = x.lo; d <= x.hi(); ++d)
    if (cohomology(x, d).total_dim() != 0) out.push_back(d);
  return out;
}

bool d_squared_zero(const Complex& x) {
  for (std::size_t k = 0; k + 1 < x.diffs.size(); ++k)
    if (!is_zero(compose(x.diffs[k + 1], x.diffs[k]))) return false;
  return true;
}

// ------------------------------------------------------------ ProjComplex

bool ProjComplex::is_zero() const { return rank() == 0; }

std::size_t ProjComplex::rank() const {
  std::size_t r = 0;
  for (const auto& v : verts) r += v.size();
  return r;
}

ProjComplex shift(const ProjComplex& p, int s) {
  ProjComplex q = p;
  q.lo = p.lo - s;
  if (s % 2 != 0)
    for (auto& d : q.diff)
      for (auto& row : d)
        for (auto& e : row)
          for (auto& [i, c] : e) c = -c;
  return q;
}

namespace {

SparseVec matrix_entry_product(const Algebra& a, const std::vector<std::vector<SparseVec>>& left,
                               const std::vector<std::vector<SparseVec>>& right, std::size_t c, std::size_t r) {
  // (left * right)[c][r] = sum_b left[c][b] * right[b][r]
  SparseVec acc;
  for (std::size_t b = 0; b < right.size(); ++b) {
    if (left[c][b].empty() || right[b][r].empty()) continue;
    sparse_axpy(acc, 1, a.multiply(left[c][b], right[b][r]));
  }
  return acc;
}

}  // namespace

bool d_squared_zero(const ProjComplex& p) {
  for (std::size_t k = 0; k + 1 < p.diff.size(); ++k) {
    const auto& d0 = p.diff[k];
    const auto& d1 = p.diff[k + 1];
    for (std::size_t c = 0; c < d1.size(); ++c)
      for (std::size_t a = 0; a < p.verts[k].size(); ++a)
        if (!matrix_entry_product(*p.alg, d1, d0, c, a).empty()) return false;
  }
  return true;
}

namespace {

std::optional<Rational> idempotent_coefficient(const Algebra& a, const SparseVec& e, std::size_t v) {
  std::size_t id = a.vertex_element(v);
  for (const auto& [i, c] : e)
    if (i == id) return c;
  return std::nullopt;
}

// Inverse of c e_v + r with r radical: c^{-1} sum (-r/c)^k.
SparseVec local_inverse(const Algebra& a, const SparseVec& x, std::size_t v) {
  std::size_t id = a.vertex_element(v);
  Rational c = *idempotent_coefficient(a, x, v);
  SparseVec r;
  for (const auto& [i, y] : x)
    if (i != id) r.emplace_back(i, -y / c);
  SparseVec term{{id, Rational(1)}};
  SparseVec sum = term;
  for (std::size_t k = 0; k <= a.max_degree() + 1 && !term.empty(); ++k) {
    term = a.multiply(term, r);
    sparse_axpy(sum, 1, term);
  }
  for (auto& [i, y] : sum) y /= c;
  return sum;
}

void trim(ProjComplex& p) {
  while (!p.verts.empty() && p.verts.back().empty()) {
    p.verts.pop_back();
    if (!p.diff.empty()) p.diff.pop_back();
  }
  while (!p.verts.empty() && p.verts.front().empty()) {
    p.verts.erase(p.verts.begin());
    if (!p.diff.empty()) p.diff.erase(p.diff.begin());
    ++p.lo;
  }
  if (p.verts.empty()) p.diff.clear();
  while (p.diff.size() + 1 > p.verts.size() && !p.diff.empty()) p.diff.pop_back();
}

}  // namespace

bool is_minimal(const ProjComplex& p) {
  for (std::size_t k = 0; k < p.diff.size(); ++k)
    for (std::size_t b = 0; b < p.diff[k].size(); ++b)
      for (std::size_t a = 0; a < p.diff[k][b].size(); ++a) {
        std::size_t v = p.verts[k][a];
        if (p.verts[k + 1][b] == v && idempotent_coefficient(*p.alg, p.diff[k][b][a], v)) return false;
      }
  return true;
}

ProjComplex minimize(const ProjComplex& in) {
  ProjComplex p = in;
  const Algebra& alg = *p.alg;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < p.diff.size() && !changed; ++k) {
      auto& d = p.diff[k];
      for (std::size_t b = 0; b < d.size() && !changed; ++b)
        for (std::size_t a = 0; a < d[b].size() && !changed; ++a) {
          std::size_t v = p.verts[k][a];
          if (p.verts[k + 1][b] != v || !idempotent_coefficient(alg, d[b][a], v)) continue;
          SparseVec inv = local_inverse(alg, d[b][a], v);
          std::vector<std::vector<SparseVec>> nd;
          for (std::size_t b2 = 0; b2 < d.size(); ++b2) {
            if (b2 == b) continue;
            std::vector<SparseVec> row;
            SparseVec g = d[b2][a].empty() ? SparseVec{} : alg.multiply(d[b2][a], inv);
            for (std::size_t a2 = 0; a2 < d[b2].size(); ++a2) {
              if (a2 == a) continue;
              SparseVec e = d[b2][a2];
              if (!g.empty() && !d[b][a2].empty()) sparse_axpy(e, -1, alg.multiply(g, d[b][a2]));
              row.push_back(std::move(e));
            }
            nd.push_back(std::move(row));
          }
          d = std::move(nd);
          if (k > 0) p.diff[k - 1].erase(p.diff[k - 1].begin() + static_cast<long>(a));
          if (k + 1 < p.diff.size())
            for (auto& row : p.diff[k + 1]) row.erase(row.begin() + static_cast<long>(b));
          p.verts[k].erase(p.verts[k].begin() + static_cast<long>(a));
          p.verts[k + 1].erase(p.verts[k + 1].begin() + static_cast<long>(b));
          changed = true;
        }
    }
  }
  trim(p);
  return p;
}

// ------------------------------------------------------------- functors

ProjFunctor::ProjFunctor(AlgebraPtr source, AlgebraPtr target, std::function<Rep(std::size_t)> object,
                         std::function<Morphism(std::size_t)> morphism)
    : source_(std::move(source)),
      target_(std::move(target)),
      make_object_(std::move(object)),
      make_morphism_(std::move(morphism)),
      objects_(source_->num_vertices()),
      morphisms_(source_->dim()) {}

const Rep& ProjFunctor::object(std::size_t v) const {
  if (!objects_[v]) objects_[v] = make_object_(v);
  return *objects_[v];
}

const Morphism& ProjFunctor::morphism(std::size_t b) const {
  if (!morphisms_[b]) morphisms_[b] = make_morphism_(b);
  return *morphisms_[b];
}

Morphism ProjFunctor::morphism(const SparseVec& element, std::size_t s, std::size_t t) const {
  Morphism out = zero_morphism(object(t), object(s));
  for (const auto& [i, c] : element) out = add(out, scale(morphism(i), c));
  return out;
}

namespace {

// Position of each basis element within between(source, target).
std::shared_ptr<std::vector<std::size_t>> block_positions(const Algebra& a) {
  auto pos = std::make_shared<std::vector<std::size_t>>(a.dim(), 0);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> count;
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    for (auto i : a.starting_at(v)) (*pos)[i] = count[{v, a.basis(i).target}]++;
  return pos;
}

}  // namespace

ProjFunctor identity_functor(const AlgebraPtr& a) {
  auto pos = block_positions(*a);
  auto object = [a](std::size_t v) { return projective(a, v); };
  auto morphism = [a, pos](std::size_t b) {
    std::size_t s = a->basis(b).source, t = a->basis(b).target;
    Morphism f;
    for (std::size_t x = 0; x < a->num_vertices(); ++x) {
      auto from = a->between(t, x);
      Matrix m(a->between(s, x).size(), from.size());
      for (std::size_t c = 0; c < from.size(); ++c)
        for (const auto& [k, v] : a->product(b, from[c])) m((*pos)[k], c) = v;
      f.comps.push_back(std::move(m));
    }
    return f;
  };
  return ProjFunctor(a, a, object, morphism);
}

ProjFunctor nakayama_functor(const AlgebraPtr& a) {
  auto pos = block_positions(*a);
  auto object = [a](std::size_t v) { return injective(a, v); };
  auto morphism = [a, pos](std::size_t b) {
    std::size_t s = a->basis(b).source, t = a->basis(b).target;
    Morphism f;
    for (std::size_t x = 0; x < a->num_vertices(); ++x) {
      auto rows = a->between(x, s);
      Matrix m(rows.size(), a->between(x, t).size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [k, v] : a->product(rows[r], b)) m(r, (*pos)[k]) = v;
      f.comps.push_back(std::move(m));
    }
    return f;
  };
  return ProjFunctor(a, a, object, morphism);
}

ProjFunctor tensor_functor(const ProjFunctor& f, const ProjFunctor& g, const AlgebraPtr& source,
                           const AlgebraPtr& target) {
  auto fp = std::make_shared<ProjFunctor>(f);
  auto gp = std::make_shared<ProjFunctor>(g);
  std::size_t n2 = g.source()->num_vertices();
  std::size_t d2 = g.source()->dim();
  std::size_t tb = g.target()->num_vertices();
  std::size_t ta = f.target()->num_vertices();
  std::size_t arrows_b = g.target()->quiver().num_arrows();
  std::size_t offset = f.target()->quiver().num_arrows() * tb;
  auto object = [=](std::size_t v) {
    const Rep& m = fp->object(v / n2);
    const Rep& n = gp->object(v % n2);
    Rep r{target, {}, {}};
    for (std::size_t x = 0; x < ta; ++x)
      for (std::size_t y = 0; y < tb; ++y) r.dims.push_back(m.dims[x] * n.dims[y]);
    const Quiver& q = target->quiver();
    for (std::size_t al = 0; al < q.num_arrows(); ++al) {
      if (al < offset) {
        std::size_t y = al % tb;
        r.maps.push_back(kron(m.maps[al / tb], nrf::identity(n.dims[y])));
      } else {
        std::size_t k = al - offset;
        std::size_t x = k / arrows_b;
        r.maps.push_back(kron(nrf::identity(m.dims[x]), n.maps[k % arrows_b]));
      }
    }
    return r;
  };
  auto morphism = [=](std::size_t b) {
    const Morphism& mf = fp->morphism(b / d2);
    const Morphism& mg = gp->morphism(b % d2);
    Morphism out;
    for (std::size_t x = 0; x < ta; ++x)
      for (std::size_t y = 0; y < tb; ++y) out.comps.push_back(kron(mf.comps[x], mg.comps[y]));
    return out;
  };
  return ProjFunctor(source, target, object, morphism);
}

Complex realize(const ProjComplex& p, const ProjFunctor& f) {
  Complex c{f.target(), p.lo, {}, {}};
  std::size_t nv = f.target()->num_vertices();
  for (const auto& vs : p.verts) {
    Rep r = zero_rep(f.target());
    for (auto v : vs) r = direct_sum(r, f.object(v));
    c.terms.push_back(std::move(r));
  }
  for (std::size_t k = 0; k < p.diff.size(); ++k) {
    const auto& src = p.verts[k];
    const auto& dst = p.verts[k + 1];
    Morphism d;
    for (std::size_t x = 0; x < nv; ++x) {
      Matrix m(c.terms[k + 1].dims[x], c.terms[k].dims[x]);
      std::size_t row = 0;
      for (std::size_t b = 0; b < dst.size(); ++b) {
        std::size_t col = 0;
        std::size_t rows_b = f.object(dst[b]).dims[x];
        for (std::size_t a = 0; a < src.size(); ++a) {
          std::size_t cols_a = f.object(src[a]).dims[x];
          if (!p.diff[k][b][a].empty()) {
            Morphism e = f.morphism(p.diff[k][b][a], dst[b], src[a]);
            for (std::size_t i = 0; i < rows_b; ++i)
              for (std::size_t j = 0; j < cols_a; ++j) m(row + i, col + j) = e.comps[x](i, j);
          }
          col += cols_a;
        }
        row += rows_b;
      }
      d.comps.push_back(std::move(m));
    }
    c.diffs.push_back(std::move(d));
  }
  return c;
}

Complex realize(const ProjComplex& p) { return realize(p, identity_functor(p.alg)); }

// ------------------------------------------------- projective replacement

ProjComplex to_projective_complex(const Complex& x, std::size_t cap) {
  const AlgebraPtr& alg = x.alg;
  std::size_t nv = alg->num_vertices();
  ProjComplex out{alg, 0, {}, {}};
  if (x.empty()) return out;
  ProjFunctor id = identity_functor(alg);

  // Degree data, built from the top down; index 0 of the deques is the
  // lowest degree produced so far.
  struct Level {
    std::vector<std::size_t> verts;
    std::vector<std::vector<SparseVec>> d;  // to the level above: d[b][a]
    std::vector<Vector> f;                  // generator images in X^k
    Rep rep;
    Morphism dmap, fmap;
  };
  std::map<int, Level> levels;
  const Rep zero = zero_rep(alg);
  auto level_rep = [&](int k) -> const Rep& {
    auto it = levels.find(k);
    return it == levels.end() ? zero : it->second.rep;
  };

  for (int k = x.hi();; --k) {
    if (k < x.lo - static_cast<int>(cap)) throw Error(ErrorKind::CapExceeded, "projective replacement exceeds the length cap");
    const Rep& p1 = level_rep(k + 1);
    const Rep& p2 = level_rep(k + 2);
    Rep xk = x.term(k), xk1 = x.term(k + 1);
    Rep cone = direct_sum(p1, xk);
    Rep cone1 = direct_sum(p2, xk1);
    Morphism dx = diff_at(x, k);
    Morphism dc;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix m(cone1.dims[v], cone.dims[v]);
      std::size_t pr = p2.dims[v], pc = p1.dims[v];
      if (levels.count(k + 1)) {
        const Level& L = levels[k + 1];
        if (levels.count(k + 2))
          for (std::size_t i = 0; i < pr; ++i)
            for (std::size_t j = 0; j < pc; ++j) m(i, j) = -L.dmap.comps[v](i, j);
        for (std::size_t i = 0; i < xk1.dims[v]; ++i)
          for (std::size_t j = 0; j < pc; ++j) m(pr + i, j) = L.fmap.comps[v](i, j);
      }
      for (std::size_t i = 0; i < xk1.dims[v]; ++i)
        for (std::size_t j = 0; j < xk.dims[v]; ++j) m(pr + i, pc + j) = dx.comps[v](i, j);
      dc.comps.push_back(std::move(m));
    }
    auto z = kernel(cone, cone1, dc);
    Morphism dxin = diff_at(x, k - 1);

    Level L;
    L.rep = zero_rep(alg);
    for (std::size_t v = 0; v < nv; ++v) {
      std::size_t dimc = cone.dims[v];
      if (z.rep.dims[v] == 0) continue;
      Echelon e(dimc);
      auto insert_cols = [&](const Matrix& m) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          Vector col(dimc);
          for (std::size_t r = 0; r < dimc; ++r) col[r] = m(r, c);
          e.insert(col);
        }
      };
      for (auto al : alg->quiver().arrows_to(v)) {
        std::size_t u = alg->quiver().arrow(al).source;
        if (z.rep.dims[u] == 0) continue;
        insert_cols(multiply(cone.maps[al], z.map.comps[u]));
      }
      if (dxin.comps[v].cols() > 0) {
        Matrix im(dimc, dxin.comps[v].cols());
        for (std::size_t r = 0; r < xk.dims[v]; ++r)
          for (std::size_t c = 0; c < im.cols(); ++c) im(p1.dims[v] + r, c) = dxin.comps[v](r, c);
        insert_cols(im);
      }
      const Matrix& zb = z.map.comps[v];
      for (std::size_t c = 0; c < zb.cols(); ++c) {
        Vector col(dimc);
        for (std::size_t r = 0; r < dimc; ++r) col[r] = zb(r, c);
        if (!e.insert(col)) continue;
        L.verts.push_back(v);
        L.f.emplace_back(col.begin() + static_cast<long>(p1.dims[v]), col.end());
        // Split the P^{k+1} part into summands.
        std::vector<SparseVec> column;
        std::size_t off = 0;
        if (levels.count(k + 1))
          for (auto w : levels[k + 1].verts) {
            auto blk = alg->between(w, v);
            SparseVec el;
            for (std::size_t i = 0; i < blk.size(); ++i)
              if (sgn(col[off + i]) != 0) el.emplace_back(blk[i], -col[off + i]);
            std::sort(el.begin(), el.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
            column.push_back(std::move(el));
            off += blk.size();
          }
        // Stored column-wise for now; transposed to d[b][a] below.
        L.d.push_back(std::move(column));
      }
    }
    bool any = !L.verts.empty();
    if (k < x.lo && !any) break;
    if (any) {
      // d[b][a] layout.
      std::size_t nb = levels.count(k + 1) ? levels[k + 1].verts.size() : 0;
      std::vector<std::vector<SparseVec>> d(nb, std::vector<SparseVec>(L.verts.size()));
      for (std::size_t a = 0; a < L.verts.size(); ++a)
        for (std::size_t b = 0; b < nb; ++b) d[b][a] = L.d[a][b];
      L.d = std::move(d);
      for (auto v : L.verts) L.rep = direct_sum(L.rep, id.object(v));
      // d map realized through the identity functor.
      if (nb > 0) {
        ProjComplex two{alg, 0, {L.verts, levels[k + 1].verts}, {L.d}};
        L.dmap = realize(two, id).diffs[0];
      } else {
        L.dmap = zero_morphism(L.rep, zero_rep(alg));
      }
      // f: e_v |-> y extended along paths.
      Morphism f;
      for (std::size_t w = 0; w < nv; ++w) f.comps.emplace_back(xk.dims[w], L.rep.dims[w]);
      std::vector<std::size_t> col_off(nv, 0);
      for (std::size_t a = 0; a < L.verts.size(); ++a) {
        std::size_t v = L.verts[a];
        for (std::size_t w = 0; w < nv; ++w) {
          auto blk = alg->between(v, w);
          for (std::size_t i = 0; i < blk.size(); ++i) {
            Vector img = nrf::apply(xk.action(blk[i]), L.f[a]);
            for (std::size_t r = 0; r < img.size(); ++r) f.comps[w](r, col_off[w] + i) = img[r];
          }
          col_off[w] += blk.size();
        }
      }
      L.fmap = std::move(f);
      levels[k] = std::move(L);
    }
  }

  if (levels.empty()) return out;
  int lo = levels.begin()->first, hi = levels.rbegin()->first;
  out.lo = lo;
  for (int k = lo; k <= hi; ++k) {
    auto it = levels.find(k);
    out.verts.push_back(it == levels.end() ? std::vector<std::size_t>{} : it->second.verts);
  }
  for (int k = lo; k < hi; ++k) {
    std::size_t na = out.verts[static_cast<std::size_t>(k - lo)].size();
    std::size_t nb = out.verts[static_cast<std::size_t>(k - lo + 1)].size();
    auto it = levels.find(k);
    if (it != levels.end() && nb > 0 && !it->second.d.empty()) {
      out.diff.push_back(it->second.d);
    } else {
      out.diff.emplace_back(nb, std::vector<SparseVec>(na));
    }
  }
  return minimize(out);
}

ProjComplex projective_resolution(const Rep& m, std::size_t cap) { return to_projective_complex(stalk(m, 0), cap); }

ProjComplex to_injective_complex(const Complex& x, std::size_t cap) {
  AlgebraPtr op = opposite_of(x.alg);
  Complex dx{op, -x.hi(), {}, {}};
  for (int k = x.hi(); k >= x.lo; --k) dx.terms.push_back(dual(x.term(k), op));
  for (int k = x.hi() - 1; k >= x.lo; --k) dx.diffs.push_back(dual(diff_at(x, k)));
  ProjComplex q = to_projective_complex(dx, cap);
  ProjComplex r{x.alg, -q.hi(), {}, {}};
  for (int k = q.hi(); k >= q.lo; --k) r.verts.push_back(q.verts[static_cast<std::size_t>(k - q.lo)]);
  // q.diff at degree j maps q^j -> q^{j+1}; its dual maps r^{-j-1} -> r^{-j}.
  for (int j = q.hi() - 1; j >= q.lo; --j) {
    const auto& d = q.diff[static_cast<std::size_t>(j - q.lo)];
    std::size_t nb = d.size();                                        // summands of q^{j+1}
    std::size_t na = q.verts[static_cast<std::size_t>(j - q.lo)].size();  // summands of q^j
    std::vector<std::vector<SparseVec>> t(na, std::vector<SparseVec>(nb));
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t a = 0; a < na; ++a) t[a][b] = d[b][a];
    r.diff.push_back(std::move(t));
  }
  return r;
}

std::size_t hom_derived_dim(const ProjComplex& p, const Complex& y) {
  if (p.verts.empty()) return 0;
  // Index blocks of Hom^q = prod_k Hom(P^k, Y^{k+q}).
  auto layout = [&](int q) {
    std::vector<std::vector<std::size_t>> off(p.verts.size());
    std::size_t n = 0;
    for (std::size_t k = 0; k < p.verts.size(); ++k) {
      Rep t = y.term(p.lo + static_cast<int>(k) + q);
      for (auto v : p.verts[k]) {
        off[k].push_back(n);
        n += t.dims[v];
      }
    }
    return std::make_pair(off, n);
  };
  auto differential = [&](int q) {
    auto [from, nf] = layout(q);
    auto [to, nt] = layout(q + 1);
    Matrix m(nt, nf);
    Rational sign = (q % 2 == 0) ? -1 : 1;  // -(-1)^q
    for (std::size_t k = 0; k < p.verts.size(); ++k) {
      int deg = p.lo + static_cast<int>(k);
      Rep yt = y.term(deg + q);
      Morphism dy = diff_at(y, deg + q);
      for (std::size_t a = 0; a < p.verts[k].size(); ++a) {
        std::size_t v = p.verts[k][a];
        const Matrix& dv = dy.comps[v];
        for (std::size_t i = 0; i < dv.rows(); ++i)
          for (std::size_t j = 0; j < dv.cols(); ++j) m(to[k][a] + i, from[k][a] + j) += dv(i, j);
        if (k + 1 < p.verts.size()) {
          Rep yn = y.term(deg + 1 + q);
          const auto& d = p.diff[k];
          for (std::size_t b = 0; b < p.verts[k + 1].size(); ++b) {
            if (d[b][a].empty()) continue;
            Matrix act = yn.action(d[b][a], p.verts[k + 1][b], v);
            for (std::size_t i = 0; i < act.rows(); ++i)
              for (std::size_t j = 0; j < act.cols(); ++j)
                if (sgn(act(i, j)) != 0) m(to[k][a] + i, from[k + 1][b] + j) += sign * act(i, j);
          }
        }
      }
      (void)yt;
    }
    return m;
  };
  Matrix d0 = differential(0);
  Matrix dm1 = differential(-1);
  std::size_t n0 = d0.cols();
  return n0 - rank(d0) - rank(dm1);
}

}  // namespace nrf
