#include "nrf/bimodule.hpp"

#include "nrf/errors.hpp"

#include <map>
#include <mutex>

namespace nrf {

namespace {

std::vector<std::size_t> block_position(const Algebra& a) {
  std::vector<std::size_t> pos(a.dim(), 0);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> count;
  for (std::size_t i = 0; i < a.dim(); ++i) pos[i] = count[{a.basis(i).source, a.basis(i).target}]++;
  return pos;
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

struct EnvLayout {
  std::size_t n, arrows, offset;
  explicit EnvLayout(const Algebra& a)
      : n(a.num_vertices()), arrows(a.quiver().num_arrows()), offset(a.quiver().num_arrows() * a.num_vertices()) {}
  bool is_right(std::size_t idx) const { return idx < offset; }
  // Right arrow alpha x v.
  std::size_t right_arrow(std::size_t idx) const { return idx / n; }
  std::size_t right_vertex(std::size_t idx) const { return idx % n; }
  // Left arrow x x beta^op.
  std::size_t left_vertex(std::size_t idx) const { return (idx - offset) / arrows; }
  std::size_t left_arrow(std::size_t idx) const { return (idx - offset) % arrows; }
};

// M over A and N over A^op combined into a representation of A (x) A^op.
Rep external_tensor(const Rep& m, const Rep& n, const AlgebraPtr& env, const Algebra& a) {
  EnvLayout L(a);
  Rep r{env, {}, {}};
  for (std::size_t x = 0; x < L.n; ++x)
    for (std::size_t v = 0; v < L.n; ++v) r.dims.push_back(m.dims[x] * n.dims[v]);
  for (std::size_t idx = 0; idx < env->quiver().num_arrows(); ++idx) {
    if (L.is_right(idx))
      r.maps.push_back(kron(m.maps[L.right_arrow(idx)], nrf::identity(n.dims[L.right_vertex(idx)])));
    else
      r.maps.push_back(kron(nrf::identity(m.dims[L.left_vertex(idx)]), n.maps[L.left_arrow(idx)]));
  }
  return r;
}

// Quotient of K^d by the span of `rels`: chosen standard vectors and the
// projection onto their span.
std::pair<std::vector<std::size_t>, Matrix> quotient_by(const std::vector<Vector>& rels, std::size_t d) {
  Echelon e(d);
  for (const auto& r : rels) e.insert(r);
  std::size_t k = e.dim();
  std::vector<std::size_t> chosen;
  Matrix full(d, 0);
  std::vector<Vector> cols;
  // Basis of the relation span, then chosen standard vectors.
  Matrix relb = from_columns(rels, d);
  Matrix rb = rels.empty() ? Matrix(d, 0) : column_basis(relb);
  for (std::size_t i = 0; i < d; ++i) {
    Vector v(d);
    v[i] = 1;
    if (e.insert(v)) {
      chosen.push_back(i);
      cols.push_back(std::move(v));
    }
  }
  Matrix all = hstack(rb, from_columns(cols, d));
  Matrix inv = *inverse(all);
  Matrix proj(chosen.size(), d);
  for (std::size_t r = 0; r < chosen.size(); ++r)
    for (std::size_t j = 0; j < d; ++j) proj(r, j) = inv(k + r, j);
  return {chosen, proj};
}

}  // namespace

Rep outer_tensor(const Rep& m, const Rep& n, const AlgebraPtr& ab) {
  std::size_t na = m.alg->num_vertices(), nb = n.alg->num_vertices();
  std::size_t arrows_a = m.alg->quiver().num_arrows(), arrows_b = n.alg->quiver().num_arrows();
  Rep r{ab, {}, {}};
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) r.dims.push_back(m.dims[x] * n.dims[y]);
  for (std::size_t al = 0; al < arrows_a; ++al)
    for (std::size_t y = 0; y < nb; ++y) r.maps.push_back(kron(m.maps[al], nrf::identity(n.dims[y])));
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t be = 0; be < arrows_b; ++be) r.maps.push_back(kron(nrf::identity(m.dims[x]), n.maps[be]));
  return r;
}

AlgebraPtr enveloping_of(const AlgebraPtr& a) {
  static std::mutex mu;
  static std::map<const Algebra*, AlgebraPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(a.get());
    if (it != cache.end()) return it->second;
  }
  AlgebraPtr e = tensor_product(a, opposite_of(a));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(a.get(), e).first->second;
}

Rep regular_bimodule(const AlgebraPtr& a) {
  AlgebraPtr env = enveloping_of(a);
  EnvLayout L(*a);
  auto pos = block_position(*a);
  const Quiver& q = a->quiver();
  Rep r{env, {}, {}};
  for (std::size_t x = 0; x < L.n; ++x)
    for (std::size_t v = 0; v < L.n; ++v) r.dims.push_back(a->between(v, x).size());
  for (std::size_t idx = 0; idx < env->quiver().num_arrows(); ++idx) {
    if (L.is_right(idx)) {
      std::size_t al = L.right_arrow(idx), v = L.right_vertex(idx);
      std::size_t x = q.arrow(al).source, x2 = q.arrow(al).target;
      auto from = a->between(v, x);
      Matrix m(a->between(v, x2).size(), from.size());
      for (std::size_t c = 0; c < from.size(); ++c)
        for (const auto& [k, y] : a->right_arrow(a->unit(from[c]), al)) m(pos[k], c) = y;
      r.maps.push_back(std::move(m));
    } else {
      std::size_t x = L.left_vertex(idx), be = L.left_arrow(idx);
      std::size_t u = q.arrow(be).source, v = q.arrow(be).target;
      auto from = a->between(v, x);
      Matrix m(a->between(u, x).size(), from.size());
      auto e = *a->arrow_element(be);
      for (std::size_t c = 0; c < from.size(); ++c)
        for (const auto& [k, y] : a->product(e, from[c])) m(pos[k], c) = y;
      r.maps.push_back(std::move(m));
    }
  }
  return r;
}

Rep dual_bimodule(const AlgebraPtr& a) {
  AlgebraPtr env = enveloping_of(a);
  EnvLayout L(*a);
  auto pos = block_position(*a);
  const Quiver& q = a->quiver();
  Rep r{env, {}, {}};
  for (std::size_t x = 0; x < L.n; ++x)
    for (std::size_t v = 0; v < L.n; ++v) r.dims.push_back(a->between(x, v).size());
  for (std::size_t idx = 0; idx < env->quiver().num_arrows(); ++idx) {
    if (L.is_right(idx)) {
      // (phi . alpha)(r) = phi(alpha r)
      std::size_t al = L.right_arrow(idx), v = L.right_vertex(idx);
      std::size_t x = q.arrow(al).source, x2 = q.arrow(al).target;
      auto rows = a->between(x2, v);
      Matrix m(rows.size(), a->between(x, v).size());
      auto e = *a->arrow_element(al);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [k, y] : a->product(e, rows[i])) m(i, pos[k]) = y;
      r.maps.push_back(std::move(m));
    } else {
      // (beta . phi)(r) = phi(r beta)
      std::size_t x = L.left_vertex(idx), be = L.left_arrow(idx);
      std::size_t u = q.arrow(be).source, v = q.arrow(be).target;
      auto rows = a->between(x, u);
      Matrix m(rows.size(), a->between(x, v).size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [k, y] : a->right_arrow(a->unit(rows[i]), be)) m(i, pos[k]) = y;
      r.maps.push_back(std::move(m));
    }
  }
  return r;
}

Rep twist_bimodule(const AlgebraPtr& a, const AlgebraMorphism& phi) {
  check_morphism(*a, phi);
  AlgebraPtr env = enveloping_of(a);
  EnvLayout L(*a);
  auto pos = block_position(*a);
  const Quiver& q = a->quiver();
  Rep r{env, {}, {}};
  for (std::size_t x = 0; x < L.n; ++x)
    for (std::size_t v = 0; v < L.n; ++v) r.dims.push_back(a->between(v, phi.vertex_map[x]).size());
  for (std::size_t idx = 0; idx < env->quiver().num_arrows(); ++idx) {
    if (L.is_right(idx)) {
      std::size_t al = L.right_arrow(idx), v = L.right_vertex(idx);
      std::size_t x = q.arrow(al).source, x2 = q.arrow(al).target;
      auto from = a->between(v, phi.vertex_map[x]);
      Matrix m(a->between(v, phi.vertex_map[x2]).size(), from.size());
      for (std::size_t c = 0; c < from.size(); ++c)
        for (const auto& [k, y] : a->multiply(a->unit(from[c]), phi.arrow_images[al])) m(pos[k], c) = y;
      r.maps.push_back(std::move(m));
    } else {
      std::size_t x = L.left_vertex(idx), be = L.left_arrow(idx);
      std::size_t u = q.arrow(be).source, v = q.arrow(be).target;
      auto from = a->between(v, phi.vertex_map[x]);
      Matrix m(a->between(u, phi.vertex_map[x]).size(), from.size());
      auto e = *a->arrow_element(be);
      for (std::size_t c = 0; c < from.size(); ++c)
        for (const auto& [k, y] : a->product(e, from[c])) m(pos[k], c) = y;
      r.maps.push_back(std::move(m));
    }
  }
  return r;
}

Rep as_right_module(const Rep& b, const AlgebraPtr& a) {
  ProjFunctor f = bimodule_functor(b, a);
  Rep r = zero_rep(a);
  for (std::size_t v = 0; v < a->num_vertices(); ++v) r = direct_sum(r, f.object(v));
  return r;
}

Rep as_left_module(const Rep& b, const AlgebraPtr& a) {
  AlgebraPtr op = opposite_of(a);
  EnvLayout L(*a);
  Rep r = zero_rep(op);
  for (std::size_t x = 0; x < L.n; ++x) {
    Rep part{op, {}, {}};
    for (std::size_t v = 0; v < L.n; ++v) part.dims.push_back(b.dims[x * L.n + v]);
    for (std::size_t be = 0; be < L.arrows; ++be) part.maps.push_back(b.maps[L.offset + x * L.arrows + be]);
    r = direct_sum(r, part);
  }
  return r;
}

BimoduleTensor tensor_over(const Rep& m, const Rep& nb, const AlgebraPtr& a) {
  AlgebraPtr env = enveloping_of(a);
  EnvLayout L(*a);
  const Quiver& q = a->quiver();
  std::size_t n = L.n;
  auto at = [n](std::size_t x, std::size_t v) { return x * n + v; };
  BimoduleTensor out;
  out.rep = Rep{env, {}, {}};
  std::vector<std::size_t> raw_dim;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> off;
      std::size_t d = 0;
      for (std::size_t w = 0; w < n; ++w) {
        off.push_back(d);
        d += m.dims[at(w, v)] * nb.dims[at(x, w)];
      }
      // (m alpha) (x) n' - m (x) (alpha n') for alpha : w -> w2.
      std::vector<Vector> rels;
      for (std::size_t al = 0; al < q.num_arrows(); ++al) {
        std::size_t w = q.arrow(al).source, w2 = q.arrow(al).target;
        const Matrix& ma = m.maps[al * n + v];                        // M(w,v) -> M(w2,v)
        const Matrix& na = nb.maps[L.offset + x * L.arrows + al];     // N(x,w2) -> N(x,w)
        std::size_t dm = m.dims[at(w, v)], dn2 = nb.dims[at(x, w2)];
        std::size_t dm2 = m.dims[at(w2, v)], dn = nb.dims[at(x, w)];
        for (std::size_t i = 0; i < dm; ++i)
          for (std::size_t j = 0; j < dn2; ++j) {
            Vector r(d);
            for (std::size_t k = 0; k < dm2; ++k)
              if (sgn(ma(k, i)) != 0) r[off[w2] + k * dn2 + j] += ma(k, i);
            for (std::size_t k = 0; k < dn; ++k)
              if (sgn(na(k, j)) != 0) r[off[w] + i * dn + k] -= na(k, j);
            if (!is_zero(r)) rels.push_back(std::move(r));
          }
      }
      auto [chosen, proj] = quotient_by(rels, d);
      std::vector<BimoduleTensor::Pair> pairs;
      for (auto c : chosen) {
        std::size_t w = 0;
        while (w + 1 < n && off[w + 1] <= c) ++w;
        std::size_t dn = nb.dims[at(x, w)];
        pairs.push_back({w, (c - off[w]) / dn, (c - off[w]) % dn});
      }
      out.rep.dims.push_back(chosen.size());
      out.pairs.push_back(std::move(pairs));
      out.offsets.push_back(std::move(off));
      out.projection.push_back(std::move(proj));
      raw_dim.push_back(d);
    }
  // Arrow actions: right arrows act on the N factor, left arrows on M.
  for (std::size_t idx = 0; idx < env->quiver().num_arrows(); ++idx) {
    std::size_t s = env->quiver().arrow(idx).source, t = env->quiver().arrow(idx).target;
    Matrix raw(raw_dim[t], raw_dim[s]);
    std::size_t x = s / n, v = s % n;
    for (std::size_t w = 0; w < n; ++w) {
      Matrix blk;
      std::size_t ro = out.offsets[t][w], co = out.offsets[s][w];
      if (L.is_right(idx)) {
        std::size_t x2 = t / n;
        (void)x2;
        blk = kron(nrf::identity(m.dims[at(w, v)]), nb.maps[L.right_arrow(idx) * n + w]);
      } else {
        std::size_t be = L.left_arrow(idx);
        blk = kron(m.maps[L.offset + w * L.arrows + be], nrf::identity(nb.dims[at(x, w)]));
      }
      for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j) raw(ro + i, co + j) = blk(i, j);
    }
    Matrix emb(raw_dim[s], out.pairs[s].size());
    for (std::size_t c = 0; c < out.pairs[s].size(); ++c) {
      const auto& p = out.pairs[s][c];
      emb(out.offsets[s][p.w] + p.m * nb.dims[at(x, p.w)] + p.n, c) = 1;
    }
    out.rep.maps.push_back(multiply(out.projection[t], multiply(raw, emb)));
  }
  return out;
}

namespace {

// Hom_A(-, A) applied to a complex of projective bimodules:
// Hom_A(P^e_{(x,v)}, A) = I_v (x) P^op_x.
Complex hom_into_regular(const ProjComplex& p, const AlgebraPtr& a) {
  AlgebraPtr env = enveloping_of(a);
  AlgebraPtr op = opposite_of(a);
  std::size_t n = a->num_vertices(), dim = a->dim();
  ProjFunctor nu = nakayama_functor(a);
  ProjFunctor idop = identity_functor(op);
  std::map<std::size_t, Rep> objects;
  auto object = [&](std::size_t ev) -> const Rep& {
    auto it = objects.find(ev);
    if (it == objects.end())
      it = objects.emplace(ev, external_tensor(nu.object(ev % n), idop.object(ev / n), env, *a)).first;
    return it->second;
  };
  auto morphism = [&](const SparseVec& el, std::size_t from, std::size_t to) {
    const Rep& src = object(from);
    const Rep& dst = object(to);
    Morphism f;
    for (std::size_t k = 0; k < env->num_vertices(); ++k) f.comps.emplace_back(dst.dims[k], src.dims[k]);
    for (const auto& [i, c] : el) {
      const Morphism& mb = nu.morphism(i % dim);
      const Morphism& ma = idop.morphism(i / dim);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t v = 0; v < n; ++v) {
          Matrix k = kron(mb.comps[x], ma.comps[v]);
          f.comps[x * n + v] = nrf::add(f.comps[x * n + v], nrf::scale(k, c));
        }
    }
    return f;
  };
  Complex c{env, -p.hi(), {}, {}};
  for (int k = p.hi(); k >= p.lo; --k) {
    Rep r = zero_rep(env);
    for (auto v : p.verts[static_cast<std::size_t>(k - p.lo)]) r = direct_sum(r, object(v));
    c.terms.push_back(std::move(r));
  }
  // Degree j of c is Hom(P^{-j}); the differential comes from P^{-j-1} -> P^{-j}.
  for (int j = c.lo; j < c.hi(); ++j) {
    const auto& d = p.diff[static_cast<std::size_t>(-j - 1 - p.lo)];
    const auto& top = p.verts[static_cast<std::size_t>(-j - p.lo)];
    const auto& bot = p.verts[static_cast<std::size_t>(-j - 1 - p.lo)];
    const Rep& from = c.terms[static_cast<std::size_t>(j - c.lo)];
    const Rep& to = c.terms[static_cast<std::size_t>(j + 1 - c.lo)];
    Morphism m;
    for (std::size_t k = 0; k < env->num_vertices(); ++k) {
      Matrix blk(to.dims[k], from.dims[k]);
      std::size_t row = 0;
      for (std::size_t a2 = 0; a2 < bot.size(); ++a2) {
        std::size_t col = 0;
        for (std::size_t b = 0; b < top.size(); ++b) {
          std::size_t cols = object(top[b]).dims[k];
          if (!d[b][a2].empty()) {
            Morphism e = morphism(d[b][a2], top[b], bot[a2]);
            for (std::size_t i = 0; i < e.comps[k].rows(); ++i)
              for (std::size_t jj = 0; jj < cols; ++jj) blk(row + i, col + jj) = e.comps[k](i, jj);
          }
          col += cols;
        }
        row += object(bot[a2]).dims[k];
      }
      m.comps.push_back(std::move(blk));
    }
    c.diffs.push_back(std::move(m));
  }
  return c;
}

}  // namespace

Rep ext_dual_bimodule(const AlgebraPtr& a, std::size_t n, std::size_t cap) {
  AlgebraPtr env = enveloping_of(a);
  ProjComplex p = to_projective_complex(stalk(dual_bimodule(a)), cap);
  if (p.verts.empty()) return zero_rep(env);
  return cohomology(hom_into_regular(p, a), static_cast<int>(n));
}

TensorAlgebra tensor_algebra(const AlgebraPtr& a, const Rep& t, std::size_t cap) {
  std::size_t n = a->num_vertices(), dim = a->dim();
  auto at = [n](std::size_t x, std::size_t v) { return x * n + v; };
  std::vector<Rep> powers{regular_bimodule(a)};
  std::vector<BimoduleTensor> steps(1);
  if (t.total_dim() > 0) {
    powers.push_back(t);
    steps.emplace_back();
    while (true) {
      if (powers.size() > cap) throw Error(ErrorKind::NotNilpotent, "tensor powers do not vanish by degree " + std::to_string(cap));
      BimoduleTensor s = tensor_over(powers.back(), t, a);
      if (s.rep.total_dim() == 0) break;
      powers.push_back(s.rep);
      steps.push_back(std::move(s));
    }
  }
  struct Elem {
    std::size_t k, x, v, i;
  };
  std::vector<Elem> elems;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> index;
  TensorAlgebra out;
  for (std::size_t k = 0; k < powers.size(); ++k) {
    out.degree_dims.push_back(powers[k].total_dim());
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t i = 0; i < powers[k].dims[at(x, v)]; ++i) {
          index[{k, x, v, i}] = elems.size();
          elems.push_back({k, x, v, i});
        }
  }
  auto pos = block_position(*a);
  StructureConstants sc;
  sc.num_vertices = n;
  sc.vertex_names = a->quiver().vertices();
  for (const auto& e : elems) {
    sc.source.push_back(e.v);
    sc.target.push_back(e.x);
  }
  for (std::size_t v = 0; v < n; ++v) sc.idempotent.push_back(index.at({0, v, v, pos[a->vertex_element(v)]}));
  // T_0 = A: local index i at (x, v) is the i-th element of between(v, x).
  std::vector<std::vector<std::size_t>> a_basis(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t v = 0; v < n; ++v) a_basis[at(x, v)] = a->between(v, x);

  std::map<std::pair<std::size_t, std::size_t>, SparseVec> memo;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> act_cache;  // (k, env basis)
  auto act = [&](std::size_t k, std::size_t env_basis) -> const Matrix& {
    auto key = std::make_pair(k, env_basis);
    auto it = act_cache.find(key);
    if (it == act_cache.end()) it = act_cache.emplace(key, powers[k].action(env_basis)).first;
    return it->second;
  };
  auto column = [&](const Matrix& m, std::size_t c, std::size_t k, std::size_t x, std::size_t v) {
    SparseVec r;
    for (std::size_t row = 0; row < m.rows(); ++row)
      if (sgn(m(row, c)) != 0) r.emplace_back(index.at({k, x, v, row}), m(row, c));
    return r;
  };
  std::function<SparseVec(std::size_t, std::size_t)> mu = [&](std::size_t p, std::size_t q) -> SparseVec {
    const Elem& y = elems[p];
    const Elem& z = elems[q];
    if (y.x != z.v) return {};
    auto key = std::make_pair(p, q);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    SparseVec r;
    std::size_t u = z.x, v = y.v, x = y.x;
    if (y.k + z.k >= powers.size()) {
      // product lands in a vanishing power
    } else if (z.k == 0) {
      std::size_t qa = a_basis[at(z.x, z.v)][z.i];
      r = column(act(y.k, qa * dim + a->vertex_element(v)), y.i, y.k, u, v);
    } else if (y.k == 0) {
      std::size_t pa = a_basis[at(y.x, y.v)][y.i];
      r = column(act(z.k, a->vertex_element(u) * dim + pa), z.i, z.k, u, v);
    } else if (z.k == 1) {
      const BimoduleTensor& s = steps[y.k + 1];
      std::size_t raw = s.offsets[at(u, v)][x] + y.i * t.dims[at(u, x)] + z.i;
      const Matrix& pr = s.projection[at(u, v)];
      for (std::size_t row = 0; row < pr.rows(); ++row)
        if (sgn(pr(row, raw)) != 0) r.emplace_back(index.at({y.k + 1, u, v, row}), pr(row, raw));
    } else {
      const auto& pr = steps[z.k].pairs[at(u, x)][z.i];
      std::size_t zp = index.at({z.k - 1, pr.w, x, pr.m});
      std::size_t tt = index.at({1, u, pr.w, pr.n});
      for (const auto& [e, c] : mu(p, zp)) sparse_axpy(r, c, mu(e, tt));
    }
    memo.emplace(key, r);
    return r;
  };
  sc.multiply = mu;
  out.presentation = present_algebra(sc);
  return out;
}

}  // namespace nrf
