#include "nrf/repn.hpp"

#include "nrf/decompose.hpp"
#include "nrf/errors.hpp"

#include <map>
#include <random>

namespace nrf {

std::size_t Rep::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims) s += d;
  return s;
}

Matrix Rep::action(std::size_t basis_index) const {
  const auto& b = alg->basis(basis_index);
  Matrix m = nrf::identity(dims[b.source]);
  for (auto a : b.word) m = multiply(maps[a], m);
  return m;
}

Matrix Rep::action(const SparseVec& element, std::size_t x, std::size_t y) const {
  Matrix out(dims[y], dims[x]);
  for (const auto& [i, c] : element) {
    const auto& b = alg->basis(i);
    if (b.source != x || b.target != y) throw std::logic_error("Rep::action: element outside e_x A e_y");
    out = nrf::add(out, nrf::scale(action(i), c));
  }
  return out;
}

Rep zero_rep(const AlgebraPtr& a) {
  Rep r{a, std::vector<std::size_t>(a->num_vertices(), 0), {}};
  for (const auto& ar : a->quiver().arrows()) {
    (void)ar;
    r.maps.emplace_back(0, 0);
  }
  return r;
}

bool satisfies_relations(const Rep& m) {
  const Quiver& q = m.alg->quiver();
  for (const auto& r : m.alg->relations()) {
    const Path& p0 = r.terms.front().path;
    Matrix total(m.dims[p0.target(q)], m.dims[p0.source]);
    for (const auto& t : r.terms) {
      Matrix x = nrf::identity(m.dims[t.path.source]);
      for (auto a : t.path.arrows) x = multiply(m.maps[a], x);
      total = nrf::add(total, nrf::scale(x, t.coeff));
    }
    if (!is_zero(total)) return false;
  }
  return true;
}

Rep projective(const AlgebraPtr& a, std::size_t i) {
  const Quiver& q = a->quiver();
  Rep r{a, {}, {}};
  std::vector<std::vector<std::size_t>> at(q.num_vertices());
  std::vector<std::size_t> pos(a->dim(), 0);
  for (std::size_t x = 0; x < q.num_vertices(); ++x) {
    at[x] = a->between(i, x);
    for (std::size_t k = 0; k < at[x].size(); ++k) pos[at[x][k]] = k;
    r.dims.push_back(at[x].size());
  }
  for (std::size_t al = 0; al < q.num_arrows(); ++al) {
    std::size_t x = q.arrow(al).source, y = q.arrow(al).target;
    Matrix m(r.dims[y], r.dims[x]);
    for (std::size_t c = 0; c < at[x].size(); ++c)
      for (const auto& [k, v] : a->right_arrow(a->unit(at[x][c]), al)) m(pos[k], c) = v;
    r.maps.push_back(std::move(m));
  }
  return r;
}

Rep injective(const AlgebraPtr& a, std::size_t i) {
  const Quiver& q = a->quiver();
  Rep r{a, {}, {}};
  std::vector<std::vector<std::size_t>> at(q.num_vertices());
  std::vector<std::size_t> pos(a->dim(), 0);
  for (std::size_t x = 0; x < q.num_vertices(); ++x) {
    at[x] = a->between(x, i);
    for (std::size_t k = 0; k < at[x].size(); ++k) pos[at[x][k]] = k;
    r.dims.push_back(at[x].size());
  }
  for (std::size_t al = 0; al < q.num_arrows(); ++al) {
    std::size_t x = q.arrow(al).source, y = q.arrow(al).target;
    auto e = a->arrow_element(al);
    Matrix m(r.dims[y], r.dims[x]);
    if (e) {
      // (alpha . phi)(r) = phi(alpha r) for r a path y -> i.
      for (std::size_t row = 0; row < at[y].size(); ++row)
        for (const auto& [k, v] : a->product(*e, at[y][row])) m(row, pos[k]) = v;
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

Rep simple(const AlgebraPtr& a, std::size_t i) {
  Rep r = zero_rep(a);
  r.dims[i] = 1;
  const Quiver& q = a->quiver();
  for (std::size_t al = 0; al < q.num_arrows(); ++al)
    r.maps[al] = Matrix(r.dims[q.arrow(al).target], r.dims[q.arrow(al).source]);
  return r;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  Rep r{a.alg, {}, {}};
  for (std::size_t x = 0; x < a.dims.size(); ++x) r.dims.push_back(a.dims[x] + b.dims[x]);
  for (std::size_t al = 0; al < a.maps.size(); ++al) r.maps.push_back(block_diag(a.maps[al], b.maps[al]));
  return r;
}

Rep direct_sum(const std::vector<Rep>& parts, const AlgebraPtr& a) {
  Rep r = zero_rep(a);
  for (const auto& p : parts) r = direct_sum(r, p);
  return r;
}

Rep regular(const AlgebraPtr& a) {
  std::vector<Rep> parts;
  for (std::size_t i = 0; i < a->num_vertices(); ++i) parts.push_back(projective(a, i));
  return direct_sum(parts, a);
}

Rep dual_regular(const AlgebraPtr& a) {
  std::vector<Rep> parts;
  for (std::size_t i = 0; i < a->num_vertices(); ++i) parts.push_back(injective(a, i));
  return direct_sum(parts, a);
}

Rep dual(const Rep& m, const AlgebraPtr& op) {
  Rep r{op, m.dims, {}};
  for (const auto& x : m.maps) r.maps.push_back(transpose(x));
  return r;
}

Morphism dual(const Morphism& f) {
  Morphism g;
  for (const auto& x : f.comps) g.comps.push_back(transpose(x));
  return g;
}

Morphism identity(const Rep& m) {
  Morphism f;
  for (auto d : m.dims) f.comps.push_back(nrf::identity(d));
  return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  for (std::size_t x = 0; x < f.comps.size(); ++x) h.comps.push_back(multiply(g.comps[x], f.comps[x]));
  return h;
}

Morphism add(const Morphism& f, const Morphism& g) {
  Morphism h;
  for (std::size_t x = 0; x < f.comps.size(); ++x) h.comps.push_back(nrf::add(f.comps[x], g.comps[x]));
  return h;
}

Morphism scale(const Morphism& f, const Rational& c) {
  Morphism h;
  for (const auto& x : f.comps) h.comps.push_back(nrf::scale(x, c));
  return h;
}

bool is_zero(const Morphism& f) {
  for (const auto& x : f.comps)
    if (!is_zero(x)) return false;
  return true;
}

bool is_intertwiner(const Rep& m, const Rep& n, const Morphism& f) {
  const Quiver& q = m.alg->quiver();
  for (std::size_t al = 0; al < q.num_arrows(); ++al) {
    std::size_t x = q.arrow(al).source, y = q.arrow(al).target;
    if (multiply(n.maps[al], f.comps[x]) != multiply(f.comps[y], m.maps[al])) return false;
  }
  return true;
}

bool is_invertible(const Morphism& f) {
  for (const auto& x : f.comps)
    if (x.rows() != x.cols() || rank(x) != x.rows()) return false;
  return true;
}

std::vector<Morphism> hom(const Rep& m, const Rep& n) {
  const Quiver& q = m.alg->quiver();
  std::size_t nv = q.num_vertices();
  std::vector<std::size_t> off(nv + 1, 0);
  for (std::size_t x = 0; x < nv; ++x) off[x + 1] = off[x] + n.dims[x] * m.dims[x];
  auto var = [&](std::size_t x, std::size_t r, std::size_t c) { return off[x] + r * m.dims[x] + c; };
  std::vector<SparseVec> rows;
  for (std::size_t al = 0; al < q.num_arrows(); ++al) {
    std::size_t x = q.arrow(al).source, y = q.arrow(al).target;
    const Matrix& na = n.maps[al];
    const Matrix& ma = m.maps[al];
    // (N_a f_x - f_y M_a)(r, c) = 0
    for (std::size_t r = 0; r < n.dims[y]; ++r)
      for (std::size_t c = 0; c < m.dims[x]; ++c) {
        std::map<std::size_t, Rational> eq;
        for (std::size_t k = 0; k < n.dims[x]; ++k)
          if (sgn(na(r, k)) != 0) eq[var(x, k, c)] += na(r, k);
        for (std::size_t k = 0; k < m.dims[y]; ++k)
          if (sgn(ma(k, c)) != 0) eq[var(y, r, k)] -= ma(k, c);
        SparseVec row;
        for (auto& [i, v] : eq)
          if (sgn(v) != 0) row.emplace_back(i, v);
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  auto ker = sparse_rank_and_kernel(std::move(rows), off[nv]);
  std::vector<Morphism> out;
  for (const auto& v : ker.kernel) {
    Morphism f;
    for (std::size_t x = 0; x < nv; ++x) {
      Matrix c(n.dims[x], m.dims[x]);
      for (std::size_t r = 0; r < n.dims[x]; ++r)
        for (std::size_t k = 0; k < m.dims[x]; ++k) c(r, k) = v[var(x, r, k)];
      f.comps.push_back(std::move(c));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const Rep& m, const Rep& n) { return hom(m, n).size(); }

Matrix hstack(const Matrix& a, const Matrix& b) {
  std::size_t rows = a.cols() ? a.rows() : b.rows();
  Matrix out(rows, a.cols() + b.cols());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

Matrix column_basis(const Matrix& m) {
  Matrix t = m;
  auto piv = rref_in_place(t);
  Matrix out(m.rows(), piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, piv[k]);
  return out;
}

Matrix kernel_basis(const Matrix& m) {
  auto k = rank_and_kernel(m, Rational(0), Rational(1));
  return from_columns(k.kernel, m.cols());
}

std::optional<Matrix> coordinates_in(const Matrix& basis, const Matrix& v) {
  std::size_t n = basis.cols();
  Matrix aug = hstack(basis, v);
  if (basis.rows() == 0) return Matrix(n, v.cols());
  auto piv = rref_in_place(aug);
  Matrix out(n, v.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= n) return std::nullopt;
    for (std::size_t c = 0; c < v.cols(); ++c) out(piv[r], c) = aug(r, n + c);
  }
  if (piv.size() != n) throw std::logic_error("coordinates_in: basis columns are dependent");
  return out;
}

SubRep subrep(const Rep& m, const std::vector<Matrix>& spans) {
  const Quiver& q = m.alg->quiver();
  SubRep s{Rep{m.alg, {}, {}}, {}};
  for (const auto& b : spans) s.rep.dims.push_back(b.cols());
  for (std::size_t al = 0; al < q.num_arrows(); ++al) {
    std::size_t x = q.arrow(al).source, y = q.arrow(al).target;
    auto c = coordinates_in(spans[y], multiply(m.maps[al], spans[x]));
    if (!c) throw std::logic_error("subrep: subspace not closed under arrows");
    s.rep.maps.push_back(std::move(*c));
  }
  s.map.comps = spans;
  return s;
}

SubRep kernel(const Rep& m, const Rep& n, const Morphism& f) {
  (void)n;
  std::vector<Matrix> spans;
  for (std::size_t x = 0; x < m.dims.size(); ++x) {
    Matrix k = kernel_basis(f.comps[x]);
    if (k.rows() != m.dims[x]) k = Matrix(m.dims[x], k.cols());
    spans.push_back(std::move(k));
  }
  return subrep(m, spans);
}

SubRep image(const Rep& m, const Rep& n, const Morphism& f) {
  (void)m;
  std::vector<Matrix> spans;
  for (std::size_t x = 0; x < n.dims.size(); ++x) {
    Matrix b = column_basis(f.comps[x]);
    if (b.rows() != n.dims[x]) b = Matrix(n.dims[x], 0);
    spans.push_back(std::move(b));
  }
  return subrep(n, spans);
}

namespace {

// Quotient of K^d by span(cols): returns (complement columns, projection).
std::pair<Matrix, Matrix> quotient_data(const Matrix& cols, std::size_t d) {
  Echelon e(d);
  for (std::size_t c = 0; c < cols.cols(); ++c) {
    Vector v(d);
    for (std::size_t r = 0; r < d; ++r) v[r] = cols(r, c);
    e.insert(v);
  }
  std::size_t k = e.dim();
  std::vector<Vector> comp;
  for (std::size_t i = 0; i < d; ++i) {
    Vector v(d);
    v[i] = 1;
    if (e.insert(v)) comp.push_back(v);
  }
  Matrix c = from_columns(comp, d);
  Matrix full = hstack(cols.cols() ? column_basis(cols) : Matrix(d, 0), c);
  Matrix inv = *inverse(full);
  Matrix proj(comp.size(), d);
  for (std::size_t r = 0; r < comp.size(); ++r)
    for (std::size_t j = 0; j < d; ++j) proj(r, j) = inv(k + r, j);
  return {c, proj};
}

}  // namespace

SubRep cokernel(const Rep& m, const Rep& n, const Morphism& f) {
  (void)m;
  const Quiver& q = n.alg->quiver();
  std::vector<Matrix> comp, proj;
  for (std::size_t x = 0; x < n.dims.size(); ++x) {
    Matrix img = f.comps[x].rows() == n.dims[x] ? f.comps[x] : Matrix(n.dims[x], 0);
    auto [c, p] = quotient_data(img, n.dims[x]);
    comp.push_back(std::move(c));
    proj.push_back(std::move(p));
  }
  SubRep s{Rep{n.alg, {}, {}}, {}};
  for (const auto& p : proj) s.rep.dims.push_back(p.rows());
  for (std::size_t al = 0; al < q.num_arrows(); ++al) {
    std::size_t x = q.arrow(al).source, y = q.arrow(al).target;
    s.rep.maps.push_back(multiply(proj[y], multiply(n.maps[al], comp[x])));
  }
  s.map.comps = std::move(proj);
  return s;
}

std::vector<Matrix> radical_spans(const Rep& m) {
  const Quiver& q = m.alg->quiver();
  std::vector<Matrix> out;
  for (std::size_t x = 0; x < q.num_vertices(); ++x) {
    Matrix acc(m.dims[x], 0);
    for (auto al : q.arrows_to(x)) acc = hstack(acc, m.maps[al]);
    out.push_back(column_basis(acc));
    if (out.back().rows() != m.dims[x]) out.back() = Matrix(m.dims[x], 0);
  }
  return out;
}

std::vector<std::size_t> top_dims(const Rep& m) {
  auto rad = radical_spans(m);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < rad.size(); ++x) out.push_back(m.dims[x] - rad[x].cols());
  return out;
}

Rep change_basis(const Rep& m, const std::vector<Matrix>& g) {
  const Quiver& q = m.alg->quiver();
  Rep r{m.alg, m.dims, {}};
  std::vector<Matrix> inv;
  for (const auto& x : g) inv.push_back(*inverse(x));
  for (std::size_t al = 0; al < q.num_arrows(); ++al)
    r.maps.push_back(multiply(g[q.arrow(al).target], multiply(m.maps[al], inv[q.arrow(al).source])));
  return r;
}

bool is_isomorphic(const Rep& m, const Rep& n, std::uint64_t seed) {
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  auto h = hom(m, n);
  if (h.empty()) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-7, 7);
  for (std::size_t attempt = 0; attempt < 6; ++attempt) {
    Morphism f = scale(h[0], 0);
    for (const auto& b : h) f = add(f, scale(b, coef(rng)));
    if (is_invertible(f)) return true;
  }
  // Random combinations miss an isomorphism only on a proper subvariety;
  // confirm a negative answer by comparing decompositions.
  auto dm = decompose(m, seed);
  auto dn = decompose(n, seed);
  return same_decomposition(dm, dn, seed);
}

}  // namespace nrf
