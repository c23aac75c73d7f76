#include "nrf/ar.hpp"

#include "nrf/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nrf {

Rep tau_n(const Rep& m, std::size_t n, std::size_t cap) { return tor_dual(n, m, cap); }

Rep tau_n_minus(const Rep& m, std::size_t n, std::size_t cap) {
  ProjComplex q = to_injective_complex(stalk(m), cap);
  if (q.verts.empty()) return zero_rep(m.alg);
  return cohomology(realize(q), static_cast<int>(n));
}

bool is_projective(const Rep& m) {
  std::size_t d = 0;
  for (auto v : projective_cover(m).verts) d += projective(m.alg, v).total_dim();
  return d == m.total_dim();
}

std::optional<std::size_t> as_indecomposable_projective(const Rep& m) {
  auto top = top_dims(m);
  std::size_t total = std::accumulate(top.begin(), top.end(), std::size_t{0});
  if (total != 1) return std::nullopt;
  std::size_t w = static_cast<std::size_t>(std::find(top.begin(), top.end(), std::size_t{1}) - top.begin());
  if (projective(m.alg, w).total_dim() != m.total_dim()) return std::nullopt;
  return w;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::True: return "true";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

namespace {

struct Orbit {
  Verdict status = Verdict::True;
  std::string reason;
  std::vector<Rep> entries;
  std::vector<ProjComplex> resolutions;  // of each entry
  std::size_t sigma = 0;
};

Orbit injective_orbit(const AlgebraPtr& a, std::size_t i, std::size_t n, std::size_t gl_dim, std::size_t cap) {
  Orbit o;
  Rep x = injective(a, i);
  Rep reg = regular(a);
  ProjFunctor nu = nakayama_functor(a);
  try {
    for (std::size_t step = 0;; ++step) {
      if (step > cap) {
        o.status = Verdict::Undecided;
        o.reason = "orbit of I_" + a->quiver().vertex(i) + " longer than cap";
        return o;
      }
      ProjComplex px = projective_resolution(x, cap);
      o.entries.push_back(x);
      o.resolutions.push_back(px);
      if (auto w = as_indecomposable_projective(x)) {
        o.sigma = *w;
        return o;
      }
      if (is_projective(x)) {
        o.status = Verdict::False;
        o.reason = "orbit of I_" + a->quiver().vertex(i) + " reaches a decomposable projective";
        return o;
      }
      for (std::size_t k = 0; k <= gl_dim; ++k) {
        if (k == n) continue;
        if (ext_dim(k, px, reg) != 0) {
          o.status = Verdict::False;
          o.reason = "Ext^" + std::to_string(k) + "(X, A) != 0 in the orbit of I_" + a->quiver().vertex(i);
          return o;
        }
      }
      Rep y = cohomology(realize(px, nu), -static_cast<int>(n));
      if (y.is_zero()) {
        o.status = Verdict::False;
        o.reason = "tau_n vanishes before a projective in the orbit of I_" + a->quiver().vertex(i);
        return o;
      }
      x = std::move(y);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
    o.status = Verdict::Undecided;
    o.reason = e.what();
  }
  return o;
}

}  // namespace

NrfReport decide_nrf(const AlgebraPtr& a, std::size_t n, const NrfOptions& opt) {
  NrfReport r;
  r.n = n;
  r.a = a->num_vertices();
  r.ring_indecomposable = a->quiver().is_connected();
  r.cluster_tilting = zero_rep(a);
  std::size_t cap = opt.cap ? opt.cap : default_cap(*a);
  try {
    r.gl_dim = global_dimension(a, std::max(cap, n));
    r.gl_dim_known = true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
  }
  if (!r.gl_dim_known || r.gl_dim > n) {
    r.reason = "gl.dim > n";
    return r;
  }

  std::vector<Orbit> orbits(r.a);
  std::vector<std::string> failures(r.a);
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (std::size_t i = 0; i < r.a; ++i) {
    try {
      orbits[i] = injective_orbit(a, i, n, r.gl_dim, cap);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  }
  for (const auto& f : failures)
    if (!f.empty()) throw std::runtime_error(f);

  for (const auto& o : orbits)
    if (o.status == Verdict::Undecided) {
      r.is_nrf = Verdict::Undecided;
      r.reason = o.reason;
      return r;
    }
  for (const auto& o : orbits)
    if (o.status == Verdict::False) {
      r.reason = o.reason;
      return r;
    }

  std::vector<bool> hit(r.a, false);
  for (std::size_t i = 0; i < r.a; ++i) {
    r.ell.push_back(orbits[i].entries.size());
    r.sigma.push_back(orbits[i].sigma);
    r.orbit_table.push_back(orbits[i].entries);
    r.b += orbits[i].entries.size();
    hit[orbits[i].sigma] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    r.reason = "sigma is not a bijection";
    return r;
  }

  std::vector<const Rep*> all;
  std::vector<const ProjComplex*> res;
  for (const auto& o : orbits)
    for (std::size_t k = 0; k < o.entries.size(); ++k) {
      all.push_back(&o.entries[k]);
      res.push_back(&o.resolutions[k]);
    }
  for (std::size_t p = 0; p < all.size(); ++p)
    for (std::size_t q = p + 1; q < all.size(); ++q)
      if (all[p]->dims == all[q]->dims && is_isomorphic(*all[p], *all[q], opt.seed)) {
        r.reason = "repeated summand in the tau_n orbits";
        return r;
      }

  // Ext^k(M, M) = 0 for 0 < k < n.
  std::size_t m = all.size();
  std::vector<std::size_t> bad(m * m, 0);
  if (n > 1) {
#pragma omp parallel for schedule(dynamic) collapse(2) if (opt.parallel)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q)
        for (std::size_t k = 1; k < n && !bad[p * m + q]; ++k)
          if (ext_dim(k, *res[p], *all[q]) != 0) bad[p * m + q] = k;
  }
  for (std::size_t k : bad)
    if (k) {
      r.reason = "Ext^" + std::to_string(k) + "(M, M) != 0";
      return r;
    }

  for (const Rep* x : all) r.summands.push_back(*x);
  r.cluster_tilting = direct_sum(r.summands, a);
  r.is_nrf = Verdict::True;
  r.homogeneous = homogeneity(r);
  return r;
}

bool homogeneity(const NrfReport& r) {
  if (r.ell.empty()) return true;
  bool equal = std::all_of(r.ell.begin(), r.ell.end(), [&](std::size_t l) { return l == r.ell.front(); });
  bool invariant = true;
  for (std::size_t i = 0; i < r.ell.size(); ++i) invariant = invariant && r.ell[i] == r.ell[r.sigma[i]];
  if (r.ring_indecomposable && equal != invariant)
    throw std::logic_error("orbit lengths: all-equal and sigma-invariance disagree");
  return equal;
}

TensorAlgebra preprojective(const AlgebraPtr& a, std::size_t n, std::size_t cap, const NrfReport* known) {
  NrfReport own;
  if (!known) {
    NrfOptions opt;
    opt.cap = cap;
    own = decide_nrf(a, n, opt);
    known = &own;
  }
  if (known->is_nrf != Verdict::True) throw Error(ErrorKind::NotNRF, "preprojective algebra needs an n-RF input");
  if (cap == 0) cap = default_cap(*a);
  Rep t = ext_dual_bimodule(a, n, cap);
  TensorAlgebra pi = tensor_algebra(a, t, std::max(cap, known->b + 2));
  if (!is_selfinjective(pi.algebra())) throw Error(ErrorKind::NotSelfinjective, "tensor algebra is not selfinjective");
  return pi;
}

namespace {

Vector flatten(const Morphism& f) {
  Vector v;
  for (const auto& c : f.comps)
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) v.push_back(c(i, j));
  return v;
}

Rational total_trace(const Morphism& f) {
  Rational t = 0;
  for (const auto& c : f.comps) t += trace(c);
  return t;
}

// Coordinates of vectors in the span of independent columns, through an
// invertible square minor.
struct Coordinates {
  std::vector<std::size_t> rows;
  Matrix inv;
  Coordinates() = default;
  explicit Coordinates(const std::vector<Vector>& basis) {
    if (basis.empty()) return;
    std::size_t len = basis.front().size();
    Matrix t = from_rows(basis, len);
    Matrix r = t;
    auto piv = rref_in_place(r);
    rows = piv;
    Matrix minor(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = 0; k < basis.size(); ++k) minor(i, k) = basis[k][rows[i]];
    inv = *inverse(minor);
    (void)len;
  }
  Vector operator()(const Vector& v) const {
    Vector pick(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) pick[i] = v[rows[i]];
    return nrf::apply(inv, pick);
  }
};

}  // namespace

AuslanderAlgebra auslander_algebra(const std::vector<Rep>& summands) {
  AuslanderAlgebra out;
  std::size_t b = summands.size();
  out.hom_basis.assign(b, std::vector<std::vector<Morphism>>(b));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      auto h = hom(summands[i], summands[j]);
      if (i == j) {
        // identity first, then the trace-zero part (the radical of a local ring)
        std::vector<Morphism> local{identity(summands[i])};
        Matrix tr(1, h.size());
        for (std::size_t k = 0; k < h.size(); ++k) tr(0, k) = total_trace(h[k]);
        Matrix ker = kernel_basis(tr);
        for (std::size_t c = 0; c < ker.cols(); ++c) {
          Morphism f = scale(h[0], Rational(0));
          for (std::size_t k = 0; k < h.size(); ++k)
            if (sgn(ker(k, c)) != 0) f = add(f, scale(h[k], ker(k, c)));
          local.push_back(std::move(f));
        }
        if (local.size() != h.size()) throw std::logic_error("auslander_algebra: endomorphism ring is not local");
        h = std::move(local);
      }
      out.hom_basis[i][j] = std::move(h);
    }
  struct Elem {
    std::size_t i, j, k;
  };
  std::vector<Elem> elems;
  std::vector<std::vector<std::size_t>> first(b, std::vector<std::size_t>(b));
  std::vector<std::vector<Coordinates>> coords(b, std::vector<Coordinates>(b));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      first[i][j] = elems.size();
      std::vector<Vector> flat;
      for (std::size_t k = 0; k < out.hom_basis[i][j].size(); ++k) {
        elems.push_back({i, j, k});
        flat.push_back(flatten(out.hom_basis[i][j][k]));
      }
      coords[i][j] = Coordinates(flat);
    }
  out.dim = elems.size();
  StructureConstants sc;
  sc.num_vertices = b;
  for (std::size_t i = 0; i < b; ++i) {
    sc.idempotent.push_back(first[i][i]);
    sc.vertex_names.push_back("M" + std::to_string(i + 1));
  }
  for (const auto& e : elems) {
    sc.source.push_back(e.i);
    sc.target.push_back(e.j);
  }
  sc.multiply = [&](std::size_t p, std::size_t q) -> SparseVec {
    const Elem& f = elems[p];
    const Elem& g = elems[q];
    if (f.j != g.i) return {};
    Morphism gf = compose(out.hom_basis[g.i][g.j][g.k], out.hom_basis[f.i][f.j][f.k]);
    SparseVec r;
    if (out.hom_basis[f.i][g.j].empty()) return r;
    Vector c = coords[f.i][g.j](flatten(gf));
    for (std::size_t k = 0; k < c.size(); ++k)
      if (sgn(c[k]) != 0) r.emplace_back(first[f.i][g.j] + k, c[k]);
    return r;
  };
  out.presentation = present_algebra(sc);
  return out;
}

std::size_t triangular_dimension(const std::vector<std::size_t>& dims, std::size_t ell) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < ell && k < dims.size(); ++k) total += (ell - k) * dims[k];
  return total;
}

TensorNrf tensor_nrf(const std::vector<std::pair<AlgebraPtr, std::size_t>>& factors, std::size_t ell,
                     const NrfOptions& opt) {
  if (factors.empty()) throw Error(ErrorKind::InvalidSpec, "tensor_nrf needs at least one factor");
  std::vector<std::vector<Rep>> layers;  // layers[j][i] = tau^{-i} A_j
  std::size_t total_n = 0;
  for (const auto& [alg, ni] : factors) {
    total_n += ni;
    std::size_t cap = opt.cap ? opt.cap : default_cap(*alg);
    bool semisimple = alg->dim() == alg->num_vertices();
    std::vector<Rep> layer{regular(alg)};
    if (semisimple && ni == 0) {
      layer.assign(ell, regular(alg));
    } else {
      NrfOptions fo = opt;
      NrfReport fr = decide_nrf(alg, ni, fo);
      if (fr.is_nrf != Verdict::True || !fr.homogeneous || fr.ell.front() != ell)
        throw Error(ErrorKind::FactorNotHomogeneous,
                    (alg->name.empty() ? std::string("factor") : alg->name) + " is not " + std::to_string(ell) +
                        "-homogeneous " + std::to_string(ni) + "-RF");
      for (std::size_t i = 1; i < ell; ++i) layer.push_back(tau_n_minus(layer.back(), ni, cap));
    }
    layers.push_back(std::move(layer));
  }
  TensorNrf out;
  out.algebra = factors.front().first;
  for (std::size_t j = 1; j < factors.size(); ++j) out.algebra = tensor_product(out.algebra, factors[j].first);
  out.report = decide_nrf(out.algebra, total_n, opt);

  std::vector<Rep> parts;
  for (std::size_t i = 0; i < ell; ++i) {
    Rep m = layers.front()[i];
    AlgebraPtr acc = factors.front().first;
    for (std::size_t j = 1; j < factors.size(); ++j) {
      acc = j + 1 == factors.size() ? out.algebra : tensor_product(acc, factors[j].first);
      m = outer_tensor(m, layers[j][i], acc);
    }
    parts.push_back(std::move(m));
  }
  out.formula_module = direct_sum(parts, out.algebra);
  out.formula_summands = decompose(out.formula_module, opt.seed).count();
  out.formula_matches = out.report.is_nrf == Verdict::True &&
                        is_isomorphic(out.formula_module, out.report.cluster_tilting, opt.seed);
  return out;
}

}  // namespace nrf
