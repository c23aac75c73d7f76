#include "nrf/homology.hpp"

#include "nrf/decompose.hpp"
#include "nrf/errors.hpp"

namespace nrf {

ProjectiveCover projective_cover(const Rep& m) {
  const AlgebraPtr& a = m.alg;
  ProjectiveCover out{{}, zero_rep(a), {}};
  auto rad = radical_spans(m);
  std::vector<Vector> gens;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    Echelon e(m.dims[v]);
    for (std::size_t c = 0; c < rad[v].cols(); ++c) {
      Vector col(m.dims[v]);
      for (std::size_t r = 0; r < m.dims[v]; ++r) col[r] = rad[v](r, c);
      e.insert(col);
    }
    for (std::size_t i = 0; i < m.dims[v]; ++i) {
      Vector col(m.dims[v]);
      col[i] = 1;
      if (e.insert(col)) {
        out.verts.push_back(v);
        gens.push_back(col);
      }
    }
  }
  for (auto v : out.verts) out.p = direct_sum(out.p, projective(a, v));
  for (std::size_t w = 0; w < a->num_vertices(); ++w) out.epi.comps.emplace_back(m.dims[w], out.p.dims[w]);
  std::vector<std::size_t> off(a->num_vertices(), 0);
  for (std::size_t k = 0; k < out.verts.size(); ++k)
    for (std::size_t w = 0; w < a->num_vertices(); ++w) {
      auto blk = a->between(out.verts[k], w);
      for (std::size_t i = 0; i < blk.size(); ++i) {
        Vector img = nrf::apply(m.action(blk[i]), gens[k]);
        for (std::size_t r = 0; r < img.size(); ++r) out.epi.comps[w](r, off[w] + i) = img[r];
      }
      off[w] += blk.size();
    }
  return out;
}

Resolution min_proj_resolution(const Rep& m, std::size_t max_len) {
  Resolution r;
  r.complex = projective_resolution(m, max_len);
  r.projective_dimension = r.complex.verts.empty() ? 0 : static_cast<std::size_t>(-r.complex.lo);
  r.minimal = is_minimal(r.complex);
  return r;
}

std::size_t ext_dim(std::size_t i, const ProjComplex& pm, const Rep& n) {
  return hom_derived_dim(pm, stalk(n, -static_cast<int>(i)));
}

std::size_t ext_dim(std::size_t i, const Rep& m, const Rep& n, std::size_t cap) {
  return ext_dim(i, projective_resolution(m, cap), n);
}

ProjFunctor bimodule_functor(const Rep& b, const AlgebraPtr& a) {
  std::size_t n = a->num_vertices();
  std::size_t dim = a->dim();
  auto bp = std::make_shared<Rep>(b);
  auto object = [a, bp, n](std::size_t v) {
    Rep r{a, {}, {}};
    for (std::size_t x = 0; x < n; ++x) r.dims.push_back(bp->dims[x * n + v]);
    for (std::size_t al = 0; al < a->quiver().num_arrows(); ++al) r.maps.push_back(bp->maps[al * n + v]);
    return r;
  };
  auto morphism = [a, bp, n, dim](std::size_t p) {
    std::size_t s = a->basis(p).source, t = a->basis(p).target;
    Morphism f;
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t idx = a->vertex_element(x) * dim + p;
      Matrix act = bp->action(idx);
      // The enveloping basis element (e_x, p^op) runs from (x, t) to (x, s).
      (void)s;
      (void)t;
      f.comps.push_back(std::move(act));
    }
    return f;
  };
  return ProjFunctor(a, a, object, morphism);
}

Rep tor(std::size_t i, const Rep& b, const Rep& m, std::size_t cap) {
  ProjComplex p = projective_resolution(m, cap);
  return cohomology(realize(p, bimodule_functor(b, m.alg)), -static_cast<int>(i));
}

Rep tor_dual(std::size_t i, const Rep& m, std::size_t cap) {
  ProjComplex p = projective_resolution(m, cap);
  return cohomology(realize(p, nakayama_functor(m.alg)), -static_cast<int>(i));
}

std::size_t global_dimension(const AlgebraPtr& a, std::size_t cap) {
  std::size_t g = 0;
  for (std::size_t v = 0; v < a->num_vertices(); ++v)
    g = std::max(g, min_proj_resolution(simple(a, v), cap).projective_dimension);
  return g;
}

std::optional<std::size_t> injective_as_projective(const AlgebraPtr& a, std::size_t v) {
  Rep i = injective(a, v);
  for (std::size_t w = 0; w < a->num_vertices(); ++w) {
    Rep p = projective(a, w);
    if (p.dims == i.dims && indecomposables_isomorphic(i, p)) return w;
  }
  return std::nullopt;
}

DominantDimension dominant_dimension(const AlgebraPtr& a, std::size_t cap) {
  std::vector<bool> proj_inj(a->num_vertices());
  for (std::size_t v = 0; v < a->num_vertices(); ++v) proj_inj[v] = injective_as_projective(a, v).has_value();
  ProjComplex inj = to_injective_complex(stalk(regular(a)), cap);
  DominantDimension d;
  for (const auto& term : inj.verts) {
    for (auto v : term)
      if (!proj_inj[v]) return d;
    ++d.value;
  }
  d.infinite = true;
  return d;
}

ProjComplex stalk_regular(const AlgebraPtr& a) {
  ProjComplex p{a, 0, {{}}, {}};
  for (std::size_t v = 0; v < a->num_vertices(); ++v) p.verts[0].push_back(v);
  return p;
}

ProjComplex nakayama(const ProjComplex& p, std::size_t cap) {
  return to_projective_complex(realize(p, nakayama_functor(p.alg)), cap);
}

ProjComplex nakayama_power(const ProjComplex& p, std::size_t k, std::size_t cap) {
  ProjComplex q = p;
  for (std::size_t i = 0; i < k; ++i) q = nakayama(q, cap);
  return q;
}

ProjComplex nakayama_inverse(const ProjComplex& p, std::size_t cap) {
  ProjComplex inj = to_injective_complex(realize(p), cap);
  return to_projective_complex(realize(inj), cap);
}

ProjComplex shifted_nakayama(const ProjComplex& p, std::size_t n, std::size_t cap) {
  return shift(nakayama(p, cap), -static_cast<int>(n));
}

ProjComplex shifted_nakayama_inverse(const ProjComplex& p, std::size_t n, std::size_t cap) {
  return nakayama_inverse(shift(p, static_cast<int>(n)), cap);
}

std::optional<int> is_shifted_regular(const ProjComplex& p, std::uint64_t seed) {
  Complex c = realize(p);
  auto supp = cohomology_support(c);
  if (supp.size() != 1) return std::nullopt;
  Rep h = cohomology(c, supp[0]);
  if (!is_isomorphic(h, regular(p.alg), seed)) return std::nullopt;
  return -supp[0];
}

bool is_selfinjective(const AlgebraPtr& a) {
  for (std::size_t v = 0; v < a->num_vertices(); ++v)
    if (!injective_as_projective(a, v)) return false;
  return true;
}

std::vector<std::size_t> nakayama_permutation(const AlgebraPtr& a) {
  std::vector<std::size_t> perm;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    auto w = injective_as_projective(a, v);
    if (!w) throw Error(ErrorKind::NotSelfinjective, "injective at vertex " + a->quiver().vertex(v) + " is not projective");
    perm.push_back(*w);
  }
  return perm;
}

}  // namespace nrf
