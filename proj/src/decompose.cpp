#include "nrf/decompose.hpp"

#include <numeric>
#include <random>

namespace nrf {

std::size_t Decomposition::count() const {
  std::size_t c = 0;
  for (const auto& s : summands) c += s.multiplicity;
  return c;
}

namespace {

Rational trace_of(const Morphism& f) {
  Rational t = 0;
  for (const auto& c : f.comps) t += trace(c);
  return t;
}

std::size_t endo_semisimple_dim(const std::vector<Morphism>& end) {
  std::size_t e = end.size();
  Matrix g(e, e);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = i; j < e; ++j) g(i, j) = g(j, i) = trace_of(compose(end[i], end[j]));
  return rank(g);
}

// Splits along connected components of the coordinate graph, which
// separates summands whenever the basis is already adapted to them.
std::vector<Rep> coordinate_components(const Rep& m) {
  const Quiver& q = m.alg->quiver();
  std::vector<std::size_t> off(m.dims.size() + 1, 0);
  for (std::size_t x = 0; x < m.dims.size(); ++x) off[x + 1] = off[x] + m.dims[x];
  std::vector<std::size_t> parent(off.back());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t al = 0; al < q.num_arrows(); ++al) {
    std::size_t x = q.arrow(al).source, y = q.arrow(al).target;
    const Matrix& a = m.maps[al];
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (sgn(a(r, c)) != 0) parent[find(off[y] + r)] = find(off[x] + c);
  }
  std::vector<std::size_t> roots;
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (find(v) == v) roots.push_back(v);
  if (roots.size() <= 1) return {m};
  std::vector<Rep> out;
  for (auto root : roots) {
    std::vector<Matrix> spans;
    for (std::size_t x = 0; x < m.dims.size(); ++x) {
      std::vector<Vector> cols;
      for (std::size_t i = 0; i < m.dims[x]; ++i)
        if (find(off[x] + i) == root) {
          Vector v(m.dims[x]);
          v[i] = 1;
          cols.push_back(std::move(v));
        }
      spans.push_back(from_columns(cols, m.dims[x]));
    }
    out.push_back(subrep(m, spans).rep);
  }
  return out;
}

struct Splitter {
  std::mt19937_64 rng;
  std::uniform_int_distribution<int> coef{-5, 5};

  Morphism random_combination(const std::vector<Morphism>& basis) {
    Morphism f = scale(basis[0], 0);
    for (const auto& b : basis) f = add(f, scale(b, coef(rng)));
    return f;
  }

  // Fitting: f^N with N = dim m is either zero, invertible, or splits m.
  std::optional<std::pair<Rep, Rep>> try_split(const Rep& m, const Morphism& f) {
    std::size_t n = m.total_dim();
    Morphism p;
    for (const auto& c : f.comps) p.comps.push_back(power(c, n));
    if (is_zero(p) || is_invertible(p)) return std::nullopt;
    auto k = kernel(m, m, p);
    auto i = image(m, m, p);
    return std::make_pair(k.rep, i.rep);
  }

  std::optional<std::pair<Rep, Rep>> split(const Rep& m, const std::vector<Morphism>& end) {
    for (const auto& f : end)
      if (auto s = try_split(m, f)) return s;
    // f with f(w) = 0 for a fixed vector w is never invertible.
    auto from_annihilator = [&](std::size_t x, const Vector& w) -> std::optional<std::pair<Rep, Rep>> {
      std::vector<Vector> cols;
      for (const auto& f : end) cols.push_back(apply(f.comps[x], w));
      auto ker = rank_and_kernel(from_columns(cols, m.dims[x]), Rational(0), Rational(1));
      if (ker.kernel.empty()) return std::nullopt;
      std::vector<Morphism> ann;
      for (const auto& c : ker.kernel) {
        Morphism f = scale(end[0], 0);
        for (std::size_t k = 0; k < c.size(); ++k)
          if (sgn(c[k]) != 0) f = add(f, scale(end[k], c[k]));
        ann.push_back(std::move(f));
      }
      for (const auto& f : ann)
        if (auto s = try_split(m, f)) return s;
      for (int t = 0; t < 3; ++t)
        if (auto s = try_split(m, random_combination(ann))) return s;
      return std::nullopt;
    };
    for (std::size_t x = 0; x < m.dims.size(); ++x)
      for (std::size_t i = 0; i < m.dims[x]; ++i) {
        Vector w(m.dims[x]);
        w[i] = 1;
        if (auto s = from_annihilator(x, w)) return s;
      }
    for (int t = 0; t < 8; ++t)
      for (std::size_t x = 0; x < m.dims.size(); ++x) {
        if (m.dims[x] == 0) continue;
        Vector w(m.dims[x]);
        for (auto& c : w) c = coef(rng);
        if (auto s = from_annihilator(x, w)) return s;
      }
    return std::nullopt;
  }

  void run(const Rep& m, std::vector<Rep>& out, bool& certified) {
    if (m.total_dim() == 0) return;
    auto parts = coordinate_components(m);
    if (parts.size() > 1) {
      for (const auto& p : parts) run(p, out, certified);
      return;
    }
    auto end = hom(m, m);
    if (endo_semisimple_dim(end) == 1) {
      out.push_back(m);
      return;
    }
    if (auto s = split(m, end)) {
      run(s->first, out, certified);
      run(s->second, out, certified);
      return;
    }
    certified = false;
    out.push_back(m);
  }
};

}  // namespace

bool has_local_endomorphism_ring(const Rep& m) {
  if (m.total_dim() == 0) return false;
  return endo_semisimple_dim(hom(m, m)) == 1;
}

bool indecomposables_isomorphic(const Rep& a, const Rep& b, std::uint64_t seed) {
  if (a.dims != b.dims) return false;
  auto h = hom(a, b);
  if (h.empty()) return false;
  Splitter s{std::mt19937_64(seed)};
  for (int t = 0; t < 4; ++t)
    if (is_invertible(s.random_combination(h))) return true;
  return false;
}

Decomposition decompose(const Rep& m, std::uint64_t seed) {
  Splitter s{std::mt19937_64(seed)};
  std::vector<Rep> parts;
  Decomposition d;
  s.run(m, parts, d.certified);
  for (auto& p : parts) {
    bool found = false;
    for (auto& sm : d.summands)
      if (indecomposables_isomorphic(sm.rep, p, seed)) {
        ++sm.multiplicity;
        found = true;
        break;
      }
    if (!found) d.summands.push_back({std::move(p), 1});
  }
  return d;
}

bool same_decomposition(const Decomposition& a, const Decomposition& b, std::uint64_t seed) {
  if (a.count() != b.count() || a.distinct() != b.distinct()) return false;
  std::vector<bool> used(b.summands.size(), false);
  for (const auto& x : a.summands) {
    bool found = false;
    for (std::size_t j = 0; j < b.summands.size(); ++j) {
      if (used[j] || b.summands[j].multiplicity != x.multiplicity) continue;
      if (indecomposables_isomorphic(x.rep, b.summands[j].rep, seed)) {
        used[j] = found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace nrf
