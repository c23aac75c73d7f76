#include "nrf/type_a.hpp"

#include "nrf/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace nrf {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<int> f_vector(std::size_t n, std::size_t i) {
  std::vector<int> f(n + 1, 0);
  if (i <= n) {
    f[i - 1] = -1;
    f[i] = 1;
  } else {
    f[0] = 1;
    f[n] = -1;
  }
  return f;
}

std::optional<std::size_t> TypeAQuiver::vertex_of(const std::vector<int>& x) const {
  auto it = std::find(points.begin(), points.end(), x);
  if (it == points.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

namespace {

std::vector<int> plus(const std::vector<int>& x, const std::vector<int>& f) {
  std::vector<int> y = x;
  for (std::size_t k = 0; k < y.size(); ++k) y[k] += f[k];
  return y;
}

void compositions(std::size_t parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur.push_back(k);
    compositions(parts, total - k, cur, out);
    cur.pop_back();
  }
}

std::string point_label(const std::vector<int>& x, bool wide) {
  std::string s;
  for (std::size_t k = 0; k < x.size(); ++k) s += (wide && k ? "_" : "") + std::to_string(x[k]);
  return s;
}

}  // namespace

TypeAQuiver type_a_quiver(std::size_t n, std::size_t s) {
  if (n < 1 || s < 1) throw Error(ErrorKind::InvalidSpec, "Q^(n,s) needs n, s >= 1");
  TypeAQuiver q;
  q.n = n;
  q.s = s;
  std::vector<int> cur;
  compositions(n + 1, static_cast<int>(s) - 1, cur, q.points);
  bool wide = s > 10;
  std::vector<std::string> labels;
  for (const auto& x : q.points) labels.push_back(point_label(x, wide));
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t v = 0; v < q.points.size(); ++v) index[q.points[v]] = v;
  std::vector<Arrow> arrows;
  for (std::size_t v = 0; v < q.points.size(); ++v)
    for (std::size_t i = 1; i <= n + 1; ++i) {
      auto it = index.find(plus(q.points[v], f_vector(n, i)));
      if (it == index.end()) continue;
      arrows.push_back({"a" + std::to_string(i) + "_" + labels[v], v, it->second});
      q.arrow_type.push_back(i);
    }
  q.quiver = Quiver(std::move(labels), std::move(arrows));
  return q;
}

namespace {

// arrow of type i leaving v, if present
std::optional<std::size_t> arrow_from(const TypeAQuiver& q, std::size_t v, std::size_t i) {
  for (auto a : q.quiver.arrows_from(v))
    if (q.arrow_type[a] == i) return a;
  return std::nullopt;
}

}  // namespace

std::vector<Relation> gamma_relations(const TypeAQuiver& q) {
  std::vector<Relation> rels;
  for (std::size_t v = 0; v < q.points.size(); ++v)
    for (std::size_t i = 1; i <= q.n + 1; ++i)
      for (std::size_t j = 1; j <= q.n + 1; ++j) {
        if (i == j) continue;
        auto ai = arrow_from(q, v, i);
        if (!ai) continue;
        auto aij = arrow_from(q, q.quiver.arrow(*ai).target, j);
        if (!aij) continue;
        auto aj = arrow_from(q, v, j);
        Relation r;
        r.terms.push_back({1, Path{v, {*ai, *aij}}});
        if (aj) {
          if (i > j) continue;  // the pair (j, i) gives the same relation
          auto aji = arrow_from(q, q.quiver.arrow(*aj).target, i);
          r.terms.push_back({-1, Path{v, {*aj, *aji}}});
        }
        rels.push_back(std::move(r));
      }
  return rels;
}

AlgebraPtr gamma_algebra(const TypeAQuiver& q) {
  auto g = build_algebra(q.quiver, gamma_relations(q));
  auto named = std::make_shared<Algebra>(*g);
  named->name = "Gamma(" + std::to_string(q.n) + "," + std::to_string(q.s) + ")";
  return named;
}

std::vector<std::set<std::size_t>> cycles(const TypeAQuiver& q) {
  std::set<std::set<std::size_t>> found;
  std::vector<std::size_t> perm(q.n + 1);
  std::iota(perm.begin(), perm.end(), std::size_t{1});
  for (std::size_t v = 0; v < q.points.size(); ++v) {
    std::vector<std::size_t> p = perm;
    do {
      std::set<std::size_t> arrows;
      std::size_t at = v;
      bool ok = true;
      for (auto i : p) {
        auto a = arrow_from(q, at, i);
        if (!a) {
          ok = false;
          break;
        }
        arrows.insert(*a);
        at = q.quiver.arrow(*a).target;
      }
      if (ok) found.insert(std::move(arrows));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return {found.begin(), found.end()};
}

bool is_cut(const TypeAQuiver& q, const Cut& c) {
  for (const auto& cyc : cycles(q)) {
    std::size_t k = 0;
    for (auto a : cyc) k += c.count(a);
    if (k != 1) return false;
  }
  for (auto a : c)
    if (a >= q.quiver.num_arrows()) return false;
  return true;
}

std::vector<Cut> enumerate_cuts(const TypeAQuiver& q) {
  auto cyc = cycles(q);
  std::size_t m = q.quiver.num_arrows();
  std::vector<bool> on_cycle(m, false);
  for (const auto& c : cyc)
    for (auto a : c) on_cycle[a] = true;
  std::vector<int> state(m, -1);  // -1 unknown, 0 out, 1 in
  std::vector<Cut> out;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cyc.size()) {
      // arrows on no cycle are unconstrained
      std::vector<std::size_t> free;
      for (std::size_t a = 0; a < m; ++a)
        if (!on_cycle[a]) free.push_back(a);
      for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
        Cut c;
        for (std::size_t a = 0; a < m; ++a)
          if (state[a] == 1) c.insert(a);
        for (std::size_t b = 0; b < free.size(); ++b)
          if ((mask >> b) & 1) c.insert(free[b]);
        out.push_back(std::move(c));
      }
      return;
    }
    std::size_t in = 0;
    std::vector<std::size_t> unknown;
    for (auto a : cyc[k]) {
      if (state[a] == 1) ++in;
      if (state[a] == -1) unknown.push_back(a);
    }
    if (in > 1) return;
    if (in == 1) {
      for (auto a : unknown) state[a] = 0;
      rec(k + 1);
      for (auto a : unknown) state[a] = -1;
      return;
    }
    for (auto pick : unknown) {
      for (auto a : unknown) state[a] = a == pick ? 1 : 0;
      rec(k + 1);
    }
    for (auto a : unknown) state[a] = -1;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t omega_vertex(const TypeAQuiver& q, std::size_t v) {
  const auto& x = q.points.at(v);
  std::vector<int> y(x.size());
  y[0] = x.back();
  for (std::size_t k = 1; k < x.size(); ++k) y[k] = x[k - 1];
  return *q.vertex_of(y);
}

std::size_t omega_arrow(const TypeAQuiver& q, std::size_t a) {
  std::size_t i = q.arrow_type.at(a);
  std::size_t j = i == q.n + 1 ? 1 : i + 1;
  auto b = arrow_from(q, omega_vertex(q, q.quiver.arrow(a).source), j);
  if (!b) throw std::logic_error("omega does not map arrows to arrows");
  return *b;
}

Cut omega_on_cuts(const TypeAQuiver& q, const Cut& c) {
  Cut out;
  for (auto a : c) out.insert(omega_arrow(q, a));
  return out;
}

AlgebraPtr kill_arrows(const AlgebraPtr& a, const std::set<std::size_t>& killed) {
  const Quiver& q = a->quiver();
  std::vector<std::size_t> renum(q.num_arrows(), SIZE_MAX);
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < q.num_arrows(); ++i)
    if (!killed.count(i)) {
      renum[i] = arrows.size();
      arrows.push_back(q.arrow(i));
    }
  Quiver sub(q.vertices(), std::move(arrows));
  std::vector<Relation> rels;
  for (const auto& r : a->relations()) {
    Relation o;
    for (const auto& t : r.terms) {
      Path p{t.path.source, {}};
      bool alive = true;
      for (auto x : t.path.arrows) {
        if (renum[x] == SIZE_MAX) {
          alive = false;
          break;
        }
        p.arrows.push_back(renum[x]);
      }
      if (alive) o.terms.push_back({t.coeff, std::move(p)});
    }
    if (!o.terms.empty()) rels.push_back(std::move(o));
  }
  return build_algebra(sub, std::move(rels));
}

AlgebraPtr cut_algebra(const TypeAQuiver& q, const Cut& c) {
  if (!is_cut(q, c)) throw Error(ErrorKind::NotACut, "arrow set does not meet every (n+1)-cycle exactly once");
  auto g = build_algebra(q.quiver, gamma_relations(q));
  return kill_arrows(g, c);
}

DynkinSpec cut_to_orientation(const TypeAQuiver& q, const Cut& c) {
  if (q.n != 1) throw Error(ErrorKind::InvalidSpec, "orientations correspond to cuts only for n = 1");
  DynkinSpec spec{'A', q.s, std::vector<bool>(q.s - 1, true)};
  std::vector<int> seen(q.s - 1, 0);
  for (std::size_t a = 0; a < q.quiver.num_arrows(); ++a) {
    if (c.count(a)) continue;
    std::size_t k = static_cast<std::size_t>(std::min(q.points[q.quiver.arrow(a).source][1], q.points[q.quiver.arrow(a).target][1]));
    spec.forward[k] = q.arrow_type[a] == 1;
    ++seen[k];
  }
  for (int s : seen)
    if (s != 1) throw Error(ErrorKind::NotACut, "not a cut of Q^(1,s)");
  return spec;
}

std::optional<std::size_t> homogeneous_ell(std::size_t n, std::size_t s) {
  if ((s + n) % (n + 1) != 0) return std::nullopt;
  return (s + n) / (n + 1);
}

bool arrow_isomorphic(const AlgebraPtr& a, const AlgebraPtr& b) {
  const Quiver& qa = a->quiver();
  const Quiver& qb = b->quiver();
  std::size_t n = qa.num_vertices();
  if (n != qb.num_vertices() || qa.num_arrows() != qb.num_arrows() || a->dim() != b->dim()) return false;
  auto cartan = [](const Algebra& x) {
    std::size_t k = x.num_vertices();
    std::vector<std::size_t> c(k * k, 0);
    for (const auto& e : x.basis()) ++c[e.source * k + e.target];
    return c;
  };
  auto arrows_between = [](const Quiver& q, std::size_t u, std::size_t v) {
    std::vector<std::size_t> out;
    for (auto x : q.arrows_from(u))
      if (q.arrow(x).target == v) out.push_back(x);
    return out;
  };
  auto ca = cartan(*a), cb = cartan(*b);
  std::vector<std::size_t> pi(n, SIZE_MAX);
  std::vector<bool> used(n, false);

  // Relations of a, sent along an arrow bijection, must vanish in b.
  auto relations_hold = [&](const std::vector<std::size_t>& arrow_map) {
    for (const auto& r : a->relations()) {
      SparseVec total;
      for (const auto& t : r.terms) {
        Path p{pi[t.path.source], {}};
        for (auto x : t.path.arrows) p.arrows.push_back(arrow_map[x]);
        sparse_axpy(total, t.coeff, b->path_element(p));
      }
      if (!total.empty()) return false;
    }
    return true;
  };
  std::function<bool(std::size_t, std::vector<std::size_t>&)> match_arrows;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (!arrows_between(qa, u, v).empty()) pairs.emplace_back(u, v);
  match_arrows = [&](std::size_t k, std::vector<std::size_t>& amap) -> bool {
    if (k == pairs.size()) return relations_hold(amap);
    auto src = arrows_between(qa, pairs[k].first, pairs[k].second);
    auto dst = arrows_between(qb, pi[pairs[k].first], pi[pairs[k].second]);
    std::sort(dst.begin(), dst.end());
    do {
      for (std::size_t i = 0; i < src.size(); ++i) amap[src[i]] = dst[i];
      if (match_arrows(k + 1, amap)) return true;
    } while (std::next_permutation(dst.begin(), dst.end()));
    return false;
  };
  std::function<bool(std::size_t)> assign = [&](std::size_t u) -> bool {
    if (u == n) {
      std::vector<std::size_t> amap(qa.num_arrows());
      return match_arrows(0, amap);
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (std::size_t w = 0; w < u && ok; ++w) {
        ok = ca[u * n + w] == cb[v * n + pi[w]] && ca[w * n + u] == cb[pi[w] * n + v] &&
             arrows_between(qa, u, w).size() == arrows_between(qb, v, pi[w]).size() &&
             arrows_between(qa, w, u).size() == arrows_between(qb, pi[w], v).size();
      }
      ok = ok && ca[u * n + u] == cb[v * n + v] && arrows_between(qa, u, u).size() == arrows_between(qb, v, v).size() &&
           qa.arrows_from(u).size() == qb.arrows_from(v).size() && qa.arrows_to(u).size() == qb.arrows_to(v).size();
      if (!ok) continue;
      pi[u] = v;
      used[v] = true;
      if (assign(u + 1)) return true;
      used[v] = false;
    }
    pi[u] = SIZE_MAX;
    return false;
  };
  return assign(0);
}

std::size_t count_isomorphism_classes(const std::vector<AlgebraPtr>& algs) {
  std::vector<AlgebraPtr> reps;
  for (const auto& a : algs) {
    bool found = false;
    for (const auto& r : reps)
      if (arrow_isomorphic(a, r) && arrow_isomorphic(r, a)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(a);
  }
  return reps.size();
}

TypeAReport verify_type_a_cuts(std::size_t n, std::size_t s, const TypeAOptions& opt) {
  TypeAQuiver q = type_a_quiver(n, s);
  TypeAReport rep;
  rep.n = n;
  rep.s = s;
  rep.vertices = q.points.size();
  rep.arrows = q.quiver.num_arrows();
  rep.num_cycles = cycles(q).size();
  rep.expected_ell = homogeneous_ell(n, s);
  rep.expected_b = binomial(s + n, n + 1);
  for (auto& c : enumerate_cuts(q)) {
    bool stable = omega_on_cuts(q, c) == c;
    if (opt.omega_stable_only && !stable) continue;
    rep.cuts.push_back(CutVerdict{std::move(c), stable, {}});
  }
  std::vector<AlgebraPtr> algs(rep.cuts.size());
  std::vector<std::string> errors(rep.cuts.size());
  NrfOptions inner = opt.nrf;
  inner.parallel = opt.nrf.parallel && !opt.parallel;
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (std::size_t k = 0; k < rep.cuts.size(); ++k) {
    try {
      algs[k] = cut_algebra(q, rep.cuts[k].cut);
      rep.cuts[k].report = decide_nrf(algs[k], n, inner);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);
  std::vector<AlgebraPtr> stable_algs;
  for (std::size_t k = 0; k < rep.cuts.size(); ++k) {
    const auto& cv = rep.cuts[k];
    const auto& r = cv.report;
    if (cv.omega_stable) {
      ++rep.omega_stable;
      stable_algs.push_back(algs[k]);
    }
    if (r.is_nrf != Verdict::True) {
      rep.all_nrf = false;
      continue;
    }
    if (r.a != rep.vertices) rep.a_matches = false;
    if (r.b != rep.expected_b) rep.b_matches = false;
    if (r.homogeneous != cv.omega_stable) rep.homogeneous_iff_stable = false;
    if (r.homogeneous && (!rep.expected_ell || r.ell.front() != *rep.expected_ell)) rep.ell_matches = false;
  }
  rep.omega_stable_classes = count_isomorphism_classes(stable_algs);
  return rep;
}

std::vector<int> multidegree(const TypeAQuiver& q, const Algebra& g, std::size_t basis_index) {
  std::vector<int> d(q.n + 1, 0);
  for (auto a : g.basis(basis_index).word) ++d[q.arrow_type[a] - 1];
  return d;
}

bool verify_nakayama_bijection(const TypeAQuiver& q, const AlgebraPtr& g, std::string* failure) {
  auto fail = [&](const std::string& msg) {
    if (failure) *failure = msg;
    return false;
  };
  const Quiver& qq = g->quiver();
  auto name = [&](std::size_t b) { return to_string(qq, Path{g->basis(b).source, g->basis(b).word}); };
  std::size_t nv = g->num_vertices();
  if (nv != q.points.size() || qq.num_arrows() != q.quiver.num_arrows()) return fail("algebra is not on Q^(n,s)");
  // Socle element of degree x in e_x G e_omega(x).
  std::vector<std::size_t> top(nv);
  for (std::size_t x = 0; x < nv; ++x) {
    std::vector<std::size_t> cands;
    for (auto b : g->between(x, omega_vertex(q, x)))
      if (multidegree(q, *g, b) == q.points[x]) cands.push_back(b);
    if (cands.size() != 1) return fail("no unique element of degree x from " + qq.vertex(x) + " to omega(x)");
    top[x] = cands.front();
  }
  auto coeff = [&](const SparseVec& v, std::size_t idx) {
    for (const auto& [i, c] : v)
      if (i == idx) return c;
    return Rational(0);
  };
  auto lambda = [&](const SparseVec& v) {
    Rational t = 0;
    for (const auto& [i, c] : v)
      for (std::size_t x = 0; x < nv; ++x)
        if (top[x] == i) t += c;
    return t;
  };
  for (std::size_t x = 0; x < nv; ++x) {
    std::size_t wx = omega_vertex(q, x);
    for (std::size_t z = 0; z < nv; ++z) {
      auto ps = g->between(x, z);
      auto qs = g->between(z, wx);
      if (ps.size() != qs.size()) return fail("e_x G e_z and e_z G e_omega(x) differ in dimension at " + qq.vertex(x) + ", " + qq.vertex(z));
      Matrix pairing(ps.size(), qs.size());
      for (std::size_t r = 0; r < ps.size(); ++r) {
        auto dp = multidegree(q, *g, ps[r]);
        std::size_t partners = 0;
        for (std::size_t c = 0; c < qs.size(); ++c) {
          auto dq = multidegree(q, *g, qs[c]);
          std::vector<int> sum(dp.size());
          for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = dp[k] + dq[k];
          const SparseVec& pq = g->product(ps[r], qs[c]);
          pairing(r, c) = coeff(pq, top[x]);
          if (sum == q.points[x]) {
            ++partners;
            if (sgn(pairing(r, c)) == 0) return fail("p q = 0 for the degree partner of " + name(ps[r]));
          }
        }
        if (partners != 1) return fail("path " + name(ps[r]) + " has " + std::to_string(partners) + " degree partners");
      }
      if (rank(pairing) != ps.size()) return fail("degenerate pairing at " + qq.vertex(x) + ", " + qq.vertex(z));
    }
  }
  for (std::size_t a = 0; a < qq.num_arrows(); ++a) {
    auto ea = g->arrow_element(a);
    auto eo = g->arrow_element(omega_arrow(q, a));
    if (!ea || !eo) return fail("arrow " + qq.arrow(a).label + " vanishes");
    std::size_t x = qq.arrow(a).source, y = qq.arrow(a).target;
    for (auto u : g->between(y, omega_vertex(q, x)))
      if (lambda(g->product(*ea, u)) != lambda(g->product(u, *eo)))
        return fail("lambda(a u) != lambda(u omega(a)) for a = " + qq.arrow(a).label + ", u = " + name(u));
  }
  return true;
}

}  // namespace nrf
