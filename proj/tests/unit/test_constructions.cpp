#include "util.hpp"

#include <doctest.h>

#include <functional>

using namespace nrf;
using namespace nrf::test;

namespace {

// Closed walks using each arrow type exactly once, found by search.
std::set<std::set<std::size_t>> brute_cycles(const TypeAQuiver& q) {
  std::set<std::set<std::size_t>> out;
  std::size_t n = q.n;
  std::function<void(std::size_t, std::size_t, std::vector<bool>&, std::set<std::size_t>&)> walk =
      [&](std::size_t start, std::size_t v, std::vector<bool>& used, std::set<std::size_t>& arrows) {
        if (arrows.size() == n + 1) {
          if (v == start) out.insert(arrows);
          return;
        }
        for (auto a : q.quiver.arrows_from(v)) {
          std::size_t t = q.arrow_type[a];
          if (used[t]) continue;
          used[t] = true;
          arrows.insert(a);
          walk(start, q.quiver.arrow(a).target, used, arrows);
          arrows.erase(a);
          used[t] = false;
        }
      };
  for (std::size_t v = 0; v < q.quiver.num_vertices(); ++v) {
    std::vector<bool> used(n + 2, false);
    std::set<std::size_t> arrows;
    walk(v, v, used, arrows);
  }
  return out;
}

// Every subset of arrows meeting each cycle exactly once.
std::vector<Cut> brute_cuts(const TypeAQuiver& q, const std::set<std::set<std::size_t>>& cyc) {
  std::vector<Cut> out;
  std::size_t m = q.quiver.num_arrows();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    bool ok = true;
    for (const auto& c : cyc) {
      int hits = 0;
      for (auto a : c) hits += (mask >> a) & 1;
      if (hits != 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Cut cut;
    for (std::size_t a = 0; a < m; ++a)
      if ((mask >> a) & 1) cut.insert(a);
    out.push_back(cut);
  }
  return out;
}

// dim Gamma = sum over vertices x of prod (x_i + 1): one basis path per
// multidegree d <= x.
std::size_t gamma_dim_oracle(const TypeAQuiver& q) {
  std::size_t total = 0;
  for (const auto& x : q.points) {
    std::size_t p = 1;
    for (int c : x) p *= static_cast<std::size_t>(c + 1);
    total += p;
  }
  return total;
}

struct Shape {
  std::size_t n, s, cuts, stable;
};
const Shape kShapes[] = {{1, 3, 4, 2}, {1, 5, 16, 4}, {2, 4, 65, 5}, {3, 3, 32, 0}};

}  // namespace

TEST_CASE("quivers Q^(n,s): counts") {
  for (const auto& sh : kShapes) {
    auto q = type_a_quiver(sh.n, sh.s);
    CHECK(q.quiver.num_vertices() == binomial(sh.s + sh.n - 1, sh.n));
    std::size_t arrows = 0;
    for (std::size_t v = 0; v < q.points.size(); ++v)
      for (std::size_t i = 1; i <= sh.n + 1; ++i) {
        auto y = q.points[v];
        auto f = f_vector(sh.n, i);
        bool ok = true;
        for (std::size_t k = 0; k < y.size(); ++k) ok = ok && y[k] + f[k] >= 0;
        arrows += ok;
      }
    CHECK(q.quiver.num_arrows() == arrows);
    auto lib = cycles(q);
    auto brute = brute_cycles(q);
    CHECK(std::set<std::set<std::size_t>>(lib.begin(), lib.end()) == brute);
    CHECK(lib.size() == brute.size());
  }
}

TEST_CASE("cuts agree with exhaustive search") {
  for (const auto& sh : kShapes) {
    auto q = type_a_quiver(sh.n, sh.s);
    auto lib = enumerate_cuts(q);
    auto brute = brute_cuts(q, brute_cycles(q));
    CHECK(lib.size() == sh.cuts);
    CHECK(std::set<Cut>(lib.begin(), lib.end()) == std::set<Cut>(brute.begin(), brute.end()));
    std::size_t stable = 0;
    for (const auto& c : brute) {
      CHECK(is_cut(q, c));
      stable += omega_on_cuts(q, c) == c;
    }
    CHECK(stable == sh.stable);
  }
}

TEST_CASE("omega rotates coordinates and arrow types") {
  for (const auto& sh : kShapes) {
    auto q = type_a_quiver(sh.n, sh.s);
    for (std::size_t v = 0; v < q.points.size(); ++v) {
      std::size_t w = v;
      for (std::size_t k = 0; k <= sh.n; ++k) w = omega_vertex(q, w);
      CHECK(w == v);
    }
    for (std::size_t a = 0; a < q.quiver.num_arrows(); ++a) {
      std::size_t b = omega_arrow(q, a);
      CHECK(q.quiver.arrow(b).source == omega_vertex(q, q.quiver.arrow(a).source));
      CHECK(q.quiver.arrow(b).target == omega_vertex(q, q.quiver.arrow(a).target));
      CHECK(q.arrow_type[b] % (sh.n + 1) == (q.arrow_type[a] + 1) % (sh.n + 1));
    }
    for (const auto& c : enumerate_cuts(q)) CHECK(is_cut(q, omega_on_cuts(q, c)));
  }
}

TEST_CASE("Gamma is selfinjective with the twisted socle pairing") {
  for (const auto& sh : kShapes) {
    auto q = type_a_quiver(sh.n, sh.s);
    auto g = gamma_algebra(q);
    CHECK(g->dim() == gamma_dim_oracle(q));
    CHECK(is_selfinjective(g));
    std::string why;
    CHECK_MESSAGE(verify_nakayama_bijection(q, g, &why), why);
    for (std::size_t b = 0; b < g->dim(); ++b) {
      auto d = multidegree(q, *g, b);
      const auto& x = q.points[g->basis(b).source];
      for (std::size_t k = 0; k < d.size(); ++k) CHECK(d[k] <= x[k]);
    }
  }
}

TEST_CASE("a broken commutativity relation breaks the pairing") {
  auto q = type_a_quiver(2, 4);
  auto rels = gamma_relations(q);
  bool broke = false;
  for (auto& r : rels)
    if (r.terms.size() == 2) {
      r.terms.pop_back();
      broke = true;
      break;
    }
  REQUIRE(broke);
  auto g = build_algebra(q.quiver, rels);
  std::string why;
  CHECK_FALSE(verify_nakayama_bijection(q, g, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("cut algebras of Q^(1,s) are the orientations of A_s") {
  for (std::size_t s : {3, 5}) {
    auto q = type_a_quiver(1, s);
    for (const auto& c : enumerate_cuts(q)) {
      auto lam = cut_algebra(q, c);
      auto spec = cut_to_orientation(q, c);
      auto dq = dynkin_quiver(spec);
      CHECK(lam->dim() == path_algebra(dq.quiver)->dim());
      CHECK(arrow_isomorphic(lam, path_algebra(dq.quiver)));
      CHECK(is_omega_stable_orientation(spec) == (omega_on_cuts(q, c) == c));
    }
  }
  auto q = type_a_quiver(1, 3);
  try {
    cut_algebra(q, Cut{});
    FAIL("expected NotACut");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACut);
  }
}

TEST_CASE("type A verification") {
  for (auto [n, s] : {std::pair{1, 3}, std::pair{1, 5}, std::pair{2, 4}}) {
    TypeAOptions opt;
    auto r = verify_type_a_cuts(n, s, opt);
    CHECK(r.passed());
    CHECK(r.expected_b == binomial(s + n, n + 1));
    opt.parallel = false;
    auto rs = verify_type_a_cuts(n, s, opt);
    REQUIRE(rs.cuts.size() == r.cuts.size());
    for (std::size_t k = 0; k < r.cuts.size(); ++k) {
      CHECK(rs.cuts[k].cut == r.cuts[k].cut);
      CHECK(rs.cuts[k].report.ell == r.cuts[k].report.ell);
      CHECK(rs.cuts[k].report.is_nrf == r.cuts[k].report.is_nrf);
    }
    CHECK(rs.omega_stable_classes == r.omega_stable_classes);
  }
  CHECK(homogeneous_ell(2, 4) == 2);
  CHECK(homogeneous_ell(1, 5) == 3);
  CHECK_FALSE(homogeneous_ell(3, 3));
}

TEST_CASE("isomorphism classes of cut algebras") {
  auto q = type_a_quiver(1, 3);
  std::vector<AlgebraPtr> algs;
  for (const auto& c : enumerate_cuts(q)) algs.push_back(cut_algebra(q, c));
  // linear, linear reversed, sink, source: three classes
  CHECK(count_isomorphism_classes(algs) == 3);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("Dynkin data") {
  CHECK(coxeter_number('A', 5) == 6);
  CHECK(coxeter_number('D', 5) == 8);
  CHECK(coxeter_number('E', 6) == 12);
  CHECK(coxeter_number('E', 8) == 30);
  CHECK(dynkin_edges('E', 6).size() == 5);
  CHECK(all_orientations('D', 4).size() == 8);
  CHECK_THROWS_AS(dynkin_edges('E', 9), Error);
  auto inv = diagram_involution('A', 4);
  CHECK(inv == std::vector<std::size_t>{4, 3, 2, 1});
  for (const auto& spec : all_orientations('A', 3)) {
    auto dq = dynkin_quiver(spec);
    auto r = decide_nrf(path_algebra(dq.quiver), 1);
    CHECK(r.b == 6);
    CHECK(homogeneity(r) == is_omega_stable_orientation(spec));
  }
  auto names = classify_homogeneous_dynkin(6);
  CHECK(std::find(names.begin(), names.end(), "E6") != names.end());
}
