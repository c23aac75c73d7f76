// One PASS/FAIL line per acceptance criterion. Exit status is the number
// of failures.

#include "nrf/algebra_file.hpp"
#include "nrf/ar.hpp"
#include "nrf/cy.hpp"
#include "nrf/dynkin.hpp"
#include "nrf/type_a.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace nrf;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(Outcome&)> run;
};

AlgebraPtr load(const std::string& name) {
  return to_algebra(load_algebra_file(std::string(NRF_CORPUS_DIR) + "/" + name));
}

AlgebraPtr quiver_algebra(std::vector<std::string> v, std::vector<Arrow> arrows, std::vector<Relation> r = {}) {
  return build_algebra(Quiver(std::move(v), std::move(arrows)), std::move(r));
}

struct CorpusItem {
  std::string file;
  std::size_t n;
};

// Files of the corpus manifest with their n.
const std::vector<CorpusItem> kCorpus = {
    {"a2.alg", 1},           {"a3_linear.alg", 1},  {"a3_sink.alg", 1},       {"a3_source.alg", 1},
    {"a4_linear.alg", 1},    {"a5_symmetric.alg", 1}, {"d4.alg", 1},          {"d5_symmetric.alg", 1},
    {"e6_symmetric.alg", 1}, {"kronecker.alg", 1},  {"a2_x_a2.alg", 2},       {"a3_rad2.alg", 2},
    {"a3sink_x_a3sink.alg", 2}};

std::vector<Rep> probe_modules(const AlgebraPtr& a) {
  std::vector<Rep> out;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    out.push_back(projective(a, v));
    out.push_back(injective(a, v));
    out.push_back(simple(a, v));
  }
  return out;
}

std::string cert_string(const std::optional<CyCertificate>& c) {
  return c ? to_string(cy_dimension(*c)) : std::string("none");
}

void criterion_1(Outcome& o) {
  auto sink = quiver_algebra({"1", "2", "3"}, {{"a", 0, 1}, {"b", 2, 1}});
  auto lin = quiver_algebra({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}});
  o.require(check_twisted_cy(sink, 2, 1), "sink orientation should satisfy (2,1)");
  o.require(!check_twisted_cy(lin, 2, 1), "linear orientation should fail (2,1)");
  o.detail << "sink (2,1) true, linear (2,1) false";
}

void criterion_2(Outcome& o) {
  struct Item {
    const char* file;
    long h;
  };
  for (auto [f, h] : {Item{"a2.alg", 3}, Item{"a3_linear.alg", 4}, Item{"a4_linear.alg", 5}, Item{"d4.alg", 6}}) {
    auto c = find_twisted_cy(load(f), 24, 48);
    o.require(c && cy_dimension(*c) == reduce(h - 2, h), std::string(f) + " gave " + cert_string(c));
    o.detail << f << "=" << cert_string(c) << " ";
  }
  auto k = find_twisted_cy(load("kronecker.alg"), 24, 48);
  o.require(!k, "Kronecker returned a certificate");
  o.detail << "kronecker=" << cert_string(k);
}

void criterion_3(Outcome& o) {
  for (std::size_t rank : {3, 5}) {
    std::size_t checked = 0, homogeneous = 0;
    for (const auto& spec : all_orientations('A', rank)) {
      auto dq = dynkin_quiver(spec);
      auto r = decide_nrf(path_algebra(dq.quiver), 1);
      bool stable = is_omega_stable_orientation(spec);
      o.require(r.is_nrf == Verdict::True, diagram_name('A', rank) + " orientation not 1-RF");
      o.require(r.homogeneous == stable, diagram_name('A', rank) + " homogeneity differs from omega-stability");
      if (r.homogeneous) {
        ++homogeneous;
        o.require(r.ell.front() == dq.h / 2, "ell != h/2");
      }
      ++checked;
    }
    o.detail << diagram_name('A', rank) << ": " << checked << " orientations, " << homogeneous << " homogeneous (ell="
             << coxeter_number('A', rank) / 2 << ") ";
  }
}

void criterion_4(Outcome& o) {
  auto a2 = load("a2.alg");
  auto sq = load("a2_x_a2.alg");
  auto c = find_twisted_cy(a2, 12, 12);
  CyCertificate t = tensor_certificate({*c, *c});
  o.require(t.ell == 3 && t.m == 2, "tensor arithmetic gave " + std::to_string(t.m) + "/" + std::to_string(t.ell));
  o.require(check_untwisted_cy(sq, 3, 2), "untwisted (3,2) fails");
  auto r = decide_nrf(sq, 2);
  o.require(r.is_nrf == Verdict::False, std::string("decide_nrf returned ") + to_string(r.is_nrf));
  o.detail << "tensor certificate " << t.m << "/" << t.ell << ", untwisted (3,2) holds, 2-RF " << to_string(r.is_nrf)
           << " (" << r.reason << ")";
}

void criterion_5(Outcome& o) {
  auto r = verify_type_a_cuts(2, 4);
  o.require(r.all_nrf, "some cut algebra is not 2-RF");
  o.require(r.a_matches && r.vertices == 10, "a != 10");
  o.require(r.b_matches && r.expected_b == 20, "b != 20");
  o.require(r.homogeneous_iff_stable, "homogeneity differs from omega-stability");
  o.require(r.ell_matches && r.expected_ell == 2u, "ell != 2");
  o.require(r.omega_stable == 5, "omega-stable count " + std::to_string(r.omega_stable));
  for (const auto& c : r.cuts) o.require(c.report.a == 10 && c.report.b == 20, "cut with a,b != 10,20");
  o.detail << r.cuts.size() << " cuts, " << r.omega_stable << " omega-stable (" << r.omega_stable_classes
           << " classes), a=10 b=20 ell=2";
}

struct Named {
  std::string name;
  AlgebraPtr alg;
  std::size_t n;
};

// Corpus files plus the omega-stable cut algebras listed in the manifest.
std::vector<Named> corpus_algebras() {
  std::vector<Named> out;
  for (const auto& c : kCorpus) out.push_back({c.file, load(c.file), c.n});
  for (auto [n, s] : {std::pair<std::size_t, std::size_t>{1, 3}, {1, 5}, {2, 4}}) {
    auto q = type_a_quiver(n, s);
    std::size_t k = 0;
    for (const auto& cut : enumerate_cuts(q)) {
      if (omega_on_cuts(q, cut) != cut) continue;
      out.push_back({"cut(" + std::to_string(n) + "," + std::to_string(s) + ")#" + std::to_string(k++),
                     cut_algebra(q, cut), n});
    }
  }
  return out;
}

const std::vector<Named>& corpus_cached() {
  static const std::vector<Named> all = corpus_algebras();
  return all;
}

const NrfReport& report_for(const Named& x) {
  static std::map<const Algebra*, NrfReport> cache;
  auto it = cache.find(x.alg.get());
  if (it == cache.end()) it = cache.emplace(x.alg.get(), decide_nrf(x.alg, x.n)).first;
  return it->second;
}

constexpr std::size_t kEllMax = 12;

void criterion_6(Outcome& o) {
  std::size_t forward = 0, backward = 0;
  for (const auto& x : corpus_cached()) {
    const auto& r = report_for(x);
    if (r.is_nrf == Verdict::True && r.homogeneous) {
      std::size_t l = r.ell.front();
      o.require(check_twisted_cy(x.alg, l, static_cast<long>(x.n * (l - 1))), x.name + " fails forward direction");
      ++forward;
    }
    bool gl_ok = false;
    try {
      gl_ok = global_dimension(x.alg, x.n + 1) <= x.n;
    } catch (const Error&) {
    }
    if (!gl_ok) continue;
    // nu^l(A) computed incrementally; a hit is re-checked with check_twisted_cy
    auto p = stalk_regular(x.alg);
    for (std::size_t l = 1; l <= kEllMax; ++l) {
      p = nakayama(p, default_cap(*x.alg));
      auto m = is_shifted_regular(p);
      if (!m || *m != static_cast<int>(x.n * (l - 1))) continue;
      o.require(check_twisted_cy(x.alg, l, *m), x.name + " incremental and direct checks disagree");
      o.require(r.is_nrf == Verdict::True && r.homogeneous && r.ell.front() == l,
                x.name + " passes (" + std::to_string(l) + ") but is not " + std::to_string(l) + "-homogeneous");
      ++backward;
    }
  }
  o.detail << forward << " homogeneous algebras pass; " << backward << " certificates with ell <= " << kEllMax
           << " confirmed homogeneous";
}

void criterion_7(Outcome& o) {
  std::size_t count = 0;
  for (const auto& x : corpus_cached()) {
    const auto& r = report_for(x);
    if (r.is_nrf != Verdict::True || !r.ring_indecomposable) continue;
    auto c = find_twisted_cy(x.alg, 24, 48);
    auto expect = reduce(static_cast<long>(x.n * (r.b - r.a)), static_cast<long>(r.b));
    o.require(c && cy_dimension(*c) == expect, x.name + ": " + cert_string(c) + " vs " + to_string(expect));
    ++count;
  }
  o.detail << count << " ring-indecomposable n-RF algebras";
}

void criterion_8(Outcome& o) {
  auto sink = load("a3_sink.alg");
  auto t = tensor_nrf({{sink, 1}, {sink, 1}}, 2);
  o.require(t.report.is_nrf == Verdict::True, "not 2-RF");
  o.require(t.report.homogeneous && t.report.ell.front() == 2, "not 2-homogeneous");
  o.require(t.formula_summands == 18 && t.report.b == 18, "summand count");
  o.require(t.formula_matches, "orbit and formula modules differ");
  o.detail << "a=" << t.report.a << " b=" << t.report.b << " formula summands " << t.formula_summands
           << ", isomorphic=" << (t.formula_matches ? "yes" : "no");
}

void criterion_9(Outcome& o) {
  std::size_t count = 0;
  for (const auto& x : corpus_cached()) {
    const auto& r = report_for(x);
    if (r.is_nrf != Verdict::True || !r.homogeneous) continue;
    std::size_t l = r.ell.front();
    auto pi = preprojective(x.alg, x.n, 4 * l + 8, &r);
    auto aus = auslander_algebra(r.summands);
    std::size_t tri = triangular_dimension(pi.degree_dims, l);
    o.require(aus.dim == tri, x.name + ": dim " + std::to_string(aus.dim) + " vs " + std::to_string(tri));
    auto g = aus.algebra();
    std::size_t gl = global_dimension(g, x.n + 4);
    auto dom = dominant_dimension(g, x.n + 4);
    o.require(gl <= x.n + 1, x.name + ": gl.dim " + std::to_string(gl));
    o.require(dom.infinite || dom.value >= x.n + 1, x.name + ": dom.dim " + std::to_string(dom.value));
    ++count;
  }
  o.detail << count << " homogeneous algebras";
}

void criterion_10(Outcome& o) {
  for (auto [n, s] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 4}}) {
    auto q = type_a_quiver(n, s);
    auto g = gamma_algebra(q);
    std::string why;
    std::string tag = "(" + std::to_string(n) + "," + std::to_string(s) + ")";
    o.require(verify_nakayama_bijection(q, g, &why), tag + " bijection: " + why);
    o.require(is_selfinjective(g), tag + " not selfinjective");
    std::size_t stable = 0;
    for (const auto& cut : enumerate_cuts(q)) {
      if (omega_on_cuts(q, cut) != cut) continue;
      auto lam = cut_algebra(q, cut);
      auto r = decide_nrf(lam, n);
      auto pi = preprojective(lam, n, 4 * r.ell.front() + 8, &r);
      o.require(nakayama_permutation(pi.algebra()) == r.sigma, tag + " permutation differs from sigma");
      ++stable;
    }
    o.detail << tag << ": dim " << g->dim() << ", " << stable << " stable cuts checked ";
  }
}

void criterion_11(Outcome& o) {
  std::size_t serre = 0, inverse_pairs = 0, lemma = 0, scaling = 0, complexes = 0;
  auto audit = [&](const ProjComplex& p, const std::string& what) {
    o.require(d_squared_zero(p), what + ": d^2 != 0");
    o.require(is_minimal(p), what + ": not minimal");
    ++complexes;
  };
  for (const auto& x : corpus_cached()) {
    const auto& a = x.alg;
    std::size_t gd = 0;
    try {
      gd = global_dimension(a, x.n + 1);
    } catch (const Error&) {
      continue;
    }
    std::size_t cap = default_cap(*a);
    auto nu = nakayama_functor(a);

    // Serre duality: Hom(M, N[i]) and D Hom(N, nu M [-i]) have equal dimension
    auto mods = probe_modules(a);
    std::vector<ProjComplex> res;
    for (const auto& m : mods) {
      res.push_back(min_proj_resolution(m, cap).complex);
      audit(res.back(), x.name + " resolution");
    }
    for (std::size_t i = 0; i < mods.size(); ++i) {
      auto num = realize(res[i], nu);
      for (std::size_t j = 0; j < mods.size(); ++j)
        for (std::size_t k = 0; k <= gd; ++k) {
          std::size_t lhs = ext_dim(k, res[i], mods[j]);
          std::size_t rhs = hom_derived_dim(res[j], shift(num, -static_cast<int>(k)));
          o.require(lhs == rhs, x.name + ": Serre identity fails");
          ++serre;
        }
    }

    const auto& r = report_for(x);
    if (r.is_nrf != Verdict::True) continue;
    for (const auto& orbit : r.orbit_table)
      for (std::size_t k = 0; k + 1 < orbit.size(); ++k) {
        // quasi-inverse identities on non-projective and non-injective summands
        o.require(is_isomorphic(tau_n_minus(orbit[k + 1], x.n, cap), orbit[k]), x.name + ": tau- tau X != X");
        o.require(is_isomorphic(tau_n(tau_n_minus(orbit[k + 1], x.n, cap), x.n, cap), orbit[k + 1]),
                  x.name + ": tau tau- Y != Y");
        ++inverse_pairs;
        // nu of a projective resolution of a non-projective summand is
        // concentrated in degree -n, with cohomology tau_n X
        auto px = min_proj_resolution(orbit[k], cap).complex;
        audit(px, x.name + " orbit resolution");
        auto nx = realize(px, nu);
        o.require(cohomology_support(nx) == std::vector<int>{-static_cast<int>(x.n)}, x.name + ": nu P_X spread");
        o.require(is_isomorphic(cohomology(nx, -static_cast<int>(x.n)), orbit[k + 1]), x.name + ": H^{-n} != tau");
        for (std::size_t e = 0; e <= gd; ++e)
          if (e != x.n) o.require(ext_dim(e, px, regular(a)) == 0, x.name + ": Ext^k(X, A) != 0");
        auto inj = to_injective_complex(stalk(orbit[k]), cap);
        audit(inj, x.name + " injective complex");
        ++lemma;
      }

    auto c = find_twisted_cy(a, kEllMax, 2 * kEllMax);
    if (c)
      for (long k : {2L, 3L}) {
        o.require(check_twisted_cy(a, k * c->ell, k * c->m), x.name + ": certificate does not scale");
        auto p = nakayama_power(stalk_regular(a), k * c->ell, cap);
        audit(minimize(p), x.name + " nakayama power");
        ++scaling;
      }
  }
  o.detail << serre << " Serre identities, " << inverse_pairs << " quasi-inverse pairs, " << lemma
           << " tau/nu checks, " << scaling << " scaled certificates, " << complexes << " complexes audited";
}

}  // namespace

int main() {
  std::vector<Criterion> all = {
      {1, "twisted CY pair of A3 orientations", 1, criterion_1},
      {2, "CY dimensions (h-2)/h of Dynkin path algebras", 30, criterion_2},
      {3, "A3/A5 homogeneity iff omega-stable", 30, criterion_3},
      {4, "A2 x A2 untwisted CY but not 2-RF", 60, criterion_4},
      {5, "cuts of Q^(2,4)", 180, criterion_5},
      {6, "homogeneous n-RF iff twisted certificate", 180, criterion_6},
      {7, "CY dimension n(b-a)/b", 60, criterion_7},
      {8, "tensor square of A3 with a sink", 60, criterion_8},
      {9, "Auslander algebra dimension and gl/dom dimension", 120, criterion_9},
      {10, "Nakayama bijection and permutation of Gamma", 120, criterion_10},
      {11, "property suites", 600, criterion_11},
  };
  int failures = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) o.require(false, "time budget exceeded");
    std::printf("%s [%2d] %s (%.2fs, budget %.0fs): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                c.budget_seconds, o.detail.str().c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failures, all.size());
  return failures;
}
