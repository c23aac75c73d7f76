// nrf: command-line front end.
//
// Exit codes: 0 yes / success, 1 no, 2 undecided or a cap/bound was hit,
// 64 unreadable input.

#include "nrf/algebra_file.hpp"
#include "nrf/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace nrf;

namespace {

struct Common {
  std::size_t cap = 0;
  std::uint64_t seed = 0;
  bool pretty = false;
  bool serial = false;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void emit(const Common& c, const Json& j) {
  if (c.pretty)
    std::cout << render_pretty(j);
  else
    std::cout << j.dump() << "\n";
}

Json caps_json(const Common& c, const AlgebraPtr& a) {
  Json j;
  j["cap"] = c.cap ? c.cap : default_cap(*a);
  j["seed"] = c.seed;
  j["parallel"] = !c.serial;
  return j;
}

NrfOptions nrf_options(const Common& c) {
  NrfOptions o;
  o.cap = c.cap;
  o.seed = c.seed;
  o.parallel = !c.serial;
  return o;
}

int verdict_code(Verdict v) { return v == Verdict::True ? 0 : v == Verdict::False ? 1 : 2; }

Json input_json(const std::string& file, const AlgebraPtr& a) {
  Json j;
  j["file"] = file;
  j["name"] = a->name;
  j["vertices"] = a->num_vertices();
  j["arrows"] = a->quiver().num_arrows();
  j["dim"] = a->dim();
  return j;
}

int cmd_analyze(const Common& c, const std::string& file, std::size_t n) {
  auto t0 = Clock::now();
  AlgebraPtr a = to_algebra(load_algebra_file(file));
  NrfReport r = decide_nrf(a, n, nrf_options(c));
  emit(c, envelope("analyze", input_json(file, a), caps_json(c, a), to_json(r, a->quiver()), since(t0)));
  return verdict_code(r.is_nrf);
}

int cmd_cy(const Common& c, const std::string& file, std::size_t ell_max, std::size_t m_max,
           std::optional<std::size_t> ell, std::optional<long> m, bool untwisted, std::size_t ceiling) {
  auto t0 = Clock::now();
  AlgebraPtr a = to_algebra(load_algebra_file(file));
  Json res;
  int code = 0;
  if (ell && m) {
    bool ok = check_twisted_cy(a, *ell, *m, c.cap);
    res["ell"] = *ell;
    res["m"] = *m;
    res["twisted_check"] = ok;
    code = ok ? 0 : 1;
    if (untwisted) {
      if (a->dim() > ceiling) throw Error(ErrorKind::CapExceeded, "dim " + std::to_string(a->dim()) + " exceeds the untwisted ceiling " + std::to_string(ceiling));
      bool u = check_untwisted_cy(a, *ell, *m, c.cap);
      res["untwisted_check"] = u;
      code = u ? 0 : 1;
    }
    res["cy_dimension"] = to_string(reduce(*m, static_cast<long>(*ell)));
  } else {
    auto cert = find_twisted_cy(a, ell_max, m_max, c.cap);
    if (!cert) {
      res["certificate"] = nullptr;
      code = 1;
    } else {
      Json cj = to_json(*cert);
      if (untwisted) {
        if (a->dim() > ceiling) throw Error(ErrorKind::CapExceeded, "dim " + std::to_string(a->dim()) + " exceeds the untwisted ceiling " + std::to_string(ceiling));
        bool u = check_untwisted_cy(a, cert->ell, cert->m, c.cap);
        cj["untwisted_check"] = u;
        code = u ? 0 : 1;
      }
      res["certificate"] = cj;
    }
    res["ell_max"] = ell_max;
    res["m_max"] = m_max;
  }
  emit(c, envelope("cy", input_json(file, a), caps_json(c, a), res, since(t0)));
  return code;
}

int cmd_typea(const Common& c, std::size_t n, std::size_t s, bool list, bool stable_only, bool verify,
              std::optional<std::size_t> emit_cut, std::size_t max_vertices) {
  auto t0 = Clock::now();
  if (binomial(s + n - 1, n) > max_vertices)
    throw Error(ErrorKind::CapExceeded, "Q^(n,s) has more than " + std::to_string(max_vertices) + " vertices");
  TypeAQuiver q = type_a_quiver(n, s);
  std::vector<Cut> cuts;
  for (auto& cut : enumerate_cuts(q))
    if (!stable_only || omega_on_cuts(q, cut) == cut) cuts.push_back(std::move(cut));
  if (emit_cut) {
    if (*emit_cut >= cuts.size()) throw Error(ErrorKind::InvalidSpec, "cut index out of range");
    AlgebraPtr l = cut_algebra(q, cuts[*emit_cut]);
    std::cout << write_algebra_file(l->quiver(), l->relations(),
                                    "cut " + std::to_string(*emit_cut) + " of Q^(" + std::to_string(n) + "," + std::to_string(s) + ")");
    return 0;
  }
  Json in;
  in["n"] = n;
  in["s"] = s;
  in["omega_stable_only"] = stable_only;
  Json res;
  int code = 0;
  if (verify) {
    TypeAOptions opt;
    opt.omega_stable_only = stable_only;
    opt.parallel = !c.serial;
    opt.nrf = nrf_options(c);
    opt.nrf.parallel = false;
    TypeAReport r = verify_type_a_cuts(n, s, opt);
    res = to_json(r, q);
    code = r.passed() ? 0 : 1;
  } else {
    res["vertices"] = q.points.size();
    res["arrows"] = q.quiver.num_arrows();
    res["cycles"] = cycles(q).size();
    std::size_t stable = 0;
    Json listed = Json::array();
    for (const auto& cut : cuts) {
      bool st = omega_on_cuts(q, cut) == cut;
      stable += st;
      if (list) {
        Json e;
        e["cut"] = cut_json(cut, q);
        e["omega_stable"] = st;
        listed.push_back(e);
      }
    }
    res["cuts"] = cuts.size();
    res["omega_stable_cuts"] = stable;
    if (list) res["cut_list"] = listed;
    auto e = homogeneous_ell(n, s);
    res["homogeneous_ell"] = e ? Json(*e) : Json(nullptr);
  }
  Json caps;
  caps["max_vertices"] = max_vertices;
  caps["parallel"] = !c.serial;
  emit(c, envelope("typea", in, caps, res, since(t0)));
  return code;
}

int cmd_tensor(const Common& c, const std::vector<std::string>& files, std::vector<std::size_t> ns,
               std::optional<std::size_t> ell) {
  auto t0 = Clock::now();
  if (ns.size() == 1 && files.size() > 1) ns.assign(files.size(), ns.front());
  if (ns.size() != files.size()) throw Error(ErrorKind::InvalidSpec, "--n-per-factor needs one value per file");
  std::vector<std::pair<AlgebraPtr, std::size_t>> factors;
  Json in = Json::array();
  for (std::size_t k = 0; k < files.size(); ++k) {
    factors.emplace_back(to_algebra(load_algebra_file(files[k])), ns[k]);
    in.push_back(input_json(files[k], factors.back().first));
  }
  Json res;
  // CY arithmetic for the product
  std::vector<CyCertificate> certs;
  Json fc = Json::array();
  for (const auto& [a, ni] : factors) {
    auto cert = find_twisted_cy(a, 24, 24, c.cap);
    if (cert) certs.push_back(*cert);
    fc.push_back(cert ? to_json(*cert) : Json(nullptr));
  }
  res["factor_certificates"] = fc;
  AlgebraPtr prod = factors.front().first;
  for (std::size_t k = 1; k < factors.size(); ++k) prod = tensor_product(prod, factors[k].first);
  std::size_t total_n = 0;
  for (const auto& f : factors) total_n += f.second;
  if (certs.size() == factors.size()) {
    CyCertificate t = tensor_certificate(certs);
    Json tj = to_json(t);
    tj["verified_on_product"] = check_twisted_cy(prod, t.ell, t.m, c.cap);
    res["product_certificate"] = tj;
  }
  std::size_t l = ell.value_or(0);
  if (!ell) {
    NrfReport f0 = decide_nrf(factors.front().first, factors.front().second, nrf_options(c));
    l = f0.is_nrf == Verdict::True && !f0.ell.empty() ? f0.ell.front() : 0;
  }
  res["ell"] = l;
  int code = 0;
  try {
    TensorNrf t = tensor_nrf(factors, l, nrf_options(c));
    res["report"] = to_json(t.report, t.algebra->quiver());
    res["formula_summands"] = t.formula_summands;
    res["formula_matches_orbits"] = t.formula_matches;
    code = t.report.is_nrf == Verdict::True && t.report.homogeneous && t.formula_matches ? 0 : 1;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::FactorNotHomogeneous) throw;
    res["error"] = e.what();
    res["report"] = to_json(decide_nrf(prod, total_n, nrf_options(c)), prod->quiver());
    code = 1;
  }
  Json caps;
  caps["cap"] = c.cap;
  caps["seed"] = c.seed;
  emit(c, envelope("tensor", in, caps, res, since(t0)));
  return code;
}

Json permutation_json(const std::vector<std::size_t>& p, const Quiver& q) {
  Json j = Json::object();
  for (std::size_t i = 0; i < p.size(); ++i) j[q.vertex(i)] = q.vertex(p[i]);
  return j;
}

int cmd_preproj(const Common& c, const std::string& file, std::size_t n) {
  auto t0 = Clock::now();
  AlgebraPtr a = to_algebra(load_algebra_file(file));
  NrfReport r = decide_nrf(a, n, nrf_options(c));
  if (r.is_nrf != Verdict::True) throw Error(ErrorKind::NotNRF, "input is not " + std::to_string(n) + "-RF");
  std::size_t cap = c.cap ? c.cap : default_cap(*a);
  TensorAlgebra pi = preprojective(a, n, cap, &r);
  Json res;
  res["presentation"] = to_json(pi.presentation);
  res["degree_dims"] = pi.degree_dims;
  res["selfinjective"] = true;
  // Vertices of the presentation are those of A, in order.
  auto perm = nakayama_permutation(pi.algebra());
  res["nakayama_permutation"] = permutation_json(perm, a->quiver());
  res["sigma"] = permutation_json(r.sigma, a->quiver());
  res["permutation_equals_sigma"] = perm == r.sigma;
  emit(c, envelope("preproj", input_json(file, a), caps_json(c, a), res, since(t0)));
  return 0;
}

int cmd_auslander(const Common& c, const std::string& file, std::size_t n) {
  auto t0 = Clock::now();
  AlgebraPtr a = to_algebra(load_algebra_file(file));
  NrfReport r = decide_nrf(a, n, nrf_options(c));
  if (r.is_nrf != Verdict::True) throw Error(ErrorKind::NotNRF, "input is not " + std::to_string(n) + "-RF");
  std::size_t cap = c.cap ? c.cap : default_cap(*a);
  AuslanderAlgebra g = auslander_algebra(r.summands);
  Json res;
  res["presentation"] = to_json(g.presentation);
  std::size_t gl = global_dimension(g.algebra(), std::max(cap, n + 2));
  DominantDimension dd = dominant_dimension(g.algebra(), n + 2);
  res["gl_dim"] = gl;
  res["dom_dim"] = dd.infinite ? Json("infinite") : Json(dd.value);
  res["gl_dim_le_n_plus_1_le_dom_dim"] = gl <= n + 1 && (dd.infinite || dd.value >= n + 1);
  if (r.homogeneous) {
    TensorAlgebra pi = preprojective(a, n, cap, &r);
    res["triangular_formula_dim"] = triangular_dimension(pi.degree_dims, r.ell.front());
    res["dimension_matches"] = triangular_dimension(pi.degree_dims, r.ell.front()) == g.dim;
  }
  emit(c, envelope("auslander", input_json(file, a), caps_json(c, a), res, since(t0)));
  return 0;
}

struct CorpusEntry {
  std::string label;
  std::string file;  // empty for generated entries
  AlgebraPtr alg;
  std::size_t n = 1;
};

std::vector<CorpusEntry> read_manifest(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.txt");
  if (!in) throw Error(ErrorKind::InvalidSpec, "no manifest.txt in " + dir.string());
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    std::istringstream ws(line);
    std::string kind;
    if (!(ws >> kind)) continue;
    if (kind == "file") {
      std::string f;
      std::size_t n;
      if (!(ws >> f >> n)) throw ParseError(lineno, 1, "expected 'file <path> <n>'");
      out.push_back({f, (dir / f).string(), to_algebra(load_algebra_file((dir / f).string())), n});
    } else if (kind == "typea") {
      std::size_t n, s;
      if (!(ws >> n >> s)) throw ParseError(lineno, 1, "expected 'typea <n> <s>'");
      TypeAQuiver q = type_a_quiver(n, s);
      std::size_t k = 0;
      for (const auto& cut : enumerate_cuts(q)) {
        if (omega_on_cuts(q, cut) != cut) continue;
        out.push_back({"Q(" + std::to_string(n) + "," + std::to_string(s) + ") cut " + std::to_string(k++), "", cut_algebra(q, cut), n});
      }
    } else {
      throw ParseError(lineno, 1, "unknown manifest entry '" + kind + "'");
    }
  }
  return out;
}

int cmd_corpus(const Common& c, const std::string& dir, std::size_t ell_max) {
  auto t0 = Clock::now();
  auto entries = read_manifest(dir);
  std::vector<Json> results(entries.size());
  std::vector<std::string> errors(entries.size());
  NrfOptions opt = nrf_options(c);
  opt.parallel = false;
#pragma omp parallel for schedule(dynamic) if (!c.serial)
  for (std::size_t k = 0; k < entries.size(); ++k) {
    try {
      const auto& e = entries[k];
      Json j;
      j["entry"] = e.label;
      j["n"] = e.n;
      j["dim"] = e.alg->dim();
      NrfReport r = decide_nrf(e.alg, e.n, opt);
      j["nrf"] = to_json(r, e.alg->quiver());
      auto cert = find_twisted_cy(e.alg, ell_max, 2 * ell_max, c.cap);
      j["certificate"] = cert ? to_json(*cert) : Json(nullptr);
      results[k] = j;
    } catch (const std::exception& ex) {
      errors[k] = ex.what();
    }
  }
  Json res = Json::array();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!errors[k].empty()) {
      Json j;
      j["entry"] = entries[k].label;
      j["error"] = errors[k];
      res.push_back(j);
    } else {
      res.push_back(results[k]);
    }
  }
  Json in;
  in["dir"] = dir;
  in["entries"] = entries.size();
  Json caps;
  caps["cap"] = c.cap;
  caps["ell_max"] = ell_max;
  caps["parallel"] = !c.serial;
  emit(c, envelope("corpus", in, caps, res, since(t0)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations with quiver algebras: n-representation-finiteness and fractional Calabi-Yau checks"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* s) {
    s->add_option("--cap", c.cap, "resolution and orbit cap (default 4*vertices+8)");
    s->add_option("--seed", c.seed, "seed for randomized isomorphism tests")->default_val(0);
    s->add_flag("--pretty", c.pretty, "plain-text output instead of JSON");
    s->add_flag("--serial", c.serial, "disable OpenMP fan-out");
  };

  std::string file;
  std::size_t n = 1;
  auto* analyze = app.add_subcommand("analyze", "decide n-representation-finiteness");
  analyze->add_option("file", file, "algebra file")->required();
  analyze->add_option("--n", n, "n")->required();
  common(analyze);

  std::size_t ell_max = 24, m_max = 24, ceiling = 12;
  std::optional<std::size_t> ell;
  std::optional<long> m;
  bool untwisted = false;
  auto* cy = app.add_subcommand("cy", "fractional Calabi-Yau certificates");
  cy->add_option("file", file, "algebra file")->required();
  cy->add_option("--ell-max", ell_max, "largest ell searched")->default_val(24);
  cy->add_option("--m-max", m_max, "largest |m| accepted")->default_val(24);
  cy->add_option("--ell", ell, "check this ell (with --m)");
  cy->add_option("--m", m, "check this m (with --ell)");
  cy->add_flag("--untwisted", untwisted, "check at the bimodule level");
  cy->add_option("--dim-ceiling", ceiling, "largest dim A for --untwisted")->default_val(12);
  common(cy);

  std::size_t s = 1, max_vertices = 60;
  bool list = false, stable_only = false, verify = false;
  std::optional<std::size_t> emit_cut;
  auto* typea = app.add_subcommand("typea", "the quivers Q^(n,s) and their cuts");
  typea->add_option("--n", n, "n")->required();
  typea->add_option("--s", s, "s")->required();
  typea->add_flag("--enumerate-cuts", list, "list the cuts");
  typea->add_flag("--omega-stable-only", stable_only, "only omega-stable cuts");
  typea->add_flag("--verify", verify, "decide every cut algebra and compare homogeneity with omega-stability");
  typea->add_option("--emit-cut", emit_cut, "print the algebra file of the k-th listed cut");
  typea->add_option("--max-vertices", max_vertices, "bound on |Q_0|")->default_val(60);
  common(typea);

  std::vector<std::string> files;
  std::vector<std::size_t> ns;
  std::optional<std::size_t> tensor_ell;
  auto* tensor = app.add_subcommand("tensor", "tensor products of homogeneous n-RF algebras");
  tensor->add_option("files", files, "factor algebra files")->required()->expected(1, -1);
  tensor->add_option("--n-per-factor", ns, "n for each factor")->required()->delimiter(',');
  tensor->add_option("--ell", tensor_ell, "common ell (default: that of the first factor)");
  common(tensor);

  auto* preproj = app.add_subcommand("preproj", "(n+1)-preprojective algebra");
  preproj->add_option("file", file, "algebra file")->required();
  preproj->add_option("--n", n, "n")->required();
  common(preproj);

  auto* auslander = app.add_subcommand("auslander", "n-Auslander algebra of the cluster tilting module");
  auslander->add_option("file", file, "algebra file")->required();
  auslander->add_option("--n", n, "n")->required();
  common(auslander);

  std::string dir = "corpus";
  auto* corpus = app.add_subcommand("corpus", "run the regression corpus");
  corpus->add_option("dir", dir, "corpus directory with manifest.txt")->default_val("corpus");
  corpus->add_option("--ell-max", ell_max, "largest ell searched")->default_val(24);
  common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (*analyze) return cmd_analyze(c, file, n);
    if (*cy) return cmd_cy(c, file, ell_max, m_max, ell, m, untwisted, ceiling);
    if (*typea) return cmd_typea(c, n, s, list, stable_only, verify, emit_cut, max_vertices);
    if (*tensor) return cmd_tensor(c, files, ns, tensor_ell);
    if (*preproj) return cmd_preproj(c, file, n);
    if (*auslander) return cmd_auslander(c, file, n);
    if (*corpus) return cmd_corpus(c, dir, ell_max);
  } catch (const Error& e) {
    std::cerr << "nrf: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse:
      case ErrorKind::MalformedRelation:
      case ErrorKind::InvalidSpec: return 64;
      case ErrorKind::CapExceeded:
      case ErrorKind::Undecided:
      case ErrorKind::NotFiniteDimensional:
      case ErrorKind::NotNilpotent: return 2;
      default: return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "nrf: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
