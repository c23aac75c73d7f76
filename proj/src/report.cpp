#include "nrf/report.hpp"

#include <sstream>

namespace nrf {

namespace {

Json dims(const Rep& m) { return Json(m.dims); }

}  // namespace

Json to_json(const NrfReport& r, const Quiver& q) {
  Json j;
  j["n"] = r.n;
  j["is_nrf"] = to_string(r.is_nrf);
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["gl_dim"] = r.gl_dim_known ? Json(r.gl_dim) : Json(nullptr);
  j["a"] = r.a;
  j["b"] = r.b;
  j["ring_indecomposable"] = r.ring_indecomposable;
  if (r.is_nrf != Verdict::True) return j;
  j["ell"] = r.ell;
  Json sigma = Json::object();
  for (std::size_t i = 0; i < r.sigma.size(); ++i) sigma[q.vertex(i)] = q.vertex(r.sigma[i]);
  j["sigma"] = sigma;
  j["homogeneous"] = r.homogeneous;
  Json orbits = Json::array();
  for (std::size_t i = 0; i < r.orbit_table.size(); ++i) {
    Json o;
    o["injective"] = q.vertex(i);
    Json entries = Json::array();
    for (const auto& x : r.orbit_table[i]) entries.push_back(dims(x));
    o["dimension_vectors"] = entries;
    orbits.push_back(o);
  }
  j["orbit_table"] = orbits;
  j["cluster_tilting_dim"] = r.cluster_tilting.total_dim();
  return j;
}

Json to_json(const Fraction& f) { return to_string(f); }

Json to_json(const CyCertificate& c) {
  Json j;
  j["ell"] = c.ell;
  j["m"] = c.m;
  j["twisted"] = c.twisted;
  j["cy_dimension"] = to_string(cy_dimension(c));
  j["evidence"] = c.evidence;
  return j;
}

Json to_json(const Presentation& p) {
  const Algebra& a = *p.algebra;
  const Quiver& q = a.quiver();
  Json j;
  j["dim"] = a.dim();
  j["vertices"] = q.vertices();
  Json arrows = Json::array();
  for (const auto& ar : q.arrows()) arrows.push_back(ar.label + ": " + q.vertex(ar.source) + " -> " + q.vertex(ar.target));
  j["arrows"] = arrows;
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(to_string(q, r));
  j["relations"] = rels;
  j["homogeneous_relations"] = p.homogeneous;
  return j;
}

Json cut_json(const Cut& c, const TypeAQuiver& q) {
  Json j = Json::array();
  for (auto a : c) j.push_back(q.quiver.arrow(a).label);
  return j;
}

Json to_json(const TypeAReport& r, const TypeAQuiver& q) {
  Json j;
  j["n"] = r.n;
  j["s"] = r.s;
  j["vertices"] = r.vertices;
  j["arrows"] = r.arrows;
  j["cycles"] = r.num_cycles;
  j["cuts_examined"] = r.cuts.size();
  j["omega_stable_cuts"] = r.omega_stable;
  j["omega_stable_isomorphism_classes"] = r.omega_stable_classes;
  j["expected_ell"] = r.expected_ell ? Json(*r.expected_ell) : Json(nullptr);
  j["expected_b"] = r.expected_b;
  Json cuts = Json::array();
  for (const auto& cv : r.cuts) {
    Json c;
    c["cut"] = cut_json(cv.cut, q);
    c["omega_stable"] = cv.omega_stable;
    c["is_nrf"] = to_string(cv.report.is_nrf);
    c["a"] = cv.report.a;
    c["b"] = cv.report.b;
    c["homogeneous"] = cv.report.homogeneous;
    c["ell"] = cv.report.ell;
    cuts.push_back(c);
  }
  j["cuts"] = cuts;
  Json checks;
  checks["all_nrf"] = r.all_nrf;
  checks["homogeneous_iff_omega_stable"] = r.homogeneous_iff_stable;
  checks["ell_matches"] = r.ell_matches;
  checks["a_matches"] = r.a_matches;
  checks["b_matches"] = r.b_matches;
  checks["passed"] = r.passed();
  j["checks"] = checks;
  return j;
}

Json envelope(const std::string& command, const Json& input, const Json& caps, const Json& result, double seconds) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["input"] = input;
  j["caps"] = caps;
  j["result"] = result;
  j["seconds"] = seconds;
  return j;
}

namespace {

bool scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured() && !scalar_array(x)) return false;
  return true;
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, int indent, std::ostringstream& os) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (v.is_structured() && !scalar_array(v)) {
        os << pad << it.key() << ":\n";
        render(v, indent + 2, os);
      } else {
        os << pad << it.key() << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !scalar_array(v)) {
        os << pad << "-\n";
        render(v, indent + 2, os);
      } else {
        os << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_pretty(const Json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace nrf
