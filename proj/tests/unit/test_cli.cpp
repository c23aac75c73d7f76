#include "util.hpp"

#include <doctest.h>

using namespace nrf;
using namespace nrf::test;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_algebra_file(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("parse a file with every section") {
  auto f = parse_algebra_file(
      "# comment\n"
      "name: test\n"
      "field: Q\n"
      "vertices: 1, 2, 3\n"
      "arrows:\n"
      "  a: 1 -> 2\n"
      "  b: 2 -> 3\n"
      "  c: 1 -> 2, d: 2 -> 3  # trailing comment\n"
      "relations:\n"
      "  a*b - 1/2*c*d\n"
      "zero: a*d\n");
  CHECK(f.name == "test");
  CHECK(f.quiver.num_vertices() == 3);
  CHECK(f.quiver.num_arrows() == 4);
  REQUIRE(f.relations.size() == 2);
  CHECK(f.relations[0].terms.size() == 2);
  CHECK(f.relations[0].terms[1].coeff == Rational(-1, 2));
  auto a = to_algebra(f);
  // paths 1->3: ab, ad, cb, cd modulo two relations
  CHECK(a->between(0, 2).size() == 2);
}

TEST_CASE("parse errors carry line and column") {
  auto e = parse_failure("vertices: 1 2\narrows:\n  a: 1 -> 7\n");
  CHECK(e.line() == 3);
  CHECK(e.column() > 0);
  e = parse_failure("vertices: 1 2\narrows:\n  a: 1 -> 2\nrelations:\n  a*zz\n");
  CHECK(e.line() == 5);
  e = parse_failure("field: F7\nvertices: 1\n");
  CHECK(e.line() == 1);
  e = parse_failure("vertices: 1 2\narrows:\n  1a: 1 -> 2\n");
  CHECK(e.line() == 3);
  e = parse_failure("vertices: 1 2\narrows:\n  a: 1 -> 2\n  b: 2 -> 1\nrelations:\n  1/0*a*b\n");
  CHECK(e.line() == 6);
  e = parse_failure("colours: red\n");
  CHECK(e.line() == 1);
}

TEST_CASE("non-parallel relations are malformed") {
  try {
    parse_algebra_file("vertices: 1 2 3\narrows:\n  a: 1 -> 2\n  b: 2 -> 3\n  c: 1 -> 2\nrelations:\n  a*b - c\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::MalformedRelation || e.kind() == ErrorKind::Parse));
  }
}

TEST_CASE("property: writing and re-reading a file preserves the algebra") {
  for (const char* name : {"a2_x_a2.alg", "a3_rad2.alg", "e6_symmetric.alg", "a3sink_x_a3sink.alg"}) {
    auto a = corpus(name);
    auto text = write_algebra_file(a->quiver(), a->relations(), name);
    auto b = to_algebra(parse_algebra_file(text));
    CHECK(b->dim() == a->dim());
    CHECK(same_basis_data(*a, *b));
  }
  auto q = type_a_quiver(2, 4);
  auto g = gamma_algebra(q);
  auto back = to_algebra(parse_algebra_file(write_algebra_file(q.quiver, gamma_relations(q), "gamma")));
  CHECK(back->dim() == g->dim());
}

TEST_CASE("reports round-trip through JSON text") {
  auto a = a3_sink();
  auto r = decide_nrf(a, 1);
  Json j = envelope("analyze", Json{{"file", "a3_sink.alg"}}, Json{{"cap", 20}}, to_json(r, a->quiver()), 0.5);
  Json back = Json::parse(j.dump());
  CHECK(back == j);
  CHECK(back["schema_version"] == kSchemaVersion);
  CHECK(back["result"]["is_nrf"] == "true");
  CHECK(back["result"]["ell"] == Json::array({2, 2, 2}));
  CHECK(back["result"]["b"] == 6);
  auto text = render_pretty(j);
  CHECK(text.find("is_nrf") != std::string::npos);

  auto c = find_twisted_cy(a, 4, 4);
  REQUIRE(c);
  Json cj = to_json(*c);
  CHECK(cj["ell"] == 2);
  CHECK(cj["m"] == 1);
  CHECK(to_json(Fraction{1, 2}).dump().find('1') != std::string::npos);
}

TEST_CASE("type A report JSON") {
  auto q = type_a_quiver(1, 3);
  auto r = verify_type_a_cuts(1, 3);
  Json j = to_json(r, q);
  CHECK(j["checks"]["passed"] == true);
  CHECK(j["omega_stable_cuts"] == 2);
  CHECK(Json::parse(j.dump()) == j);
}
