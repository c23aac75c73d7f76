#include "nrf/algebra_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace nrf {

namespace {

struct Item {
  std::string text;
  std::size_t line, col;  // position of text[0]
};

std::string trim(const std::string& s, std::size_t& lead) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  lead = b;
  return s.substr(b, e - b);
}

void split_items(const std::string& body, std::size_t line, std::size_t col, std::vector<Item>& out) {
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      std::size_t lead;
      std::string t = trim(body.substr(start, i - start), lead);
      if (!t.empty()) out.push_back({t, line, col + start + lead});
      start = i + 1;
    }
  }
}

bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\''; }

Rational parse_coefficient(const Item& it, const std::string& tok, std::size_t off) {
  Rational c;
  try {
    c = Rational(tok);
  } catch (const std::exception&) {
    throw ParseError(it.line, it.col + off, "bad coefficient '" + tok + "'");
  }
  if (c.get_den() == 0) throw ParseError(it.line, it.col + off, "zero denominator in '" + tok + "'");
  c.canonicalize();
  return c;
}

Relation parse_relation(const Item& it, const Quiver& q, bool zero) {
  const std::string& s = it.text;
  Relation r;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip();
    if (i >= s.size()) break;
    Rational sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError(it.line, it.col + i, "expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    Path p;
    bool have_arrow = false;
    while (true) {
      skip();
      std::size_t start = i;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        if (have_arrow) throw ParseError(it.line, it.col + start, "coefficient after an arrow");
        coeff *= parse_coefficient(it, s.substr(start, i - start), start);
      } else {
        while (i < s.size() && is_label_char(s[i])) ++i;
        if (i == start) throw ParseError(it.line, it.col + start, "expected an arrow label");
        std::string lab = s.substr(start, i - start);
        auto a = q.arrow_index(lab);
        if (!a) throw ParseError(it.line, it.col + start, "unknown arrow '" + lab + "'");
        if (!have_arrow) p.source = q.arrow(*a).source;
        p.arrows.push_back(*a);
        have_arrow = true;
      }
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!have_arrow) throw ParseError(it.line, it.col, "term without arrows");
    r.terms.push_back({sign * coeff, std::move(p)});
  }
  if (r.terms.empty()) throw ParseError(it.line, it.col, "empty relation");
  if (zero && r.terms.size() != 1) throw ParseError(it.line, it.col, "a zero relation is a single path");
  try {
    validate_relation(q, r);
  } catch (const Error& e) {
    throw ParseError(it.line, it.col, e.what());
  }
  return r;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  std::map<std::string, std::vector<Item>> sections;
  std::vector<std::string> order;
  std::string current;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  static const std::vector<std::string> known{"name", "field", "vertices", "arrows", "relations", "zero"};
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::size_t lead;
    std::string t = trim(line, lead);
    if (t.empty()) continue;
    // Section header: a known keyword followed by ':'.
    std::size_t colon = t.find(':');
    if (colon != std::string::npos) {
      std::size_t l2;
      std::string key = trim(t.substr(0, colon), l2);
      bool is_key = false;
      for (const auto& k : known) is_key = is_key || k == key;
      if (is_key) {
        current = key;
        if (sections.count(key)) throw ParseError(lineno, lead + 1, "duplicate section '" + key + "'");
        sections[key];
        order.push_back(key);
        std::string rest = t.substr(colon + 1);
        if (key == "name" || key == "field") {
          std::size_t l3;
          std::string v = trim(rest, l3);
          if (!v.empty()) sections[key].push_back({v, lineno, lead + colon + 2 + l3});
        } else {
          split_items(rest, lineno, lead + colon + 2, sections[key]);
        }
        continue;
      }
    }
    if (current.empty()) throw ParseError(lineno, lead + 1, "content before any section header");
    if (current == "name" || current == "field") throw ParseError(lineno, lead + 1, "unexpected line after " + current);
    split_items(line.substr(lead), lineno, lead + 1, sections[current]);
  }
  AlgebraFile f;
  if (sections.count("name") && !sections["name"].empty()) f.name = sections["name"].front().text;
  if (sections.count("field") && !sections["field"].empty()) {
    const Item& it = sections["field"].front();
    if (it.text != "Q") throw ParseError(it.line, it.col, "only the field Q is supported");
    f.field = "Q";
  }
  if (!sections.count("vertices")) throw ParseError(lineno + 1, 1, "missing 'vertices:' section");
  std::vector<std::string> verts;
  std::map<std::string, std::size_t> vindex;
  for (const auto& it : sections["vertices"]) {
    std::istringstream ws(it.text);
    std::string v;
    std::size_t off = 0;
    while (ws >> v) {
      off = it.text.find(v, off);
      for (char c : v)
        if (!is_label_char(c)) throw ParseError(it.line, it.col + off, "bad vertex label '" + v + "'");
      if (vindex.count(v)) throw ParseError(it.line, it.col + off, "duplicate vertex '" + v + "'");
      vindex[v] = verts.size();
      verts.push_back(v);
      off += v.size();
    }
  }
  std::vector<Arrow> arrows;
  std::map<std::string, bool> seen;
  for (const auto& it : sections["arrows"]) {
    std::size_t colon = it.text.find(':');
    std::size_t arrow = it.text.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      throw ParseError(it.line, it.col, "expected 'label: source -> target'");
    std::size_t l1, l2, l3;
    std::string lab = trim(it.text.substr(0, colon), l1);
    std::string src = trim(it.text.substr(colon + 1, arrow - colon - 1), l2);
    std::string tgt = trim(it.text.substr(arrow + 2), l3);
    if (lab.empty() || std::isdigit(static_cast<unsigned char>(lab[0])))
      throw ParseError(it.line, it.col, "arrow labels must be nonempty and must not start with a digit");
    for (char c : lab)
      if (!is_label_char(c)) throw ParseError(it.line, it.col + l1, "bad arrow label '" + lab + "'");
    if (seen[lab]) throw ParseError(it.line, it.col, "duplicate arrow '" + lab + "'");
    seen[lab] = true;
    if (!vindex.count(src)) throw ParseError(it.line, it.col + colon + 1 + l2, "unknown vertex '" + src + "'");
    if (!vindex.count(tgt)) throw ParseError(it.line, it.col + arrow + 2 + l3, "unknown vertex '" + tgt + "'");
    arrows.push_back({lab, vindex[src], vindex[tgt]});
  }
  f.quiver = Quiver(std::move(verts), std::move(arrows));
  for (const auto& it : sections["relations"]) f.relations.push_back(parse_relation(it, f.quiver, false));
  for (const auto& it : sections["zero"]) f.relations.push_back(parse_relation(it, f.quiver, true));
  return f;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidSpec, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  AlgebraFile f = parse_algebra_file(ss.str());
  if (f.name.empty()) f.name = path;
  return f;
}

AlgebraPtr to_algebra(const AlgebraFile& f, std::size_t length_cap) {
  auto a = build_algebra(f.quiver, f.relations, length_cap);
  auto named = std::make_shared<Algebra>(*a);
  named->name = f.name;
  return named;
}

std::string write_algebra_file(const Quiver& q, const std::vector<Relation>& rels, const std::string& name) {
  std::ostringstream os;
  if (!name.empty()) os << "name: " << name << "\n";
  os << "vertices:";
  for (const auto& v : q.vertices()) os << " " << v;
  os << "\narrows:\n";
  for (const auto& a : q.arrows()) os << "  " << a.label << ": " << q.vertex(a.source) << " -> " << q.vertex(a.target) << "\n";
  std::vector<const Relation*> zero, other;
  for (const auto& r : rels) (r.terms.size() == 1 && r.terms[0].coeff == 1 ? zero : other).push_back(&r);
  if (!other.empty()) {
    os << "relations:\n";
    for (auto r : other) os << "  " << to_string(q, *r) << "\n";
  }
  if (!zero.empty()) {
    os << "zero:\n";
    for (auto r : zero) os << "  " << to_string(q, *r) << "\n";
  }
  return os.str();
}

}  // namespace nrf
