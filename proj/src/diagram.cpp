#include "parcr/diagram.hpp"
#include <map>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "frac.hpp"

namespace parcr {

bool CrossMarkedDiagram::operator==(const CrossMarkedDiagram& o) const {
  if (type != o.type || nodes.size() != o.nodes.size()) return false;
  for (size_t i = 0; i < nodes.size(); ++i) {
    const auto &a = nodes[i], &b = o.nodes[i];
    if (a.root != b.root || a.paint != b.paint || a.cross != b.cross ||
        a.noncompact != b.noncompact)
      return false;
  }
  auto ek = [](const DiagEdge& e) { return std::tuple(e.a, e.b, e.multiplicity, e.arrow_to); };
  if (edges.size() != o.edges.size()) return false;
  for (size_t i = 0; i < edges.size(); ++i)
    if (ek(edges[i]) != ek(o.edges[i])) return false;
  return conj_arrows == o.conj_arrows;
}

CrossMarkedDiagram diagram_of(const CrPair& pair, const Chamber& chamber,
                              const std::vector<bool>* noncompact) {
  const RootSystem& rs = *pair.rs;
  if (!is_admissible(pair.q, chamber))
    fail(ErrorKind::NotAdmissible, "chamber is not admissible for the parabolic set");

  CrossMarkedDiagram d;
  d.type = type_string(rs.components());
  int r = (int)chamber.simples.size();
  for (int k = 0; k < r; ++k) {
    int s = chamber.simples[k];
    DiagNode node;
    node.root = rs.root(s);
    switch (pair.inv.kind(rs, s)) {
      case RootKind::Real: node.paint = Paint::Real; break;
      case RootKind::Imaginary: node.paint = Paint::Imaginary; break;
      case RootKind::Complex:
        node.paint = chamber.positive(pair.inv.image(s)) ? Paint::ComplexPos : Paint::ComplexNeg;
        break;
    }
    node.cross = pair.q.nil_part().test(s);
    node.noncompact = noncompact && (size_t)k < noncompact->size() && (*noncompact)[k];
    if (node.noncompact && node.paint != Paint::Imaginary)
      fail(ErrorKind::ValidationError, "noncompact mark on a non-imaginary node");
    d.nodes.push_back(std::move(node));
  }
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      int sa = chamber.simples[a], sb = chamber.simples[b];
      int cab = rs.cartan(sa, sb), cba = rs.cartan(sb, sa);
      int mult = cab * cba;
      if (!mult) continue;
      int arrow = -1;
      if (mult > 1) arrow = rs.pair_dot(sa, sa) < rs.pair_dot(sb, sb) ? a : b;
      d.edges.push_back({a, b, mult, arrow});
    }
  // conjugation arrows: certified pairs of complex nodes whose conjugates
  // agree with +-(the other node) modulo the span of the remaining basis
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      int sa = chamber.simples[a], sb = chamber.simples[b];
      if (pair.inv.kind(rs, sa) != RootKind::Complex ||
          pair.inv.kind(rs, sb) != RootKind::Complex)
        continue;
      const auto& ca = chamber.coeff[pair.inv.image(sa)];
      const auto& cb = chamber.coeff[pair.inv.image(sb)];
      bool fwd = ca[a] == 0 && (ca[b] == 1 || ca[b] == -1);
      bool bwd = cb[b] == 0 && (cb[a] == 1 || cb[a] == -1);
      if (fwd && bwd) d.conj_arrows.emplace_back(a, b);
    }
  return d;
}

namespace {

Vec parse_root_expr(const std::string& in, int dim) {
  std::string s;
  for (char c : in)
    if (!std::isspace((unsigned char)c)) s += c;
  bool half = false;
  if (s.size() > 2 && s.substr(s.size() - 2) == "/2") {
    half = true;
    s = s.substr(0, s.size() - 2);
  }
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  Vec v(dim, 0);
  size_t i = 0;
  if (s.empty()) fail(ErrorKind::SyntaxError, "empty root expression");
  while (i < s.size()) {
    long long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    }
    long long coef = 1;
    size_t j = i;
    while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
    if (j > i) {
      coef = std::stoll(s.substr(i, j - i));
      i = j;
    }
    if (i >= s.size() || s[i] != 'e')
      fail(ErrorKind::SyntaxError, "expected e<i> in root expression '" + in + "'");
    ++i;
    j = i;
    while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
    if (j == i) fail(ErrorKind::SyntaxError, "missing index in root expression '" + in + "'");
    int idx = std::stoi(s.substr(i, j - i)) - 1;
    i = j;
    if (idx < 0 || idx >= dim)
      fail(ErrorKind::SyntaxError, "coordinate out of range in '" + in + "'");
    v[idx] += sign * coef * (half ? 1 : 2);
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    out.push_back(a == std::string::npos ? "" : item.substr(a, b - a + 1));
  }
  return out;
}

Chamber chamber_from_basis(const RootSystem& rs, const std::vector<Vec>& basis) {
  int r = rs.rank();
  if ((int)basis.size() != r)
    fail(ErrorKind::ValidationError, "basis size does not match the rank");
  std::vector<int> ids;
  for (auto& v : basis) ids.push_back(rs.require_id(v, "basis entry"));
  // weight vector with pairing 1 against each claimed simple root:
  // v = sum c_i b_i with Gram c = 1
  std::vector<std::vector<Frac>> g(r, std::vector<Frac>(r));
  std::vector<Frac> one(r, Frac(1));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g[i][j] = Frac(rs.pair_dot(ids[i], ids[j]));
  std::vector<Frac> c;
  if (!solve_exact(g, one, c))
    fail(ErrorKind::ValidationError, "claimed basis is degenerate");
  long long lcm = 1;
  for (auto& f : c) lcm = std::lcm(lcm, f.d);
  Vec v(rs.ambient_dim(), 0);
  for (int i = 0; i < r; ++i) {
    long long w = c[i].n * (lcm / c[i].d);
    for (int k = 0; k < rs.ambient_dim(); ++k) v[k] += w * rs.root(ids[i])[k];
  }
  Chamber ch;
  try {
    ch = rs.chamber_from_regular(v);
  } catch (const Error&) {
    fail(ErrorKind::ValidationError, "claimed basis is not a simple system");
  }
  std::vector<int> sorted_claim = ids, sorted_got = ch.simples;
  std::sort(sorted_claim.begin(), sorted_claim.end());
  std::sort(sorted_got.begin(), sorted_got.end());
  if (sorted_claim != sorted_got)
    fail(ErrorKind::ValidationError, "claimed basis is not the simple system of its chamber");
  return ch;
}

struct PaintTok {
  Paint paint;
  bool noncompact;
};

PaintTok parse_paint(const std::string& t) {
  if (t == "o") return {Paint::Real, false};
  if (t == "i") return {Paint::Imaginary, false};
  if (t == "i*") return {Paint::Imaginary, true};
  if (t == "+") return {Paint::ComplexPos, false};
  if (t == "-") return {Paint::ComplexNeg, false};
  fail(ErrorKind::SyntaxError, "unknown paint token '" + t + "' (use o, i, i*, +, -)");
}

std::string paint_token(Paint p, bool noncompact) {
  switch (p) {
    case Paint::Real: return "o";
    case Paint::Imaginary: return noncompact ? "i*" : "i";
    case Paint::ComplexPos: return "+";
    case Paint::ComplexNeg: return "-";
  }
  return "?";
}

}  // namespace

namespace {

// The emit_json schema is accepted as input by flattening it back onto the
// line grammar.
std::string json_to_grammar(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::SyntaxError, std::string("bad JSON spec: ") + e.what());
  }
  std::ostringstream os;
  if (!j.contains("type")) fail(ErrorKind::SyntaxError, "JSON spec: missing \"type\"");
  os << "type: " << j["type"].get<std::string>() << "\n";
  auto join = [](const nlohmann::json& arr, const char* sep) {
    std::string s;
    for (auto& x : arr) {
      if (!s.empty()) s += sep;
      if (x.is_string())
        s += x.get<std::string>();
      else
        s += x.dump();
    }
    return s;
  };
  if (j.contains("basis")) os << "basis: " << join(j["basis"], ", ") << "\n";
  if (j.contains("involution"))
    os << "involution: " << j["involution"].get<std::string>() << "\n";
  if (j.contains("involution_matrix")) {
    os << "matrix:";
    for (auto& row : j["involution_matrix"])
      for (auto& x : row) os << " " << x.get<long long>();
    if (j.contains("involution_den") && j["involution_den"].get<long long>() != 1)
      os << " / " << j["involution_den"].get<long long>();
    os << "\n";
  }
  if (j.contains("crosses")) os << "cross: " << join(j["crosses"], ", ") << "\n";
  if (j.contains("paint")) os << "paint: " << join(j["paint"], ", ") << "\n";
  if (j.contains("arrows")) os << "arrows: " << join(j["arrows"], ", ") << "\n";
  return os.str();
}

}  // namespace

ParsedSpec parse_spec(const std::string& text) {
  {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
      return parse_spec(json_to_grammar(text));
  }
  std::map<std::string, std::pair<int, std::string>> fields;  // key -> (line no, value)
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      fail(ErrorKind::SyntaxError,
           "line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = line.substr(a, colon - a);
    key.erase(key.find_last_not_of(" \t") + 1);
    std::string val = line.substr(colon + 1);
    size_t b = val.find_first_not_of(" \t");
    val = b == std::string::npos ? "" : val.substr(b, val.find_last_not_of(" \t\r") - b + 1);
    if (fields.count(key))
      fail(ErrorKind::SyntaxError,
           "line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    fields[key] = {lineno, val};
  }
  for (auto& [k, v] : fields)
    if (k != "type" && k != "basis" && k != "involution" && k != "matrix" && k != "cross" &&
        k != "paint" && k != "arrows")
      fail(ErrorKind::SyntaxError,
           "line " + std::to_string(v.first) + ": unknown key '" + k + "'");
  if (!fields.count("type")) fail(ErrorKind::SyntaxError, "missing 'type:' line");

  ParsedSpec spec;
  spec.rs = std::make_shared<RootSystem>(
      RootSystem::build(parse_type_string(fields.at("type").second)));
  const RootSystem& rs = *spec.rs;

  if (fields.count("basis")) {
    std::vector<Vec> basis;
    for (auto& tok : split(fields.at("basis").second, ','))
      basis.push_back(parse_root_expr(tok, rs.ambient_dim()));
    spec.chamber = chamber_from_basis(rs, basis);
  } else {
    spec.chamber = rs.canonical_chamber();
  }

  if (fields.count("involution") && fields.count("matrix"))
    fail(ErrorKind::SyntaxError, "give either 'involution:' or 'matrix:', not both");
  if (fields.count("matrix")) {
    auto toks = split(fields.at("matrix").second, ' ');
    std::vector<long long> nums;
    long long den = 1;
    bool den_next = false;
    for (auto& t : toks) {
      if (t.empty()) continue;
      if (t == "/") {
        den_next = true;
        continue;
      }
      long long v;
      try {
        v = std::stoll(t);
      } catch (...) {
        fail(ErrorKind::SyntaxError, "bad matrix entry '" + t + "'");
      }
      if (den_next) {
        den = v;
        den_next = false;
      } else {
        nums.push_back(v);
      }
    }
    int d = rs.ambient_dim();
    if ((int)nums.size() != d * d)
      fail(ErrorKind::SyntaxError, "matrix needs " + std::to_string(d * d) + " entries");
    std::vector<std::vector<long long>> m(d, std::vector<long long>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m[i][j] = nums[i * d + j];
    spec.inv = Involution::from_matrix(rs, std::move(m), den);
  } else if (fields.count("involution")) {
    spec.inv = Involution::from_clauses(rs, fields.at("involution").second);
  } else {
    std::vector<std::vector<long long>> id(rs.ambient_dim(),
                                           std::vector<long long>(rs.ambient_dim(), 0));
    for (int i = 0; i < rs.ambient_dim(); ++i) id[i][i] = 1;
    spec.inv = Involution::from_matrix(rs, std::move(id), 1);
  }

  std::vector<int> cross_nodes;
  if (fields.count("cross") && !fields.at("cross").second.empty()) {
    for (auto& t : split(fields.at("cross").second, ',')) {
      int k;
      try {
        k = std::stoi(t);
      } catch (...) {
        fail(ErrorKind::SyntaxError, "bad cross index '" + t + "'");
      }
      if (k < 1 || k > (int)spec.chamber.simples.size())
        fail(ErrorKind::SyntaxError, "cross index out of range: " + t);
      cross_nodes.push_back(k - 1);
    }
  }
  std::sort(cross_nodes.begin(), cross_nodes.end());
  cross_nodes.erase(std::unique(cross_nodes.begin(), cross_nodes.end()), cross_nodes.end());
  spec.q = ParabolicSet::from_crosses(rs, spec.chamber, cross_nodes);
  spec.noncompact.assign(spec.chamber.simples.size(), false);

  // validation-only decoration lines
  if (fields.count("paint")) {
    auto toks = split(fields.at("paint").second, ',');
    if (toks.size() != spec.chamber.simples.size())
      fail(ErrorKind::ValidationError, "paint: wrong number of tokens");
    for (size_t k = 0; k < toks.size(); ++k) {
      auto pt = parse_paint(toks[k]);
      spec.noncompact[k] = pt.noncompact;
      int s = spec.chamber.simples[k];
      Paint actual;
      switch (spec.inv.kind(rs, s)) {
        case RootKind::Real: actual = Paint::Real; break;
        case RootKind::Imaginary: actual = Paint::Imaginary; break;
        case RootKind::Complex:
          actual = spec.chamber.positive(spec.inv.image(s)) ? Paint::ComplexPos
                                                            : Paint::ComplexNeg;
          break;
      }
      if (pt.paint != actual)
        fail(ErrorKind::ValidationError,
             "paint mismatch at node " + std::to_string(k + 1) + ": declared '" + toks[k] +
                 "', involution gives '" + paint_token(actual, false) + "'");
    }
  }
  if (fields.count("arrows")) {
    std::vector<std::pair<int, int>> declared;
    if (!fields.at("arrows").second.empty())
      for (auto& t : split(fields.at("arrows").second, ',')) {
        auto dash = t.find('-');
        if (dash == std::string::npos)
          fail(ErrorKind::SyntaxError, "arrows entries look like '1-3'");
        int a = std::stoi(t.substr(0, dash)) - 1;
        int b = std::stoi(t.substr(dash + 1)) - 1;
        if (a > b) std::swap(a, b);
        declared.emplace_back(a, b);
      }
    std::sort(declared.begin(), declared.end());
    auto dg = diagram_of(spec.pair(), spec.chamber, &spec.noncompact);
    if (declared != dg.conj_arrows)
      fail(ErrorKind::ValidationError, "arrows do not match the involution's certified pairs");
  }
  return spec;
}

std::string emit_text(const ParsedSpec& spec) {
  const RootSystem& rs = *spec.rs;
  auto dg = diagram_of(spec.pair(), spec.chamber, &spec.noncompact);
  std::ostringstream os;
  os << "type: " << dg.type << "\n";
  os << "basis: ";
  for (size_t k = 0; k < spec.chamber.simples.size(); ++k) {
    if (k) os << ", ";
    os << root_name(rs, spec.chamber.simples[k]);
  }
  os << "\n";
  Involution withm = spec.inv.with_matrix(rs);
  if (auto sp = withm.signed_permutation()) {
    os << "involution:";
    bool first = true;
    for (size_t i = 0; i < sp->size(); ++i) {
      auto [row, sign] = (*sp)[i];
      if (row == (int)i && sign == 1) continue;  // fixed coordinates are implied
      os << (first ? " " : ", ") << "e" << i + 1 << "->" << (sign < 0 ? "-" : "") << "e"
         << row + 1;
      first = false;
    }
    if (first) os << " e1->e1";  // the identity involution still needs a clause
    os << "\n";
  } else {
    os << "matrix:";
    for (auto& rowv : withm.matrix())
      for (long long x : rowv) os << " " << x;
    if (withm.matrix_den() != 1) os << " / " << withm.matrix_den();
    os << "\n";
  }
  os << "cross:";
  bool first = true;
  for (size_t k = 0; k < dg.nodes.size(); ++k)
    if (dg.nodes[k].cross) {
      os << (first ? " " : ", ") << k + 1;
      first = false;
    }
  os << "\n";
  os << "paint: ";
  for (size_t k = 0; k < dg.nodes.size(); ++k) {
    if (k) os << ", ";
    os << paint_token(dg.nodes[k].paint, dg.nodes[k].noncompact);
  }
  os << "\n";
  os << "arrows:";
  first = true;
  for (auto& [a, b] : dg.conj_arrows) {
    os << (first ? " " : ", ") << a + 1 << "-" << b + 1;
    first = false;
  }
  os << "\n";
  return os.str();
}

std::string emit_dot(const ParsedSpec& spec) {
  auto dg = diagram_of(spec.pair(), spec.chamber, &spec.noncompact);
  std::ostringstream os;
  os << "digraph \"" << dg.type << "\" {\n";
  os << "  rankdir=LR;\n  node [shape=circle, fixedsize=true, width=0.35];\n";
  for (size_t k = 0; k < dg.nodes.size(); ++k) {
    const auto& n = dg.nodes[k];
    os << "  n" << k + 1 << " [label=\"" << vec_name(n.root) << "\", paint=\"";
    switch (n.paint) {
      case Paint::Real: os << "real\", style=solid"; break;
      case Paint::Imaginary:
        os << (n.noncompact ? "noncompact" : "imaginary") << "\", style=filled, fillcolor=black";
        break;
      case Paint::ComplexPos: os << "complex+\", style=filled, fillcolor=lightgray"; break;
      case Paint::ComplexNeg: os << "complex-\", style=\"filled,dashed\", fillcolor=lightgray"; break;
    }
    if (n.cross) os << ", xlabel=\"x\"";
    os << "];\n";
  }
  for (auto& e : dg.edges) {
    os << "  n" << e.a + 1 << " -> n" << e.b + 1 << " [";
    if (e.multiplicity == 1)
      os << "dir=none";
    else
      os << "label=\"" << e.multiplicity << "\", dir="
         << (e.arrow_to == e.b ? "forward" : "back");
    os << "];\n";
  }
  for (auto& [a, b] : dg.conj_arrows)
    os << "  n" << a + 1 << " -> n" << b + 1
       << " [dir=both, style=dashed, constraint=false, conj=true];\n";
  os << "}\n";
  return os.str();
}

std::string emit_json(const ParsedSpec& spec) {
  const RootSystem& rs = *spec.rs;
  auto dg = diagram_of(spec.pair(), spec.chamber, &spec.noncompact);
  nlohmann::ordered_json j;
  j["type"] = dg.type;
  std::vector<int> ranks;
  for (auto& c : rs.components()) ranks.push_back(c.rank);
  j["ranks"] = ranks;
  j["basis"] = nlohmann::ordered_json::array();
  for (size_t k = 0; k < spec.chamber.simples.size(); ++k)
    j["basis"].push_back(root_name(rs, spec.chamber.simples[k]));
  Involution withm = spec.inv.with_matrix(rs);
  if (auto sp = withm.signed_permutation()) {
    std::string clauses;
    for (size_t i = 0; i < sp->size(); ++i) {
      auto [row, sign] = (*sp)[i];
      if (row == (int)i && sign == 1) continue;
      if (!clauses.empty()) clauses += ", ";
      clauses += "e" + std::to_string(i + 1) + "->" + (sign < 0 ? "-" : "") + "e" +
                 std::to_string(row + 1);
    }
    j["involution"] = clauses.empty() ? "e1->e1" : clauses;
  } else {
    j["involution_matrix"] = withm.matrix();
    j["involution_den"] = withm.matrix_den();
  }
  std::vector<int> cr;
  for (size_t k = 0; k < dg.nodes.size(); ++k)
    if (dg.nodes[k].cross) cr.push_back((int)k + 1);
  j["crosses"] = cr;
  std::vector<std::string> paints;
  for (auto& n : dg.nodes) paints.push_back(paint_token(n.paint, n.noncompact));
  j["paint"] = paints;
  j["arrows"] = nlohmann::ordered_json::array();
  for (auto& [a, b] : dg.conj_arrows)
    j["arrows"].push_back(std::to_string(a + 1) + "-" + std::to_string(b + 1));
  j["bonds"] = nlohmann::ordered_json::array();
  for (auto& e : dg.edges) {
    nlohmann::ordered_json bond;
    bond["nodes"] = {e.a + 1, e.b + 1};
    bond["multiplicity"] = e.multiplicity;
    if (e.arrow_to >= 0) bond["arrow_to"] = e.arrow_to + 1;
    j["bonds"].push_back(bond);
  }
  return j.dump(2) + "\n";
}

bool semantically_equal(const ParsedSpec& a, const ParsedSpec& b) {
  if (type_string(a.rs->components()) != type_string(b.rs->components())) return false;
  // identical type strings give identical deterministic root systems, so ids
  // are comparable across the two instances
  if (a.chamber.positives != b.chamber.positives) return false;
  if (a.inv.images() != b.inv.images()) return false;
  if (a.q.members() != b.q.members()) return false;
  return a.noncompact == b.noncompact;
}

}  // namespace parcr
