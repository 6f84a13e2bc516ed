#include "parcr/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace parcr {

std::vector<SimpleType> parse_type_string(const std::string& s) {
  std::vector<SimpleType> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '+')) ++i;
    if (i >= s.size()) break;
    char letter = (char)std::toupper((unsigned char)s[i]);
    if (letter < 'A' || letter > 'G' || letter == 'H')
      fail(ErrorKind::SyntaxError, "bad type letter in '" + s + "'");
    ++i;
    size_t j = i;
    while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
    if (j == i) fail(ErrorKind::SyntaxError, "missing rank in type '" + s + "'");
    out.push_back({letter, std::stoi(s.substr(i, j - i))});
    i = j;
  }
  if (out.empty()) fail(ErrorKind::SyntaxError, "empty type string");
  return out;
}

std::string type_string(const std::vector<SimpleType>& comps) {
  std::string s;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (i) s += "+";
    s += comps[i].letter;
    s += std::to_string(comps[i].rank);
  }
  return s;
}

namespace {

void check_rank(char t, int l) {
  bool ok = false;
  switch (t) {
    case 'A': ok = l >= 1; break;
    case 'B': ok = l >= 2; break;
    case 'C': ok = l >= 3; break;
    case 'D': ok = l >= 4; break;
    case 'E': ok = l >= 6 && l <= 8; break;
    case 'F': ok = l == 4; break;
    case 'G': ok = l == 2; break;
    default: ok = false;
  }
  if (!ok)
    fail(ErrorKind::InvalidRank,
         std::string("invalid rank ") + std::to_string(l) + " for type " + t);
}

int block_dim(char t, int l) {
  switch (t) {
    case 'A': return l + 1;
    case 'G': return 3;
    case 'E': return 8;
    default: return l;
  }
}

// Doubled coordinates within one block.
void gen_block_roots(char t, int l, int dim, std::vector<Vec>& out) {
  auto unit = [&](int i, Coord c) {
    Vec v(dim, 0);
    v[i] = c;
    return v;
  };
  auto pair2 = [&](int i, int j, Coord ci, Coord cj) {
    Vec v(dim, 0);
    v[i] = ci;
    v[j] = cj;
    return v;
  };
  switch (t) {
    case 'A':
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (i != j) out.push_back(pair2(i, j, 2, -2));
      break;
    case 'B':
      for (int i = 0; i < l; ++i) {
        out.push_back(unit(i, 2));
        out.push_back(unit(i, -2));
      }
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
          for (Coord si : {2, -2})
            for (Coord sj : {2, -2}) out.push_back(pair2(i, j, si, sj));
      break;
    case 'C':
      for (int i = 0; i < l; ++i) {
        out.push_back(unit(i, 4));
        out.push_back(unit(i, -4));
      }
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
          for (Coord si : {2, -2})
            for (Coord sj : {2, -2}) out.push_back(pair2(i, j, si, sj));
      break;
    case 'D':
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
          for (Coord si : {2, -2})
            for (Coord sj : {2, -2}) out.push_back(pair2(i, j, si, sj));
      break;
    case 'G':
      // {±(e_i−e_j)} ∪ {±(2e_i−e_j−e_h)} inside the plane x+y+z = 0.
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) out.push_back(pair2(i, j, 2, -2));
      for (int i = 0; i < 3; ++i)
        for (Coord s : {1, -1}) {
          Vec v(dim, 0);
          for (int k = 0; k < 3; ++k) v[k] = (k == i) ? 4 * s : -2 * s;
          out.push_back(v);
        }
      break;
    case 'F':
      for (int i = 0; i < 4; ++i) {
        out.push_back(unit(i, 2));
        out.push_back(unit(i, -2));
      }
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (Coord si : {2, -2})
            for (Coord sj : {2, -2}) out.push_back(pair2(i, j, si, sj));
      for (int m = 0; m < 16; ++m) {
        Vec v(dim, 0);
        for (int k = 0; k < 4; ++k) v[k] = (m >> k) & 1 ? 1 : -1;
        out.push_back(v);
      }
      break;
    case 'E': {
      // Realized inside the E8 coordinate model; half-roots are the (±1)^8
      // vectors with an odd number of + signs.
      auto add_int_pairs = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i)
          for (int j = i + 1; j < hi; ++j)
            for (Coord si : {2, -2})
              for (Coord sj : {2, -2}) out.push_back(pair2(i, j, si, sj));
      };
      if (l == 8) {
        add_int_pairs(0, 8);
        for (int m = 0; m < 256; ++m) {
          if (__builtin_popcount(m) % 2 == 0) continue;
          Vec v(dim, 0);
          for (int k = 0; k < 8; ++k) v[k] = (m >> k) & 1 ? 1 : -1;
          out.push_back(v);
        }
      } else if (l == 7) {
        for (int i = 0; i < 8; ++i)
          for (int j = 0; j < 8; ++j)
            if (i != j) out.push_back(pair2(i, j, 2, -2));
        for (int m = 0; m < 256; ++m) {
          if (__builtin_popcount(m) != 4) continue;
          Vec v(dim, 0);
          for (int k = 0; k < 8; ++k) v[k] = (m >> k) & 1 ? 1 : -1;
          out.push_back(v);
        }
      } else {  // E6: v7 = -v8, exactly three + signs among v1..v6
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j)
            if (i != j) out.push_back(pair2(i, j, 2, -2));
        out.push_back(pair2(6, 7, 2, -2));
        out.push_back(pair2(6, 7, -2, 2));
        for (int m = 0; m < 64; ++m) {
          if (__builtin_popcount(m) != 3) continue;
          for (int s7 : {1, -1}) {
            Vec v(dim, 0);
            for (int k = 0; k < 6; ++k) v[k] = (m >> k) & 1 ? 1 : -1;
            v[6] = s7;
            v[7] = -s7;
            out.push_back(v);
          }
        }
      }
      break;
    }
    default: fail(ErrorKind::InvalidRank, "unknown type");
  }
}

Vec block_regular_vector(char t, int l, int dim) {
  const Coord N = 9;
  Vec v(dim, 0);
  auto pw = [&](int k) {
    Coord p = 1;
    for (int i = 0; i < k; ++i) p *= N;
    return p;
  };
  switch (t) {
    case 'A':
    case 'B':
    case 'C':
    case 'D':
      for (int i = 0; i < dim; ++i) v[i] = pw(dim - 1 - i);
      break;
    case 'G':
      v = {0, 5, 3};
      break;
    case 'F':
      v = {1, pw(1), pw(2), pw(3)};
      break;
    case 'E':
      if (l == 6) {
        for (int i = 0; i < 6; ++i) v[i] = pw(5 - i);
        v[6] = pw(7);
        v[7] = 0;
      } else if (l == 7) {
        for (int i = 0; i < 7; ++i) v[i] = pw(6 - i);
        v[7] = -pw(7);
      } else {
        for (int i = 0; i < 7; ++i) v[i] = pw(i);
        v[7] = pw(8);
      }
      break;
    default: fail(ErrorKind::InvalidRank, "unknown type");
  }
  return v;
}

int expected_count(char t, int l) {
  switch (t) {
    case 'A': return l * (l + 1);
    case 'B':
    case 'C': return 2 * l * l;
    case 'D': return 2 * l * (l - 1);
    case 'G': return 12;
    case 'F': return 48;
    case 'E': return l == 6 ? 72 : (l == 7 ? 126 : 240);
  }
  return -1;
}

}  // namespace

RootSystem RootSystem::build(const std::vector<SimpleType>& comps) {
  RootSystem rs;
  rs.comps_ = comps;
  for (auto& c : comps) check_rank(c.letter, c.rank);
  std::vector<int> offsets;
  for (auto& c : comps) {
    offsets.push_back(rs.ambient_);
    rs.ambient_ += block_dim(c.letter, c.rank);
    rs.rank_ += c.rank;
  }
  PARCR_CHECK(rs.rank_ <= 64, "total rank above 64 is not supported");

  std::vector<std::pair<Vec, int>> tagged;  // (root, component)
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    std::vector<Vec> block;
    gen_block_roots(comps[ci].letter, comps[ci].rank, block_dim(comps[ci].letter, comps[ci].rank), block);
    PARCR_CHECK((int)block.size() == expected_count(comps[ci].letter, comps[ci].rank),
                "root count mismatch for component");
    for (auto& b : block) {
      Vec v(rs.ambient_, 0);
      for (size_t k = 0; k < b.size(); ++k) v[offsets[ci] + k] = b[k];
      tagged.emplace_back(std::move(v), (int)ci);
    }
  }
  std::sort(tagged.begin(), tagged.end());
  for (size_t i = 1; i < tagged.size(); ++i)
    PARCR_CHECK(tagged[i].first != tagged[i - 1].first, "duplicate root generated");
  for (auto& [v, ci] : tagged) {
    rs.roots_.push_back(v);
    rs.comp_of_.push_back(ci);
  }
  rs.finish_build();

  // Canonical chamber: per-block graded regular vectors.
  Vec v0(rs.ambient_, 0);
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    Vec bv = block_regular_vector(comps[ci].letter, comps[ci].rank,
                                  block_dim(comps[ci].letter, comps[ci].rank));
    for (size_t k = 0; k < bv.size(); ++k) v0[offsets[ci] + k] = bv[k];
  }
  rs.canonical_ = rs.chamber_from_regular(v0);
  return rs;
}

void RootSystem::finish_build() {
  int n = num_roots();
  neg_.resize(n);
  for (int i = 0; i < n; ++i) {
    auto ni = id_of(neg(roots_[i]));
    PARCR_CHECK(ni.has_value(), "root set not closed under negation");
    neg_[i] = *ni;
  }
  sum_table_.assign((size_t)n * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec s = add(roots_[i], roots_[j]);
      if (is_zero(s)) continue;
      if (auto id = id_of(s)) sum_table_[(size_t)i * n + j] = (int16_t)*id;
    }
}

std::optional<int> RootSystem::id_of(const Vec& v) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), v);
  if (it == roots_.end() || *it != v) return std::nullopt;
  return (int)(it - roots_.begin());
}

int RootSystem::require_id(const Vec& v, const char* what) const {
  auto id = id_of(v);
  if (!id) fail(ErrorKind::ValidationError, std::string(what) + ": not a root");
  return *id;
}

int RootSystem::cartan(int a, int b) const {
  Coord num = 2 * pair_dot(a, b);
  Coord den = pair_dot(b, b);
  PARCR_CHECK(den > 0 && num % den == 0, "cartan pairing not integral");
  return (int)(num / den);
}

int RootSystem::reflect(int beta, int xi) const {
  Vec v = roots_[xi];
  int c = cartan(xi, beta);
  const Vec& b = roots_[beta];
  for (size_t k = 0; k < v.size(); ++k) v[k] -= c * b[k];
  auto id = id_of(v);
  PARCR_CHECK(id.has_value(), "reflection left the root system");
  return *id;
}

RootPerm RootSystem::reflection_perm(int beta) const {
  RootPerm p(num_roots());
  for (int i = 0; i < num_roots(); ++i) p[i] = reflect(beta, i);
  return p;
}

RootPerm RootSystem::compose(const RootPerm& f, const RootPerm& g) const {
  RootPerm r(g.size());
  for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

RootSet RootSystem::full_set() const {
  RootSet s(num_roots());
  for (int i = 0; i < num_roots(); ++i) s.set(i);
  return s;
}

Chamber RootSystem::chamber_from_regular(const Vec& v) const {
  PARCR_CHECK((int)v.size() == ambient_, "regular vector: wrong dimension");
  RootSet pos(num_roots());
  for (int i = 0; i < num_roots(); ++i) {
    Coord d = dot(roots_[i], v);
    if (d == 0)
      fail(ErrorKind::NotRegular, "vector is orthogonal to a root");
    if (d > 0) pos.set(i);
  }
  return chamber_from_positives(pos);
}

Chamber RootSystem::chamber_from_positives(const RootSet& pos) const {
  int n = num_roots();
  PARCR_CHECK(pos.universe() == n, "positive set: wrong universe");
  PARCR_CHECK(2 * pos.count() == n, "positive set: wrong cardinality");
  for (int i = 0; i < n; ++i)
    PARCR_CHECK(pos.test(i) != pos.test(neg_[i]), "positive set meets its negative");

  Chamber c;
  c.positives = pos;
  auto posv = pos.ids();

  // Simple roots: positives that are not sums of two positives.
  std::vector<char> is_sum(n, 0);
  for (size_t x = 0; x < posv.size(); ++x)
    for (size_t y = x; y < posv.size(); ++y) {
      if (auto s = sum(posv[x], posv[y])) {
        PARCR_CHECK(pos.test(*s), "positive set not closed under addition");
        is_sum[*s] = 1;
      }
    }
  std::vector<int> simple_ids;
  for (int p : posv)
    if (!is_sum[p]) simple_ids.push_back(p);
  PARCR_CHECK((int)simple_ids.size() == rank_, "simple root count != rank");

  c.simples = order_simples(simple_ids);

  // Regular vector: twice the sum of the positive roots.
  c.regular_vector.assign(ambient_, 0);
  for (int p : posv)
    for (int k = 0; k < ambient_; ++k) c.regular_vector[k] += roots_[p][k];
  for (int i = 0; i < n; ++i) {
    Coord d = dot(roots_[i], c.regular_vector);
    PARCR_CHECK((d > 0) == pos.test(i), "chamber regular vector inconsistent");
  }

  // Integer expansions over the basis, by peeling off simple roots.
  c.coeff.assign(n, {});
  std::vector<int> node(n, -1);
  for (int k = 0; k < rank_; ++k) node[c.simples[k]] = k;
  // positives in increasing order of pairing with the regular vector ("height"
  // in the chamber order); each non-simple positive is simple + smaller positive.
  std::vector<int> order = posv;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    Coord da = dot(roots_[a], c.regular_vector), db = dot(roots_[b], c.regular_vector);
    if (da != db) return da < db;
    return a < b;
  });
  for (int p : order) {
    if (node[p] >= 0) {
      std::vector<int> e(rank_, 0);
      e[node[p]] = 1;
      c.coeff[p] = e;
      continue;
    }
    bool done = false;
    for (int k = 0; k < rank_ && !done; ++k) {
      int s = c.simples[k];
      if (auto rest = sum(p, neg_[s])) {
        if (pos.test(*rest) && !c.coeff[*rest].empty()) {
          c.coeff[p] = c.coeff[*rest];
          c.coeff[p][k] += 1;
          done = true;
        }
      }
    }
    PARCR_CHECK(done, "positive root has no simple summand");
  }
  for (int p : posv) {
    std::vector<int> m = c.coeff[p];
    for (int& x : m) x = -x;
    c.coeff[neg_[p]] = m;
  }
  c.supp.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < rank_; ++k)
      if (c.coeff[i][k]) c.supp[i] |= uint64_t(1) << k;
  return c;
}

int Chamber::node_of(int root_id) const {
  for (size_t k = 0; k < simples.size(); ++k)
    if (simples[k] == root_id) return (int)k;
  return -1;
}

std::vector<int> support(const RootSystem& rs, const Chamber& c, int root_id) {
  (void)rs;
  std::vector<int> out;
  for (size_t k = 0; k < c.simples.size(); ++k)
    if (c.supp[root_id] & (uint64_t(1) << k)) out.push_back((int)k);
  return out;
}

std::string vec_name(const Vec& doubled) {
  bool halves = false;
  for (Coord c : doubled)
    if (c % 2 != 0) halves = true;
  auto terms = [&](Coord scale) {
    std::string s;
    for (size_t i = 0; i < doubled.size(); ++i) {
      Coord c = doubled[i] / scale;
      if (!c) continue;
      if (c > 0 && !s.empty()) s += "+";
      if (c == -1)
        s += "-";
      else if (c != 1)
        s += std::to_string(c);
      s += "e" + std::to_string(i + 1);
    }
    return s.empty() ? std::string("0") : s;
  };
  if (!halves) return terms(2);
  return "(" + terms(1) + ")/2";
}

std::string root_name(const RootSystem& rs, int root_id) { return vec_name(rs.root(root_id)); }

// Deterministic serialization of a simple system: per component, walk the
// Dynkin graph.  Paths start at an end of squared length 2 (doubled dot 8),
// ties broken toward the lexicographically largest root vector; for a trifurcate
// graph the two longest arms form the spine and the leftover arms are appended
// center-outward.
std::vector<int> RootSystem::order_simples(const std::vector<int>& simple_ids) const {
  std::vector<std::vector<int>> per_comp(comps_.size());
  for (int s : simple_ids) per_comp[comp_of_[s]].push_back(s);

  auto lex_greater = [&](int a, int b) { return roots_[a] > roots_[b]; };

  std::vector<int> out;
  for (auto& S : per_comp) {
    if (S.empty()) continue;
    size_t k = S.size();
    if (k == 1) {
      out.push_back(S[0]);
      continue;
    }
    std::vector<std::vector<int>> adj(k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j)
        if (i != j && pair_dot(S[i], S[j]) != 0) adj[i].push_back((int)j);
    int center = -1;
    for (size_t i = 0; i < k; ++i) {
      PARCR_CHECK(adj[i].size() <= 3, "Dynkin graph has a degree > 3 node");
      if (adj[i].size() == 3) {
        PARCR_CHECK(center < 0, "Dynkin graph has two branch nodes");
        center = (int)i;
      }
    }
    std::vector<int> orderd;
    if (center < 0) {
      // path
      std::vector<int> ends;
      for (size_t i = 0; i < k; ++i)
        if (adj[i].size() <= 1) ends.push_back((int)i);
      PARCR_CHECK(ends.size() == 2, "path with wrong number of ends");
      std::vector<int> cands;
      for (int e : ends)
        if (pair_dot(S[e], S[e]) == 8) cands.push_back(e);
      if (cands.empty()) cands = ends;
      int start = cands[0];
      for (int e : cands)
        if (lex_greater(S[e], S[start])) start = e;
      int prev = -1, cur = start;
      while (true) {
        orderd.push_back(cur);
        int nxt = -1;
        for (int nb : adj[cur])
          if (nb != prev) nxt = nb;
        if (nxt < 0) break;
        prev = cur;
        cur = nxt;
      }
    } else {
      // three arms around the center
      std::vector<std::vector<int>> arms;
      for (int nb : adj[center]) {
        std::vector<int> arm{nb};
        int prev = center, cur = nb;
        while (true) {
          int nxt = -1;
          for (int x : adj[cur])
            if (x != prev) nxt = x;
          if (nxt < 0) break;
          arm.push_back(nxt);
          prev = cur;
          cur = nxt;
        }
        arms.push_back(arm);
      }
      PARCR_CHECK(arms.size() == 3, "branch node without three arms");
      auto leaf = [&](const std::vector<int>& arm) { return S[arm.back()]; };
      // spine arm 1: longest, tie-break lex-greatest leaf
      size_t a1 = 0;
      for (size_t i = 1; i < arms.size(); ++i) {
        if (arms[i].size() > arms[a1].size() ||
            (arms[i].size() == arms[a1].size() && leaf(arms[i]) > leaf(arms[a1])))
          a1 = i;
      }
      // spine arm 2: longest among the rest, tie-break lex-least leaf
      size_t a2 = arms.size();
      for (size_t i = 0; i < arms.size(); ++i) {
        if (i == a1) continue;
        if (a2 == arms.size() || arms[i].size() > arms[a2].size() ||
            (arms[i].size() == arms[a2].size() && leaf(arms[i]) < leaf(arms[a2])))
          a2 = i;
      }
      size_t a3 = 3 - a1 - a2;
      if (leaf(arms[a2]) > leaf(arms[a1])) std::swap(a1, a2);
      for (auto it = arms[a1].rbegin(); it != arms[a1].rend(); ++it) orderd.push_back(*it);
      orderd.push_back(center);
      for (int x : arms[a2]) orderd.push_back(x);
      for (int x : arms[a3]) orderd.push_back(x);
    }
    PARCR_CHECK(orderd.size() == k, "walk missed a node");
    for (int i : orderd) out.push_back(S[i]);
  }
  return out;
}

std::vector<std::pair<int, int>> RootSystem::extreme_roots(const Chamber& c) const {
  std::vector<std::pair<int, int>> out;
  for (int ci = 0; ci < num_components(); ++ci) {
    int cur = -1;
    for (int s : c.simples)
      if (comp_of_[s] == ci) {
        cur = s;
        break;
      }
    PARCR_CHECK(cur >= 0, "component without simple roots");
    bool moved = true;
    while (moved) {
      moved = false;
      for (int s : c.simples) {
        if (comp_of_[s] != ci) continue;
        if (auto up = sum(cur, s)) {
          cur = *up;
          moved = true;
          break;
        }
      }
    }
    out.emplace_back(cur, neg_[cur]);
  }
  return out;
}

namespace {

std::vector<RootPerm> closure(const RootSystem& rs, std::vector<RootPerm> gens,
                              size_t budget, bool* truncated) {
  int n = rs.num_roots();
  RootPerm id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<RootPerm> seen;
  seen.insert(id);
  std::vector<RootPerm> queue{id};
  bool trunc = false;
  for (size_t qi = 0; qi < queue.size() && !trunc; ++qi) {
    for (auto& g : gens) {
      RootPerm next = rs.compose(g, queue[qi]);
      if (seen.insert(next).second) {
        if (seen.size() > budget) {
          trunc = true;
          break;
        }
        queue.push_back(std::move(next));
      }
    }
  }
  if (truncated) *truncated = trunc;
  return std::vector<RootPerm>(seen.begin(), seen.end());
}

}  // namespace

std::vector<RootPerm> RootSystem::weyl_elements(size_t budget, bool* truncated) const {
  std::vector<RootPerm> gens;
  for (int s : canonical_.simples) gens.push_back(reflection_perm(s));
  return closure(*this, std::move(gens), budget, truncated);
}

std::vector<RootPerm> RootSystem::automorphism_group(size_t budget, bool* truncated) const {
  std::vector<RootPerm> gens;
  for (int s : canonical_.simples) gens.push_back(reflection_perm(s));

  // Dynkin diagram symmetries of the canonical basis: permutations of the
  // simple roots preserving all Cartan integers, lifted to root permutations
  // through the basis expansions.
  const auto& simples = canonical_.simples;
  int r = rank_;
  std::vector<int> perm(r, -1);
  std::vector<char> used(r, 0);
  std::vector<std::vector<int>> diagram_autos;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      diagram_autos.push_back(perm);
      return;
    }
    for (int img = 0; img < r; ++img) {
      if (used[img]) continue;
      bool ok = pair_dot(simples[pos], simples[pos]) == pair_dot(simples[img], simples[img]);
      for (int q = 0; q < pos && ok; ++q)
        ok = cartan(simples[pos], simples[q]) == cartan(simples[img], simples[perm[q]]) &&
             cartan(simples[q], simples[pos]) == cartan(simples[perm[q]], simples[img]);
      if (!ok) continue;
      perm[pos] = img;
      used[img] = 1;
      self(self, pos + 1);
      used[img] = 0;
      perm[pos] = -1;
    }
  };
  rec(rec, 0);
  for (auto& p : diagram_autos) {
    RootPerm rp(num_roots());
    for (int i = 0; i < num_roots(); ++i) {
      Vec v(ambient_, 0);
      for (int k = 0; k < r; ++k) {
        int ck = canonical_.coeff[i][k];
        if (!ck) continue;
        const Vec& b = roots_[simples[p[k]]];
        for (int d = 0; d < ambient_; ++d) v[d] += ck * b[d];
      }
      rp[i] = require_id(v, "diagram automorphism image");
    }
    gens.push_back(std::move(rp));
  }
  return closure(*this, std::move(gens), budget, truncated);
}

std::vector<RootPerm> RootSystem::involution_perms(size_t budget, bool* truncated) const {
  auto all = automorphism_group(budget, truncated);
  std::vector<RootPerm> out;
  for (auto& g : all) {
    bool inv = true;
    for (int i = 0; i < num_roots() && inv; ++i) inv = g[g[i]] == i;
    if (inv) out.push_back(g);
  }
  return out;
}

}  // namespace parcr
