#include "parcr/orders.hpp"

#include <algorithm>
#include <deque>

namespace parcr {

namespace {

// Shortest path in the digraph node -> node + step (both roots), from alpha
// to the sink set, with intermediate nodes restricted to allowed.
OrderValue escape_bfs(const RootSystem& rs, int alpha, const RootSet& steps,
                      const RootSet& allowed, const RootSet& sink,
                      std::vector<int>* witness) {
  int n = rs.num_roots();
  std::vector<int> dist(n, -1), par(n, -1), par_step(n, -1);
  std::deque<int> bfs{alpha};
  dist[alpha] = 0;
  auto step_ids = steps.ids();
  while (!bfs.empty()) {
    int cur = bfs.front();
    bfs.pop_front();
    for (int b : step_ids) {
      auto t = rs.sum(cur, b);
      if (!t || dist[*t] >= 0) continue;
      dist[*t] = dist[cur] + 1;
      par[*t] = cur;
      par_step[*t] = b;
      if (sink.test(*t)) {
        if (witness) {
          witness->clear();
          for (int x = *t; par[x] >= 0; x = par[x]) witness->push_back(par_step[x]);
          std::reverse(witness->begin(), witness->end());
        }
        return OrderValue::finite(dist[*t]);
        // BFS layers are monotone, the first sink hit is optimal
      }
      if (allowed.test(*t)) bfs.push_back(*t);
    }
  }
  return OrderValue::infinite();
}

}  // namespace

OrderValue levi_order_root(const CrPair& pair, int alpha, std::vector<int>* witness) {
  const RootSystem& rs = *pair.rs;
  RootSet sq = pair.inv.image_set(pair.q.members());
  RootSet sqc = pair.inv.image_set(pair.q.complement_part());
  RootSet dom = pair.q.members() & sqc;
  if (!dom.test(alpha))
    fail(ErrorKind::NotInScope, "levi_order_root: root not in Q n s(Q^c)");
  RootSet steps = pair.q.complement_part() & sq;
  RootSet sink = pair.q.complement_part() & sqc;
  OrderValue v = escape_bfs(rs, alpha, steps, dom, sink, witness);
  // reductive-part roots have order 1 or infinity
  if (pair.q.levi_part().test(alpha))
    PARCR_CHECK(!v.is_finite() || v.v == 1, "Q^r root with Levi order > 1");
  return v;
}

LeviOrderReport levi_order(const CrPair& pair) {
  LeviOrderReport rep;
  RootSet sq = pair.inv.image_set(pair.q.members());
  RootSet sqc = pair.inv.image_set(pair.q.complement_part());
  RootSet dom = pair.q.members() & sqc;
  rep.isotropy = (pair.q.members() & sq).ids();
  if (dom.empty()) {
    rep.vacuous = true;
    rep.sup = OrderValue::finite(0);
    return rep;
  }
  OrderValue sup = OrderValue::finite(0);
  for (int a : dom.ids()) {
    OrderValue v = levi_order_root(pair, a);
    rep.by_root[a] = v;
    if (!v.is_finite()) rep.kernel_infinite.push_back(a);
    if (sup < v) sup = v;
  }
  rep.sup = sup;
  // a finite supremum is the same thing as Levi-nondegeneracy
  Chamber cv = find_fit_chamber(pair, FitKind::V);
  bool nondeg = true;
  for (int k : crosses(pair.q, cv))
    if (!cv.positive(pair.inv.image(cv.simples[k]))) nondeg = false;
  PARCR_CHECK(rep.sup.is_finite() == nondeg, "finite Levi order vs nondegeneracy mismatch");
  return rep;
}

OrderValue h_index(const CrPair& pair, int alpha) {
  const RootSystem& rs = *pair.rs;
  RootSet un = pair.q.members() | pair.inv.image_set(pair.q.members());
  if (un.test(alpha)) return OrderValue::finite(1);
  // multi-source BFS from Q u s(Q)
  int n = rs.num_roots();
  std::vector<int> dist(n, -1);
  std::deque<int> bfs;
  for (int i : un.ids()) {
    dist[i] = 1;
    bfs.push_back(i);
  }
  auto steps = un.ids();
  while (!bfs.empty()) {
    int cur = bfs.front();
    bfs.pop_front();
    for (int b : steps) {
      auto t = rs.sum(cur, b);
      if (!t || dist[*t] >= 0) continue;
      dist[*t] = dist[cur] + 1;
      bfs.push_back(*t);
    }
  }
  return dist[alpha] < 0 ? OrderValue::infinite() : OrderValue::finite(dist[alpha]);
}

DepthReport depth_on_chamber(const CrPair& pair, const Chamber& c) {
  const RootSystem& rs = *pair.rs;
  DepthReport rep;
  rep.by_root.resize(rs.num_roots());
  // one multi-source BFS serves every root
  RootSet un = pair.q.members() | pair.inv.image_set(pair.q.members());
  int n = rs.num_roots();
  std::vector<int> dist(n, -1);
  std::deque<int> bfs;
  for (int i : un.ids()) {
    dist[i] = 1;
    bfs.push_back(i);
  }
  auto steps = un.ids();
  while (!bfs.empty()) {
    int cur = bfs.front();
    bfs.pop_front();
    for (int b : steps) {
      auto t = rs.sum(cur, b);
      if (!t || dist[*t] >= 0) continue;
      dist[*t] = dist[cur] + 1;
      bfs.push_back(*t);
    }
  }
  OrderValue sup = OrderValue::finite(0);
  for (int i = 0; i < n; ++i) {
    rep.by_root[i] = dist[i] < 0 ? OrderValue::infinite() : OrderValue::finite(dist[i]);
    if (sup < rep.by_root[i]) sup = rep.by_root[i];
  }
  rep.depth = sup;
  for (auto& [hi, lo] : rs.extreme_roots(c)) {
    (void)hi;
    rep.component_gamma.push_back(rep.by_root[lo]);
  }
  // every index finite exactly when Q u s(Q) generates the root system
  PARCR_CHECK(rep.depth.is_finite() == (additive_closure(rs, un).count() == n),
              "depth finiteness vs generation mismatch");
  return rep;
}

DepthReport depth(const CrPair& pair) {
  return depth_on_chamber(pair, admissible_chamber(*pair.rs, pair.q));
}

// Escape from Q u s(Q) by bracket chains.  Besides root-sum moves the chain
// may land in the Cartan part (adding the opposite of the current root, when
// that opposite lies in Q u s(Q)) and bounce back out into any contact
// direction; only root-sum moves can exit.  The Cartan state is a single
// extra BFS node.
OrderValue contact_order_root(const CrPair& pair, int alpha, std::vector<int>* witness) {
  const RootSystem& rs = *pair.rs;
  RootSet sq = pair.inv.image_set(pair.q.members());
  RootSet un = pair.q.members() | sq;
  RootSet iso = pair.q.members() & sq;
  if (!un.test(alpha) || iso.test(alpha))
    fail(ErrorKind::NotInScope, "contact_order_root: root not in (Q u s(Q)) \\ (Q n s(Q))");
  RootSet sink = un.complement();

  int n = rs.num_roots();
  const int hnode = n;  // the Cartan state
  std::vector<int> dist(n + 1, -1), par(n + 1, -2), par_step(n + 1, -1);
  std::deque<int> bfs{alpha};
  dist[alpha] = 0;
  par[alpha] = -1;
  auto steps = un.ids();
  auto record = [&](int hit) {
    if (!witness) return;
    witness->clear();
    for (int x = hit; par[x] != -1; x = par[x]) witness->push_back(par_step[x]);
    std::reverse(witness->begin(), witness->end());
  };
  while (!bfs.empty()) {
    int cur = bfs.front();
    bfs.pop_front();
    if (cur == hnode) {
      for (int b : steps)
        if (dist[b] < 0) {
          dist[b] = dist[cur] + 1;
          par[b] = cur;
          par_step[b] = b;
          bfs.push_back(b);
        }
      continue;
    }
    for (int b : steps) {
      auto t = rs.sum(cur, b);
      if (t) {
        if (dist[*t] >= 0) continue;
        dist[*t] = dist[cur] + 1;
        par[*t] = cur;
        par_step[*t] = b;
        if (sink.test(*t)) {
          record(*t);
          return OrderValue::finite(dist[*t]);
        }
        bfs.push_back(*t);
      } else if (b == rs.negative(cur) && dist[hnode] < 0) {
        dist[hnode] = dist[cur] + 1;
        par[hnode] = cur;
        par_step[hnode] = b;
        bfs.push_back(hnode);
      }
    }
  }
  return OrderValue::infinite();
}

ContactOrderReport contact_order(const CrPair& pair) {
  ContactOrderReport rep;
  RootSet sq = pair.inv.image_set(pair.q.members());
  RootSet dom = (pair.q.members() | sq) - (pair.q.members() & sq);
  if (dom.empty()) {
    rep.vacuous = true;
    return rep;
  }
  OrderValue sup = OrderValue::finite(0);
  for (int a : dom.ids()) {
    OrderValue v = contact_order_root(pair, a);
    rep.by_root[a] = v;
    if (sup < v) sup = v;
  }
  rep.sup = sup;
  // never larger than the Levi order, root by root on the Levi domain
  RootSet ldom = pair.q.members() & pair.inv.image_set(pair.q.complement_part());
  for (int a : ldom.ids())
    PARCR_CHECK(rep.by_root.at(a) <= levi_order_root(pair, a),
                "contact order exceeded the Levi order");
  return rep;
}

namespace {

// DFS over multisets from Rad^add(alpha), non-decreasing candidate index;
// every subset sum must avoid Rad u {0} (for sizes >= 2) and every
// alpha-shifted subset sum must be a root different from alpha.
struct MuSearch {
  const RootSystem& rs;
  int alpha;
  std::vector<int> cands;
  std::vector<Vec> subset_sums;  // sums over the current multiset's subsets
  int best = 0;
  int depth_cap;

  explicit MuSearch(const RootSystem& r, int a, int cap) : rs(r), alpha(a), depth_cap(cap) {
    for (int b = 0; b < rs.num_roots(); ++b)
      if (rs.sum(alpha, b)) cands.push_back(b);
    subset_sums.push_back(Vec(rs.ambient_dim(), 0));  // empty subset
  }

  bool can_add(int b) {
    const Vec& vb = rs.root(b);
    for (const Vec& t : subset_sums) {
      Vec s = add(t, vb);
      bool singleton = is_zero(t);
      if (!singleton) {
        if (is_zero(s) || rs.id_of(s)) return false;  // subset of size >= 2
      }
      Vec shifted = add(rs.root(alpha), s);
      if (is_zero(shifted)) return false;
      auto id = rs.id_of(shifted);
      if (!id || *id == alpha) return false;
    }
    return true;
  }

  void push(int b) {
    size_t m = subset_sums.size();
    for (size_t i = 0; i < m; ++i) subset_sums.push_back(add(subset_sums[i], rs.root(b)));
  }
  void pop() { subset_sums.resize(subset_sums.size() / 2); }

  void run(int from, int len) {
    if (len > best) best = len;
    if (len >= depth_cap) return;
    for (size_t ci = from; ci < cands.size(); ++ci) {
      int b = cands[ci];
      if (!can_add(b)) continue;
      push(b);
      run((int)ci, len + 1);  // multisets: repetitions allowed
      pop();
    }
  }
};

}  // namespace

OrderValue mu_index(const RootSystem& rs, int alpha) {
  // the index never exceeds 4 on the irreducible types; cap at 6 so a bug
  // would surface as a table mismatch rather than an endless search
  MuSearch search(rs, alpha, 6);
  search.run(0, 0);
  PARCR_CHECK(search.best <= 5, "mu index exceeded the universal bound");
  return OrderValue::finite(search.best);
}

}  // namespace parcr
