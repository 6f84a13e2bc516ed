#include "parcr/parabolic.hpp"

#include <algorithm>
#include <set>

namespace parcr {

bool is_closed(const RootSystem& rs, const RootSet& s) {
  auto ids = s.ids();
  for (size_t x = 0; x < ids.size(); ++x)
    for (size_t y = x; y < ids.size(); ++y) {
      auto t = rs.sum(ids[x], ids[y]);
      if (t && !s.test(*t)) return false;
    }
  return true;
}

bool is_parabolic_set(const RootSystem& rs, const RootSet& s) {
  for (int i = 0; i < rs.num_roots(); ++i)
    if (!s.test(i) && !s.test(rs.negative(i))) return false;
  return is_closed(rs, s);
}

RootSet additive_closure(const RootSystem& rs, RootSet s) {
  std::vector<int> work = s.ids();
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    for (int b : s.ids()) {
      auto t = rs.sum(a, b);
      if (t && !s.test(*t)) {
        s.set(*t);
        work.push_back(*t);
      }
    }
  }
  return s;
}

ParabolicSet ParabolicSet::from_members(const RootSystem& rs, RootSet members) {
  int n = rs.num_roots();
  PARCR_CHECK(members.universe() == n, "parabolic: wrong universe");
  for (int i = 0; i < n; ++i)
    if (!members.test(i) && !members.test(rs.negative(i)))
      fail(ErrorKind::NotParabolic, "Q u (-Q) does not cover the root system");
  if (!is_closed(rs, members))
    fail(ErrorKind::NotParabolic, "Q is not closed under addition");

  ParabolicSet q;
  q.members_ = members;
  q.qr_ = RootSet(n);
  q.qn_ = RootSet(n);
  q.qc_ = RootSet(n);
  for (int i = 0; i < n; ++i) {
    if (!members.test(i))
      q.qc_.set(i);
    else if (members.test(rs.negative(i)))
      q.qr_.set(i);
    else
      q.qn_.set(i);
  }
  // Q^c = -Q^n always holds for a parabolic set.
  for (int i = 0; i < n; ++i)
    PARCR_CHECK(q.qc_.test(i) == q.qn_.test(rs.negative(i)), "Q^c != -Q^n");

  // Gradation: 1 on the crossed simple roots of an admissible chamber, 0 on
  // the uncrossed ones, extended through the basis expansions.
  Chamber c = admissible_chamber(rs, q);
  q.grad_.assign(n, 0);
  std::vector<int> node_grade(c.simples.size(), 0);
  for (size_t k = 0; k < c.simples.size(); ++k)
    node_grade[k] = q.qn_.test(c.simples[k]) ? 1 : 0;
  for (int i = 0; i < n; ++i) {
    int g = 0;
    for (size_t k = 0; k < c.simples.size(); ++k) g += c.coeff[i][k] * node_grade[k];
    q.grad_[i] = g;
  }
  for (int i = 0; i < n; ++i) {
    bool ok = (q.grad_[i] == 0 && q.qr_.test(i)) || (q.grad_[i] > 0 && q.qn_.test(i)) ||
              (q.grad_[i] < 0 && q.qc_.test(i));
    PARCR_CHECK(ok, "gradation signs disagree with the parabolic partition");
  }
  return q;
}

ParabolicSet ParabolicSet::from_weights(const RootSystem& rs, const Vec& w) {
  RootSet members(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i)
    if (dot(rs.root(i), w) >= 0) members.set(i);
  return from_members(rs, members);
}

ParabolicSet ParabolicSet::from_crosses(const RootSystem& rs, const Chamber& c,
                                        const std::vector<int>& cross_nodes) {
  uint64_t mask = 0;
  for (int k : cross_nodes) {
    PARCR_CHECK(k >= 0 && k < (int)c.simples.size(), "cross node out of range");
    mask |= uint64_t(1) << k;
  }
  // Q = Rad+(C) u {negative roots whose support misses the crosses}
  RootSet members(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i)
    if (c.positive(i) || (c.supp[i] & mask) == 0) members.set(i);
  return from_members(rs, members);
}

bool is_admissible(const ParabolicSet& q, const Chamber& c) {
  // B(C) inside Q is equivalent to Rad+(C) inside Q, since Q is closed.
  for (int s : c.simples)
    if (!q.contains(s)) return false;
  return true;
}

Chamber admissible_chamber(const RootSystem& rs, const ParabolicSet& q) {
  // Greedy descent: reflect at a simple root outside Q.  Each step moves one
  // root of Q^c out of the positive system, so it terminates.
  Chamber c = rs.canonical_chamber();
  while (true) {
    int bad = -1;
    for (int s : c.simples)
      if (!q.contains(s)) {
        bad = s;
        break;
      }
    if (bad < 0) return c;
    // reflecting at a simple root swaps only that root's sign in Rad+
    RootSet pos = c.positives;
    pos.reset(bad);
    pos.set(rs.negative(bad));
    c = rs.chamber_from_positives(pos);
  }
}

std::vector<Chamber> admissible_chambers(const RootSystem& rs, const ParabolicSet& q,
                                         size_t budget, bool* truncated) {
  Chamber start = admissible_chamber(rs, q);
  std::set<RootSet> seen;
  std::vector<Chamber> out;
  std::vector<RootSet> queue{start.positives};
  seen.insert(start.positives);
  bool trunc = false;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Chamber c = rs.chamber_from_positives(queue[qi]);
    for (int s : c.simples) {
      if (!q.levi_part().test(s)) continue;
      RootSet pos = c.positives;
      pos.reset(s);
      pos.set(rs.negative(s));
      if (seen.count(pos)) continue;
      if (seen.size() >= budget) {
        trunc = true;
        continue;
      }
      seen.insert(pos);
      queue.push_back(pos);
    }
  }
  if (truncated) *truncated = trunc;
  for (auto& pos : std::set<RootSet>(queue.begin(), queue.end()))
    out.push_back(rs.chamber_from_positives(pos));
  return out;
}

std::vector<int> crosses(const ParabolicSet& q, const Chamber& c) {
  std::vector<int> out;
  for (size_t k = 0; k < c.simples.size(); ++k)
    if (q.nil_part().test(c.simples[k])) out.push_back((int)k);
  return out;
}

bool is_fit(const CrPair& pair, const Chamber& c, FitKind kind) {
  const RootSystem& rs = *pair.rs;
  if (!is_admissible(pair.q, c)) return false;
  for (int s : c.simples) {
    if (pair.q.nil_part().test(s)) continue;  // crosses are unconstrained
    if (pair.inv.kind(rs, s) != RootKind::Complex) continue;
    bool img_pos = c.positive(pair.inv.image(s));
    if (kind == FitKind::S && !img_pos) return false;
    if (kind == FitKind::V && img_pos) return false;
  }
  return true;
}

Chamber find_fit_chamber(const CrPair& pair, FitKind kind) {
  const RootSystem& rs = *pair.rs;
  Chamber c = admissible_chamber(rs, pair.q);
  // The existence proof's counter: S-fit minimizes the number of positive
  // complex roots of Q^r with negative conjugate, V-fit the number with
  // positive conjugate.  Reflecting at an offending simple root strictly
  // decreases it.
  auto counter = [&](const Chamber& ch) {
    int cnt = 0;
    for (int i = 0; i < rs.num_roots(); ++i) {
      if (!pair.q.levi_part().test(i) || !ch.positive(i)) continue;
      if (pair.inv.kind(rs, i) != RootKind::Complex) continue;
      bool img_pos = ch.positive(pair.inv.image(i));
      if (kind == FitKind::S ? !img_pos : img_pos) ++cnt;
    }
    return cnt;
  };
  int guard = counter(c);
  while (true) {
    int offender = -1;
    for (int s : c.simples) {
      if (pair.q.nil_part().test(s)) continue;
      if (pair.inv.kind(rs, s) != RootKind::Complex) continue;
      bool img_pos = c.positive(pair.inv.image(s));
      if (kind == FitKind::S ? !img_pos : img_pos) {
        if (offender < 0 || s < offender) offender = s;
      }
    }
    if (offender < 0) break;
    RootSet pos = c.positives;
    pos.reset(offender);
    pos.set(rs.negative(offender));
    c = rs.chamber_from_positives(pos);
    int now = counter(c);
    PARCR_CHECK(now < guard, "fit walk failed to make progress");
    guard = now;
  }
  PARCR_CHECK(is_fit(pair, c, kind), "fit walk ended on a non-fit chamber");
  return c;
}

std::map<std::pair<int, int>, RootSet> bigrade(const CrPair& pair) {
  std::map<std::pair<int, int>, RootSet> out;
  int n = pair.rs->num_roots();
  for (int i = 0; i < n; ++i) {
    auto key = std::make_pair(pair.q.grade(i), pair.q.grade(pair.inv.image(i)));
    auto it = out.find(key);
    if (it == out.end()) it = out.emplace(key, RootSet(n)).first;
    it->second.set(i);
  }
  return out;
}

}  // namespace parcr
