#include "parcr/crinv.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace parcr {

Dims dims_of(const CrPair& pair) {
  const auto& q = pair.q;
  RootSet sq = pair.inv.image_set(q.members());
  RootSet sqc = pair.inv.image_set(q.complement_part());
  Dims d;
  d.cr_dim = (q.members() & sqc).count();
  d.cr_codim = (q.complement_part() & sqc).count();
  d.dim_r = pair.rs->num_roots() - (q.members() & sq).count();
  PARCR_CHECK(d.dim_r == 2 * d.cr_dim + d.cr_codim, "dimension identity failed");
  return d;
}

bool pair_minimal_type(const RootSystem& rs, const Involution& inv, const ParabolicSet& q) {
  RootSet sqc = inv.image_set(q.complement_part());
  for (int i : (q.nil_part() & sqc).ids())
    if (inv.kind(rs, i) != RootKind::Imaginary) return false;
  return true;
}

bool pair_weakly_integrable(const RootSystem& rs, const Involution& inv, const ParabolicSet& q) {
  // roots a - b with a, b in Q^n n s(Q^c) must land in (Q n s(Q)) u Q^n u s(Q^n)
  RootSet sqc = inv.image_set(q.complement_part());
  RootSet dom = q.nil_part() & sqc;
  RootSet sq = inv.image_set(q.members());
  RootSet sqn = inv.image_set(q.nil_part());
  RootSet good = (q.members() & sq) | q.nil_part() | sqn;
  auto ids = dom.ids();
  for (int a : ids)
    for (int b : ids) {
      auto d = rs.sum(a, rs.negative(b));
      if (d && !good.test(*d)) return false;
    }
  return true;
}

namespace {

bool union_is_closed(const RootSystem& rs, const CrPair& pair) {
  return is_closed(rs, pair.q.members() | pair.inv.image_set(pair.q.members()));
}

bool union_generates(const RootSystem& rs, const CrPair& pair) {
  RootSet u = pair.q.members() | pair.inv.image_set(pair.q.members());
  return additive_closure(rs, u).count() == rs.num_roots();
}

bool one_nondegenerate_test(const RootSystem& rs, const CrPair& pair) {
  // for every a in Q \ s(Q) there is b in s(Q) with a+b a root outside Q u s(Q)
  RootSet sq = pair.inv.image_set(pair.q.members());
  RootSet un = pair.q.members() | sq;
  for (int a : (pair.q.members() - sq).ids()) {
    bool escapes = false;
    for (int b : sq.ids()) {
      auto t = rs.sum(a, b);
      if (t && !un.test(*t)) {
        escapes = true;
        break;
      }
    }
    if (!escapes) return false;
  }
  return true;
}

bool maximal_test(const CrPair& pair) {
  // on an S-fit chamber: every crossed root with C-positive conjugate has
  // supp(s(alpha)) n Phi_C inside {alpha}
  Chamber cs = find_fit_chamber(pair, FitKind::S);
  auto phi = crosses(pair.q, cs);
  uint64_t phimask = 0;
  for (int k : phi) phimask |= uint64_t(1) << k;
  for (int k : phi) {
    int img = pair.inv.image(cs.simples[k]);
    if (!cs.positive(img)) continue;
    uint64_t hit = cs.supp[img] & phimask & ~(uint64_t(1) << k);
    if (hit) return false;
  }
  return true;
}

// Restriction of a pair to one irreducible component (only meaningful when
// the involution preserves that component).
bool involution_preserves_components(const RootSystem& rs, const Involution& inv) {
  for (int i = 0; i < rs.num_roots(); ++i)
    if (rs.component_of(inv.image(i)) != rs.component_of(i)) return false;
  return true;
}

TriState contact_nondegeneracy(const CrPair& pair, const Classification& c) {
  const RootSystem& rs = *pair.rs;
  if (rs.num_components() == 1)
    return c.fundamental ? tri(!c.totally_complex) : TriState::NotApplicable;
  if (!involution_preserves_components(rs, pair.inv)) return TriState::NotApplicable;
  // per component: fundamental and not totally complex, AND-ed
  for (int ci = 0; ci < rs.num_components(); ++ci) {
    RootSet qi(rs.num_roots()), si(rs.num_roots());
    for (int i = 0; i < rs.num_roots(); ++i) {
      if (rs.component_of(i) != ci) continue;
      if (pair.q.contains(i)) qi.set(i);
      if (pair.q.contains(pair.inv.image(i))) si.set(i);
    }
    RootSet u = qi | si;
    RootSet comp(rs.num_roots());
    for (int i = 0; i < rs.num_roots(); ++i)
      if (rs.component_of(i) == ci) comp.set(i);
    if (additive_closure(rs, u) != comp) return TriState::NotApplicable;  // not fundamental
    // totally complex component?
    if ((comp - u).empty()) return TriState::False;
  }
  return TriState::True;
}

}  // namespace

Classification classify(const CrPair& pair) {
  const RootSystem& rs = *pair.rs;
  const auto& q = pair.q;
  RootSet sq = pair.inv.image_set(q.members());

  Classification c;
  c.dims = dims_of(pair);
  c.trivial = q.members().count() == rs.num_roots();
  c.totally_real = sq == q.members();
  c.totally_complex = (q.members() | sq).count() == rs.num_roots();
  // totally complex amounts to Q^n n s(Q^n) being empty
  PARCR_CHECK(c.totally_complex ==
                  (q.nil_part() & pair.inv.image_set(q.nil_part())).empty(),
              "totally-complex criterion mismatch");
  PARCR_CHECK(c.totally_complex == (c.dims.cr_codim == 0), "cr_codim mismatch");
  PARCR_CHECK(c.totally_real == (c.dims.cr_dim == 0), "cr_dim mismatch");
  c.integrable = union_is_closed(rs, pair);
  c.fundamental = union_generates(rs, pair);
  c.one_nondegenerate = one_nondegenerate_test(rs, pair);
  {
    Chamber cv = find_fit_chamber(pair, FitKind::V);
    bool nondeg = true;
    for (int k : crosses(q, cv))
      if (!cv.positive(pair.inv.image(cv.simples[k]))) nondeg = false;
    c.levi_nondegenerate = nondeg;
  }
  c.polarized = pair.inv.image_set(q.levi_part()) == q.levi_part();
  c.maximal = maximal_test(pair);
  c.weakly_integrable = pair_weakly_integrable(rs, pair.inv, q);
  c.minimal_type = pair_minimal_type(rs, pair.inv, q);
  c.contact_nondegenerate = contact_nondegeneracy(pair, c);
  return c;
}

ReductionReport levi_nondeg_reduction(const CrPair& pair) {
  const RootSystem& rs = *pair.rs;
  ReductionReport r{pair.q, find_fit_chamber(pair, FitKind::V), {}, {}, {}, {}, {}};
  r.crosses_before = crosses(pair.q, r.chamber);
  std::vector<int> keep;
  for (int k : r.crosses_before) {
    if (r.chamber.positive(pair.inv.image(r.chamber.simples[k])))
      keep.push_back(k);
    else
      r.dropped_nodes.push_back(k);
  }
  r.output = ParabolicSet::from_crosses(rs, r.chamber, keep);
  r.crosses_after = keep;
  PARCR_CHECK(pair.q.members().subset_of(r.output.members()), "reduction must grow Q");
  RootSet un = pair.q.members() | pair.inv.image_set(pair.q.members());
  PARCR_CHECK(r.output.members().subset_of(un), "reduction exceeded Q u s(Q)");
  // idempotence / output nondegeneracy
  CrPair out{&rs, pair.inv, r.output};
  Chamber cv = find_fit_chamber(out, FitKind::V);
  for (int k : crosses(r.output, cv))
    PARCR_CHECK(cv.positive(pair.inv.image(cv.simples[k])),
                "reduction output is Levi-degenerate");
  return r;
}

ParabolicSet sigma_extension_oracle(const CrPair& pair) {
  const RootSystem& rs = *pair.rs;
  const RootSet& q = pair.q.members();
  RootSet sq = pair.inv.image_set(q);
  RootSet un = q | sq;
  RootSet grown = q;
  auto q_ids = q.ids();
  for (int g : (sq - q).ids()) {
    // reach of g under repeated addition of roots of Q
    RootSet reach(rs.num_roots());
    reach.set(g);
    std::vector<int> work{g};
    bool escaped = false;
    while (!work.empty() && !escaped) {
      int cur = work.back();
      work.pop_back();
      for (int b : q_ids) {
        auto t = rs.sum(cur, b);
        if (!t || reach.test(*t)) continue;
        if (!un.test(*t)) {
          escaped = true;
          break;
        }
        reach.set(*t);
        work.push_back(*t);
      }
    }
    if (!escaped) grown.set(g);
  }
  return ParabolicSet::from_members(rs, grown);
}

ReductionReport fundamental_reduction(const CrPair& pair) {
  const RootSystem& rs = *pair.rs;
  ReductionReport r{pair.q, find_fit_chamber(pair, FitKind::S), {}, {}, {}, {}, {}};
  const Chamber& c = r.chamber;
  r.crosses_before = crosses(pair.q, c);

  uint64_t forbidden = 0;  // union of supports of s(beta), beta uncrossed or
                           // crossed with C-negative conjugate
  std::vector<char> crossed(c.simples.size(), 0);
  for (int k : r.crosses_before) crossed[k] = 1;
  for (size_t k = 0; k < c.simples.size(); ++k) {
    int img = pair.inv.image(c.simples[k]);
    if (!crossed[k] || !c.positive(img)) forbidden |= c.supp[img];
  }
  std::vector<int> psi;
  for (int k : r.crosses_before) {
    int img = pair.inv.image(c.simples[k]);
    if (!c.positive(img)) continue;                   // Phi^{s,+} only
    if (!pair.q.nil_part().test(img)) continue;       // s(alpha) in Q^n
    if (forbidden & (uint64_t(1) << k)) continue;     // outside all supports
    psi.push_back(k);
  }
  r.output = ParabolicSet::from_crosses(rs, c, psi);
  r.crosses_after = psi;
  for (int k : r.crosses_before)
    if (!std::count(psi.begin(), psi.end(), k)) r.dropped_nodes.push_back(k);

  // the basis of the fundamental reduction is totally real, and Psi is empty
  // exactly when Q u s(Q) generates the whole root system
  PARCR_CHECK(pair.inv.image_set(r.output.members()) == r.output.members(),
              "fundamental reduction basis is not totally real");
  bool fundamental = union_generates(rs, pair);
  PARCR_CHECK(fundamental == psi.empty(), "Psi emptiness disagrees with generation test");

  // typical fibre: erase the Psi nodes, then drop the connected parts of the
  // diagram without crosses
  std::vector<char> erased(c.simples.size(), 0);
  for (int k : psi) erased[k] = 1;
  std::vector<int> compid(c.simples.size(), -1);
  int ncomp = 0;
  for (size_t k = 0; k < c.simples.size(); ++k) {
    if (erased[k] || compid[k] >= 0) continue;
    std::vector<size_t> stack{k};
    compid[k] = ncomp;
    while (!stack.empty()) {
      size_t x = stack.back();
      stack.pop_back();
      for (size_t y = 0; y < c.simples.size(); ++y)
        if (!erased[y] && compid[y] < 0 && rs.pair_dot(c.simples[x], c.simples[y]) != 0) {
          compid[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  std::vector<char> keep_comp(ncomp, 0);
  for (size_t k = 0; k < c.simples.size(); ++k)
    if (!erased[k] && crossed[k]) keep_comp[compid[k]] = 1;
  for (size_t k = 0; k < c.simples.size(); ++k)
    if (!erased[k] && keep_comp[compid[k]]) r.fibre_nodes.push_back((int)k);
  return r;
}

ReductionReport polarize(const CrPair& pair) {
  const RootSystem& rs = *pair.rs;
  RootSet sq = pair.inv.image_set(pair.q.members());
  RootSet pol = (pair.q.members() & sq) | pair.q.nil_part();
  ReductionReport r{ParabolicSet::from_members(rs, pol), find_fit_chamber(pair, FitKind::S),
                    {}, {}, {}, {}, {}};
  r.crosses_before = crosses(pair.q, r.chamber);
  r.crosses_after = crosses(r.output, r.chamber);
  for (int k : r.crosses_after)
    if (!std::count(r.crosses_before.begin(), r.crosses_before.end(), k))
      r.added_nodes.push_back(k);

  // cross-checks: the S-fit cross formula gives the same set, the output has
  // an s-invariant reductive part, the polarization is idempotent, and it is
  // totally real or Levi-degenerate
  {
    const Chamber& c = r.chamber;
    uint64_t phimask = 0;
    for (int k : r.crosses_before) phimask |= uint64_t(1) << k;
    std::vector<int> psi = r.crosses_before;
    for (size_t k = 0; k < c.simples.size(); ++k) {
      if (phimask & (uint64_t(1) << k)) continue;
      if (c.supp[pair.inv.image(c.simples[k])] & phimask) psi.push_back((int)k);
    }
    std::sort(psi.begin(), psi.end());
    PARCR_CHECK(ParabolicSet::from_crosses(rs, c, psi) == r.output,
                "polarization cross formula mismatch");
    PARCR_CHECK(psi == r.crosses_after, "polarization crosses mismatch");
  }
  PARCR_CHECK(pair.inv.image_set(r.output.levi_part()) == r.output.levi_part(),
              "polarization reductive part is not s-invariant");
  CrPair out{&rs, pair.inv, r.output};
  RootSet sout = pair.inv.image_set(r.output.members());
  RootSet pol2 = (r.output.members() & sout) | r.output.nil_part();
  PARCR_CHECK(pol2 == r.output.members(), "polarization is not idempotent");
  bool tot_real = sout == r.output.members();
  if (!tot_real) {
    Chamber cv = find_fit_chamber(out, FitKind::V);
    bool nondeg = true;
    for (int k : crosses(r.output, cv))
      if (!cv.positive(pair.inv.image(cv.simples[k]))) nondeg = false;
    PARCR_CHECK(!nondeg, "polarized pair is neither totally real nor Levi-degenerate");
  }
  return r;
}

ReductionReport strengthen_to_maximal(const CrPair& pair) {
  const RootSystem& rs = *pair.rs;
  ReductionReport r{pair.q, find_fit_chamber(pair, FitKind::S), {}, {}, {}, {}, {}};
  const Chamber& c = r.chamber;
  r.crosses_before = crosses(pair.q, c);
  RootSet iso = pair.q.members() & pair.inv.image_set(pair.q.members());

  std::vector<int> phi = r.crosses_before;
  while (true) {
    uint64_t phimask = 0;
    for (int k : phi) phimask |= uint64_t(1) << k;
    int victim = -1;  // violating crossed root with the lowest root id
    for (int k : phi) {
      int img = pair.inv.image(c.simples[k]);
      if (!c.positive(img)) continue;
      if (c.supp[img] & phimask & ~(uint64_t(1) << k)) {
        if (victim < 0 || c.simples[k] < c.simples[victim]) victim = k;
      }
    }
    if (victim < 0) break;
    phi.erase(std::find(phi.begin(), phi.end(), victim));
    r.dropped_nodes.push_back(victim);
    // each drop must preserve the isotropy
    auto test = ParabolicSet::from_crosses(rs, c, phi);
    PARCR_CHECK((test.members() & pair.inv.image_set(test.members())) == iso,
                "strengthening changed the isotropy");
  }
  r.output = ParabolicSet::from_crosses(rs, c, phi);
  r.crosses_after = phi;
  PARCR_CHECK(pair.q.members().subset_of(r.output.members()), "strengthening must grow Q");
  CrPair out{&rs, pair.inv, r.output};
  PARCR_CHECK(classify(out).maximal, "strengthening output is not maximal");
  return r;
}

std::vector<ParabolicSet> enumerate_foliations(const CrPair& pair, size_t budget,
                                               bool* truncated) {
  const RootSystem& rs = *pair.rs;
  RootSet sq = pair.inv.image_set(pair.q.members());
  RootSet iso = pair.q.members() & sq;
  RootSet un = pair.q.members() | sq;

  bool wtrunc = false;
  auto weyl = rs.weyl_elements(10000, &wtrunc);
  bool trunc = wtrunc;

  std::set<RootSet> accepted;
  const Chamber& c0 = rs.canonical_chamber();
  int r = rs.rank();
  for (const auto& w : weyl) {
    // chamber w(C0) with crossed subsets; every parabolic arises this way
    RootSet pos(rs.num_roots());
    for (int i : c0.positives.ids()) pos.set(w[i]);
    Chamber cw = rs.chamber_from_positives(pos);
    for (uint64_t mask = 0; mask < (uint64_t(1) << r); ++mask) {
      RootSet members(rs.num_roots());
      for (int i = 0; i < rs.num_roots(); ++i)
        if (cw.positive(i) || (cw.supp[i] & mask) == 0) members.set(i);
      if (!iso.subset_of(members) || !members.subset_of(un)) continue;
      if (accepted.count(members)) continue;
      if (accepted.size() >= budget) {
        trunc = true;
        continue;
      }
      accepted.insert(members);
    }
  }
  if (truncated) *truncated = trunc;
  std::vector<ParabolicSet> out;
  for (auto& m : accepted) {
    auto p = ParabolicSet::from_members(rs, m);
    // verify both sandwich inclusions directly
    PARCR_CHECK(iso.subset_of(p.members()) && p.members().subset_of(un),
                "foliation sandwich violated");
    // equivalent nilpotent-part sandwich
    RootSet qn_sqn = pair.q.nil_part() & pair.inv.image_set(pair.q.nil_part());
    RootSet qn_un = pair.q.nil_part() | pair.inv.image_set(pair.q.nil_part());
    PARCR_CHECK(qn_sqn.subset_of(p.nil_part()) && p.nil_part().subset_of(qn_un),
                "foliation nilpotent sandwich violated");
    out.push_back(std::move(p));
  }
  return out;
}

WeylScanReport weyl_orbit_scan(const CrPair& pair, size_t budget) {
  const RootSystem& rs = *pair.rs;
  bool trunc = false;
  auto weyl = rs.weyl_elements(budget, &trunc);
  if (trunc)
    fail(ErrorKind::BudgetExceeded,
         "Weyl group larger than budget (" + std::to_string(budget) + ")");

  WeylScanReport rep;
  rep.orbit_size = weyl.size();
  std::set<RootSet> minimizers;
  int best = -1;
  for (const auto& w : weyl) {
    RootSet m(rs.num_roots());
    for (int i : pair.q.members().ids()) m.set(w[i]);
    int d = rs.num_roots() - (m & pair.inv.image_set(m)).count();
    if (best < 0 || d < best) {
      best = d;
      minimizers.clear();
    }
    if (d == best) minimizers.insert(m);
  }
  rep.min_dim_r = best;
  rep.all_minimizers_minimal_type = true;
  for (auto& m : minimizers) {
    auto p = ParabolicSet::from_members(rs, m);
    bool mt = pair_minimal_type(rs, pair.inv, p);
    PARCR_CHECK(mt, "a dim-minimizer is not of minimal type");
    rep.all_minimizers_minimal_type &= mt;
    rep.minimizers.push_back({m, best});
  }
  return rep;
}

}  // namespace parcr
