#include "parcr/sweep.hpp"

#include <algorithm>
#include <sstream>

namespace parcr {

namespace {

OrderValue plus(OrderValue a, int k) {
  return a.is_finite() ? OrderValue::finite(a.v + k) : a;
}

int levi_cap(char letter, int rank) {
  if (letter == 'A' || letter == 'C') return 2;
  if (letter == 'B') return rank == 2 ? 2 : 3;
  return 3;  // B>=3, D, E, F, G
}

std::string describe_pair(const CrPair& pair) {
  std::ostringstream os;
  const RootSystem& rs = *pair.rs;
  os << type_string(rs.components()) << " Q={";
  bool first = true;
  for (int i : pair.q.members().ids()) {
    if (!first) os << ",";
    os << root_name(rs, i);
    first = false;
  }
  os << "} s:{";
  first = true;
  for (int s : rs.canonical_chamber().simples) {
    if (!first) os << ",";
    os << root_name(rs, s) << "->" << root_name(rs, pair.inv.image(s));
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

BoundReport verify_bounds(const CrPair& pair, size_t chamber_budget,
                          const std::vector<OrderValue>* mu_by_root) {
  const RootSystem& rs = *pair.rs;
  BoundReport rep;
  auto check = [&](const std::string& name, bool applicable, bool holds) {
    rep.checks.push_back({name, holds, applicable, holds ? "" : describe_pair(pair)});
  };

  Classification cls = classify(pair);
  LeviOrderReport levi = levi_order(pair);
  ContactOrderReport contact = contact_order(pair);
  Chamber c0 = admissible_chamber(rs, pair.q);
  DepthReport dep = depth_on_chamber(pair, c0);
  Chamber cs = find_fit_chamber(pair, FitKind::S);
  Chamber cv = find_fit_chamber(pair, FitKind::V);
  bool irreducible = rs.num_components() == 1;

  // finite Levi order <=> Levi-nondegenerate
  check("levi-finite-iff-nondeg", true,
        (levi.vacuous || levi.sup.is_finite()) == cls.levi_nondegenerate);

  // per-type cap on finite Levi orders, irreducible systems
  if (irreducible) {
    int cap = levi_cap(rs.components()[0].letter, rs.components()[0].rank);
    check("levi-type-cap", !levi.vacuous && levi.sup.is_finite(),
          levi.vacuous || !levi.sup.is_finite() || levi.sup.v <= cap);
  }

  // weakly integrable => Levi order infinite or <= 2
  check("weak-integrability-cap", cls.weakly_integrable,
        !cls.weakly_integrable || levi.vacuous || !levi.sup.is_finite() || levi.sup.v <= 2);

  // minimal type => weakly integrable
  check("minimal-type-implies-weak", cls.minimal_type,
        !cls.minimal_type || cls.weakly_integrable);

  // 1-nondegenerate <=> Levi order <= 1
  check("one-nondeg-is-order-le-1", true,
        cls.one_nondegenerate == (levi.vacuous || (levi.sup.is_finite() && levi.sup.v <= 1)));

  // fundamental <=> every H-index finite
  {
    bool all_finite = true;
    for (auto& v : dep.by_root) all_finite &= v.is_finite();
    check("fundamental-iff-depth-finite", true, cls.fundamental == all_finite);
  }

  // depth bound: nu(alpha) <= nu(gamma_{C,h}) + 2 per component, any admissible chamber
  {
    bool ok = true;
    const Chamber* chams[3] = {&c0, &cs, &cv};
    for (const Chamber* cham : chams) {
      auto ext = rs.extreme_roots(*cham);
      for (int i = 0; i < rs.num_roots(); ++i) {
        OrderValue g = dep.by_root[ext[rs.component_of(i)].second];
        ok &= dep.by_root[i] <= plus(g, 2);
      }
    }
    check("depth-gamma-plus-2", true, ok);
  }

  // fundamental + Levi-nondegenerate: nu(alpha) <= nu(gamma_{C_S,h}) + 1
  if (cls.fundamental && cls.levi_nondegenerate) {
    auto ext = rs.extreme_roots(cs);
    bool ok = true;
    for (int i = 0; i < rs.num_roots(); ++i)
      ok &= dep.by_root[i] <= plus(dep.by_root[ext[rs.component_of(i)].second], 1);
    check("depth-gammaS-plus-1", true, ok);
  }

  // chamber monotonicity of nu(gamma) between V-fit and S-fit
  if (irreducible && !cls.trivial && cls.fundamental) {
    auto gamma_of = [&](const Chamber& ch) { return rs.extreme_roots(ch)[0].second; };
    OrderValue lo = dep.by_root[gamma_of(cv)];
    OrderValue hi = dep.by_root[gamma_of(cs)];
    bool ok = lo <= hi;
    for (auto& ch : admissible_chambers(rs, pair.q, chamber_budget)) {
      OrderValue mid = dep.by_root[gamma_of(ch)];
      ok &= lo <= mid && mid <= hi;
    }
    check("gamma-monotone-V-le-C-le-S", true, ok);
  }

  // contact vs Levi order
  {
    bool ok = true;
    for (auto& [a, lo] : levi.by_root) {
      OrderValue co = contact.by_root.count(a) ? contact.by_root.at(a) : OrderValue::finite(0);
      ok &= co <= lo;
    }
    bool sup_ok = contact.vacuous || contact.sup <= levi.sup || !levi.sup.is_finite();
    check("contact-le-levi", true, ok && sup_ok);
  }
  if (cls.levi_nondegenerate && (levi.vacuous || (levi.sup.is_finite() && levi.sup.v <= 2))) {
    bool eq = levi.vacuous ? contact.vacuous : contact.sup == levi.sup;
    check("contact-eq-levi-at-low-order", true, eq);
  }
  if (irreducible && cls.fundamental && !cls.totally_complex)
    check("contact-finite-when-contact-nondeg", true,
          contact.vacuous || contact.sup.is_finite());
  if (cls.totally_complex && !contact.vacuous)
    check("contact-infinite-when-totally-complex", true, !contact.sup.is_finite());

  // mu bounds finite Levi orders
  if (mu_by_root) {
    bool ok = true;
    for (auto& [a, lo] : levi.by_root)
      if (lo.is_finite()) ok &= lo <= (*mu_by_root)[a];
    check("mu-bounds-levi", true, ok);
  }

  // permutation invariance of a minimal Levi witness, and monotonicity of the
  // H-index under additions from the isotropy
  {
    bool ok = true;
    for (auto& [a, lo] : levi.by_root) {
      if (!lo.is_finite() || lo.v < 2) continue;
      std::vector<int> wit;
      levi_order_root(pair, a, &wit);
      std::sort(wit.begin(), wit.end());
      do {
        int cur = a;
        bool valid = true;
        for (int b : wit) {
          auto t = rs.sum(cur, b);
          if (!t) {
            valid = false;
            break;
          }
          cur = *t;
        }
        ok &= valid;
      } while (std::next_permutation(wit.begin(), wit.end()));
    }
    check("levi-witness-permutations", true, ok);

    bool mono = true;
    RootSet iso = pair.q.members() & pair.inv.image_set(pair.q.members());
    for (int a = 0; a < rs.num_roots(); ++a)
      for (int b : iso.ids()) {
        auto t = rs.sum(a, b);
        if (t) mono &= dep.by_root[*t] <= dep.by_root[a];
      }
    check("h-index-isotropy-monotone", true, mono);
  }

  // depth is preserved by the Levi-nondegenerate reduction
  {
    auto red = levi_nondeg_reduction(pair);
    CrPair rp{&rs, pair.inv, red.output};
    check("depth-preserved-by-levi-reduction", true,
          depth_on_chamber(rp, c0).depth == dep.depth);
  }

  // Borel pairs: weakly integrable iff the Levi reduction is totally real
  if (pair.q.levi_part().empty()) {
    auto red = levi_nondeg_reduction(pair);
    bool tr = pair.inv.image_set(red.output.members()) == red.output.members();
    check("borel-weak-iff-reduction-real", true, cls.weakly_integrable == tr);
  }

  return rep;
}

SweepReport sweep_system(const RootSystem& rs, const SweepOptions& opt) {
  SweepReport rep;
  bool trunc = false;
  auto invs = rs.involution_perms(opt.aut_budget, &trunc);
  if (trunc) fail(ErrorKind::BudgetExceeded, "automorphism group larger than budget");

  std::vector<OrderValue> mu(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) mu[i] = mu_index(rs, i);

  const Chamber& c0 = rs.canonical_chamber();
  int r = rs.rank();
  for (const auto& g : invs) {
    Involution inv = Involution::from_perm(rs, g);
    std::string iname;
    for (int s : c0.simples) {
      if (!iname.empty()) iname += " ";
      iname += root_name(rs, s) + "->" + root_name(rs, inv.image(s));
    }
    for (uint64_t mask = 0; mask < (uint64_t(1) << r); ++mask) {
      std::vector<int> phi;
      for (int k = 0; k < r; ++k)
        if (mask & (uint64_t(1) << k)) phi.push_back(k);
      CrPair pair{&rs, inv, ParabolicSet::from_crosses(rs, c0, phi)};
      ++rep.pair_count;

      SweepRow row;
      row.type = type_string(rs.components());
      row.involution = iname;
      row.phi = phi;
      row.cls = classify(pair);
      auto levi = levi_order(pair);
      row.levi_sup = levi.sup;
      row.levi_vacuous = levi.vacuous;
      auto con = contact_order(pair);
      row.contact_sup = con.sup;
      row.contact_vacuous = con.vacuous;
      row.depth_val = depth(pair).depth;
      if (!row.levi_vacuous && row.levi_sup.is_finite() && rep.max_finite_levi < row.levi_sup)
        rep.max_finite_levi = row.levi_sup;

      if (opt.check_bounds) {
        auto b = verify_bounds(pair, opt.chamber_budget, &mu);
        for (auto& ck : b.checks)
          if (ck.applicable && !ck.holds) rep.failures.push_back(ck);
      }
      if (opt.check_oracles) {
        auto red = levi_nondeg_reduction(pair);
        auto ext = sigma_extension_oracle(pair);
        if (red.output != ext) {
          ++rep.oracle_mismatch_count;
          rep.failures.push_back(
              {"sigma-extension-vs-levi-reduction", false, true, describe_pair(pair)});
        }
        auto fr = fundamental_reduction(pair);
        bool closure_full =
            additive_closure(rs, pair.q.members() | inv.image_set(pair.q.members())).count() ==
            rs.num_roots();
        bool psi_empty = fr.crosses_after.empty();
        if (row.cls.fundamental != closure_full || closure_full != psi_empty) {
          ++rep.oracle_mismatch_count;
          rep.failures.push_back(
              {"fundamental-closure-psi-agreement", false, true, describe_pair(pair)});
        }
      }
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

std::string sweep_csv_header() {
  return "type,involution,phi,trivial,totally_real,totally_complex,fundamental,integrable,"
         "one_nondegenerate,levi_nondegenerate,polarized,maximal,weakly_integrable,"
         "minimal_type,contact_nondegenerate,dim_r,cr_dim,cr_codim,levi_order,levi_vacuous,"
         "contact_order,contact_vacuous,depth";
}

std::string sweep_csv_row(const SweepRow& row) {
  std::ostringstream os;
  auto b = [](bool x) { return x ? "1" : "0"; };
  os << row.type << ",\"" << row.involution << "\",\"";
  for (size_t i = 0; i < row.phi.size(); ++i) {
    if (i) os << " ";
    os << row.phi[i] + 1;
  }
  os << "\"," << b(row.cls.trivial) << "," << b(row.cls.totally_real) << ","
     << b(row.cls.totally_complex) << "," << b(row.cls.fundamental) << ","
     << b(row.cls.integrable) << "," << b(row.cls.one_nondegenerate) << ","
     << b(row.cls.levi_nondegenerate) << "," << b(row.cls.polarized) << ","
     << b(row.cls.maximal) << "," << b(row.cls.weakly_integrable) << ","
     << b(row.cls.minimal_type) << ",";
  switch (row.cls.contact_nondegenerate) {
    case TriState::True: os << "1"; break;
    case TriState::False: os << "0"; break;
    case TriState::NotApplicable: os << "na"; break;
  }
  os << "," << row.cls.dims.dim_r << "," << row.cls.dims.cr_dim << ","
     << row.cls.dims.cr_codim << "," << row.levi_sup.str() << "," << b(row.levi_vacuous)
     << "," << row.contact_sup.str() << "," << b(row.contact_vacuous) << ","
     << row.depth_val.str();
  return os.str();
}

}  // namespace parcr
