#ifndef PARCR_SWEEP_HPP
#define PARCR_SWEEP_HPP

#include <string>
#include <vector>

#include "parcr/orders.hpp"

namespace parcr {

struct BoundCheck {
  std::string name;
  bool holds = true;
  bool applicable = true;
  std::string witness;  // on failure: a replayable description
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool all_ok() const {
    for (auto& c : checks)
      if (c.applicable && !c.holds) return false;
    return true;
  }
};

// Every order/depth bound checked on one pair.  mu_by_root may be precomputed
// (one entry per root id); chamber_budget caps the admissible-chamber scan.
BoundReport verify_bounds(const CrPair& pair, size_t chamber_budget = 512,
                          const std::vector<OrderValue>* mu_by_root = nullptr);

struct SweepRow {
  std::string type;
  std::string involution;  // images of the canonical simple roots
  std::vector<int> phi;    // crossed nodes of the canonical chamber
  Classification cls;
  OrderValue levi_sup;
  bool levi_vacuous = false;
  OrderValue contact_sup;
  bool contact_vacuous = false;
  OrderValue depth_val;
};

struct SweepOptions {
  size_t aut_budget = 100000;
  size_t chamber_budget = 512;
  bool check_oracles = true;  // sigma-extension vs Levi reduction, closure vs Psi
  bool check_bounds = true;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::vector<BoundCheck> failures;      // all failing checks with witnesses
  OrderValue max_finite_levi = OrderValue::finite(0);
  size_t pair_count = 0;
  size_t oracle_mismatch_count = 0;
};

// Exhaustive sweep over all cross subsets of the canonical chamber times all
// involutions in Aut(Rad); covers all pairs up to simultaneous W-conjugation.
SweepReport sweep_system(const RootSystem& rs, const SweepOptions& opt = {});

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);

}  // namespace parcr

#endif
