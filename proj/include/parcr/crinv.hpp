#ifndef PARCR_CRINV_HPP
#define PARCR_CRINV_HPP

#include <optional>
#include <vector>

#include "parcr/parabolic.hpp"

namespace parcr {

enum class TriState { False, True, NotApplicable };
inline TriState tri(bool b) { return b ? TriState::True : TriState::False; }

struct Dims {
  int dim_r = 0;     // #Rad - #(Q n s(Q))
  int cr_dim = 0;    // #(Q n s(Q^c))
  int cr_codim = 0;  // #(Q^c n s(Q^c))
};

struct Classification {
  bool trivial = false;
  bool totally_real = false;
  bool totally_complex = false;
  bool fundamental = false;
  bool integrable = false;
  bool one_nondegenerate = false;
  bool levi_nondegenerate = false;
  bool polarized = false;
  bool maximal = false;
  bool weakly_integrable = false;
  bool minimal_type = false;
  TriState contact_nondegenerate = TriState::NotApplicable;
  Dims dims;
};

Dims dims_of(const CrPair& pair);
Classification classify(const CrPair& pair);

// A reduction/strengthening step.  The chamber is the one the computation ran
// on; crosses refer to its node indices.
struct ReductionReport {
  ParabolicSet output;
  Chamber chamber;
  std::vector<int> crosses_before;
  std::vector<int> crosses_after;
  std::vector<int> dropped_nodes;   // removed crosses (reductions) / dropped (maximal)
  std::vector<int> added_nodes;     // added crosses (polarization)
  std::vector<int> fibre_nodes;     // fundamental reduction: nodes of the typical fibre
};

// Largest parabolic between Q and Q u s(Q): drop the crossed simple roots
// with C-negative conjugate on a V-fit chamber.
ReductionReport levi_nondeg_reduction(const CrPair& pair);

// Independent oracle for the same set: root-level sigma-extension, growing Q
// by the roots of s(Q) \ Q whose iterated sums with Q stay inside Q u s(Q).
ParabolicSet sigma_extension_oracle(const CrPair& pair);

// Totally real basis Q_Psi of the fundamental reduction.
ReductionReport fundamental_reduction(const CrPair& pair);

// Polarization Q_[s] = (Q n s(Q)) u Q^n, the smallest parabolic containing
// the isotropy inside Q.
ReductionReport polarize(const CrPair& pair);

// Strengthen to a maximal CR structure with the same isotropy.
ReductionReport strengthen_to_maximal(const CrPair& pair);

// All parabolic P with Q n s(Q) <= P <= Q u s(Q), enumerated over admissible
// chambers of the whole system (budget-bounded) and deduplicated.
std::vector<ParabolicSet> enumerate_foliations(const CrPair& pair, size_t budget,
                                               bool* truncated = nullptr);

struct WeylScanEntry {
  RootSet members;  // w(Q)
  int dim_r;
};

struct WeylScanReport {
  int min_dim_r = 0;
  size_t orbit_size = 0;
  std::vector<WeylScanEntry> minimizers;  // sorted by member set
  bool all_minimizers_minimal_type = false;
};

// dim_R over the W-orbit of Q (s fixed); asserts the minimal-type property of
// every minimizer.  Throws BudgetExceeded when |W| > budget.
WeylScanReport weyl_orbit_scan(const CrPair& pair, size_t budget);

bool pair_minimal_type(const RootSystem& rs, const Involution& inv, const ParabolicSet& q);
bool pair_weakly_integrable(const RootSystem& rs, const Involution& inv, const ParabolicSet& q);

}  // namespace parcr

#endif
