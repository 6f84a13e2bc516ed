#ifndef PARCR_PARABOLIC_HPP
#define PARCR_PARABOLIC_HPP

#include <map>
#include <utility>
#include <vector>

#include "parcr/involution.hpp"
#include "parcr/rootsys.hpp"

namespace parcr {

// A parabolic set Q: closed, with Q u (-Q) = Rad.  Carries its unique
// Z-gradation (0 on the reductive part, positive on the nilpotent part,
// negative on the complement, additive on root sums).
class ParabolicSet {
 public:
  static ParabolicSet from_members(const RootSystem& rs, RootSet members);
  static ParabolicSet from_weights(const RootSystem& rs, const Vec& w);  // Q = {(a|w) >= 0}
  static ParabolicSet from_crosses(const RootSystem& rs, const Chamber& c,
                                   const std::vector<int>& cross_nodes);

  const RootSet& members() const { return members_; }
  const RootSet& levi_part() const { return qr_; }        // Q^r
  const RootSet& nil_part() const { return qn_; }         // Q^n
  const RootSet& complement_part() const { return qc_; }  // Q^c
  RootSet dual_part() const { return qr_ | qc_; }         // Q^v = Q^r u Q^c

  bool contains(int id) const { return members_.test(id); }
  int grade(int id) const { return grad_[id]; }

  bool operator==(const ParabolicSet& o) const { return members_ == o.members_; }
  bool operator!=(const ParabolicSet& o) const { return members_ != o.members_; }

 private:
  RootSet members_, qr_, qn_, qc_;
  std::vector<int> grad_;
};

struct CrPair {
  const RootSystem* rs;
  Involution inv;
  ParabolicSet q;
};

bool is_closed(const RootSystem& rs, const RootSet& s);
bool is_parabolic_set(const RootSystem& rs, const RootSet& s);
// Additive closure: repeatedly adjoin sums of members that are roots.
RootSet additive_closure(const RootSystem& rs, RootSet s);

bool is_admissible(const ParabolicSet& q, const Chamber& c);
// Some admissible chamber, found by reflecting the canonical chamber at
// simple roots outside Q until the basis lies inside Q.
Chamber admissible_chamber(const RootSystem& rs, const ParabolicSet& q);
// All admissible chambers (the orbit under reflections at simple roots in
// Q^r), deterministic order, truncated at budget.
std::vector<Chamber> admissible_chambers(const RootSystem& rs, const ParabolicSet& q,
                                         size_t budget, bool* truncated = nullptr);

// Crosses of Q in an admissible chamber: Phi_C = Q^n n B(C), as node indices.
std::vector<int> crosses(const ParabolicSet& q, const Chamber& c);

enum class FitKind { S, V };
// An admissible chamber that is S-fit (resp. V-fit) for (Q, s): every complex
// simple root outside Phi_C has a C-positive (resp. C-negative) conjugate.
// Found by the minimizing reflection walk; always exists.
Chamber find_fit_chamber(const CrPair& pair, FitKind kind);
bool is_fit(const CrPair& pair, const Chamber& c, FitKind kind);

// The bigrading Q^{p,q} = {a : grade(a) = p, grade(s(a)) = q}.
std::map<std::pair<int, int>, RootSet> bigrade(const CrPair& pair);

}  // namespace parcr

#endif
