#ifndef PARCR_ROOTSYS_HPP
#define PARCR_ROOTSYS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parcr/base.hpp"

namespace parcr {

struct SimpleType {
  char letter;  // 'A'..'G'
  int rank;
};

std::vector<SimpleType> parse_type_string(const std::string& s);  // "B3", "B2+B2"
std::string type_string(const std::vector<SimpleType>& comps);

// A permutation of root ids (image of an isometry of the ambient space that
// preserves the root set).
using RootPerm = std::vector<int>;

class RootSystem;

// A Weyl chamber, stored through its set of positive roots.  The simple roots
// are listed in a canonical order fixed by a deterministic walk of the Dynkin
// graph, and every root carries its integer expansion over that basis.
struct Chamber {
  RootSet positives;
  std::vector<int> simples;             // root ids, serialized order
  std::vector<std::vector<int>> coeff;  // [root id][basis position]
  std::vector<uint64_t> supp;           // support bitmask over basis positions
  Vec regular_vector;                   // doubled coords; positive exactly on positives

  bool positive(int id) const { return positives.test(id); }
  int node_of(int root_id) const;  // basis position of a simple root, -1 otherwise
};

class RootSystem {
 public:
  static RootSystem build(const std::vector<SimpleType>& comps);

  int num_roots() const { return (int)roots_.size(); }
  int ambient_dim() const { return ambient_; }
  int rank() const { return rank_; }
  int num_components() const { return (int)comps_.size(); }
  const std::vector<SimpleType>& components() const { return comps_; }
  int component_of(int id) const { return comp_of_[id]; }

  const Vec& root(int id) const { return roots_[id]; }
  std::optional<int> id_of(const Vec& v) const;
  int require_id(const Vec& v, const char* what) const;
  int negative(int id) const { return neg_[id]; }

  // id of roots[a]+roots[b] when that is a root, nothing otherwise.
  std::optional<int> sum(int a, int b) const {
    int s = sum_table_[(size_t)a * roots_.size() + b];
    if (s < 0) return std::nullopt;
    return s;
  }

  Coord pair_dot(int a, int b) const { return dot(roots_[a], roots_[b]); }  // = 4*(a|b)
  int cartan(int a, int b) const;                                           // <a|b> = 2(a|b)/(b|b)
  int reflect(int beta, int xi) const;                                      // id of r_beta(xi)
  RootPerm reflection_perm(int beta) const;

  Chamber canonical_chamber() const { return canonical_; }
  Chamber chamber_from_regular(const Vec& v) const;  // v in doubled coords
  Chamber chamber_from_positives(const RootSet& pos) const;

  // Per irreducible component, the ids of the highest root delta_C and the
  // lowest root gamma_C = -delta_C of a chamber.
  std::vector<std::pair<int, int>> extreme_roots(const Chamber& c) const;

  RootSet full_set() const;

  // The Weyl group as root permutations, generated by simple reflections;
  // sorted so enumeration order is reproducible.  Truncates at budget.
  std::vector<RootPerm> weyl_elements(size_t budget, bool* truncated = nullptr) const;
  // The full automorphism group Aut(Rad) (Weyl group extended by the Dynkin
  // diagram symmetries of the canonical basis).
  std::vector<RootPerm> automorphism_group(size_t budget, bool* truncated = nullptr) const;
  std::vector<RootPerm> involution_perms(size_t budget, bool* truncated = nullptr) const;

  RootPerm perm_from_images(const std::vector<int>& images) const { return images; }
  RootPerm compose(const RootPerm& f, const RootPerm& g) const;  // f after g

 private:
  std::vector<SimpleType> comps_;
  int ambient_ = 0;
  int rank_ = 0;
  std::vector<Vec> roots_;  // sorted lexicographically
  std::vector<int> comp_of_;
  std::vector<int> neg_;
  std::vector<int16_t> sum_table_;
  Chamber canonical_;

  void finish_build();
  std::vector<int> order_simples(const std::vector<int>& simple_ids) const;
};

// Support of a root over the basis of a chamber: the set of basis positions
// with nonzero coefficient.
std::vector<int> support(const RootSystem& rs, const Chamber& c, int root_id);

// Human-readable root, e.g. "e1-e2", "2e3", "(e4-e1-e2-e3)/2".
std::string root_name(const RootSystem& rs, int root_id);
std::string vec_name(const Vec& doubled);

}  // namespace parcr

#endif
