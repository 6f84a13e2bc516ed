#ifndef PARCR_INVOLUTION_HPP
#define PARCR_INVOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "parcr/rootsys.hpp"

namespace parcr {

enum class RootKind { Real, Imaginary, Complex };

// An order-two isometry of the ambient space mapping the root system onto
// itself.  The matrix acts on doubled coordinates and may have denominator
// up to 4 (lattice automorphisms of the E models need it); all root-level
// computation goes through the cached image table.
class Involution {
 public:
  // "e1->-e3, e2->-e2"; unmentioned coordinates are fixed.
  static Involution from_clauses(const RootSystem& rs, const std::string& spec);
  // Row-major matrix with a common denominator: image of x is (M x)/den.
  static Involution from_matrix(const RootSystem& rs, std::vector<std::vector<long long>> m,
                                long long den = 1);
  static Involution from_perm(const RootSystem& rs, const RootPerm& images);

  int image(int root_id) const { return images_[root_id]; }
  RootKind kind(const RootSystem& rs, int root_id) const {
    int im = images_[root_id];
    if (im == root_id) return RootKind::Real;
    if (im == rs.negative(root_id)) return RootKind::Imaginary;
    return RootKind::Complex;
  }
  RootSet image_set(const RootSet& s) const {
    RootSet r(s.universe());
    for (int i = 0; i < s.universe(); ++i)
      if (s.test(i)) r.set(images_[i]);
    return r;
  }
  const RootPerm& images() const { return images_; }

  // The matrix is present when the involution was given in coordinates;
  // involutions built from root permutations carry none.
  bool has_matrix() const { return !matrix_.empty(); }
  const std::vector<std::vector<long long>>& matrix() const { return matrix_; }
  long long matrix_den() const { return den_; }
  // True when the map sends every coordinate vector e_i to some +-e_j.
  std::optional<std::vector<std::pair<int, int>>> signed_permutation() const;

  // A copy carrying a coordinate matrix; when the involution was built from a
  // root permutation the matrix acts as the permutation on the root span and
  // as the identity on its orthogonal complement.
  Involution with_matrix(const RootSystem& rs) const;

 private:
  RootPerm images_;
  std::vector<std::vector<long long>> matrix_;
  long long den_ = 1;
};

struct ChamberFit {
  bool s_side = false;  // every complex simple root has a C-positive conjugate
  bool v_side = false;  // every complex simple root has a C-negative conjugate
};

// S / V classification of a chamber for an involution alone (no parabolic);
// both flags are set when the basis has no complex roots.
ChamberFit chamber_kind(const RootSystem& rs, const Involution& inv, const Chamber& c);

struct KindCount {
  int real = 0, imaginary = 0, complex_ = 0;
};
KindCount count_kinds(const RootSystem& rs, const Involution& inv);

RootSet real_roots(const RootSystem& rs, const Involution& inv);
RootSet imaginary_roots(const RootSystem& rs, const Involution& inv);
RootSet complex_roots(const RootSystem& rs, const Involution& inv);

}  // namespace parcr

#endif
