#ifndef PARCR_DIAGRAM_HPP
#define PARCR_DIAGRAM_HPP

#include <memory>
#include <string>
#include <vector>

#include "parcr/parabolic.hpp"

namespace parcr {

enum class Paint { Real, Imaginary, ComplexPos, ComplexNeg };

struct DiagNode {
  Vec root;  // doubled coordinates of the simple root
  Paint paint = Paint::Real;
  bool cross = false;
  bool noncompact = false;  // opaque display annotation for imaginary nodes
};

struct DiagEdge {
  int a, b;          // node indices, a < b
  int multiplicity;  // 1, 2 or 3
  int arrow_to;      // node index of the shorter root, -1 for equal lengths
};

struct CrossMarkedDiagram {
  std::string type;
  std::vector<DiagNode> nodes;
  std::vector<DiagEdge> edges;
  std::vector<std::pair<int, int>> conj_arrows;  // unordered, a < b

  bool operator==(const CrossMarkedDiagram& o) const;
};

// The diagram of a pair on an admissible chamber.  Node order is the
// chamber's canonical simple-root order.
CrossMarkedDiagram diagram_of(const CrPair& pair, const Chamber& chamber,
                              const std::vector<bool>* noncompact = nullptr);

// A fully parsed instance: root system (owned), chamber, involution, set.
struct ParsedSpec {
  std::shared_ptr<const RootSystem> rs;
  Chamber chamber;
  Involution inv;
  ParabolicSet q;
  std::vector<bool> noncompact;  // per node

  CrPair pair() const { return CrPair{rs.get(), inv, q}; }
};

// Line grammar:  type: B3   basis: e1-e2, e2-e3, e3   involution: e1->-e3, ...
//                matrix: <d*d ints> [/ den]           cross: 2,3
//                paint: +, i, i   arrows: 1-3         (# comments)
ParsedSpec parse_spec(const std::string& text);

std::string emit_text(const ParsedSpec& spec);
std::string emit_dot(const ParsedSpec& spec);
std::string emit_json(const ParsedSpec& spec);

// Semantic equality: same components, chamber positives, involution images
// and parabolic members.
bool semantically_equal(const ParsedSpec& a, const ParsedSpec& b);

}  // namespace parcr

#endif
