#ifndef PARCR_ORDERS_HPP
#define PARCR_ORDERS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parcr/crinv.hpp"
#include "parcr/parabolic.hpp"

namespace parcr {

// A nonnegative order, or infinity.
struct OrderValue {
  int v = -1;  // -1 encodes infinity
  static OrderValue finite(int x) { return OrderValue{x}; }
  static OrderValue infinite() { return OrderValue{-1}; }
  bool is_finite() const { return v >= 0; }
  bool operator==(const OrderValue& o) const { return v == o.v; }
  bool operator<(const OrderValue& o) const {
    if (is_finite() && o.is_finite()) return v < o.v;
    return is_finite() && !o.is_finite();
  }
  bool operator<=(const OrderValue& o) const { return *this < o || *this == o; }
  std::string str() const { return is_finite() ? std::to_string(v) : "inf"; }
};

// Shortest Levi-sequence length for alpha in Q n s(Q^c): steps from
// Q^c n s(Q), partial sums roots, final sum in Q^c n s(Q^c).
OrderValue levi_order_root(const CrPair& pair, int alpha,
                           std::vector<int>* witness = nullptr);

struct LeviOrderReport {
  OrderValue sup = OrderValue::finite(0);
  bool vacuous = false;                 // empty domain (totally real pairs)
  std::map<int, OrderValue> by_root;    // over Q n s(Q^c)
  std::vector<int> kernel_infinite;     // roots of the domain with infinite order
  std::vector<int> isotropy;            // Q n s(Q), reported separately
};
LeviOrderReport levi_order(const CrPair& pair);

// H-index: shortest length of a sum chain from Q u s(Q) reaching alpha with
// all partial sums roots.  depth = sup over all roots.
OrderValue h_index(const CrPair& pair, int alpha);

struct DepthReport {
  OrderValue depth = OrderValue::finite(0);
  std::vector<OrderValue> by_root;                    // indexed by root id
  std::vector<OrderValue> component_gamma;            // nu(gamma_{C,h}) on the given chamber
};
DepthReport depth(const CrPair& pair);
DepthReport depth_on_chamber(const CrPair& pair, const Chamber& c);

// Contact order: shortest escape from Q u s(Q) by adding roots of Q u s(Q)
// with all partial sums roots.
OrderValue contact_order_root(const CrPair& pair, int alpha,
                              std::vector<int>* witness = nullptr);

struct ContactOrderReport {
  OrderValue sup = OrderValue::finite(0);
  bool vacuous = false;
  std::map<int, OrderValue> by_root;  // over (Q u s(Q)) \ (Q n s(Q))
};
ContactOrderReport contact_order(const CrPair& pair);

// Index mu(alpha): maximal length of an admissible sequence for alpha (every
// subset sum avoids Rad u {0}, every subset shifted by alpha stays a root).
OrderValue mu_index(const RootSystem& rs, int alpha);

}  // namespace parcr

#endif
