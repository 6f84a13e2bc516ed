#ifndef PARCR_BASE_HPP
#define PARCR_BASE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace parcr {

// All root coordinates are stored doubled, so that the half-integer roots of
// F4 and the E series are exact integers.  Inner products of doubled vectors
// are 4*(a|b).
using Coord = long long;
using Vec = std::vector<Coord>;

enum class ErrorKind {
  InvalidRank,
  NotRegular,
  NotInvolutive,
  NotIsometric,
  NotRootPreserving,
  NotParabolic,
  NotAdmissible,
  NotInScope,
  SyntaxError,
  ValidationError,
  BudgetExceeded,
  Internal,
};

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

// Internal consistency checks stay on in release builds; everything here is
// exact arithmetic and the sizes are desk-scale.
#define PARCR_CHECK(cond, msg)                                        \
  do {                                                                \
    if (!(cond)) ::parcr::fail(::parcr::ErrorKind::Internal, (msg)); \
  } while (0)

inline Coord dot(const Vec& a, const Vec& b) {
  PARCR_CHECK(a.size() == b.size(), "dot: dimension mismatch");
  Coord s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec add(const Vec& a, const Vec& b) {
  PARCR_CHECK(a.size() == b.size(), "add: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec neg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline bool is_zero(const Vec& a) {
  for (Coord c : a)
    if (c != 0) return false;
  return true;
}

// Fixed-universe bitset over root ids.
class RootSet {
 public:
  RootSet() : n_(0) {}
  explicit RootSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  RootSet operator&(const RootSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & b; }); }
  RootSet operator|(const RootSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a | b; }); }
  RootSet operator-(const RootSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }
  RootSet complement() const {
    RootSet r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
    r.trim();
    return r;
  }

  bool operator==(const RootSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const RootSet& o) const { return !(*this == o); }
  bool operator<(const RootSet& o) const { return w_ < o.w_; }

  bool subset_of(const RootSet& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  std::vector<int> ids() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  template <class F>
  RootSet zip(const RootSet& o, F f) const {
    PARCR_CHECK(n_ == o.n_, "RootSet: universe mismatch");
    RootSet r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = f(w_[k], o.w_[k]);
    return r;
  }
  void trim() {
    if (n_ & 63) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
  }
  int n_;
  std::vector<uint64_t> w_;
};

}  // namespace parcr

#endif
