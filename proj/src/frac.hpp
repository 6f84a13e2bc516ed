#ifndef PARCR_SRC_FRAC_HPP
#define PARCR_SRC_FRAC_HPP

#include <numeric>

#include "parcr/base.hpp"

namespace parcr {

// Exact rationals for the small dense solves (rank <= 8 per component).
// Products go through __int128 before reduction.
struct Frac {
  long long n = 0, d = 1;
  Frac() = default;
  Frac(long long nn, long long dd = 1) : n(nn), d(dd) { norm(); }
  void norm() {
    PARCR_CHECK(d != 0, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }
  static Frac make(__int128 n, __int128 d) {
    PARCR_CHECK(d != 0, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    PARCR_CHECK(n <= INT64_MAX && n >= INT64_MIN && d <= INT64_MAX, "rational overflow");
    return Frac{(long long)n, (long long)d, 0};
  }
  Frac operator+(const Frac& o) const {
    return make((__int128)n * o.d + (__int128)o.n * d, (__int128)d * o.d);
  }
  Frac operator-(const Frac& o) const {
    return make((__int128)n * o.d - (__int128)o.n * d, (__int128)d * o.d);
  }
  Frac operator*(const Frac& o) const { return make((__int128)n * o.n, (__int128)d * o.d); }
  Frac operator/(const Frac& o) const {
    PARCR_CHECK(o.n != 0, "division by zero rational");
    return make((__int128)n * o.d, (__int128)d * o.n);
  }
  bool zero() const { return n == 0; }
  bool integral() const { return d == 1; }

 private:
  Frac(long long nn, long long dd, int) : n(nn), d(dd) {}
};

// Solve A x = b exactly; A is m x k (rows m >= k expected), consistent
// overdetermined systems allowed.  Returns false when inconsistent or the
// solution is not unique.
inline bool solve_exact(std::vector<std::vector<Frac>> a, std::vector<Frac> b,
                        std::vector<Frac>& x) {
  size_t m = a.size(), k = m ? a[0].size() : 0;
  std::vector<int> pivot_of_col(k, -1);
  size_t prow = 0;
  for (size_t col = 0; col < k && prow < m; ++col) {
    size_t sel = m;
    for (size_t r = prow; r < m; ++r)
      if (!a[r][col].zero()) {
        sel = r;
        break;
      }
    if (sel == m) continue;
    std::swap(a[sel], a[prow]);
    std::swap(b[sel], b[prow]);
    for (size_t r = 0; r < m; ++r) {
      if (r == prow || a[r][col].zero()) continue;
      Frac f = a[r][col] / a[prow][col];
      for (size_t c = col; c < k; ++c) a[r][c] = a[r][c] - f * a[prow][c];
      b[r] = b[r] - f * b[prow];
    }
    pivot_of_col[col] = (int)prow;
    ++prow;
  }
  for (size_t col = 0; col < k; ++col)
    if (pivot_of_col[col] < 0) return false;  // underdetermined
  for (size_t r = prow; r < m; ++r)
    if (!b[r].zero()) return false;  // inconsistent
  x.assign(k, Frac());
  for (size_t col = 0; col < k; ++col) x[col] = b[pivot_of_col[col]] / a[pivot_of_col[col]][col];
  return true;
}

}  // namespace parcr

#endif
