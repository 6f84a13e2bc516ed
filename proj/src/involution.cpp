#include "parcr/involution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frac.hpp"

namespace parcr {

namespace {

// Validates the image table: an involutive, isometric, root-preserving map.
RootPerm validate_images(const RootSystem& rs, const RootPerm& images) {
  int n = rs.num_roots();
  PARCR_CHECK((int)images.size() == n, "involution: image table size mismatch");
  for (int i = 0; i < n; ++i)
    if (images[i] < 0 || images[i] >= n)
      fail(ErrorKind::NotRootPreserving, "involution maps a root outside the root system");
  for (int i = 0; i < n; ++i)
    if (images[images[i]] != i)
      fail(ErrorKind::NotInvolutive, "map squared is not the identity on the roots");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.pair_dot(images[i], images[j]) != rs.pair_dot(i, j))
        fail(ErrorKind::NotIsometric, "map does not preserve the inner product");
  // additivity on root sums follows from isometry + linearity of the source
  // map, but the permutation constructor has no matrix, so check it here
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto s = rs.sum(i, j);
      if (!s) continue;
      auto t = rs.sum(images[i], images[j]);
      if (!t || *t != images[*s])
        fail(ErrorKind::NotIsometric, "map is not additive on root sums");
    }
  return images;
}

}  // namespace

Involution Involution::from_matrix(const RootSystem& rs, std::vector<std::vector<long long>> m,
                                   long long den) {
  int d = rs.ambient_dim();
  if ((int)m.size() != d) fail(ErrorKind::ValidationError, "involution matrix: wrong row count");
  for (auto& row : m)
    if ((int)row.size() != d) fail(ErrorKind::ValidationError, "involution matrix: wrong row size");
  if (den == 0) fail(ErrorKind::ValidationError, "involution matrix: zero denominator");

  auto apply = [&](const Vec& v) -> std::optional<Vec> {
    Vec out(d, 0);
    for (int i = 0; i < d; ++i) {
      long long acc = 0;
      for (int j = 0; j < d; ++j) acc += m[i][j] * v[j];
      if (acc % den != 0) return std::nullopt;
      out[i] = acc / den;
    }
    return out;
  };

  Involution inv;
  inv.images_.resize(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) {
    auto w = apply(rs.root(i));
    std::optional<int> id = w ? rs.id_of(*w) : std::nullopt;
    if (!id) fail(ErrorKind::NotRootPreserving, "matrix maps a root outside the root system");
    inv.images_[i] = *id;
  }
  // involutive and isometric on the span of the roots
  for (int i = 0; i < rs.num_roots(); ++i)
    if (inv.images_[inv.images_[i]] != i)
      fail(ErrorKind::NotInvolutive, "matrix squared is not the identity on the root span");
  for (int i = 0; i < rs.num_roots(); ++i)
    for (int j = 0; j < rs.num_roots(); ++j)
      if (rs.pair_dot(inv.images_[i], inv.images_[j]) != rs.pair_dot(i, j))
        fail(ErrorKind::NotIsometric, "matrix does not preserve the inner product on roots");
  inv.matrix_ = std::move(m);
  inv.den_ = den;
  return inv;
}

Involution Involution::from_clauses(const RootSystem& rs, const std::string& spec) {
  int d = rs.ambient_dim();
  std::vector<std::vector<long long>> m(d, std::vector<long long>(d, 0));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  std::vector<char> mentioned(d, 0);

  std::stringstream ss(spec);
  std::string clause;
  while (std::getline(ss, clause, ',')) {
    auto strip = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      if (a == std::string::npos) return std::string();
      return s.substr(a, b - a + 1);
    };
    clause = strip(clause);
    if (clause.empty()) continue;
    size_t arrow = clause.find("->");
    if (arrow == std::string::npos)
      fail(ErrorKind::SyntaxError, "involution clause missing '->': " + clause);
    std::string lhs = strip(clause.substr(0, arrow));
    std::string rhs = strip(clause.substr(arrow + 2));
    auto parse_e = [&](const std::string& tok, int& idx, int& sign) {
      std::string t = tok;
      sign = 1;
      if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        if (t[0] == '-') sign = -1;
        t = t.substr(1);
      }
      if (t.size() < 2 || t[0] != 'e')
        fail(ErrorKind::SyntaxError, "expected e<i> in involution clause: " + tok);
      idx = std::stoi(t.substr(1)) - 1;
      if (idx < 0 || idx >= d)
        fail(ErrorKind::SyntaxError, "coordinate index out of range: " + tok);
    };
    int li, ls, ri, rsgn;
    parse_e(lhs, li, ls);
    if (ls != 1) fail(ErrorKind::SyntaxError, "left side of clause must be plain e<i>");
    parse_e(rhs, ri, rsgn);
    if (mentioned[li]) fail(ErrorKind::SyntaxError, "coordinate mapped twice: " + lhs);
    mentioned[li] = 1;
    for (int r = 0; r < d; ++r) m[r][li] = 0;
    m[ri][li] = rsgn;
  }
  return from_matrix(rs, std::move(m), 1);
}

Involution Involution::from_perm(const RootSystem& rs, const RootPerm& images) {
  Involution inv;
  inv.images_ = validate_images(rs, images);
  return inv;
}

Involution Involution::with_matrix(const RootSystem& rs) const {
  if (has_matrix()) return *this;
  int d = rs.ambient_dim(), r = rs.rank();
  const auto& simples = rs.canonical_chamber().simples;

  // basis of the orthogonal complement of the root span: kernel of the
  // simple-root pairing, one coordinate solved at a time
  std::vector<Vec> kernel;
  {
    // reduce the r x d system S x = 0 over the rationals
    std::vector<std::vector<Frac>> a(r, std::vector<Frac>(d));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < d; ++j) a[i][j] = Frac(rs.root(simples[i])[j]);
    std::vector<int> pivot_col;
    size_t prow = 0;
    for (int col = 0; col < d && (int)prow < r; ++col) {
      size_t sel = r;
      for (size_t row = prow; row < (size_t)r; ++row)
        if (!a[row][col].zero()) {
          sel = row;
          break;
        }
      if (sel == (size_t)r) continue;
      std::swap(a[sel], a[prow]);
      for (size_t row = 0; row < (size_t)r; ++row) {
        if (row == prow || a[row][col].zero()) continue;
        Frac f = a[row][col] / a[prow][col];
        for (int c = 0; c < d; ++c) a[row][c] = a[row][c] - f * a[prow][c];
      }
      pivot_col.push_back(col);
      ++prow;
    }
    PARCR_CHECK((int)pivot_col.size() == r, "simple roots do not have full rank");
    std::vector<char> is_pivot(d, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int freec = 0; freec < d; ++freec) {
      if (is_pivot[freec]) continue;
      std::vector<Frac> x(d);
      x[freec] = Frac(1);
      for (int p = r - 1; p >= 0; --p) {
        Frac acc(0);
        for (int c = pivot_col[p] + 1; c < d; ++c) acc = acc + a[p][c] * x[c];
        x[pivot_col[p]] = (Frac(0) - acc) / a[p][pivot_col[p]];
      }
      long long lcm = 1;
      for (auto& f : x) lcm = std::lcm(lcm, f.d);
      Vec k(d);
      for (int c = 0; c < d; ++c) k[c] = x[c].n * (lcm / x[c].d);
      kernel.push_back(k);
    }
  }

  // M maps each simple root to its image and fixes the kernel: solve the
  // transposed system column by column
  std::vector<Vec> f_cols, im_cols;
  for (int i = 0; i < r; ++i) {
    f_cols.push_back(rs.root(simples[i]));
    im_cols.push_back(rs.root(images_[simples[i]]));
  }
  for (auto& k : kernel) {
    f_cols.push_back(k);
    im_cols.push_back(k);
  }
  // For each ambient row i: M_i . f_col_j = im_col_j[i]  =>  F^T m_i = im_i
  std::vector<std::vector<long long>> m(d, std::vector<long long>(d));
  long long den = 1;
  std::vector<std::vector<Frac>> ft(d, std::vector<Frac>(d));
  for (int row = 0; row < d; ++row)
    for (int col = 0; col < d; ++col) ft[row][col] = Frac(f_cols[row][col]);
  std::vector<std::vector<Frac>> rows(d);
  for (int i = 0; i < d; ++i) {
    std::vector<Frac> rhs(d);
    for (int j = 0; j < d; ++j) rhs[j] = Frac(im_cols[j][i]);
    std::vector<Frac> x;
    PARCR_CHECK(solve_exact(ft, rhs, x), "involution matrix reconstruction failed");
    rows[i] = x;
    for (auto& f : x) den = std::lcm(den, f.d);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[i][j] = rows[i][j].n * (den / rows[i][j].d);
  Involution out = from_matrix(rs, std::move(m), den);
  PARCR_CHECK(out.images_ == images_, "reconstructed matrix changed the root action");
  return out;
}

std::optional<std::vector<std::pair<int, int>>> Involution::signed_permutation() const {
  if (matrix_.empty()) return std::nullopt;
  int d = (int)matrix_.size();
  std::vector<std::pair<int, int>> out;  // column i -> (row, sign)
  for (int i = 0; i < d; ++i) {
    int row = -1, sign = 0;
    for (int r = 0; r < d; ++r) {
      long long v = matrix_[r][i];
      if (v == 0) continue;
      if (row >= 0 || (v != den_ && v != -den_)) return std::nullopt;
      row = r;
      sign = v > 0 ? 1 : -1;
    }
    if (row < 0) return std::nullopt;
    out.emplace_back(row, sign);
  }
  return out;
}

ChamberFit chamber_kind(const RootSystem& rs, const Involution& inv, const Chamber& c) {
  bool any_complex = false, all_pos = true, all_neg = true;
  for (int s : c.simples) {
    if (inv.kind(rs, s) != RootKind::Complex) continue;
    any_complex = true;
    if (c.positive(inv.image(s)))
      all_neg = false;
    else
      all_pos = false;
  }
  ChamberFit f;
  if (!any_complex) {
    f.s_side = f.v_side = true;
  } else {
    f.s_side = all_pos;
    f.v_side = all_neg;
  }
  return f;
}

KindCount count_kinds(const RootSystem& rs, const Involution& inv) {
  KindCount k;
  for (int i = 0; i < rs.num_roots(); ++i) {
    switch (inv.kind(rs, i)) {
      case RootKind::Real: ++k.real; break;
      case RootKind::Imaginary: ++k.imaginary; break;
      case RootKind::Complex: ++k.complex_; break;
    }
  }
  return k;
}

RootSet real_roots(const RootSystem& rs, const Involution& inv) {
  RootSet s(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i)
    if (inv.kind(rs, i) == RootKind::Real) s.set(i);
  return s;
}

RootSet imaginary_roots(const RootSystem& rs, const Involution& inv) {
  RootSet s(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i)
    if (inv.kind(rs, i) == RootKind::Imaginary) s.set(i);
  return s;
}

RootSet complex_roots(const RootSystem& rs, const Involution& inv) {
  RootSet s(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i)
    if (inv.kind(rs, i) == RootKind::Complex) s.set(i);
  return s;
}

}  // namespace parcr
