#include "birack/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace birack {

RingMatrix::RingMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  a_.assign(rows_ * cols_, LaurentPoly(ring_));
}

// ---------------------------------------------------------------------------
// Determinants

LaurentPoly determinant_bareiss(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant requires a square matrix");
  if (!m.ring()->is_domain())
    throw UnsupportedError("Bareiss elimination requires a domain coefficient ring");
  const std::size_t n = m.rows();
  const Ring& ring = m.ring();
  if (n == 0) return LaurentPoly::constant(ring, 1);

  std::vector<LaurentPoly> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.push_back(m.at(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> LaurentPoly& { return a[i * n + j]; };

  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(ring, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t swap_row = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!at(i, k).is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row == k) return LaurentPoly(ring);  // zero column, det 0
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        auto q = num.divide_exact(prev);
        if (!q) throw Error("internal: Bareiss division was not exact");
        at(i, j) = std::move(*q);
      }
      at(i, k) = LaurentPoly(ring);
    }
    prev = at(k, k);
  }
  LaurentPoly det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

namespace {

/// Cofactor expansion over the remaining-column bitmask; the row index is
/// implied by how many columns are still in play.
LaurentPoly cofactor_rec(const RingMatrix& m, std::size_t row, unsigned mask,
                         std::map<unsigned, LaurentPoly>& memo) {
  const Ring& ring = m.ring();
  if (mask == 0) return LaurentPoly::constant(ring, 1);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  LaurentPoly acc(ring);
  int sign = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!(mask & (1u << j))) continue;
    if (!m.at(row, j).is_zero()) {
      LaurentPoly sub = cofactor_rec(m, row + 1, mask & ~(1u << j), memo);
      LaurentPoly term = m.at(row, j) * sub;
      if (sign < 0) term = -term;
      acc += term;
    }
    sign = -sign;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace

LaurentPoly determinant_cofactor(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(m.ring(), 1);
  if (n > 24) throw UnsupportedError("cofactor determinant limited to 24x24");
  std::map<unsigned, LaurentPoly> memo;
  return cofactor_rec(m, 0, (1u << n) - 1u, memo);
}

LaurentPoly determinant(const RingMatrix& m) {
  if (m.ring()->is_domain()) return determinant_bareiss(m);
  return determinant_cofactor(m);
}

// ---------------------------------------------------------------------------
// Minors

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

LaurentPoly minors_gcd(const RingMatrix& m, long long size) {
  const Ring& ring = m.ring();
  if (size <= 0) return LaurentPoly::constant(ring, 1);
  const auto k = static_cast<std::size_t>(size);
  if (k > m.rows() || k > m.cols()) return LaurentPoly(ring);  // no minors

  if (k == m.rows() && k == m.cols()) return normalize_up_to_units(determinant(m));

  // Multiple minors: gcd support required.
  auto row_sets = subsets(m.rows(), k);
  auto col_sets = subsets(m.cols(), k);
  LaurentPoly acc(ring);
  bool have = false;
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      RingMatrix sub(ring, k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
      LaurentPoly d = determinant(sub);
      if (!have) {
        // Routes through gcd so an unsupported ring is reported even when
        // only one minor ends up nonzero.
        std::vector<LaurentPoly> pair{d, LaurentPoly(ring)};
        acc = gcd_univariate(ring, pair);
        have = true;
      } else {
        std::vector<LaurentPoly> pair{acc, d};
        acc = gcd_univariate(ring, pair);
      }
      if (!acc.is_zero() && is_unit(acc).unit) return normalize_up_to_units(acc);
    }
  }
  return normalize_up_to_units(acc);
}

// ---------------------------------------------------------------------------
// Integer matrices / Smith normal form

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  a_.assign(rows_ * cols_, Int(0));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a.at(i, l) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, l) * b.at(l, j);
    }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm out{.diag = {}, .left = IntMatrix::identity(m), .right = IntMatrix::identity(n), .d = a};
  IntMatrix& d = out.d;
  IntMatrix& L = out.left;
  IntMatrix& R = out.right;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(d.at(i, k), d.at(j, k));
    for (std::size_t k = 0; k < m; ++k) std::swap(L.at(i, k), L.at(j, k));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m; ++k) std::swap(d.at(k, i), d.at(k, j));
    for (std::size_t k = 0; k < n; ++k) std::swap(R.at(k, i), R.at(k, j));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t k = 0; k < n; ++k) d.at(dst, k) += f * d.at(src, k);
    for (std::size_t k = 0; k < m; ++k) L.at(dst, k) += f * L.at(src, k);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t k = 0; k < m; ++k) d.at(k, dst) += f * d.at(k, src);
    for (std::size_t k = 0; k < n; ++k) R.at(k, dst) += f * R.at(k, src);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t k = 0; k < n; ++k) d.at(i, k) = -d.at(i, k);
    for (std::size_t k = 0; k < m; ++k) L.at(i, k) = -L.at(i, k);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t s = 0; s < steps; ++s) {
    while (true) {
      // Smallest nonzero |entry| in the trailing submatrix becomes the pivot.
      std::size_t pi = s, pj = s;
      Int best = 0;
      for (std::size_t i = s; i < m; ++i)
        for (std::size_t j = s; j < n; ++j) {
          Int v = d.at(i, j) < 0 ? Int(-d.at(i, j)) : d.at(i, j);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) break;  // trailing block is zero
      swap_rows(s, pi);
      swap_cols(s, pj);

      bool reduced = true;
      for (std::size_t i = s + 1; i < m; ++i)
        if (d.at(i, s) != 0) {
          add_row(i, s, -(d.at(i, s) / d.at(s, s)));
          if (d.at(i, s) != 0) reduced = false;
        }
      for (std::size_t j = s + 1; j < n; ++j)
        if (d.at(s, j) != 0) {
          add_col(j, s, -(d.at(s, j) / d.at(s, s)));
          if (d.at(s, j) != 0) reduced = false;
        }
      if (!reduced) continue;

      // Enforce the divisibility chain on the trailing block.
      bool divides_all = true;
      for (std::size_t i = s + 1; i < m && divides_all; ++i)
        for (std::size_t j = s + 1; j < n && divides_all; ++j)
          if (d.at(i, j) % d.at(s, s) != 0) {
            add_row(s, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (d.at(s, s) < 0) negate_row(s);
  }

  for (std::size_t s = 0; s < steps; ++s)
    if (d.at(s, s) != 0) out.diag.push_back(d.at(s, s));
  return out;
}

// ---------------------------------------------------------------------------
// Nullspace counting over Z_n

namespace {

Int pow_int(Int base, std::size_t exp) {
  Int out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

Int constant_of(const LaurentPoly& p) {
  if (p.is_zero()) return 0;
  if (p.term_count() != 1) throw ValidationError("matrix entry is not a constant");
  const auto& [e, c] = *p.terms().begin();
  for (auto x : e)
    if (x != 0) throw ValidationError("matrix entry is not a constant");
  return c;
}

}  // namespace

Int count_nullspace(const RingMatrix& m) {
  const Ring& ring = m.ring();
  const long long n = ring->modulus();
  if (n < 2) throw ValidationError("nullspace counting requires a modulus n >= 2");
  const std::size_t rows = m.rows(), cols = m.cols();

  if (ring->modulus_is_prime()) {
    // Gaussian elimination over F_n.
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ring->reduce(constant_of(m.at(i, j)));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
      std::size_t pivot = rank;
      while (pivot < rows && a[pivot][col] == 0) ++pivot;
      if (pivot == rows) continue;
      std::swap(a[pivot], a[rank]);
      Int inv = ring->coeff_inverse(a[rank][col]);
      for (std::size_t j = col; j < cols; ++j) a[rank][j] = ring->reduce(a[rank][j] * inv);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == rank || a[i][col] == 0) continue;
        Int f = a[i][col];
        for (std::size_t j = col; j < cols; ++j)
          a[i][j] = ring->reduce(a[i][j] - f * a[rank][j]);
      }
      ++rank;
    }
    return pow_int(Int(n), cols - rank);
  }

  // Composite n: lift to Z and use the Smith normal form. With D = L A R,
  // solutions of A v = 0 over Z_n correspond to D w = 0, giving
  // gcd(d_i, n) choices per diagonal entry and n per free column.
  IntMatrix lift(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) lift.at(i, j) = ring->reduce(constant_of(m.at(i, j)));
  SmithForm snf = smith_normal_form(lift);
  Int count = pow_int(Int(n), cols - snf.diag.size());
  for (const Int& di : snf.diag) count *= int_gcd(di, Int(n));
  return count;
}

}  // namespace birack
