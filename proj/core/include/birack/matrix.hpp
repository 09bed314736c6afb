#pragma once

#include <cstddef>
#include <vector>

#include "birack/ring.hpp"

namespace birack {

/// Dense matrix of ring elements. 0xk and kx0 matrices are legal.
class RingMatrix {
 public:
  RingMatrix(Ring ring, std::size_t rows, std::size_t cols);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  LaurentPoly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<LaurentPoly> a_;
};

/// Exact determinant. Dispatches to fraction-free Bareiss elimination when
/// the coefficient ring is a domain (Z or Z_p), and to cofactor expansion
/// with minor memoization otherwise. det of the 0x0 matrix is 1.
LaurentPoly determinant(const RingMatrix& m);

/// The two determinant paths, exposed for cross-checking.
LaurentPoly determinant_bareiss(const RingMatrix& m);
LaurentPoly determinant_cofactor(const RingMatrix& m);

/// Gcd over all size x size minors, returned normalized up to units.
/// size <= 0 gives 1 (unit ideal); size exceeding rows or cols gives 0
/// (empty minor set). A single minor (size == rows == cols) is supported
/// over any ring; multiple minors require gcd_univariate's ring support.
/// Minor enumeration is lexicographic in the row/column index subsets and
/// short-circuits once the accumulated gcd is a unit.
LaurentPoly minors_gcd(const RingMatrix& m, long long size);

/// Integer matrix, used for Smith normal form and Z_n nullspace counting.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  static IntMatrix identity(std::size_t n);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix& rhs) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

/// Smith normal form D = L * A * R with unimodular L, R and
/// d_1 | d_2 | ... | d_r >= 0 on the diagonal of D.
struct SmithForm {
  std::vector<Int> diag;  // nonzero diagonal entries, divisibility chain
  IntMatrix left, right;  // the transforms L and R
  IntMatrix d;            // full diagonal matrix, same shape as the input
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Number of vectors v over Z_n with A v = 0, for a constants-only matrix
/// over Z_n (n >= 2). Gaussian elimination for prime n; Smith normal form of
/// the integer lift otherwise. Throws ValidationError for polynomial entries
/// or modulus 0.
Int count_nullspace(const RingMatrix& m);

}  // namespace birack
