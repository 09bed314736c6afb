#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "birack/errors.hpp"

namespace birack {

/// Permutation of {0..n-1}, stored as its image table.
using Perm = std::vector<int>;

Perm perm_inverse(const Perm& p);
Perm perm_compose(const Perm& f, const Perm& g);  // (f o g)(x) = f(g(x))
int perm_order(const Perm& p);
/// Cycle notation with 1-based elements, e.g. "(1 2)"; "id" for the identity.
std::string perm_cycles(const Perm& p);

/// A finite birack: an invertible map B on pairs of {0..n-1} satisfying the
/// sideways-map, bijectivity and set-theoretic Yang-Baxter axioms. Elements
/// are 0-based in the API; files and reports use the 1-based convention of
/// the n x 2n operation-table matrix [U|L], where U[j][k] encodes
/// B_1(x_k, x_j) and L[j][k] encodes B_2(x_j, x_k).
class Birack {
 public:
  /// Validates the axioms and derives the sideways map, kink map pi, rank N
  /// and alpha. Tables are 1-based as in the file format. Throws
  /// ValidationError with the first failure (including the violating triple
  /// for Yang-Baxter).
  static Birack validate(const std::vector<std::vector<int>>& upper,
                         const std::vector<std::vector<int>>& lower,
                         int max_size = 64);

  int size() const { return n_; }

  /// B(x,y) = (B_1(x,y), B_2(x,y)).
  int b1(int x, int y) const { return b1_[x * n_ + y]; }
  int b2(int x, int y) const { return b2_[x * n_ + y]; }
  std::pair<int, int> apply(int x, int y) const { return {b1(x, y), b2(x, y)}; }
  /// Inverse of B as a map on pairs.
  std::pair<int, int> apply_inverse(int u, int v) const;

  /// Kink map pi, its order N (the birack rank), and the map alpha giving
  /// the intermediate semiarc label of a positive kink.
  const Perm& pi() const { return pi_; }
  int rank() const { return rank_; }
  const Perm& alpha() const { return alpha_; }

  /// Sideways map S on pairs, S(B_1(x,y), x) = (B_2(x,y), y).
  std::pair<int, int> sideways(int a, int b) const;
  std::pair<int, int> sideways_inverse(int a, int b) const;

  /// Solve B_1(x, y) = v for y at fixed x, and B_2(x, y) = u for x at
  /// fixed y. Both are bijections for a valid birack.
  int solve_b1(int x, int v) const { return b1_solve_[x * n_ + v]; }
  int solve_b2(int v, int y) const { return b2_solve_[v * n_ + y]; }

  /// The n x 2n table in file orientation (1-based entries).
  std::vector<std::vector<int>> table() const;

 private:
  Birack() = default;

  int n_ = 0;
  std::vector<int> b1_, b2_;            // row-major n x n
  std::vector<int> binv1_, binv2_;      // inverse of B on pairs
  std::vector<int> s1_, s2_;            // sideways map on pairs
  std::vector<int> sinv1_, sinv2_;      // inverse sideways map
  std::vector<int> b1_solve_, b2_solve_;
  Perm pi_, alpha_;
  int rank_ = 0;
};

/// File format: line 1 is n; then n lines of 2n integers, row j giving
/// U[j][1..n] then L[j][1..n]. '#' starts a comment line.
Birack load_birack(std::istream& in);
Birack load_birack_file(const std::string& path);
std::string birack_to_text(const Birack& b);

}  // namespace birack
