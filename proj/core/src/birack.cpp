#include "birack/birack.hpp"

#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

namespace birack {

Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

Perm perm_compose(const Perm& f, const Perm& g) {
  Perm out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

int perm_order(const Perm& p) {
  const int n = static_cast<int>(p.size());
  Perm cur(p);
  Perm id(p.size());
  std::iota(id.begin(), id.end(), 0);
  int order = 1;
  while (cur != id) {
    cur = perm_compose(p, cur);
    ++order;
    if (order > n * n + 1) throw Error("internal: permutation order overflow");
  }
  return order;
}

std::string perm_cycles(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::string out;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      seen[j] = true;
      j = p[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Birack Birack::validate(const std::vector<std::vector<int>>& upper,
                        const std::vector<std::vector<int>>& lower, int max_size) {
  const int n = static_cast<int>(upper.size());
  if (n == 0) throw ValidationError("birack must have at least one element");
  if (n > max_size)
    throw ValidationError("birack size " + std::to_string(n) + " exceeds the limit " +
                          std::to_string(max_size));
  if (static_cast<int>(lower.size()) != n)
    throw ValidationError("U and L tables must have the same number of rows");

  Birack b;
  b.n_ = n;
  b.b1_.assign(n * n, 0);
  b.b2_.assign(n * n, 0);

  // Matrix convention: U[j][k] = B_1(x_k, x_j), L[j][k] = B_2(x_j, x_k).
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(upper[j].size()) != n || static_cast<int>(lower[j].size()) != n)
      throw ValidationError("table row " + std::to_string(j + 1) + " must have n entries per block");
    for (int k = 0; k < n; ++k) {
      int u = upper[j][k], l = lower[j][k];
      if (u < 1 || u > n || l < 1 || l > n)
        throw ValidationError("table entry out of range 1..n in row " + std::to_string(j + 1));
      b.b1_[k * n + j] = u - 1;
      b.b2_[j * n + k] = l - 1;
    }
  }

  // B must be a bijection of X x X.
  std::vector<int> hit(n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int key = b.b1(x, y) * n + b.b2(x, y);
      if (hit[key] >= 0)
        throw ValidationError("B is not a bijection: pairs (" + std::to_string(hit[key] / n + 1) +
                              "," + std::to_string(hit[key] % n + 1) + ") and (" +
                              std::to_string(x + 1) + "," + std::to_string(y + 1) +
                              ") share an image");
      hit[key] = x * n + y;
    }
  b.binv1_.assign(n * n, 0);
  b.binv2_.assign(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int key = b.b1(x, y) * n + b.b2(x, y);
      b.binv1_[key] = x;
      b.binv2_[key] = y;
    }

  // Sideways map, tabulated from S(B_1(x,y), x) = (B_2(x,y), y). The
  // relation is total and single-valued exactly when (x,y) -> (B_1(x,y), x)
  // is a bijection of pairs.
  b.s1_.assign(n * n, -1);
  b.s2_.assign(n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int key = b.b1(x, y) * n + x;
      if (b.s1_[key] >= 0)
        throw ValidationError("sideways map is not single-valued at (" +
                              std::to_string(b.b1(x, y) + 1) + "," + std::to_string(x + 1) + ")");
      b.s1_[key] = b.b2(x, y);
      b.s2_[key] = y;
    }
  for (int k = 0; k < n * n; ++k)
    if (b.s1_[k] < 0)
      throw ValidationError("sideways map is not total at (" + std::to_string(k / n + 1) + "," +
                            std::to_string(k % n + 1) + ")");
  std::fill(hit.begin(), hit.end(), -1);
  for (int k = 0; k < n * n; ++k) {
    int key = b.s1_[k] * n + b.s2_[k];
    if (hit[key] >= 0) throw ValidationError("sideways map is not a bijection");
    hit[key] = k;
  }
  b.sinv1_.assign(n * n, 0);
  b.sinv2_.assign(n * n, 0);
  for (int k = 0; k < n * n; ++k) {
    int key = b.s1_[k] * n + b.s2_[k];
    b.sinv1_[key] = k / n;
    b.sinv2_[key] = k % n;
  }

  // Axiom (ii): the diagonal components of S and S^{-1} are bijections.
  auto check_bijection = [n](const std::vector<int>& img, const char* what) {
    std::vector<bool> seen(n, false);
    for (int v : img) {
      if (seen[v])
        throw ValidationError(std::string("axiom ii fails: ") + what + " is not a bijection");
      seen[v] = true;
    }
  };
  Perm sd1(n), sd2(n), sid1(n), sid2(n);
  for (int x = 0; x < n; ++x) {
    sd1[x] = b.s1_[x * n + x];
    sd2[x] = b.s2_[x * n + x];
    sid1[x] = b.sinv1_[x * n + x];
    sid2[x] = b.sinv2_[x * n + x];
  }
  check_bijection(sd1, "(S Delta)_1");
  check_bijection(sd2, "(S Delta)_2");
  check_bijection(sid1, "(S^-1 Delta)_1");
  check_bijection(sid2, "(S^-1 Delta)_2");

  // Axiom (iii): set-theoretic Yang-Baxter on all triples.
  auto bxi = [&b](std::array<int, 3> t) {
    auto [u, v] = b.apply(t[0], t[1]);
    return std::array<int, 3>{u, v, t[2]};
  };
  auto ixb = [&b](std::array<int, 3> t) {
    auto [u, v] = b.apply(t[1], t[2]);
    return std::array<int, 3>{t[0], u, v};
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        std::array<int, 3> t{x, y, z};
        auto lhs = bxi(ixb(bxi(t)));
        auto rhs = ixb(bxi(ixb(t)));
        if (lhs != rhs)
          throw ValidationError("Yang-Baxter fails at triple (" + std::to_string(x + 1) + "," +
                                std::to_string(y + 1) + "," + std::to_string(z + 1) + ")");
      }

  // Solve tables: y from B_1(x,y) = v at fixed x, and x from B_2(x,y) = v at
  // fixed y. Both directions are bijective once the sideways axioms hold.
  b.b1_solve_.assign(n * n, 0);
  b.b2_solve_.assign(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      b.b1_solve_[x * n + b.b1(x, y)] = y;
      b.b2_solve_[b.b2(x, y) * n + y] = x;
    }

  // Kink data. pi = (S Delta)_1 (S Delta)_2^{-1} describes a positive kink;
  // alpha = (S^-1 Delta)_2^{-1} gives its intermediate label, which is the
  // pairing the module relations use.
  b.pi_ = perm_compose(sd1, perm_inverse(sd2));
  b.alpha_ = perm_inverse(sid2);
  b.rank_ = perm_order(b.pi_);
  return b;
}

std::pair<int, int> Birack::apply_inverse(int u, int v) const {
  int key = u * n_ + v;
  return {binv1_[key], binv2_[key]};
}

std::pair<int, int> Birack::sideways(int a, int b) const {
  int key = a * n_ + b;
  return {s1_[key], s2_[key]};
}

std::pair<int, int> Birack::sideways_inverse(int a, int b) const {
  int key = a * n_ + b;
  return {sinv1_[key], sinv2_[key]};
}

std::vector<std::vector<int>> Birack::table() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(2 * n_));
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) {
      out[j][k] = b1(k, j) + 1;
      out[j][n_ + k] = b2(j, k) + 1;
    }
  return out;
}

Birack load_birack(std::istream& in) {
  std::vector<long long> nums;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long v;
    while (ls >> v) nums.push_back(v);
  }
  if (nums.empty()) throw ParseError("birack file is empty");
  long long n = nums[0];
  if (n < 1 || n > 4096) throw ParseError("birack size must be in 1..4096");
  if (static_cast<long long>(nums.size()) != 1 + 2 * n * n)
    throw ParseError("birack file must contain n followed by n rows of 2n entries");
  std::vector<std::vector<int>> upper(n, std::vector<int>(n));
  std::vector<std::vector<int>> lower(n, std::vector<int>(n));
  std::size_t idx = 1;
  for (long long j = 0; j < n; ++j) {
    for (long long k = 0; k < n; ++k) upper[j][k] = static_cast<int>(nums[idx++]);
    for (long long k = 0; k < n; ++k) lower[j][k] = static_cast<int>(nums[idx++]);
  }
  return Birack::validate(upper, lower);
}

Birack load_birack_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open birack file '" + path + "'");
  try {
    return load_birack(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string birack_to_text(const Birack& b) {
  std::ostringstream out;
  out << b.size() << '\n';
  for (const auto& row : b.table()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace birack
