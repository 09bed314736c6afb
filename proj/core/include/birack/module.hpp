#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "birack/birack.hpp"
#include "birack/ring.hpp"

namespace birack {

/// A birack-module structure on a coefficient ring: matrices [T|S|R] of ring
/// elements t_{x,y}, s_{x,y}, r_{x,y} (row = first subscript) making all the
/// defining relation families vanish. T and R entries are units.
struct BirackModule {
  Birack birack;
  Ring ring;
  std::vector<LaurentPoly> t, s, r;  // row-major n x n

  const LaurentPoly& tv(int x, int y) const { return t[x * birack.size() + y]; }
  const LaurentPoly& sv(int x, int y) const { return s[x * birack.size() + y]; }
  const LaurentPoly& rv(int x, int y) const { return r[x * birack.size() + y]; }
};

/// Names of the relation families, indexed as reported by validate_module:
///   0 r-r        r_{x_y,z} r_{x,y} - r_{x_{z^y},y_z} r_{x,z^y}
///   1 t-r        t_{x_{z^y},y_z} r_{y,z} - r_{y^x,z^{x_y}} t_{x,y}
///   2 s-r        s_{x_{z^y},y_z} r_{x,z^y} - r_{y^x,z^{x_y}} s_{x,y}
///   3 t-t        t_{x,z^y} t_{y,z} - t_{y^x,z^{x_y}} t_{x_y,z}
///   4 t-s        t_{x,z^y} s_{y,z} - s_{y^x,z^{x_y}} t_{x,y}
///   5 s-exp      s_{x,z^y} - t_{y^x,z^{x_y}} s_{x_y,z} r_{x,y} - s_{y^x,z^{x_y}} s_{x,y}
///   6 kink-prod  1 - prod_k (t r + s) along the kink orbit of x
extern const char* const kRelationFamilyNames[7];

/// Evaluates one instance of a triple-indexed family (0..5, at x,y,z) or of
/// the kink-product family (6, at x; y and z ignored). Zero means satisfied.
LaurentPoly relation_value(const BirackModule& m, int family, int x, int y, int z);

/// Checks shapes, unit T/R entries and every relation instance. Throws
/// ValidationError naming the first violated family and its instance.
BirackModule validate_module(const Birack& b, const Ring& ring, std::vector<LaurentPoly> t,
                             std::vector<LaurentPoly> s, std::vector<LaurentPoly> r);

/// Bounds for the exhaustive module search: T and R entries range over the
/// monomial units c*q^e with c a coefficient-ring unit and |e| <= e_max;
/// S entries range over all polynomials with exponents in [0, d_max].
struct SearchShape {
  int e_max = 1;
  int d_max = 1;
};

/// Exhaustive search for module structures within the shape, in a fixed
/// deterministic (lexicographic in entry choices) order, truncated at limit.
/// Requires modulus n >= 2 and at most one ring variable.
std::vector<BirackModule> search_modules(const Birack& b, const Ring& ring,
                                         const SearchShape& shape,
                                         std::optional<std::uint64_t> limit = std::nullopt);

/// File format: line 1 is the ring header ("Z5[q]", "Z5", "Z[t,r]", ...);
/// line 2 is n; then n lines of 3n comma-separated polynomial expressions,
/// row i giving T[i][*], S[i][*], R[i][*]. '#' starts a comment line.
struct ModuleFile {
  Ring ring;
  int n = 0;
  std::vector<LaurentPoly> t, s, r;
};
ModuleFile load_module_text(std::istream& in);
ModuleFile load_module_file(const std::string& path);
std::string module_to_text(const BirackModule& m);

/// Loads, shapes-checks against the birack and validates in one step.
BirackModule load_and_validate_module(const Birack& b, const std::string& path);

}  // namespace birack
