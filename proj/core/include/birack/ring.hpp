#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "birack/errors.hpp"

namespace birack {

/// Arbitrary-precision integer used for all coefficients.
using Int = boost::multiprecision::cpp_int;

/// One polynomial variable. Laurent variables may carry negative exponents.
struct Variable {
  std::string name;
  bool laurent = true;
};

/// Exponent vector, one entry per ring variable (declared order).
using Exponents = std::vector<std::int64_t>;

/// A coefficient ring Z (modulus 0) or Z_n (modulus n >= 2) together with an
/// ordered list of named variables. The term order is graded-lexicographic
/// over the declared variable order and is fixed per ring, so equal inputs
/// always print identically.
class RingSpec {
 public:
  RingSpec(long long modulus, std::vector<Variable> vars);

  long long modulus() const { return modulus_; }
  const std::vector<Variable>& vars() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }

  bool modulus_is_prime() const { return prime_; }
  /// True for Z and Z_p with p prime: coefficient arithmetic is a domain.
  bool is_domain() const { return modulus_ == 0 || prime_; }

  /// Canonical representative of a coefficient: 0..n-1 for Z_n, identity for Z.
  Int reduce(Int c) const;
  bool coeff_is_unit(const Int& c) const;
  /// Inverse of a unit coefficient (throws ValidationError otherwise).
  Int coeff_inverse(const Int& c) const;
  /// Ascending list of the units of Z_n; {1, -1} for Z.
  std::vector<Int> coeff_units() const;

  bool same_as(const RingSpec& other) const;

  /// Header form, e.g. "Z[q]", "Z5[q]", "Z[t,r]", "Z5".
  std::string header() const;

  /// Index of a variable by name, if declared.
  std::optional<std::size_t> var_index(std::string_view name) const;

 private:
  long long modulus_;
  std::vector<Variable> vars_;
  bool prime_;
};

using Ring = std::shared_ptr<const RingSpec>;

/// Ring constructors / header text ("Z[q]", "Z5[q]", "Z[t,r]", "Z5", "Z").
/// Every variable listed in a header is Laurent-invertible.
Ring make_ring(long long modulus, std::vector<Variable> vars);
Ring parse_ring_header(std::string_view text);

/// Graded-lexicographic comparison: by total degree, ties broken
/// lexicographically in the declared variable order.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// A sparse multivariate Laurent polynomial with exact coefficients.
/// Canonical form: no zero coefficients stored; coefficients reduced to
/// 0..n-1 when the modulus is n > 0. Values are immutable in spirit: all
/// operations return fresh polynomials.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Int, GradedLexLess>;

  explicit LaurentPoly(Ring ring);
  static LaurentPoly constant(Ring ring, Int c);
  static LaurentPoly monomial(Ring ring, Int c, Exponents e);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }

  /// Adds c * x^e into this polynomial, keeping canonical form.
  void add_term(const Exponents& e, const Int& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& rhs) const;

  /// Largest / smallest term under the ring's term order. Polynomial must be nonzero.
  const std::pair<const Exponents, Int>& max_term() const;
  const std::pair<const Exponents, Int>& min_term() const;

  /// Exact division: returns p/divisor when divisor divides p exactly,
  /// std::nullopt otherwise. Requires a domain coefficient ring (Z or Z_p)
  /// unless the divisor's coefficients are units.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

 private:
  Ring ring_;
  TermMap terms_;
};

/// Total order on canonical polynomials of one ring (for multiset sorting).
bool poly_less(const LaurentPoly& a, const LaurentPoly& b);

/// Text grammar (exact):
///   POLY   := ["+"|"-"] TERM (("+"|"-") TERM)*
///   TERM   := INT | [INT "*"?] FACTOR+
///   FACTOR := VAR ["^" ["-"] INT]
/// Whitespace-insensitive; implicit and explicit multiplication both accepted.
LaurentPoly parse_poly(std::string_view text, const Ring& ring);

/// Deterministic ascending term-order printing, e.g. "1+2q+4q^2"; "0" for zero.
std::string format_poly(const LaurentPoly& p);

struct UnitCheck {
  bool unit = false;
  /// Inverse witness, valid when unit is true: p * inverse == 1.
  std::optional<LaurentPoly> inverse;
};

/// A polynomial is recognized as a unit when it is a single monomial in
/// Laurent variables whose coefficient is a unit of the coefficient ring
/// (any unit of Z_n; +-1 for Z). For Z and prime moduli this is the whole
/// unit group of the Laurent ring. Composite moduli admit exotic units with
/// nilpotent coefficients which are deliberately not recognized.
UnitCheck is_unit(const LaurentPoly& p);

/// Canonical representative of the unit-multiple class of p:
/// zero stays zero; otherwise the minimal term's (Laurent) monomial is
/// divided out, and the result is scaled by a coefficient unit - to make the
/// constant term 1 when the minimal coefficient is invertible, to make it
/// positive over Z, and to the lexicographically least coefficient sequence
/// over a composite modulus. Idempotent, and u*p normalizes like p for every
/// recognized unit u.
LaurentPoly normalize_up_to_units(const LaurentPoly& p);

/// Gcd of a list of univariate polynomials, up to units, returned via
/// normalize_up_to_units. Empty or all-zero input gives 0. Requires one
/// variable and a modulus that is 0 or prime. Over Z the integer content is
/// retained (gcd is defined up to sign only). Throws UnsupportedError for
/// multivariate rings or composite moduli.
LaurentPoly gcd_univariate(const Ring& ring, std::span<const LaurentPoly> ps);
/// Same, taking the ring from the first element (list must be nonempty).
LaurentPoly gcd_univariate(std::span<const LaurentPoly> ps);

/// Integer gcd helper (non-negative result).
Int int_gcd(Int a, Int b);

}  // namespace birack
