#include "birack/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace birack {

namespace {

bool small_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t total_degree(const Exponents& e) {
  std::int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

}  // namespace

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// ---------------------------------------------------------------------------
// RingSpec

RingSpec::RingSpec(long long modulus, std::vector<Variable> vars)
    : modulus_(modulus), vars_(std::move(vars)), prime_(small_prime(modulus)) {
  if (modulus_ < 0 || modulus_ == 1)
    throw ValidationError("ring modulus must be 0 (integers) or n >= 2");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const std::string& name = vars_[i].name;
    if (name.empty()) throw ValidationError("variable names must be nonempty");
    for (char ch : name)
      if (ch < 'a' || ch > 'z')
        throw ValidationError("variable name '" + name + "' must use only a-z");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[j].name == name)
        throw ValidationError("duplicate variable name '" + name + "'");
  }
}

Int RingSpec::reduce(Int c) const {
  if (modulus_ == 0) return c;
  Int m = modulus_;
  c %= m;
  if (c < 0) c += m;
  return c;
}

bool RingSpec::coeff_is_unit(const Int& c) const {
  if (modulus_ == 0) return c == 1 || c == -1;
  return int_gcd(reduce(c), Int(modulus_)) == 1;
}

Int RingSpec::coeff_inverse(const Int& c) const {
  if (modulus_ == 0) {
    if (c == 1 || c == -1) return c;
    throw ValidationError("coefficient " + c.str() + " is not a unit of Z");
  }
  // Extended Euclid on (c mod n, n).
  Int a = reduce(c), m = modulus_;
  Int old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1)
    throw ValidationError("coefficient " + c.str() + " is not a unit mod " +
                          std::to_string(modulus_));
  return reduce(old_s);
}

std::vector<Int> RingSpec::coeff_units() const {
  std::vector<Int> out;
  if (modulus_ == 0) {
    out.push_back(1);
    out.push_back(-1);
    return out;
  }
  for (long long c = 1; c < modulus_; ++c)
    if (int_gcd(Int(c), Int(modulus_)) == 1) out.push_back(c);
  return out;
}

bool RingSpec::same_as(const RingSpec& other) const {
  if (this == &other) return true;
  if (modulus_ != other.modulus_ || vars_.size() != other.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name != other.vars_[i].name || vars_[i].laurent != other.vars_[i].laurent)
      return false;
  return true;
}

std::string RingSpec::header() const {
  std::string out = "Z";
  if (modulus_ > 0) out += std::to_string(modulus_);
  if (!vars_.empty()) {
    out += '[';
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (i) out += ',';
      out += vars_[i].name;
    }
    out += ']';
  }
  return out;
}

std::optional<std::size_t> RingSpec::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

Ring make_ring(long long modulus, std::vector<Variable> vars) {
  return std::make_shared<const RingSpec>(modulus, std::move(vars));
}

Ring parse_ring_header(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != 'Z')
    throw ParseError("ring header must start with 'Z'");
  ++i;
  long long modulus = 0;
  if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    long long m = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      m = m * 10 + (text[i] - '0');
      if (m > 1'000'000'000) throw ParseError("ring modulus too large");
      ++i;
    }
    modulus = m;
  }
  std::vector<Variable> vars;
  skip_ws();
  if (i < text.size() && text[i] == '[') {
    ++i;
    skip_ws();
    while (i < text.size() && text[i] != ']') {
      std::string name;
      while (i < text.size() && text[i] >= 'a' && text[i] <= 'z') name += text[i++];
      if (name.empty())
        throw ParseError("expected variable name at position " + std::to_string(i + 1));
      vars.push_back({name, true});
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      } else {
        break;
      }
    }
    if (i >= text.size() || text[i] != ']')
      throw ParseError("unterminated variable list in ring header");
    ++i;
  }
  skip_ws();
  if (i != text.size())
    throw ParseError("trailing characters in ring header at position " + std::to_string(i + 1));
  try {
    return make_ring(modulus, std::move(vars));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Term order

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::int64_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw ValidationError("polynomial requires a ring");
}

LaurentPoly LaurentPoly::constant(Ring ring, Int c) {
  LaurentPoly p(std::move(ring));
  p.add_term(Exponents(p.ring_->arity(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Ring ring, Int c, Exponents e) {
  LaurentPoly p(std::move(ring));
  p.add_term(e, c);
  return p;
}

bool LaurentPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return c == 1 && total_degree(e) == 0 &&
         std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

void LaurentPoly::add_term(const Exponents& e, const Int& c) {
  if (e.size() != ring_->arity())
    throw ValidationError("exponent vector length does not match ring arity");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 && !ring_->vars()[i].laurent)
      throw ValidationError("negative exponent on non-Laurent variable '" +
                            ring_->vars()[i].name + "'");
  Int v = ring_->reduce(c);
  if (v == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, v);
  } else {
    it->second = ring_->reduce(it->second + v);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(ring_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (!ring_->same_as(*rhs.ring_)) throw ValidationError("ring mismatch in addition");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  if (!ring_->same_as(*rhs.ring_)) throw ValidationError("ring mismatch in subtraction");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (!a.ring_->same_as(*b.ring_)) throw ValidationError("ring mismatch in multiplication");
  LaurentPoly out(a.ring_);
  Exponents e(a.ring_->arity());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
  return ring_->same_as(*rhs.ring_) && terms_ == rhs.terms_;
}

const std::pair<const Exponents, Int>& LaurentPoly::max_term() const {
  if (terms_.empty()) throw ValidationError("zero polynomial has no leading term");
  return *terms_.rbegin();
}

const std::pair<const Exponents, Int>& LaurentPoly::min_term() const {
  if (terms_.empty()) throw ValidationError("zero polynomial has no minimal term");
  return *terms_.begin();
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (!ring_->same_as(*divisor.ring_)) throw ValidationError("ring mismatch in division");
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly(ring_);

  const std::size_t nv = ring_->arity();
  // Shift both operands so every exponent is nonnegative; the quotient of the
  // shifted ordinary polynomials differs from the true quotient by the
  // monomial shift_d - shift_p, restored at the end (Laurent variables only).
  Exponents shift_p(nv, 0), shift_d(nv, 0);
  auto min_exps = [nv](const TermMap& terms, Exponents& out) {
    bool first = true;
    for (const auto& [e, c] : terms) {
      for (std::size_t i = 0; i < nv; ++i)
        out[i] = first ? e[i] : std::min(out[i], e[i]);
      first = false;
    }
  };
  min_exps(terms_, shift_p);
  min_exps(divisor.terms_, shift_d);
  for (std::size_t i = 0; i < nv; ++i) {
    if (!ring_->vars()[i].laurent) {
      shift_p[i] = 0;
      shift_d[i] = 0;
    }
  }
  auto shifted = [&](const LaurentPoly& p, const Exponents& shift) {
    LaurentPoly out(ring_);
    Exponents e(nv);
    for (const auto& [ep, c] : p.terms_) {
      for (std::size_t i = 0; i < nv; ++i) e[i] = ep[i] - shift[i];
      out.add_term(e, c);
    }
    return out;
  };
  LaurentPoly rem = shifted(*this, shift_p);
  LaurentPoly den = shifted(divisor, shift_d);

  const bool modular = ring_->modulus() > 0;
  const auto& [dlead_e, dlead_c] = den.max_term();
  std::optional<Int> dlead_inv;
  if (modular && ring_->coeff_is_unit(dlead_c)) dlead_inv = ring_->coeff_inverse(dlead_c);

  LaurentPoly quot(ring_);
  Exponents qe(nv);
  while (!rem.is_zero()) {
    const auto& [rlead_e, rlead_c] = rem.max_term();
    for (std::size_t i = 0; i < nv; ++i) {
      qe[i] = rlead_e[i] - dlead_e[i];
      if (qe[i] < 0) return std::nullopt;
    }
    Int qc;
    if (modular) {
      if (!dlead_inv) return std::nullopt;
      qc = ring_->reduce(rlead_c * *dlead_inv);
    } else {
      if (rlead_c % dlead_c != 0) return std::nullopt;
      qc = rlead_c / dlead_c;
    }
    LaurentPoly qterm = LaurentPoly::monomial(ring_, qc, qe);
    quot += qterm;
    rem -= qterm * den;
  }

  // Undo the shifts: result = quot * x^(shift_p - shift_d).
  Exponents back(nv);
  for (std::size_t i = 0; i < nv; ++i) back[i] = shift_p[i] - shift_d[i];
  return quot * LaurentPoly::monomial(ring_, 1, back);
}

bool poly_less(const LaurentPoly& a, const LaurentPoly& b) {
  GradedLexLess less;
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return true;
    if (less(ib->first, ia->first)) return false;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct PolyParser {
  std::string_view text;
  const Ring& ring;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos + 1));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char ch) {
    skip_ws();
    return pos < text.size() && text[pos] == ch;
  }

  Int parse_int() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    Int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  }

  /// Longest declared variable name starting at pos, if any.
  std::optional<std::size_t> match_var() {
    skip_ws();
    std::optional<std::size_t> best;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < ring->arity(); ++i) {
      const std::string& name = ring->vars()[i].name;
      if (name.size() > best_len && text.substr(pos, name.size()) == name) {
        best = i;
        best_len = name.size();
      }
    }
    if (best) pos += best_len;
    return best;
  }

  LaurentPoly parse_term() {
    skip_ws();
    Int coeff = 1;
    bool saw_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = parse_int();
      saw_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    Exponents exps(ring->arity(), 0);
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      if (std::islower(static_cast<unsigned char>(text[pos]))) {
        auto vi = match_var();
        if (!vi) fail(std::string("unknown variable '") + text[pos] + "'");
        std::int64_t exp = 1;
        if (peek('^')) {
          ++pos;
          skip_ws();
          bool neg = false;
          if (pos < text.size() && text[pos] == '-') {
            neg = true;
            ++pos;
          }
          Int v = parse_int();
          if (v > 1'000'000) fail("exponent too large");
          exp = static_cast<std::int64_t>(v);
          if (neg) exp = -exp;
        }
        if (exp < 0 && !ring->vars()[*vi].laurent)
          fail("negative exponent on non-Laurent variable '" + ring->vars()[*vi].name + "'");
        exps[*vi] += exp;
        saw_factor = true;
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          continue;
        }
        continue;
      }
      break;
    }
    if (!saw_coeff && !saw_factor) fail("expected term");
    return LaurentPoly::monomial(ring, coeff, std::move(exps));
  }

  LaurentPoly parse() {
    LaurentPoly out(ring);
    skip_ws();
    if (pos >= text.size()) fail("empty polynomial");
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    while (true) {
      LaurentPoly term = parse_term();
      if (sign < 0) term = -term;
      out += term;
      skip_ws();
      if (pos >= text.size()) break;
      if (text[pos] == '+')
        sign = 1;
      else if (text[pos] == '-')
        sign = -1;
      else
        fail("expected '+' or '-'");
      ++pos;
    }
    return out;
  }
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, const Ring& ring) {
  PolyParser parser{text, ring};
  return parser.parse();
}

std::string format_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const Ring& ring = p.ring();
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool neg = c < 0;  // only over Z; Z_n representatives are 0..n-1
    Int mag = neg ? Int(-c) : c;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mono += ring->vars()[i].name;
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string body;
    if (mono.empty())
      body = mag.str();
    else
      body = (mag == 1 ? std::string() : mag.str()) + mono;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? '-' : '+';
    }
    out += body;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Units and normalization

UnitCheck is_unit(const LaurentPoly& p) {
  UnitCheck out;
  if (p.term_count() != 1) return out;
  const auto& [e, c] = *p.terms().begin();
  const Ring& ring = p.ring();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0 && !ring->vars()[i].laurent) return out;
  if (!ring->coeff_is_unit(c)) return out;
  Exponents inv_e(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) inv_e[i] = -e[i];
  out.unit = true;
  out.inverse = LaurentPoly::monomial(ring, ring->coeff_inverse(c), std::move(inv_e));
  return out;
}

LaurentPoly normalize_up_to_units(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const Ring& ring = p.ring();
  const std::size_t nv = ring->arity();

  // Divide out the Laurent part of the minimal term's monomial.
  const auto& [min_e, min_c] = p.min_term();
  Exponents shift(nv, 0);
  for (std::size_t i = 0; i < nv; ++i)
    if (ring->vars()[i].laurent) shift[i] = -min_e[i];
  LaurentPoly base = p * LaurentPoly::monomial(ring, 1, shift);

  if (ring->modulus() == 0) {
    if (base.min_term().second < 0) base = -base;
    return base;
  }

  // Z_n: choose the unit multiple with the lexicographically least
  // coefficient sequence (ascending term order, canonical 0..n-1 values).
  auto coeff_seq_less = [](const LaurentPoly& a, const LaurentPoly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
      GradedLexLess less;
      if (less(ia->first, ib->first)) return true;   // earlier term present
      if (less(ib->first, ia->first)) return false;  // other has earlier term
      if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms().end() && ib != b.terms().end();
  };
  LaurentPoly best = base;
  for (const Int& u : ring->coeff_units()) {
    if (u == 1) continue;
    LaurentPoly cand = base * LaurentPoly::constant(ring, u);
    if (coeff_seq_less(cand, best)) best = cand;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Univariate gcd

namespace {

/// Dense nonnegative-exponent view of a univariate polynomial.
struct DensePoly {
  std::vector<Int> c;  // c[i] = coefficient of x^i

  bool zero() const { return c.empty(); }
  std::size_t deg() const { return c.size() - 1; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

DensePoly to_dense(const LaurentPoly& p) {
  DensePoly out;
  if (p.is_zero()) return out;
  std::int64_t lo = p.min_term().first[0];
  std::int64_t hi = p.max_term().first[0];
  std::int64_t base = std::min<std::int64_t>(lo, 0);
  out.c.assign(static_cast<std::size_t>(hi - base) + 1, 0);
  for (const auto& [e, coeff] : p.terms()) out.c[static_cast<std::size_t>(e[0] - base)] = coeff;
  // Clear trailing zero coefficients at the bottom: divide by x^k (unit).
  std::size_t k = 0;
  while (k < out.c.size() && out.c[k] == 0) ++k;
  out.c.erase(out.c.begin(), out.c.begin() + static_cast<std::ptrdiff_t>(k));
  out.trim();
  return out;
}

LaurentPoly from_dense(const DensePoly& d, const Ring& ring) {
  LaurentPoly out(ring);
  for (std::size_t i = 0; i < d.c.size(); ++i)
    out.add_term(Exponents{static_cast<std::int64_t>(i)}, d.c[i]);
  return out;
}

DensePoly mod_p(DensePoly a, const Int& p) {
  for (auto& x : a.c) {
    x %= p;
    if (x < 0) x += p;
  }
  a.trim();
  return a;
}

/// Euclidean gcd over F_p[x].
DensePoly gcd_field(DensePoly a, DensePoly b, const Int& p, const RingSpec& ring) {
  a = mod_p(std::move(a), p);
  b = mod_p(std::move(b), p);
  while (!b.zero()) {
    // a mod b by long division.
    Int lead_inv = ring.coeff_inverse(b.c.back());
    while (!a.zero() && a.c.size() >= b.c.size()) {
      Int q = (a.c.back() * lead_inv) % p;
      std::size_t off = a.c.size() - b.c.size();
      for (std::size_t i = 0; i < b.c.size(); ++i) {
        a.c[off + i] = (a.c[off + i] - q * b.c[i]) % p;
        if (a.c[off + i] < 0) a.c[off + i] += p;
      }
      a.trim();
    }
    std::swap(a, b);
  }
  return a;
}

Int dense_content(const DensePoly& a) {
  Int g = 0;
  for (const auto& x : a.c) g = int_gcd(g, x);
  return g;
}

DensePoly dense_div_int(DensePoly a, const Int& d) {
  for (auto& x : a.c) x /= d;
  return a;
}

/// Primitive-PRS gcd over Z[x]; inputs need not be primitive.
DensePoly gcd_integers(DensePoly a, DensePoly b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  Int cont = int_gcd(dense_content(a), dense_content(b));
  a = dense_div_int(std::move(a), dense_content(a));
  b = dense_div_int(std::move(b), dense_content(b));
  if (a.c.size() < b.c.size()) std::swap(a, b);
  while (!b.zero()) {
    // Pseudo-remainder of a by b.
    Int lead = b.c.back();
    DensePoly r = a;
    std::size_t steps = r.c.size() - b.c.size() + 1;
    for (std::size_t s = 0; s < steps && !r.zero() && r.c.size() >= b.c.size(); ++s) {
      Int q = r.c.back();
      std::size_t off = r.c.size() - b.c.size();
      for (auto& x : r.c) x *= lead;
      for (std::size_t i = 0; i < b.c.size(); ++i) r.c[off + i] -= q * b.c[i];
      r.trim();
    }
    Int rc = dense_content(r);
    if (rc != 0) r = dense_div_int(std::move(r), rc);
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& x : a.c) x *= cont;
  return a;
}

}  // namespace

LaurentPoly gcd_univariate(std::span<const LaurentPoly> ps) {
  if (ps.empty()) throw ValidationError("gcd of an empty list needs an explicit ring");
  return gcd_univariate(ps.front().ring(), ps);
}

LaurentPoly gcd_univariate(const Ring& ring, std::span<const LaurentPoly> ps) {
  if (ring->arity() != 1)
    throw UnsupportedError("gcd requires a univariate ring, got " + ring->header());
  if (ring->modulus() != 0 && !ring->modulus_is_prime())
    throw UnsupportedError("gcd over composite modulus " + std::to_string(ring->modulus()) +
                           " is not defined here");
  for (const auto& p : ps)
    if (!p.ring()->same_as(*ring)) throw ValidationError("ring mismatch in gcd");

  DensePoly acc;
  bool prime = ring->modulus() > 0;
  Int p = ring->modulus();
  for (const auto& q : ps) {
    DensePoly d = to_dense(q);
    if (d.zero()) continue;
    if (acc.zero())
      acc = std::move(d);
    else
      acc = prime ? gcd_field(std::move(acc), std::move(d), p, *ring)
                  : gcd_integers(std::move(acc), std::move(d));
    if (acc.c.size() == 1 && ring->coeff_is_unit(acc.c[0])) break;  // unit gcd
  }
  return normalize_up_to_units(from_dense(acc, ring));
}

}  // namespace birack
