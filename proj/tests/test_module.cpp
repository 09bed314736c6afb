#include "birack/module.hpp"

#include <algorithm>
#include <sstream>

#include "doctest.h"

using namespace birack;

namespace {

Birack b2() { return Birack::validate({{1, 1}, {2, 2}}, {{2, 2}, {1, 1}}); }

std::vector<LaurentPoly> parse_row(const Ring& ring, const std::vector<const char*>& cells) {
  std::vector<LaurentPoly> out;
  for (const char* c : cells) out.push_back(parse_poly(c, ring));
  return out;
}

BirackModule z5_module() {
  Ring ring = parse_ring_header("Z5");
  return validate_module(b2(), ring, parse_row(ring, {"1", "1", "1", "1"}),
                         parse_row(ring, {"2", "1", "4", "2"}),
                         parse_row(ring, {"2", "2", "3", "3"}));
}

BirackModule z5q_module_a() {
  Ring ring = parse_ring_header("Z5[q]");
  return validate_module(b2(), ring, parse_row(ring, {"q", "q", "q", "q"}),
                         parse_row(ring, {"1+2q", "2+4q", "3+q", "1+2q"}),
                         parse_row(ring, {"1", "1", "4", "4"}));
}

BirackModule z5q_module_b() {
  Ring ring = parse_ring_header("Z5[q]");
  return validate_module(b2(), ring, parse_row(ring, {"q", "q", "q", "q"}),
                         parse_row(ring, {"1+q", "3+3q", "2+2q", "1+q"}),
                         parse_row(ring, {"2", "2", "3", "3"}));
}

}  // namespace

TEST_CASE("the worked module structures validate") {
  CHECK_NOTHROW(z5_module());
  CHECK_NOTHROW(z5q_module_a());
  CHECK_NOTHROW(z5q_module_b());

  // One-element birack over Z[t,r]: [t | 1-tr | r]; the kink product is
  // t r + (1 - t r) = 1.
  Ring tr = parse_ring_header("Z[t,r]");
  Birack one = Birack::validate({{1}}, {{1}});
  BirackModule m = validate_module(one, tr, parse_row(tr, {"t"}), parse_row(tr, {"1-tr"}),
                                   parse_row(tr, {"r"}));
  CHECK(relation_value(m, 6, 0, 0, 0).is_zero());

  Ring t = parse_ring_header("Z[t]");
  CHECK_NOTHROW(validate_module(one, t, parse_row(t, {"t"}), parse_row(t, {"1-t"}),
                                parse_row(t, {"1"})));
}

TEST_CASE("module files load and validate") {
  Birack b = b2();
  BirackModule m = load_and_validate_module(b, std::string(BIRACK_DATA_DIR) + "/modules/m_z5.txt");
  CHECK(m.ring->header() == "Z5");
  BirackModule ma =
      load_and_validate_module(b, std::string(BIRACK_DATA_DIR) + "/modules/m_z5q_a.txt");
  CHECK(format_poly(ma.sv(1, 0)) == "3+q");

  // Round-trip through the text form.
  std::istringstream echo(module_to_text(ma));
  ModuleFile mf = load_module_text(echo);
  CHECK(mf.t == ma.t);
  CHECK(mf.s == ma.s);
  CHECK(mf.r == ma.r);
}

TEST_CASE("violations are reported with family and instance") {
  Ring ring = parse_ring_header("Z5");
  auto t = parse_row(ring, {"1", "1", "1", "1"});
  auto s = parse_row(ring, {"2", "1", "4", "2"});
  auto r = parse_row(ring, {"2", "2", "3", "3"});
  auto broken_s = s;
  broken_s[0] = parse_poly("3", ring);
  CHECK_THROWS_WITH_AS(validate_module(b2(), ring, t, broken_s, r), doctest::Contains("family"),
                       ValidationError);

  auto broken_t = t;
  broken_t[0] = parse_poly("0", ring);
  CHECK_THROWS_WITH_AS(validate_module(b2(), ring, broken_t, s, r),
                       doctest::Contains("not a unit"), ValidationError);

  CHECK_THROWS_AS(validate_module(b2(), ring, parse_row(ring, {"1"}), s, r), ValidationError);
}

TEST_CASE("relabeling the birack elements preserves validity") {
  // The switching birack commutes with the transposition of its elements, so
  // permuting a module's matrices by it must again give a module.
  BirackModule m = z5_module();
  const int n = 2;
  auto permute = [&](const std::vector<LaurentPoly>& a) {
    std::vector<LaurentPoly> out = a;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[(1 - i) * n + (1 - j)] = a[i * n + j];
    return out;
  };
  CHECK_NOTHROW(validate_module(b2(), m.ring, permute(m.t), permute(m.s), permute(m.r)));
}

TEST_CASE("rank-one biracks reduce the kink product to t r + s = 1") {
  Ring z3 = parse_ring_header("Z3");
  Birack one = Birack::validate({{1}}, {{1}});
  // t r + s = 1 over Z_3: solutions (t,r,s) with t,r units.
  int found = 0;
  for (int t = 1; t <= 2; ++t)
    for (int r = 1; r <= 2; ++r)
      for (int s = 0; s <= 2; ++s) {
        bool expect = (t * r + s) % 3 == 1;
        bool got = true;
        try {
          validate_module(one, z3,
                          {LaurentPoly::constant(z3, t)},
                          {LaurentPoly::constant(z3, s)},
                          {LaurentPoly::constant(z3, r)});
        } catch (const ValidationError&) {
          got = false;
        }
        CHECK(got == expect);
        if (got) ++found;
      }
  CHECK(found == 4);
}

TEST_CASE("search over the singleton birack finds exactly t r + s = 1") {
  Ring z2 = parse_ring_header("Z2");
  Birack one = Birack::validate({{1}}, {{1}});
  auto found = search_modules(one, z2, {.e_max = 0, .d_max = 0});
  REQUIRE(found.size() == 1);
  CHECK(format_poly(found[0].t[0]) == "1");
  CHECK(format_poly(found[0].s[0]) == "0");
  CHECK(format_poly(found[0].r[0]) == "1");
}

TEST_CASE("search finds the worked Z5[q] modules") {
  Ring ring = parse_ring_header("Z5[q]");
  auto found = search_modules(b2(), ring, {.e_max = 1, .d_max = 1});
  CHECK(found.size() > 0);
  auto contains = [&](const BirackModule& target) {
    return std::any_of(found.begin(), found.end(), [&](const BirackModule& m) {
      return m.t == target.t && m.s == target.s && m.r == target.r;
    });
  };
  CHECK(contains(z5q_module_a()));
  CHECK(contains(z5q_module_b()));

  // Deterministic order and re-validation of everything emitted.
  auto again = search_modules(b2(), ring, {.e_max = 1, .d_max = 1});
  REQUIRE(again.size() == found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    CHECK(found[i].t == again[i].t);
    CHECK(found[i].s == again[i].s);
    CHECK(found[i].r == again[i].r);
    CHECK_NOTHROW(validate_module(found[i].birack, found[i].ring, found[i].t, found[i].s,
                                  found[i].r));
  }

  // Limits truncate the same order.
  auto limited = search_modules(b2(), ring, {.e_max = 1, .d_max = 1}, 3);
  REQUIRE(limited.size() == std::min<std::size_t>(3, found.size()));
  for (std::size_t i = 0; i < limited.size(); ++i) CHECK(limited[i].t == found[i].t);
  CHECK(search_modules(b2(), ring, {.e_max = 1, .d_max = 1}, 0).empty());
}

TEST_CASE("search rejects unusable configurations") {
  CHECK_THROWS_AS(search_modules(b2(), parse_ring_header("Z[q]"), {}), UnsupportedError);
  CHECK_THROWS_AS(search_modules(b2(), parse_ring_header("Z5[q,r]"), {}), UnsupportedError);
  CHECK_THROWS_AS(search_modules(b2(), parse_ring_header("Z5[q]"), {.e_max = -1, .d_max = 0}),
                  ValidationError);
}
