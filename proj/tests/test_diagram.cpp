#include "birack/diagram.hpp"

#include <set>

#include "doctest.h"

using namespace birack;

TEST_CASE("parse_gauss_code") {
  GaussCode g = parse_gauss_code("O1+U2+U1+O2+");
  REQUIRE(g.components.size() == 1);
  CHECK(g.components[0].size() == 4);
  CHECK(g.components[0][0].over);
  CHECK(g.components[0][1].sign == 1);

  CHECK_NOTHROW(parse_gauss_code("U1+O1+"));
  CHECK_NOTHROW(parse_gauss_code("O1+U2-U1+O2-"));
  CHECK_NOTHROW(parse_gauss_code("O1+U2+\nU1+O2+"));
  CHECK_NOTHROW(parse_gauss_code("# comment\n()\n"));
  CHECK_NOTHROW(parse_gauss_code(" O1+ U1+ "));

  CHECK_THROWS_AS(parse_gauss_code("O1+U1+O1+U1+"), ParseError);   // id four times
  CHECK_THROWS_AS(parse_gauss_code("O1+O1+"), ParseError);         // O twice
  CHECK_THROWS_AS(parse_gauss_code("O1+U1-"), ParseError);         // sign mismatch
  CHECK_THROWS_AS(parse_gauss_code("O1+"), ParseError);            // id once
  CHECK_THROWS_AS(parse_gauss_code("O1"), ParseError);             // missing sign
  CHECK_THROWS_AS(parse_gauss_code("X1+"), ParseError);            // bad kind
  CHECK_THROWS_AS(parse_gauss_code(""), ParseError);               // no components
  CHECK_THROWS_AS(parse_gauss_code("("), ParseError);
}

TEST_CASE("build_diagram structure") {
  LinkDiagram vt = build_diagram(parse_gauss_code("O1+U2+U1+O2+"));
  CHECK(vt.num_semiarcs == 4);
  CHECK(vt.crossings.size() == 2);
  CHECK(vt.num_components() == 1);
  CHECK(vt.writhe == std::vector<long long>{2});
  // successor is a single 4-cycle
  std::set<int> seen;
  int s = 0;
  for (int i = 0; i < 4; ++i) {
    seen.insert(s);
    s = vt.successor[s];
  }
  CHECK(s == 0);
  CHECK(seen.size() == 4);

  // slots: crossing 1 over at visit 1 (in 0, out 1), under at visit 3 (in 2, out 3)
  CHECK(vt.crossings[0].over_in == 0);
  CHECK(vt.crossings[0].over_out == 1);
  CHECK(vt.crossings[0].under_in == 2);
  CHECK(vt.crossings[0].under_out == 3);
  CHECK(vt.crossings[1].under_in == 1);
  CHECK(vt.crossings[1].under_out == 2);
  CHECK(vt.crossings[1].over_in == 3);
  CHECK(vt.crossings[1].over_out == 0);

  LinkDiagram loop = build_diagram(parse_gauss_code("()"));
  CHECK(loop.num_semiarcs == 1);
  CHECK(loop.crossings.empty());
  CHECK(loop.free_loops == std::vector<int>{0});
  CHECK(loop.successor[0] == 0);
  CHECK(loop.writhe == std::vector<long long>{0});

  LinkDiagram f8 = build_diagram(parse_gauss_code("O1-U2-O3+U4+O2-U1-O4+U3+"));
  CHECK(f8.num_semiarcs == 8);
  CHECK(f8.crossings.size() == 4);
  CHECK(f8.writhe == std::vector<long long>{0});

  // every semiarc appears exactly once as an in slot and once as an out slot
  std::multiset<int> ins, outs;
  for (const Crossing& c : f8.crossings) {
    ins.insert(c.over_in);
    ins.insert(c.under_in);
    outs.insert(c.over_out);
    outs.insert(c.under_out);
  }
  for (int i = 0; i < 8; ++i) {
    CHECK(ins.count(i) == 1);
    CHECK(outs.count(i) == 1);
  }

  // two-component link: crossings pair the components, writhes stay zero
  LinkDiagram hopf = build_diagram(parse_gauss_code("O1+U2+\nU1+O2+"));
  CHECK(hopf.num_semiarcs == 4);
  CHECK(hopf.num_components() == 2);
  CHECK(hopf.writhe == std::vector<long long>{0, 0});
  CHECK(hopf.component_of == std::vector<int>{0, 0, 1, 1});

  // determinism: same text, same structure
  LinkDiagram again = build_diagram(parse_gauss_code("O1-U2-O3+U4+O2-U1-O4+U3+"));
  CHECK(again.successor == f8.successor);
}

TEST_CASE("add_kinks") {
  LinkDiagram unknot = build_diagram(parse_gauss_code("()"));
  LinkDiagram k1 = add_kinks(unknot, 0, 1, +1);
  CHECK(k1.crossings.size() == 1);
  CHECK(k1.num_semiarcs == 2);
  CHECK(k1.writhe == std::vector<long long>{1});

  LinkDiagram vt = build_diagram(parse_gauss_code("O1+U2+U1+O2+"));
  LinkDiagram vtk = add_kinks(vt, 0, 1, +1);
  CHECK(vtk.crossings.size() == 3);
  CHECK(vtk.writhe == std::vector<long long>{3});

  LinkDiagram same = add_kinks(vt, 0, 0, +1);
  CHECK(same.num_semiarcs == vt.num_semiarcs);
  CHECK(gauss_code_to_text(same.code) == gauss_code_to_text(vt.code));

  LinkDiagram neg = add_kinks(vt, 0, 2, -1);
  CHECK(neg.writhe == std::vector<long long>{0});
  CHECK(neg.crossings.size() == 4);

  CHECK_THROWS_AS(add_kinks(vt, 1, 1, +1), ValidationError);
  CHECK_THROWS_AS(add_kinks(vt, 0, 1, 2), ValidationError);
}

TEST_CASE("framing_tile") {
  LinkDiagram vt = build_diagram(parse_gauss_code("O1+U2+U1+O2+"));
  auto tile1 = framing_tile(vt, 1);
  REQUIRE(tile1.size() == 1);
  CHECK(gauss_code_to_text(tile1[0].second.code) == gauss_code_to_text(vt.code));

  LinkDiagram f8 = build_diagram(parse_gauss_code("O1-U2-O3+U4+O2-U1-O4+U3+"));
  auto tile2 = framing_tile(f8, 2);
  REQUIRE(tile2.size() == 2);
  CHECK(tile2[0].first == std::vector<int>{0});
  CHECK(tile2[1].first == std::vector<int>{1});
  CHECK(tile2[0].second.writhe[0] % 2 == 0);
  CHECK((tile2[1].second.writhe[0] % 2 + 2) % 2 == 1);

  LinkDiagram hopf = build_diagram(parse_gauss_code("O1+U2+\nU1+O2+"));
  auto tile4 = framing_tile(hopf, 2);
  REQUIRE(tile4.size() == 4);
  std::set<std::vector<int>> ws;
  for (const auto& [w, d] : tile4) {
    ws.insert(w);
    for (std::size_t j = 0; j < 2; ++j) CHECK(((d.writhe[j] % 2) + 2) % 2 == w[j]);
  }
  CHECK(ws.size() == 4);
  CHECK(tile4[0].first == std::vector<int>{0, 0});
  CHECK(tile4[1].first == std::vector<int>{0, 1});
  CHECK(tile4[2].first == std::vector<int>{1, 0});
  CHECK(tile4[3].first == std::vector<int>{1, 1});
}
