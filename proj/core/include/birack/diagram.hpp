#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "birack/errors.hpp"

namespace birack {

/// One crossing visit in a signed Gauss code.
struct GaussToken {
  bool over = false;  // O or U
  int crossing = 0;   // id as written in the source text
  int sign = +1;      // +1 or -1
};

/// A signed Gauss code: one token list per component; a crossing-free
/// component ("()") has an empty list. Realizability in the plane is never
/// required - non-realizable codes are the virtual links.
struct GaussCode {
  std::vector<std::vector<GaussToken>> components;
};

/// Text grammar: one line per component, tokens (O|U)(digits)(+|-) separated
/// by optional whitespace, "()" for a crossing-free component, '#' comments.
GaussCode parse_gauss_code(std::string_view text);
std::string gauss_code_to_text(const GaussCode& code);

/// A classical crossing with its four semiarc slots (0-based semiarc ids).
struct Crossing {
  int sign = +1;
  int over_in = -1, over_out = -1;
  int under_in = -1, under_out = -1;
};

/// Combinatorial link diagram: semiarcs are the maximal segments between
/// consecutive classical-crossing visits in token order, numbered by
/// component order then traversal order from each component's basepoint.
/// A crossing-free component contributes a single free-loop semiarc.
struct LinkDiagram {
  GaussCode code;  // source tokens, kept for kink insertion
  int num_semiarcs = 0;
  std::vector<Crossing> crossings;
  std::vector<int> successor;     // semiarc -> next semiarc along orientation
  std::vector<int> component_of;  // semiarc -> component index
  std::vector<int> free_loops;    // semiarcs of crossing-free components
  std::vector<long long> writhe;  // per-component self-crossing sign sum

  std::size_t num_components() const { return code.components.size(); }
};

LinkDiagram build_diagram(const GaussCode& code);

/// Inserts `count` consecutive kinks of the given sign on the lowest-numbered
/// semiarc of the component (immediately before its first crossing visit) and
/// rebuilds. Positive kinks use the O-then-U token pattern, whose effect on
/// labels going through is the birack kink map.
LinkDiagram add_kinks(const LinkDiagram& d, int component, int count, int sign);

/// All framings over one tile: for each w in {0..N-1}^c (lexicographic), a
/// diagram obtained by adding (w_j - writhe_j mod N) positive kinks to
/// component j, so its writhe vector is congruent to w mod N.
std::vector<std::pair<std::vector<int>, LinkDiagram>> framing_tile(const LinkDiagram& d, int rank);

/// Link file: '#' comments, blank lines ignored, otherwise one component per
/// line. Component order in the file fixes component indices.
LinkDiagram load_link(std::istream& in);
LinkDiagram load_link_file(const std::string& path);

}  // namespace birack
