#pragma once

#include <vector>

#include "birack/birack.hpp"
#include "birack/diagram.hpp"

namespace birack {

/// A birack labeling of a diagram's semiarcs (0-based element per semiarc).
/// At every crossing, writing src for the input slots of a positive crossing
/// and for the output slots of a negative one (tgt for the other pair), the
/// labels satisfy (over_tgt, under_tgt) = (B_2, B_1)(over_src, under_src).
struct XLabeling {
  std::vector<int> label;
};

/// True when the assignment satisfies the constraint at every crossing.
bool labeling_valid(const LinkDiagram& d, const Birack& b, const XLabeling& f);

/// All labelings, by depth-first seeding and propagation through crossings
/// (forward with B, backward with B^{-1}, sideways through the solve maps),
/// emitted in lexicographic order of the label vector.
std::vector<XLabeling> enumerate_labelings(const LinkDiagram& d, const Birack& b);

/// Number of labelings of the diagram as framed (the basic invariant).
long long basic_counting(const LinkDiagram& d, const Birack& b);

/// Sum of basic counts over a complete framing tile mod the birack rank.
long long integral_counting(const LinkDiagram& d, const Birack& b);

}  // namespace birack
