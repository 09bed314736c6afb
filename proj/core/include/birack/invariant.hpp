#pragma once

#include <string>
#include <vector>

#include "birack/labeling.hpp"
#include "birack/matrix.hpp"
#include "birack/module.hpp"

namespace birack {

/// Presentation matrix of the module of bead labelings of an X-labeled
/// diagram: one column per semiarc, two rows per classical crossing. With
/// (x, y) the (over_src, under_src) labels of a crossing, the rows are
///   t_{x,y} * under_src + s_{x,y} * over_src - under_tgt
///   r_{x,y} * over_src - over_tgt
/// matching the bead rules c = t b + s a and d = r a at positive crossings
/// and their role-exchanged form at negative ones.
struct PresentationMatrix {
  RingMatrix mat;
  struct Row {
    int crossing;    // index into diagram.crossings
    bool bead_rule;  // true: t/s row, false: r row
  };
  std::vector<Row> provenance;
};

PresentationMatrix presentation_matrix(const LinkDiagram& d, const XLabeling& f,
                                       const BirackModule& m);

/// Size of the bead-labeling module: the nullspace count of the presentation
/// matrix. Requires a constants module over Z_n.
Int bead_count(const LinkDiagram& d, const XLabeling& f, const BirackModule& m);

/// Multiset of bead counts over all labelings of a complete framing tile,
/// printed as a polynomial in u, e.g. "2u^25".
struct BeadMultiset {
  std::vector<std::pair<Int, long long>> items;  // (count, multiplicity), ascending
  std::string str() const;
  bool operator==(const BeadMultiset&) const = default;
};
BeadMultiset phi_beads(const LinkDiagram& d, const BirackModule& m);

/// Multiset of normalized polynomials with positive multiplicities, sorted
/// by the ring's term order; prints as "{ 2 x (1+q+3q^2) }".
struct PolyMultiset {
  std::vector<std::pair<LaurentPoly, long long>> items;
  std::string str() const;
  bool operator==(const PolyMultiset& rhs) const;
  long long total() const;
};

/// The k-th polynomial enhancement: for every labeling f over the framing
/// tile, the gcd of the (g-k)-minors of its presentation matrix (g = column
/// count), normalized up to units, collected as a multiset. k >= 1 requires
/// a ring with univariate gcd support.
PolyMultiset phi_delta(const LinkDiagram& d, const BirackModule& m, long long k);

/// Generalized Alexander polynomial: the unique entry of phi_delta with the
/// one-element birack and the module [t | 1-tr | r] over Z[t,r]. Vanishes on
/// classical links.
LaurentPoly sawollek(const LinkDiagram& d);

/// k-th Alexander polynomial via the one-element birack and [t | 1-t | 1]
/// over Z[t]; k = 1 gives the classical Alexander polynomial of a knot.
LaurentPoly alexander(const LinkDiagram& d, long long k = 1);

/// The fixed one-element birack shared by the specializations.
Birack singleton_birack();

}  // namespace birack
