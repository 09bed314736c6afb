#include "birack/invariant.hpp"

#include <algorithm>
#include <sstream>

namespace birack {

namespace {

struct SlotView {
  int over_src, under_src, over_tgt, under_tgt;
};

SlotView slots(const Crossing& c) {
  if (c.sign > 0) return {c.over_in, c.under_in, c.over_out, c.under_out};
  return {c.over_out, c.under_out, c.over_in, c.under_in};
}

}  // namespace

PresentationMatrix presentation_matrix(const LinkDiagram& d, const XLabeling& f,
                                       const BirackModule& m) {
  if (!labeling_valid(d, m.birack, f))
    throw ValidationError("labeling is not valid for the module's birack");
  const Ring& ring = m.ring;
  const std::size_t rows = 2 * d.crossings.size();
  PresentationMatrix out{RingMatrix(ring, rows, static_cast<std::size_t>(d.num_semiarcs)), {}};
  LaurentPoly minus_one = LaurentPoly::constant(ring, -1);
  for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
    SlotView sv = slots(d.crossings[ci]);
    const int x = f.label[sv.over_src];
    const int y = f.label[sv.under_src];
    RingMatrix& mat = out.mat;
    // t_{x,y} * under_src + s_{x,y} * over_src - under_tgt = 0
    mat.at(2 * ci, sv.under_src) += m.tv(x, y);
    mat.at(2 * ci, sv.over_src) += m.sv(x, y);
    mat.at(2 * ci, sv.under_tgt) += minus_one;
    out.provenance.push_back({static_cast<int>(ci), true});
    // r_{x,y} * over_src - over_tgt = 0
    mat.at(2 * ci + 1, sv.over_src) += m.rv(x, y);
    mat.at(2 * ci + 1, sv.over_tgt) += minus_one;
    out.provenance.push_back({static_cast<int>(ci), false});
  }
  return out;
}

Int bead_count(const LinkDiagram& d, const XLabeling& f, const BirackModule& m) {
  if (m.ring->arity() != 0)
    throw ValidationError("bead counting requires a constants module (no ring variables)");
  if (m.ring->modulus() < 2)
    throw ValidationError("bead counting requires a finite modulus n >= 2");
  return count_nullspace(presentation_matrix(d, f, m).mat);
}

std::string BeadMultiset::str() const {
  if (items.empty()) return "0";
  std::string out;
  for (const auto& [count, mult] : items) {
    if (!out.empty()) out += '+';
    if (mult != 1) out += std::to_string(mult);
    if (count != 0) {
      out += 'u';
      if (count != 1) out += "^" + count.str();
    } else if (mult == 1) {
      out += '1';
    }
  }
  return out;
}

BeadMultiset phi_beads(const LinkDiagram& d, const BirackModule& m) {
  std::vector<Int> counts;
  for (const auto& [w, framed] : framing_tile(d, m.birack.rank()))
    for (const XLabeling& f : enumerate_labelings(framed, m.birack))
      counts.push_back(bead_count(framed, f, m));
  std::sort(counts.begin(), counts.end());
  BeadMultiset out;
  for (const Int& c : counts) {
    if (!out.items.empty() && out.items.back().first == c)
      ++out.items.back().second;
    else
      out.items.emplace_back(c, 1);
  }
  return out;
}

std::string PolyMultiset::str() const {
  std::string out = "{ ";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(items[i].second) + " x (" + format_poly(items[i].first) + ")";
  }
  out += " }";
  return out;
}

bool PolyMultiset::operator==(const PolyMultiset& rhs) const {
  if (items.size() != rhs.items.size()) return false;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].second != rhs.items[i].second || !(items[i].first == rhs.items[i].first))
      return false;
  return true;
}

long long PolyMultiset::total() const {
  long long t = 0;
  for (const auto& [p, mult] : items) t += mult;
  return t;
}

PolyMultiset phi_delta(const LinkDiagram& d, const BirackModule& m, long long k) {
  if (k < 0) throw ValidationError("k must be nonnegative");
  std::vector<LaurentPoly> values;
  for (const auto& [w, framed] : framing_tile(d, m.birack.rank())) {
    for (const XLabeling& f : enumerate_labelings(framed, m.birack)) {
      PresentationMatrix pm = presentation_matrix(framed, f, m);
      long long size = static_cast<long long>(pm.mat.cols()) - k;
      values.push_back(minors_gcd(pm.mat, size));
    }
  }
  std::sort(values.begin(), values.end(), poly_less);
  PolyMultiset out;
  for (const LaurentPoly& v : values) {
    if (!out.items.empty() && out.items.back().first == v)
      ++out.items.back().second;
    else
      out.items.emplace_back(v, 1);
  }
  return out;
}

Birack singleton_birack() {
  return Birack::validate({{1}}, {{1}});
}

namespace {

LaurentPoly unique_entry(const PolyMultiset& ms, const Ring& ring) {
  if (ms.items.size() != 1 || ms.items.front().second != 1)
    throw Error("internal: singleton birack must produce a single labeling");
  (void)ring;
  return ms.items.front().first;
}

}  // namespace

LaurentPoly sawollek(const LinkDiagram& d) {
  Ring ring = make_ring(0, {{"t", true}, {"r", true}});
  Birack b = singleton_birack();
  std::vector<LaurentPoly> t{parse_poly("t", ring)};
  std::vector<LaurentPoly> s{parse_poly("1-tr", ring)};
  std::vector<LaurentPoly> r{parse_poly("r", ring)};
  BirackModule m = validate_module(b, ring, std::move(t), std::move(s), std::move(r));
  return unique_entry(phi_delta(d, m, 0), ring);
}

LaurentPoly alexander(const LinkDiagram& d, long long k) {
  if (k < 1) throw ValidationError("alexander requires k >= 1");
  Ring ring = make_ring(0, {{"t", true}});
  Birack b = singleton_birack();
  std::vector<LaurentPoly> t{parse_poly("t", ring)};
  std::vector<LaurentPoly> s{parse_poly("1-t", ring)};
  std::vector<LaurentPoly> r{parse_poly("1", ring)};
  BirackModule m = validate_module(b, ring, std::move(t), std::move(s), std::move(r));
  return unique_entry(phi_delta(d, m, k), ring);
}

}  // namespace birack
