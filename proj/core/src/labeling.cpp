#include "birack/labeling.hpp"

#include <algorithm>

namespace birack {

namespace {

/// The source/target slot view that makes positive and negative crossings
/// uniform: labels satisfy over_tgt = B_2(over_src, under_src) and
/// under_tgt = B_1(over_src, under_src), with src = inputs at a positive
/// crossing and src = outputs at a negative one.
struct SlotView {
  int over_src, under_src, over_tgt, under_tgt;
};

SlotView slots(const Crossing& c) {
  if (c.sign > 0) return {c.over_in, c.under_in, c.over_out, c.under_out};
  return {c.over_out, c.under_out, c.over_in, c.under_in};
}

struct Propagator {
  const LinkDiagram& d;
  const Birack& b;
  std::vector<int> label;  // -1 = unknown

  /// Assigns semiarc a = v and propagates to a fixpoint.
  /// Returns false on contradiction; appends touched semiarcs to trail.
  bool assign(int a, int v, std::vector<int>& trail) {
    std::vector<int> queue;
    if (!set(a, v, trail, queue)) return false;
    while (!queue.empty()) {
      int s = queue.back();
      queue.pop_back();
      for (const Crossing& c : d.crossings) {
        if (c.over_in != s && c.under_in != s && c.over_out != s && c.under_out != s) continue;
        if (!propagate(c, trail, queue)) return false;
      }
    }
    return true;
  }

  bool set(int a, int v, std::vector<int>& trail, std::vector<int>& queue) {
    if (label[a] == v) return true;
    if (label[a] != -1) return false;
    label[a] = v;
    trail.push_back(a);
    queue.push_back(a);
    return true;
  }

  /// One crossing: fill whatever a solvable pair of known labels determines.
  bool propagate(const Crossing& c, std::vector<int>& trail, std::vector<int>& queue) {
    SlotView sv = slots(c);
    int os = label[sv.over_src], us = label[sv.under_src];
    int ot = label[sv.over_tgt], ut = label[sv.under_tgt];

    if (os >= 0 && us >= 0) {
      auto [u1, u2] = b.apply(os, us);  // (B_1, B_2)
      return set(sv.under_tgt, u1, trail, queue) && set(sv.over_tgt, u2, trail, queue);
    }
    if (ot >= 0 && ut >= 0) {
      auto [x, y] = b.apply_inverse(ut, ot);  // B(x,y) = (under_tgt, over_tgt)
      return set(sv.over_src, x, trail, queue) && set(sv.under_src, y, trail, queue);
    }
    if (os >= 0 && ut >= 0) {
      int y = b.solve_b1(os, ut);
      return set(sv.under_src, y, trail, queue);
    }
    if (us >= 0 && ot >= 0) {
      int x = b.solve_b2(ot, us);
      return set(sv.over_src, x, trail, queue);
    }
    return true;  // fewer than a determining pair known
  }
};

void dfs(Propagator& prop, std::vector<XLabeling>& out) {
  int seed = -1;
  for (std::size_t i = 0; i < prop.label.size(); ++i)
    if (prop.label[i] == -1) {
      seed = static_cast<int>(i);
      break;
    }
  if (seed == -1) {
    out.push_back({prop.label});
    return;
  }
  for (int v = 0; v < prop.b.size(); ++v) {
    std::vector<int> trail;
    if (prop.assign(seed, v, trail)) dfs(prop, out);
    for (int a : trail) prop.label[a] = -1;
  }
}

}  // namespace

bool labeling_valid(const LinkDiagram& d, const Birack& b, const XLabeling& f) {
  if (static_cast<int>(f.label.size()) != d.num_semiarcs) return false;
  for (int v : f.label)
    if (v < 0 || v >= b.size()) return false;
  for (const Crossing& c : d.crossings) {
    SlotView sv = slots(c);
    auto [u1, u2] = b.apply(f.label[sv.over_src], f.label[sv.under_src]);
    if (f.label[sv.under_tgt] != u1 || f.label[sv.over_tgt] != u2) return false;
  }
  return true;
}

std::vector<XLabeling> enumerate_labelings(const LinkDiagram& d, const Birack& b) {
  Propagator prop{d, b, std::vector<int>(d.num_semiarcs, -1)};
  std::vector<XLabeling> out;
  dfs(prop, out);
  std::sort(out.begin(), out.end(),
            [](const XLabeling& a, const XLabeling& b2) { return a.label < b2.label; });
  return out;
}

long long basic_counting(const LinkDiagram& d, const Birack& b) {
  return static_cast<long long>(enumerate_labelings(d, b).size());
}

long long integral_counting(const LinkDiagram& d, const Birack& b) {
  long long total = 0;
  for (const auto& [w, framed] : framing_tile(d, b.rank())) total += basic_counting(framed, b);
  return total;
}

}  // namespace birack
