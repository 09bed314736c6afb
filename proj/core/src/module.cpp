#include "birack/module.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace birack {

const char* const kRelationFamilyNames[7] = {"r-r", "t-r", "s-r", "t-t",
                                             "t-s", "s-exp", "kink-product"};

namespace {

/// Evaluates one relation instance through an entry accessor
/// get(kind, i, j) with kind 0 = t, 1 = s, 2 = r.
template <class Get>
LaurentPoly eval_relation(const Birack& b, const Ring& ring, Get&& get, int family, int x, int y,
                          int z) {
  auto t = [&](int i, int j) { return get(0, i, j); };
  auto s = [&](int i, int j) { return get(1, i, j); };
  auto r = [&](int i, int j) { return get(2, i, j); };

  if (family == 6) {
    LaurentPoly prod = LaurentPoly::constant(ring, 1);
    int u = x;
    for (int k = 0; k < b.rank(); ++k) {
      int a = b.alpha()[u];
      prod = prod * (t(u, a) * r(u, a) + s(u, a));
      u = b.pi()[u];
    }
    return LaurentPoly::constant(ring, 1) - prod;
  }

  const int x_y = b.b2(x, y);
  const int y_up_x = b.b1(x, y);
  const int z_up_y = b.b1(y, z);
  const int y_z = b.b2(y, z);
  const int x_zy = b.b2(x, z_up_y);
  const int z_xy = b.b1(x_y, z);

  switch (family) {
    case 0:
      return r(x_y, z) * r(x, y) - r(x_zy, y_z) * r(x, z_up_y);
    case 1:
      return t(x_zy, y_z) * r(y, z) - r(y_up_x, z_xy) * t(x, y);
    case 2:
      return s(x_zy, y_z) * r(x, z_up_y) - r(y_up_x, z_xy) * s(x, y);
    case 3:
      return t(x, z_up_y) * t(y, z) - t(y_up_x, z_xy) * t(x_y, z);
    case 4:
      return t(x, z_up_y) * s(y, z) - s(y_up_x, z_xy) * t(x, y);
    case 5:
      return s(x, z_up_y) - t(y_up_x, z_xy) * s(x_y, z) * r(x, y) - s(y_up_x, z_xy) * s(x, y);
    default:
      throw Error("internal: unknown relation family");
  }
}

}  // namespace

LaurentPoly relation_value(const BirackModule& m, int family, int x, int y, int z) {
  auto get = [&m](int kind, int i, int j) -> const LaurentPoly& {
    const int n = m.birack.size();
    switch (kind) {
      case 0:
        return m.t[i * n + j];
      case 1:
        return m.s[i * n + j];
      default:
        return m.r[i * n + j];
    }
  };
  return eval_relation(m.birack, m.ring, get, family, x, y, z);
}

BirackModule validate_module(const Birack& b, const Ring& ring, std::vector<LaurentPoly> t,
                             std::vector<LaurentPoly> s, std::vector<LaurentPoly> r) {
  const int n = b.size();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  if (t.size() != nn || s.size() != nn || r.size() != nn)
    throw ValidationError("module matrices must be n x n");
  for (const auto* mat : {&t, &s, &r})
    for (const auto& p : *mat)
      if (!p.ring()->same_as(*ring)) throw ValidationError("module entry in the wrong ring");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_unit(t[i * n + j]).unit)
        throw ValidationError("t entry at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") is not a unit: " +
                              format_poly(t[i * n + j]));
      if (!is_unit(r[i * n + j]).unit)
        throw ValidationError("r entry at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") is not a unit: " +
                              format_poly(r[i * n + j]));
    }

  BirackModule m{b, ring, std::move(t), std::move(s), std::move(r)};
  for (int family = 0; family < 6; ++family)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          LaurentPoly v = relation_value(m, family, x, y, z);
          if (!v.is_zero())
            throw ValidationError(std::string("relation family ") + kRelationFamilyNames[family] +
                                  " violated at (x,y,z) = (" + std::to_string(x + 1) + "," +
                                  std::to_string(y + 1) + "," + std::to_string(z + 1) +
                                  "): " + format_poly(v));
        }
  for (int x = 0; x < n; ++x) {
    LaurentPoly v = relation_value(m, 6, x, 0, 0);
    if (!v.is_zero())
      throw ValidationError(std::string("relation family ") + kRelationFamilyNames[6] +
                            " violated at x = " + std::to_string(x + 1) + ": " + format_poly(v));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Search

std::vector<BirackModule> search_modules(const Birack& b, const Ring& ring,
                                         const SearchShape& shape,
                                         std::optional<std::uint64_t> limit) {
  const int n = b.size();
  if (ring->modulus() < 2)
    throw UnsupportedError("module search needs a finite coefficient ring (modulus >= 2)");
  if (ring->arity() > 1)
    throw UnsupportedError("module search supports at most one ring variable");
  if (shape.e_max < 0 || shape.d_max < 0)
    throw ValidationError("search shape produced an empty candidate set");

  const bool has_var = ring->arity() == 1;

  // T/R candidates: monomial units c*q^e, |e| <= e_max; lexicographic in (e, c).
  std::vector<LaurentPoly> unit_cands;
  for (int e = has_var ? -shape.e_max : 0; e <= (has_var ? shape.e_max : 0); ++e)
    for (const Int& c : ring->coeff_units())
      unit_cands.push_back(has_var ? LaurentPoly::monomial(ring, c, {e})
                                   : LaurentPoly::constant(ring, c));

  // S candidates: all coefficient vectors over exponents 0..d_max,
  // lexicographic with the constant coefficient most significant.
  std::vector<LaurentPoly> s_cands;
  {
    const int width = has_var ? shape.d_max + 1 : 1;
    std::vector<long long> coeffs(width, 0);
    while (true) {
      LaurentPoly p(ring);
      for (int i = 0; i < width; ++i)
        p.add_term(has_var ? Exponents{i} : Exponents{}, Int(coeffs[i]));
      s_cands.push_back(std::move(p));
      int pos = width - 1;
      while (pos >= 0 && coeffs[pos] == ring->modulus() - 1) coeffs[pos--] = 0;
      if (pos < 0) break;
      ++coeffs[pos];
    }
  }

  // Flat slot ids: T entries 0..nn-1 row-major, then R, then S.
  const int nn = n * n;
  const int total = 3 * nn;
  std::vector<LaurentPoly> entry(total, LaurentPoly(ring));
  auto get_entry = [&](int kind_tsr, int i, int j) -> const LaurentPoly& {
    // kind_tsr: 0=t, 1=s, 2=r -> slot blocks 0, 2, 1.
    static const int block[3] = {0, 2, 1};
    return entry[block[kind_tsr] * nn + i * n + j];
  };

  // Relation instances with their support slots.
  struct Instance {
    int family, x, y, z;
    std::vector<int> support;
  };
  std::vector<Instance> instances;
  {
    auto support_of = [&](int family, int x, int y, int z) {
      std::vector<int> slots;
      auto recorder = [&](int kind_tsr, int i, int j) -> const LaurentPoly& {
        static const int block[3] = {0, 2, 1};
        int slot = block[kind_tsr] * nn + i * n + j;
        if (std::find(slots.begin(), slots.end(), slot) == slots.end()) slots.push_back(slot);
        return entry[0];  // value irrelevant while recording
      };
      eval_relation(b, ring, recorder, family, x, y, z);
      return slots;
    };
    for (int family = 0; family < 6; ++family)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            instances.push_back({family, x, y, z, support_of(family, x, y, z)});
    for (int x = 0; x < n; ++x) instances.push_back({6, x, 0, 0, support_of(6, x, 0, 0)});
  }

  // Assignment order: T and R slots first (smaller candidate sets), then the
  // S slots greedily picked so each new slot completes as many relation
  // instances as possible. Pruning effectiveness depends on it; the output
  // order does not (results are sorted afterwards).
  std::vector<int> order;
  std::vector<bool> placed(total, false);
  for (int s = 0; s < 2 * nn; ++s) {
    order.push_back(s);
    placed[s] = true;
  }
  while (static_cast<int>(order.size()) < total) {
    int best = -1, best_count = -1;
    for (int cand = 2 * nn; cand < total; ++cand) {
      if (placed[cand]) continue;
      int count = 0;
      for (const auto& inst : instances) {
        bool complete = true, uses = false;
        for (int s : inst.support) {
          if (s == cand)
            uses = true;
          else if (!placed[s])
            complete = false;
        }
        if (uses && complete) ++count;
      }
      if (count > best_count) {
        best = cand;
        best_count = count;
      }
    }
    order.push_back(best);
    placed[best] = true;
  }

  // Each instance fires at the latest of its support slots.
  std::vector<int> rank_of(total);
  for (int pos = 0; pos < total; ++pos) rank_of[order[pos]] = pos;
  std::vector<std::vector<const Instance*>> triggered(total);
  for (const auto& inst : instances) {
    if (inst.support.empty()) continue;
    int fire = 0;
    for (int s : inst.support) fire = std::max(fire, rank_of[s]);
    triggered[fire].push_back(&inst);
  }

  std::vector<BirackModule> out;
  std::function<void(int)> dfs = [&](int pos) {
    if (pos == total) {
      std::vector<LaurentPoly> t(entry.begin(), entry.begin() + nn);
      std::vector<LaurentPoly> r(entry.begin() + nn, entry.begin() + 2 * nn);
      std::vector<LaurentPoly> s(entry.begin() + 2 * nn, entry.end());
      out.push_back(validate_module(b, ring, std::move(t), std::move(s), std::move(r)));
      return;
    }
    const int slot = order[pos];
    const auto& cands = slot < 2 * nn ? unit_cands : s_cands;
    for (const auto& cand : cands) {
      entry[slot] = cand;
      bool ok = true;
      for (const Instance* inst : triggered[pos]) {
        if (!eval_relation(b, ring, get_entry, inst->family, inst->x, inst->y, inst->z)
                 .is_zero()) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(pos + 1);
    }
  };
  if (limit && *limit == 0) return out;
  dfs(0);

  // Canonical output order: lexicographic in the (T, S, R) entry choices.
  auto tuple_less = [](const BirackModule& a, const BirackModule& c) {
    for (auto [lhs, rhs] : {std::pair{&a.t, &c.t}, std::pair{&a.s, &c.s}, std::pair{&a.r, &c.r}})
      for (std::size_t i = 0; i < lhs->size(); ++i) {
        if (poly_less((*lhs)[i], (*rhs)[i])) return true;
        if (poly_less((*rhs)[i], (*lhs)[i])) return false;
      }
    return false;
  };
  std::sort(out.begin(), out.end(), tuple_less);
  if (limit && out.size() > *limit) out.erase(out.begin() + static_cast<long>(*limit), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Files

ModuleFile load_module_text(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    bool blank = std::all_of(line.begin(), line.end(),
                             [](unsigned char ch) { return std::isspace(ch); });
    if (!blank) lines.push_back(line);
  }
  if (lines.size() < 2) throw ParseError("module file needs a ring header and a size line");
  ModuleFile mf;
  mf.ring = parse_ring_header(lines[0]);
  try {
    mf.n = std::stoi(lines[1]);
  } catch (...) {
    throw ParseError("module file line 2 must be the birack size");
  }
  if (mf.n < 1) throw ParseError("module size must be positive");
  if (static_cast<int>(lines.size()) != 2 + mf.n)
    throw ParseError("module file must have n rows of entries after the header");
  const int n = mf.n;
  mf.t.assign(n * n, LaurentPoly(mf.ring));
  mf.s.assign(n * n, LaurentPoly(mf.ring));
  mf.r.assign(n * n, LaurentPoly(mf.ring));
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream row(lines[2 + i]);
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (static_cast<int>(cells.size()) != 3 * n)
      throw ParseError("module row " + std::to_string(i + 1) + " must have 3n entries");
    for (int j = 0; j < n; ++j) {
      mf.t[i * n + j] = parse_poly(cells[j], mf.ring);
      mf.s[i * n + j] = parse_poly(cells[n + j], mf.ring);
      mf.r[i * n + j] = parse_poly(cells[2 * n + j], mf.ring);
    }
  }
  return mf;
}

ModuleFile load_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open module file '" + path + "'");
  try {
    return load_module_text(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string module_to_text(const BirackModule& m) {
  std::ostringstream out;
  out << m.ring->header() << '\n' << m.birack.size() << '\n';
  const int n = m.birack.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? "," : "") << format_poly(m.t[i * n + j]);
    for (int j = 0; j < n; ++j) out << ',' << format_poly(m.s[i * n + j]);
    for (int j = 0; j < n; ++j) out << ',' << format_poly(m.r[i * n + j]);
    out << '\n';
  }
  return out.str();
}

BirackModule load_and_validate_module(const Birack& b, const std::string& path) {
  ModuleFile mf = load_module_file(path);
  if (mf.n != b.size())
    throw ValidationError(path + ": module size " + std::to_string(mf.n) +
                          " does not match birack size " + std::to_string(b.size()));
  return validate_module(b, mf.ring, std::move(mf.t), std::move(mf.s), std::move(mf.r));
}

}  // namespace birack
