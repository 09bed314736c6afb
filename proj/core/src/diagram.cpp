#include "birack/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace birack {

GaussCode parse_gauss_code(std::string_view text) {
  GaussCode code;
  std::size_t line_start = 0;
  int line_no = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    line_start = line_end + 1;
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    skip_ws();
    if (i >= line.size()) {
      if (line_end == text.size() && line_start > text.size()) break;
      continue;  // blank or comment-only line
    }

    std::vector<GaussToken> tokens;
    if (line[i] == '(') {
      ++i;
      skip_ws();
      if (i >= line.size() || line[i] != ')')
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected '()' for a crossing-free component");
      ++i;
      skip_ws();
      if (i != line.size())
        throw ParseError("line " + std::to_string(line_no) + ": trailing text after '()'");
      code.components.push_back({});
      continue;
    }
    while (i < line.size()) {
      char kind = line[i];
      if (kind != 'O' && kind != 'U')
        throw ParseError("line " + std::to_string(line_no) + ": expected 'O' or 'U' at column " +
                         std::to_string(i + 1));
      ++i;
      if (i >= line.size() || !std::isdigit(static_cast<unsigned char>(line[i])))
        throw ParseError("line " + std::to_string(line_no) + ": expected crossing id at column " +
                         std::to_string(i + 1));
      long long id = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
        id = id * 10 + (line[i] - '0');
        if (id > 1'000'000)
          throw ParseError("line " + std::to_string(line_no) + ": crossing id too large");
        ++i;
      }
      if (i >= line.size() || (line[i] != '+' && line[i] != '-'))
        throw ParseError("line " + std::to_string(line_no) + ": expected '+' or '-' at column " +
                         std::to_string(i + 1));
      int sign = line[i] == '+' ? +1 : -1;
      ++i;
      tokens.push_back({kind == 'O', static_cast<int>(id), sign});
      skip_ws();
    }
    if (tokens.empty())
      throw ParseError("line " + std::to_string(line_no) + ": empty component");
    code.components.push_back(std::move(tokens));
  }
  if (code.components.empty()) throw ParseError("Gauss code has no components");

  // Each crossing id appears exactly twice, once O and once U, equal signs.
  struct Seen {
    int count = 0;
    int over_count = 0;
    int sign = 0;
  };
  std::map<int, Seen> seen;
  for (const auto& comp : code.components)
    for (const auto& tok : comp) {
      Seen& s = seen[tok.crossing];
      if (s.count == 0)
        s.sign = tok.sign;
      else if (s.sign != tok.sign)
        throw ParseError("crossing " + std::to_string(tok.crossing) +
                         " appears with inconsistent signs");
      ++s.count;
      if (tok.over) ++s.over_count;
    }
  for (const auto& [id, s] : seen) {
    if (s.count != 2)
      throw ParseError("crossing " + std::to_string(id) + " appears " + std::to_string(s.count) +
                       " times, expected 2");
    if (s.over_count != 1)
      throw ParseError("crossing " + std::to_string(id) +
                       " must appear once as O and once as U");
  }
  return code;
}

std::string gauss_code_to_text(const GaussCode& code) {
  std::string out;
  for (const auto& comp : code.components) {
    if (comp.empty()) {
      out += "()";
    } else {
      for (const auto& tok : comp) {
        out += tok.over ? 'O' : 'U';
        out += std::to_string(tok.crossing);
        out += tok.sign > 0 ? '+' : '-';
      }
    }
    out += '\n';
  }
  return out;
}

LinkDiagram build_diagram(const GaussCode& code) {
  LinkDiagram d;
  d.code = code;

  // Crossing ids -> dense indices in order of first appearance.
  std::map<int, int> crossing_index;
  for (const auto& comp : code.components)
    for (const auto& tok : comp)
      if (!crossing_index.count(tok.crossing)) {
        int idx = static_cast<int>(crossing_index.size());
        crossing_index[tok.crossing] = idx;
      }
  d.crossings.assign(crossing_index.size(), Crossing{});

  d.writhe.assign(code.components.size(), 0);
  std::map<int, int> crossing_component;  // first component touching a crossing

  // Semiarc j of a component ends at its j-th visit; the successor of the
  // last semiarc wraps to the first.
  int base = 0;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    const auto& comp = code.components[c];
    if (comp.empty()) {
      d.successor.push_back(base);
      d.component_of.push_back(static_cast<int>(c));
      d.free_loops.push_back(base);
      ++base;
      continue;
    }
    const int m = static_cast<int>(comp.size());
    for (int j = 0; j < m; ++j) {
      d.successor.push_back(base + (j + 1) % m);
      d.component_of.push_back(static_cast<int>(c));
    }
    for (int j = 0; j < m; ++j) {
      const GaussToken& tok = comp[j];
      Crossing& cr = d.crossings[crossing_index[tok.crossing]];
      cr.sign = tok.sign;
      int in_arc = base + j;
      int out_arc = base + (j + 1) % m;
      if (tok.over) {
        if (cr.over_in >= 0) throw ParseError("crossing visited over twice");
        cr.over_in = in_arc;
        cr.over_out = out_arc;
      } else {
        if (cr.under_in >= 0) throw ParseError("crossing visited under twice");
        cr.under_in = in_arc;
        cr.under_out = out_arc;
      }
      auto it = crossing_component.find(tok.crossing);
      if (it == crossing_component.end()) {
        crossing_component[tok.crossing] = static_cast<int>(c);
      } else if (it->second == static_cast<int>(c)) {
        d.writhe[c] += tok.sign;  // counted once per self-crossing pair
      }
    }
    base += m;
  }
  d.num_semiarcs = base;
  return d;
}

LinkDiagram add_kinks(const LinkDiagram& d, int component, int count, int sign) {
  if (component < 0 || component >= static_cast<int>(d.num_components()))
    throw ValidationError("no such component " + std::to_string(component + 1));
  if (count < 0) throw ValidationError("kink count must be nonnegative");
  if (sign != 1 && sign != -1) throw ValidationError("kink sign must be +1 or -1");
  GaussCode code = d.code;
  int next_id = 0;
  for (const auto& comp : code.components)
    for (const auto& tok : comp) next_id = std::max(next_id, tok.crossing);
  auto& tokens = code.components[component];
  std::vector<GaussToken> prefix;
  for (int k = 0; k < count; ++k) {
    ++next_id;
    prefix.push_back({true, next_id, sign});
    prefix.push_back({false, next_id, sign});
  }
  tokens.insert(tokens.begin(), prefix.begin(), prefix.end());
  return build_diagram(code);
}

std::vector<std::pair<std::vector<int>, LinkDiagram>> framing_tile(const LinkDiagram& d,
                                                                   int rank) {
  if (rank < 1) throw ValidationError("framing tile needs rank N >= 1");
  const int c = static_cast<int>(d.num_components());
  std::vector<std::pair<std::vector<int>, LinkDiagram>> out;
  std::vector<int> w(c, 0);
  while (true) {
    LinkDiagram framed = d;
    for (int j = 0; j < c; ++j) {
      long long k = (w[j] - d.writhe[j]) % rank;
      if (k < 0) k += rank;
      if (k > 0) framed = add_kinks(framed, j, static_cast<int>(k), +1);
    }
    out.emplace_back(w, std::move(framed));
    int pos = c - 1;
    while (pos >= 0 && w[pos] == rank - 1) w[pos--] = 0;
    if (pos < 0) break;
    ++w[pos];
  }
  return out;
}

LinkDiagram load_link(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return build_diagram(parse_gauss_code(buf.str()));
}

LinkDiagram load_link_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open link file '" + path + "'");
  try {
    return load_link(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace birack
