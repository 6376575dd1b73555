#include <cctype>
#include <map>

#include "knotoid/diagram.hpp"

namespace knotoid {

namespace {

char vertex_letter(int v) {
  if (v < 26) return static_cast<char>('A' + v);
  if (v < 52) return static_cast<char>('a' + v - 26);
  throw std::length_error("EM codes support at most 52 vertices");
}

int letter_vertex(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  return -1;
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw SyntaxError(pos, std::string("expected '") + c + "'");
  }
};

std::string_view strip_quotes(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (b - a >= 2 && (s[a] == '"' || s[a] == '\'') && s[b - 1] == s[a]) {
    ++a;
    --b;
  }
  return s.substr(a, b - a);
}

VertexKind kind_for_degree(std::size_t deg, int& endpoints, std::size_t pos) {
  if (deg == 4) return VertexKind::Crossing;
  if (deg == 1) return endpoints++ == 0 ? VertexKind::Tail : VertexKind::Head;
  throw InvalidDiagram(DiagramFault::BadDegrees,
                       "entry ending at position " + std::to_string(pos) + " has " +
                           std::to_string(deg) + " slots");
}

// Codes carry no endpoint marker: the first endpoint listed is the tail. Swaps
// the two endpoint labels when the head would come first.
Diagram tail_first(const Diagram& d) {
  if (d.tail() < d.head()) return d;
  std::vector<int> perm(d.vertex_count());
  for (int v = 0; v < d.vertex_count(); ++v) perm[v] = v;
  std::swap(perm[d.tail()], perm[d.head()]);
  return relabel(d, perm, std::vector<int>(d.vertex_count(), 0));
}

}  // namespace

Diagram parse_em(std::string_view raw) {
  const std::string_view text = strip_quotes(raw);
  Cursor c{text};
  const bool paren = c.accept('(');
  std::vector<std::vector<SlotRef>> nbrs;
  std::vector<VertexKind> kinds;
  int endpoints = 0;
  while (true) {
    std::vector<SlotRef> entry;
    while (true) {
      c.skip_ws();
      if (c.pos >= text.size()) break;
      const int v = letter_vertex(text[c.pos]);
      if (v < 0) break;
      if (c.pos + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[c.pos + 1])))
        throw SyntaxError(c.pos + 1, "expected slot digit");
      entry.push_back({v, text[c.pos + 1] - '0'});
      c.pos += 2;
    }
    if (entry.empty()) throw SyntaxError(c.pos, "expected vertex reference");
    kinds.push_back(kind_for_degree(entry.size(), endpoints, c.pos));
    nbrs.push_back(std::move(entry));
    if (!c.accept(',')) break;
  }
  if (paren) c.expect(')');
  if (!c.at_end()) throw SyntaxError(c.pos, "unexpected trailing input");
  return Diagram::from_adjacency(std::move(kinds), nbrs);
}

std::string print_em(const Diagram& diagram) {
  const Diagram d = tail_first(diagram);
  std::string out;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (v) out += ',';
    for (int s = 0; s < d.degree(v); ++s) {
      const SlotRef r = d.ref(d.mate(d.dart(v, s)));
      out += vertex_letter(r.vertex);
      out += static_cast<char>('0' + r.slot);
    }
  }
  return out;
}

std::string print_em_pretty(const Diagram& d) {
  std::string out = "(";
  const std::string compact = print_em(d);
  for (char ch : compact) {
    if (ch == ',') {
      out += ", ";
    } else {
      out += ch;
    }
  }
  return out + ")";
}

Diagram parse_pd(std::string_view raw) {
  const std::string_view text = strip_quotes(raw);
  Cursor c{text};
  std::vector<std::vector<long>> groups;
  std::vector<std::size_t> group_end;
  while (true) {
    c.expect('[');
    std::vector<long> g;
    while (true) {
      c.skip_ws();
      const std::size_t start = c.pos;
      while (c.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[c.pos]))) ++c.pos;
      if (c.pos == start) throw SyntaxError(c.pos, "expected arc label");
      g.push_back(std::stol(std::string(text.substr(start, c.pos - start))));
      if (!c.accept(',')) break;
    }
    c.expect(']');
    groups.push_back(std::move(g));
    group_end.push_back(c.pos);
    if (!c.accept(',')) break;
  }
  if (!c.at_end()) throw SyntaxError(c.pos, "unexpected trailing input");

  std::map<long, std::vector<SlotRef>> seen;
  std::vector<VertexKind> kinds;
  int endpoints = 0;
  for (std::size_t v = 0; v < groups.size(); ++v) {
    kinds.push_back(kind_for_degree(groups[v].size(), endpoints, group_end[v]));
    for (std::size_t s = 0; s < groups[v].size(); ++s)
      seen[groups[v][s]].push_back({static_cast<int>(v), static_cast<int>(s)});
  }
  std::vector<std::vector<SlotRef>> nbrs(groups.size());
  for (std::size_t v = 0; v < groups.size(); ++v) nbrs[v].resize(groups[v].size());
  for (const auto& [label, refs] : seen) {
    if (refs.size() != 2)
      throw InconsistentCode("arc " + std::to_string(label) + " occurs " +
                             std::to_string(refs.size()) + " times");
    nbrs[refs[0].vertex][refs[0].slot] = refs[1];
    nbrs[refs[1].vertex][refs[1].slot] = refs[0];
  }
  return Diagram::from_adjacency(std::move(kinds), nbrs);
}

std::string print_pd(const Diagram& diagram) {
  const Diagram d = tail_first(diagram);
  std::vector<int> label(d.dart_count(), -1);
  int next = 0;
  std::string out;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (v) out += ',';
    out += '[';
    for (int s = 0; s < d.degree(v); ++s) {
      const Dart x = d.dart(v, s);
      if (label[x] < 0) label[x] = label[d.mate(x)] = next++;
      if (s) out += ',';
      out += std::to_string(label[x]);
    }
    out += ']';
  }
  return out;
}

Diagram parse_code(std::string_view raw) {
  const std::string_view text = strip_quotes(raw);
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '[') return parse_pd(text);
    return parse_em(text);
  }
  throw SyntaxError(0, "empty code");
}

}  // namespace knotoid
