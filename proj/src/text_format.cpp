#include "dituran/text_format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "dituran/errors.hpp"

namespace dituran {
namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

int to_int(const Token& t, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size() || value < 0)
    throw ParseError(line, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
  return value;
}

struct Parsed {
  char kind = 0;
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::pair<int, int>> columns;
};

AnyGraph build(const Parsed& p) {
  auto at = [&](std::size_t i) { return p.columns[i]; };
  switch (p.kind) {
    case 'd': {
      Digraph d(p.n);
      for (std::size_t i = 0; i < p.pairs.size(); ++i) {
        auto [u, v] = p.pairs[i];
        if (u >= p.n || v >= p.n) throw ParseError(at(i).first, at(i).second, "vertex out of range");
        if (u == v) throw ParseError(at(i).first, at(i).second, "loop");
        d.add_arc(u, v);
      }
      return d;
    }
    case 'g': {
      SimpleGraph g(p.n);
      for (std::size_t i = 0; i < p.pairs.size(); ++i) {
        auto [u, v] = p.pairs[i];
        if (u >= p.n || v >= p.n) throw ParseError(at(i).first, at(i).second, "vertex out of range");
        if (u == v) throw ParseError(at(i).first, at(i).second, "loop");
        g.add_edge(u, v);
      }
      return g;
    }
    default: {
      BipartiteGraph b(p.n);
      for (std::size_t i = 0; i < p.pairs.size(); ++i) {
        auto [x, y] = p.pairs[i];
        if (x >= p.n || y >= p.n) throw ParseError(at(i).first, at(i).second, "vertex out of range");
        b.add_edge(x, y);
      }
      return b;
    }
  }
}

std::vector<AnyGraph> parse_all(std::string_view text, bool single) {
  std::vector<AnyGraph> result;
  Parsed cur;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const Token& first = tokens[0];
    bool header = first.text == "d" || first.text == "g" || first.text == "b";
    if (header) {
      if (cur.kind) {
        if (single) throw ParseError(line_no, first.column, "second header in single-object input");
        result.push_back(build(cur));
        cur = Parsed{};
      }
      if (tokens.size() != 2) throw ParseError(line_no, first.column, "header must be '<d|g|b> <n>'");
      cur.kind = first.text[0];
      cur.n = to_int(tokens[1], line_no);
      if (cur.n > kMaxVertices) throw ParseError(line_no, tokens[1].column, "order exceeds 64");
    } else {
      if (!cur.kind) throw ParseError(line_no, first.column, "expected header 'd <n>', 'g <n>' or 'b <n>'");
      if (tokens.size() != 2) throw ParseError(line_no, first.column, "expected a pair 'u v'");
      cur.pairs.emplace_back(to_int(tokens[0], line_no), to_int(tokens[1], line_no));
      cur.columns.emplace_back(line_no, first.column);
    }
    if (end == text.size()) break;
  }
  if (!cur.kind) {
    if (single || result.empty()) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing header");
  } else {
    result.push_back(build(cur));
  }
  return result;
}

template <class T>
T parse_as(std::string_view text, const char* expected) {
  AnyGraph g = parse_graph(text);
  if (auto* p = std::get_if<T>(&g)) return std::move(*p);
  throw ParseError(1, 1, std::string("expected a ") + expected);
}

}  // namespace

AnyGraph parse_graph(std::string_view text) { return parse_all(text, true).front(); }

std::vector<AnyGraph> parse_many(std::string_view text) { return parse_all(text, false); }

Digraph parse_digraph(std::string_view text) { return parse_as<Digraph>(text, "digraph (header 'd')"); }

SimpleGraph parse_simple_graph(std::string_view text) { return parse_as<SimpleGraph>(text, "graph (header 'g')"); }

BipartiteGraph parse_bipartite(std::string_view text) {
  return parse_as<BipartiteGraph>(text, "bipartite graph (header 'b')");
}

std::string serialize(const Digraph& d) {
  std::ostringstream os;
  os << "d " << d.order() << '\n';
  for (auto [u, v] : d.arcs()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string serialize(const SimpleGraph& g) {
  std::ostringstream os;
  os << "g " << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string serialize(const BipartiteGraph& b) {
  std::ostringstream os;
  os << "b " << b.part_size() << '\n';
  for (auto [x, y] : b.edges()) os << x << ' ' << y << '\n';
  return os.str();
}

std::string serialize(const AnyGraph& any) {
  return std::visit([](const auto& g) { return serialize(g); }, any);
}

}  // namespace dituran
