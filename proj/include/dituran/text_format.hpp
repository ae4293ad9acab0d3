#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "dituran/graph.hpp"

namespace dituran {

// Line-oriented format: a header "d <n>", "g <n>" or "b <n>" followed by one
// "u v" pair per line (0-indexed). Blank lines and '#' comments are ignored.
using AnyGraph = std::variant<Digraph, SimpleGraph, BipartiteGraph>;

// Throws ParseError carrying the 1-based line and column.
AnyGraph parse_graph(std::string_view text);
Digraph parse_digraph(std::string_view text);
SimpleGraph parse_simple_graph(std::string_view text);
BipartiteGraph parse_bipartite(std::string_view text);

// Pairs are emitted in lexicographic order; graph edges as (u, v) with u < v.
std::string serialize(const Digraph& d);
std::string serialize(const SimpleGraph& g);
std::string serialize(const BipartiteGraph& b);
std::string serialize(const AnyGraph& any);

// Splits a stream of concatenated objects at each header line.
std::vector<AnyGraph> parse_many(std::string_view text);

}  // namespace dituran
