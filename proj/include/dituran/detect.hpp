#pragma once

#include <optional>
#include <vector>

#include "dituran/graph.hpp"
#include "dituran/pattern.hpp"

namespace dituran {

inline constexpr int kSubsetDpCap = 24;
inline constexpr int kHamiltonCap = 20;
inline constexpr int kIndependenceCap = 20;

// Pattern vertex i sits on host vertex map[i]. template_index names the
// pattern template that matched (anti-directed cycles have two).
struct Witness {
  std::vector<int> map;
  int template_index = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Maximum number of vertices on a directed path. DAGs are handled by a
// topological DP at any order; otherwise a subset DP with cap 24.
int longest_directed_path_order(const Digraph& d);

// Vertex-simple directed cycle on exactly k vertices; map lists it in
// cyclic order starting from its least vertex.
std::optional<Witness> contains_directed_cycle_of_order(const Digraph& d, int k);

// Non-induced containment. Undirected pattern kinds are matched against the
// underlying multigraph, so a doubled pattern edge needs a digon.
std::optional<Witness> contains_subdigraph(const Digraph& d, const Pattern& p);

// Undirected kinds only (Clique, UndirectedCycle, Theta, custom graph,
// Tournament read as its underlying clique).
std::optional<Witness> contains_undirected(const SimpleGraph& g, const Pattern& p);
// Host is Ung(d); with use_digons a digon may also serve as two parallel
// edges, i.e. the host becomes Umg(d).
std::optional<Witness> contains_undirected(const Digraph& d, const Pattern& p, bool use_digons);

std::optional<Witness> contains_anti_directed_cycle(const Digraph& d, int order);

// Checks that w maps every pattern relation onto the host injectively.
bool witness_valid(const Digraph& host, const Pattern& p, const Witness& w);
bool witness_valid(const SimpleGraph& host, const Pattern& p, const Witness& w);

// uv is an edge iff u and v have a common neighbour.
SimpleGraph injective_graph(const SimpleGraph& g);

int independence_number(const SimpleGraph& g);

bool has_hamilton_directed_cycle(const Digraph& d);

// Longest (vertex-simple) path order, computed per connected component by
// subset DP; each component must have at most 24 vertices.
int longest_path_order(const SimpleGraph& g);

}  // namespace dituran
