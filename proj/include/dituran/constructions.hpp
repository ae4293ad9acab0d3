#pragma once

#include <array>
#include <vector>

#include "dituran/graph.hpp"

namespace dituran {

// Almost balanced part sizes of an n-vertex k-partition, larger parts first.
// Parts of size zero (k > n) are dropped.
std::vector<int> balanced_sizes(int n, int k);

// Complete k-partite graph on an almost balanced partition; K_n when k >= n.
SimpleGraph turan_graph(int n, int k);

// Parts laid out in consecutive index blocks in the given order, every arc
// running from an earlier part to a later one. Throws InvalidArrangement
// unless the sizes are positive and differ by at most one.
Digraph transitive_turan(const std::vector<int>& sizes);

// Every ordering of the almost balanced sizes, deduplicated up to
// isomorphism.
std::vector<Digraph> enumerate_transitive_turan_family(int n, int k);

// q K_k plus K_r, where n = qk + r.
SimpleGraph gamma_graph(int n, int k);

// (q - l) K_k plus the join of K_{(k-1)/2} with an independent set of
// l k + r - (k-1)/2 vertices. Needs k >= 3 odd, r = (k +- 1)/2 and
// 0 <= l <= q; throws InvalidParameters otherwise.
SimpleGraph gamma_ell_graph(int n, int k, int ell);

// Chain of complete digraph blocks: q copies of K_k and, when r > 0, one K_r
// at chain position `position` (0..q). Forward arcs between blocks.
Digraph f_member(int n, int k, int position);
std::vector<Digraph> f_family(int n, int k);

// Sizes of X1, X2, Y1, Y2, Z1, Z2.
struct SSplit {
  std::array<int, 6> sizes{};
  int order() const;
};

// X1 -> Y1 u Z2, Y1 -> Z1 u X2, Z1 -> X1 u Y2,
// X2 -> Y2 u Z1, Y2 -> Z2 u X1, Z2 -> X2 u Y1.
// Throws InvalidArrangement unless |X|, |Y|, |Z| are almost balanced.
Digraph s_digraph(const SSplit& split);
std::vector<SSplit> s_splits(int n);
std::vector<Digraph> s_family(int n);

enum class Direction { XtoY, YtoX };

// X = {0..k-2} complete, Y = the rest independent, all X-Y arcs one way.
// Needs k + 1 <= n <= 2k - 1.
Digraph small_n_path_bound_digraph(int n, int k, Direction dir);

// Parts of size 3 (empty) or even (two disjoint complete digraphs of half
// size), exactly n - 2k threes, forward arcs between parts. Needs
// 2k <= n <= 3k - 2.
Digraph alt_extremal_digraph(int n, int k, const std::vector<int>& sizes);

// Incidence graph of PG(2, q): x_i are points, y_j are lines.
BipartiteGraph projective_plane_bipartite(int q);

bool is_prime(int q);

// The extremal graphs for C4 on n <= 8 vertices, one per isomorphism class,
// as produced by the exhaustive search.
std::vector<SimpleGraph> c4_catalog(int n);

}  // namespace dituran
