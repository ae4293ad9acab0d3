#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace dituran {

using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet low_bits(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
inline int popcount(VertexSet s) { return std::popcount(s); }

// Calls f(v) for every member of s in increasing order.
template <class F>
void for_each_bit(VertexSet s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

// Loop-free digraph on at most 64 vertices. Row i of out holds N+(i), row i
// of in holds N-(i); both are kept in sync by the mutators.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

  int order() const { return n_; }
  int arc_count() const { return arcs_; }

  bool has_arc(int u, int v) const { return (out_[u] >> v) & 1; }
  VertexSet out(int v) const { return out_[v]; }
  VertexSet in(int v) const { return in_[v]; }
  const std::vector<VertexSet>& out_rows() const { return out_; }
  const std::vector<VertexSet>& in_rows() const { return in_; }

  int out_degree(int v) const { return popcount(out_[v]); }
  int in_degree(int v) const { return popcount(in_[v]); }

  // Throws InvalidParameters on loops or out-of-range endpoints.
  void add_arc(int u, int v);
  void remove_arc(int u, int v);

  // Arcs in lexicographic order.
  std::vector<std::pair<int, int>> arcs() const;

  // Is every pair joined by exactly one arc?
  bool is_tournament() const;
  bool is_acyclic() const;

  // Digraph induced by relabeling: vertex v becomes perm[v].
  Digraph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  int arcs_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static SimpleGraph complete(int n);

  int order() const { return n_; }
  int edge_count() const { return edges_; }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  const std::vector<VertexSet>& rows() const { return adj_; }
  int degree(int v) const { return popcount(adj_[v]); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Edges {u,v} with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  SimpleGraph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  int n_ = 0;
  int edges_ = 0;
  std::vector<VertexSet> adj_;
};

// Bipartite graph with labeled parts X = {x_0..x_{n-1}}, Y = {y_0..y_{n-1}}.
// Row i holds the Y-neighbours of x_i.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  explicit BipartiteGraph(int n);

  static BipartiteGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int part_size() const { return n_; }
  int edge_count() const { return edges_; }

  bool has_edge(int x, int y) const { return (rows_[x] >> y) & 1; }
  VertexSet row(int x) const { return rows_[x]; }
  const std::vector<VertexSet>& rows() const { return rows_; }
  // Neighbours of y_j in X.
  VertexSet column(int y) const;

  void add_edge(int x, int y);
  void remove_edge(int x, int y);

  std::vector<std::pair<int, int>> edges() const;

  // Rows and columns swapped (the roles of X and Y exchanged).
  BipartiteGraph transposed() const;
  // x_i -> x_{row_perm[i]}, y_j -> y_{col_perm[j]}.
  BipartiteGraph relabeled(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const;

  // The graph on 2n vertices (X first, then Y) with each edge as a digon.
  SimpleGraph as_simple_graph() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  int n_ = 0;
  int edges_ = 0;
  std::vector<VertexSet> rows_;
};

// Ung(D): forget directions and merge digons.
SimpleGraph underlying_graph(const Digraph& d);
// Pairs {u,v}, u < v, carrying both arcs.
std::vector<std::pair<int, int>> digon_set(const Digraph& d);
// Every edge replaced by a digon.
Digraph double_orientation(const SimpleGraph& g);

// Every tournament has a Hamilton directed path; built by insertion.
// Throws NotATournament.
std::vector<int> hamilton_path_in_tournament(const Digraph& d);

SimpleGraph complement(const SimpleGraph& g);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);
SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b);
SimpleGraph cycle_graph(int n);

}  // namespace dituran
