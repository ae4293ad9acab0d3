#include "dituran/graph.hpp"

#include <string>

#include "dituran/errors.hpp"

namespace dituran {
namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) throw CapExceeded("vertex count", n, kMaxVertices);
}

void check_endpoints(int n, int u, int v, const char* what) {
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw InvalidParameters(std::string(what) + " (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for order " + std::to_string(n));
  }
  if (u == v) throw InvalidParameters(std::string(what) + " would be a loop at " + std::to_string(u));
}

}  // namespace

Digraph::Digraph(int n) : n_(n) {
  check_order(n);
  out_.assign(n, 0);
  in_.assign(n, 0);
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

void Digraph::add_arc(int u, int v) {
  check_endpoints(n_, u, v, "arc");
  if (has_arc(u, v)) return;
  out_[u] |= bit(v);
  in_[v] |= bit(u);
  ++arcs_;
}

void Digraph::remove_arc(int u, int v) {
  check_endpoints(n_, u, v, "arc");
  if (!has_arc(u, v)) return;
  out_[u] &= ~bit(v);
  in_[v] &= ~bit(u);
  --arcs_;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(arcs_);
  for (int u = 0; u < n_; ++u) for_each_bit(out_[u], [&](int v) { result.emplace_back(u, v); });
  return result;
}

bool Digraph::is_tournament() const {
  for (int u = 0; u < n_; ++u) {
    if ((out_[u] & in_[u]) != 0) return false;
    if ((out_[u] | in_[u]) != (low_bits(n_) & ~bit(u))) return false;
  }
  return true;
}

bool Digraph::is_acyclic() const {
  // Kahn's algorithm on bitsets.
  VertexSet remaining = low_bits(n_);
  bool progress = true;
  while (remaining && progress) {
    progress = false;
    for_each_bit(remaining, [&](int v) {
      if ((in_[v] & remaining) == 0) {
        remaining &= ~bit(v);
        progress = true;
      }
    });
  }
  return remaining == 0;
}

Digraph Digraph::relabeled(const std::vector<int>& perm) const {
  Digraph d(n_);
  for (auto [u, v] : arcs()) d.add_arc(perm[u], perm[v]);
  return d;
}

SimpleGraph::SimpleGraph(int n) : n_(n) {
  check_order(n);
  adj_.assign(n, 0);
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

void SimpleGraph::add_edge(int u, int v) {
  check_endpoints(n_, u, v, "edge");
  if (has_edge(u, v)) return;
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
  ++edges_;
}

void SimpleGraph::remove_edge(int u, int v) {
  check_endpoints(n_, u, v, "edge");
  if (!has_edge(u, v)) return;
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
  --edges_;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(edges_);
  for (int u = 0; u < n_; ++u) for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { result.emplace_back(u, v); });
  return result;
}

SimpleGraph SimpleGraph::relabeled(const std::vector<int>& perm) const {
  SimpleGraph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

BipartiteGraph::BipartiteGraph(int n) : n_(n) {
  check_order(n);
  rows_.assign(n, 0);
}

BipartiteGraph BipartiteGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  BipartiteGraph b(n);
  for (auto [x, y] : edges) b.add_edge(x, y);
  return b;
}

VertexSet BipartiteGraph::column(int y) const {
  VertexSet col = 0;
  for (int x = 0; x < n_; ++x)
    if (has_edge(x, y)) col |= bit(x);
  return col;
}

void BipartiteGraph::add_edge(int x, int y) {
  if (x < 0 || y < 0 || x >= n_ || y >= n_) {
    throw InvalidParameters("edge (" + std::to_string(x) + "," + std::to_string(y) + ") out of range for part size " +
                            std::to_string(n_));
  }
  if (has_edge(x, y)) return;
  rows_[x] |= bit(y);
  ++edges_;
}

void BipartiteGraph::remove_edge(int x, int y) {
  if (!has_edge(x, y)) return;
  rows_[x] &= ~bit(y);
  --edges_;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(edges_);
  for (int x = 0; x < n_; ++x) for_each_bit(rows_[x], [&](int y) { result.emplace_back(x, y); });
  return result;
}

BipartiteGraph BipartiteGraph::transposed() const {
  BipartiteGraph t(n_);
  for (auto [x, y] : edges()) t.add_edge(y, x);
  return t;
}

BipartiteGraph BipartiteGraph::relabeled(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const {
  BipartiteGraph b(n_);
  for (auto [x, y] : edges()) b.add_edge(row_perm[x], col_perm[y]);
  return b;
}

SimpleGraph BipartiteGraph::as_simple_graph() const {
  SimpleGraph g(2 * n_);
  for (auto [x, y] : edges()) g.add_edge(x, n_ + y);
  return g;
}

SimpleGraph underlying_graph(const Digraph& d) {
  SimpleGraph g(d.order());
  for (auto [u, v] : d.arcs()) g.add_edge(u, v);
  return g;
}

std::vector<std::pair<int, int>> digon_set(const Digraph& d) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < d.order(); ++u)
    for_each_bit(d.out(u) & d.in(u) & ~low_bits(u + 1), [&](int v) { pairs.emplace_back(u, v); });
  return pairs;
}

Digraph double_orientation(const SimpleGraph& g) {
  Digraph d(g.order());
  for (auto [u, v] : g.edges()) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

std::vector<int> hamilton_path_in_tournament(const Digraph& d) {
  if (!d.is_tournament()) throw NotATournament("digraph is not a tournament");
  std::vector<int> path;
  path.reserve(d.order());
  for (int v = 0; v < d.order(); ++v) {
    // The first vertex v beats is preceded by a vertex that beats v.
    auto pos = path.begin();
    while (pos != path.end() && !d.has_arc(v, *pos)) ++pos;
    path.insert(pos, v);
  }
  return path;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace dituran
