#pragma once

// Brute-force reference implementations. Nothing here touches the library's
// canonical forms or matchers; only the graph containers are shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <type_traits>
#include <vector>

#include "dituran/graph.hpp"

namespace oracle {

using dituran::BipartiteGraph;
using dituran::Digraph;
using dituran::SimpleGraph;

inline std::vector<int> identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

template <class G>
bool same_under(const G& a, const G& b, const std::vector<int>& p) {
  int n = a.order();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      bool x, y;
      if constexpr (std::is_same_v<G, Digraph>) {
        x = a.has_arc(u, v), y = b.has_arc(p[u], p[v]);
      } else {
        x = a.has_edge(u, v), y = b.has_edge(p[u], p[v]);
      }
      if (x != y) return false;
    }
  return true;
}

// Tries all n! bijections.
template <class G>
bool isomorphic(const G& a, const G& b) {
  if (a.order() != b.order()) return false;
  if constexpr (std::is_same_v<G, Digraph>) {
    if (a.arc_count() != b.arc_count()) return false;
  } else {
    if (a.edge_count() != b.edge_count()) return false;
  }
  auto p = identity(a.order());
  do {
    if (same_under(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Both lists pairwise non-isomorphic after collapsing `expected`, and a
// bijection between them under isomorphism.
template <class G>
bool same_classes(const std::vector<G>& found, const std::vector<G>& expected) {
  std::vector<G> want;
  for (const auto& g : expected) {
    bool seen = false;
    for (const auto& h : want) seen = seen || isomorphic(g, h);
    if (!seen) want.push_back(g);
  }
  if (found.size() != want.size()) return false;
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = i + 1; j < found.size(); ++j)
      if (isomorphic(found[i], found[j])) return false;
  for (const auto& g : want)
    if (std::none_of(found.begin(), found.end(), [&](const G& h) { return isomorphic(g, h); })) return false;
  return true;
}

// Every injective map of pattern vertices into host vertices.
inline bool for_each_injection(int k, int n, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> map(k);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int i) {
    if (i == k) return f(map);
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      map[i] = v;
      bool stop = rec(i + 1);
      used[v] = 0;
      if (stop) return true;
    }
    return false;
  };
  return rec(0);
}

inline bool contains(const Digraph& host, const Digraph& pat) {
  auto arcs = pat.arcs();
  return for_each_injection(pat.order(), host.order(), [&](const std::vector<int>& m) {
    for (auto [u, v] : arcs)
      if (!host.has_arc(m[u], m[v])) return false;
    return true;
  });
}

inline bool contains(const SimpleGraph& host, const SimpleGraph& pat) {
  auto edges = pat.edges();
  return for_each_injection(pat.order(), host.order(), [&](const std::vector<int>& m) {
    for (auto [u, v] : edges)
      if (!host.has_edge(m[u], m[v])) return false;
    return true;
  });
}

inline Digraph dipath(int order) {
  Digraph d(order);
  for (int i = 0; i + 1 < order; ++i) d.add_arc(i, i + 1);
  return d;
}

inline Digraph dicycle(int order) {
  Digraph d(order);
  for (int i = 0; i < order; ++i) d.add_arc(i, (i + 1) % order);
  return d;
}

// a -> b directly and a -> x -> y -> b.
inline Digraph p13() { return Digraph::from_arcs(4, {{0, 1}, {0, 2}, {2, 3}, {3, 1}}); }

// a -> b <- c -> d <- a.
inline Digraph k22() { return Digraph::from_arcs(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}}); }

inline SimpleGraph cycle(int order) {
  SimpleGraph g(order);
  for (int i = 0; i < order; ++i) g.add_edge(i, (i + 1) % order);
  return g;
}

inline SimpleGraph clique(int order) {
  SimpleGraph g(order);
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j) g.add_edge(i, j);
  return g;
}

inline SimpleGraph path(int order) {
  SimpleGraph g(order);
  for (int i = 0; i + 1 < order; ++i) g.add_edge(i, i + 1);
  return g;
}

// Longest directed path, counted in vertices, by exhaustive DFS.
inline int longest_dipath(const Digraph& d) {
  int n = d.order(), best = n > 0;
  std::vector<char> on(n, 0);
  std::function<void(int, int)> dfs = [&](int v, int len) {
    best = std::max(best, len);
    for (int w = 0; w < n; ++w)
      if (!on[w] && d.has_arc(v, w)) {
        on[w] = 1;
        dfs(w, len + 1);
        on[w] = 0;
      }
  };
  for (int v = 0; v < n; ++v) {
    on[v] = 1;
    dfs(v, 1);
    on[v] = 0;
  }
  return best;
}

inline bool hamiltonian(const Digraph& d) {
  int n = d.order();
  if (n < 2) return false;
  auto p = identity(n);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = d.has_arc(p[i], p[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

inline int independence_number(const SimpleGraph& g) {
  int n = g.order(), best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((s >> u & 1) && (s >> v & 1) && g.has_edge(u, v)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

// u ~ v iff they have a common neighbour.
inline SimpleGraph injective(const SimpleGraph& g) {
  int n = g.order();
  SimpleGraph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (g.has_edge(u, w) && g.has_edge(v, w)) {
          h.add_edge(u, v);
          break;
        }
  return h;
}

// Largest subgraph (by edges) avoiding `pat`, over all 2^e edge subsets.
inline int max_free_subgraph(const SimpleGraph& g, const SimpleGraph& pat) {
  auto edges = g.edges();
  int e = static_cast<int>(edges.size()), best = 0;
  for (std::uint32_t s = 0; s < (1u << e); ++s) {
    int c = std::popcount(s);
    if (c <= best) continue;
    SimpleGraph h(g.order());
    for (int i = 0; i < e; ++i)
      if (s >> i & 1) h.add_edge(edges[i].first, edges[i].second);
    if (!contains(h, pat)) best = c;
  }
  return best;
}

// Balanced bipartite graph as a graph on 2n vertices, X first.
inline SimpleGraph flatten(const BipartiteGraph& b) {
  int n = b.part_size();
  SimpleGraph g(2 * n);
  for (auto [x, y] : b.edges()) g.add_edge(x, n + y);
  return g;
}

// Isomorphism of bipartite graphs fixing the sides.
inline bool isomorphic(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.part_size() != b.part_size() || a.edge_count() != b.edge_count()) return false;
  int n = a.part_size();
  auto rows = identity(n);
  do {
    auto cols = identity(n);
    do {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y) ok = a.has_edge(x, y) == b.has_edge(rows[x], cols[y]);
      if (ok) return true;
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return false;
}

}  // namespace oracle
