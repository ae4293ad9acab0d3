#include "dituran/bridge.hpp"

#include <functional>

#include "dituran/errors.hpp"

namespace dituran {

BipartiteGraph brp(const Digraph& d) {
  BipartiteGraph b(d.order());
  for (auto [u, v] : d.arcs()) b.add_edge(u, v);
  return b;
}

Digraph drp(const BipartiteGraph& b) {
  for (int i = 0; i < b.part_size(); ++i)
    if (b.has_edge(i, i)) throw DiagonalEdge(i);
  Digraph d(b.part_size());
  for (auto [x, y] : b.edges()) d.add_arc(x, y);
  return d;
}

BipartiteGraph quasi_complement(const BipartiteGraph& b) {
  int n = b.part_size();
  BipartiteGraph c(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!b.has_edge(x, y)) c.add_edge(x, y);
  return c;
}

int Matching::size() const {
  int s = 0;
  for (int y : mate) s += y >= 0;
  return s;
}

bool Matching::perfect() const { return size() == static_cast<int>(mate.size()); }

Matching maximum_matching(const BipartiteGraph& b) {
  int n = b.part_size();
  std::vector<int> mate_x(n, -1), mate_y(n, -1);
  std::function<bool(int, VertexSet&)> augment = [&](int x, VertexSet& seen) {
    VertexSet cand = b.row(x) & ~seen;
    while (cand) {
      int y = std::countr_zero(cand);
      cand &= cand - 1;
      seen |= bit(y);
      if (mate_y[y] < 0 || augment(mate_y[y], seen)) {
        mate_x[x] = y;
        mate_y[y] = x;
        return true;
      }
      cand &= ~seen;
    }
    return false;
  };
  for (int x = 0; x < n; ++x) {
    VertexSet seen = 0;
    augment(x, seen);
  }
  return Matching{mate_x};
}

std::optional<Matching> perfect_matching(const BipartiteGraph& b) {
  auto m = maximum_matching(b);
  if (!m.perfect()) return std::nullopt;
  return m;
}

std::pair<Labeling, BipartiteGraph> relabel_for_drp(const BipartiteGraph& b) {
  auto m = perfect_matching(quasi_complement(b));
  if (!m) throw NoMatching("quasi-complement has no perfect matching");
  int n = b.part_size();
  Labeling lab{m->mate};
  std::vector<int> rows(n), cols(n);
  for (int i = 0; i < n; ++i) {
    rows[i] = i;
    cols[lab.sigma[i]] = i;
  }
  return {lab, b.relabeled(rows, cols)};
}

std::optional<Witness> bipartite_contains_cycle(const BipartiteGraph& b, int length) {
  return contains_undirected(b.as_simple_graph(), Pattern::undirected_cycle(length));
}

Digraph theorem_anticycle_pipeline(const BipartiteGraph& b) {
  if (b.part_size() < 3) throw InvalidParameters("the pipeline needs n >= 3");
  if (bipartite_contains_cycle(b, 4)) throw InvalidParameters("input contains C4");
  return drp(relabel_for_drp(b).second);
}

std::vector<int> anticycle_to_bipartite_cycle(const Digraph& d, const Witness& w) {
  int n = d.order();
  int len = static_cast<int>(w.map.size());
  // Sources sit at positions of one parity; read off which from the arcs.
  auto sources_at = [&](int parity) {
    for (int i = parity; i < len; i += 2) {
      int v = w.map[i];
      if (!d.has_arc(v, w.map[(i + 1) % len]) || !d.has_arc(v, w.map[(i + len - 1) % len])) return false;
    }
    return true;
  };
  int parity = sources_at(0) ? 0 : 1;
  if (!sources_at(parity)) throw InvalidParameters("witness is not an anti-directed cycle of d");
  std::vector<int> cycle;
  for (int i = 0; i < len; ++i) cycle.push_back(i % 2 == parity ? w.map[i] : n + w.map[i]);
  return cycle;
}

}  // namespace dituran
