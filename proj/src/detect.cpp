#include "dituran/detect.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "dituran/detail/matcher.hpp"
#include "dituran/errors.hpp"

namespace dituran {
namespace {

using detail::HostView;
using detail::Matcher;

struct Rows {
  std::vector<VertexSet> und;
  std::vector<VertexSet> dig;
};

Rows multigraph_rows(const Digraph& d, bool use_digons) {
  Rows r{std::vector<VertexSet>(d.order()), std::vector<VertexSet>(d.order(), 0)};
  for (int v = 0; v < d.order(); ++v) {
    r.und[v] = d.out(v) | d.in(v);
    if (use_digons) r.dig[v] = d.out(v) & d.in(v);
  }
  return r;
}

std::optional<Witness> first_embedding(const HostView& host, const Pattern& p) {
  std::optional<Witness> best;
  for (std::size_t i = 0; i < p.templates().size(); ++i) {
    const Template& t = p.templates()[i];
    if (t.order > host.n) continue;
    Matcher m(host, t);
    std::array<int, kMaxPatternOrder> map{};
    if (!m.first(map)) continue;
    Witness w{std::vector<int>(map.begin(), map.begin() + t.order), static_cast<int>(i)};
    if (!best || w.map < best->map) best = std::move(w);
  }
  return best;
}

void require_undirected(const Pattern& p) {
  if (p.is_directed()) throw InvalidParameters("pattern " + p.name() + " is directed; use contains_subdigraph");
}

// Paths by subset DP: reach[mask] holds the possible end vertices of a path
// visiting exactly mask. Returns the largest such mask size.
int subset_longest_path(int n, const std::vector<VertexSet>& out) {
  if (n == 0) return 0;
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  int best = 1;
  for (int v = 0; v < n; ++v) reach[std::size_t{1} << v] = 1u << v;
  for (std::size_t mask = 1; mask < reach.size(); ++mask) {
    std::uint32_t ends = reach[mask];
    if (!ends) continue;
    best = std::max(best, std::popcount(mask));
    if (best == n) break;
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      VertexSet next = out[v] & ~static_cast<VertexSet>(mask);
      for_each_bit(next, [&](int w) { reach[mask | (std::size_t{1} << w)] |= 1u << w; });
    }
  }
  return best;
}

class CycleSearch {
 public:
  CycleSearch(const Digraph& d, int k) : d_(d), k_(k) {}

  std::optional<std::vector<int>> run() {
    for (int s = 0; s < d_.order(); ++s) {
      path_.assign(1, s);
      allowed_ = low_bits(d_.order()) & ~low_bits(s + 1);
      if (dfs(s, allowed_)) return path_;
    }
    return std::nullopt;
  }

 private:
  // Vertices reachable from v through `free`.
  VertexSet reachable(int v, VertexSet free) const {
    VertexSet seen = 0, frontier = d_.out(v) & free;
    while (frontier) {
      seen |= frontier;
      VertexSet next = 0;
      for_each_bit(frontier, [&](int w) { next |= d_.out(w); });
      frontier = next & free & ~seen;
    }
    return seen;
  }

  bool dfs(int v, VertexSet free) {
    int s = path_.front();
    if (static_cast<int>(path_.size()) == k_) return d_.has_arc(v, s);
    int missing = k_ - static_cast<int>(path_.size());
    VertexSet reach = reachable(v, free);
    if (popcount(reach) < missing) return false;
    // Some reachable vertex must close the cycle.
    if (!(reach & d_.in(s))) return false;
    VertexSet next = d_.out(v) & free;
    while (next) {
      int w = std::countr_zero(next);
      next &= next - 1;
      path_.push_back(w);
      if (dfs(w, free & ~bit(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Digraph& d_;
  int k_;
  VertexSet allowed_ = 0;
  std::vector<int> path_;
};

}  // namespace

int longest_directed_path_order(const Digraph& d) {
  int n = d.order();
  if (n == 0) return 0;
  if (d.is_acyclic()) {
    std::vector<int> longest(n, 1);
    VertexSet done = 0;
    while (done != low_bits(n)) {
      for (int v = 0; v < n; ++v) {
        if ((done >> v) & 1 || (d.in(v) & ~done)) continue;
        for_each_bit(d.in(v), [&](int u) { longest[v] = std::max(longest[v], longest[u] + 1); });
        done |= bit(v);
      }
    }
    return *std::max_element(longest.begin(), longest.end());
  }
  if (n > kSubsetDpCap) throw CapExceeded("longest_directed_path_order on a cyclic digraph", n, kSubsetDpCap);
  return subset_longest_path(n, d.out_rows());
}

std::optional<Witness> contains_directed_cycle_of_order(const Digraph& d, int k) {
  if (k < 2) throw InvalidParameters("cycle order must be at least 2");
  if (d.order() > kSubsetDpCap) throw CapExceeded("contains_directed_cycle_of_order", d.order(), kSubsetDpCap);
  if (k > d.order()) return std::nullopt;
  auto cycle = CycleSearch(d, k).run();
  if (!cycle) return std::nullopt;
  return Witness{*cycle, 0};
}

std::optional<Witness> contains_subdigraph(const Digraph& d, const Pattern& p) {
  Rows r = multigraph_rows(d, true);
  HostView host{d.order(), d.out_rows().data(), d.in_rows().data(), r.und.data(), r.dig.data()};
  return first_embedding(host, p);
}

std::optional<Witness> contains_undirected(const SimpleGraph& g, const Pattern& p) {
  require_undirected(p);
  std::vector<VertexSet> none(g.order(), 0);
  HostView host{g.order(), g.rows().data(), g.rows().data(), g.rows().data(), none.data()};
  return first_embedding(host, p);
}

std::optional<Witness> contains_undirected(const Digraph& d, const Pattern& p, bool use_digons) {
  require_undirected(p);
  Rows r = multigraph_rows(d, use_digons);
  HostView host{d.order(), d.out_rows().data(), d.in_rows().data(), r.und.data(), r.dig.data()};
  return first_embedding(host, p);
}

std::optional<Witness> contains_anti_directed_cycle(const Digraph& d, int order) {
  return contains_subdigraph(d, Pattern::anti_directed_cycle(order));
}

namespace {

template <class HasArc, class HasEdge, class HasDigon>
bool check_witness(int host_n, const Pattern& p, const Witness& w, HasArc arc, HasEdge edge, HasDigon digon) {
  if (w.template_index < 0 || w.template_index >= static_cast<int>(p.templates().size())) return false;
  const Template& t = p.templates()[w.template_index];
  if (static_cast<int>(w.map.size()) != t.order) return false;
  VertexSet used = 0;
  for (int v : w.map) {
    if (v < 0 || v >= host_n || ((used >> v) & 1)) return false;
    used |= bit(v);
  }
  for (int a = 0; a < t.order; ++a) {
    for (int b = 0; b < t.order; ++b) {
      int u = w.map[a], v = w.map[b];
      if (((t.out[a] >> b) & 1) && !arc(u, v)) return false;
      if (((t.und[a] >> b) & 1) && !edge(u, v)) return false;
      if (((t.dig[a] >> b) & 1) && !digon(u, v)) return false;
    }
  }
  return true;
}

}  // namespace

bool witness_valid(const Digraph& host, const Pattern& p, const Witness& w) {
  return check_witness(
      host.order(), p, w, [&](int u, int v) { return host.has_arc(u, v); },
      [&](int u, int v) { return host.has_arc(u, v) || host.has_arc(v, u); },
      [&](int u, int v) { return host.has_arc(u, v) && host.has_arc(v, u); });
}

bool witness_valid(const SimpleGraph& host, const Pattern& p, const Witness& w) {
  return check_witness(
      host.order(), p, w, [](int, int) { return false; }, [&](int u, int v) { return host.has_edge(u, v); },
      [](int, int) { return false; });
}

SimpleGraph injective_graph(const SimpleGraph& g) {
  SimpleGraph inj(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.neighbors(u) & g.neighbors(v)) inj.add_edge(u, v);
  return inj;
}

namespace {

void max_independent(const SimpleGraph& g, VertexSet cand, int size, int& best) {
  if (!cand) {
    best = std::max(best, size);
    return;
  }
  if (size + popcount(cand) <= best) return;
  // Vertices with no neighbour among the candidates can always be taken.
  int v = -1, max_deg = -1;
  VertexSet free = 0;
  for_each_bit(cand, [&](int w) {
    int deg = popcount(g.neighbors(w) & cand);
    if (deg == 0) free |= bit(w);
    if (deg > max_deg) {
      max_deg = deg;
      v = w;
    }
  });
  if (free) {
    max_independent(g, cand & ~free, size + popcount(free), best);
    return;
  }
  max_independent(g, cand & ~bit(v) & ~g.neighbors(v), size + 1, best);
  max_independent(g, cand & ~bit(v), size, best);
}

}  // namespace

int independence_number(const SimpleGraph& g) {
  if (g.order() > kIndependenceCap) throw CapExceeded("independence_number", g.order(), kIndependenceCap);
  int best = 0;
  max_independent(g, low_bits(g.order()), 0, best);
  return best;
}

bool has_hamilton_directed_cycle(const Digraph& d) {
  int n = d.order();
  if (n > kHamiltonCap) throw CapExceeded("has_hamilton_directed_cycle", n, kHamiltonCap);
  if (n < 2) return false;
  // Paths from vertex 0: reach[mask] = possible end vertices.
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  reach[1] = 1;
  std::size_t full = (std::size_t{1} << n) - 1;
  for (std::size_t mask = 1; mask <= full; mask += 2) {
    std::uint32_t ends = reach[mask];
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      if (mask == full) {
        if (d.has_arc(v, 0)) return true;
        continue;
      }
      for_each_bit(d.out(v) & ~static_cast<VertexSet>(mask),
                   [&](int w) { reach[mask | (std::size_t{1} << w)] |= 1u << w; });
    }
  }
  return false;
}

int longest_path_order(const SimpleGraph& g) {
  int best = 0;
  VertexSet seen = 0;
  for (int s = 0; s < g.order(); ++s) {
    if ((seen >> s) & 1) continue;
    VertexSet comp = bit(s), frontier = bit(s);
    while (frontier) {
      VertexSet next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    std::vector<int> members;
    for_each_bit(comp, [&](int v) { members.push_back(v); });
    int m = static_cast<int>(members.size());
    bool clique = true;
    for (int v : members) clique = clique && popcount(g.neighbors(v) & comp) == m - 1;
    if (clique) {
      best = std::max(best, m);
      continue;
    }
    if (m > kSubsetDpCap) throw CapExceeded("longest_path_order component", m, kSubsetDpCap);
    std::vector<VertexSet> local(m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (g.has_edge(members[i], members[j])) local[i] |= bit(j);
    best = std::max(best, subset_longest_path(m, local));
  }
  return best;
}

}  // namespace dituran
