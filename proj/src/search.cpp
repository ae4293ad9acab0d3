#include "dituran/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "dituran/detail/matcher.hpp"
#include "dituran/detect.hpp"
#include "dituran/errors.hpp"
#include "dituran/formulas.hpp"

namespace dituran {
namespace {

using i64 = std::int64_t;
using Clock = std::chrono::steady_clock;
using detail::HostView;
using detail::Matcher;

class Budget {
 public:
  explicit Budget(const SearchBudget& b) : b_(b), start_(Clock::now()) {}

  // False once a limit is hit; the search then unwinds.
  bool tick() {
    std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (stop_.load(std::memory_order_relaxed)) return false;
    if (b_.max_nodes && n > *b_.max_nodes) return halt();
    if (b_.max_seconds && (n & 1023) == 0) {
      std::chrono::duration<double> dt = Clock::now() - start_;
      if (dt.count() > *b_.max_seconds) return halt();
    }
    return true;
  }
  bool stopped() const { return stop_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  bool halt() {
    stop_.store(true);
    return false;
  }

  SearchBudget b_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

void require_relations(const Pattern& p) {
  for (const auto& t : p.templates())
    if (t.relation_count() == 0) throw InvalidParameters("pattern " + p.name() + " has no arcs or edges");
}

bool has_isolated_vertex(const Pattern& p) {
  for (const auto& t : p.templates())
    for (int a = 0; a < t.order; ++a)
      if (!(t.out[a] | t.in[a] | t.und[a] | t.dig[a])) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Orderly engine. Pairs are filled column by column in colex order
// (0,1), (0,2), (1,2), (0,3), ... A pair holds 2*[lo->hi] + [hi->lo]; graph
// searches use only the states 3 (edge) and 0. Once the column of vertex j
// is complete the labeled object on 0..j must have the lexicographically
// greatest code among all its relabelings; every prefix of such a labeling
// is again greatest, so each isomorphism class is reached exactly once.

struct EngineConfig {
  int n = 0;
  bool graph = false;
  const Pattern* pattern = nullptr;
  bool threshold_mode = false;
  i64 threshold = 0;
  // sub_ex[m]: most arcs of an admissible object on m < n vertices.
  std::vector<i64> sub_ex;
  i64 seed = 0;
  i64 bound_cap = std::numeric_limits<i64>::max();
  int threads = 1;
  const std::function<void(const std::vector<VertexSet>&)>* visit = nullptr;
};

struct Found {
  i64 arcs;
  std::vector<VertexSet> out;
};

struct Shared {
  explicit Shared(const SearchBudget& b) : budget(b) {}
  Budget budget;
  std::atomic<i64> best{0};
  std::mutex mu;
  std::vector<Found> found;
  bool overflow = false;
};

constexpr std::uint8_t swap_state(std::uint8_t s) { return static_cast<std::uint8_t>(((s & 1) << 1) | (s >> 1)); }

class Worker {
 public:
  Worker(const EngineConfig& cfg, Shared& sh) : cfg_(cfg), sh_(sh), n_(cfg.n), per_pair_(cfg.graph ? 1 : 2) {
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) pairs_.push_back({i, j});
    host_ = HostView{n_, out_.data(), in_.data(), und_.data(), dig_.data()};
    if (cfg.pattern)
      for (const auto& t : cfg.pattern->templates())
        if (t.order <= n_) matchers_.emplace_back(host_, t);
  }

  int pair_count() const { return static_cast<int>(pairs_.size()); }

  void run(int from) { dfs(from); }

  // Replays a prefix of pair states produced by collect().
  void load(const std::vector<std::uint8_t>& prefix) {
    reset();
    for (std::size_t k = 0; k < prefix.size(); ++k) apply(pairs_[k].first, pairs_[k].second, prefix[k]);
  }

  // Valid prefixes of the given depth.
  std::vector<std::vector<std::uint8_t>> collect(int depth) {
    collect_depth_ = depth;
    dfs(0);
    collect_depth_ = -1;
    return std::move(prefixes_);
  }

  std::vector<Found> take_found() { return std::move(found_); }

 private:
  void reset() {
    out_.fill(0);
    in_.fill(0);
    und_.fill(0);
    dig_.fill(0);
    deg_.fill(0);
    cur_ = 0;
  }

  void apply(int i, int j, std::uint8_t s) {
    st_[i][j] = s;
    if (!s) return;
    if (cfg_.graph) {
      out_[i] |= bit(j), out_[j] |= bit(i), in_[i] |= bit(j), in_[j] |= bit(i);
      cur_ += 1, deg_[i] += 1, deg_[j] += 1;
    } else {
      int a = 0;
      if (s & 2) out_[i] |= bit(j), in_[j] |= bit(i), ++a;
      if (s & 1) out_[j] |= bit(i), in_[i] |= bit(j), ++a;
      if (s == 3) dig_[i] |= bit(j), dig_[j] |= bit(i);
      cur_ += a, deg_[i] += a, deg_[j] += a;
    }
    und_[i] |= bit(j), und_[j] |= bit(i);
  }

  void unapply(int i, int j, std::uint8_t s) {
    st_[i][j] = 0;
    if (!s) return;
    VertexSet bi = ~bit(i), bj = ~bit(j);
    int a = cfg_.graph ? 1 : (s == 3 ? 2 : 1);
    out_[i] &= bj, out_[j] &= bi, in_[i] &= bj, in_[j] &= bi;
    und_[i] &= bj, und_[j] &= bi, dig_[i] &= bj, dig_[j] &= bi;
    cur_ -= a, deg_[i] -= a, deg_[j] -= a;
  }

  bool creates_pattern(int i, int j) {
    for (auto& m : matchers_)
      if (m.through(i, j)) return true;
    return false;
  }

  i64 target() const { return cfg_.threshold_mode ? cfg_.threshold : sh_.best.load(std::memory_order_relaxed); }

  void dfs(int idx) {
    if (idx == pair_count()) {
      leaf();
      return;
    }
    if (collect_depth_ >= 0 && idx == collect_depth_) {
      std::vector<std::uint8_t> prefix(idx);
      for (int k = 0; k < idx; ++k) prefix[k] = st_[pairs_[k].first][pairs_[k].second];
      prefixes_.push_back(std::move(prefix));
      return;
    }
    auto [i, j] = pairs_[idx];
    static constexpr std::uint8_t kDigraphStates[] = {3, 2, 1, 0};
    static constexpr std::uint8_t kGraphStates[] = {3, 0};
    const std::uint8_t* states = cfg_.graph ? kGraphStates : kDigraphStates;
    int nstates = cfg_.graph ? 2 : 4;
    int rest_col = j - 1 - i;
    int later = n_ - 1 - j;
    for (int t = 0; t < nstates; ++t) {
      std::uint8_t s = states[t];
      if (!sh_.budget.tick()) return;
      apply(i, j, s);
      if (s && creates_pattern(i, j)) {
        unapply(i, j, s);
        continue;
      }
      i64 goal = target();
      i64 bound = cur_ + per_pair_ * (rest_col + i64{j + 1} * later) + cfg_.sub_ex[later];
      bound = std::min(bound, cfg_.bound_cap);
      i64 need = n_ >= 2 ? goal - cfg_.sub_ex[n_ - 1] : 0;
      bool hopeless = bound < goal || deg_[i] + per_pair_ * later < need ||
                      deg_[j] + per_pair_ * (rest_col + later) < need;
      if (hopeless) {
        unapply(i, j, s);
        break;  // later states carry no more arcs
      }
      if (i == j - 1 && !is_greatest(j + 1)) {
        unapply(i, j, s);
        continue;
      }
      dfs(idx + 1);
      unapply(i, j, s);
      if (sh_.budget.stopped()) return;
    }
  }

  void leaf() {
    if (cfg_.visit) {
      (*cfg_.visit)(std::vector<VertexSet>(out_.begin(), out_.begin() + n_));
      return;
    }
    if (cfg_.threshold_mode) {
      if (cur_ >= cfg_.threshold) store();
      return;
    }
    i64 b = sh_.best.load();
    while (cur_ > b && !sh_.best.compare_exchange_weak(b, cur_)) {
    }
    if (cur_ >= sh_.best.load()) {
      if (!found_.empty() && found_.back().arcs < cur_)
        std::erase_if(found_, [&](const Found& f) { return f.arcs < cur_; });
      store();
    }
  }

  void store() {
    if (found_.size() >= kExtremalSetCap) {
      overflow_ = true;
      std::lock_guard lock(sh_.mu);
      sh_.overflow = true;
      return;
    }
    found_.push_back(Found{cur_, std::vector<VertexSet>(out_.begin(), out_.begin() + n_)});
  }

  // Is the code of the object on 0..m-1 the greatest over all relabelings?
  bool is_greatest(int m) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        ps_[a][b] = st_[a][b];
        ps_[b][a] = swap_state(st_[a][b]);
      }
    // v and w are twins when exchanging them is an automorphism.
    for (int v = 0; v < m; ++v) {
      twins_below_[v] = 0;
      for (int w = 0; w < v; ++w) {
        if (ps_[w][v] != 0 && ps_[w][v] != 3) continue;
        bool same = true;
        for (int x = 0; x < m && same; ++x)
          if (x != v && x != w) same = ps_[v][x] == ps_[w][x];
        if (same) twins_below_[v] |= bit(w);
      }
    }
    greater_found_ = false;
    place(0, m, 0);
    return !greater_found_;
  }

  void place(int c, int m, VertexSet used) {
    if (c == m) return;
    for (int v = 0; v < m; ++v) {
      if ((used >> v) & 1) continue;
      if (twins_below_[v] & ~used) continue;
      int cmp = 0;
      for (int r = 0; r < c && !cmp; ++r) {
        std::uint8_t s = ps_[perm_[r]][v], orig = st_[r][c];
        cmp = s > orig ? 1 : s < orig ? -1 : 0;
      }
      if (cmp > 0) {
        greater_found_ = true;
        return;
      }
      if (cmp < 0) continue;
      perm_[c] = v;
      place(c + 1, m, used | bit(v));
      if (greater_found_) return;
    }
  }

  const EngineConfig& cfg_;
  Shared& sh_;
  int n_;
  int per_pair_;
  std::vector<std::pair<int, int>> pairs_;
  std::array<VertexSet, kSearchCap> out_{}, in_{}, und_{}, dig_{};
  std::array<int, kSearchCap> deg_{};
  std::uint8_t st_[kSearchCap][kSearchCap]{};
  std::uint8_t ps_[kSearchCap][kSearchCap]{};
  std::array<VertexSet, kSearchCap> twins_below_{};
  std::array<int, kSearchCap> perm_{};
  bool greater_found_ = false;
  i64 cur_ = 0;
  HostView host_;
  std::vector<Matcher> matchers_;
  std::vector<Found> found_;
  bool overflow_ = false;
  int collect_depth_ = -1;
  std::vector<std::vector<std::uint8_t>> prefixes_;
};

struct EngineResult {
  i64 best = 0;
  std::vector<Found> found;
  bool complete = true;
  bool overflow = false;
};

EngineResult run_engine(const EngineConfig& cfg, Shared& sh) {
  sh.best.store(cfg.threshold_mode ? cfg.threshold : cfg.seed);
  std::vector<Found> all;
  int threads = cfg.visit ? 1 : cfg.threads;
  Worker first(cfg, sh);
  if (threads <= 1 || first.pair_count() < 4) {
    first.run(0);
    all = first.take_found();
  } else {
    int depth = std::min(first.pair_count() - 1, 6);
    auto prefixes = first.collect(depth);
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<Found>> parts(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        Worker w(cfg, sh);
        for (std::size_t k; (k = next.fetch_add(1)) < prefixes.size();) {
          w.load(prefixes[k]);
          w.run(depth);
          if (sh.budget.stopped()) break;
        }
        parts[t] = w.take_found();
      });
    }
    for (auto& th : pool) th.join();
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
  }
  EngineResult res;
  res.best = sh.best.load();
  if (!cfg.threshold_mode) std::erase_if(all, [&](const Found& f) { return f.arcs != res.best; });
  res.found = std::move(all);
  res.complete = !sh.budget.stopped();
  res.overflow = sh.overflow;
  return res;
}

Digraph digraph_from_rows(const std::vector<VertexSet>& out) {
  int n = static_cast<int>(out.size());
  Digraph d(n);
  for (int u = 0; u < n; ++u) for_each_bit(out[u], [&](int v) { d.add_arc(u, v); });
  return d;
}

SimpleGraph graph_from_rows(const std::vector<VertexSet>& adj) {
  int n = static_cast<int>(adj.size());
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) for_each_bit(adj[u] & ~low_bits(u + 1), [&](int v) { g.add_edge(u, v); });
  return g;
}

i64 max_pairs(int m, bool graph) { return i64{m} * (m - 1) / (graph ? 2 : 1); }

i64 proven_cap(int n, const Pattern& p, bool graph) {
  if (graph) return std::numeric_limits<i64>::max();
  int k = p.order() - 1;
  if (p.kind() == PatternKind::DirectedPath && k >= 1) return cor7_upper_bound(n, k);
  if (p.kind() == PatternKind::DirectedCycle && k >= 3) return ex_dicycle(n, k).value;
  return std::numeric_limits<i64>::max();
}

// Values of the same search on fewer vertices, computed bottom-up.
std::vector<i64> sub_values(int n, const Pattern* p, bool graph, Shared& sh, int threads) {
  std::vector<i64> sub(std::max(n, 1), 0);
  for (int m = 0; m < n; ++m) {
    if (!p || m < p->order()) {
      sub[m] = max_pairs(m, graph);
      continue;
    }
    EngineConfig cfg;
    cfg.n = m;
    cfg.graph = graph;
    cfg.pattern = p;
    cfg.sub_ex.assign(sub.begin(), sub.begin() + std::max(m, 1));
    cfg.seed = has_isolated_vertex(*p) || m == 0 ? 0 : sub[m - 1];
    cfg.threads = threads;
    Shared local(SearchBudget{});
    sub[m] = run_engine(cfg, local).best;
    if (sh.budget.stopped()) break;
  }
  return sub;
}

void check_order(int n, const char* what) {
  if (n < 0) throw InvalidParameters("negative order");
  if (n > kSearchCap) throw CapExceeded(what, n, kSearchCap);
}

ExtremalReport orderly_search(int n, const Pattern& p, bool graph, const SearchOptions& opt) {
  check_order(n, graph ? "search_ex_graph" : "search_ex_digraph");
  require_relations(p);
  if (graph && p.is_directed()) throw InvalidParameters("graph search needs an undirected pattern");
  int threads = resolve_threads(opt.threads);
  Shared sh(opt.budget);
  EngineConfig cfg;
  cfg.n = n;
  cfg.graph = graph;
  cfg.pattern = &p;
  cfg.sub_ex = sub_values(n, &p, graph, sh, threads);
  cfg.seed = has_isolated_vertex(p) || n == 0 ? 0 : cfg.sub_ex[n - 1];
  cfg.threads = threads;
  if (opt.proven_bounds) cfg.bound_cap = proven_cap(n, p, graph);
  auto res = run_engine(cfg, sh);

  ExtremalReport r;
  r.pattern = p.name();
  r.object = graph ? "graph" : "digraph";
  r.n = n;
  r.ex_value = res.best;
  r.complete = res.complete;
  r.overflow = res.overflow;
  r.nodes_explored = sh.budget.nodes();
  for (const auto& f : res.found) {
    if (graph) {
      auto g = graph_from_rows(f.out);
      r.extremal_set.push_back({canonical_form(g), g});
    } else {
      auto d = digraph_from_rows(f.out);
      r.extremal_set.push_back({canonical_form(d), d});
    }
  }
  std::sort(r.extremal_set.begin(), r.extremal_set.end(),
            [](const ExtremalClass& a, const ExtremalClass& b) { return a.form < b.form; });
  return r;
}

// ---------------------------------------------------------------------------
// Bipartite search. Rows are bitmasks with column c at bit n-1-c, so numeric
// order is lexicographic order with column 0 most significant. Rows are kept
// non-increasing and so are the column prefixes (double-lex order), which
// every isomorphism class admits.

class BipartiteSearch {
 public:
  BipartiteSearch(int n, int cycle_order, i64 seed, Shared& sh) : n_(n), len_(cycle_order), sh_(sh), rows_(n, 0) {
    best_ = seed;
    sh_.best.store(seed);
    if (len_ != 4) {
      adj_.assign(2 * n, 0);
      zero_.assign(2 * n, 0);
      host_ = HostView{2 * n, adj_.data(), adj_.data(), adj_.data(), zero_.data()};
      pattern_ = Pattern::undirected_cycle(cycle_order);
      matcher_.emplace(host_, pattern_->templates().front());
    }
    // fill[R][P]: most edges R rows can carry using at most P column pairs.
    int pairs = n * (n - 1) / 2;
    fill_.assign(n + 1, std::vector<int>(pairs + 1, 0));
    for (int rows = 0; rows <= n; ++rows)
      for (int budget = 0; budget <= pairs; ++budget) {
        std::vector<int> size(rows, 0);
        int left = budget, total = 0;
        while (true) {
          int pick = -1;
          for (int r = 0; r < rows; ++r)
            if (size[r] < n && size[r] <= left && (pick < 0 || size[r] < size[pick])) pick = r;
          if (pick < 0) break;
          left -= size[pick];
          ++size[pick];
          ++total;
        }
        fill_[rows][budget] = total;
      }
  }

  void run() { row(0, low_bits(n_) & ~VertexSet{1}, low_bits(n_), 0, 0); }

  i64 best() const { return best_; }
  std::vector<std::vector<VertexSet>>& found() { return found_; }

 private:
  // tied: bit b set while the column prefixes at bits b and b-1 agree.
  void row(int i, VertexSet tied, VertexSet cap, int edges, int pairs_used) {
    if (i == n_) {
      if (edges > best_) {
        best_ = edges;
        found_.clear();
      }
      if (edges == best_) {
        if (found_.size() >= kExtremalSetCap)
          sh_.overflow = true;
        else
          found_.push_back(rows_);
      }
      return;
    }
    int total_pairs = n_ * (n_ - 1) / 2;
    for (VertexSet s = cap + 1; s-- > 0;) {
      if (!sh_.budget.tick()) return;
      int size = popcount(s);
      int rest = n_ - i - 1;
      i64 bound;
      int used = pairs_used + size * (size - 1) / 2;
      if (len_ == 4) {
        if (used > total_pairs) continue;
        bound = edges + size + fill_[rest][total_pairs - used];
      } else {
        bound = edges + size + i64{rest} * n_;
      }
      if (bound < best_) continue;
      if (tied & ~s & (s << 1)) continue;
      if (!admissible(i, s)) continue;
      rows_[i] = s;
      if (len_ != 4) set_row(i, s, true);
      row(i + 1, tied & ~(s ^ (s << 1)), s, edges + size, used);
      if (len_ != 4) set_row(i, s, false);
      rows_[i] = 0;
      if (sh_.budget.stopped()) return;
    }
  }

  bool admissible(int i, VertexSet s) {
    if (len_ == 4) {
      for (int r = 0; r < i; ++r)
        if (popcount(s & rows_[r]) > 1) return false;
      return true;
    }
    bool ok = true;
    set_row(i, s, true);
    for_each_bit(s, [&](int b) {
      if (ok && matcher_->through(i, n_ + b)) ok = false;
    });
    set_row(i, s, false);
    return ok;
  }

  void set_row(int i, VertexSet s, bool on) {
    for_each_bit(s, [&](int b) {
      int y = n_ + b;
      if (on)
        adj_[i] |= bit(y), adj_[y] |= bit(i);
      else
        adj_[i] &= ~bit(y), adj_[y] &= ~bit(i);
    });
  }

  int n_;
  int len_;
  Shared& sh_;
  std::vector<VertexSet> rows_;
  i64 best_ = 0;
  std::vector<std::vector<VertexSet>> found_;
  std::vector<std::vector<int>> fill_;
  std::vector<VertexSet> adj_, zero_;
  HostView host_;
  std::optional<Pattern> pattern_;
  std::optional<Matcher> matcher_;
};

BipartiteGraph bipartite_from_rows(int n, const std::vector<VertexSet>& rows) {
  BipartiteGraph b(n);
  for (int i = 0; i < n; ++i) for_each_bit(rows[i], [&](int bt) { b.add_edge(i, n - 1 - bt); });
  return b;
}

}  // namespace

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DITURAN_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ExtremalReport search_ex_digraph(int n, const Pattern& p, const SearchOptions& opt) {
  return orderly_search(n, p, false, opt);
}

ExtremalReport search_ex_graph(int n, const Pattern& p, const SearchOptions& opt) {
  return orderly_search(n, p, true, opt);
}

ExtremalReport search_ex_bipartite(int n, int cycle_order, const SearchOptions& opt) {
  check_order(n, "search_ex_bipartite");
  if (cycle_order < 4 || cycle_order % 2 || cycle_order > kMaxPatternOrder)
    throw InvalidParameters("cycle order must be even, between 4 and 8");
  Shared sh(opt.budget);
  i64 seed = 0;
  for (int m = 1; m < n; ++m) {
    BipartiteSearch sub(m, cycle_order, seed, sh);
    sub.run();
    seed = sub.best() + 1;
  }
  BipartiteSearch search(n, cycle_order, n > 0 ? seed : 0, sh);
  search.run();

  ExtremalReport r;
  r.pattern = "bipartite-c" + std::to_string(cycle_order);
  r.object = "bipartite";
  r.n = n;
  r.ex_value = search.best();
  r.complete = !sh.budget.stopped();
  r.overflow = sh.overflow;
  r.nodes_explored = sh.budget.nodes();
  std::map<CanonicalForm, BipartiteGraph> classes;
  for (const auto& rows : search.found()) {
    auto b = bipartite_from_rows(n, rows);
    classes.try_emplace(canonical_form(b), b);
  }
  for (auto& [form, b] : classes) r.extremal_set.push_back({form, b});
  return r;
}

// ---------------------------------------------------------------------------

ExtremalReport naive_ex_digraph(int n, const Pattern& p) {
  if (n < 0 || n > 4) throw CapExceeded("naive_ex_digraph", n, 4);
  require_relations(p);
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.push_back({i, j});
  std::map<CanonicalForm, Digraph> classes;
  i64 best = -1;
  std::uint64_t total = std::uint64_t{1} << (2 * pairs.size()), nodes = 0;
  for (std::uint64_t code = 0; code < total; ++code, ++nodes) {
    Digraph d(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      int s = (code >> (2 * k)) & 3;
      if (s & 2) d.add_arc(pairs[k].first, pairs[k].second);
      if (s & 1) d.add_arc(pairs[k].second, pairs[k].first);
    }
    if (d.arc_count() < best || contains_subdigraph(d, p)) continue;
    if (d.arc_count() > best) {
      best = d.arc_count();
      classes.clear();
    }
    classes.try_emplace(canonical_form(d), d);
  }
  ExtremalReport r;
  r.pattern = p.name();
  r.object = "digraph";
  r.n = n;
  r.ex_value = best;
  r.nodes_explored = nodes;
  for (auto& [form, d] : classes) r.extremal_set.push_back({form, d});
  return r;
}

ExtremalReport naive_ex_graph(int n, const Pattern& p) {
  if (n < 0 || n > 5) throw CapExceeded("naive_ex_graph", n, 5);
  require_relations(p);
  if (p.is_directed()) throw InvalidParameters("graph search needs an undirected pattern");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.push_back({i, j});
  std::map<CanonicalForm, SimpleGraph> classes;
  i64 best = -1;
  std::uint64_t total = std::uint64_t{1} << pairs.size(), nodes = 0;
  for (std::uint64_t code = 0; code < total; ++code, ++nodes) {
    SimpleGraph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((code >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
    if (g.edge_count() < best || contains_undirected(g, p)) continue;
    if (g.edge_count() > best) {
      best = g.edge_count();
      classes.clear();
    }
    classes.try_emplace(canonical_form(g), g);
  }
  ExtremalReport r;
  r.pattern = p.name();
  r.object = "graph";
  r.n = n;
  r.ex_value = best;
  r.nodes_explored = nodes;
  for (auto& [form, g] : classes) r.extremal_set.push_back({form, g});
  return r;
}

std::vector<Digraph> enumerate_digraphs(int n, int min_arcs, const Pattern* p, const SearchOptions& opt,
                                        bool* complete) {
  check_order(n, "enumerate_digraphs");
  if (p) require_relations(*p);
  int threads = resolve_threads(opt.threads);
  Shared sh(opt.budget);
  EngineConfig cfg;
  cfg.n = n;
  cfg.pattern = p;
  cfg.threshold_mode = true;
  cfg.threshold = min_arcs;
  cfg.sub_ex = sub_values(n, p, false, sh, threads);
  cfg.threads = threads;
  auto res = run_engine(cfg, sh);
  if (complete) *complete = res.complete && !res.overflow;
  std::vector<Digraph> out;
  for (const auto& f : res.found) out.push_back(digraph_from_rows(f.out));
  std::sort(out.begin(), out.end(),
            [](const Digraph& a, const Digraph& b) { return canonical_form(a) < canonical_form(b); });
  return out;
}

void enumerate_graphs_up_to_iso(int n, const std::function<void(const SimpleGraph&)>& visit) {
  check_order(n, "enumerate_graphs_up_to_iso");
  Shared sh(SearchBudget{});
  EngineConfig cfg;
  cfg.n = n;
  cfg.graph = true;
  cfg.threshold_mode = true;
  cfg.sub_ex = sub_values(n, nullptr, true, sh, 1);
  std::function<void(const std::vector<VertexSet>&)> leaf = [&](const std::vector<VertexSet>& rows) {
    visit(graph_from_rows(rows));
  };
  cfg.visit = &leaf;
  run_engine(cfg, sh);
}

std::vector<SimpleGraph> enumerate_graphs_up_to_iso(int n) {
  std::vector<SimpleGraph> out;
  enumerate_graphs_up_to_iso(n, [&](const SimpleGraph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class SubgraphSearch {
 public:
  SubgraphSearch(const SimpleGraph& g, const Pattern& p, const SearchBudget& budget, std::optional<int> stop_above)
      : g_(g), edges_(g.edges()), budget_(budget), stop_above_(stop_above) {
    int n = g.order();
    adj_.assign(n, 0);
    zero_.assign(n, 0);
    host_ = HostView{n, adj_.data(), adj_.data(), adj_.data(), zero_.data()};
    for (const auto& t : p.templates())
      if (t.order <= n) matchers_.emplace_back(host_, t);
  }

  SubgraphResult run() {
    chosen_.assign(edges_.size(), false);
    dfs(0, 0);
    SubgraphResult r;
    r.edges = std::max(best_, 0);
    r.subgraph = SimpleGraph(g_.order());
    for (std::size_t k = 0; k < edges_.size(); ++k)
      if (best_set_.size() > k && best_set_[k]) r.subgraph.add_edge(edges_[k].first, edges_[k].second);
    r.complete = !budget_.stopped() || done();
    return r;
  }

 private:
  bool done() const { return stop_above_ && best_ > *stop_above_; }

  void dfs(std::size_t k, int cur) {
    if (done() || !budget_.tick()) return;
    if (cur + static_cast<int>(edges_.size() - k) <= best_) return;
    if (k == edges_.size()) {
      best_ = cur;
      best_set_ = chosen_;
      return;
    }
    auto [u, v] = edges_[k];
    adj_[u] |= bit(v), adj_[v] |= bit(u);
    bool bad = false;
    for (auto& m : matchers_)
      if (m.through(u, v)) {
        bad = true;
        break;
      }
    if (!bad) {
      chosen_[k] = true;
      dfs(k + 1, cur + 1);
      chosen_[k] = false;
    }
    adj_[u] &= ~bit(v), adj_[v] &= ~bit(u);
    dfs(k + 1, cur);
  }

  const SimpleGraph& g_;
  std::vector<std::pair<int, int>> edges_;
  Budget budget_;
  std::optional<int> stop_above_;
  std::vector<VertexSet> adj_, zero_;
  HostView host_;
  std::vector<Matcher> matchers_;
  std::vector<bool> chosen_, best_set_;
  int best_ = -1;
};

}  // namespace

SubgraphResult max_pattern_free_subgraph(const SimpleGraph& g, const Pattern& p, const SearchBudget& budget,
                                         std::optional<int> stop_above) {
  if (g.edge_count() > 28) throw CapExceeded("max_pattern_free_subgraph edges", g.edge_count(), 28);
  if (p.is_directed()) throw InvalidParameters("max_pattern_free_subgraph needs an undirected pattern");
  return SubgraphSearch(g, p, budget, stop_above).run();
}

LemmaSubgraphReport verify_lemma_subgraph(int n_max, const SearchBudget& budget) {
  if (n_max > 8) throw CapExceeded("verify_lemma_subgraph", n_max, 8);
  LemmaSubgraphReport rep;
  auto k4 = Pattern::clique(4);
  auto c4 = Pattern::undirected_cycle(4);
  Budget clock(budget);
  for (int n = 1; n <= n_max; ++n) {
    LemmaSubgraphReport::Row row;
    row.n = n;
    row.min_margin = std::numeric_limits<int>::max();
    enumerate_graphs_up_to_iso(n, [&](const SimpleGraph& g) {
      ++row.graphs;
      if (!rep.complete || g.edge_count() == 0 || contains_undirected(g, k4)) return;
      if (!clock.tick()) {
        rep.complete = false;
        return;
      }
      ++row.k4_free;
      auto h = max_pattern_free_subgraph(g, c4);
      int margin = 2 * h.edges - g.edge_count();
      row.min_margin = std::min(row.min_margin, margin);
      if (margin <= 0) rep.counterexamples.push_back(g);
    });
    if (row.k4_free == 0) row.min_margin = 0;
    rep.rows.push_back(row);
    if (!rep.complete) break;
  }
  return rep;
}

LemmaOrientationReport verify_lemma_orientation() {
  LemmaOrientationReport rep;
  auto p13 = Pattern::orient_c4(C4Variant::P13);
  auto contains = [&](const Digraph& d) {
    auto w = contains_subdigraph(d, p13);
    return w && witness_valid(d, p13, *w);
  };
  std::vector<std::pair<int, int>> k4_edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int mask = 0; mask < 64; ++mask) {
    Digraph d(4);
    for (int e = 0; e < 6; ++e) {
      auto [u, v] = k4_edges[e];
      if ((mask >> e) & 1)
        d.add_arc(u, v);
      else
        d.add_arc(v, u);
    }
    ++rep.k4_total;
    if (!contains(d)) continue;
    ++rep.k4_containing;
    // Negative control: some single arc removal must destroy the pattern.
    for (auto [u, v] : d.arcs()) {
      Digraph e = d;
      e.remove_arc(u, v);
      if (!contains_subdigraph(e, p13)) rep.negative_control = true;
    }
  }
  // Theta(1,1,3): the doubled pair {0,1} and the path 0-2-3-1.
  std::vector<std::pair<int, int>> theta_edges{{0, 1}, {0, 1}, {0, 2}, {2, 3}, {3, 1}};
  for (int mask = 0; mask < 32; ++mask) {
    Digraph d(4);
    for (int e = 0; e < 5; ++e) {
      auto [u, v] = theta_edges[e];
      if ((mask >> e) & 1) std::swap(u, v);
      if (!d.has_arc(u, v)) d.add_arc(u, v);
    }
    ++rep.theta_assignments;
    bool strict = ((mask & 1) != ((mask >> 1) & 1));
    bool has = contains(d);
    if (strict) {
      ++rep.theta_strict;
      rep.theta_strict_containing += has;
    } else {
      rep.theta_nonstrict_containing += has;
    }
  }
  return rep;
}

HamiltonReport verify_hamilton_corollary(int n, const SearchOptions& opt) {
  if (n < 2 || n > 5) throw InvalidParameters("verify_hamilton_corollary covers 2 <= n <= 5");
  HamiltonReport rep;
  rep.n = n;
  rep.threshold = hamilton_threshold(n);
  bool complete = true;
  auto dense = enumerate_digraphs(n, static_cast<int>(rep.threshold), nullptr, opt, &complete);
  rep.complete = complete;
  rep.classes_at_threshold = static_cast<int>(dense.size());
  for (const auto& d : dense) rep.non_hamiltonian += !has_hamilton_directed_cycle(d);
  auto below = enumerate_digraphs(n, static_cast<int>(rep.threshold - 1), nullptr, opt, &complete);
  rep.complete = rep.complete && complete;
  for (const auto& d : below)
    if (d.arc_count() == rep.threshold - 1 && !has_hamilton_directed_cycle(d)) {
      rep.sharpness_witness = d;
      break;
    }
  return rep;
}

}  // namespace dituran
