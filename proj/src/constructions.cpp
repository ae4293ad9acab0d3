#include "dituran/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "dituran/canonical.hpp"
#include "dituran/errors.hpp"

namespace dituran {
namespace {

// Structured families are deduplicated by canonical form up to this order.
constexpr int kFamilyCanonicalCap = 24;

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidParameters(msg);
}

std::vector<int> block_starts(const std::vector<int>& sizes) {
  std::vector<int> start(sizes.size() + 1, 0);
  std::partial_sum(sizes.begin(), sizes.end(), start.begin() + 1);
  return start;
}

void add_forward_arcs(Digraph& d, const std::vector<int>& sizes) {
  auto start = block_starts(sizes);
  for (std::size_t a = 0; a < sizes.size(); ++a)
    for (int u = start[a]; u < start[a + 1]; ++u)
      for (int v = start[a + 1]; v < d.order(); ++v) d.add_arc(u, v);
}

void add_complete_block(Digraph& d, int from, int size) {
  for (int u = from; u < from + size; ++u)
    for (int v = from; v < from + size; ++v)
      if (u != v) d.add_arc(u, v);
}

void add_clique(SimpleGraph& g, int from, int size) {
  for (int u = from; u < from + size; ++u)
    for (int v = u + 1; v < from + size; ++v) g.add_edge(u, v);
}

// Arrangements whose sequences of blocks differ give non-isomorphic
// digraphs for the chain families: the blocks are recovered as the strong
// components (or twin classes) in topological order. Above the canonical
// cap that sequence is used as the key instead.
std::vector<Digraph> dedupe_family(std::vector<Digraph> members, const std::vector<std::vector<int>>& keys) {
  if (members.empty() || members.front().order() <= kFamilyCanonicalCap)
    return dedupe(members, kFamilyCanonicalCap);
  std::vector<Digraph> out;
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (seen.insert(keys[i]).second) out.push_back(std::move(members[i]));
  return out;
}

}  // namespace

std::vector<int> balanced_sizes(int n, int k) {
  require(n >= 0 && k >= 1, "need n >= 0 and k >= 1");
  std::vector<int> sizes;
  int q = n / k, r = n % k;
  for (int i = 0; i < k; ++i) {
    int s = q + (i < r ? 1 : 0);
    if (s > 0) sizes.push_back(s);
  }
  return sizes;
}

SimpleGraph turan_graph(int n, int k) {
  auto sizes = balanced_sizes(n, k);
  auto start = block_starts(sizes);
  SimpleGraph g(n);
  for (std::size_t a = 0; a < sizes.size(); ++a)
    for (int u = start[a]; u < start[a + 1]; ++u)
      for (int v = start[a + 1]; v < n; ++v) g.add_edge(u, v);
  return g;
}

Digraph transitive_turan(const std::vector<int>& sizes) {
  if (sizes.empty()) throw InvalidArrangement("empty arrangement");
  auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  if (*lo <= 0) throw InvalidArrangement("part sizes must be positive");
  if (*hi - *lo > 1) throw InvalidArrangement("part sizes differ by more than one");
  int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (n > kMaxVertices) throw InvalidArrangement("more than 64 vertices");
  Digraph d(n);
  add_forward_arcs(d, sizes);
  return d;
}

std::vector<Digraph> enumerate_transitive_turan_family(int n, int k) {
  auto sizes = balanced_sizes(n, k);
  std::sort(sizes.begin(), sizes.end());
  std::vector<Digraph> members;
  std::vector<std::vector<int>> keys;
  do {
    members.push_back(transitive_turan(sizes));
    keys.push_back(sizes);
  } while (std::next_permutation(sizes.begin(), sizes.end()));
  return dedupe_family(std::move(members), keys);
}

SimpleGraph gamma_graph(int n, int k) {
  require(n >= 0 && k >= 1, "need n >= 0 and k >= 1");
  SimpleGraph g(n);
  for (int from = 0; from < n; from += k) add_clique(g, from, std::min(k, n - from));
  return g;
}

SimpleGraph gamma_ell_graph(int n, int k, int ell) {
  require(k >= 3 && k % 2 == 1, "k must be odd and at least 3");
  int q = n / k, r = n % k, h = (k - 1) / 2;
  require(r == h || r == h + 1, "r must be (k-1)/2 or (k+1)/2");
  require(ell >= 0 && ell <= q, "need 0 <= l <= q");
  SimpleGraph g(n);
  int from = 0;
  for (int i = 0; i < q - ell; ++i, from += k) add_clique(g, from, k);
  // Join part: clique on h vertices, every one adjacent to the rest.
  add_clique(g, from, h);
  for (int u = from; u < from + h; ++u)
    for (int v = from + h; v < n; ++v) g.add_edge(u, v);
  return g;
}

Digraph f_member(int n, int k, int position) {
  require(n >= 1 && k >= 1, "need n, k >= 1");
  int q = n / k, r = n % k;
  require(position >= 0 && position <= (r > 0 ? q : 0), "block position out of range");
  std::vector<int> sizes(q, k);
  if (r > 0) sizes.insert(sizes.begin() + position, r);
  Digraph d(n);
  auto start = block_starts(sizes);
  for (std::size_t a = 0; a < sizes.size(); ++a) add_complete_block(d, start[a], sizes[a]);
  add_forward_arcs(d, sizes);
  return d;
}

std::vector<Digraph> f_family(int n, int k) {
  int q = n / k, r = n % k;
  std::vector<Digraph> members;
  std::vector<std::vector<int>> keys;
  for (int pos = 0; pos <= (r > 0 ? q : 0); ++pos) {
    members.push_back(f_member(n, k, pos));
    keys.push_back({pos});
  }
  return dedupe_family(std::move(members), keys);
}

int SSplit::order() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

Digraph s_digraph(const SSplit& split) {
  const auto& s = split.sizes;
  for (int v : s)
    if (v < 0) throw InvalidArrangement("negative block size");
  int x = s[0] + s[1], y = s[2] + s[3], z = s[4] + s[5];
  if (std::max({x, y, z}) - std::min({x, y, z}) > 1) throw InvalidArrangement("X, Y, Z not almost balanced");
  int n = split.order();
  if (n > kMaxVertices) throw InvalidArrangement("more than 64 vertices");
  enum { X1, X2, Y1, Y2, Z1, Z2 };
  static constexpr std::array<std::pair<int, int>, 12> kArcs{{{X1, Y1}, {X1, Z2}, {Y1, Z1}, {Y1, X2}, {Z1, X1},
                                                              {Z1, Y2}, {X2, Y2}, {X2, Z1}, {Y2, Z2}, {Y2, X1},
                                                              {Z2, X2}, {Z2, Y1}}};
  std::vector<int> sizes(s.begin(), s.end());
  auto start = block_starts(sizes);
  Digraph d(n);
  for (auto [a, b] : kArcs)
    for (int u = start[a]; u < start[a + 1]; ++u)
      for (int v = start[b]; v < start[b + 1]; ++v) d.add_arc(u, v);
  return d;
}

std::vector<SSplit> s_splits(int n) {
  auto parts = balanced_sizes(n, 3);
  parts.resize(3, 0);
  std::sort(parts.begin(), parts.end());
  std::vector<SSplit> out;
  do {
    for (int x1 = 0; x1 <= parts[0]; ++x1)
      for (int y1 = 0; y1 <= parts[1]; ++y1)
        for (int z1 = 0; z1 <= parts[2]; ++z1)
          out.push_back(SSplit{{x1, parts[0] - x1, y1, parts[1] - y1, z1, parts[2] - z1}});
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

std::vector<Digraph> s_family(int n) {
  if (n > kFamilyCanonicalCap) throw CapExceeded("s_family", n, kFamilyCanonicalCap);
  std::vector<Digraph> members;
  for (const auto& split : s_splits(n)) members.push_back(s_digraph(split));
  return dedupe(members, kFamilyCanonicalCap);
}

Digraph small_n_path_bound_digraph(int n, int k, Direction dir) {
  require(k + 1 <= n && n <= 2 * k - 1, "need k + 1 <= n <= 2k - 1");
  Digraph d(n);
  add_complete_block(d, 0, k - 1);
  for (int x = 0; x < k - 1; ++x)
    for (int y = k - 1; y < n; ++y) {
      if (dir == Direction::XtoY)
        d.add_arc(x, y);
      else
        d.add_arc(y, x);
    }
  return d;
}

Digraph alt_extremal_digraph(int n, int k, const std::vector<int>& sizes) {
  require(2 * k <= n && n <= 3 * k - 2, "need 2k <= n <= 3k - 2");
  require(std::accumulate(sizes.begin(), sizes.end(), 0) == n, "part sizes must sum to n");
  int threes = 0;
  for (int s : sizes) {
    require(s == 3 || (s > 0 && s % 2 == 0), "parts must have size 3 or a positive even size");
    threes += s == 3;
  }
  require(threes == n - 2 * k, "need exactly n - 2k parts of size 3");
  Digraph d(n);
  auto start = block_starts(sizes);
  for (std::size_t a = 0; a < sizes.size(); ++a) {
    if (sizes[a] == 3) continue;
    add_complete_block(d, start[a], sizes[a] / 2);
    add_complete_block(d, start[a] + sizes[a] / 2, sizes[a] / 2);
  }
  add_forward_arcs(d, sizes);
  return d;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

BipartiteGraph projective_plane_bipartite(int q) {
  if (!is_prime(q)) throw NotPrime(q);
  int n = q * q + q + 1;
  if (n > kMaxVertices) throw CapExceeded("projective_plane_bipartite", n, kMaxVertices);
  // Normalized homogeneous triples: first nonzero coordinate is 1.
  std::vector<std::array<int, 3>> pts;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        int lead = a ? a : b ? b : c;
        if (lead == 1) pts.push_back({a, b, c});
      }
  BipartiteGraph b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int dot = pts[i][0] * pts[j][0] + pts[i][1] * pts[j][1] + pts[i][2] * pts[j][2];
      if (dot % q == 0) b.add_edge(i, j);
    }
  return b;
}

namespace {

struct CatalogEntry {
  int n;
  std::vector<std::pair<int, int>> edges;
};

const std::vector<CatalogEntry>& catalog_data() {
  static const std::vector<CatalogEntry> data = {
#include "c4_catalog_data.inc"
  };
  return data;
}

}  // namespace

std::vector<SimpleGraph> c4_catalog(int n) {
  require(n >= 1 && n <= 8, "catalog covers 1 <= n <= 8");
  std::vector<SimpleGraph> out;
  for (const auto& e : catalog_data())
    if (e.n == n) out.push_back(SimpleGraph::from_edges(n, e.edges));
  return out;
}

}  // namespace dituran
