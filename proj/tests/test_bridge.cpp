#include <doctest.h>

#include <random>

#include "dituran/bridge.hpp"
#include "dituran/constructions.hpp"
#include "dituran/errors.hpp"
#include "dituran/search.hpp"
#include "oracles.hpp"

using namespace dituran;

namespace {

Digraph random_digraph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng)) d.add_arc(u, v);
  return d;
}

bool empty_diagonal(const BipartiteGraph& b) {
  for (int i = 0; i < b.part_size(); ++i)
    if (b.has_edge(i, i)) return false;
  return true;
}

}  // namespace

TEST_CASE("bipartite representation") {
  auto b = brp(Digraph::from_arcs(2, {{0, 1}}));
  CHECK(b.edge_count() == 1);
  CHECK(b.has_edge(0, 1));
  auto digon = brp(Digraph::from_arcs(2, {{0, 1}, {1, 0}}));
  CHECK(digon.has_edge(0, 1));
  CHECK(digon.has_edge(1, 0));
  for (const auto& s : s_family(9)) CHECK(brp(s).edge_count() == 27);
  CHECK(drp(BipartiteGraph(4)) == Digraph(4));
  CHECK_THROWS_AS(drp(BipartiteGraph::from_edges(2, {{1, 1}})), DiagonalEdge);
}

TEST_CASE("brp and drp are inverse") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    auto d = random_digraph(rng, 1 + trial % 10, 0.4);
    auto b = brp(d);
    CHECK(b.edge_count() == d.arc_count());
    CHECK(drp(b) == d);
    CHECK(empty_diagonal(b));
  }
}

TEST_CASE("quasi-complement") {
  auto full = BipartiteGraph(3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) full.add_edge(x, y);
  CHECK(quasi_complement(full).edge_count() == 0);
  auto fano = projective_plane_bipartite(2);
  CHECK(quasi_complement(quasi_complement(fano)) == fano);
  CHECK(quasi_complement(fano).edge_count() == 49 - 21);
}

TEST_CASE("maximum matchings") {
  auto diag = BipartiteGraph::from_edges(3, {{0, 0}, {1, 1}, {2, 2}});
  auto m = perfect_matching(diag);
  REQUIRE(m);
  CHECK(m->mate == std::vector<int>{0, 1, 2});
  auto star = BipartiteGraph::from_edges(3, {{0, 0}, {0, 1}, {0, 2}});
  CHECK_FALSE(perfect_matching(star));
  CHECK(maximum_matching(star).size() == 1);
}

TEST_CASE("planted perfect matchings are recovered") {
  std::mt19937 rng(71);
  std::bernoulli_distribution coin(0.15);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 20;
    auto perm = oracle::identity(n);
    std::shuffle(perm.begin(), perm.end(), rng);
    BipartiteGraph b(n);
    for (int x = 0; x < n; ++x) b.add_edge(x, perm[x]);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (coin(rng) && !b.has_edge(x, y)) b.add_edge(x, y);
    auto m = perfect_matching(b);
    REQUIRE(m);
    std::vector<char> used(n, 0);
    for (int x = 0; x < n; ++x) {
      CHECK(b.has_edge(x, m->mate[x]));
      CHECK_FALSE(used[m->mate[x]]);
      used[m->mate[x]] = 1;
    }
  }
}

TEST_CASE("matching size equals a brute-force maximum") {
  std::mt19937 rng(73);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 6;
    BipartiteGraph b(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (coin(rng)) b.add_edge(x, y);
    int best = 0;
    auto perm = oracle::identity(n);
    do {
      int c = 0;
      for (int x = 0; x < n; ++x) c += b.has_edge(x, perm[x]);
      best = std::max(best, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(maximum_matching(b).size() == best);
  }
}

TEST_CASE("relabeling for drp") {
  auto already = BipartiteGraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  auto [lab, out] = relabel_for_drp(already);
  CHECK(empty_diagonal(out));
  CHECK(out.edge_count() == 3);
  auto fano = projective_plane_bipartite(2);
  auto [flab, fout] = relabel_for_drp(fano);
  CHECK(empty_diagonal(fout));
  CHECK(oracle::isomorphic(fout, fano));
  for (int i = 0; i < 7; ++i) CHECK_FALSE(fano.has_edge(i, flab.sigma[i]));
  BipartiteGraph full(2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) full.add_edge(x, y);
  CHECK_THROWS_AS(relabel_for_drp(full), NoMatching);
}

TEST_CASE("anticycle pipeline") {
  auto fano = projective_plane_bipartite(2);
  auto d = theorem_anticycle_pipeline(fano);
  CHECK(d.order() == 7);
  CHECK(d.arc_count() == 21);
  CHECK_FALSE(oracle::contains(d, oracle::k22()));
  CHECK(theorem_anticycle_pipeline(BipartiteGraph(3)) == Digraph(3));
  for (const auto& c : search_ex_bipartite(3, 4).extremal_set) {
    auto out = theorem_anticycle_pipeline(std::get<BipartiteGraph>(c.representative));
    CHECK(out.arc_count() == 6);
    CHECK_FALSE(oracle::contains(out, oracle::k22()));
  }
  CHECK_THROWS_AS(theorem_anticycle_pipeline(BipartiteGraph(2)), InvalidParameters);
  BipartiteGraph k22(3);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) k22.add_edge(x, y);
  CHECK_THROWS_AS(theorem_anticycle_pipeline(k22), InvalidParameters);
}

TEST_CASE("anti-directed cycles map to bipartite cycles") {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    auto d = random_digraph(rng, 4 + trial % 3, 0.4);
    for (int len : {4, 6}) {
      auto w = contains_anti_directed_cycle(d, len);
      if (!w) continue;
      auto cyc = anticycle_to_bipartite_cycle(d, *w);
      REQUIRE(cyc.size() == static_cast<std::size_t>(len));
      auto g = oracle::flatten(brp(d));
      for (int i = 0; i < len; ++i) CHECK(g.has_edge(cyc[i], cyc[(i + 1) % len]));
      auto sorted = cyc;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
  }
}
