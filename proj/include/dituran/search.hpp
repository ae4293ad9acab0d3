#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dituran/canonical.hpp"
#include "dituran/graph.hpp"
#include "dituran/pattern.hpp"
#include "dituran/text_format.hpp"

namespace dituran {

inline constexpr int kSearchCap = 10;
inline constexpr std::size_t kExtremalSetCap = 10000;

struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;
};

struct SearchOptions {
  SearchBudget budget;
  // 0: DITURAN_THREADS if set, else the hardware concurrency.
  int threads = 0;
  // Cap node bounds by proved closed forms (cor7 for directed paths, the
  // directed-cycle formula for k >= 3). Off by default.
  bool proven_bounds = false;
};

struct ExtremalClass {
  CanonicalForm form;
  AnyGraph representative;
};

struct ExtremalReport {
  std::string pattern;
  std::string object;  // "digraph", "graph" or "bipartite"
  int n = 0;
  std::int64_t ex_value = 0;
  // Sorted by canonical form.
  std::vector<ExtremalClass> extremal_set;
  std::uint64_t nodes_explored = 0;
  bool complete = true;
  bool overflow = false;
};

int resolve_threads(int requested);

// Orderly search over pair states {none, u->v, v->u, digon}.
ExtremalReport search_ex_digraph(int n, const Pattern& p, const SearchOptions& opt = {});
// Same engine over edge states; p must be an undirected kind.
ExtremalReport search_ex_graph(int n, const Pattern& p, const SearchOptions& opt = {});
// Balanced bipartite graphs with parts of size n and no C_{cycle_order}.
ExtremalReport search_ex_bipartite(int n, int cycle_order, const SearchOptions& opt = {});

// Every labeled object, deduplicated by canonical form. Digraphs n <= 4,
// graphs n <= 5.
ExtremalReport naive_ex_digraph(int n, const Pattern& p);
ExtremalReport naive_ex_graph(int n, const Pattern& p);

// One representative per isomorphism class among digraphs with at least
// min_arcs arcs (and free of p when given). complete is cleared on budget.
std::vector<Digraph> enumerate_digraphs(int n, int min_arcs, const Pattern* p, const SearchOptions& opt = {},
                                        bool* complete = nullptr);
void enumerate_graphs_up_to_iso(int n, const std::function<void(const SimpleGraph&)>& visit);
std::vector<SimpleGraph> enumerate_graphs_up_to_iso(int n);

struct SubgraphResult {
  int edges = 0;
  SimpleGraph subgraph;
  bool complete = true;
};

// Largest p-free spanning subgraph of g. With stop_above set, returns as soon
// as one with more than stop_above edges is found.
SubgraphResult max_pattern_free_subgraph(const SimpleGraph& g, const Pattern& p, const SearchBudget& budget = {},
                                         std::optional<int> stop_above = std::nullopt);

struct LemmaSubgraphReport {
  struct Row {
    int n = 0;
    int graphs = 0;     // all isomorphism classes
    int k4_free = 0;    // non-empty K4-free ones checked
    int min_margin = 0; // smallest 2 e(H) - e(G) seen
  };
  std::vector<Row> rows;
  std::vector<SimpleGraph> counterexamples;
  bool complete = true;
  bool passed() const { return complete && counterexamples.empty(); }
};
LemmaSubgraphReport verify_lemma_subgraph(int n_max, const SearchBudget& budget = {});

struct LemmaOrientationReport {
  int k4_total = 0;
  int k4_containing = 0;
  // Assignments of directions to the five edges of Theta(1,1,3); those that
  // make the parallel pair one digon are the strict orientations.
  int theta_assignments = 0;
  int theta_strict = 0;
  int theta_strict_containing = 0;
  int theta_nonstrict_containing = 0;
  bool negative_control = false;
  bool passed() const {
    return k4_containing == k4_total && k4_total == 64 && theta_strict_containing == theta_strict && negative_control;
  }
};
LemmaOrientationReport verify_lemma_orientation();

struct HamiltonReport {
  int n = 0;
  std::int64_t threshold = 0;
  int classes_at_threshold = 0;
  int non_hamiltonian = 0;
  std::optional<Digraph> sharpness_witness;
  bool complete = true;
  bool passed() const { return complete && non_hamiltonian == 0 && sharpness_witness.has_value(); }
};
HamiltonReport verify_hamilton_corollary(int n, const SearchOptions& opt = {});

std::string report_to_json(const ExtremalReport& r, bool include_stats = false);
// Compares value and canonical forms with a golden JSON file's contents.
bool matches_golden(const ExtremalReport& r, const std::string& golden_json, std::string* why = nullptr);

}  // namespace dituran
