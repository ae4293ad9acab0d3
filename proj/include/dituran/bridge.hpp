#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dituran/detect.hpp"
#include "dituran/graph.hpp"

namespace dituran {

// x_i y_j is an edge iff i -> j is an arc.
BipartiteGraph brp(const Digraph& d);
// Inverse of brp. Throws DiagonalEdge when some x_i y_i is present.
Digraph drp(const BipartiteGraph& b);

// Complement within X x Y.
BipartiteGraph quasi_complement(const BipartiteGraph& b);

// mate[i] is the y matched to x_i, or -1.
struct Matching {
  std::vector<int> mate;
  int size() const;
  bool perfect() const;
};

// Augmenting paths, x in increasing order, each trying y in increasing order.
Matching maximum_matching(const BipartiteGraph& b);
std::optional<Matching> perfect_matching(const BipartiteGraph& b);

// sigma[i]: the old column that becomes column i, so the new diagonal pair
// x_i y_i was x_i y_{sigma[i]}.
struct Labeling {
  std::vector<int> sigma;
};

// Relabels Y along a perfect matching of the quasi-complement, leaving the
// diagonal empty. Throws NoMatching when none exists.
std::pair<Labeling, BipartiteGraph> relabel_for_drp(const BipartiteGraph& b);

// Requires n >= 3 and b free of C4 (InvalidParameters otherwise); relabels
// and applies drp, giving a digraph free of the anti-directed C4 with e(b)
// arcs.
Digraph theorem_anticycle_pipeline(const BipartiteGraph& b);

// Does b contain a cycle of the given even length?
std::optional<Witness> bipartite_contains_cycle(const BipartiteGraph& b, int length);

// The cycle of brp(d) traced by an anti-directed cycle witness of d:
// x_s for sources, n + t for sinks, in cyclic order.
std::vector<int> anticycle_to_bipartite_cycle(const Digraph& d, const Witness& w);

}  // namespace dituran
