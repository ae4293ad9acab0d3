#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dituran/graph.hpp"

namespace dituran {

inline constexpr int kDefaultCanonicalCap = 10;

// Isomorphism-class key. Two values of the same kind have equal forms iff
// they are isomorphic (part-respecting for bipartite graphs).
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  static CanonicalForm from_hex(const std::string& hex);

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Lexicographically least pair-state code over all relabelings that respect
// refined vertex colours. Throws CapExceeded when the order exceeds cap.
CanonicalForm canonical_form(const Digraph& d, int cap = kDefaultCanonicalCap);
CanonicalForm canonical_form(const SimpleGraph& g, int cap = kDefaultCanonicalCap);
// Parts stay distinguishable: X is never exchanged with Y. cap bounds the
// part size.
CanonicalForm canonical_form(const BipartiteGraph& b, int cap = kDefaultCanonicalCap);
// Minimum of the forms of b and its transpose, for comparisons where the
// two sides may be exchanged.
CanonicalForm canonical_form_part_swap(const BipartiteGraph& b, int cap = kDefaultCanonicalCap);

// Relabeling achieving the canonical form: vertex v goes to position perm[v].
std::vector<int> canonical_labeling(const Digraph& d, int cap = kDefaultCanonicalCap);

bool isomorphic(const Digraph& a, const Digraph& b, int cap = kDefaultCanonicalCap);
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b, int cap = kDefaultCanonicalCap);

// Keeps the first member of each isomorphism class, in input order.
std::vector<Digraph> dedupe(const std::vector<Digraph>& ds, int cap = kDefaultCanonicalCap);
std::vector<SimpleGraph> dedupe(const std::vector<SimpleGraph>& gs, int cap = kDefaultCanonicalCap);

}  // namespace dituran
