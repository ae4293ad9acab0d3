#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dituran/graph.hpp"

namespace dituran {

inline constexpr int kMaxPatternOrder = 8;

enum class PatternKind {
  DirectedPath,
  DirectedCycle,
  OrientC4,
  AntiDirectedCycle,
  Clique,
  CompleteDigraph,
  Tournament,
  UndirectedCycle,
  Theta,
  CustomDigraph,
  CustomGraph,
};

// The four orientations of C4, vertices in cyclic order 0-1-2-3:
//   C4  0->1->2->3->0
//   K22 0->1, 0->3, 2->1, 2->3   (anti-directed)
//   P22 0->1->2, 0->3->2
//   P13 0->1->2->3, 0->3
enum class C4Variant { C4, K22, P22, P13 };

// Relations a template requires between its vertices. Bit s of out[t] means
// arc t->s; und[t] means an arc in at least one direction; dig[t] means a
// digon (two parallel edges of the underlying multigraph).
struct Template {
  int order = 0;
  std::array<std::uint8_t, kMaxPatternOrder> out{};
  std::array<std::uint8_t, kMaxPatternOrder> in{};
  std::array<std::uint8_t, kMaxPatternOrder> und{};
  std::array<std::uint8_t, kMaxPatternOrder> dig{};

  // Ordered pairs (a, b) carrying a relation, one per orbit of the
  // template's automorphism group, each with the order in which to extend
  // an embedding once a and b are fixed.
  struct Pin {
    int a = 0;
    int b = 0;
    std::vector<int> rest;
  };
  std::vector<Pin> pins;

  bool directed() const;
  int relation_count() const;
};

// Forbidden structure. Directed kinds are matched against arcs; undirected
// kinds against the underlying multigraph of a digraph host (or the graph
// itself for graph hosts), a doubled pair needing a digon.
class Pattern {
 public:
  static Pattern directed_path(int order);
  static Pattern directed_cycle(int order);
  static Pattern orient_c4(C4Variant v);
  static Pattern anti_directed_cycle(int order);
  static Pattern clique(int order);
  static Pattern complete_digraph(int order);
  // Any tournament on `order` vertices, i.e. K_order in Ung.
  static Pattern tournament(int order);
  static Pattern undirected_cycle(int order);
  // Three internally disjoint paths of the given lengths; a pair of
  // length-1 paths is a doubled edge.
  static Pattern theta(int i, int j, int k);
  static Pattern custom(const Digraph& d);
  static Pattern custom(const SimpleGraph& g);

  // Inverse of name(); throws InvalidParameters.
  static Pattern from_name(std::string_view name);

  PatternKind kind() const { return data_->kind; }
  int order() const { return data_->order; }
  bool is_directed() const;
  // Has a doubled pair, so never embeds in a simple graph.
  bool needs_digons() const;
  std::string name() const;

  const std::vector<Template>& templates() const { return data_->templates; }
  // The first template as a digraph (directed kinds) or graph.
  Digraph as_digraph() const;
  SimpleGraph as_graph() const;

  friend bool operator==(const Pattern& a, const Pattern& b) { return a.name() == b.name(); }

 private:
  struct Data {
    PatternKind kind{};
    int order = 0;
    C4Variant variant{};
    std::array<int, 3> theta{};
    std::optional<Digraph> digraph;
    std::optional<SimpleGraph> graph;
    std::vector<std::pair<int, int>> doubled;
    std::vector<Template> templates;
  };
  explicit Pattern(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static Pattern make_directed(PatternKind kind, int order, std::vector<Digraph> templates, C4Variant v = {});
  static Pattern make_undirected(PatternKind kind, const SimpleGraph& g, std::vector<std::pair<int, int>> doubled,
                                 std::array<int, 3> theta = {});

  std::shared_ptr<const Data> data_;
};

Template make_template(const Digraph& d);
Template make_template(const SimpleGraph& g, const std::vector<std::pair<int, int>>& doubled);

std::string to_string(C4Variant v);

}  // namespace dituran
