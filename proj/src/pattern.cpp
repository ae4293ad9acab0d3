#include "dituran/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "dituran/errors.hpp"

namespace dituran {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidParameters(msg);
}

void require_order(int order, int lo, const char* what) {
  require(order >= lo, std::string(what) + " order must be at least " + std::to_string(lo));
  require(order <= kMaxPatternOrder, std::string(what) + " order exceeds " + std::to_string(kMaxPatternOrder));
}

std::uint8_t relations(const Template& t, int a) { return t.out[a] | t.in[a] | t.und[a] | t.dig[a]; }

bool is_automorphism(const Template& t, const std::vector<int>& p) {
  auto image = [&](std::uint8_t row) {
    std::uint8_t r = 0;
    for (int s = 0; s < t.order; ++s)
      if ((row >> s) & 1) r |= static_cast<std::uint8_t>(1u << p[s]);
    return r;
  };
  for (int a = 0; a < t.order; ++a) {
    if (image(t.out[a]) != t.out[p[a]] || image(t.und[a]) != t.und[p[a]] || image(t.dig[a]) != t.dig[p[a]])
      return false;
  }
  return true;
}

void plan_pins(Template& t) {
  std::vector<std::vector<int>> autos;
  std::vector<int> p(t.order);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (is_automorphism(t, p)) autos.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::set<std::pair<int, int>> seen;
  for (int a = 0; a < t.order; ++a) {
    for (int b = 0; b < t.order; ++b) {
      if (!((relations(t, a) >> b) & 1) || seen.count({a, b})) continue;
      for (const auto& g : autos) seen.insert({g[a], g[b]});
      Template::Pin pin{a, b, {}};
      std::uint32_t placed = (1u << a) | (1u << b);
      for (int step = 2; step < t.order; ++step) {
        int best = -1, best_links = -1;
        for (int v = 0; v < t.order; ++v) {
          if ((placed >> v) & 1) continue;
          int links = std::popcount(static_cast<unsigned>(relations(t, v) & placed));
          if (links > best_links) {
            best = v;
            best_links = links;
          }
        }
        pin.rest.push_back(best);
        placed |= 1u << best;
      }
      t.pins.push_back(std::move(pin));
    }
  }
}

}  // namespace

bool Template::directed() const {
  for (int a = 0; a < order; ++a)
    if (out[a]) return true;
  return false;
}

int Template::relation_count() const {
  int c = 0;
  for (int a = 0; a < order; ++a) c += std::popcount(static_cast<unsigned>(out[a])) +
                                       std::popcount(static_cast<unsigned>(und[a])) +
                                       std::popcount(static_cast<unsigned>(dig[a]));
  return c;
}

Template make_template(const Digraph& d) {
  require(d.order() <= kMaxPatternOrder, "pattern order exceeds " + std::to_string(kMaxPatternOrder));
  Template t;
  t.order = d.order();
  for (auto [u, v] : d.arcs()) {
    t.out[u] |= static_cast<std::uint8_t>(1u << v);
    t.in[v] |= static_cast<std::uint8_t>(1u << u);
  }
  plan_pins(t);
  return t;
}

Template make_template(const SimpleGraph& g, const std::vector<std::pair<int, int>>& doubled) {
  require(g.order() <= kMaxPatternOrder, "pattern order exceeds " + std::to_string(kMaxPatternOrder));
  Template t;
  t.order = g.order();
  for (auto [u, v] : g.edges()) {
    t.und[u] |= static_cast<std::uint8_t>(1u << v);
    t.und[v] |= static_cast<std::uint8_t>(1u << u);
  }
  for (auto [u, v] : doubled) {
    t.und[u] &= static_cast<std::uint8_t>(~(1u << v));
    t.und[v] &= static_cast<std::uint8_t>(~(1u << u));
    t.dig[u] |= static_cast<std::uint8_t>(1u << v);
    t.dig[v] |= static_cast<std::uint8_t>(1u << u);
  }
  plan_pins(t);
  return t;
}

std::string to_string(C4Variant v) {
  switch (v) {
    case C4Variant::C4: return "C4";
    case C4Variant::K22: return "K22";
    case C4Variant::P22: return "P22";
    case C4Variant::P13: return "P13";
  }
  return "?";
}

Pattern Pattern::make_directed(PatternKind kind, int order, std::vector<Digraph> ds, C4Variant v) {
  auto data = std::make_shared<Data>();
  data->kind = kind;
  data->order = order;
  data->variant = v;
  data->digraph = ds.front();
  for (const auto& d : ds) data->templates.push_back(make_template(d));
  return Pattern(std::move(data));
}

Pattern Pattern::make_undirected(PatternKind kind, const SimpleGraph& g, std::vector<std::pair<int, int>> doubled,
                                 std::array<int, 3> theta) {
  auto data = std::make_shared<Data>();
  data->kind = kind;
  data->order = g.order();
  data->theta = theta;
  data->graph = g;
  data->doubled = doubled;
  data->templates.push_back(make_template(g, doubled));
  return Pattern(std::move(data));
}

Pattern Pattern::directed_path(int order) {
  require_order(order, 2, "directed path");
  Digraph d(order);
  for (int i = 0; i + 1 < order; ++i) d.add_arc(i, i + 1);
  return make_directed(PatternKind::DirectedPath, order, {d});
}

Pattern Pattern::directed_cycle(int order) {
  require_order(order, 2, "directed cycle");
  Digraph d(order);
  for (int i = 0; i < order; ++i) d.add_arc(i, (i + 1) % order);
  return make_directed(PatternKind::DirectedCycle, order, {d});
}

Pattern Pattern::orient_c4(C4Variant v) {
  std::vector<std::pair<int, int>> arcs;
  switch (v) {
    case C4Variant::C4: arcs = {{0, 1}, {1, 2}, {2, 3}, {3, 0}}; break;
    case C4Variant::K22: arcs = {{0, 1}, {0, 3}, {2, 1}, {2, 3}}; break;
    case C4Variant::P22: arcs = {{0, 1}, {1, 2}, {0, 3}, {3, 2}}; break;
    case C4Variant::P13: arcs = {{0, 1}, {1, 2}, {2, 3}, {0, 3}}; break;
  }
  return make_directed(PatternKind::OrientC4, 4, {Digraph::from_arcs(4, arcs)}, v);
}

Pattern Pattern::anti_directed_cycle(int order) {
  require_order(order, 4, "anti-directed cycle");
  require(order % 2 == 0, "anti-directed cycle order must be even");
  // Even vertices are sources in the first alternation, odd in the second.
  std::vector<Digraph> ds;
  for (int parity = 0; parity < 2; ++parity) {
    Digraph d(order);
    for (int i = parity; i < order; i += 2) {
      d.add_arc(i, (i + 1) % order);
      d.add_arc(i, (i + order - 1) % order);
    }
    ds.push_back(d);
  }
  return make_directed(PatternKind::AntiDirectedCycle, order, ds);
}

Pattern Pattern::clique(int order) {
  require_order(order, 2, "clique");
  return make_undirected(PatternKind::Clique, SimpleGraph::complete(order), {});
}

Pattern Pattern::complete_digraph(int order) {
  require_order(order, 2, "complete digraph");
  return make_directed(PatternKind::CompleteDigraph, order, {double_orientation(SimpleGraph::complete(order))});
}

Pattern Pattern::tournament(int order) {
  require_order(order, 2, "tournament");
  return make_undirected(PatternKind::Tournament, SimpleGraph::complete(order), {});
}

Pattern Pattern::undirected_cycle(int order) {
  require_order(order, 3, "cycle");
  return make_undirected(PatternKind::UndirectedCycle, cycle_graph(order), {});
}

Pattern Pattern::theta(int i, int j, int k) {
  std::array<int, 3> len{i, j, k};
  std::sort(len.begin(), len.end());
  require(len[0] >= 1, "theta path lengths must be positive");
  require(len[2] >= 2, "theta admits at most two paths of length 1");
  int order = 2 + (len[0] - 1) + (len[1] - 1) + (len[2] - 1);
  require(order <= kMaxPatternOrder, "theta order exceeds " + std::to_string(kMaxPatternOrder));
  SimpleGraph g(order);
  std::vector<std::pair<int, int>> doubled;
  int next = 2;
  int ones = 0;
  for (int l : len) {
    if (l == 1) {
      ++ones;
      g.add_edge(0, 1);
      continue;
    }
    int prev = 0;
    for (int s = 1; s < l; ++s) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  if (ones == 2) doubled.emplace_back(0, 1);
  return make_undirected(PatternKind::Theta, g, doubled, {len[0], len[1], len[2]});
}

Pattern Pattern::custom(const Digraph& d) {
  require_order(d.order(), 1, "custom pattern");
  return make_directed(PatternKind::CustomDigraph, d.order(), {d});
}

Pattern Pattern::custom(const SimpleGraph& g) {
  require_order(g.order(), 1, "custom pattern");
  return make_undirected(PatternKind::CustomGraph, g, {});
}

bool Pattern::is_directed() const {
  switch (kind()) {
    case PatternKind::DirectedPath:
    case PatternKind::DirectedCycle:
    case PatternKind::OrientC4:
    case PatternKind::AntiDirectedCycle:
    case PatternKind::CompleteDigraph:
    case PatternKind::CustomDigraph: return true;
    default: return false;
  }
}

bool Pattern::needs_digons() const { return !data_->doubled.empty(); }

Digraph Pattern::as_digraph() const {
  if (data_->digraph) return *data_->digraph;
  Digraph d(order());
  for (auto [u, v] : data_->graph->edges()) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

SimpleGraph Pattern::as_graph() const {
  if (data_->graph) return *data_->graph;
  return underlying_graph(*data_->digraph);
}

namespace {

std::string pairs_suffix(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::ostringstream os;
  os << n;
  for (auto [u, v] : pairs) os << ';' << u << '-' << v;
  return os.str();
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidParameters("bad integer '" + std::string(s) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::pair<int, std::vector<std::pair<int, int>>> parse_pairs(std::string_view s) {
  auto parts = split(s, ';');
  int n = parse_int(parts[0]);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto uv = split(parts[i], '-');
    if (uv.size() != 2) throw InvalidParameters("bad pair '" + std::string(parts[i]) + "'");
    pairs.emplace_back(parse_int(uv[0]), parse_int(uv[1]));
  }
  return {n, pairs};
}

}  // namespace

std::string Pattern::name() const {
  const std::string k = std::to_string(order());
  switch (kind()) {
    case PatternKind::DirectedPath: return "dipath:" + k;
    case PatternKind::DirectedCycle: return "dicycle:" + k;
    case PatternKind::OrientC4: return "c4:" + to_string(data_->variant);
    case PatternKind::AntiDirectedCycle: return "anticycle:" + k;
    case PatternKind::Clique: return "clique:" + k;
    case PatternKind::CompleteDigraph: return "complete-digraph:" + k;
    case PatternKind::Tournament: return "tournament:" + k;
    case PatternKind::UndirectedCycle: return "cycle:" + k;
    case PatternKind::Theta:
      return "theta:" + std::to_string(data_->theta[0]) + "," + std::to_string(data_->theta[1]) + "," +
             std::to_string(data_->theta[2]);
    case PatternKind::CustomDigraph: return "custom-digraph:" + pairs_suffix(order(), data_->digraph->arcs());
    case PatternKind::CustomGraph: return "custom-graph:" + pairs_suffix(order(), data_->graph->edges());
  }
  return "?";
}

Pattern Pattern::from_name(std::string_view name) {
  auto colon = name.find(':');
  if (colon == std::string_view::npos) throw InvalidParameters("pattern name needs '<kind>:<args>'");
  std::string_view kind = name.substr(0, colon);
  std::string_view arg = name.substr(colon + 1);
  if (kind == "dipath") return directed_path(parse_int(arg));
  if (kind == "dicycle") return directed_cycle(parse_int(arg));
  if (kind == "anticycle") return anti_directed_cycle(parse_int(arg));
  if (kind == "clique") return clique(parse_int(arg));
  if (kind == "complete-digraph") return complete_digraph(parse_int(arg));
  if (kind == "tournament") return tournament(parse_int(arg));
  if (kind == "cycle") return undirected_cycle(parse_int(arg));
  if (kind == "c4") {
    for (auto v : {C4Variant::C4, C4Variant::K22, C4Variant::P22, C4Variant::P13})
      if (arg == to_string(v)) return orient_c4(v);
    throw InvalidParameters("unknown C4 orientation '" + std::string(arg) + "'");
  }
  if (kind == "theta") {
    auto parts = split(arg, ',');
    if (parts.size() != 3) throw InvalidParameters("theta needs three lengths");
    return theta(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]));
  }
  if (kind == "custom-digraph") {
    auto [n, pairs] = parse_pairs(arg);
    return custom(Digraph::from_arcs(n, pairs));
  }
  if (kind == "custom-graph") {
    auto [n, pairs] = parse_pairs(arg);
    return custom(SimpleGraph::from_edges(n, pairs));
  }
  throw InvalidParameters("unknown pattern kind '" + std::string(kind) + "'");
}

}  // namespace dituran
