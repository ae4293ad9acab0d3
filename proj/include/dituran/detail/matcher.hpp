#pragma once

#include <array>
#include <bit>

#include "dituran/graph.hpp"
#include "dituran/pattern.hpp"

namespace dituran::detail {

// Host adjacency seen by the matcher. und and dig are the edge and digon
// rows of the underlying multigraph; a simple-graph host passes dig = 0 rows.
struct HostView {
  int n = 0;
  const VertexSet* out = nullptr;
  const VertexSet* in = nullptr;
  const VertexSet* und = nullptr;
  const VertexSet* dig = nullptr;
};

class Matcher {
 public:
  Matcher(const HostView& host, const Template& t) : h_(host), t_(t) {
    for (int a = 0; a < t.order; ++a) {
      need_out_[a] = std::popcount(static_cast<unsigned>(t.out[a]));
      need_in_[a] = std::popcount(static_cast<unsigned>(t.in[a]));
      need_und_[a] = std::popcount(static_cast<unsigned>(t.und[a] | t.dig[a] | t.out[a] | t.in[a]));
      need_dig_[a] = std::popcount(static_cast<unsigned>(t.dig[a]));
    }
  }

  // Lexicographically least embedding, pattern vertices taken in index order.
  bool first(std::array<int, kMaxPatternOrder>& map) {
    map_.fill(-1);
    if (!extend_in_order(0, 0)) return false;
    map = map_;
    return true;
  }

  // Is there an embedding sending some related pair (a, b) onto (u, v)?
  bool through(int u, int v) {
    for (const auto& pin : t_.pins) {
      if (try_pin(pin, u, v)) return true;
    }
    return false;
  }

 private:
  VertexSet candidates(int t, VertexSet used) const {
    VertexSet cand = low_bits(h_.n) & ~used;
    for (int s = 0; s < t_.order; ++s) {
      int w = map_[s];
      if (w < 0) continue;
      if ((t_.out[t] >> s) & 1) cand &= h_.in[w];
      if ((t_.in[t] >> s) & 1) cand &= h_.out[w];
      if ((t_.und[t] >> s) & 1) cand &= h_.und[w];
      if ((t_.dig[t] >> s) & 1) cand &= h_.dig[w];
    }
    return cand;
  }

  bool degree_ok(int t, int w) const {
    return std::popcount(h_.out[w]) >= need_out_[t] && std::popcount(h_.in[w]) >= need_in_[t] &&
           std::popcount(h_.und[w]) >= need_und_[t] && std::popcount(h_.dig[w]) >= need_dig_[t];
  }

  bool extend_in_order(int t, VertexSet used) {
    if (t == t_.order) return true;
    VertexSet cand = candidates(t, used);
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (!degree_ok(t, w)) continue;
      map_[t] = w;
      if (extend_in_order(t + 1, used | bit(w))) return true;
      map_[t] = -1;
    }
    return false;
  }

  bool extend_plan(const Template::Pin& pin, std::size_t step, VertexSet used) {
    if (step == pin.rest.size()) return true;
    int t = pin.rest[step];
    VertexSet cand = candidates(t, used);
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (!degree_ok(t, w)) continue;
      map_[t] = w;
      if (extend_plan(pin, step + 1, used | bit(w))) return true;
      map_[t] = -1;
    }
    return false;
  }

  bool try_pin(const Template::Pin& pin, int u, int v) {
    map_.fill(-1);
    map_[pin.a] = u;
    if (!((candidates(pin.b, bit(u)) >> v) & 1) || !degree_ok(pin.a, u) || !degree_ok(pin.b, v)) return false;
    map_[pin.b] = v;
    return extend_plan(pin, 0, bit(u) | bit(v));
  }

  const HostView& h_;
  const Template& t_;
  std::array<int, kMaxPatternOrder> map_{};
  std::array<int, kMaxPatternOrder> need_out_{};
  std::array<int, kMaxPatternOrder> need_in_{};
  std::array<int, kMaxPatternOrder> need_und_{};
  std::array<int, kMaxPatternOrder> need_dig_{};
};

}  // namespace dituran::detail
