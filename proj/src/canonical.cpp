#include "dituran/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "dituran/errors.hpp"

namespace dituran {
namespace {

enum Kind : std::uint8_t { kDigraph = 1, kGraph = 2, kBipartite = 3 };

struct Colored {
  int n = 0;
  std::vector<VertexSet> out;
  std::vector<VertexSet> in;
  std::vector<int> color;

  int state(int a, int b) const { return 2 * ((out[a] >> b) & 1) + ((out[b] >> a) & 1); }
};

// Colour refinement: split classes by the multiset of (neighbour colour, arc
// type) until stable. Colours are ranks of sorted signatures, so the result
// does not depend on the input labeling and keeps the initial colour order.
std::vector<int> refine(const Colored& g) {
  std::vector<int> color = g.color;
  auto classes = [](const std::vector<int>& c) { return std::set<int>(c.begin(), c.end()).size(); };
  std::size_t count = classes(color);
  for (;;) {
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int w = 0; w < g.n; ++w) {
        if (w == v) continue;
        int t = g.state(v, w);
        if (t) nb.push_back(color[w] * 4 + t);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(g.n);
    for (int v = 0; v < g.n; ++v)
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    std::size_t next_count = sorted.size();
    color = std::move(next);
    if (next_count == count) return color;
    count = next_count;
  }
}

// twin[v] is the least vertex w such that the transposition (v w) is an
// automorphism preserving colours.
std::vector<int> twin_classes(const Colored& g, const std::vector<int>& color) {
  std::vector<int> twin(g.n);
  for (int v = 0; v < g.n; ++v) {
    twin[v] = v;
    for (int u = 0; u < v; ++u) {
      if (twin[u] != u || color[u] != color[v]) continue;
      VertexSet mask = ~(bit(u) | bit(v));
      if ((g.out[u] & mask) == (g.out[v] & mask) && (g.in[u] & mask) == (g.in[v] & mask) &&
          g.state(u, v) / 2 == g.state(u, v) % 2) {
        twin[v] = u;
        break;
      }
    }
  }
  return twin;
}

class MinimumCode {
 public:
  explicit MinimumCode(const Colored& g) : g_(g) {
    color_ = refine(g);
    twin_ = twin_classes(g, color_);
    order_.resize(g.n);
    for (int v = 0; v < g.n; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return color_[a] < color_[b]; });
    for (int p = 0; p < g.n; ++p) slot_color_.push_back(color_[order_[p]]);
    offset_.resize(g.n + 1, 0);
    for (int p = 1; p <= g.n; ++p) offset_[p] = offset_[p - 1] + (p - 1);
    best_.assign(offset_[g.n], 0);
    cur_.assign(offset_[g.n], 0);
    perm_.assign(g.n, -1);
    search(0, 0);
  }

  const std::vector<std::uint8_t>& code() const { return best_; }
  // position -> vertex
  const std::vector<int>& permutation() const { return best_perm_; }

 private:
  void search(int p, VertexSet used) {
    if (p == g_.n) {
      best_perm_ = perm_;
      return;
    }
    for (int v = 0; v < g_.n; ++v) {
      if ((used >> v) & 1 || color_[v] != slot_color_[p]) continue;
      if (twin_[v] != v) {
        // Skip if an unused twin with a smaller index exists.
        bool shadowed = false;
        for (int w = 0; w < v && !shadowed; ++w) shadowed = twin_[w] == twin_[v] && !((used >> w) & 1);
        if (shadowed) continue;
      }
      perm_[p] = v;
      int base = offset_[p];
      int cmp = 0;
      for (int a = 0; a < p; ++a) {
        std::uint8_t s = static_cast<std::uint8_t>(g_.state(perm_[a], v));
        cur_[base + a] = s;
        if (cmp == 0 && p < best_len_) cmp = (s < best_[base + a]) ? -1 : (s > best_[base + a]) ? 1 : 0;
      }
      if (cmp > 0) continue;
      if (cmp < 0 || p >= best_len_) {
        std::copy(cur_.begin() + base, cur_.begin() + base + p, best_.begin() + base);
        best_len_ = p + 1;
      }
      search(p + 1, used | bit(v));
    }
  }

  const Colored& g_;
  std::vector<int> color_;
  std::vector<int> twin_;
  std::vector<int> order_;
  std::vector<int> slot_color_;
  std::vector<int> offset_;
  std::vector<std::uint8_t> best_;
  std::vector<std::uint8_t> cur_;
  std::vector<int> perm_;
  std::vector<int> best_perm_;
  int best_len_ = 0;
};

CanonicalForm encode(Kind kind, const Colored& g, const MinimumCode& mc) {
  CanonicalForm f;
  f.bytes.push_back(kind);
  f.bytes.push_back(static_cast<std::uint8_t>(g.n));
  if (kind == kBipartite) {
    for (int v : mc.permutation()) f.bytes.push_back(static_cast<std::uint8_t>(g.color[v]));
  }
  const auto& code = mc.code();
  std::uint8_t acc = 0;
  int filled = 0;
  for (std::uint8_t s : code) {
    acc = static_cast<std::uint8_t>((acc << 2) | s);
    if (++filled == 4) {
      f.bytes.push_back(acc);
      acc = 0;
      filled = 0;
    }
  }
  if (filled) f.bytes.push_back(static_cast<std::uint8_t>(acc << (2 * (4 - filled))));
  return f;
}

Colored colored(const Digraph& d) {
  return Colored{d.order(), d.out_rows(), d.in_rows(), std::vector<int>(d.order(), 0)};
}

Colored colored(const SimpleGraph& g) {
  return Colored{g.order(), g.rows(), g.rows(), std::vector<int>(g.order(), 0)};
}

Colored colored(const BipartiteGraph& b) {
  int n = b.part_size();
  Colored c{2 * n, std::vector<VertexSet>(2 * n, 0), std::vector<VertexSet>(2 * n, 0), std::vector<int>(2 * n, 0)};
  for (int y = 0; y < n; ++y) c.color[n + y] = 1;
  for (auto [x, y] : b.edges()) {
    c.out[x] |= bit(n + y);
    c.in[n + y] |= bit(x);
  }
  return c;
}

}  // namespace

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

CanonicalForm CanonicalForm::from_hex(const std::string& hex) {
  if (hex.size() % 2) throw InvalidParameters("odd-length canonical form hex");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw InvalidParameters(std::string("bad hex digit '") + c + "'");
  };
  CanonicalForm f;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    f.bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return f;
}

CanonicalForm canonical_form(const Digraph& d, int cap) {
  if (d.order() > cap) throw CapExceeded("canonical_form", d.order(), cap);
  Colored c = colored(d);
  return encode(kDigraph, c, MinimumCode(c));
}

CanonicalForm canonical_form(const SimpleGraph& g, int cap) {
  if (g.order() > cap) throw CapExceeded("canonical_form", g.order(), cap);
  Colored c = colored(g);
  return encode(kGraph, c, MinimumCode(c));
}

CanonicalForm canonical_form(const BipartiteGraph& b, int cap) {
  if (b.part_size() > cap) throw CapExceeded("canonical_form", b.part_size(), cap);
  Colored c = colored(b);
  return encode(kBipartite, c, MinimumCode(c));
}

CanonicalForm canonical_form_part_swap(const BipartiteGraph& b, int cap) {
  return std::min(canonical_form(b, cap), canonical_form(b.transposed(), cap));
}

std::vector<int> canonical_labeling(const Digraph& d, int cap) {
  if (d.order() > cap) throw CapExceeded("canonical_labeling", d.order(), cap);
  Colored c = colored(d);
  MinimumCode mc(c);
  std::vector<int> perm(d.order());
  for (int p = 0; p < d.order(); ++p) perm[mc.permutation()[p]] = p;
  return perm;
}

bool isomorphic(const Digraph& a, const Digraph& b, int cap) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  return canonical_form(a, cap) == canonical_form(b, cap);
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b, int cap) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, cap) == canonical_form(b, cap);
}

std::vector<Digraph> dedupe(const std::vector<Digraph>& ds, int cap) {
  std::set<CanonicalForm> seen;
  std::vector<Digraph> out;
  for (const auto& d : ds)
    if (seen.insert(canonical_form(d, cap)).second) out.push_back(d);
  return out;
}

std::vector<SimpleGraph> dedupe(const std::vector<SimpleGraph>& gs, int cap) {
  std::set<CanonicalForm> seen;
  std::vector<SimpleGraph> out;
  for (const auto& g : gs)
    if (seen.insert(canonical_form(g, cap)).second) out.push_back(g);
  return out;
}

}  // namespace dituran
