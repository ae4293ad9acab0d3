#include "dituran/verify.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "dituran/bridge.hpp"
#include "dituran/constructions.hpp"
#include "dituran/detect.hpp"
#include "dituran/errors.hpp"
#include "dituran/formulas.hpp"

namespace dituran {
namespace {

using Forms = std::set<CanonicalForm>;

Forms forms_of(const ExtremalReport& r) {
  Forms f;
  for (const auto& c : r.extremal_set) f.insert(c.form);
  return f;
}

template <class G>
Forms forms_of(const std::vector<G>& gs) {
  Forms f;
  for (const auto& g : gs) f.insert(canonical_form(g));
  return f;
}

class Recorder {
 public:
  explicit Recorder(VerifyReport& r) : r_(r) {}

  void check(bool ok, const std::string& line) {
    r_.passed = r_.passed && ok;
    r_.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  }
  void note(const std::string& line) { r_.lines.push_back("     " + line); }
  void search(const ExtremalReport& s) {
    if (!s.complete) {
      r_.complete = false;
      r_.passed = false;
      note("search for " + s.pattern + " at n=" + std::to_string(s.n) + " ran out of budget");
    }
  }

 private:
  VerifyReport& r_;
};

std::string str(std::int64_t v) { return std::to_string(v); }

void verify_3path(Recorder& rec, bool, const SearchOptions& opt) {
  auto p = Pattern::directed_path(3);
  for (int n = 3; n <= 6; ++n) {
    auto s = search_ex_digraph(n, p, opt);
    rec.search(s);
    auto expect = forms_of(enumerate_transitive_turan_family(n, 2));
    if (n <= 4) expect.insert(canonical_form(double_orientation(gamma_graph(n, 2))));
    rec.check(s.ex_value == n * n / 4, "ex(" + str(n) + ", P3) = " + str(s.ex_value));
    rec.check(forms_of(s) == expect, "n=" + str(n) + ": " + str(s.extremal_set.size()) + " extremal classes match " +
                                         (n <= 4 ? "T(n,2) family and double Gamma(n,2)" : "T(n,2) family"));
  }
}

void verify_pk_small(Recorder& rec, bool long_mode, const SearchOptions& opt) {
  for (int k = 3; k <= 4; ++k) {
    int top = long_mode ? 8 : 7;
    for (int n = k + 1; n <= top; ++n) {
      auto s = search_ex_digraph(n, Pattern::directed_path(k + 1), opt);
      rec.search(s);
      auto f = ex_dipath(n, k);
      auto cap = cor7_upper_bound(n, k);
      rec.check(s.ex_value >= f.value && s.ex_value <= cap,
                "ex(" + str(n) + ", P" + str(k + 1) + ") = " + str(s.ex_value) + ", construction " + str(f.value) + " (" +
                    to_string(f.validity) + "), cor7 bound " + str(cap));
    }
  }
}

void verify_ck(Recorder& rec, bool long_mode, const SearchOptions& opt) {
  std::vector<std::pair<int, int>> grid{{3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}};
  if (long_mode) grid.insert(grid.end(), {{3, 7}, {4, 7}, {5, 6}, {5, 7}});
  for (auto [k, n] : grid) {
    auto s = search_ex_digraph(n, Pattern::directed_cycle(k + 1), opt);
    rec.search(s);
    auto f = ex_dicycle(n, k).value;
    rec.check(s.ex_value == f, "ex(" + str(n) + ", C" + str(k + 1) + ") = " + str(s.ex_value) + ", formula " + str(f));
    rec.check(forms_of(s) == forms_of(f_family(n, k)),
              "extremal classes equal the F(" + str(n) + "," + str(k) + ") family (" + str(s.extremal_set.size()) + ")");
  }
}

void verify_cn(Recorder& rec, bool, const SearchOptions& opt) {
  for (int n = 3; n <= 5; ++n) {
    auto h = verify_hamilton_corollary(n, opt);
    rec.check(h.complete && h.non_hamiltonian == 0,
              "n=" + str(n) + ": all " + str(h.classes_at_threshold) + " classes with >= " + str(h.threshold) +
                  " arcs are Hamiltonian");
    rec.check(h.sharpness_witness.has_value(), "n=" + str(n) + ": a non-Hamiltonian digraph with " +
                                                   str(h.threshold - 1) + " arcs exists");
  }
}

void verify_p13_small(Recorder& rec, bool long_mode, const SearchOptions& opt) {
  auto p13 = Pattern::orient_c4(C4Variant::P13);
  auto c4 = Pattern::undirected_cycle(4);
  int top = long_mode ? 8 : 6;
  for (int n = 1; n <= top; ++n) {
    auto g = search_ex_graph(n, c4, opt);
    auto d = search_ex_digraph(n, p13, opt);
    rec.search(g);
    rec.search(d);
    rec.check(g.ex_value == ex_c4_small(n), "ex(" + str(n) + ", C4) = " + str(g.ex_value));
    rec.check(d.ex_value == 2 * g.ex_value, "ex(" + str(n) + ", P13) = " + str(d.ex_value));
    Forms doubled;
    for (const auto& c : g.extremal_set) doubled.insert(canonical_form(double_orientation(std::get<SimpleGraph>(c.representative))));
    rec.check(forms_of(d) == doubled, "n=" + str(n) + ": extremal digraphs are the double orientations of the " +
                                          str(g.extremal_set.size()) + " C4-extremal graphs");
    rec.check(forms_of(c4_catalog(n)) == forms_of(g), "n=" + str(n) + ": stored catalog agrees with the search");
  }
}

void verify_p13_9(Recorder& rec, bool long_mode, const SearchOptions& opt) {
  for (const auto& g : c4_catalog(8)) {
    int alpha = independence_number(injective_graph(g));
    rec.check(alpha == 2, "catalog graph with " + str(g.edge_count()) + " edges: alpha(Inj) = " + str(alpha));
  }
  auto p13 = Pattern::orient_c4(C4Variant::P13);
  auto family = s_family(9);
  bool all_free = true, all_27 = true;
  for (const auto& d : family) {
    all_free = all_free && !contains_subdigraph(d, p13);
    all_27 = all_27 && d.arc_count() == 27;
  }
  rec.check(all_free && all_27, "all " + str(family.size()) + " S(9) members are P13-free with 27 arcs, so ex(9, P13) >= 27");
  if (long_mode) {
    auto s = search_ex_digraph(9, p13, opt);
    rec.search(s);
    rec.check(s.ex_value == 27, "search ex(9, P13) = " + str(s.ex_value));
    rec.check(forms_of(s) == forms_of(family), "extremal classes equal the S(9) family");
  }
}

void verify_anticycle(Recorder& rec, bool long_mode, const SearchOptions& opt) {
  auto k22 = Pattern::orient_c4(C4Variant::K22);
  for (int n = 3; n <= (long_mode ? 6 : 5); ++n) {
    auto d = search_ex_digraph(n, k22, opt);
    auto b = search_ex_bipartite(n, 4, opt);
    rec.search(d);
    rec.search(b);
    rec.check(d.ex_value == b.ex_value,
              "ex(" + str(n) + ", K22) = " + str(d.ex_value) + ", ex(" + str(n) + "," + str(n) + "; C4) = " + str(b.ex_value));
    auto dforms = forms_of(d);
    bool transfer = true;
    for (const auto& c : b.extremal_set) {
      auto out = theorem_anticycle_pipeline(std::get<BipartiteGraph>(c.representative));
      transfer = transfer && out.arc_count() == b.ex_value && !contains_subdigraph(out, k22) &&
                 dforms.count(canonical_form(out));
    }
    rec.check(transfer, "n=" + str(n) + ": all " + str(b.extremal_set.size()) +
                            " bipartite classes transfer to extremal K22-free digraphs");
    bool back = true;
    for (const auto& c : d.extremal_set) back = back && !bipartite_contains_cycle(brp(std::get<Digraph>(c.representative)), 4);
    rec.check(back, "n=" + str(n) + ": Brp of every extremal digraph is C4-free");
  }
}

void verify_lemma_orient(Recorder& rec, bool, const SearchOptions&) {
  auto r = verify_lemma_orientation();
  rec.check(r.k4_containing == r.k4_total && r.k4_total == 64,
            "K4: " + str(r.k4_containing) + "/" + str(r.k4_total) + " orientations contain P13");
  rec.check(r.theta_strict_containing == r.theta_strict && r.theta_strict == 16,
            "Theta(1,1,3): " + str(r.theta_strict_containing) + "/" + str(r.theta_strict) +
                " strict orientations contain P13");
  rec.note(str(r.theta_assignments - r.theta_strict) + " of " + str(r.theta_assignments) +
           " direction assignments give parallel arcs (not strict); " + str(r.theta_nonstrict_containing) +
           " of them contain P13");
  rec.check(r.negative_control, "negative control: removing an arc can destroy every P13");
}

void verify_lemma_subgraph_id(Recorder& rec, bool long_mode, const SearchOptions& opt) {
  auto r = verify_lemma_subgraph(long_mode ? 8 : 7, opt.budget);
  for (const auto& row : r.rows)
    rec.check(true, "n=" + str(row.n) + ": " + str(row.graphs) + " graphs, " + str(row.k4_free) +
                        " non-empty K4-free, least 2e(H)-e(G) = " + str(row.min_margin));
  rec.check(r.complete, "enumeration complete");
  rec.check(r.counterexamples.empty(), str(r.counterexamples.size()) + " counterexamples");
}

void verify_p4(Recorder& rec, bool long_mode, const SearchOptions& opt) {
  auto p4 = Pattern::directed_path(4);
  for (int n = 9; n <= 20; ++n) {
    bool ok = true;
    for (const auto& d : enumerate_transitive_turan_family(n, 3))
      ok = ok && longest_directed_path_order(d) <= 3 && d.arc_count() == n * n / 3;
    rec.check(ok, "n=" + str(n) + ": T(n,3) members are P4-free with " + str(n * n / 3) + " arcs");
  }
  // Among S(9), exactly the T(9,3) members avoid P4.
  Forms free;
  for (const auto& d : s_family(9))
    if (!contains_subdigraph(d, p4)) free.insert(canonical_form(d));
  rec.check(free == forms_of(enumerate_transitive_turan_family(9, 3)), "P4-free members of S(9) are the T(9,3) family");
  if (long_mode) {
    auto s = search_ex_digraph(9, p4, opt);
    rec.search(s);
    rec.check(s.ex_value == 27, "search ex(9, P4) = " + str(s.ex_value));
    rec.check(forms_of(s) == forms_of(enumerate_transitive_turan_family(9, 3)), "extremal classes equal T(9,3) family");
  }
}

void verify_sandwich(Recorder& rec, bool long_mode, const SearchOptions& opt) {
  auto anti = Pattern::anti_directed_cycle(4);
  for (int n = 3; n <= (long_mode ? 6 : 5); ++n) {
    auto d = search_ex_digraph(n, anti, opt);
    auto b = search_ex_bipartite(n, 4, opt);
    rec.search(d);
    rec.search(b);
    bool ok = b.ex_value - n <= d.ex_value && d.ex_value <= b.ex_value && d.ex_value == b.ex_value;
    rec.check(ok, "n=" + str(n) + ": " + str(b.ex_value - n) + " <= " + str(d.ex_value) + " <= " + str(b.ex_value));
  }
}

void verify_zarankiewicz(Recorder& rec, bool, const SearchOptions& opt) {
  auto s = search_ex_bipartite(7, 4, opt);
  rec.search(s);
  auto fano = projective_plane_bipartite(2);
  rec.check(s.ex_value == 21, "ex(7,7; C4) = " + str(s.ex_value) + ", plane value (q^2+q+1)(q+1) = 21");
  rec.check(fano.edge_count() == 21 && !bipartite_contains_cycle(fano, 4), "Fano incidence graph: 21 edges, C4-free");
  rec.check(forms_of(s).count(canonical_form(fano)) == 1, "Fano incidence graph is an extremal class");
}

void verify_engine(Recorder& rec, bool, const SearchOptions& opt) {
  std::vector<Pattern> patterns;
  for (int k = 2; k <= 4; ++k) {
    patterns.push_back(Pattern::directed_path(k));
    patterns.push_back(Pattern::directed_cycle(k));
    patterns.push_back(Pattern::clique(k));
    patterns.push_back(Pattern::complete_digraph(k));
    patterns.push_back(Pattern::tournament(k));
  }
  for (auto v : {C4Variant::C4, C4Variant::K22, C4Variant::P22, C4Variant::P13}) patterns.push_back(Pattern::orient_c4(v));
  patterns.push_back(Pattern::anti_directed_cycle(4));
  patterns.push_back(Pattern::undirected_cycle(3));
  patterns.push_back(Pattern::undirected_cycle(4));
  patterns.push_back(Pattern::theta(1, 1, 2));
  patterns.push_back(Pattern::theta(1, 1, 3));
  patterns.push_back(Pattern::theta(1, 2, 2));
  patterns.push_back(Pattern::custom(Digraph::from_arcs(3, {{0, 1}, {0, 2}})));
  patterns.push_back(Pattern::custom(SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
  int compared = 0, mismatched = 0;
  for (const auto& p : patterns) {
    for (int n = 1; n <= 4; ++n) {
      auto a = search_ex_digraph(n, p, opt);
      auto b = naive_ex_digraph(n, p);
      ++compared;
      if (a.ex_value != b.ex_value || forms_of(a) != forms_of(b)) {
        ++mismatched;
        rec.note("digraph mismatch: " + p.name() + " n=" + str(n));
      }
    }
    if (p.is_directed()) continue;
    for (int n = 1; n <= 5; ++n) {
      auto a = search_ex_graph(n, p, opt);
      auto b = naive_ex_graph(n, p);
      ++compared;
      if (a.ex_value != b.ex_value || forms_of(a) != forms_of(b)) {
        ++mismatched;
        rec.note("graph mismatch: " + p.name() + " n=" + str(n));
      }
    }
  }
  rec.check(mismatched == 0, str(compared - mismatched) + "/" + str(compared) +
                                 " (pattern, n) points agree with naive enumeration");
}

using Fn = std::function<void(Recorder&, bool, const SearchOptions&)>;

const std::vector<std::pair<std::string, Fn>>& table() {
  static const std::vector<std::pair<std::string, Fn>> t{
      {"3path", verify_3path},
      {"pk-small", verify_pk_small},
      {"ck", verify_ck},
      {"cn", verify_cn},
      {"p13-small", verify_p13_small},
      {"p13-9", verify_p13_9},
      {"anticycle", verify_anticycle},
      {"lemma-orient", verify_lemma_orient},
      {"lemma-subgraph", verify_lemma_subgraph_id},
      {"p4", verify_p4},
      {"sandwich", verify_sandwich},
      {"zarankiewicz", verify_zarankiewicz},
      {"engine", verify_engine},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& verification_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : table()) v.push_back(id);
    return v;
  }();
  return ids;
}

VerifyReport run_verification(const std::string& id, bool long_mode, const SearchOptions& opt) {
  for (const auto& [name, fn] : table()) {
    if (name != id) continue;
    VerifyReport r;
    r.id = id;
    Recorder rec(r);
    fn(rec, long_mode, opt);
    return r;
  }
  throw InvalidParameters("unknown verification id '" + id + "'");
}

}  // namespace dituran
