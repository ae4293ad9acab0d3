// dituran: constructions, pattern checks, Turan numbers and exhaustive
// searches from the command line.
//
// Exit codes: 0 ok, 1 property violated, 2 usage error, 3 budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "dituran/bridge.hpp"
#include "dituran/canonical.hpp"
#include "dituran/constructions.hpp"
#include "dituran/detect.hpp"
#include "dituran/errors.hpp"
#include "dituran/formulas.hpp"
#include "dituran/search.hpp"
#include "dituran/text_format.hpp"
#include "dituran/verify.hpp"

using namespace dituran;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kViolated = 1, kUsage = 2, kBudget = 3;

struct UsageError : Error {
  using Error::Error;
};

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw UsageError("bad number '" + item + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad number '" + item + "'");
    }
  }
  return out;
}

std::string read_input(const std::string& file) {
  if (file.empty() || file == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open " + file);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Short pattern keywords. For `check`, order is the pattern order; for `ex`
// and `search` the caller passes k + 1.
Pattern resolve_pattern(const std::string& word, int order, const std::string& theta) {
  auto need = [&] {
    if (order <= 0) throw UsageError("pattern '" + word + "' needs -k");
    return order;
  };
  if (word == "dipath") return Pattern::directed_path(need());
  if (word == "dicycle") return Pattern::directed_cycle(need());
  if (word == "anticycle") return Pattern::anti_directed_cycle(need());
  if (word == "clique") return Pattern::clique(need());
  if (word == "complete-digraph") return Pattern::complete_digraph(need());
  if (word == "tournament") return Pattern::tournament(need());
  if (word == "cycle") return Pattern::undirected_cycle(need());
  if (word == "c4") return Pattern::undirected_cycle(4);
  if (word == "dc4") return Pattern::orient_c4(C4Variant::C4);
  if (word == "k22") return Pattern::orient_c4(C4Variant::K22);
  if (word == "p22") return Pattern::orient_c4(C4Variant::P22);
  if (word == "p13") return Pattern::orient_c4(C4Variant::P13);
  if (word == "theta") {
    auto l = parse_list(theta);
    if (l.size() != 3) throw UsageError("theta needs --theta i,j,l");
    return Pattern::theta(l[0], l[1], l[2]);
  }
  return Pattern::from_name(word);
}

void print_objects(const std::vector<AnyGraph>& objs) {
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (i) std::cout << "\n";
    std::cout << serialize(objs[i]);
  }
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string family;
  int n = -1, k = -1, q = -1, ell = 0, position = 0;
  std::string sizes, split, direction = "xy";
  bool all = false, count = false;
};

std::vector<AnyGraph> build_family(const ConstructArgs& a) {
  auto need_n = [&] {
    if (a.n < 0) throw UsageError(a.family + " needs -n");
    return a.n;
  };
  auto need_k = [&] {
    if (a.k < 1) throw UsageError(a.family + " needs -k");
    return a.k;
  };
  std::vector<AnyGraph> out;
  auto add_all = [&](const auto& v) {
    for (const auto& g : v) out.push_back(g);
  };
  const auto& f = a.family;
  if (f == "turan-graph") {
    out.push_back(turan_graph(need_n(), need_k()));
  } else if (f == "transitive-turan") {
    if (!a.sizes.empty() && !a.all)
      out.push_back(transitive_turan(parse_list(a.sizes)));
    else
      add_all(enumerate_transitive_turan_family(need_n(), need_k()));
  } else if (f == "f-family") {
    if (!a.all && a.position)
      out.push_back(f_member(need_n(), need_k(), a.position));
    else
      add_all(f_family(need_n(), need_k()));
  } else if (f == "s-family") {
    if (!a.split.empty() && !a.all) {
      auto s = parse_list(a.split);
      if (s.size() != 6) throw UsageError("--split needs six sizes x1,x2,y1,y2,z1,z2");
      SSplit sp;
      std::copy(s.begin(), s.end(), sp.sizes.begin());
      out.push_back(s_digraph(sp));
    } else {
      add_all(s_family(need_n()));
    }
  } else if (f == "gamma") {
    out.push_back(gamma_graph(need_n(), need_k()));
  } else if (f == "gamma-ell") {
    out.push_back(gamma_ell_graph(need_n(), need_k(), a.ell));
  } else if (f == "small-path") {
    if (a.direction != "xy" && a.direction != "yx") throw UsageError("--direction is xy or yx");
    out.push_back(small_n_path_bound_digraph(need_n(), need_k(), a.direction == "xy" ? Direction::XtoY : Direction::YtoX));
  } else if (f == "alt-extremal") {
    if (a.sizes.empty()) throw UsageError("alt-extremal needs --sizes");
    out.push_back(alt_extremal_digraph(need_n(), need_k(), parse_list(a.sizes)));
  } else if (f == "fano") {
    out.push_back(projective_plane_bipartite(2));
  } else if (f == "projective-plane") {
    if (a.q < 0) throw UsageError("projective-plane needs -q");
    out.push_back(projective_plane_bipartite(a.q));
  } else if (f == "c4-catalog") {
    add_all(c4_catalog(need_n()));
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  if (!a.all && out.size() > 1 && f != "c4-catalog") out.resize(a.count ? out.size() : 1);
  return out;
}

int cmd_construct(const ConstructArgs& a) {
  auto objs = build_family(a);
  if (a.count) {
    std::cout << objs.size() << "\n";
    return kOk;
  }
  print_objects(objs);
  return kOk;
}

// -------------------------------------------------------------------- check

struct CheckArgs {
  std::string pattern, file, expect, theta;
  int k = -1;
  bool ung = false, as_json = false;
};

int cmd_check(const CheckArgs& a) {
  auto p = resolve_pattern(a.pattern, a.k, a.theta);
  auto host = parse_graph(read_input(a.file));
  std::optional<Witness> w;
  if (auto* d = std::get_if<Digraph>(&host)) {
    w = a.ung && !p.is_directed() ? contains_undirected(*d, p, false) : contains_subdigraph(*d, p);
  } else {
    if (p.is_directed()) throw UsageError("directed pattern on an undirected host");
    SimpleGraph g = std::holds_alternative<SimpleGraph>(host) ? std::get<SimpleGraph>(host)
                                                              : std::get<BipartiteGraph>(host).as_simple_graph();
    w = contains_undirected(g, p);
  }
  if (a.as_json) {
    json j{{"schema", 1}, {"pattern", p.name()}, {"verdict", w ? "CONTAINS" : "FREE"}};
    if (w) j["witness"] = w->map;
    if (w) j["template"] = w->template_index;
    std::cout << j.dump(2) << "\n";
  } else if (w) {
    std::cout << "CONTAINS " << p.name() << "\nwitness:";
    for (int v : w->map) std::cout << " " << v;
    std::cout << "\n";
  } else {
    std::cout << "FREE " << p.name() << "\n";
  }
  if (a.expect.empty()) return kOk;
  if (a.expect != "free" && a.expect != "contains") throw UsageError("--expect is free or contains");
  return (a.expect == "contains") == w.has_value() ? kOk : kViolated;
}

// ----------------------------------------------------------------------- ex

struct ExArgs {
  std::string pattern;
  int n = -1, k = -1;
  bool as_json = false;
};

int cmd_ex(const ExArgs& a) {
  if (a.n < 0) throw UsageError("ex needs -n");
  auto need_k = [&] {
    if (a.k < 1) throw UsageError("'" + a.pattern + "' needs -k");
    return a.k;
  };
  TuranValue v;
  const auto& p = a.pattern;
  if (p == "clique")
    v = ex_clique(a.n, need_k());
  else if (p == "path")
    v = ex_path(a.n, need_k());
  else if (p == "dipath")
    v = ex_dipath(a.n, need_k());
  else if (p == "dicycle")
    v = ex_dicycle(a.n, need_k());
  else if (p == "complete-digraph")
    v = ex_complete_digraph(a.n, need_k());
  else if (p == "tournament")
    v = ex_tournament(a.n, need_k());
  else if (p == "p13")
    v = ex_p13(a.n);
  else if (p == "k22")
    v = ex_k22_orientation(a.n);
  else if (p == "c4") {
    std::int64_t c = ex_c4_small(a.n);
    v = TuranValue{c, Validity::AllN, 0, 0, c, c, ""};
  } else if (p == "hamilton") {
    std::int64_t t = hamilton_threshold(a.n);
    v = TuranValue{t, Validity::AllN, 0, 0, t, t, "arcs forcing a Hamilton directed cycle"};
  } else if (p == "cor7") {
    std::int64_t t = cor7_upper_bound(a.n, need_k());
    v = TuranValue{t, Validity::AllN, 0, 0, t, t, "upper bound for directed paths"};
  } else {
    throw UsageError("unknown pattern '" + p + "' for ex");
  }
  if (a.as_json) {
    json j{{"schema", 1}, {"pattern", p}, {"n", a.n}};
    if (a.k > 0) j["k"] = a.k;
    if (v.validity == Validity::Unknown)
      j["value"] = nullptr;
    else
      j["value"] = v.value;
    j["validity"] = to_string(v.validity);
    j["lower"] = v.lower;
    j["upper"] = v.upper;
    if (!v.note.empty()) j["note"] = v.note;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  if (v.validity == Validity::Unknown) {
    std::cout << "unknown; " << v.lower << " <= ex <= " << v.upper << " (" << v.note << ")\n";
    return kOk;
  }
  std::cout << v.value;
  if (v.validity == Validity::LargeN) std::cout << "  [" << v.note << "]";
  if (v.validity == Validity::LowerBoundOnly) std::cout << "  [lower bound only; at most " << v.upper << "]";
  std::cout << "\n";
  return kOk;
}

// ------------------------------------------------------------------- search

struct SearchArgs {
  std::string pattern, golden, theta;
  int n = -1, k = -1, threads = 0;
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
  bool as_json = false, stats = false, bless = false, naive = false, digraph = false, print = false,
       proven_bounds = false;
};

int cmd_search(const SearchArgs& a) {
  if (a.n < 0) throw UsageError("search needs -n");
  SearchOptions opt;
  opt.threads = a.threads;
  opt.proven_bounds = a.proven_bounds;
  if (a.max_nodes) opt.budget.max_nodes = a.max_nodes;
  if (a.max_seconds > 0) opt.budget.max_seconds = a.max_seconds;
  ExtremalReport r;
  if (a.pattern.rfind("bipartite-c", 0) == 0) {
    auto l = parse_list(a.pattern.substr(11));
    if (l.size() != 1) throw UsageError("use bipartite-c4, bipartite-c6, ...");
    r = search_ex_bipartite(a.n, l[0], opt);
  } else {
    auto p = resolve_pattern(a.pattern, a.k > 0 ? a.k + 1 : -1, a.theta);
    bool graph = !p.is_directed() && !a.digraph;
    if (a.naive)
      r = graph ? naive_ex_graph(a.n, p) : naive_ex_digraph(a.n, p);
    else
      r = graph ? search_ex_graph(a.n, p, opt) : search_ex_digraph(a.n, p, opt);
  }
  int code = r.complete ? kOk : kBudget;
  if (!a.golden.empty()) {
    if (a.bless) {
      if (!r.complete) {
        std::cerr << "refusing to bless an incomplete result\n";
        return kBudget;
      }
      std::ofstream out(a.golden);
      if (!out) throw UsageError("cannot write " + a.golden);
      out << report_to_json(r);
    } else {
      std::string why;
      if (!matches_golden(r, read_input(a.golden), &why)) {
        std::cerr << "golden mismatch: " << why << "\n";
        if (code == kOk) code = kViolated;
      }
    }
  }
  if (a.as_json) {
    std::cout << report_to_json(r, a.stats);
    return code;
  }
  std::cout << "ex(" << r.n << ", " << r.pattern << ") = " << r.ex_value << (r.complete ? "" : "  [incomplete]")
            << "\n";
  std::cout << "extremal classes: " << r.extremal_set.size() << (r.overflow ? " (overflow)" : "") << "\n";
  if (a.stats) std::cout << "nodes explored: " << r.nodes_explored << "\n";
  if (a.print) {
    std::vector<AnyGraph> objs;
    for (const auto& c : r.extremal_set) objs.push_back(c.representative);
    print_objects(objs);
  }
  return code;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& id, bool long_mode, bool as_json, int threads) {
  std::vector<std::string> ids = id == "all" ? verification_ids() : std::vector<std::string>{id};
  SearchOptions opt;
  opt.threads = threads;
  bool passed = true, complete = true;
  json all = json::array();
  for (const auto& one : ids) {
    auto r = run_verification(one, long_mode, opt);
    passed = passed && r.passed;
    complete = complete && r.complete;
    if (as_json) {
      all.push_back(json{{"id", r.id}, {"passed", r.passed}, {"complete", r.complete}, {"details", r.lines}});
      continue;
    }
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "\n";
    for (const auto& line : r.lines) std::cout << "  " << line << "\n";
  }
  if (as_json) std::cout << json{{"schema", 1}, {"results", all}}.dump(2) << "\n";
  if (!complete) return kBudget;
  return passed ? kOk : kViolated;
}

// ------------------------------------------------------------------ catalog

int cmd_catalog(int n, bool as_json) {
  std::vector<int> orders;
  if (n > 0)
    orders.push_back(n);
  else
    for (int m = 1; m <= 8; ++m) orders.push_back(m);
  json j{{"schema", 1}, {"catalog", json::array()}};
  for (int m : orders) {
    auto graphs = c4_catalog(m);
    if (as_json) {
      json entry{{"n", m}, {"ex", ex_c4_small(m)}, {"graphs", json::array()}};
      for (const auto& g : graphs) entry["graphs"].push_back(serialize(g));
      j["catalog"].push_back(entry);
      continue;
    }
    std::cout << "# n=" << m << " ex=" << ex_c4_small(m) << " classes=" << graphs.size() << "\n";
    for (const auto& g : graphs) std::cout << serialize(g);
  }
  if (as_json) std::cout << j.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turan numbers of directed paths, cycles and C4 orientations"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "emit members of a construction family");
  construct->add_option("family", ca.family,
                        "turan-graph | transitive-turan | f-family | s-family | gamma | gamma-ell | small-path | "
                        "alt-extremal | fano | projective-plane | c4-catalog")
      ->required();
  construct->add_option("-n", ca.n, "order");
  construct->add_option("-k", ca.k, "number of parts / block size");
  construct->add_option("-q", ca.q, "prime order of the projective plane");
  construct->add_option("--ell", ca.ell, "l for gamma-ell");
  construct->add_option("--position", ca.position, "block position of the remainder block (f-family)");
  construct->add_option("--sizes", ca.sizes, "comma separated part sizes");
  construct->add_option("--split", ca.split, "x1,x2,y1,y2,z1,z2 for s-family");
  construct->add_option("--direction", ca.direction, "xy or yx (small-path)");
  construct->add_flag("--all", ca.all, "every member up to isomorphism");
  construct->add_flag("--count", ca.count, "print the number of members");

  CheckArgs ch;
  auto* check = app.add_subcommand("check", "test a graph for a forbidden pattern");
  check->add_option("pattern", ch.pattern, "dipath | dicycle | anticycle | clique | ... | p13 | k22 | full name")
      ->required();
  check->add_option("-k", ch.k, "pattern order");
  check->add_option("--theta", ch.theta, "path lengths i,j,l");
  check->add_option("-f,--file", ch.file, "input file (default stdin)");
  check->add_option("--expect", ch.expect, "free | contains; exit 1 when the verdict differs");
  check->add_flag("--ung", ch.ung, "match undirected patterns in Ung(D) instead of Umg(D)");
  check->add_flag("--json", ch.as_json);

  ExArgs ea;
  auto* ex = app.add_subcommand("ex", "closed-form Turan number");
  ex->add_option("pattern", ea.pattern,
                 "clique | path | dipath | dicycle | complete-digraph | tournament | p13 | k22 | c4 | hamilton | cor7")
      ->required();
  ex->add_option("-n", ea.n, "order")->required();
  ex->add_option("-k", ea.k, "forbidden order is k+1");
  ex->add_flag("--json", ea.as_json);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "exhaustive extremal search");
  search->add_option("pattern", sa.pattern, "pattern keyword, full name, or bipartite-c<2k>")->required();
  search->add_option("-n", sa.n, "order")->required();
  search->add_option("-k", sa.k, "forbidden order is k+1");
  search->add_option("--theta", sa.theta, "path lengths i,j,l");
  search->add_option("--threads", sa.threads, "worker threads (default DITURAN_THREADS or all cores)");
  search->add_option("--max-nodes", sa.max_nodes, "node budget");
  search->add_option("--max-seconds", sa.max_seconds, "time budget");
  search->add_option("--golden", sa.golden, "compare with (or with --bless, write) a golden JSON file");
  search->add_flag("--bless", sa.bless);
  search->add_flag("--naive", sa.naive, "enumerate every labeled object instead");
  search->add_flag("--digraph", sa.digraph, "search digraphs for an undirected pattern");
  search->add_flag("--proven-bounds", sa.proven_bounds, "cap node bounds by proved closed forms");
  search->add_flag("--print", sa.print, "print one representative per class");
  search->add_flag("--stats", sa.stats, "report nodes explored");
  search->add_flag("--json", sa.as_json);

  std::string vid;
  bool vlong = false, vjson = false;
  int vthreads = 0;
  auto* verify = app.add_subcommand("verify", "run a theorem check");
  verify->add_option("id", vid, "theorem id or 'all'")->required();
  verify->add_flag("--long", vlong, "include the larger orders");
  verify->add_flag("--json", vjson);
  verify->add_option("--threads", vthreads);

  int cn = 0;
  bool cjson = false;
  auto* catalog = app.add_subcommand("catalog", "stored C4-extremal graphs");
  catalog->add_option("-n", cn, "order (default all 1..8)");
  catalog->add_flag("--json", cjson);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(ca);
    if (*check) return cmd_check(ch);
    if (*ex) return cmd_ex(ea);
    if (*search) return cmd_search(sa);
    if (*verify) return cmd_verify(vid, vlong, vjson, vthreads);
    if (*catalog) return cmd_catalog(cn, cjson);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
