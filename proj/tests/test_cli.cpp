#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "dituran/constructions.hpp"
#include "dituran/text_format.hpp"

#ifndef DITURAN_CLI
#error "DITURAN_CLI must name the dituran executable"
#endif

using namespace dituran;
namespace fs = std::filesystem;

namespace {

struct Run {
  int rc = -1;
  std::string out;
};

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "dituran_cli_test";
  fs::create_directories(dir);
  return dir;
}

Run run(const std::string& args, const std::string& input = "") {
  auto in = scratch() / "stdin.txt";
  std::ofstream(in) << input;
  std::string cmd = std::string(DITURAN_CLI) + " " + args + " < " + in.string() + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("construct") {
  auto fano = run("construct fano");
  CHECK(fano.rc == 0);
  auto b = parse_bipartite(fano.out);
  CHECK(b.part_size() == 7);
  CHECK(b.edge_count() == 21);
  auto t = run("construct transitive-turan -n 9 -k 3");
  CHECK(t.rc == 0);
  CHECK(parse_digraph(t.out).arc_count() == 27);
  auto count = run("construct s-family -n 9 --count");
  CHECK(count.rc == 0);
  CHECK(std::stoul(count.out) == s_family(9).size());
  auto all = run("construct f-family -n 7 -k 3 --all");
  CHECK(parse_many(all.out).size() == f_family(7, 3).size());
  CHECK(run("construct c4-catalog -n 8 --count").out == "5\n");
  CHECK(run("construct nonsense -n 3").rc == 2);
  CHECK(run("construct projective-plane -q 4").rc == 2);
  CHECK(run("construct turan-graph -k 3").rc == 2);
  CHECK(run("construct transitive-turan --sizes 3,1").rc == 2);
}

TEST_CASE("constructions re-parse to the same object") {
  for (const char* args : {"construct gamma -n 8 -k 3", "construct gamma-ell -n 5 -k 3 --ell 1",
                           "construct small-path -n 5 -k 4 --direction yx", "construct s-family -n 9 --split 2,1,1,2,3,0",
                           "construct alt-extremal -n 7 -k 3 --sizes 3,2,2"}) {
    auto r = run(args);
    CHECK(r.rc == 0);
    CHECK(serialize(parse_graph(r.out)) == r.out);
  }
}

TEST_CASE("check") {
  auto s9 = serialize(s_digraph(s_splits(9).front()));
  auto r = run("check p13", s9);
  CHECK(r.rc == 0);
  CHECK(r.out.rfind("FREE", 0) == 0);
  CHECK(run("check p13 --expect free", s9).rc == 0);
  CHECK(run("check p13 --expect contains", s9).rc == 1);
  CHECK(run("check dicycle -k 4 --expect free", serialize(f_member(7, 3, 0))).rc == 0);
  Digraph tt(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) tt.add_arc(u, v);
  auto c = run("check dipath -k 3", serialize(tt));
  CHECK(c.rc == 0);
  CHECK(c.out.rfind("CONTAINS", 0) == 0);
  CHECK(c.out.find("witness: 0 1 2") != std::string::npos);
  auto j = nlohmann::json::parse(run("check dipath -k 3 --json", serialize(tt)).out);
  CHECK(j["verdict"] == "CONTAINS");
  CHECK(j["witness"].size() == 3);
  CHECK(run("check clique -k 4 --expect free", serialize(turan_graph(6, 3))).rc == 0);
  CHECK(run("check p13", "d 3\n0 5\n").rc == 2);
  CHECK(run("check dipath", serialize(tt)).rc == 2);
  CHECK(run("check p13 --expect maybe", s9).rc == 2);
  CHECK(run("check p13 -f /nonexistent/file").rc == 2);
}

TEST_CASE("ex") {
  CHECK(run("ex dipath -n 5 -k 2").out == "6\n");
  CHECK(run("ex dicycle -n 7 -k 3").out == "27\n");
  auto large = run("ex dipath -n 20 -k 5");
  CHECK(large.rc == 0);
  CHECK(large.out.find("large n") != std::string::npos);
  auto j = nlohmann::json::parse(run("ex k22 -n 100 --json").out);
  CHECK(j["value"].is_null());
  CHECK(j["validity"] == "unknown");
  CHECK(run("ex p13 -n 9").out == "27\n");
  CHECK(run("ex nonsense -n 4").rc == 2);
  CHECK(run("ex dipath -k 3").rc == 2);
}

TEST_CASE("search") {
  auto r = run("search dipath -k 2 -n 4 --json");
  CHECK(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["ex"] == 4);
  CHECK(j["extremal_count"] == 2);
  auto c4 = run("search c4 -n 8");
  CHECK(c4.out.find("= 11") != std::string::npos);
  CHECK(c4.out.find("extremal classes: 5") != std::string::npos);
  auto k22 = nlohmann::json::parse(run("search k22 -n 4 --json").out);
  auto bip = nlohmann::json::parse(run("search bipartite-c4 -n 4 --json").out);
  CHECK(k22["ex"] == bip["ex"]);
  CHECK(run("search p13 -n 9 --max-nodes 10").rc == 3);
  CHECK(run("search p13 -n 11").rc == 2);
  CHECK(run("search dipath -n 4").rc == 2);
  CHECK(run("search p13 -n 6 --threads 1 --json").out == run("search p13 -n 6 --threads 3 --json").out);
  auto naive = nlohmann::json::parse(run("search p13 -n 4 --naive --json").out);
  auto orderly = nlohmann::json::parse(run("search p13 -n 4 --json").out);
  CHECK(naive["ex"] == orderly["ex"]);
  CHECK(naive["canonical_forms"] == orderly["canonical_forms"]);
}

TEST_CASE("golden files") {
  auto golden = (scratch() / "golden.json").string();
  fs::remove(golden);
  CHECK(run("search dipath -k 2 -n 5 --golden " + golden + " --bless").rc == 0);
  CHECK(fs::exists(golden));
  CHECK(run("search dipath -k 2 -n 5 --golden " + golden).rc == 0);
  CHECK(run("search dipath -k 2 -n 6 --golden " + golden).rc == 1);
  CHECK(run("search p13 -n 9 --max-nodes 10 --golden " + golden + " --bless").rc == 3);
  CHECK(run("search dipath -k 2 -n 5 --golden " + golden).rc == 0);
}

TEST_CASE("verify and catalog") {
  auto v = run("verify lemma-orient");
  CHECK(v.rc == 0);
  CHECK(v.out.rfind("PASS lemma-orient", 0) == 0);
  CHECK(run("verify ck").rc == 0);
  CHECK(run("verify nonsense").rc == 2);
  auto cat = run("catalog -n 8");
  CHECK(cat.rc == 0);
  CHECK(parse_many(cat.out).size() == 5);
  auto j = nlohmann::json::parse(run("catalog --json").out);
  CHECK(j["catalog"].size() == 8);
}

TEST_CASE("usage") {
  CHECK(run("").rc == 2);
  CHECK(run("--help").rc == 0);
  CHECK(run("frobnicate").rc == 2);
  CHECK(run("search").rc == 2);
}
