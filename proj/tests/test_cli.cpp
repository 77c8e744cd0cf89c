#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "starcluster/hypergraph.hpp"
#include "starcluster/io.hpp"

using namespace starcluster;
using nlohmann::json;

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

const std::string& binary() {
  static const std::string path = [] {
    const char* env = std::getenv("STARCLUSTER_BIN");
    REQUIRE_MESSAGE(env != nullptr, "STARCLUSTER_BIN must point at the CLI binary");
    return std::string(env);
  }();
  return path;
}

CmdResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd;
  if (!stdin_data.empty()) {
    const std::string feed = "/tmp/starcluster_cli_stdin.txt";
    std::ofstream(feed) << stdin_data;
    cmd = binary() + " " + args + " < " + feed + " 2>/dev/null";
  } else {
    cmd = binary() + " " + args + " 2>/dev/null";
  }
  CmdResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), n);
  }
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/starcluster_cli_" + name) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("gen emits parseable text and honours --json") {
  CmdResult text = run_cli("gen cycle:4");
  CHECK(text.status == 0);
  CHECK(read_text(text.out) == cycle_graph(4));

  CmdResult as_json = run_cli("gen cycle:4 --json");
  CHECK(as_json.status == 0);
  CHECK(hypergraph_from_json(json::parse(as_json.out)) == cycle_graph(4));
}

TEST_CASE("gen random is deterministic per seed") {
  CmdResult a = run_cli("gen random:8,0.3,2,3 --seed 7");
  CmdResult b = run_cli("gen random:8,0.3,2,3 --seed 7");
  CmdResult c = run_cli("gen random:8,0.3,2,3 --seed 8");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(read_text(a.out) == random_hypergraph(8, 2, 3, 0.3, 7));
}

TEST_CASE("gen lk expands a base generator") {
  CmdResult r = run_cli("gen lk --k 3 --base tightpath:6,3 --json");
  CHECK(r.status == 0);
  Hypergraph h = hypergraph_from_json(json::parse(r.out));
  CHECK(h.vertex_count() == 10);
  CHECK(h.edge_count() == 8);
  CHECK(h == lk_expand(tight_path(6, 3), {0, 1, 2, 3}, 3));

  CmdResult with_path = run_cli("gen lk --k 2 --base cycle:5 --path 1,2 --json");
  CHECK(with_path.status == 0);
  CHECK(hypergraph_from_json(json::parse(with_path.out)) == lk_expand(cycle_graph(5), {1, 2}, 2));
}

TEST_CASE("normalize reports removals") {
  TempFile input("norm.txt", "1\n1 2\n2 3\n");
  CmdResult r = run_cli("normalize --input " + input.path + " --json");
  CHECK(r.status == 0);
  json parsed = json::parse(r.out);
  CHECK(parsed["removed_singleton_vertices"] == json::array({1}));
  CHECK(parsed["removed_superset_edges"] == json::array({{1, 2}}));
  CHECK(hypergraph_from_json(parsed["resulting"]) == Hypergraph::from_edges({{2, 3}}));
}

TEST_CASE("betti reports the homology profile") {
  CmdResult hexagon = run_cli("betti --gen cycle:6 --json");
  CHECK(hexagon.status == 0);
  json parsed = json::parse(hexagon.out);
  CHECK(parsed["betti"]["1"] == 2);
  CHECK(parsed["betti"]["0"] == 0);
  CHECK(parsed["total"] == 2);
  CHECK(parsed["euler"] == -2);
  CHECK(parsed["torsion"].empty());

  CmdResult triangle = run_cli("betti --gen cycle:3 --json");
  CHECK(json::parse(triangle.out)["betti"]["0"] == 2);

  CmdResult human = run_cli("betti --gen cycle:6");
  CHECK(human.status == 0);
  CHECK(human.out.find("b[-1..2] = [0, 0, 2, 0]") != std::string::npos);
  CHECK(human.out.find("torsion: none") != std::string::npos);
}

TEST_CASE("betti of an edgeless ground set is contractible") {
  TempFile input("simplex.txt", "vertices: 0 1 2\n");
  CmdResult r = run_cli("betti --input " + input.path + " --json");
  CHECK(r.status == 0);
  json parsed = json::parse(r.out);
  CHECK(parsed["total"] == 0);
  for (const auto& [dim, value] : parsed["betti"].items()) {
    (void)dim;
    CHECK(value == 0);
  }
}

TEST_CASE("betti reads stdin and json files") {
  CmdResult from_stdin = run_cli("betti --input -", "0 1\n");
  CHECK(from_stdin.status == 0);
  CHECK(from_stdin.out.find("total: 1") != std::string::npos);

  TempFile input("c4.json", hypergraph_to_json(cycle_graph(4)).dump());
  CmdResult from_json = run_cli("betti --input " + input.path + " --format json --json");
  CHECK(from_json.status == 0);
  CHECK(json::parse(from_json.out)["betti"]["0"] == 1);
}

TEST_CASE("cycles reports witnesses, ternary search, and packing") {
  CmdResult hexagon = run_cli("cycles --gen cycle:6 --json");
  CHECK(hexagon.status == 0);
  json parsed = json::parse(hexagon.out);
  CHECK(parsed["status"] == "ok");
  CHECK(parsed["packing"] == 1);
  REQUIRE(parsed["ternary"].is_object());
  CHECK(parsed["ternary"]["vertices"].size() == 6);
  for (const auto& row : parsed["induced_3cycles"]) CHECK(row["witness"].is_null());

  CmdResult pentagon = run_cli("cycles --gen cycle:5 --json");
  json p5 = json::parse(pentagon.out);
  CHECK(p5["ternary"].is_null());
  CHECK(p5["packing"] == 0);

  CmdResult triangle = run_cli("cycles --gen cycle:3 --json");
  json p3 = json::parse(triangle.out);
  for (const auto& row : p3["induced_3cycles"]) CHECK(row["witness"].is_object());

  Hypergraph two = disjoint_union(cycle_graph(6), cycle_graph(6));
  TempFile input("two_hexagons.txt", to_text(two));
  CmdResult pair = run_cli("cycles --input " + input.path + " --json");
  CHECK(json::parse(pair.out)["packing"] == 2);
}

TEST_CASE("reduce reports traces and verdicts") {
  CmdResult pentagon = run_cli("reduce --gen cycle:5 --json");
  CHECK(pentagon.status == 0);
  json parsed = json::parse(pentagon.out);
  CHECK(parsed["verdict"]["kind"] == "Sphere");
  CHECK(parsed["verdict"]["dimension"] == 1);
  CHECK(parsed["suspensions"] == 2);
  CHECK(parsed["steps"].size() == 4);
  CHECK(parsed["steps"][0]["move"] == "Hv");

  CmdResult triangle = run_cli("reduce --gen cycle:3 --json");
  json p3 = json::parse(triangle.out);
  CHECK(p3["verdict"]["kind"] == "Residual");
  CHECK(p3["fallback_homology"]["betti"]["0"] == 2);

  CmdResult human = run_cli("reduce --gen cycle:3");
  CHECK(human.out.find("Residual") != std::string::npos);
  CHECK(human.out.find("fallback homology") != std::string::npos);
}

TEST_CASE("reduce --verify cross-checks the verdict") {
  CHECK(run_cli("reduce --gen tightpath:6,3 --verify").status == 0);
  CHECK(run_cli("reduce --gen cycle:5 --verify").status == 0);
  CHECK(run_cli("reduce --gen cycle:3 --verify").status == 0);
  CmdResult verified = run_cli("reduce --gen cycle:6 --verify --json");
  CHECK(verified.status == 0);
  CHECK(json::parse(verified.out)["verified"] == true);
}

TEST_CASE("graphify emits the gadget graph and suspension count") {
  CmdResult r = run_cli("graphify --gen tightpath:4,3 --json");
  CHECK(r.status == 0);
  json parsed = json::parse(r.out);
  CHECK(parsed["suspensions"] == 2);
  Hypergraph graph = hypergraph_from_json(parsed["graph"]);
  CHECK(graph.is_graph());
  CHECK(graph.vertex_count() == 12);

  CmdResult already = run_cli("graphify --gen cycle:5 --json");
  json p = json::parse(already.out);
  CHECK(p["suspensions"] == 0);
  CHECK(hypergraph_from_json(p["graph"]) == cycle_graph(5));
}

TEST_CASE("search samples deterministically") {
  const std::string args = "search --count 40 --seed 3 --gen random:7,0.15,2,3 --json";
  CmdResult a = run_cli(args);
  CmdResult b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  json parsed = json::parse(a.out);
  CHECK(parsed["sampled"] == 40);
  CHECK(parsed["ternary_free"].get<int>() > 0);
  CHECK(parsed["max_total_betti"].get<int>() <= 1);
  CHECK(parsed["violations"].empty());

  CmdResult none = run_cli("search --count 0 --json");
  CHECK(none.status == 0);
  CHECK(json::parse(none.out)["sampled"] == 0);
}

TEST_CASE("verify replays the reduction identities") {
  CmdResult r = run_cli("verify --count 6 --seed 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("verify: ok (6 instances)") != std::string::npos);

  CmdResult named = run_cli("verify --gen cycle:6 --count 1");
  CHECK(named.status == 0);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("betti --gen cycle:2").status == 2);          // generator error
  CHECK(run_cli("betti --gen nonsense:4").status == 2);       // unknown generator
  CHECK(run_cli("betti").status == 2);                        // missing input
  CHECK(run_cli("betti --gen cycle:4 --input -").status == 2);  // both inputs
  CHECK(run_cli("nonsense").status == 2);                     // unknown subcommand
  CHECK(run_cli("betti --input /tmp/starcluster_cli_nope").status == 2);
  CHECK(run_cli("betti --gen random:30,0.1,2,3").status == 3);   // vertex guard
  CHECK(run_cli("cycles --gen cycle:12 --budget 2").status == 5);  // search budget
  TempFile spike("spike.txt", to_text([] {
                   EdgeList edges = {{0, 1}, {0, 2}, {0, 3}};
                   for (Vertex i : {1, 2, 3})
                     for (Vertex x = 4; x <= 9; ++x) edges.push_back({i, x});
                   return Hypergraph::from_edges(edges);
                 }()));
  CHECK(run_cli("reduce --input " + spike.path + " --tuple-cap 10").status == 5);
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("the CLI does not mutate its input file") {
  const std::string body = "vertices: 0 1 2 3\n0 1\n1 2\n";
  TempFile input("immutable.txt", body);
  run_cli("betti --input " + input.path);
  run_cli("reduce --input " + input.path);
  std::ifstream in(input.path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == body);
}
