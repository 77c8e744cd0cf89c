#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "starcluster/errors.hpp"
#include "starcluster/hypergraph.hpp"
#include "starcluster/io.hpp"

using namespace starcluster;
using nlohmann::json;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/starcluster_io_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("text round trip preserves hypergraphs, including isolated vertices") {
  Hypergraph h({0, 5, 9}, {{0, 5}, {0, 9, 5}});
  Hypergraph back = read_text(to_text(h));
  CHECK(back == h);

  Hypergraph edgeless({1, 2, 3}, {});
  CHECK(read_text(to_text(edgeless)) == edgeless);

  CHECK(read_text(to_text(Hypergraph())) == Hypergraph());
}

TEST_CASE("reader accepts comments, blank lines, and a vertices header") {
  const std::string text =
      "# a comment\n"
      "\n"
      "vertices: 1 2 3 7\n"
      "1 2\n"
      "  2 3   # trailing comment\n"
      "\n";
  Hypergraph h = read_text(text);
  CHECK(h.vertices() == std::vector<Vertex>{1, 2, 3, 7});
  CHECK(h.edges() == EdgeList{{1, 2}, {2, 3}});
}

TEST_CASE("reader accepts a spaced header and bare edge lines") {
  Hypergraph h = read_text("vertices : 4 5\n4 5\n");
  CHECK(h.vertices() == std::vector<Vertex>{4, 5});

  Hypergraph bare = read_text("0 1\n1 2\n");
  CHECK(bare.vertices() == std::vector<Vertex>{0, 1, 2});
  CHECK(bare.edge_count() == 2);
}

TEST_CASE("reader canonicalizes duplicate entries") {
  Hypergraph h = read_text("2 1 2\n");
  CHECK(h.edges() == EdgeList{{1, 2}});
}

TEST_CASE("reader reports malformed lines") {
  CHECK_THROWS_AS(read_text("1 x 2\n"), ParseError);
  CHECK_THROWS_AS(read_text("-3 1\n"), ParseError);
  CHECK_THROWS_AS(read_text("vertices 5\n"), ParseError);
  CHECK_THROWS_AS(read_text("12:\n"), ParseError);
  // Vertex ids beyond the sanity bound are rejected.
  CHECK_THROWS_AS(read_text("1 99999999999\n"), ParseError);

  try {
    read_text("0 1\nbogus line\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);  // line number
  }
}

TEST_CASE("empty text yields the empty hypergraph") {
  CHECK(read_text("") == Hypergraph());
  CHECK(read_text("# only comments\n\n") == Hypergraph());
}

TEST_CASE("json round trip") {
  Hypergraph h({0, 1, 2, 8}, {{0, 1}, {1, 2}});
  json j = hypergraph_to_json(h);
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == 2);
  CHECK(hypergraph_from_json(j) == h);
}

TEST_CASE("json parser rejects malformed documents") {
  CHECK_THROWS_AS(hypergraph_from_json(json::object()), ParseError);
  CHECK_THROWS_AS(hypergraph_from_json(json::parse(R"({"vertices":3,"edges":[]})")), ParseError);
  CHECK_THROWS_AS(hypergraph_from_json(json::parse(R"({"vertices":[],"edges":1})")), ParseError);
  CHECK_THROWS_AS(hypergraph_from_json(json::parse(R"({"vertices":[],"edges":[["a"]]})")),
                  ParseError);
  // Structural errors from the hypergraph itself surface as ParseError too.
  CHECK_THROWS_AS(hypergraph_from_json(json::parse(R"({"vertices":[-1],"edges":[]})")),
                  ParseError);
  CHECK_THROWS_AS(hypergraph_from_json(json::parse(R"({"vertices":[],"edges":[[]]})")),
                  ParseError);
}

TEST_CASE("file round trips in both formats") {
  Hypergraph h({0, 1, 2, 3, 9}, {{0, 1, 2}, {2, 3}});

  TempFile text_file("roundtrip.txt");
  write_hypergraph_file(text_file.path, h, FileFormat::Text);
  CHECK(read_hypergraph_file(text_file.path, FileFormat::Text) == h);

  TempFile json_file("roundtrip.json");
  write_hypergraph_file(json_file.path, h, FileFormat::Json);
  CHECK(read_hypergraph_file(json_file.path, FileFormat::Json) == h);

  // The JSON writer produces a parseable document.
  std::ifstream in(json_file.path);
  json parsed = json::parse(in);
  CHECK(parsed.contains("vertices"));
  CHECK(parsed.contains("edges"));
}

TEST_CASE("reading a missing file raises ParseError") {
  CHECK_THROWS_AS(read_hypergraph_file("/tmp/starcluster_io_does_not_exist", FileFormat::Text),
                  ParseError);
  CHECK_THROWS_AS(read_hypergraph_file("/tmp/starcluster_io_does_not_exist", FileFormat::Json),
                  ParseError);
}

TEST_CASE("reading malformed json files raises ParseError") {
  TempFile bad("bad.json");
  std::ofstream(bad.path) << "{not json";
  CHECK_THROWS_AS(read_hypergraph_file(bad.path, FileFormat::Json), ParseError);
}

TEST_CASE("to_text always emits the vertices header") {
  const std::string text = to_text(Hypergraph({4}, {}));
  CHECK(text.find("vertices:") != std::string::npos);
  CHECK(text.find('4') != std::string::npos);
}
