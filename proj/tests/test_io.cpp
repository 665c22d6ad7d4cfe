#include <doctest.h>

#include <algorithm>

#include "bca/error.hpp"
#include "bca/io.hpp"
#include "support.hpp"

using namespace bca;
using testing_support::fixture;

namespace {

std::string example2_text() { return read_file(fixture_dir() + "/example2.json"); }

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("malformed JSON reports line and column") {
  const std::string text = "{\n  \"vertices\": [\"1\",\n  ]\n}";
  try {
    parse_configuration(text);
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 1);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("occurrence indices are bounded by the polygon") {
  auto text = example2_text();
  text.replace(text.find("V1#3"), 4, "V1#4");
  CHECK_THROWS_AS(parse_configuration(text), ParseError);
  text = example2_text();
  text.replace(text.find("V1#3"), 4, "V1#x");
  CHECK_THROWS_AS(parse_configuration(text), ParseError);
  text = example2_text();
  text.replace(text.find("V1#3"), 4, "V9");
  CHECK_THROWS_AS(parse_configuration(text), ParseError);
}

TEST_CASE("structural errors") {
  CHECK_THROWS_AS(parse_configuration("[]"), ParseError);
  CHECK_THROWS_AS(parse_configuration(R"({"polygons": []})"), ParseError);
  CHECK_THROWS_AS(parse_configuration(R"({"vertices": ["1"], "polygons": [{"label": "V", "members": ["2"]}]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_configuration(R"({"vertices": [{"name": "1", "multiplicity": 0}], "polygons": []})"), ParseError);
}

TEST_CASE("multiplicity defaults to one") {
  const auto raw = parse_configuration(
      R"({"vertices": ["1", {"name": "2"}, {"name": "3", "multiplicity": 4}], "polygons": []})");
  CHECK(raw.vertices[0].multiplicity == 1);
  CHECK(raw.vertices[1].multiplicity == 1);
  CHECK(raw.vertices[2].multiplicity == 4);
}

TEST_CASE("serialization round trip") {
  for (const char* name : {"example1", "example2", "ten_vertex", "r30_gamma_prime"}) {
    CAPTURE(name);
    const auto raw = fixture(name).data();
    for (bool pretty : {true, false}) {
      const auto back = parse_configuration(serialize_configuration(raw, pretty));
      CHECK(back.vertices == raw.vertices);
      CHECK(back.polygons == raw.polygons);
      CHECK(back.orientation == raw.orientation);
    }
  }
  const auto j = to_json(fixture("example2").data());
  const auto seq = j.at("orientation").at("1");
  CHECK(std::find(seq.begin(), seq.end(), "V3") != seq.end());
  CHECK(std::find(seq.begin(), seq.end(), "V1#1") != seq.end());
}

TEST_CASE("DOT output") {
  const auto cfg1 = reduce(fixture("example1"));
  const auto dot1 = emit_dot(cfg1, build_quiver(cfg1));
  CHECK(dot1 == emit_dot(cfg1, build_quiver(cfg1)));
  CHECK(count_of(dot1, "->") == 12);
  CHECK(dot1.find("\"V1\" -> \"V5\" [label=\"a1 (1, 1)\"]") != std::string::npos);
  const auto cfg2 = reduce(fixture("example2"));
  CHECK(count_of(emit_dot(cfg2, build_quiver(cfg2)), "->") == 10);
}

TEST_CASE("graph JSON and matrix CSV") {
  const auto g = parse_graph(R"({"n": 3, "edges": [[1, 2], [2, 2], [2, 3]], "names": ["a", "b", "c"]})");
  CHECK(g.name(1) == "b");
  const auto back = graph_from_json(to_json(g));
  CHECK(back.edges == g.edges);
  CHECK(back.names == g.names);
  CHECK(parse_graph(R"({"n": 2, "edges": [[1, 2]]})").name(0) == "e1");
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[1, 2]], "names": []})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[1]]})"), ParseError);

  const auto m = matrix_from_graph(g);
  CHECK(matrix_to_csv(m) == "0,1,0\n1,1,1\n0,1,0\n");
  CHECK(parse_matrix_csv(matrix_to_csv(m)) == m);
  CHECK(parse_matrix_csv(" 0 , 1\r\n1,0\n\n") == SymMatrix{{0, 1}, {1, 0}});
  try {
    parse_matrix_csv("0,1\n1,x\n");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}
