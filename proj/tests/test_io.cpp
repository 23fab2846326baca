#include <doctest.h>

#include "reducts/io.hpp"

using namespace reducts;

TEST_CASE("digraph JSON round-trip") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Digraph const g = random_digraph(9, s);
    auto const    j = to_json(g);
    CHECK(digraph_from_json(j) == g);
    CHECK(dump(to_json(digraph_from_json(parse_json(dump(j))))) == dump(j));
  }
  CHECK(dump(to_json(Digraph(0))) == "{\"n\":0,\"edges\":[]}\n");
}

TEST_CASE("edges are listed in sorted order") {
  Digraph g(3);
  g.set(2, 0, PairType::Out);
  g.set(0, 1, PairType::Out);
  CHECK(to_json(g).dump() == R"({"n":3,"edges":[[0,1],[2,0]]})");
}

TEST_CASE("malformed digraphs report where") {
  auto where = [](char const* text) {
    try {
      digraph_from_json(parse_json(text));
    } catch (ParseError const& e) {
      return e.where();
    }
    return std::string("no error");
  };
  CHECK(where(R"({"n":2,"edges":[[0,0]]})") == "/edges/0");
  CHECK(where(R"({"n":2,"edges":[[0,1],[0,1]]})") == "/edges/1");
  CHECK(where(R"({"n":2,"edges":[[0,1],[1,0]]})") == "/edges/1");
  CHECK(where(R"({"n":2,"edges":[[0,5]]})") == "/edges/0");
  CHECK(where(R"({"n":-1,"edges":[]})") == "/n");
  CHECK(where(R"({"edges":[]})") == "/");
  CHECK(where(R"({"n":2,"edges":[[0,1]})") == "byte 22");
}

TEST_CASE("transform JSON round-trip") {
  std::vector<Transform> const ts{
      reverse(),       switch_set({0, 3}), rot({0}, {1, 2}, {3}), graph_reverse(), graph_switch({1}),
      compose({reverse(), compose({switch_set({2})}), rot({}, {0, 1, 2, 3}, {})})};
  for (auto const& t : ts) {
    CHECK(transform_from_json(to_json(t)) == t);
  }
  CHECK(to_json(switch_set({0, 3})).dump() == R"({"op":"switch","A":[0,3]})");
}

TEST_CASE("malformed transforms report where") {
  auto where = [](char const* text) {
    try {
      transform_from_json(parse_json(text));
    } catch (ParseError const& e) {
      return e.where();
    }
    return std::string("no error");
  };
  CHECK(where(R"({"op":"spin"})") == "/op");
  CHECK(where(R"({"op":"switch"})") == "/");
  CHECK(where(R"({"op":"switch","A":[0,"x"]})") == "/A/1");
  CHECK(where(R"({"op":"compose","items":[{"op":"reverse"},{"op":"rot","A":[],"B":[]}]})") == "/items/1");
  CHECK(where(R"({"op":"switch","A":[1,1]})") == "/A");
  CHECK(where(R"([1,2])") == "/");
}

TEST_CASE("vertex maps") {
  CHECK(vertex_map_from_json(parse_json("[2,0,1]")) == std::vector<Vertex>{2, 0, 1});
  CHECK_THROWS_AS(vertex_map_from_json(parse_json("{}")), ParseError);
  CHECK_THROWS_AS(vertex_map_from_json(parse_json("[0,-1]")), ParseError);
}

TEST_CASE("report encodings") {
  EPReport r;
  r.k    = 2;
  r.pass = false;
  r.failures.push_back(EPTriple{{0}, {}, {1}});
  CHECK(to_json(r).dump() == R"({"k":2,"pass":false,"failures":[{"U":[0],"V":[],"W":[1]}]})");
  CHECK(to_json(RelationSet{RelationId::N, RelationId::E}).dump() == R"(["E","N"])");
}

TEST_CASE("file helpers") {
  CHECK_THROWS_AS(read_file("/nonexistent/dir/file.json"), IoError);
  CHECK_THROWS_AS(write_file("/nonexistent/dir/file.json", "x"), IoError);
}
