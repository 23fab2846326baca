#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "reducts/generic_builder.hpp"
#include "reducts/transforms.hpp"

using namespace reducts;

TEST_CASE("find_witness on small digraphs") {
  CHECK_FALSE(find_witness(Digraph(2), EPTriple{{}, {}, {0, 1}}).has_value());
  CHECK(find_witness(Digraph(3), EPTriple{{}, {}, {0, 1}}) == 2);
  Digraph g(3);
  g.set(0, 1, PairType::Out);
  CHECK(find_witness(g, EPTriple{{1}, {}, {}}) == 0);
  CHECK_THROWS_AS(find_witness(g, EPTriple{{1}, {1}, {}}), std::domain_error);
  CHECK_THROWS_AS(find_witness(g, EPTriple{{5}, {}, {}}), std::domain_error);
}

TEST_CASE("find_witness returns the least vertex accepted by the brute-force scan") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Digraph const g = random_digraph(9, s);
    for (auto const& t : enumerate_triples(identity_map(4), 2)) {
      std::optional<Vertex> expected;
      for (Vertex x = 0; x < g.size() && !expected; ++x) {
        if (oracle::witness(g, t, x)) {
          expected = x;
        }
      }
      CHECK(find_witness(g, t) == expected);
      if (expected) {
        CHECK(is_witness(g, t, *expected));
      }
    }
  }
}

TEST_CASE("triple enumeration") {
  auto const base = identity_map(3);
  auto const ts   = enumerate_triples(base, 1);
  CHECK(ts.size() == 9);
  // Over m vertices, each used vertex picks one of three roles.
  CHECK(enumerate_triples(base, 2).size() == 9 + 3 * 9);
  CHECK(enumerate_triples(base, 3).size() == 9 + 27 + 27);
  auto const all = enumerate_triples(base, 3);
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1].size() <= all[i].size());
    if (all[i - 1].size() == all[i].size()) {
      CHECK(all[i - 1] < all[i]);
    }
  }
}

TEST_CASE("check_k_ep basics") {
  auto const r = check_k_ep(Digraph(5), 1);
  CHECK_FALSE(r.pass);
  CHECK(std::find(r.failures.begin(), r.failures.end(), EPTriple{{0}, {}, {}}) != r.failures.end());
  auto const single = check_k_ep(Digraph(1), 1);
  CHECK_FALSE(single.pass);
  CHECK(single.k == 1);
  CHECK(single.failures.size() == 3);
}

TEST_CASE("random digraphs") {
  CHECK(random_digraph(0, 3).size() == 0);
  CHECK(random_digraph(12, 7) == random_digraph(12, 7));
  CHECK(random_digraph(12, 7) != random_digraph(12, 8));
  Digraph const g     = random_digraph(30, 1);
  double const  ratio = double(g.pair_count() - g.edge_count()) / double(g.pair_count());
  CHECK(ratio >= 0.20);
  CHECK(ratio <= 0.47);
}

TEST_CASE("extension reaches the requested level over the original vertices") {
  Digraph cycle(3);
  cycle.set(0, 1, PairType::Out);
  cycle.set(1, 2, PairType::Out);
  cycle.set(2, 0, PairType::Out);
  for (auto const& [g, k] : std::vector<std::pair<Digraph, int>>{
           {Digraph(3), 1}, {cycle, 2}, {random_digraph(6, 2), 2}, {random_digraph(5, 4), 3}}) {
    Digraph const h    = extend_to_ep(g, k, 9);
    auto const    base = identity_map(g.size());
    CHECK(induced(h, base) == g);
    CHECK(check_k_ep(h, k, base).pass);
    CHECK(oracle::has_ep(h, base, k));
    CHECK(check_graph_k_ep(underlying_graph(h), k, base).pass);
    CHECK(extend_to_ep(g, k, 9) == h);
  }
}

TEST_CASE("checker agrees with the oracle on random digraphs") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Digraph const g    = random_digraph(10, s);
    auto const    base = identity_map(3);
    CHECK(check_k_ep(g, 2, base).pass == oracle::has_ep(g, base, 2));
  }
}

TEST_CASE("graph extension property") {
  Graph empty(4);
  CHECK_FALSE(check_graph_k_ep(empty, 1).pass);
  Graph k5(5);
  for (Vertex x = 0; x < 5; ++x) {
    for (Vertex y = x + 1; y < 5; ++y) {
      k5.set(x, y, true);
    }
  }
  auto const r = check_graph_k_ep(k5, 1);
  CHECK_FALSE(r.pass);
  CHECK(std::find(r.failures.begin(), r.failures.end(), EPTriple{{}, {}, {0}}) != r.failures.end());
  Digraph const h = extend_to_ep(Digraph(3), 2, 1);
  CHECK(check_graph_k_ep(underlying_graph(h), 2, identity_map(3)).pass);
}

TEST_CASE("back and forth") {
  Digraph const g = random_digraph(8, 1);
  auto const    r = back_and_forth(g, g, {{0, 0}, {1, 1}}, 3);
  CHECK_FALSE(r.blocking.has_value());
  CHECK(r.map.size() == 5);
  for (auto [x, y] : r.map) {
    CHECK(x == y);
  }
  auto const all = back_and_forth(g, g, {{0, 0}}, 20);
  CHECK(all.map.size() == 8);

  Digraph edge(2);
  edge.set(0, 1, PairType::Out);
  CHECK_THROWS_AS(back_and_forth(edge, Digraph(2), {{0, 0}, {1, 1}}, 1), std::domain_error);
  CHECK_FALSE(back_and_forth(edge, Digraph(2), {{0, 0}}, 1).map.size() == 2);
}

TEST_CASE("back and forth between extended digraphs yields partial isomorphisms") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    Digraph const g = extend_to_ep(random_digraph(10, s), 3, s);
    Digraph const h = extend_to_ep(random_digraph(10, s + 50), 3, s + 50);
    auto const    r = back_and_forth(g, h, {{0, 0}}, 3);
    REQUIRE_FALSE(r.blocking.has_value());
    CHECK(r.map.size() == 4);
    std::vector<Vertex> dom, ran;
    for (auto [x, y] : r.map) {
      dom.push_back(x);
      ran.push_back(y);
    }
    auto const a = induced(g, dom);
    auto const b = induced(h, ran);
    CHECK(a == b);
    CHECK(oracle::isomorphic(a, b));
  }
}

TEST_CASE("maximal tournament embedding") {
  Digraph t(3);
  t.set(0, 1, PairType::Out);
  t.set(1, 2, PairType::Out);
  t.set(2, 0, PairType::Out);
  auto const e = embed_maximal_tournament(t, 2);
  CHECK(e.tournament == VertexSet{0, 1, 2});
  CHECK(induced(e.g, e.tournament) == t);
  CHECK(check_k_ep(e.g, 2, e.tournament).pass);
  CHECK(e.exempted.empty());
  CHECK(tournament_is_maximal(e.g, e.tournament));

  auto const one = embed_maximal_tournament(Digraph(1), 1);
  bool       some = false;
  for (Vertex x = 1; x < one.g.size(); ++x) {
    some |= one.g.pair_type(x, 0) == PairType::None;
  }
  CHECK(some);
  CHECK_FALSE(one.exempted.empty());

  Digraph bad(2);
  CHECK_THROWS_AS(embed_maximal_tournament(bad, 1), std::domain_error);
}
