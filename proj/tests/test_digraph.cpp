#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "reducts/generic_builder.hpp"
#include "reducts/transforms.hpp"

using namespace reducts;

TEST_CASE("new digraph has no edges") {
  Digraph g(5);
  CHECK(g.size() == 5);
  CHECK(g.edge_count() == 0);
  CHECK(g.pair_count() == 10);
  for (Vertex x = 0; x < 5; ++x) {
    for (Vertex y = 0; y < 5; ++y) {
      if (x != y) {
        CHECK(g.pair_type(x, y) == PairType::None);
      }
    }
  }
  CHECK(Digraph(0).pair_count() == 0);
}

TEST_CASE("pair type reads consistently from both ends") {
  Digraph g(4);
  g.set(0, 2, PairType::Out);
  g.set(3, 1, PairType::Out);
  CHECK(g.pair_type(0, 2) == PairType::Out);
  CHECK(g.pair_type(2, 0) == PairType::In);
  CHECK(g.pair_type(1, 3) == PairType::In);
  CHECK(g.pair_type(3, 1) == PairType::Out);
  CHECK(g.edge_count() == 2);
  g.set(2, 0, PairType::None);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("invalid pairs throw") {
  Digraph g(3);
  CHECK_THROWS_AS(g.pair_type(1, 1), std::domain_error);
  CHECK_THROWS_AS(g.pair_type(0, 3), std::domain_error);
  CHECK_THROWS_AS(g.set(2, 2, PairType::Out), std::domain_error);
}

TEST_CASE("storage spans word boundaries") {
  // 40 vertices give 780 pairs, well past one 64-bit word of 2-bit cells.
  Digraph      g = random_digraph(40, 11);
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    Vertex const x = rng() % 40, y = rng() % 40;
    if (x == y) {
      continue;
    }
    PairType const t = all_pair_types[rng() % 3];
    g.set(x, y, t);
    CHECK(g.pair_type(x, y) == t);
    CHECK(g.pair_type(y, x) == reversed(t));
  }
}

TEST_CASE("add_vertex keeps existing pairs") {
  Digraph g = random_digraph(7, 5);
  Digraph h = g;
  CHECK(h.add_vertex() == 7);
  CHECK(h.size() == 8);
  CHECK(induced(h, identity_map(7)) == g);
  for (Vertex x = 0; x < 7; ++x) {
    CHECK(h.pair_type(7, x) == PairType::None);
  }
}

TEST_CASE("triangle codes") {
  CHECK(TriangleCode::from_index(0) == TriangleCode{PairType::Out, PairType::Out, PairType::Out});
  CHECK(TriangleCode::from_index(26) == TriangleCode{PairType::None, PairType::None, PairType::None});
  for (std::size_t i = 0; i < triangle_code_count; ++i) {
    CHECK(TriangleCode::from_index(i).index() == i);
  }
  Digraph g(3);
  g.set(0, 1, PairType::Out);
  g.set(2, 1, PairType::Out);
  auto const c = triangle_code(g, 0, 1, 2);
  CHECK(c.t12 == PairType::Out);
  CHECK(c.t23 == PairType::In);
  CHECK(c.t13 == PairType::None);
  CHECK_FALSE(c.is_tournament());
}

TEST_CASE("induced renumbers by list position") {
  Digraph g(4);
  g.set(3, 1, PairType::Out);
  std::vector<Vertex> const vs{3, 1};
  auto const                h = induced(g, vs);
  CHECK(h.size() == 2);
  CHECK(h.pair_type(0, 1) == PairType::Out);
  std::vector<Vertex> const dup{1, 1};
  CHECK_THROWS(induced(g, dup));
}

TEST_CASE("relabel moves pairs and rejects non-permutations") {
  Digraph const             g = random_digraph(6, 2);
  std::vector<Vertex> const perm{3, 5, 0, 1, 4, 2};
  auto const                h = relabel(g, perm);
  for (Vertex x = 0; x < 6; ++x) {
    for (Vertex y = 0; y < 6; ++y) {
      if (x != y) {
        CHECK(h.pair_type(perm[x], perm[y]) == g.pair_type(x, y));
      }
    }
  }
  std::vector<Vertex> const bad{0, 0, 1, 2, 3, 4};
  CHECK_THROWS(relabel(g, bad));
}

TEST_CASE("isomorphism agrees with exhaustive search on small digraphs") {
  // All digraphs on 3 vertices against each other, then random pairs on 4.
  for (std::size_t a = 0; a < 27; ++a) {
    for (std::size_t b = 0; b < 27; ++b) {
      auto mk = [](std::size_t i) {
        auto const c = TriangleCode::from_index(i);
        Digraph    g(3);
        g.set(0, 1, c.t12);
        g.set(1, 2, c.t23);
        g.set(0, 2, c.t13);
        return g;
      };
      Digraph const g = mk(a), h = mk(b);
      auto const    phi = is_isomorphic(g, h);
      REQUIRE(phi.has_value() == oracle::isomorphic(g, h));
      if (phi) {
        for (Vertex x = 0; x < 3; ++x) {
          for (Vertex y = 0; y < 3; ++y) {
            if (x != y) {
              CHECK(g.pair_type(x, y) == h.pair_type((*phi)[x], (*phi)[y]));
            }
          }
        }
      }
    }
  }
  for (std::uint64_t s = 0; s < 300; ++s) {
    Digraph const g = random_digraph(4, s);
    Digraph const h = random_digraph(4, s % 7 == 0 ? s : s + 1000);
    CHECK(is_isomorphic(g, h).has_value() == oracle::isomorphic(g, h));
  }
}

TEST_CASE("relabelled copies are isomorphic") {
  std::mt19937 rng(9);
  for (std::uint64_t s = 0; s < 20; ++s) {
    Digraph const       g = random_digraph(9, s);
    std::vector<Vertex> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(is_isomorphic(g, relabel(g, perm)).has_value());
  }
  Digraph g(3), h(3);
  g.set(0, 1, PairType::Out);
  CHECK_FALSE(is_isomorphic(g, h).has_value());
  CHECK_FALSE(is_isomorphic(Digraph(2), Digraph(3)).has_value());
}

TEST_CASE("underlying graph forgets orientation") {
  Digraph const g = random_digraph(8, 4);
  Graph const   G = underlying_graph(g);
  CHECK(G.edge_count() == g.edge_count());
  for (Vertex x = 0; x < 8; ++x) {
    for (Vertex y = 0; y < 8; ++y) {
      if (x != y) {
        CHECK(G.adjacent(x, y) == is_edge(g.pair_type(x, y)));
      }
    }
  }
}
