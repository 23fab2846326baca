#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "reducts/generic_builder.hpp"
#include "reducts/transforms.hpp"

using namespace reducts;

namespace {

  VertexSet random_subset(std::size_t n, std::mt19937_64& rng) {
    VertexSet A;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() & 1u) {
        A.push_back(v);
      }
    }
    return A;
  }

  std::array<VertexSet, 3> random_partition(std::size_t n, std::mt19937_64& rng) {
    std::array<VertexSet, 3> p;
    for (Vertex v = 0; v < n; ++v) {
      p[rng() % 3].push_back(v);
    }
    return p;
  }

  bool contains(VertexSet const& s, Vertex v) {
    return std::find(s.begin(), s.end(), v) != s.end();
  }

}  // namespace

TEST_CASE("reverse flips an edge") {
  Digraph g(2);
  g.set(0, 1, PairType::Out);
  auto const h = apply(reverse(), g);
  CHECK(h.pair_type(1, 0) == PairType::Out);
}

TEST_CASE("rotation about a vertex turns non-edges at it into out-edges") {
  Digraph const g(3);
  auto const    h = apply(rot_about(0, 3), g);
  CHECK(h.pair_type(0, 1) == PairType::Out);
  CHECK(h.pair_type(0, 2) == PairType::Out);
  CHECK(h.pair_type(1, 2) == PairType::None);
  auto const h2 = apply(rot_about(0, 3), h);
  CHECK(h2.pair_type(0, 1) == PairType::In);
  CHECK(apply(rot_about(0, 3), h2) == g);
}

TEST_CASE("pair rewrites follow the pointwise definitions") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t const n = 1 + rng() % 9;
    Digraph const     g = random_digraph(n, rng());
    VertexSet const   A = random_subset(n, rng);
    auto const        p = random_partition(n, rng);
    auto const        sw  = apply(switch_set(A), g);
    auto const        rt  = apply(rot(p[0], p[1], p[2]), g);
    auto const        gr  = apply(graph_reverse(), g);
    auto const        gsw = apply(graph_switch(A), g);
    auto piece = [&](Vertex v) { return contains(p[0], v) ? 0 : contains(p[1], v) ? 1 : 2; };
    for (Vertex y = 1; y < n; ++y) {
      for (Vertex x = 0; x < y; ++x) {
        PairType const t     = g.pair_type(x, y);
        bool const     cross = contains(A, x) != contains(A, y);
        CHECK(sw.pair_type(x, y) == (cross ? reversed(t) : t));
        CHECK(rt.pair_type(x, y) == oracle::rotate_pair(t, piece(x), piece(y)));
        PairType const flipped = is_edge(t) ? PairType::None : PairType::Out;
        CHECK(gr.pair_type(x, y) == flipped);
        CHECK(gsw.pair_type(x, y) == (cross ? flipped : t));
      }
    }
  }
}

TEST_CASE("involutions and the order of a rotation") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    Digraph const   g = random_digraph(8, rng());
    VertexSet const A = random_subset(8, rng);
    auto const      p = random_partition(8, rng);
    CHECK(apply(reverse(), apply(reverse(), g)) == g);
    CHECK(apply(switch_set(A), apply(switch_set(A), g)) == g);
    CHECK(apply(switch_set(A), g) == apply(switch_set(complement(A, 8)), g));
    auto const r = rot(p[0], p[1], p[2]);
    CHECK(apply(r, apply(r, apply(r, g))) == g);
    CHECK(apply(rot(p[1], p[2], p[0]), g) == apply(r, g));
    CHECK(apply(compose({r, r, r}), g) == g);
    CHECK(apply(switch_set({}), g) == g);
    CHECK(apply(identity(), g) == g);
  }
}

TEST_CASE("compose applies the last item first") {
  Digraph g(3);
  g.set(0, 1, PairType::Out);
  auto const t = compose({switch_set({0}), rot_about(0, 3)});
  CHECK(apply(t, g) == apply(switch_set({0}), apply(rot_about(0, 3), g)));
  CHECK(apply(t, g) != apply(rot_about(0, 3), apply(switch_set({0}), g)));
}

TEST_CASE("malformed parameters throw") {
  Digraph const g(4);
  CHECK_THROWS_AS(apply(rot({0, 1}, {1}, {2, 3}), g), std::domain_error);
  CHECK_THROWS_AS(apply(rot({0}, {1}, {2}), g), std::domain_error);
  CHECK_THROWS_AS(apply(switch_set({7}), g), std::domain_error);
}

TEST_CASE("behaves_like") {
  Digraph const g = random_digraph(7, 3);
  auto const    id = identity_map(7);
  CHECK(behaves_like(g, g, id, compose({})));
  VertexSet const A{1, 4, 5};
  CHECK(behaves_like(g, apply(switch_set(A), g), id, switch_set(A)));

  // Path 0 -> 1 -> 2 with A = {0, 1}: reversal flips the edge inside A.
  Digraph path(3);
  path.set(0, 1, PairType::Out);
  path.set(1, 2, PairType::Out);
  CHECK_FALSE(behaves_like(path, apply(reverse(), path), identity_map(3), switch_set({0, 1})));

  for (int m = 1; m <= 4; ++m) {
    CHECK(behaves_like(g, apply(reverse(), g), id, reverse(), m));
  }
  CHECK_THROWS_AS(behaves_like(g, g, id, reverse(), 5), std::domain_error);
  std::vector<Vertex> const clash{0, 0, 1, 2, 3, 4, 5};
  CHECK_THROWS_AS(behaves_like(g, g, clash, identity()), std::domain_error);
}

TEST_CASE("behaves_like is complete at tuple size two") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    Digraph const g  = random_digraph(6, rng());
    Digraph const h  = trial % 2 ? apply(reverse(), g) : random_digraph(6, rng());
    auto const    id = identity_map(6);
    CHECK(behaves_like(g, h, id, reverse(), 2) == behaves_like(g, h, id, reverse(), 4));
  }
}

TEST_CASE("switch detection") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph const   g = random_digraph(10, rng());
    VertexSet const A = random_subset(10, rng);
    auto const      d = detect_switch_set(g, apply(switch_set(A), g), identity_map(10));
    REQUIRE(d.set.has_value());
    CHECK((*d.set == A || *d.set == complement(A, 10)));
    CHECK(behaves_like(g, apply(switch_set(A), g), identity_map(10), switch_set(*d.set)));
  }
  Digraph const g  = random_digraph(8, 2);
  auto const    id = detect_switch_set(g, g, identity_map(8));
  REQUIRE(id.set.has_value());
  CHECK((id.set->empty() || id.set->size() == 8));

  Digraph tri(3);
  tri.set(0, 1, PairType::Out);
  tri.set(1, 2, PairType::Out);
  tri.set(0, 2, PairType::Out);
  CHECK_FALSE(detect_switch_set(tri, apply(reverse(), tri), identity_map(3)).set.has_value());
}

TEST_CASE("switch detection on a digraph without edges at the anchor") {
  // No edges at all: the layering covers nothing, yet any set is a valid
  // answer since every switch fixes the digraph.
  Digraph const g(5);
  auto const    d = detect_switch_set(g, g, identity_map(5));
  REQUIRE(d.set.has_value());
  CHECK(behaves_like(g, g, identity_map(5), switch_set(*d.set)));
}

TEST_CASE("rotation detection") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph const g = random_digraph(10, rng());
    auto const    p = random_partition(10, rng);
    auto const    d = detect_rot_partition(g, apply(rot(p[0], p[1], p[2]), g), identity_map(10));
    REQUIRE(d.has_value());
    bool cyclic = false;
    for (int s = 0; s < 3; ++s) {
      cyclic |= d->A == p[s] && d->B == p[(s + 1) % 3] && d->C == p[(s + 2) % 3];
    }
    CHECK(cyclic);
  }
  Digraph const g  = random_digraph(6, 4);
  auto const    id = detect_rot_partition(g, g, identity_map(6));
  REQUIRE(id.has_value());
  CHECK(id->A.size() == 6);

  // Switching a transitive triangle at its source is Rot({0}, {1, 2}, {}),
  // but switching a cyclic one is no rotation.
  Digraph tri(3);
  tri.set(0, 1, PairType::Out);
  tri.set(1, 2, PairType::Out);
  tri.set(0, 2, PairType::Out);
  auto const transitive = detect_rot_partition(tri, apply(switch_set({0}), tri), identity_map(3));
  REQUIRE(transitive.has_value());
  CHECK(transitive->A == VertexSet{0});
  CHECK(transitive->B == VertexSet{1, 2});
  tri.set(2, 0, PairType::Out);
  CHECK_FALSE(detect_rot_partition(tri, apply(switch_set({0}), tri), identity_map(3)).has_value());
}

TEST_CASE("edge deletion at a vertex") {
  Digraph g(3);
  g.set(0, 1, PairType::Out);
  auto const [h, t] = reduce_edges_via_sw_rot(g, 0);
  CHECK(h.edge_count() == 0);
  CHECK(apply(t, g) == h);

  CHECK_THROWS_AS(reduce_edges_via_sw_rot(Digraph(3), 1), std::domain_error);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t const n = 2 + rng() % 11;
    Digraph const     d = random_digraph(n, rng());
    Vertex const      a = rng() % n;
    bool              incident = false;
    for (Vertex x = 0; x < n; ++x) {
      incident |= x != a && is_edge(d.pair_type(a, x));
    }
    if (!incident) {
      continue;
    }
    auto const [r, tr] = reduce_edges_via_sw_rot(d, a);
    CHECK(r.edge_count() < d.edge_count());
    CHECK(apply(tr, d) == r);
    for (Vertex y = 1; y < n; ++y) {
      for (Vertex x = 0; x < y; ++x) {
        CHECK(r.pair_type(x, y) == ((x == a || y == a) ? PairType::None : d.pair_type(x, y)));
      }
    }
  }
}
