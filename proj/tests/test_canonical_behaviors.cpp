#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "reducts/canonical_behaviors.hpp"
#include "reducts/generic_builder.hpp"
#include "reducts/transforms.hpp"

using namespace reducts;

namespace {

  constexpr PairType E  = PairType::Out;
  constexpr PairType Es = PairType::In;
  constexpr PairType Nn = PairType::None;

  TypeMap behavior(PairType e, PairType es, PairType n) {
    return TypeMap{{e, es, n}};
  }

  char case_number(std::string const& label) {
    return label.front();
  }

  // The case label with its leading number dropped, e.g. "2d(ii)" -> "d(ii)".
  std::string case_tail(std::string const& label) {
    return label.substr(1);
  }

}  // namespace

TEST_CASE("enumeration and rendering") {
  auto const all = enumerate_behaviors();
  CHECK(all.size() == 27);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(to_string(behavior(E, Es, Nn)) == "E->E, E*->E*, N->N");
  CHECK(enumerate_two_orbit_behaviors().size() == 108);
  for (auto const& b : all) {
    CHECK(mirrored(mirrored(b)) == b);
  }
  CHECK(mirrored(behavior(E, Nn, E)) == behavior(Nn, Es, Es));
}

TEST_CASE("one-orbit verdicts") {
  std::map<VerdictKind, int> hist;
  for (auto const& b : enumerate_behaviors()) {
    ++hist[classify_behavior(b).kind];
  }
  CHECK(hist[VerdictKind::BehavesLikeId] == 1);
  CHECK(hist[VerdictKind::BehavesLikeMinus] == 1);
  CHECK(hist[VerdictKind::ContainsAutGamma] == 4);
  CHECK(hist[VerdictKind::EqualsSymD] == 21);

  CHECK(classify_behavior(behavior(E, Es, Nn)) == Verdict{VerdictKind::BehavesLikeId, "1a"});
  CHECK(classify_behavior(behavior(Es, E, Nn)) == Verdict{VerdictKind::BehavesLikeMinus, "1b"});
  CHECK(classify_behavior(behavior(E, E, Nn)) == Verdict{VerdictKind::ContainsAutGamma, "1c"});
  CHECK(classify_behavior(behavior(Es, Es, Nn)) == Verdict{VerdictKind::ContainsAutGamma, "1c"});
  CHECK(classify_behavior(behavior(Nn, Nn, Nn)).kind == VerdictKind::EqualsSymD);
  CHECK(classify_behavior(behavior(Nn, Nn, E)) == Verdict{VerdictKind::ContainsAutGamma, "2b"});
  CHECK(classify_behavior(behavior(E, Es, E)) == Verdict{VerdictKind::EqualsSymD, "2a"});
}

TEST_CASE("case 2 and case 3 mirror each other") {
  for (auto const& b : enumerate_behaviors()) {
    auto const v = classify_behavior(b);
    auto const m = classify_behavior(mirrored(b));
    CHECK(v.kind == m.kind);
    CHECK(case_tail(v.case_label) == case_tail(m.case_label));
    char const c = case_number(v.case_label);
    char const d = case_number(m.case_label);
    CHECK(((c == '1' && d == '1') || (c == '2' && d == '3') || (c == '3' && d == '2')));
  }
}

TEST_CASE("two-orbit verdicts") {
  using K = TwoOrbitKind;
  using A = OrbitAction;
  CHECK(classify_two_orbit({A::Id, A::Id, behavior(E, Es, Nn)}).kind == K::IdBetween);
  CHECK(classify_two_orbit({A::Id, A::Id, behavior(Es, E, Nn)}).kind == K::SwBetween);
  CHECK(classify_two_orbit({A::Minus, A::Minus, behavior(Nn, Es, E)}) == TwoOrbitVerdict{K::MinusRotCombined, "2d(ii)"});
  CHECK(classify_two_orbit({A::Id, A::Id, behavior(Nn, Es, E)}) == TwoOrbitVerdict{K::EqualsSymD, "2d(i)"});
  CHECK(classify_two_orbit({A::Id, A::Minus, behavior(Nn, Es, E)}) == TwoOrbitVerdict{K::EqualsSymD, "2d(ii)"});
  CHECK(classify_two_orbit({A::Minus, A::Id, behavior(Nn, Es, E)}) == TwoOrbitVerdict{K::EqualsSymD, "2d(i)"});
  CHECK(classify_two_orbit({A::Id, A::Id, behavior(Es, Nn, E)}).kind == K::RotBetween);
  CHECK(classify_two_orbit({A::Id, A::Minus, behavior(Es, Nn, E)}).kind == K::EqualsSymD);
  CHECK(classify_two_orbit({A::Id, A::Id, behavior(Nn, E, Es)}).kind == K::RotInvBetween);

  int combined = 0;
  for (auto const& b : enumerate_two_orbit_behaviors()) {
    auto const v = classify_two_orbit(b);
    combined += v.kind == K::MinusRotCombined;
    auto const m  = classify_two_orbit({b.onX, b.onY, mirrored(b.between)});
    auto       mk = m.kind;
    if (mk == K::RotBetween) {
      mk = K::RotInvBetween;
    } else if (mk == K::RotInvBetween) {
      mk = K::RotBetween;
    }
    CHECK(v.kind == mk);
    CHECK(case_tail(v.case_label) == case_tail(m.case_label));
  }
  CHECK(combined == 2);
}

TEST_CASE("interdense and c-generic helpers") {
  using A      = OrbitAction;
  auto const v = classify_interdense(A::Id, A::Id, behavior(E, Es, Nn), behavior(Es, Nn, E));
  CHECK(v.increasing.kind == TwoOrbitKind::IdBetween);
  CHECK(v.decreasing.kind == TwoOrbitKind::RotBetween);
  CHECK(classify_c_generic(A::Minus, behavior(Nn, Es, E)).kind == TwoOrbitKind::MinusRotCombined);
  CHECK(classify_c_generic(A::Id, behavior(E, Es, Nn)).kind == TwoOrbitKind::IdBetween);
}

TEST_CASE("rewriting by a behaviour") {
  Digraph const g = random_digraph(9, 12);
  CHECK(rewrite_by_behavior(g, behavior(E, Es, Nn)) == g);
  CHECK(rewrite_by_behavior(g, behavior(Es, E, Nn)) == apply(reverse(), g));
  for (auto const& b : enumerate_behaviors()) {
    auto const h = rewrite_by_behavior(g, b);
    for (Vertex y = 1; y < 9; ++y) {
      for (Vertex x = 0; x < y; ++x) {
        CHECK(h.pair_type(x, y) == b(g.pair_type(x, y)));
      }
    }
    std::vector<Vertex> rev(9);
    for (Vertex v = 0; v < 9; ++v) {
      rev[v] = 8 - v;
    }
    // Reading the order backwards conjugates the behaviour by reversal.
    CHECK(rewrite_in_order(g, b, rev) == rewrite_by_behavior(g, mirrored(b)));
  }
  std::vector<Vertex> const bad{0, 1};
  CHECK_THROWS_AS(rewrite_in_order(g, behavior(E, Es, Nn), bad), std::domain_error);
}

TEST_CASE("minimal preimages") {
  auto const order = identity_map(7);
  for (auto const& b : enumerate_behaviors()) {
    Digraph const g = random_digraph(7, 4);
    Digraph const h = rewrite_by_behavior(g, b);
    auto const    p = min_edge_preimage(h, b, order);
    REQUIRE(p.has_value());
    CHECK(rewrite_in_order(*p, b, order) == h);
    CHECK(p->edge_count() <= g.edge_count());
  }
  Digraph edge(2);
  edge.set(0, 1, PairType::Out);
  CHECK_FALSE(min_edge_preimage(edge, behavior(Nn, Nn, Nn), identity_map(2)).has_value());
}

TEST_CASE("orbit labels relative to constants") {
  Digraph g(5);
  g.set(0, 2, PairType::Out);
  g.set(2, 4, PairType::Out);
  std::vector<Vertex> const cs{2};
  auto const                labels = orbit_labels(g, cs);
  CHECK(labels[2].constant == 0u);
  CHECK(labels[0].profile == std::vector<std::pair<bool, PairType>>{{true, PairType::Out}});
  CHECK(labels[4].profile == std::vector<std::pair<bool, PairType>>{{false, PairType::In}});
  CHECK(labels[1] != labels[0]);
  CHECK(to_string(labels[2]) == "c0");

  auto const t = find_c_generic_triple(g, 2, cs);
  REQUIRE(t.has_value());
  CHECK(t->members[0] == VertexSet{4});
  CHECK(t->members[1] == VertexSet{0});
  CHECK(t->members[2] == VertexSet{1});
  CHECK_FALSE(find_c_generic_triple(Digraph(4), 0, std::vector<Vertex>{0}).has_value());
  std::vector<Vertex> const unsorted{3, 1};
  CHECK_THROWS_AS(orbit_labels(g, unsorted), std::domain_error);
}

TEST_CASE("witness searches") {
  // Sending both orientations to E aligns every edge in one step.
  Digraph const start = random_digraph(6, 3);
  auto const    align = search_edge_alignment(start, behavior(E, E, Nn));
  REQUIRE(align.found);
  CHECK(align.steps.size() == 1);
  CHECK(underlying_graph(align.result) == underlying_graph(start));

  auto const del = search_edge_deletion(start, behavior(Nn, Nn, Nn));
  REQUIRE(del.found);
  CHECK(del.result.edge_count() < start.edge_count());
  CHECK(del.start == start);

  // The identity never changes anything.
  CHECK_FALSE(search_edge_deletion(start, behavior(E, Es, Nn)).found);
}
