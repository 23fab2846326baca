// Behaviours of canonical functions on 2-types: the one-orbit and two-orbit
// verdict tables, their finite realization by pair rewriting, orbit labels
// relative to named constants, and bounded searches for the edge-deletion
// and edge-alignment witnesses behind the verdicts.

#ifndef REDUCTS_CANONICAL_BEHAVIORS_HPP_
#define REDUCTS_CANONICAL_BEHAVIORS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reducts/digraph.hpp"

namespace reducts {

  // Image of each <-oriented 2-type, indexed by the source pair type
  // (Out = E, In = E*, None = N).
  struct TypeMap {
    std::array<PairType, 3> images{PairType::Out, PairType::In, PairType::None};

    PairType operator()(PairType t) const noexcept {
      return images[static_cast<std::size_t>(t)];
    }
    friend bool operator==(TypeMap const&, TypeMap const&) = default;
    friend auto operator<=>(TypeMap const&, TypeMap const&) = default;
  };

  // "E->E, E*->E*, N->N" style rendering.
  std::string to_string(TypeMap const& b);

  // Conjugate by reversal: rev . b . rev.
  TypeMap mirrored(TypeMap const& b) noexcept;

  // All 27 maps in lexicographic order of (image of E, of E*, of N).
  std::vector<TypeMap> enumerate_behaviors();

  enum class VerdictKind : std::uint8_t {
    BehavesLikeId,
    BehavesLikeMinus,
    ContainsAutGamma,
    EqualsSymD,
  };

  std::string_view to_string(VerdictKind v) noexcept;

  struct Verdict {
    VerdictKind kind = VerdictKind::EqualsSymD;
    std::string case_label;
    friend bool operator==(Verdict const&, Verdict const&) = default;
  };

  Verdict classify_behavior(TypeMap const& b);

  enum class OrbitAction : std::uint8_t { Id, Minus };

  std::string_view to_string(OrbitAction a) noexcept;

  struct TwoOrbitBehavior {
    OrbitAction onX = OrbitAction::Id;
    OrbitAction onY = OrbitAction::Id;
    TypeMap     between;  // pairs (x, y), x in X, y in Y
    friend bool operator==(TwoOrbitBehavior const&, TwoOrbitBehavior const&) = default;
  };

  enum class TwoOrbitKind : std::uint8_t {
    IdBetween,
    SwBetween,
    RotBetween,
    RotInvBetween,
    MinusRotCombined,
    ContainsAutGamma,
    EqualsSymD,
  };

  std::string_view to_string(TwoOrbitKind v) noexcept;

  struct TwoOrbitVerdict {
    TwoOrbitKind kind = TwoOrbitKind::EqualsSymD;
    std::string  case_label;
    friend bool operator==(TwoOrbitVerdict const&, TwoOrbitVerdict const&) = default;
  };

  // X lies entirely below Y in the order.
  TwoOrbitVerdict classify_two_orbit(TwoOrbitBehavior const& b);

  // All 108 two-orbit behaviours: onX, onY, then the between map.
  std::vector<TwoOrbitBehavior> enumerate_two_orbit_behaviors();

  struct InterdenseVerdict {
    TwoOrbitVerdict increasing;
    TwoOrbitVerdict decreasing;
  };

  // Interdense orbits: the increasing and decreasing pairs from X to Y are
  // classified separately.
  InterdenseVerdict classify_interdense(OrbitAction onX,
                                        OrbitAction onY,
                                        TypeMap const& increasing,
                                        TypeMap const& decreasing);

  // Constant c against the union of a c-generic triple; the action on {c}
  // is trivial, so it agrees with the action on the union.
  TwoOrbitVerdict classify_c_generic(OrbitAction on_union, TypeMap const& from_c);

  // Replaces the type of every pair x < y (index order) by its image.
  Digraph rewrite_by_behavior(Digraph const& g, TypeMap const& b);

  // Same, with `order` listing the vertices from least to greatest.
  Digraph rewrite_in_order(Digraph const& g, TypeMap const& b, std::span<Vertex const> order);

  struct OrbitLabel {
    std::optional<std::size_t> constant;  // set for the constants themselves
    // Per constant: whether the vertex lies below it, and its pair type
    // towards it.
    std::vector<std::pair<bool, PairType>> profile;

    friend bool operator==(OrbitLabel const&, OrbitLabel const&) = default;
    friend auto operator<=>(OrbitLabel const&, OrbitLabel const&) = default;
  };

  std::string to_string(OrbitLabel const& l);

  // constants must be distinct and increasing.
  std::vector<OrbitLabel> orbit_labels(Digraph const& g, std::span<Vertex const> constants);

  struct CGenericTriple {
    std::array<OrbitLabel, 3> labels;   // c -> X1, X2 -> c, no edge to X3
    std::array<VertexSet, 3>  members;  // the sample vertices in each class
  };

  // For each of the three relations to c, the orbit class with that
  // relation whose least member is smallest.
  std::optional<CGenericTriple> find_c_generic_triple(Digraph const&          g,
                                                      Vertex                  c,
                                                      std::span<Vertex const> constants);

  // A sequence of rewrites, each applied in a vertex order. Forward steps
  // rewrite; backward steps replace the digraph by a preimage with as few
  // edges as possible.
  struct RewriteStep {
    std::vector<Vertex> order;
    bool                backward = false;
  };

  struct WitnessSearch {
    bool                     found = false;
    std::vector<RewriteStep> steps;
    Digraph                  start;
    Digraph                  result;
  };

  // Preimage of h under rewrite_in_order(., b, order) with the fewest
  // edges, or absent if some pair type of h is not an image of b.
  std::optional<Digraph> min_edge_preimage(Digraph const& h, TypeMap const& b, std::span<Vertex const> order);

  // Breadth-first search of at most `rounds` steps for a digraph with fewer
  // edges than `start`. Orders tried: index order, its reverse, and each
  // order that puts a chosen ordered pair first.
  WitnessSearch search_edge_deletion(Digraph const& start, TypeMap const& b, int rounds = 4);

  // Breadth-first search of at most `rounds` forward steps, in index order
  // or its reverse, for the digraph with the same underlying graph as
  // `start` and every edge pointing from the lower index.
  WitnessSearch search_edge_alignment(Digraph const& start, TypeMap const& b, int rounds = 4);

}  // namespace reducts

#endif  // REDUCTS_CANONICAL_BEHAVIORS_HPP_
