// Symbolic pair-type rewrites: reversal, switching, rotation, the graph-level
// variants and compositions, together with the detectors that recover a
// switching set or rotation partition from a vertex map.

#ifndef REDUCTS_TRANSFORMS_HPP_
#define REDUCTS_TRANSFORMS_HPP_

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "reducts/digraph.hpp"

namespace reducts {

  struct Transform;

  namespace op {
    // Out <-> In on every pair.
    struct Reverse {
      friend bool operator==(Reverse const&, Reverse const&) = default;
    };
    // Out <-> In on pairs crossing the cut (A, complement of A).
    struct Switch {
      VertexSet A;
      friend bool operator==(Switch const&, Switch const&) = default;
    };
    // Ordered partition. Between consecutive pieces (A,B), (B,C), (C,A) the
    // pair type oriented from the earlier piece steps Out -> In -> None -> Out.
    struct Rot {
      VertexSet A;
      VertexSet B;
      VertexSet C;
      friend bool operator==(Rot const&, Rot const&) = default;
    };
    // Edge <-> non-edge everywhere; new edges point from the lower index.
    struct GraphReverse {
      friend bool operator==(GraphReverse const&, GraphReverse const&) = default;
    };
    // Edge <-> non-edge across the cut; new edges point from the lower index.
    struct GraphSwitch {
      VertexSet A;
      friend bool operator==(GraphSwitch const&, GraphSwitch const&) = default;
    };
    // items.back() is applied first.
    struct Compose {
      std::vector<Transform> items;
      friend bool operator==(Compose const&, Compose const&);
    };
  }  // namespace op

  struct Transform {
    using Variant =
        std::variant<op::Reverse, op::Switch, op::Rot, op::GraphReverse, op::GraphSwitch, op::Compose>;
    Variant op;

    friend bool operator==(Transform const&, Transform const&) = default;
  };

  Transform reverse();
  Transform switch_set(VertexSet A);
  Transform rot(VertexSet A, VertexSet B, VertexSet C);
  // Rotation about a single vertex: Out(a,x) -> In(a,x) -> None -> Out(a,x)
  // for every x != a, all other pairs fixed.
  Transform rot_about(Vertex a, std::size_t n);
  Transform graph_reverse();
  Transform graph_switch(VertexSet A);
  Transform compose(std::vector<Transform> items);
  Transform identity();

  Digraph apply(Transform const& t, Digraph const& g);

  // True iff for every tuple of at most m distinct vertices of g, the image
  // under f induces the same digraph in h as the tuple induces in
  // apply(templ, g). m must lie in [1, 4]; m = 2 is complete for every
  // pair-local template.
  bool behaves_like(Digraph const&          g,
                    Digraph const&          h,
                    std::span<Vertex const> f,
                    Transform const&        templ,
                    int                     m = 2);

  struct SwitchDetection {
    std::optional<VertexSet> set;
    bool                     covered = true;
    VertexSet                uncovered;  // vertices outside every layer
  };

  // Recovers A with f behaving like Switch(A), anchored at vertex 0.
  SwitchDetection detect_switch_set(Digraph const& g, Digraph const& h, std::span<Vertex const> f);

  struct RotPartition {
    VertexSet A;
    VertexSet B;
    VertexSet C;
  };

  // Recovers (A, B, rest) with f behaving like Rot(A, B, rest), anchored at
  // vertex 0.
  std::optional<RotPartition> detect_rot_partition(Digraph const&          g,
                                                   Digraph const&          h,
                                                   std::span<Vertex const> f);

  // Deletes every edge at a using switches and rotations about a, leaving
  // all other pairs as they were.
  std::pair<Digraph, Transform> reduce_edges_via_sw_rot(Digraph const& g, Vertex a);

  std::vector<Vertex> identity_map(std::size_t n);

  VertexSet complement(VertexSet const& A, std::size_t n);

}  // namespace reducts

#endif  // REDUCTS_TRANSFORMS_HPP_
