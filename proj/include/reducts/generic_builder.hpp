// Extension-property machinery: witness search, k-level certification,
// incremental extension, back-and-forth, and the maximal-tournament
// embedding.

#ifndef REDUCTS_GENERIC_BUILDER_HPP_
#define REDUCTS_GENERIC_BUILDER_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "reducts/digraph.hpp"

namespace reducts {

  // Demands on a witness x: x -> u for u in U, v -> x for v in V, and a
  // non-edge between x and every w in W.
  struct EPTriple {
    VertexSet U;
    VertexSet V;
    VertexSet W;

    std::size_t size() const noexcept {
      return U.size() + V.size() + W.size();
    }
    friend bool operator==(EPTriple const&, EPTriple const&) = default;
    friend auto operator<=>(EPTriple const&, EPTriple const&) = default;
  };

  struct EPReport {
    int                   k    = 0;
    bool                  pass = true;
    std::vector<EPTriple> failures;
  };

  // All triples over `base` with 1 <= |U|+|V|+|W| <= k, ordered by size and
  // then lexicographically on (U, V, W).
  std::vector<EPTriple> enumerate_triples(std::span<Vertex const> base, int k);

  // Least-index witness outside U, V and W. Throws std::domain_error if the
  // sets overlap or name a vertex outside g.
  std::optional<Vertex> find_witness(Digraph const& g, EPTriple const& t);

  bool is_witness(Digraph const& g, EPTriple const& t, Vertex x);

  EPReport check_k_ep(Digraph const& g, int k);
  // Only triples drawn from `base` are checked; witnesses may be anywhere.
  EPReport check_k_ep(Digraph const& g, int k, std::span<Vertex const> base);

  // Graph analogue with U = neighbours, W = non-neighbours (V unused).
  EPReport check_graph_k_ep(Graph const& G, int k);
  EPReport check_graph_k_ep(Graph const& G, int k, std::span<Vertex const> base);

  // Each unordered pair independently uniform over {Out, In, None}.
  Digraph random_digraph(std::size_t n, std::uint64_t seed);

  // Supergraph of g in which every triple of size <= k over the vertices of
  // g has a witness. Fresh witnesses take their demanded pair types; every
  // other pair at a fresh witness is drawn from a generator seeded by
  // (seed, enumeration index of the triple).
  Digraph extend_to_ep(Digraph const& g, int k, std::uint64_t seed = 0);

  using PartialMap = std::vector<std::pair<Vertex, Vertex>>;

  struct BackAndForthResult {
    PartialMap              map;
    std::optional<EPTriple> blocking;  // triple that had no witness, if any
    bool                    blocked_in_h = false;
  };

  // Extends a partial isomorphism g -> h by `steps` points, alternating
  // between extending the domain (forth) and the range (back). Each new
  // point is the least unmapped vertex on its side and its partner is the
  // least-index witness on the other side. Throws std::domain_error if
  // `pairs` is not a partial isomorphism.
  BackAndForthResult back_and_forth(Digraph const& g,
                                    Digraph const& h,
                                    PartialMap     pairs,
                                    int            steps);

  bool is_partial_isomorphism(Digraph const& g, Digraph const& h, PartialMap const& map);

  struct TournamentEmbedding {
    Digraph   g;
    VertexSet tournament;  // T1, the first |t| vertices of g
    // Witnesses whose demands cover all of T1 and so cannot have a
    // non-edge into it.
    std::vector<std::pair<Vertex, EPTriple>> exempted;
  };

  // Embeds the tournament t as T1 and adds witnesses for every triple of
  // size <= k over T1. Pairs not fixed by a witness demand are non-edges.
  // Throws std::domain_error if t has a non-edge.
  TournamentEmbedding embed_maximal_tournament(Digraph const& t, int k);

  // True iff every vertex outside T1 has a non-edge to some vertex of T1.
  bool tournament_is_maximal(Digraph const& g, std::span<Vertex const> tournament);

}  // namespace reducts

#endif  // REDUCTS_GENERIC_BUILDER_HPP_
