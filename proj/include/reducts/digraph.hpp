// Finite digraphs with a three-valued pair relation.
//
// Vertices are the integers 0..n-1 and the linear order used by the ordered
// structures is index order. Each unordered pair {x, y} with x < y stores
// the relation oriented from x to y in two bits, so whole-digraph rewrites
// are a single pass over the pair array.

#ifndef REDUCTS_DIGRAPH_HPP_
#define REDUCTS_DIGRAPH_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace reducts {

  using Vertex    = std::size_t;
  using VertexSet = std::vector<Vertex>;  // sorted, no duplicates

  // Out: edge x->y, In: edge y->x, None: non-edge. The numeric values are
  // used as residues mod 3 by the rotation arithmetic.
  enum class PairType : std::uint8_t { Out = 0, In = 1, None = 2 };

  inline constexpr std::array<PairType, 3> all_pair_types{
      PairType::Out, PairType::In, PairType::None};

  constexpr PairType reversed(PairType t) noexcept {
    switch (t) {
      case PairType::Out:
        return PairType::In;
      case PairType::In:
        return PairType::Out;
      default:
        return PairType::None;
    }
  }

  constexpr bool is_edge(PairType t) noexcept {
    return t != PairType::None;
  }

  std::string_view to_string(PairType t) noexcept;

  class Digraph {
   public:
    Digraph() = default;
    // Empty digraph on n vertices.
    explicit Digraph(std::size_t n);

    std::size_t size() const noexcept {
      return n_;
    }

    // Relation oriented from x to y. Throws std::domain_error when x == y or
    // either vertex is out of range.
    PairType pair_type(Vertex x, Vertex y) const;

    void set(Vertex x, Vertex y, PairType t);

    // Appends an isolated vertex and returns it.
    Vertex add_vertex();

    std::size_t edge_count() const noexcept;

    // Stored value of the pair with the given index (see pair_index), oriented
    // from the smaller to the larger vertex. No range checks.
    PairType raw(std::size_t idx) const noexcept {
      return static_cast<PairType>((words_[idx >> 5] >> ((idx & 31) * 2)) & 3u);
    }

    std::size_t pair_count() const noexcept {
      return n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2;
    }

    friend bool operator==(Digraph const&, Digraph const&) = default;

   private:
    void raw_set(std::size_t idx, PairType t) noexcept;
    void check_pair(Vertex x, Vertex y) const;

    std::size_t                n_ = 0;
    std::vector<std::uint64_t> words_;
  };

  // Index of the unordered pair {lo, hi}, lo < hi. Appending a vertex appends
  // a contiguous block of indices.
  constexpr std::size_t pair_index(Vertex lo, Vertex hi) noexcept {
    return hi * (hi - 1) / 2 + lo;
  }

  // Undirected graph, used for the underlying graph of a digraph.
  class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t size() const noexcept {
      return n_;
    }
    bool adjacent(Vertex x, Vertex y) const;
    void set(Vertex x, Vertex y, bool edge);
    std::size_t edge_count() const noexcept;

    friend bool operator==(Graph const&, Graph const&) = default;

   private:
    std::size_t       n_ = 0;
    std::vector<bool> adj_;
  };

  // (type(x,y), type(y,z), type(x,z)) of an ordered triple.
  struct TriangleCode {
    PairType t12 = PairType::None;
    PairType t23 = PairType::None;
    PairType t13 = PairType::None;

    friend bool operator==(TriangleCode const&, TriangleCode const&) = default;

    // Position in the lexicographic order of the 27 codes (Out < In < None).
    constexpr std::size_t index() const noexcept {
      return static_cast<std::size_t>(t12) * 9 + static_cast<std::size_t>(t23) * 3
             + static_cast<std::size_t>(t13);
    }
    static constexpr TriangleCode from_index(std::size_t i) noexcept {
      return {static_cast<PairType>(i / 9),
              static_cast<PairType>((i / 3) % 3),
              static_cast<PairType>(i % 3)};
    }
    bool is_tournament() const noexcept {
      return is_edge(t12) && is_edge(t23) && is_edge(t13);
    }
  };

  inline constexpr std::size_t triangle_code_count = 27;

  PairType pair_type(Digraph const& g, Vertex x, Vertex y);

  // Copy of g with the pair {x, y} replaced.
  Digraph set_pair(Digraph const& g, Vertex x, Vertex y, PairType t);

  // Substructure on the listed vertices, renumbered by list position.
  Digraph induced(Digraph const& g, std::span<Vertex const> vertices);

  // h with pair_type(h, perm[x], perm[y]) == pair_type(g, x, y); perm must be
  // a permutation of 0..n-1.
  Digraph relabel(Digraph const& g, std::span<Vertex const> perm);

  // A bijection phi with pair_type(g,x,y) == pair_type(h,phi[x],phi[y]) for
  // all pairs, found by backtracking with degree pruning.
  std::optional<std::vector<Vertex>> is_isomorphic(Digraph const& g, Digraph const& h);

  TriangleCode triangle_code(Digraph const& g, Vertex x, Vertex y, Vertex z);

  Graph underlying_graph(Digraph const& g);

}  // namespace reducts

#endif  // REDUCTS_DIGRAPH_HPP_
