// The eleven-element lattice of reducts of the generic digraph, with the
// invariant relations used to place a finite map in it.

#ifndef REDUCTS_LATTICE_HPP_
#define REDUCTS_LATTICE_HPP_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "reducts/digraph.hpp"
#include "reducts/relations.hpp"

namespace reducts {

  enum class ReductNode : std::uint8_t {
    AutDE,
    Sw,
    Minus,
    Rot,
    SwMinus,
    MinusRot,
    AutGamma,
    SwGamma,
    MinusGamma,
    SwMinusGamma,
    SymD,
  };

  inline constexpr std::size_t node_count = 11;

  inline constexpr std::array<ReductNode, node_count> all_nodes{
      ReductNode::AutDE,    ReductNode::Sw,      ReductNode::Minus,        ReductNode::Rot,
      ReductNode::SwMinus,  ReductNode::MinusRot, ReductNode::AutGamma,    ReductNode::SwGamma,
      ReductNode::MinusGamma, ReductNode::SwMinusGamma, ReductNode::SymD};

  std::string_view to_string(ReductNode a) noexcept;
  // Throws std::invalid_argument for an unknown name.
  ReductNode node_from_string(std::string_view name);

  // Covering pairs (lower, upper) of the order.
  std::vector<std::pair<ReductNode, ReductNode>> const& hasse_covers();

  bool       leq(ReductNode a, ReductNode b) noexcept;
  ReductNode meet(ReductNode a, ReductNode b) noexcept;
  ReductNode join(ReductNode a, ReductNode b) noexcept;

  using NodeTable = std::array<std::array<ReductNode, node_count>, node_count>;

  struct LatticeTables {
    NodeTable meet;
    NodeTable join;
  };

  // Recomputes meet and join from the covering pairs. Throws
  // std::logic_error if some pair lacks a unique bound.
  LatticeTables derive_lattice_tables();

  RelationSet signature(ReductNode a) noexcept;

  struct Classification {
    ReductNode  node = ReductNode::SymD;
    Preservation preservation;
    // True iff the preserved set equals the chosen node's signature.
    bool exact_match = false;
    // Minimal nodes whose signature is contained in the preserved set. More
    // than one means the sample does not separate them; node is the first.
    std::vector<ReductNode> minimal_candidates;
  };

  Classification classify_map(Digraph const& g, Digraph const& h, std::span<Vertex const> f);

}  // namespace reducts

#endif  // REDUCTS_LATTICE_HPP_
