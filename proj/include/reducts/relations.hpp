// Invariant relations of the reducts as executable predicates, and the
// three-way classification of triangle codes under rotation.

#ifndef REDUCTS_RELATIONS_HPP_
#define REDUCTS_RELATIONS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "reducts/digraph.hpp"

namespace reducts {

  enum class RelationId : std::uint8_t {
    E,                // x -> y
    Estar,            // y -> x
    N,                // non-edge
    EGamma,           // edge in either direction
    Ew,               // (x,y) and (a,b) are edges oriented the same way
    Psw,              // tournament with an even number of In entries in its code
    PswW,             // two tournaments agreeing on Psw
    Prot1,            // rotation class 1
    Prot2,            // rotation class 2
    Prot3,            // rotation class 3
    ProtW,            // two triples in the same rotation class, class 1 or 2
    GammaTriParity,   // even number of underlying edges on a triple
    EGammaW,          // EGamma(x,y) <-> EGamma(a,b)
    GammaTriParityW,  // GammaTriParity(x) <-> GammaTriParity(y) on two triples
  };

  inline constexpr std::size_t relation_count = 14;

  inline constexpr std::array<RelationId, relation_count> all_relations{
      RelationId::E,     RelationId::Estar,          RelationId::N,       RelationId::EGamma,
      RelationId::Ew,    RelationId::Psw,            RelationId::PswW,    RelationId::Prot1,
      RelationId::Prot2, RelationId::Prot3,          RelationId::ProtW,   RelationId::GammaTriParity,
      RelationId::EGammaW, RelationId::GammaTriParityW};

  std::size_t      arity(RelationId r) noexcept;
  std::string_view to_string(RelationId r) noexcept;
  // Throws std::invalid_argument for an unknown name.
  RelationId relation_from_string(std::string_view name);

  // Small bit set over RelationId.
  class RelationSet {
   public:
    constexpr RelationSet() = default;
    constexpr RelationSet(std::initializer_list<RelationId> rs) {
      for (auto r : rs) {
        insert(r);
      }
    }
    static constexpr RelationSet all() {
      RelationSet s;
      s.bits_ = (1u << relation_count) - 1;
      return s;
    }

    constexpr void insert(RelationId r) {
      bits_ |= 1u << static_cast<unsigned>(r);
    }
    constexpr void erase(RelationId r) {
      bits_ &= ~(1u << static_cast<unsigned>(r));
    }
    constexpr bool contains(RelationId r) const {
      return (bits_ >> static_cast<unsigned>(r)) & 1u;
    }
    constexpr bool subset_of(RelationSet o) const {
      return (bits_ & ~o.bits_) == 0;
    }
    constexpr bool empty() const {
      return bits_ == 0;
    }
    std::size_t size() const;
    std::vector<RelationId> members() const;

    friend constexpr bool operator==(RelationSet, RelationSet) = default;

   private:
    std::uint32_t bits_ = 0;
  };

  // Rotation class (1, 2 or 3) of each of the 27 triangle codes, indexed by
  // TriangleCode::index().
  using RotOrbitTable = std::array<int, triangle_code_count>;

  // Partition of the 27 codes into classes under pair-level rotations of a
  // three-element set; with_relabeling also closes under all permutations of
  // the triple. Each inner vector lists code indices in increasing order.
  std::vector<std::vector<std::size_t>> rot_orbit_partition(bool with_relabeling);

  // The convention whose partition has three classes of nine, labeled so
  // that (Out,Out,Out) is 1 and (None,None,None) is 3. Throws
  // std::logic_error if no convention has that shape.
  RotOrbitTable const& rot_orbit_table();

  int rot_label(TriangleCode c);

  bool psw(TriangleCode c) noexcept;

  // tuple.size() must equal arity(rel) and entries must be distinct.
  bool eval(RelationId rel, Digraph const& g, std::span<Vertex const> tuple);

  struct Preservation {
    RelationSet preserved;
    // For each relation that is not preserved: a tuple of g on which it
    // changes truth value.
    std::map<RelationId, std::vector<Vertex>> excluded_by;
  };

  // Relations R with eval(R, g, t) == eval(R, h, f(t)) for every tuple t of
  // distinct vertices. f must be a bijection onto h's vertices.
  Preservation preserved_relations_detailed(Digraph const&          g,
                                            Digraph const&          h,
                                            std::span<Vertex const> f);

  RelationSet preserved_relations(Digraph const& g, Digraph const& h, std::span<Vertex const> f);

}  // namespace reducts

#endif  // REDUCTS_RELATIONS_HPP_
