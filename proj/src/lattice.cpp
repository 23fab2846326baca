#include "reducts/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace reducts {

  namespace {

    constexpr std::array<std::string_view, node_count> node_names{
        "AutDE",   "Sw",         "Minus",      "Rot",          "SwMinus", "MinusRot",
        "AutGamma", "SwGamma",   "MinusGamma", "SwMinusGamma", "SymD"};

    constexpr std::size_t idx(ReductNode a) {
      return static_cast<std::size_t>(a);
    }

    using R = RelationId;

    constexpr std::array<RelationSet, node_count> signatures{
        RelationSet::all(),
        RelationSet{R::N, R::EGamma, R::Psw, R::PswW, R::GammaTriParity, R::EGammaW,
                    R::GammaTriParityW},
        RelationSet{R::N, R::EGamma, R::Ew, R::PswW, R::Prot3, R::ProtW, R::GammaTriParity,
                    R::EGammaW, R::GammaTriParityW},
        RelationSet{R::Prot1, R::Prot2, R::Prot3, R::ProtW},
        RelationSet{R::N, R::EGamma, R::PswW, R::GammaTriParity, R::EGammaW, R::GammaTriParityW},
        RelationSet{R::Prot3, R::ProtW},
        RelationSet{R::N, R::EGamma, R::GammaTriParity, R::EGammaW, R::GammaTriParityW},
        RelationSet{R::GammaTriParity, R::GammaTriParityW},
        RelationSet{R::EGammaW, R::GammaTriParityW},
        RelationSet{R::GammaTriParityW},
        RelationSet{},
    };

    // Generated by derive_lattice_tables(); the unit tests compare the two.
    constexpr std::uint8_t meet_table[node_count][node_count] = {
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 1, 0, 1, 1, 1, 1, 1},
        {0, 0, 2, 0, 2, 2, 2, 2, 2, 2, 2},
        {0, 0, 0, 3, 0, 3, 0, 0, 0, 0, 3},
        {0, 1, 2, 0, 4, 2, 4, 4, 4, 4, 4},
        {0, 0, 2, 3, 2, 5, 2, 2, 2, 2, 5},
        {0, 1, 2, 0, 4, 2, 6, 6, 6, 6, 6},
        {0, 1, 2, 0, 4, 2, 6, 7, 6, 7, 7},
        {0, 1, 2, 0, 4, 2, 6, 6, 8, 8, 8},
        {0, 1, 2, 0, 4, 2, 6, 7, 8, 9, 9},
        {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
    };

    constexpr std::uint8_t join_table[node_count][node_count] = {
        {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
        {1, 1, 4, 10, 4, 10, 6, 7, 8, 9, 10},
        {2, 4, 2, 5, 4, 5, 6, 7, 8, 9, 10},
        {3, 10, 5, 3, 10, 5, 10, 10, 10, 10, 10},
        {4, 4, 4, 10, 4, 10, 6, 7, 8, 9, 10},
        {5, 10, 5, 5, 10, 5, 10, 10, 10, 10, 10},
        {6, 6, 6, 10, 6, 10, 6, 7, 8, 9, 10},
        {7, 7, 7, 10, 7, 10, 7, 7, 9, 9, 10},
        {8, 8, 8, 10, 8, 10, 8, 9, 8, 9, 10},
        {9, 9, 9, 10, 9, 10, 9, 9, 9, 9, 10},
        {10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10},
    };

    using OrderMatrix = std::array<std::array<bool, node_count>, node_count>;

    OrderMatrix order_from_covers() {
      OrderMatrix le{};
      for (std::size_t a = 0; a < node_count; ++a) {
        le[a][a] = true;
      }
      for (auto [lo, hi] : hasse_covers()) {
        le[idx(lo)][idx(hi)] = true;
      }
      for (std::size_t k = 0; k < node_count; ++k) {
        for (std::size_t a = 0; a < node_count; ++a) {
          for (std::size_t b = 0; b < node_count; ++b) {
            if (le[a][k] && le[k][b]) {
              le[a][b] = true;
            }
          }
        }
      }
      return le;
    }

    OrderMatrix const& order() {
      static OrderMatrix const le = order_from_covers();
      return le;
    }

  }  // namespace

  std::string_view to_string(ReductNode a) noexcept {
    return node_names[idx(a)];
  }

  ReductNode node_from_string(std::string_view name) {
    for (std::size_t i = 0; i < node_count; ++i) {
      if (node_names[i] == name) {
        return static_cast<ReductNode>(i);
      }
    }
    throw std::invalid_argument("unknown reduct: " + std::string(name));
  }

  std::vector<std::pair<ReductNode, ReductNode>> const& hasse_covers() {
    using N = ReductNode;
    static std::vector<std::pair<ReductNode, ReductNode>> const covers{
        {N::AutDE, N::Sw},           {N::AutDE, N::Minus},          {N::AutDE, N::Rot},
        {N::Sw, N::SwMinus},         {N::Minus, N::SwMinus},        {N::Minus, N::MinusRot},
        {N::Rot, N::MinusRot},       {N::SwMinus, N::AutGamma},     {N::AutGamma, N::SwGamma},
        {N::AutGamma, N::MinusGamma}, {N::SwGamma, N::SwMinusGamma}, {N::MinusGamma, N::SwMinusGamma},
        {N::SwMinusGamma, N::SymD},  {N::MinusRot, N::SymD},
    };
    return covers;
  }

  bool leq(ReductNode a, ReductNode b) noexcept {
    return order()[idx(a)][idx(b)];
  }

  ReductNode meet(ReductNode a, ReductNode b) noexcept {
    return static_cast<ReductNode>(meet_table[idx(a)][idx(b)]);
  }

  ReductNode join(ReductNode a, ReductNode b) noexcept {
    return static_cast<ReductNode>(join_table[idx(a)][idx(b)]);
  }

  LatticeTables derive_lattice_tables() {
    auto const&   le = order();
    LatticeTables t{};
    for (std::size_t a = 0; a < node_count; ++a) {
      for (std::size_t b = 0; b < node_count; ++b) {
        std::vector<std::size_t> lower, upper;
        for (std::size_t c = 0; c < node_count; ++c) {
          if (le[c][a] && le[c][b]) {
            lower.push_back(c);
          }
          if (le[a][c] && le[b][c]) {
            upper.push_back(c);
          }
        }
        auto pick = [&](std::vector<std::size_t> const& bounds, bool greatest) {
          std::vector<std::size_t> best;
          for (auto c : bounds) {
            bool const extreme = std::all_of(bounds.begin(), bounds.end(), [&](std::size_t d) {
              return greatest ? le[d][c] : le[c][d];
            });
            if (extreme) {
              best.push_back(c);
            }
          }
          if (best.size() != 1) {
            throw std::logic_error("order is not a lattice at (" + std::string(node_names[a])
                                   + ", " + std::string(node_names[b]) + ")");
          }
          return static_cast<ReductNode>(best.front());
        };
        t.meet[a][b] = pick(lower, true);
        t.join[a][b] = pick(upper, false);
      }
    }
    return t;
  }

  RelationSet signature(ReductNode a) noexcept {
    return signatures[idx(a)];
  }

  Classification classify_map(Digraph const& g, Digraph const& h, std::span<Vertex const> f) {
    Classification out;
    out.preservation = preserved_relations_detailed(g, h, f);
    auto const& preserved = out.preservation.preserved;

    std::vector<ReductNode> candidates;
    for (auto a : all_nodes) {
      if (signature(a).subset_of(preserved)) {
        candidates.push_back(a);
      }
    }
    for (auto a : candidates) {
      bool const minimal = std::none_of(candidates.begin(), candidates.end(),
                                        [&](ReductNode b) { return b != a && leq(b, a); });
      if (minimal) {
        out.minimal_candidates.push_back(a);
      }
    }
    out.node        = out.minimal_candidates.front();
    out.exact_match = signature(out.node) == preserved;
    return out;
  }

}  // namespace reducts
