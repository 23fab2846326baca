#include "reducts/canonical_behaviors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace reducts {

  namespace {

    constexpr PairType E  = PairType::Out;
    constexpr PairType Es = PairType::In;
    constexpr PairType N  = PairType::None;

    std::string_view type_name(PairType t) {
      switch (t) {
        case PairType::Out:
          return "E";
        case PairType::In:
          return "E*";
        default:
          return "N";
      }
    }

    // Case letter within Case 2 (N -> E), shared by both tables.
    char case_two_letter(PairType e, PairType s) {
      if (is_edge(e) && is_edge(s)) {
        return 'a';
      }
      if (e == N && s == N) {
        return 'b';
      }
      if (e == N && s == E) {
        return 'c';
      }
      if (e == N && s == Es) {
        return 'd';
      }
      if (e == E) {
        return 'e';
      }
      return 'f';
    }

    std::string mirror_label(std::string const& label) {
      return "3" + label.substr(1);
    }

  }  // namespace

  std::string to_string(TypeMap const& b) {
    std::string out;
    for (auto t : all_pair_types) {
      if (!out.empty()) {
        out += ", ";
      }
      out += std::string(type_name(t)) + "->" + std::string(type_name(b(t)));
    }
    return out;
  }

  TypeMap mirrored(TypeMap const& b) noexcept {
    TypeMap m;
    for (auto t : all_pair_types) {
      m.images[static_cast<std::size_t>(t)] = reversed(b(reversed(t)));
    }
    return m;
  }

  std::vector<TypeMap> enumerate_behaviors() {
    std::vector<TypeMap> out;
    for (auto e : all_pair_types) {
      for (auto s : all_pair_types) {
        for (auto n : all_pair_types) {
          out.push_back(TypeMap{{e, s, n}});
        }
      }
    }
    return out;
  }

  std::string_view to_string(VerdictKind v) noexcept {
    switch (v) {
      case VerdictKind::BehavesLikeId:
        return "BehavesLikeId";
      case VerdictKind::BehavesLikeMinus:
        return "BehavesLikeMinus";
      case VerdictKind::ContainsAutGamma:
        return "ContainsAutGamma";
      default:
        return "EqualsSymD";
    }
  }

  Verdict classify_behavior(TypeMap const& b) {
    PairType const e = b(E), s = b(Es), n = b(N);
    if (n == N) {
      if (e == N || s == N) {
        return {VerdictKind::EqualsSymD, "1d"};
      }
      if (e == E && s == Es) {
        return {VerdictKind::BehavesLikeId, "1a"};
      }
      if (e == Es && s == E) {
        return {VerdictKind::BehavesLikeMinus, "1b"};
      }
      return {VerdictKind::ContainsAutGamma, "1c"};
    }
    if (n == E) {
      char const letter = case_two_letter(e, s);
      return {letter == 'b' ? VerdictKind::ContainsAutGamma : VerdictKind::EqualsSymD,
              std::string("2") + letter};
    }
    Verdict v = classify_behavior(mirrored(b));
    v.case_label = mirror_label(v.case_label);
    return v;
  }

  std::string_view to_string(OrbitAction a) noexcept {
    return a == OrbitAction::Id ? "Id" : "Minus";
  }

  std::string_view to_string(TwoOrbitKind v) noexcept {
    switch (v) {
      case TwoOrbitKind::IdBetween:
        return "IdBetween";
      case TwoOrbitKind::SwBetween:
        return "SwBetween";
      case TwoOrbitKind::RotBetween:
        return "RotBetween";
      case TwoOrbitKind::RotInvBetween:
        return "RotInvBetween";
      case TwoOrbitKind::MinusRotCombined:
        return "MinusRotCombined";
      case TwoOrbitKind::ContainsAutGamma:
        return "ContainsAutGamma";
      default:
        return "EqualsSymD";
    }
  }

  TwoOrbitVerdict classify_two_orbit(TwoOrbitBehavior const& b) {
    PairType const e = b.between(E), s = b.between(Es), n = b.between(N);
    if (n == N) {
      if (e == N || s == N) {
        return {TwoOrbitKind::EqualsSymD, "1d"};
      }
      if (e == E && s == Es) {
        return {TwoOrbitKind::IdBetween, "1a"};
      }
      if (e == Es && s == E) {
        return {TwoOrbitKind::SwBetween, "1b"};
      }
      return {TwoOrbitKind::ContainsAutGamma, "1c"};
    }
    if (n == E) {
      switch (case_two_letter(e, s)) {
        case 'd':
          if (b.onY == OrbitAction::Id) {
            return {TwoOrbitKind::EqualsSymD, "2d(i)"};
          }
          if (b.onX == OrbitAction::Id) {
            return {TwoOrbitKind::EqualsSymD, "2d(ii)"};
          }
          return {TwoOrbitKind::MinusRotCombined, "2d(ii)"};
        case 'f':
          return {b.onY == OrbitAction::Id ? TwoOrbitKind::RotBetween : TwoOrbitKind::EqualsSymD,
                  "2f"};
        default:
          break;
      }
      return {TwoOrbitKind::EqualsSymD, std::string("2") + case_two_letter(e, s)};
    }
    TwoOrbitBehavior m = b;
    m.between          = mirrored(b.between);
    TwoOrbitVerdict v  = classify_two_orbit(m);
    v.case_label       = mirror_label(v.case_label);
    if (v.kind == TwoOrbitKind::RotBetween) {
      v.kind = TwoOrbitKind::RotInvBetween;
    } else if (v.kind == TwoOrbitKind::RotInvBetween) {
      v.kind = TwoOrbitKind::RotBetween;
    }
    return v;
  }

  std::vector<TwoOrbitBehavior> enumerate_two_orbit_behaviors() {
    std::vector<TwoOrbitBehavior> out;
    for (auto x : {OrbitAction::Id, OrbitAction::Minus}) {
      for (auto y : {OrbitAction::Id, OrbitAction::Minus}) {
        for (auto const& b : enumerate_behaviors()) {
          out.push_back({x, y, b});
        }
      }
    }
    return out;
  }

  InterdenseVerdict classify_interdense(OrbitAction    onX,
                                        OrbitAction    onY,
                                        TypeMap const& increasing,
                                        TypeMap const& decreasing) {
    return {classify_two_orbit({onX, onY, increasing}), classify_two_orbit({onX, onY, decreasing})};
  }

  TwoOrbitVerdict classify_c_generic(OrbitAction on_union, TypeMap const& from_c) {
    return classify_two_orbit({on_union, on_union, from_c});
  }

  Digraph rewrite_in_order(Digraph const& g, TypeMap const& b, std::span<Vertex const> order) {
    std::size_t const        n = g.size();
    std::vector<std::size_t> pos(n, n);
    if (order.size() != n) {
      throw std::domain_error("rewrite_in_order: order must list every vertex once");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (order[i] >= n || pos[order[i]] != n) {
        throw std::domain_error("rewrite_in_order: order must list every vertex once");
      }
      pos[order[i]] = i;
    }
    Digraph h(n);
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        Vertex const p = order[i], q = order[j];
        h.set(p, q, b(g.pair_type(p, q)));
      }
    }
    return h;
  }

  Digraph rewrite_by_behavior(Digraph const& g, TypeMap const& b) {
    Digraph h(g.size());
    for (Vertex y = 1; y < g.size(); ++y) {
      for (Vertex x = 0; x < y; ++x) {
        h.set(x, y, b(g.raw(pair_index(x, y))));
      }
    }
    return h;
  }

  std::string to_string(OrbitLabel const& l) {
    if (l.constant) {
      return "c" + std::to_string(*l.constant);
    }
    std::string out = "(";
    for (std::size_t i = 0; i < l.profile.size(); ++i) {
      if (i > 0) {
        out += ",";
      }
      out += l.profile[i].first ? "<" : ">";
      out += type_name(l.profile[i].second);
    }
    return out + ")";
  }

  std::vector<OrbitLabel> orbit_labels(Digraph const& g, std::span<Vertex const> constants) {
    for (std::size_t i = 0; i < constants.size(); ++i) {
      if (constants[i] >= g.size()) {
        throw std::domain_error("orbit_labels: constant out of range");
      }
      if (i > 0 && constants[i - 1] >= constants[i]) {
        throw std::domain_error("orbit_labels: constants must be distinct and increasing");
      }
    }
    std::vector<OrbitLabel> labels(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
      auto it = std::find(constants.begin(), constants.end(), v);
      if (it != constants.end()) {
        labels[v].constant = static_cast<std::size_t>(it - constants.begin());
        continue;
      }
      for (auto c : constants) {
        labels[v].profile.emplace_back(v < c, g.pair_type(v, c));
      }
    }
    return labels;
  }

  std::optional<CGenericTriple> find_c_generic_triple(Digraph const&          g,
                                                      Vertex                  c,
                                                      std::span<Vertex const> constants) {
    auto const it = std::find(constants.begin(), constants.end(), c);
    if (it == constants.end()) {
      throw std::domain_error("find_c_generic_triple: c is not one of the constants");
    }
    std::size_t const ci     = static_cast<std::size_t>(it - constants.begin());
    auto const        labels = orbit_labels(g, constants);

    // Pair type from the class member towards c for X1, X2, X3.
    constexpr std::array<PairType, 3> wanted{PairType::In, PairType::Out, PairType::None};
    CGenericTriple                    out;
    for (std::size_t k = 0; k < 3; ++k) {
      std::optional<Vertex> least;
      for (Vertex v = 0; v < g.size() && !least; ++v) {
        if (!labels[v].constant && labels[v].profile[ci].second == wanted[k]) {
          least = v;
        }
      }
      if (!least) {
        return std::nullopt;
      }
      out.labels[k] = labels[*least];
      for (Vertex v = 0; v < g.size(); ++v) {
        if (labels[v] == out.labels[k]) {
          out.members[k].push_back(v);
        }
      }
    }
    return out;
  }

  std::optional<Digraph> min_edge_preimage(Digraph const& h, TypeMap const& b, std::span<Vertex const> order) {
    constexpr std::array<PairType, 3> preference{PairType::None, PairType::Out, PairType::In};
    std::size_t const                 n = h.size();
    if (order.size() != n) {
      throw std::domain_error("min_edge_preimage: order must list every vertex once");
    }
    Digraph g(n);
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        Vertex const   p      = order[i], q = order[j];
        PairType const target = h.pair_type(p, q);
        auto           pre    = std::find_if(preference.begin(), preference.end(),
                                             [&](PairType t) { return b(t) == target; });
        if (pre == preference.end()) {
          return std::nullopt;
        }
        g.set(p, q, *pre);
      }
    }
    return g;
  }

  namespace {

    std::vector<std::vector<Vertex>> candidate_orders(std::size_t n, bool with_pairs) {
      std::vector<Vertex> id(n);
      std::iota(id.begin(), id.end(), Vertex{0});
      std::vector<std::vector<Vertex>> orders{id, {id.rbegin(), id.rend()}};
      if (with_pairs) {
        for (Vertex u = 0; u < n; ++u) {
          for (Vertex v = 0; v < n; ++v) {
            if (u == v) {
              continue;
            }
            std::vector<Vertex> o{u, v};
            for (auto w : id) {
              if (w != u && w != v) {
                o.push_back(w);
              }
            }
            orders.push_back(std::move(o));
          }
        }
      }
      return orders;
    }

    std::vector<std::uint8_t> key_of(Digraph const& g) {
      std::vector<std::uint8_t> k(g.pair_count());
      for (std::size_t i = 0; i < k.size(); ++i) {
        k[i] = static_cast<std::uint8_t>(g.raw(i));
      }
      return k;
    }

    struct Node {
      Digraph     g;
      std::size_t parent = 0;
      RewriteStep step;
      int         depth = 0;
    };

    template <class Goal>
    WitnessSearch bfs(Digraph const& start, TypeMap const& b, int rounds, bool allow_backward,
                      bool with_pairs, Goal&& goal) {
      WitnessSearch out;
      out.start  = start;
      out.result = start;
      auto const orders = candidate_orders(start.size(), with_pairs);

      std::vector<Node>                                    nodes{{start, 0, {}, 0}};
      std::map<std::vector<std::uint8_t>, std::size_t>     seen{{key_of(start), 0}};
      std::deque<std::size_t>                              queue{0};
      auto finish = [&](std::size_t idx) {
        out.found  = true;
        out.result = nodes[idx].g;
        for (std::size_t i = idx; i != 0; i = nodes[i].parent) {
          out.steps.push_back(nodes[i].step);
        }
        std::reverse(out.steps.begin(), out.steps.end());
        return out;
      };
      if (goal(start)) {
        return finish(0);
      }
      while (!queue.empty()) {
        std::size_t const cur = queue.front();
        queue.pop_front();
        if (nodes[cur].depth >= rounds) {
          continue;
        }
        for (auto const& order : orders) {
          for (bool backward : {false, true}) {
            if (backward && !allow_backward) {
              continue;
            }
            std::optional<Digraph> next;
            if (backward) {
              next = min_edge_preimage(nodes[cur].g, b, order);
            } else {
              next = rewrite_in_order(nodes[cur].g, b, order);
            }
            if (!next) {
              continue;
            }
            auto key = key_of(*next);
            if (seen.contains(key)) {
              continue;
            }
            std::size_t const idx = nodes.size();
            nodes.push_back({std::move(*next), cur, {order, backward}, nodes[cur].depth + 1});
            seen.emplace(std::move(key), idx);
            if (goal(nodes[idx].g)) {
              return finish(idx);
            }
            queue.push_back(idx);
          }
        }
      }
      return out;
    }

  }  // namespace

  WitnessSearch search_edge_deletion(Digraph const& start, TypeMap const& b, int rounds) {
    std::size_t const edges = start.edge_count();
    return bfs(start, b, rounds, true, true,
               [&](Digraph const& g) { return g.edge_count() < edges; });
  }

  WitnessSearch search_edge_alignment(Digraph const& start, TypeMap const& b, int rounds) {
    Digraph target(start.size());
    for (Vertex y = 1; y < start.size(); ++y) {
      for (Vertex x = 0; x < y; ++x) {
        if (is_edge(start.raw(pair_index(x, y)))) {
          target.set(x, y, PairType::Out);
        }
      }
    }
    return bfs(start, b, rounds, false, false, [&](Digraph const& g) { return g == target; });
  }

}  // namespace reducts
