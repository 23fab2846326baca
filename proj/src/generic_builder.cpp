#include "reducts/generic_builder.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace reducts {

  namespace {

    void check_level(int k) {
      if (k < 1) {
        throw std::domain_error("extension level must be at least 1, got " + std::to_string(k));
      }
    }

    std::vector<bool> demanded_mask(EPTriple const& t, std::size_t n) {
      std::vector<bool> used(n, false);
      for (auto const* set : {&t.U, &t.V, &t.W}) {
        for (auto v : *set) {
          if (v >= n) {
            throw std::domain_error("triple names vertex " + std::to_string(v) + " outside the digraph");
          }
          if (used[v]) {
            throw std::domain_error("triple sets overlap at vertex " + std::to_string(v));
          }
          used[v] = true;
        }
      }
      return used;
    }

    std::mt19937_64 triple_rng(std::uint64_t seed, std::uint64_t index) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
      return std::mt19937_64(seq);
    }

    PairType random_pair_type(std::mt19937_64& rng) {
      return static_cast<PairType>(rng() % 3);
    }

    std::vector<Vertex> all_vertices(std::size_t n) {
      std::vector<Vertex> v(n);
      std::iota(v.begin(), v.end(), Vertex{0});
      return v;
    }

    bool graph_witness(Graph const& G, EPTriple const& t, Vertex x) {
      for (auto u : t.U) {
        if (!G.adjacent(x, u)) {
          return false;
        }
      }
      for (auto w : t.W) {
        if (G.adjacent(x, w)) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  std::vector<EPTriple> enumerate_triples(std::span<Vertex const> base, int k) {
    check_level(k);
    std::vector<Vertex> sorted(base.begin(), base.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t const n = sorted.size();

    std::vector<EPTriple> out;
    for (std::size_t s = 1; s <= static_cast<std::size_t>(k) && s <= n; ++s) {
      std::vector<EPTriple> level;
      std::vector<std::size_t> pick(s);
      std::iota(pick.begin(), pick.end(), std::size_t{0});
      while (true) {
        std::size_t labelings = 1;
        for (std::size_t i = 0; i < s; ++i) {
          labelings *= 3;
        }
        for (std::size_t code = 0; code < labelings; ++code) {
          EPTriple    t;
          std::size_t c = code;
          for (std::size_t i = 0; i < s; ++i, c /= 3) {
            Vertex const v = sorted[pick[i]];
            (c % 3 == 0 ? t.U : c % 3 == 1 ? t.V : t.W).push_back(v);
          }
          level.push_back(std::move(t));
        }
        std::size_t i = s;
        while (i > 0 && pick[i - 1] == n - s + i - 1) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < s; ++j) {
          pick[j] = pick[j - 1] + 1;
        }
      }
      std::sort(level.begin(), level.end());
      out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return out;
  }

  bool is_witness(Digraph const& g, EPTriple const& t, Vertex x) {
    for (auto u : t.U) {
      if (u == x || g.pair_type(x, u) != PairType::Out) {
        return false;
      }
    }
    for (auto v : t.V) {
      if (v == x || g.pair_type(x, v) != PairType::In) {
        return false;
      }
    }
    for (auto w : t.W) {
      if (w == x || g.pair_type(x, w) != PairType::None) {
        return false;
      }
    }
    return true;
  }

  std::optional<Vertex> find_witness(Digraph const& g, EPTriple const& t) {
    auto const used = demanded_mask(t, g.size());
    for (Vertex x = 0; x < g.size(); ++x) {
      if (!used[x] && is_witness(g, t, x)) {
        return x;
      }
    }
    return std::nullopt;
  }

  EPReport check_k_ep(Digraph const& g, int k) {
    auto const base = all_vertices(g.size());
    return check_k_ep(g, k, base);
  }

  EPReport check_k_ep(Digraph const& g, int k, std::span<Vertex const> base) {
    EPReport report;
    report.k = k;
    for (auto& t : enumerate_triples(base, k)) {
      if (!find_witness(g, t)) {
        report.failures.push_back(std::move(t));
      }
    }
    report.pass = report.failures.empty();
    return report;
  }

  EPReport check_graph_k_ep(Graph const& G, int k) {
    auto const base = all_vertices(G.size());
    return check_graph_k_ep(G, k, base);
  }

  EPReport check_graph_k_ep(Graph const& G, int k, std::span<Vertex const> base) {
    EPReport report;
    report.k = k;
    for (auto& t : enumerate_triples(base, k)) {
      if (!t.V.empty()) {
        continue;
      }
      auto const used  = demanded_mask(t, G.size());
      bool       found = false;
      for (Vertex x = 0; x < G.size() && !found; ++x) {
        found = !used[x] && graph_witness(G, t, x);
      }
      if (!found) {
        report.failures.push_back(std::move(t));
      }
    }
    report.pass = report.failures.empty();
    return report;
  }

  Digraph random_digraph(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Digraph         g(n);
    for (Vertex y = 1; y < n; ++y) {
      for (Vertex x = 0; x < y; ++x) {
        g.set(x, y, random_pair_type(rng));
      }
    }
    return g;
  }

  Digraph extend_to_ep(Digraph const& g, int k, std::uint64_t seed) {
    auto const base    = all_vertices(g.size());
    auto const triples = enumerate_triples(base, k);
    Digraph    h       = g;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      auto const& t = triples[i];
      if (find_witness(h, t)) {
        continue;
      }
      auto const   used = demanded_mask(t, h.size());
      Vertex const x    = h.add_vertex();
      auto         rng  = triple_rng(seed, i);
      for (auto u : t.U) {
        h.set(x, u, PairType::Out);
      }
      for (auto v : t.V) {
        h.set(x, v, PairType::In);
      }
      for (Vertex v = 0; v < x; ++v) {
        if (!used[v]) {
          h.set(x, v, random_pair_type(rng));
        }
      }
    }
    return h;
  }

  bool is_partial_isomorphism(Digraph const& g, Digraph const& h, PartialMap const& map) {
    std::vector<bool> dom(g.size(), false), ran(h.size(), false);
    for (auto [x, y] : map) {
      if (x >= g.size() || y >= h.size() || dom[x] || ran[y]) {
        return false;
      }
      dom[x] = ran[y] = true;
    }
    for (std::size_t i = 0; i < map.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (g.pair_type(map[i].first, map[j].first) != h.pair_type(map[i].second, map[j].second)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {

    // Demands on a new point of `to` matching x's relations to the mapped
    // points of `from`.
    EPTriple demands(Digraph const& from, Vertex x, PartialMap const& map, bool forth) {
      EPTriple t;
      for (auto const& p : map) {
        Vertex const src = forth ? p.first : p.second;
        Vertex const dst = forth ? p.second : p.first;
        switch (from.pair_type(x, src)) {
          case PairType::Out:
            t.U.push_back(dst);
            break;
          case PairType::In:
            t.V.push_back(dst);
            break;
          default:
            t.W.push_back(dst);
            break;
        }
      }
      for (auto* s : {&t.U, &t.V, &t.W}) {
        std::sort(s->begin(), s->end());
      }
      return t;
    }

    std::optional<Vertex> least_unmapped(std::size_t n, PartialMap const& map, bool domain_side) {
      std::vector<bool> used(n, false);
      for (auto const& p : map) {
        used[domain_side ? p.first : p.second] = true;
      }
      for (Vertex v = 0; v < n; ++v) {
        if (!used[v]) {
          return v;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  BackAndForthResult back_and_forth(Digraph const& g, Digraph const& h, PartialMap pairs, int steps) {
    if (!is_partial_isomorphism(g, h, pairs)) {
      throw std::domain_error("back_and_forth: initial pairs are not a partial isomorphism");
    }
    BackAndForthResult result;
    result.map = std::move(pairs);
    for (int s = 0; s < steps; ++s) {
      bool forth = (s % 2 == 0);
      auto next  = least_unmapped(forth ? g.size() : h.size(), result.map, forth);
      if (!next) {
        forth = !forth;
        next  = least_unmapped(forth ? g.size() : h.size(), result.map, forth);
      }
      if (!next) {
        break;
      }
      Digraph const& from = forth ? g : h;
      Digraph const& to   = forth ? h : g;
      EPTriple       t    = demands(from, *next, result.map, forth);
      auto           w    = find_witness(to, t);
      if (!w) {
        result.blocking     = std::move(t);
        result.blocked_in_h = forth;
        break;
      }
      result.map.emplace_back(forth ? *next : *w, forth ? *w : *next);
    }
    return result;
  }

  TournamentEmbedding embed_maximal_tournament(Digraph const& t, int k) {
    std::size_t const m = t.size();
    for (Vertex y = 1; y < m; ++y) {
      for (Vertex x = 0; x < y; ++x) {
        if (!is_edge(t.pair_type(x, y))) {
          throw std::domain_error("embed_maximal_tournament: input has a non-edge at ("
                                  + std::to_string(x) + ", " + std::to_string(y) + ")");
        }
      }
    }
    TournamentEmbedding out;
    out.g          = t;
    out.tournament = all_vertices(m);
    for (auto const& tr : enumerate_triples(out.tournament, k)) {
      if (find_witness(out.g, tr)) {
        continue;
      }
      Vertex const x = out.g.add_vertex();
      for (auto u : tr.U) {
        out.g.set(x, u, PairType::Out);
      }
      for (auto v : tr.V) {
        out.g.set(x, v, PairType::In);
      }
      if (tr.W.empty() && tr.U.size() + tr.V.size() == m) {
        out.exempted.emplace_back(x, tr);
      }
    }
    return out;
  }

  bool tournament_is_maximal(Digraph const& g, std::span<Vertex const> tournament) {
    std::vector<bool> in_t(g.size(), false);
    for (auto v : tournament) {
      in_t.at(v) = true;
    }
    for (Vertex x = 0; x < g.size(); ++x) {
      if (in_t[x]) {
        continue;
      }
      bool const has_non_edge = std::any_of(tournament.begin(), tournament.end(), [&](Vertex y) {
        return g.pair_type(x, y) == PairType::None;
      });
      if (!has_non_edge) {
        return false;
      }
    }
    return true;
  }

}  // namespace reducts
