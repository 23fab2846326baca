#include "reducts/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace reducts {

  namespace {

    // Every two-bit slot set to None.
    constexpr std::uint64_t all_none = 0xAAAAAAAAAAAAAAAAull;

    std::size_t words_for(std::size_t pairs) {
      return (pairs + 31) / 32;
    }

  }  // namespace

  std::string_view to_string(PairType t) noexcept {
    switch (t) {
      case PairType::Out:
        return "Out";
      case PairType::In:
        return "In";
      default:
        return "None";
    }
  }

  Digraph::Digraph(std::size_t n) : n_(n), words_(words_for(pair_count()), all_none) {}

  void Digraph::check_pair(Vertex x, Vertex y) const {
    if (x == y) {
      throw std::domain_error("pair with repeated vertex " + std::to_string(x));
    }
    if (x >= n_ || y >= n_) {
      throw std::domain_error("vertex out of range: " + std::to_string(std::max(x, y))
                              + " >= " + std::to_string(n_));
    }
  }

  void Digraph::raw_set(std::size_t idx, PairType t) noexcept {
    auto const shift = (idx & 31) * 2;
    auto&      w     = words_[idx >> 5];
    w = (w & ~(std::uint64_t{3} << shift)) | (std::uint64_t(t) << shift);
  }

  PairType Digraph::pair_type(Vertex x, Vertex y) const {
    check_pair(x, y);
    return x < y ? raw(pair_index(x, y)) : reversed(raw(pair_index(y, x)));
  }

  void Digraph::set(Vertex x, Vertex y, PairType t) {
    check_pair(x, y);
    if (x < y) {
      raw_set(pair_index(x, y), t);
    } else {
      raw_set(pair_index(y, x), reversed(t));
    }
  }

  Vertex Digraph::add_vertex() {
    ++n_;
    words_.resize(words_for(pair_count()), all_none);
    return n_ - 1;
  }

  std::size_t Digraph::edge_count() const noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0, m = pair_count(); i < m; ++i) {
      count += is_edge(raw(i)) ? 1 : 0;
    }
    return count;
  }

  Graph::Graph(std::size_t n) : n_(n), adj_(n * n, false) {}

  bool Graph::adjacent(Vertex x, Vertex y) const {
    if (x == y || x >= n_ || y >= n_) {
      throw std::domain_error("invalid graph pair");
    }
    return adj_[x * n_ + y];
  }

  void Graph::set(Vertex x, Vertex y, bool edge) {
    if (x == y || x >= n_ || y >= n_) {
      throw std::domain_error("invalid graph pair");
    }
    adj_[x * n_ + y] = edge;
    adj_[y * n_ + x] = edge;
  }

  std::size_t Graph::edge_count() const noexcept {
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), true)) / 2;
  }

  PairType pair_type(Digraph const& g, Vertex x, Vertex y) {
    return g.pair_type(x, y);
  }

  Digraph set_pair(Digraph const& g, Vertex x, Vertex y, PairType t) {
    Digraph h = g;
    h.set(x, y, t);
    return h;
  }

  Digraph induced(Digraph const& g, std::span<Vertex const> vertices) {
    std::vector<bool> seen(g.size(), false);
    for (auto v : vertices) {
      if (v >= g.size()) {
        throw std::domain_error("induced: vertex out of range");
      }
      if (seen[v]) {
        throw std::domain_error("induced: duplicate vertex " + std::to_string(v));
      }
      seen[v] = true;
    }
    Digraph h(vertices.size());
    for (std::size_t j = 1; j < vertices.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        h.set(i, j, g.pair_type(vertices[i], vertices[j]));
      }
    }
    return h;
  }

  Digraph relabel(Digraph const& g, std::span<Vertex const> perm) {
    if (perm.size() != g.size()) {
      throw std::domain_error("relabel: permutation has wrong length");
    }
    std::vector<bool> hit(g.size(), false);
    for (auto v : perm) {
      if (v >= g.size() || hit[v]) {
        throw std::domain_error("relabel: not a permutation");
      }
      hit[v] = true;
    }
    Digraph h(g.size());
    for (Vertex y = 1; y < g.size(); ++y) {
      for (Vertex x = 0; x < y; ++x) {
        h.set(perm[x], perm[y], g.raw(pair_index(x, y)));
      }
    }
    return h;
  }

  namespace {

    struct Degrees {
      std::size_t out = 0;
      std::size_t in  = 0;
      friend bool operator==(Degrees const&, Degrees const&) = default;
    };

    std::vector<Degrees> degrees(Digraph const& g) {
      std::vector<Degrees> d(g.size());
      for (Vertex y = 1; y < g.size(); ++y) {
        for (Vertex x = 0; x < y; ++x) {
          switch (g.raw(pair_index(x, y))) {
            case PairType::Out:
              ++d[x].out;
              ++d[y].in;
              break;
            case PairType::In:
              ++d[y].out;
              ++d[x].in;
              break;
            default:
              break;
          }
        }
      }
      return d;
    }

    class IsoSearch {
     public:
      IsoSearch(Digraph const& g, Digraph const& h)
          : g_(g), h_(h), dg_(degrees(g)), dh_(degrees(h)), phi_(g.size()),
            used_(h.size(), false) {}

      bool run(Vertex x) {
        if (x == g_.size()) {
          return true;
        }
        for (Vertex y = 0; y < h_.size(); ++y) {
          if (used_[y] || !(dg_[x] == dh_[y]) || !consistent(x, y)) {
            continue;
          }
          phi_[x]  = y;
          used_[y] = true;
          if (run(x + 1)) {
            return true;
          }
          used_[y] = false;
        }
        return false;
      }

      std::vector<Vertex> const& map() const {
        return phi_;
      }

     private:
      bool consistent(Vertex x, Vertex y) const {
        for (Vertex p = 0; p < x; ++p) {
          if (g_.pair_type(p, x) != h_.pair_type(phi_[p], y)) {
            return false;
          }
        }
        return true;
      }

      Digraph const&       g_;
      Digraph const&       h_;
      std::vector<Degrees> dg_;
      std::vector<Degrees> dh_;
      std::vector<Vertex>  phi_;
      std::vector<bool>    used_;
    };

  }  // namespace

  std::optional<std::vector<Vertex>> is_isomorphic(Digraph const& g, Digraph const& h) {
    if (g.size() != h.size() || g.edge_count() != h.edge_count()) {
      return std::nullopt;
    }
    IsoSearch search(g, h);
    if (!search.run(0)) {
      return std::nullopt;
    }
    return search.map();
  }

  TriangleCode triangle_code(Digraph const& g, Vertex x, Vertex y, Vertex z) {
    if (x == y || y == z || x == z) {
      throw std::domain_error("triangle_code: vertices must be distinct");
    }
    return {g.pair_type(x, y), g.pair_type(y, z), g.pair_type(x, z)};
  }

  Graph underlying_graph(Digraph const& g) {
    Graph out(g.size());
    for (Vertex y = 1; y < g.size(); ++y) {
      for (Vertex x = 0; x < y; ++x) {
        if (is_edge(g.raw(pair_index(x, y)))) {
          out.set(x, y, true);
        }
      }
    }
    return out;
  }

}  // namespace reducts
