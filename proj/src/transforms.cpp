#include "reducts/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace reducts {

  namespace op {
    bool operator==(Compose const& a, Compose const& b) {
      return a.items == b.items;
    }
  }  // namespace op

  namespace {

    // Rotation of a pair type by k steps of Out -> In -> None -> Out.
    constexpr PairType advance(PairType t, int k) {
      return static_cast<PairType>((static_cast<int>(t) + k % 3 + 3) % 3);
    }

    std::vector<bool> membership(VertexSet const& A, std::size_t n, char const* what) {
      std::vector<bool> in(n, false);
      for (auto v : A) {
        if (v >= n) {
          throw std::domain_error(std::string(what) + ": vertex " + std::to_string(v)
                                  + " out of range");
        }
        if (in[v]) {
          throw std::domain_error(std::string(what) + ": duplicate vertex " + std::to_string(v));
        }
        in[v] = true;
      }
      return in;
    }

    std::vector<int> rot_pieces(op::Rot const& r, std::size_t n) {
      std::vector<int> piece(n, -1);
      int              idx = 0;
      for (auto const* set : {&r.A, &r.B, &r.C}) {
        for (auto v : *set) {
          if (v >= n) {
            throw std::domain_error("rot: vertex " + std::to_string(v) + " out of range");
          }
          if (piece[v] != -1) {
            throw std::domain_error("rot: pieces overlap at vertex " + std::to_string(v));
          }
          piece[v] = idx;
        }
        ++idx;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (piece[v] == -1) {
          throw std::domain_error("rot: pieces do not cover vertex " + std::to_string(v));
        }
      }
      return piece;
    }

    template <class F>
    Digraph rewrite_pairs(Digraph const& g, F&& f) {
      Digraph h(g.size());
      for (Vertex y = 1; y < g.size(); ++y) {
        for (Vertex x = 0; x < y; ++x) {
          h.set(x, y, f(x, y, g.raw(pair_index(x, y))));
        }
      }
      return h;
    }

    PairType toggle_graph_pair(PairType t) {
      return is_edge(t) ? PairType::None : PairType::Out;
    }

    struct Applier {
      Digraph const& g;

      Digraph operator()(op::Reverse const&) const {
        return rewrite_pairs(g, [](Vertex, Vertex, PairType t) { return reversed(t); });
      }

      Digraph operator()(op::Switch const& s) const {
        auto in = membership(s.A, g.size(), "switch");
        return rewrite_pairs(g, [&](Vertex x, Vertex y, PairType t) {
          return in[x] != in[y] ? reversed(t) : t;
        });
      }

      Digraph operator()(op::Rot const& r) const {
        auto piece = rot_pieces(r, g.size());
        return rewrite_pairs(g, [&](Vertex x, Vertex y, PairType t) {
          int const d = (piece[y] - piece[x] + 3) % 3;
          if (d == 1) {
            return advance(t, 1);
          }
          if (d == 2) {
            return advance(t, -1);
          }
          return t;
        });
      }

      Digraph operator()(op::GraphReverse const&) const {
        return rewrite_pairs(g, [](Vertex, Vertex, PairType t) { return toggle_graph_pair(t); });
      }

      Digraph operator()(op::GraphSwitch const& s) const {
        auto in = membership(s.A, g.size(), "graph_switch");
        return rewrite_pairs(g, [&](Vertex x, Vertex y, PairType t) {
          return in[x] != in[y] ? toggle_graph_pair(t) : t;
        });
      }

      Digraph operator()(op::Compose const& c) const {
        Digraph cur = g;
        for (auto it = c.items.rbegin(); it != c.items.rend(); ++it) {
          cur = apply(*it, cur);
        }
        return cur;
      }
    };

    VertexSet normalized(VertexSet A) {
      std::sort(A.begin(), A.end());
      return A;
    }

  }  // namespace

  Transform reverse() {
    return {op::Reverse{}};
  }

  Transform switch_set(VertexSet A) {
    return {op::Switch{normalized(std::move(A))}};
  }

  Transform rot(VertexSet A, VertexSet B, VertexSet C) {
    return {op::Rot{normalized(std::move(A)), normalized(std::move(B)), normalized(std::move(C))}};
  }

  Transform rot_about(Vertex a, std::size_t n) {
    if (a >= n) {
      throw std::domain_error("rot_about: vertex out of range");
    }
    VertexSet rest;
    for (Vertex v = 0; v < n; ++v) {
      if (v != a) {
        rest.push_back(v);
      }
    }
    return rot({a}, std::move(rest), {});
  }

  Transform graph_reverse() {
    return {op::GraphReverse{}};
  }

  Transform graph_switch(VertexSet A) {
    return {op::GraphSwitch{normalized(std::move(A))}};
  }

  Transform compose(std::vector<Transform> items) {
    return {op::Compose{std::move(items)}};
  }

  Transform identity() {
    return compose({});
  }

  Digraph apply(Transform const& t, Digraph const& g) {
    return std::visit(Applier{g}, t.op);
  }

  std::vector<Vertex> identity_map(std::size_t n) {
    std::vector<Vertex> f(n);
    std::iota(f.begin(), f.end(), Vertex{0});
    return f;
  }

  VertexSet complement(VertexSet const& A, std::size_t n) {
    auto      in = membership(A, n, "complement");
    VertexSet out;
    for (Vertex v = 0; v < n; ++v) {
      if (!in[v]) {
        out.push_back(v);
      }
    }
    return out;
  }

  namespace {

    void check_injective(Digraph const& g, Digraph const& h, std::span<Vertex const> f) {
      if (f.size() != g.size()) {
        throw std::domain_error("vertex map length " + std::to_string(f.size())
                                + " does not match digraph size " + std::to_string(g.size()));
      }
      std::vector<bool> hit(h.size(), false);
      for (auto v : f) {
        if (v >= h.size()) {
          throw std::domain_error("vertex map target out of range");
        }
        if (hit[v]) {
          throw std::domain_error("vertex map is not injective at " + std::to_string(v));
        }
        hit[v] = true;
      }
    }

    // Lexicographic enumeration of all k-subsets of 0..n-1.
    template <class F>
    bool all_subsets(std::size_t n, std::size_t k, F&& f) {
      if (k > n) {
        return true;
      }
      std::vector<Vertex> s(k);
      std::iota(s.begin(), s.end(), Vertex{0});
      while (true) {
        if (!f(std::span<Vertex const>(s))) {
          return false;
        }
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) {
          --i;
        }
        if (i == 0) {
          return true;
        }
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) {
          s[j] = s[j - 1] + 1;
        }
      }
    }

  }  // namespace

  bool behaves_like(Digraph const&          g,
                    Digraph const&          h,
                    std::span<Vertex const> f,
                    Transform const&        templ,
                    int                     m) {
    if (m < 1 || m > 4) {
      throw std::domain_error("behaves_like: tuple length must be in [1, 4]");
    }
    check_injective(g, h, f);
    Digraph const expected = apply(templ, g);
    if (m == 2) {
      for (Vertex y = 1; y < g.size(); ++y) {
        for (Vertex x = 0; x < y; ++x) {
          if (h.pair_type(f[x], f[y]) != expected.raw(pair_index(x, y))) {
            return false;
          }
        }
      }
      return true;
    }
    // Substructures are determined by their pairs, so comparing sorted
    // subsets covers every ordering of the tuple.
    for (std::size_t k = 1; k <= static_cast<std::size_t>(m); ++k) {
      bool ok = all_subsets(g.size(), k, [&](std::span<Vertex const> s) {
        std::vector<Vertex> image(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
          image[i] = f[s[i]];
        }
        return induced(h, image) == induced(expected, s);
      });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  SwitchDetection detect_switch_set(Digraph const& g, Digraph const& h, std::span<Vertex const> f) {
    check_injective(g, h, f);
    std::size_t const n = g.size();
    SwitchDetection   out;
    if (n == 0) {
      out.set = VertexSet{};
      return out;
    }

    auto edge = [&](Vertex x, Vertex y) { return is_edge(g.pair_type(x, y)); };
    auto switched = [&](Vertex x, Vertex y) {
      return h.pair_type(f[x], f[y]) == reversed(g.pair_type(x, y));
    };

    enum Layer : int { Unset = -1, A0, A1, B1, A2, B2, A3, B3 };
    std::vector<int> layer(n, Unset);
    Vertex const     a0 = 0;
    layer[a0]           = A0;

    std::vector<Vertex> a1, b1;
    for (Vertex x = 0; x < n; ++x) {
      if (x != a0 && edge(a0, x)) {
        layer[x] = switched(a0, x) ? B1 : A1;
        (layer[x] == A1 ? a1 : b1).push_back(x);
      }
    }
    for (Vertex x = 0; x < n; ++x) {
      if (layer[x] != Unset) {
        continue;
      }
      bool to_a1 = false, unswitched_to_a1 = false;
      for (auto y : a1) {
        if (edge(x, y)) {
          to_a1 = true;
          unswitched_to_a1 |= !switched(x, y);
        }
      }
      if (to_a1) {
        layer[x] = unswitched_to_a1 ? A2 : B2;
        continue;
      }
      bool to_b1 = false, switched_to_b1 = false;
      for (auto y : b1) {
        if (edge(x, y)) {
          to_b1 = true;
          switched_to_b1 |= switched(x, y);
        }
      }
      if (to_b1) {
        layer[x] = switched_to_b1 ? A3 : B3;
      }
    }

    // Sides: true for the A layers.
    std::vector<int> side(n, -1);
    for (Vertex x = 0; x < n; ++x) {
      if (layer[x] == Unset) {
        out.covered = false;
        out.uncovered.push_back(x);
      } else {
        side[x] = (layer[x] == A0 || layer[x] == A1 || layer[x] == A2 || layer[x] == A3) ? 1 : 0;
      }
    }

    // Vertices outside the layers follow their edges: same side across an
    // unswitched edge, opposite across a switched one. Vertices with no
    // edge to a placed vertex start a new group on the A side.
    std::size_t remaining = out.uncovered.size();
    while (remaining > 0) {
      bool progress = false;
      for (auto x : out.uncovered) {
        if (side[x] != -1) {
          continue;
        }
        for (Vertex y = 0; y < n; ++y) {
          if (y != x && side[y] != -1 && edge(x, y)) {
            side[x] = switched(x, y) ? 1 - side[y] : side[y];
            break;
          }
        }
        if (side[x] != -1) {
          progress = true;
          --remaining;
        }
      }
      if (!progress) {
        for (auto x : out.uncovered) {
          if (side[x] == -1) {
            side[x] = 1;
            --remaining;
            break;
          }
        }
      }
    }

    VertexSet A;
    for (Vertex x = 0; x < n; ++x) {
      if (side[x] == 1) {
        A.push_back(x);
      }
    }
    if (behaves_like(g, h, f, switch_set(A))) {
      out.set = std::move(A);
    }
    return out;
  }

  std::optional<RotPartition> detect_rot_partition(Digraph const&          g,
                                                   Digraph const&          h,
                                                   std::span<Vertex const> f) {
    check_injective(g, h, f);
    std::size_t const n = g.size();
    if (n == 0) {
      return RotPartition{};
    }
    Vertex const a = 0;
    RotPartition p;
    p.A.push_back(a);
    for (Vertex x = 0; x < n; ++x) {
      if (x == a) {
        continue;
      }
      PairType const before = g.pair_type(a, x);
      PairType const after  = h.pair_type(f[a], f[x]);
      if (after == before) {
        p.A.push_back(x);
      } else if (after == advance(before, 1)) {
        p.B.push_back(x);
      } else {
        p.C.push_back(x);
      }
    }
    if (!behaves_like(g, h, f, rot(p.A, p.B, p.C))) {
      return std::nullopt;
    }
    return p;
  }

  std::pair<Digraph, Transform> reduce_edges_via_sw_rot(Digraph const& g, Vertex a) {
    std::size_t const n = g.size();
    if (a >= n) {
      throw std::domain_error("reduce_edges_via_sw_rot: vertex out of range");
    }
    VertexSet out_nbrs, in_nbrs;
    for (Vertex x = 0; x < n; ++x) {
      if (x == a) {
        continue;
      }
      switch (g.pair_type(a, x)) {
        case PairType::Out:
          out_nbrs.push_back(x);
          break;
        case PairType::In:
          in_nbrs.push_back(x);
          break;
        default:
          break;
      }
    }
    if (out_nbrs.empty() && in_nbrs.empty()) {
      throw std::domain_error("reduce_edges_via_sw_rot: vertex " + std::to_string(a)
                              + " is isolated");
    }
    VertexSet both;
    std::merge(out_nbrs.begin(), out_nbrs.end(), in_nbrs.begin(), in_nbrs.end(),
               std::back_inserter(both));

    Transform const rot_a = rot_about(a, n);
    // After the first four stages every pair at a is a non-edge and the
    // pairs between the in-neighbours and the rest are reversed; the final
    // switch undoes that.
    Transform t = compose({switch_set(in_nbrs), rot_a, switch_set(both), rot_a, rot_a,
                           switch_set(out_nbrs)});
    Digraph   result = apply(t, g);
    return {std::move(result), std::move(t)};
  }

}  // namespace reducts
