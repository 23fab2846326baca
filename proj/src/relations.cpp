#include "reducts/relations.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace reducts {

  namespace {

    struct RelationInfo {
      RelationId       id;
      std::size_t      arity;
      std::string_view name;
    };

    constexpr std::array<RelationInfo, relation_count> relation_info{{
        {RelationId::E, 2, "E"},
        {RelationId::Estar, 2, "Estar"},
        {RelationId::N, 2, "N"},
        {RelationId::EGamma, 2, "EGamma"},
        {RelationId::Ew, 4, "Ew"},
        {RelationId::Psw, 3, "Psw"},
        {RelationId::PswW, 6, "PswW"},
        {RelationId::Prot1, 3, "Prot1"},
        {RelationId::Prot2, 3, "Prot2"},
        {RelationId::Prot3, 3, "Prot3"},
        {RelationId::ProtW, 6, "ProtW"},
        {RelationId::GammaTriParity, 3, "GammaTriParity"},
        {RelationId::EGammaW, 4, "EGammaW"},
        {RelationId::GammaTriParityW, 6, "GammaTriParityW"},
    }};

    using PairMatrix = std::array<std::array<PairType, 3>, 3>;

    PairMatrix to_matrix(TriangleCode c) {
      PairMatrix m{};
      m[0][1] = c.t12;
      m[1][2] = c.t23;
      m[0][2] = c.t13;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < i; ++j) {
          m[i][j] = reversed(m[j][i]);
        }
      }
      return m;
    }

    TriangleCode from_matrix(PairMatrix const& m) {
      return {m[0][1], m[1][2], m[0][2]};
    }

    TriangleCode rotate_code(TriangleCode c, std::array<int, 3> const& piece) {
      PairMatrix m = to_matrix(c);
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          int const d = (piece[j] - piece[i] + 3) % 3;
          int const s = static_cast<int>(m[i][j]);
          if (d == 1) {
            m[i][j] = static_cast<PairType>((s + 1) % 3);
          } else if (d == 2) {
            m[i][j] = static_cast<PairType>((s + 2) % 3);
          }
        }
      }
      return from_matrix(m);
    }

    TriangleCode permute_code(TriangleCode c, std::array<int, 3> const& perm) {
      PairMatrix const m = to_matrix(c);
      return {m[perm[0]][perm[1]], m[perm[1]][perm[2]], m[perm[0]][perm[2]]};
    }

    RotOrbitTable build_rot_table() {
      auto const ooo = TriangleCode{PairType::Out, PairType::Out, PairType::Out}.index();
      auto const nnn = TriangleCode{PairType::None, PairType::None, PairType::None}.index();
      for (bool relabel : {false, true}) {
        auto parts = rot_orbit_partition(relabel);
        bool const shape_ok =
            parts.size() == 3
            && std::all_of(parts.begin(), parts.end(), [](auto const& p) { return p.size() == 9; });
        if (!shape_ok) {
          continue;
        }
        RotOrbitTable table{};
        for (auto const& part : parts) {
          bool const has_ooo = std::find(part.begin(), part.end(), ooo) != part.end();
          bool const has_nnn = std::find(part.begin(), part.end(), nnn) != part.end();
          if (has_ooo && has_nnn) {
            throw std::logic_error("rotation classes: (Out,Out,Out) and (None,None,None) coincide");
          }
          int const label = has_ooo ? 1 : has_nnn ? 3 : 2;
          for (auto c : part) {
            table[c] = label;
          }
        }
        return table;
      }
      throw std::logic_error("rotation classes: no convention yields three classes of nine");
    }

    void check_tuple(RelationId rel, Digraph const& g, std::span<Vertex const> t) {
      if (t.size() != arity(rel)) {
        throw std::domain_error(std::string(to_string(rel)) + " expects " + std::to_string(arity(rel))
                                + " entries, got " + std::to_string(t.size()));
      }
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= g.size()) {
          throw std::domain_error("tuple entry out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (t[i] == t[j]) {
            throw std::domain_error("tuple entries must be distinct");
          }
        }
      }
    }

    bool even_edges(TriangleCode c) {
      int const edges = int(is_edge(c.t12)) + int(is_edge(c.t23)) + int(is_edge(c.t13));
      return edges % 2 == 0;
    }

    // The two-part relations all have the form
    //   R(x, y) = Q(x) == Q(y) and Q(x) in accepted
    // for a part invariant Q with values below 4.
    struct CompoundForm {
      RelationId    id;
      std::size_t   part_arity;
      std::uint8_t  accepted;  // bit q set iff Q = q is accepted
    };

    constexpr std::array<CompoundForm, 5> compound_forms{{
        {RelationId::Ew, 2, 0b0011},
        {RelationId::EGammaW, 2, 0b0011},
        {RelationId::PswW, 3, 0b0011},
        {RelationId::ProtW, 3, 0b0110},
        {RelationId::GammaTriParityW, 3, 0b0011},
    }};

    int part_invariant(RelationId id, Digraph const& g, std::span<Vertex const> p) {
      switch (id) {
        case RelationId::Ew:
          return static_cast<int>(g.pair_type(p[0], p[1]));
        case RelationId::EGammaW:
          return is_edge(g.pair_type(p[0], p[1])) ? 1 : 0;
        case RelationId::PswW: {
          auto const c = triangle_code(g, p[0], p[1], p[2]);
          return c.is_tournament() ? (psw(c) ? 1 : 0) : 2;
        }
        case RelationId::ProtW:
          return rot_label(triangle_code(g, p[0], p[1], p[2]));
        case RelationId::GammaTriParityW:
          return even_edges(triangle_code(g, p[0], p[1], p[2])) ? 1 : 0;
        default:
          throw std::logic_error("not a two-part relation");
      }
    }

    bool compound_holds(CompoundForm const& form, int q1, int q2) {
      return q1 == q2 && ((form.accepted >> q1) & 1u);
    }

    CompoundForm const* compound_form(RelationId id) {
      for (auto const& f : compound_forms) {
        if (f.id == id) {
          return &f;
        }
      }
      return nullptr;
    }

    bool eval_simple(RelationId rel, Digraph const& g, std::span<Vertex const> t) {
      switch (rel) {
        case RelationId::E:
          return g.pair_type(t[0], t[1]) == PairType::Out;
        case RelationId::Estar:
          return g.pair_type(t[0], t[1]) == PairType::In;
        case RelationId::N:
          return g.pair_type(t[0], t[1]) == PairType::None;
        case RelationId::EGamma:
          return is_edge(g.pair_type(t[0], t[1]));
        case RelationId::Psw:
          return psw(triangle_code(g, t[0], t[1], t[2]));
        case RelationId::Prot1:
          return rot_label(triangle_code(g, t[0], t[1], t[2])) == 1;
        case RelationId::Prot2:
          return rot_label(triangle_code(g, t[0], t[1], t[2])) == 2;
        case RelationId::Prot3:
          return rot_label(triangle_code(g, t[0], t[1], t[2])) == 3;
        case RelationId::GammaTriParity:
          return even_edges(triangle_code(g, t[0], t[1], t[2]));
        default:
          throw std::logic_error("not a single-part relation");
      }
    }

    // Ordered tuples of distinct vertices of length k.
    template <class F>
    void for_each_tuple(std::size_t n, std::size_t k, F&& f) {
      std::array<Vertex, 3> t{};
      if (k == 2) {
        for (t[0] = 0; t[0] < n; ++t[0]) {
          for (t[1] = 0; t[1] < n; ++t[1]) {
            if (t[0] != t[1] && !f(std::span<Vertex const>(t.data(), 2))) {
              return;
            }
          }
        }
        return;
      }
      for (t[0] = 0; t[0] < n; ++t[0]) {
        for (t[1] = 0; t[1] < n; ++t[1]) {
          if (t[1] == t[0]) {
            continue;
          }
          for (t[2] = 0; t[2] < n; ++t[2]) {
            if (t[2] != t[0] && t[2] != t[1] && !f(std::span<Vertex const>(t.data(), 3))) {
              return;
            }
          }
        }
      }
    }

    struct Part {
      std::array<Vertex, 3> v{};
      std::uint8_t          len = 0;

      bool contains(Vertex x) const {
        return std::find(v.begin(), v.begin() + len, x) != v.begin() + len;
      }
      bool disjoint(Part const& o) const {
        for (std::size_t i = 0; i < len; ++i) {
          if (o.contains(v[i])) {
            return false;
          }
        }
        return true;
      }
      Part without(Vertex x) const {
        Part p;
        for (std::size_t i = 0; i < len; ++i) {
          if (v[i] != x) {
            p.v[p.len++] = v[i];
          }
        }
        return p;
      }
    };

    struct Tagged {
      std::size_t id;
      Part        part;
    };

    // Finds a in as, b in bs with disjoint parts. If the first member of as
    // meets every member of bs, any disjoint pair has b containing some
    // vertex of that first member and a avoiding it; the search branches on
    // that vertex and drops it from the b side, so depth is bounded by the
    // part length.
    std::optional<std::pair<std::size_t, std::size_t>> disjoint_pair(std::vector<Tagged> const& as,
                                                                     std::vector<Tagged> const& bs) {
      if (as.empty() || bs.empty()) {
        return std::nullopt;
      }
      Part const& first = as.front().part;
      for (auto const& b : bs) {
        if (first.disjoint(b.part)) {
          return std::pair{as.front().id, b.id};
        }
      }
      for (std::size_t i = 0; i < first.len; ++i) {
        Vertex const        x = first.v[i];
        std::vector<Tagged> as2, bs2;
        for (auto const& a : as) {
          if (!a.part.contains(x)) {
            as2.push_back(a);
          }
        }
        for (auto const& b : bs) {
          if (b.part.contains(x)) {
            bs2.push_back({b.id, b.part.without(x)});
          }
        }
        if (auto r = disjoint_pair(as2, bs2)) {
          return r;
        }
      }
      return std::nullopt;
    }

    void check_bijection(Digraph const& g, Digraph const& h, std::span<Vertex const> f) {
      if (f.size() != g.size() || g.size() != h.size()) {
        throw std::domain_error("vertex map must be a bijection between equal-size digraphs");
      }
      std::vector<bool> hit(h.size(), false);
      for (auto v : f) {
        if (v >= h.size() || hit[v]) {
          throw std::domain_error("vertex map is not a bijection");
        }
        hit[v] = true;
      }
    }

  }  // namespace

  std::size_t arity(RelationId r) noexcept {
    return relation_info[static_cast<std::size_t>(r)].arity;
  }

  std::string_view to_string(RelationId r) noexcept {
    return relation_info[static_cast<std::size_t>(r)].name;
  }

  RelationId relation_from_string(std::string_view name) {
    for (auto const& info : relation_info) {
      if (info.name == name) {
        return info.id;
      }
    }
    throw std::invalid_argument("unknown relation: " + std::string(name));
  }

  std::size_t RelationSet::size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }

  std::vector<RelationId> RelationSet::members() const {
    std::vector<RelationId> out;
    for (auto r : all_relations) {
      if (contains(r)) {
        out.push_back(r);
      }
    }
    return out;
  }

  std::vector<std::vector<std::size_t>> rot_orbit_partition(bool with_relabeling) {
    std::vector<std::array<int, 3>> moves;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        for (int c = 0; c < 3; ++c) {
          moves.push_back({a, b, c});
        }
      }
    }
    std::vector<std::array<int, 3>> perms;
    if (with_relabeling) {
      std::array<int, 3> p{0, 1, 2};
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
    }

    std::array<int, triangle_code_count>  cls;
    cls.fill(-1);
    std::vector<std::vector<std::size_t>> parts;
    for (std::size_t start = 0; start < triangle_code_count; ++start) {
      if (cls[start] != -1) {
        continue;
      }
      int const                id = static_cast<int>(parts.size());
      std::vector<std::size_t> part{start};
      cls[start] = id;
      for (std::size_t i = 0; i < part.size(); ++i) {
        auto const code = TriangleCode::from_index(part[i]);
        auto visit      = [&](TriangleCode next) {
          auto const j = next.index();
          if (cls[j] == -1) {
            cls[j] = id;
            part.push_back(j);
          }
        };
        for (auto const& m : moves) {
          visit(rotate_code(code, m));
        }
        for (auto const& p : perms) {
          visit(permute_code(code, p));
        }
      }
      std::sort(part.begin(), part.end());
      parts.push_back(std::move(part));
    }
    return parts;
  }

  RotOrbitTable const& rot_orbit_table() {
    static RotOrbitTable const table = build_rot_table();
    return table;
  }

  int rot_label(TriangleCode c) {
    return rot_orbit_table()[c.index()];
  }

  bool psw(TriangleCode c) noexcept {
    if (!c.is_tournament()) {
      return false;
    }
    int const ins = int(c.t12 == PairType::In) + int(c.t23 == PairType::In)
                    + int(c.t13 == PairType::In);
    return ins % 2 == 0;
  }

  bool eval(RelationId rel, Digraph const& g, std::span<Vertex const> tuple) {
    check_tuple(rel, g, tuple);
    if (auto const* form = compound_form(rel)) {
      auto const k = form->part_arity;
      return compound_holds(*form, part_invariant(rel, g, tuple.subspan(0, k)),
                            part_invariant(rel, g, tuple.subspan(k, k)));
    }
    return eval_simple(rel, g, tuple);
  }

  Preservation preserved_relations_detailed(Digraph const&          g,
                                            Digraph const&          h,
                                            std::span<Vertex const> f) {
    check_bijection(g, h, f);
    std::size_t const n = g.size();
    Preservation      out;

    auto image = [&](std::span<Vertex const> t) {
      std::array<Vertex, 3> im{};
      for (std::size_t i = 0; i < t.size(); ++i) {
        im[i] = f[t[i]];
      }
      return im;
    };

    for (auto rel : all_relations) {
      if (compound_form(rel) != nullptr) {
        continue;
      }
      std::optional<std::vector<Vertex>> witness;
      for_each_tuple(n, arity(rel), [&](std::span<Vertex const> t) {
        auto const im = image(t);
        if (eval_simple(rel, g, t) != eval_simple(rel, h, std::span<Vertex const>(im.data(), t.size()))) {
          witness.emplace(t.begin(), t.end());
          return false;
        }
        return true;
      });
      if (witness) {
        out.excluded_by.emplace(rel, std::move(*witness));
      } else {
        out.preserved.insert(rel);
      }
    }

    for (auto const& form : compound_forms) {
      // Bucket parts by (Q in g, Q of the image in h).
      std::array<std::vector<Tagged>, 16> buckets;
      std::vector<Part>                   parts;
      for_each_tuple(n, form.part_arity, [&](std::span<Vertex const> t) {
        auto const im = image(t);
        int const  qg = part_invariant(form.id, g, t);
        int const  qh = part_invariant(form.id, h, std::span<Vertex const>(im.data(), t.size()));
        Part       p;
        std::copy(t.begin(), t.end(), p.v.begin());
        p.len = static_cast<std::uint8_t>(t.size());
        buckets[qg * 4 + qh].push_back({parts.size(), p});
        parts.push_back(p);
        return true;
      });

      std::optional<std::vector<Vertex>> witness;
      for (int c1 = 0; c1 < 16 && !witness; ++c1) {
        for (int c2 = c1; c2 < 16 && !witness; ++c2) {
          bool const rg = compound_holds(form, c1 / 4, c2 / 4);
          bool const rh = compound_holds(form, c1 % 4, c2 % 4);
          if (rg == rh) {
            continue;
          }
          if (auto ids = disjoint_pair(buckets[c1], buckets[c2])) {
            std::vector<Vertex> w;
            for (auto id : {ids->first, ids->second}) {
              w.insert(w.end(), parts[id].v.begin(), parts[id].v.begin() + parts[id].len);
            }
            witness = std::move(w);
          }
        }
      }
      if (witness) {
        out.excluded_by.emplace(form.id, std::move(*witness));
      } else {
        out.preserved.insert(form.id);
      }
    }
    return out;
  }

  RelationSet preserved_relations(Digraph const& g, Digraph const& h, std::span<Vertex const> f) {
    return preserved_relations_detailed(g, h, f).preserved;
  }

}  // namespace reducts
