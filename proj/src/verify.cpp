#include "reducts/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "reducts/relations.hpp"

namespace reducts {

  namespace {

    std::mt19937_64 trial_rng(ExperimentConfig const& c, int trial) {
      std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                        static_cast<std::uint32_t>(trial)};
      return std::mt19937_64(seq);
    }

    VertexSet random_subset(std::size_t n, std::mt19937_64& rng) {
      VertexSet A;
      for (Vertex v = 0; v < n; ++v) {
        if (rng() & 1u) {
          A.push_back(v);
        }
      }
      return A;
    }

    std::array<VertexSet, 3> random_partition(std::size_t n, std::mt19937_64& rng) {
      std::array<VertexSet, 3> p;
      for (Vertex v = 0; v < n; ++v) {
        p[rng() % 3].push_back(v);
      }
      return p;
    }

    Digraph code_digraph(TriangleCode c) {
      Digraph g(3);
      g.set(0, 1, c.t12);
      g.set(1, 2, c.t23);
      g.set(0, 2, c.t13);
      return g;
    }

    std::string code_text(TriangleCode c) {
      return std::string(to_string(c.t12)) + "," + std::string(to_string(c.t23)) + ","
             + std::string(to_string(c.t13));
    }

    CheckResult check(std::string name, bool pass, std::string detail = {}, Json cex = nullptr) {
      return {std::move(name), pass, std::move(detail), std::move(cex)};
    }

    // Compares `rel` on every tuple of g and of h under the identity map.
    std::optional<std::vector<Vertex>> first_difference(RelationId rel, Digraph const& g, Digraph const& h) {
      auto const p = preserved_relations_detailed(g, h, identity_map(g.size()));
      auto       it = p.excluded_by.find(rel);
      if (it == p.excluded_by.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    // Trials of "apply a random transform, relation unchanged on all tuples".
    CheckResult preservation_trials(std::string const&                                       name,
                                    ExperimentConfig const&                                  c,
                                    std::vector<RelationId> const&                           rels,
                                    std::function<Transform(std::size_t, std::mt19937_64&)> make) {
      for (int t = 0; t < c.trials; ++t) {
        auto          rng = trial_rng(c, t);
        Digraph const g   = random_digraph(c.n, rng());
        Transform const tr = make(c.n, rng);
        Digraph const h   = apply(tr, g);
        for (auto rel : rels) {
          if (auto w = first_difference(rel, g, h)) {
            return check(name, false, std::string(to_string(rel)) + " changed",
                         Json{{"trial", t}, {"digraph", to_json(g)}, {"transform", to_json(tr)},
                              {"tuple", *w}});
          }
        }
      }
      return check(name, true, std::to_string(c.trials) + " trials");
    }

    SuiteResult rot_orbits_suite() {
      SuiteResult r{"rot-orbits", {}};
      auto const& table = rot_orbit_table();
      std::array<int, 4> sizes{};
      for (int l : table) {
        ++sizes[l];
      }
      r.checks.push_back(check("orbit shape", sizes[1] == 9 && sizes[2] == 9 && sizes[3] == 9,
                               "3 orbits, sizes " + std::to_string(sizes[1]) + "/" + std::to_string(sizes[2])
                                   + "/" + std::to_string(sizes[3])));
      TriangleCode const ooo{PairType::Out, PairType::Out, PairType::Out};
      TriangleCode const nnn{PairType::None, PairType::None, PairType::None};
      r.checks.push_back(check("pinned labels", rot_label(ooo) == 1 && rot_label(nnn) == 3,
                               "Out,Out,Out -> " + std::to_string(rot_label(ooo)) + "; None,None,None -> "
                                   + std::to_string(rot_label(nnn))));

      CheckResult one_pair = check("change-one-pair", true, "162 single changes");
      for (std::size_t i = 0; i < triangle_code_count && one_pair.pass; ++i) {
        auto const code = TriangleCode::from_index(i);
        for (int pos = 0; pos < 3 && one_pair.pass; ++pos) {
          for (auto t : all_pair_types) {
            TriangleCode changed = code;
            PairType&    slot    = pos == 0 ? changed.t12 : pos == 1 ? changed.t23 : changed.t13;
            if (slot == t) {
              continue;
            }
            slot = t;
            if (rot_label(changed) == rot_label(code)) {
              one_pair = check("change-one-pair", false, "label unchanged",
                               Json{{"from", code_text(code)}, {"to", code_text(changed)}});
              break;
            }
          }
        }
      }
      r.checks.push_back(std::move(one_pair));

      CheckResult fixed = check("rotation invariance", true, "27 codes x 27 partitions");
      for (std::size_t i = 0; i < triangle_code_count && fixed.pass; ++i) {
        auto const code = TriangleCode::from_index(i);
        for (int p = 0; p < 27; ++p) {
          std::array<VertexSet, 3> parts;
          parts[p % 3].push_back(0);
          parts[(p / 3) % 3].push_back(1);
          parts[p / 9].push_back(2);
          auto const h = apply(rot(parts[0], parts[1], parts[2]), code_digraph(code));
          auto const c2 = triangle_code(h, 0, 1, 2);
          if (rot_label(c2) != rot_label(code)) {
            fixed = check("rotation invariance", false, "label moved",
                          Json{{"code", code_text(code)}, {"image", code_text(c2)}});
            break;
          }
        }
      }
      r.checks.push_back(std::move(fixed));
      return r;
    }

    SuiteResult psw_census_suite() {
      SuiteResult r{"psw-census", {}};
      int  tournaments = 0, satisfied = 0;
      bool none_false  = true;
      for (std::size_t i = 0; i < triangle_code_count; ++i) {
        auto const c = TriangleCode::from_index(i);
        if (c.is_tournament()) {
          ++tournaments;
          satisfied += psw(c) ? 1 : 0;
        } else if (psw(c)) {
          none_false = false;
        }
      }
      r.checks.push_back(check("tournament census", tournaments == 8 && satisfied == 4,
                               std::to_string(satisfied) + " of " + std::to_string(tournaments)));
      r.checks.push_back(check("false off tournaments", none_false));
      return r;
    }

    SuiteResult psw_preservation_suite(ExperimentConfig const& c) {
      return {"psw-preservation",
              {preservation_trials("switch preserves Psw", c, {RelationId::Psw},
                                   [](std::size_t n, std::mt19937_64& rng) {
                                     return switch_set(random_subset(n, rng));
                                   })}};
    }

    SuiteResult rot_preservation_suite(ExperimentConfig const& c) {
      return {"rot-preservation",
              {preservation_trials("rot preserves Prot1/2/3", c,
                                   {RelationId::Prot1, RelationId::Prot2, RelationId::Prot3},
                                   [](std::size_t n, std::mt19937_64& rng) {
                                     auto p = random_partition(n, rng);
                                     return rot(p[0], p[1], p[2]);
                                   })}};
    }

    SuiteResult reverse_preservation_suite(ExperimentConfig const& c) {
      return {"reverse-preservation",
              {preservation_trials("reverse preserves Ew and N", c, {RelationId::Ew, RelationId::N},
                                   [](std::size_t, std::mt19937_64&) { return reverse(); })}};
    }

    SuiteResult graph_switch_suite(ExperimentConfig const& c) {
      return {"graph-switch-parity",
              {preservation_trials("graph switch preserves triangle parity", c, {RelationId::GammaTriParity},
                                   [](std::size_t n, std::mt19937_64& rng) {
                                     return graph_switch(random_subset(n, rng));
                                   })}};
    }

    bool has_tournament_triangle(Digraph const& g) {
      for (Vertex x = 0; x < g.size(); ++x) {
        for (Vertex y = x + 1; y < g.size(); ++y) {
          for (Vertex z = y + 1; z < g.size(); ++z) {
            if (triangle_code(g, x, y, z).is_tournament()) {
              return true;
            }
          }
        }
      }
      return false;
    }

    SuiteResult switch_detection_suite(ExperimentConfig const& c) {
      SuiteResult r{"switch-detection", {}};
      CheckResult rt = check("recovers A or its complement", true, std::to_string(c.trials) + " trials");
      for (int t = 0; t < c.trials && rt.pass; ++t) {
        auto          rng = trial_rng(c, t);
        Digraph const g   = random_digraph(c.n, rng());
        VertexSet const A = random_subset(c.n, rng);
        Digraph const h   = apply(switch_set(A), g);
        auto const    d   = detect_switch_set(g, h, identity_map(c.n));
        if (!d.set || (*d.set != A && *d.set != complement(A, c.n))) {
          rt = check(rt.name, false, "wrong or missing set",
                     Json{{"trial", t}, {"digraph", to_json(g)}, {"A", A},
                          {"found", d.set ? Json(*d.set) : Json(nullptr)}});
        }
      }
      r.checks.push_back(std::move(rt));

      CheckResult rev = check("rejects reverse", true);
      for (int t = 0; t < c.trials && rev.pass; ++t) {
        auto          rng = trial_rng(c, t);
        Digraph const g   = random_digraph(c.n, rng());
        if (!has_tournament_triangle(g)) {
          continue;
        }
        if (detect_switch_set(g, apply(reverse(), g), identity_map(c.n)).set) {
          rev = check(rev.name, false, "reverse accepted as a switch", Json{{"digraph", to_json(g)}});
        }
      }
      r.checks.push_back(std::move(rev));
      return r;
    }

    bool cyclic_match(RotPartition const& found, std::array<VertexSet, 3> const& p) {
      for (int s = 0; s < 3; ++s) {
        if (found.A == p[s] && found.B == p[(s + 1) % 3] && found.C == p[(s + 2) % 3]) {
          return true;
        }
      }
      return false;
    }

    SuiteResult rot_detection_suite(ExperimentConfig const& c) {
      SuiteResult r{"rot-detection", {}};
      CheckResult rt = check("recovers the partition up to rotation", true, std::to_string(c.trials) + " trials");
      for (int t = 0; t < c.trials && rt.pass; ++t) {
        auto          rng = trial_rng(c, t);
        Digraph const g   = random_digraph(c.n, rng());
        auto const    p   = random_partition(c.n, rng);
        Digraph const h   = apply(rot(p[0], p[1], p[2]), g);
        auto const    d   = detect_rot_partition(g, h, identity_map(c.n));
        if (!d || !cyclic_match(*d, p)) {
          rt = check(rt.name, false, "wrong or missing partition",
                     Json{{"trial", t}, {"digraph", to_json(g)}, {"A", p[0]}, {"B", p[1]}, {"C", p[2]}});
        }
      }
      r.checks.push_back(std::move(rt));

      CheckResult rev = check("rejects reverse", true);
      for (int t = 0; t < c.trials && rev.pass; ++t) {
        auto          rng = trial_rng(c, t);
        Digraph const g   = random_digraph(c.n, rng());
        if (has_tournament_triangle(g) && detect_rot_partition(g, apply(reverse(), g), identity_map(c.n))) {
          rev = check(rev.name, false, "reverse accepted as a rotation", Json{{"digraph", to_json(g)}});
        }
      }
      r.checks.push_back(std::move(rev));
      return r;
    }

    SuiteResult edge_deletion_suite(ExperimentConfig const& c) {
      SuiteResult r{"edge-deletion", {}};
      CheckResult res = check("sw/rot deletes edges at the anchor only", true, std::to_string(c.trials) + " trials");
      for (int t = 0; t < c.trials && res.pass; ++t) {
        auto              rng = trial_rng(c, t);
        std::size_t const n   = 2 + rng() % 11;
        Digraph const     g   = random_digraph(n, rng());
        VertexSet         anchors;
        for (Vertex a = 0; a < n; ++a) {
          for (Vertex x = 0; x < n; ++x) {
            if (x != a && is_edge(g.pair_type(a, x))) {
              anchors.push_back(a);
              break;
            }
          }
        }
        if (anchors.empty()) {
          continue;
        }
        Vertex const a      = anchors[rng() % anchors.size()];
        auto const [h, tr]  = reduce_edges_via_sw_rot(g, a);
        bool ok             = h.edge_count() < g.edge_count();
        for (Vertex y = 1; y < n && ok; ++y) {
          for (Vertex x = 0; x < y && ok; ++x) {
            if (x == a || y == a) {
              ok = h.pair_type(x, y) == PairType::None;
            } else {
              ok = h.pair_type(x, y) == g.pair_type(x, y);
            }
          }
        }
        if (!ok) {
          res = check(res.name, false, "bad result",
                      Json{{"digraph", to_json(g)}, {"anchor", a}, {"transform", to_json(tr)}});
        }
      }
      r.checks.push_back(std::move(res));
      return r;
    }

    SuiteResult lattice_suite() {
      SuiteResult r{"lattice-axioms", {}};
      auto const  derived = derive_lattice_tables();
      bool        frozen  = true;
      for (auto a : all_nodes) {
        for (auto b : all_nodes) {
          frozen &= derived.meet[std::size_t(a)][std::size_t(b)] == meet(a, b);
          frozen &= derived.join[std::size_t(a)][std::size_t(b)] == join(a, b);
        }
      }
      r.checks.push_back(check("frozen tables match the order", frozen));

      std::string failure;
      for (auto a : all_nodes) {
        for (auto b : all_nodes) {
          if (meet(a, b) != meet(b, a) || join(a, b) != join(b, a)) {
            failure = "commutativity";
          }
          if (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a) {
            failure = "absorption";
          }
          if (leq(a, b) != (meet(a, b) == a) || leq(a, b) != (join(a, b) == b)) {
            failure = "order consistency";
          }
          for (auto c : all_nodes) {
            if (meet(meet(a, b), c) != meet(a, meet(b, c)) || join(join(a, b), c) != join(a, join(b, c))) {
              failure = "associativity";
            }
          }
        }
        if (meet(a, a) != a || join(a, a) != a) {
          failure = "idempotence";
        }
      }
      r.checks.push_back(check("lattice axioms over all pairs and triples", failure.empty(), failure));

      using N = ReductNode;
      bool pinned = meet(N::Sw, N::Minus) == N::AutDE && join(N::Rot, N::Sw) == N::SymD
                    && meet(N::Rot, N::SwMinusGamma) == N::AutDE
                    && meet(N::MinusRot, N::SwMinusGamma) == N::Minus;
      r.checks.push_back(check("pinned meets and joins", pinned));
      return r;
    }

    SuiteResult signature_suite() {
      SuiteResult r{"signatures", {}};
      bool monotone = true, distinct = true;
      for (auto a : all_nodes) {
        for (auto b : all_nodes) {
          if (leq(a, b) && !signature(b).subset_of(signature(a))) {
            monotone = false;
          }
          if (a != b && signature(a) == signature(b)) {
            distinct = false;
          }
        }
      }
      r.checks.push_back(check("contravariant in the order", monotone));
      r.checks.push_back(check("pairwise distinct", distinct));
      return r;
    }

    SuiteResult ep_suite(ExperimentConfig const& c) {
      SuiteResult r{"ep-extension", {}};
      CheckResult d = check("digraph extension property", true);
      CheckResult u = check("underlying graph extension property", true);
      int const   trials = std::min(c.trials, 20);
      for (int t = 0; t < trials; ++t) {
        Digraph const g    = random_digraph(8, c.seed + t);
        Digraph const h    = extend_to_ep(g, c.k, c.seed + t);
        auto const    base = identity_map(8);
        auto const    rep  = check_k_ep(h, c.k, base);
        if (!rep.pass && d.pass) {
          d = check(d.name, false, "trial " + std::to_string(t), to_json(rep));
        }
        auto const grep = check_graph_k_ep(underlying_graph(h), c.k, base);
        if (!grep.pass && u.pass) {
          u = check(u.name, false, "trial " + std::to_string(t), to_json(grep));
        }
      }
      d.detail = d.pass ? std::to_string(trials) + " seeds at level " + std::to_string(c.k) : d.detail;
      r.checks.push_back(std::move(d));
      r.checks.push_back(std::move(u));
      return r;
    }

    SuiteResult tournament_suite(ExperimentConfig const& c) {
      SuiteResult r{"maximal-tournament", {}};
      std::string failing;
      Json        cex;
      int         exempted = 0;
      for (std::size_t m = 1; m <= 5; ++m) {
        std::size_t const pairs = m * (m - 1) / 2;
        int               bad   = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
          Digraph     t(m);
          std::size_t i = 0;
          for (Vertex y = 1; y < m; ++y) {
            for (Vertex x = 0; x < y; ++x, ++i) {
              t.set(x, y, (bits >> i) & 1u ? PairType::In : PairType::Out);
            }
          }
          auto const emb = embed_maximal_tournament(t, c.k);
          exempted += static_cast<int>(emb.exempted.size());
          if (!tournament_is_maximal(emb.g, emb.tournament)) {
            ++bad;
            if (cex.is_null()) {
              Json ex = Json::array();
              for (auto const& [x, tr] : emb.exempted) {
                ex.push_back(Json{{"vertex", x}, {"U", tr.U}, {"V", tr.V}, {"W", tr.W}});
              }
              cex = Json{{"tournament", to_json(t)}, {"exempted", std::move(ex)}};
            }
          }
        }
        if (bad > 0) {
          failing += (failing.empty() ? "" : ", ") + std::to_string(m);
        }
      }
      std::string detail = "sizes 1..5 at level " + std::to_string(c.k) + ", " + std::to_string(exempted)
                           + " exempted witnesses";
      if (!failing.empty()) {
        detail += "; not maximal at sizes " + failing;
      }
      r.checks.push_back(check("outside vertices have a non-edge into T1", failing.empty(), detail, cex));
      return r;
    }

    SuiteResult behaviors_suite() {
      SuiteResult r{"behaviors", {}};
      std::map<VerdictKind, int> hist;
      bool                       mirror = true;
      for (auto const& b : enumerate_behaviors()) {
        auto const v = classify_behavior(b);
        ++hist[v.kind];
        auto const m = classify_behavior(mirrored(b));
        if (m.kind != v.kind || m.case_label.substr(1) != v.case_label.substr(1)) {
          mirror = mirror && v.case_label[0] == '1';
        }
      }
      r.checks.push_back(check("27 rows, one Id, one Minus",
                               hist[VerdictKind::BehavesLikeId] == 1 && hist[VerdictKind::BehavesLikeMinus] == 1,
                               "Id " + std::to_string(hist[VerdictKind::BehavesLikeId]) + ", Minus "
                                   + std::to_string(hist[VerdictKind::BehavesLikeMinus]) + ", AutGamma "
                                   + std::to_string(hist[VerdictKind::ContainsAutGamma]) + ", SymD "
                                   + std::to_string(hist[VerdictKind::EqualsSymD])));
      r.checks.push_back(check("case 2 and case 3 mirror each other", mirror));
      bool has_minus_rot = false;
      for (auto const& b : enumerate_two_orbit_behaviors()) {
        has_minus_rot |= classify_two_orbit(b).kind == TwoOrbitKind::MinusRotCombined;
      }
      r.checks.push_back(check("two-orbit table has a MinusRotCombined row", has_minus_rot));
      return r;
    }

    SuiteResult back_and_forth_suite(ExperimentConfig const& c) {
      SuiteResult r{"back-and-forth", {}};
      CheckResult res    = check("extends a one-point map to four points", true);
      int const   trials = std::min(c.trials, 20);
      for (int t = 0; t < trials && res.pass; ++t) {
        Digraph const g  = extend_to_ep(random_digraph(10, c.seed + 2 * t), 3, c.seed + 2 * t);
        Digraph const h  = extend_to_ep(random_digraph(10, c.seed + 2 * t + 1), 3, c.seed + 2 * t + 1);
        auto const    bf = back_and_forth(g, h, {{0, 0}}, 3);
        if (bf.blocking || bf.map.size() < 4 || !is_partial_isomorphism(g, h, bf.map)) {
          res = check(res.name, false, "trial " + std::to_string(t));
        }
      }
      r.checks.push_back(std::move(res));
      return r;
    }

    using SuiteFn = std::function<SuiteResult(ExperimentConfig const&)>;

    std::vector<std::pair<std::string, SuiteFn>> const& registry() {
      static std::vector<std::pair<std::string, SuiteFn>> const suites{
          {"rot-orbits", [](auto const&) { return rot_orbits_suite(); }},
          {"psw-census", [](auto const&) { return psw_census_suite(); }},
          {"psw-preservation", psw_preservation_suite},
          {"rot-preservation", rot_preservation_suite},
          {"reverse-preservation", reverse_preservation_suite},
          {"graph-switch-parity", graph_switch_suite},
          {"switch-detection", switch_detection_suite},
          {"rot-detection", rot_detection_suite},
          {"edge-deletion", edge_deletion_suite},
          {"lattice-axioms", [](auto const&) { return lattice_suite(); }},
          {"signatures", [](auto const&) { return signature_suite(); }},
          {"ep-extension", ep_suite},
          {"maximal-tournament", tournament_suite},
          {"behaviors", [](auto const&) { return behaviors_suite(); }},
          {"back-and-forth", back_and_forth_suite},
      };
      return suites;
    }

  }  // namespace

  bool SuiteResult::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](CheckResult const& c) { return c.pass; });
  }

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& [name, fn] : registry()) {
        out.push_back(name);
      }
      out.push_back("all");
      return out;
    }();
    return names;
  }

  std::vector<SuiteResult> run_suite(std::string const& name, ExperimentConfig const& config) {
    std::vector<SuiteResult> out;
    for (auto const& [suite, fn] : registry()) {
      if (name == "all" || name == suite) {
        out.push_back(fn(config));
      }
    }
    if (out.empty()) {
      throw std::invalid_argument("unknown suite: " + name);
    }
    return out;
  }

  Json to_json(SuiteResult const& r) {
    Json checks = Json::array();
    for (auto const& c : r.checks) {
      Json j{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
      if (!c.counterexample.is_null()) {
        j["counterexample"] = c.counterexample;
      }
      checks.push_back(std::move(j));
    }
    return Json{{"suite", r.suite}, {"pass", r.pass()}, {"checks", std::move(checks)}};
  }

  std::string to_text(SuiteResult const& r) {
    std::ostringstream out;
    out << r.suite << ": " << (r.pass() ? "pass" : "FAIL") << "\n";
    for (auto const& c : r.checks) {
      out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) {
        out << " (" << c.detail << ")";
      }
      out << "\n";
      if (!c.counterexample.is_null()) {
        out << "    counterexample: " << c.counterexample.dump() << "\n";
      }
    }
    return out.str();
  }

  std::string rot_orbit_text() {
    std::ostringstream out;
    for (std::size_t i = 0; i < triangle_code_count; ++i) {
      auto const c = TriangleCode::from_index(i);
      out << code_text(c) << " -> " << rot_label(c) << "\n";
    }
    return out.str();
  }

  std::string signature_text() {
    std::ostringstream out;
    for (auto a : all_nodes) {
      out << to_string(a) << ":";
      for (auto rel : signature(a).members()) {
        out << " " << to_string(rel);
      }
      out << "\n";
    }
    return out.str();
  }

  std::string behavior_table_text(BehaviorMode mode) {
    std::ostringstream out;
    if (mode == BehaviorMode::NoConst) {
      out << "| behavior | case | verdict |\n|---|---|---|\n";
      for (auto const& b : enumerate_behaviors()) {
        auto const v = classify_behavior(b);
        out << "| " << to_string(b) << " | " << v.case_label << " | " << to_string(v.kind) << " |\n";
      }
    } else {
      out << "| on X | on Y | between | case | verdict |\n|---|---|---|---|---|\n";
      for (auto const& b : enumerate_two_orbit_behaviors()) {
        auto const v = classify_two_orbit(b);
        out << "| " << to_string(b.onX) << " | " << to_string(b.onY) << " | " << to_string(b.between)
            << " | " << v.case_label << " | " << to_string(v.kind) << " |\n";
      }
    }
    return out.str();
  }

  Json behavior_table_json(BehaviorMode mode) {
    Json rows = Json::array();
    if (mode == BehaviorMode::NoConst) {
      for (auto const& b : enumerate_behaviors()) {
        auto const v = classify_behavior(b);
        rows.push_back(Json{{"behavior", to_string(b)}, {"case", v.case_label},
                            {"verdict", std::string(to_string(v.kind))}});
      }
    } else {
      for (auto const& b : enumerate_two_orbit_behaviors()) {
        auto const v = classify_two_orbit(b);
        rows.push_back(Json{{"onX", std::string(to_string(b.onX))}, {"onY", std::string(to_string(b.onY))},
                            {"between", to_string(b.between)}, {"case", v.case_label},
                            {"verdict", std::string(to_string(v.kind))}});
      }
    }
    return rows;
  }

}  // namespace reducts
