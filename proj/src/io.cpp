#include "reducts/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace reducts {

  namespace {

    [[noreturn]] void fail(std::string const& what, std::string const& where) {
      throw ParseError(what, where.empty() ? std::string("/") : where);
    }

    Vertex read_vertex(Json const& j, std::string const& where) {
      if (!j.is_number_integer() || j.get<long long>() < 0) {
        fail("expected a non-negative integer", where);
      }
      return j.get<Vertex>();
    }

    VertexSet read_set(Json const& j, std::string const& key, std::string const& where) {
      auto const path = where + "/" + key;
      if (!j.contains(key)) {
        fail("missing field '" + key + "'", where);
      }
      auto const& arr = j.at(key);
      if (!arr.is_array()) {
        fail("expected an array", path);
      }
      VertexSet out;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(read_vertex(arr[i], path + "/" + std::to_string(i)));
      }
      std::sort(out.begin(), out.end());
      if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        fail("duplicate vertex", path);
      }
      return out;
    }

    Json set_json(VertexSet const& s) {
      return Json(s);
    }

    Transform transform_at(Json const& j, std::string const& where) {
      if (!j.is_object() || !j.contains("op") || !j.at("op").is_string()) {
        fail("expected an object with a string field 'op'", where);
      }
      auto const op = j.at("op").get<std::string>();
      if (op == "reverse") {
        return reverse();
      }
      if (op == "switch") {
        return switch_set(read_set(j, "A", where));
      }
      if (op == "rot") {
        return rot(read_set(j, "A", where), read_set(j, "B", where), read_set(j, "C", where));
      }
      if (op == "graph_reverse") {
        return graph_reverse();
      }
      if (op == "graph_switch") {
        return graph_switch(read_set(j, "A", where));
      }
      if (op == "compose") {
        if (!j.contains("items") || !j.at("items").is_array()) {
          fail("compose needs an array field 'items'", where);
        }
        std::vector<Transform> items;
        auto const&            arr = j.at("items");
        for (std::size_t i = 0; i < arr.size(); ++i) {
          items.push_back(transform_at(arr[i], where + "/items/" + std::to_string(i)));
        }
        return compose(std::move(items));
      }
      fail("unknown op '" + op + "'", where + "/op");
    }

    struct TransformEncoder {
      Json operator()(op::Reverse const&) const {
        return Json{{"op", "reverse"}};
      }
      Json operator()(op::Switch const& s) const {
        return Json{{"op", "switch"}, {"A", set_json(s.A)}};
      }
      Json operator()(op::Rot const& r) const {
        return Json{{"op", "rot"}, {"A", set_json(r.A)}, {"B", set_json(r.B)}, {"C", set_json(r.C)}};
      }
      Json operator()(op::GraphReverse const&) const {
        return Json{{"op", "graph_reverse"}};
      }
      Json operator()(op::GraphSwitch const& s) const {
        return Json{{"op", "graph_switch"}, {"A", set_json(s.A)}};
      }
      Json operator()(op::Compose const& c) const {
        Json items = Json::array();
        for (auto const& t : c.items) {
          items.push_back(to_json(t));
        }
        return Json{{"op", "compose"}, {"items", std::move(items)}};
      }
    };

  }  // namespace

  Json to_json(Digraph const& g) {
    Json edges = Json::array();
    for (Vertex u = 0; u < g.size(); ++u) {
      for (Vertex v = 0; v < g.size(); ++v) {
        if (u != v && g.pair_type(u, v) == PairType::Out) {
          edges.push_back(Json::array({u, v}));
        }
      }
    }
    return Json{{"n", g.size()}, {"edges", std::move(edges)}};
  }

  Digraph digraph_from_json(Json const& j) {
    if (!j.is_object()) {
      fail("expected an object", "");
    }
    if (!j.contains("n")) {
      fail("missing field 'n'", "");
    }
    Vertex const n = read_vertex(j.at("n"), "/n");
    if (!j.contains("edges") || !j.at("edges").is_array()) {
      fail("missing array field 'edges'", "");
    }
    Digraph                                g(n);
    std::set<std::pair<Vertex, Vertex>>    seen;
    auto const&                            edges = j.at("edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto const where = "/edges/" + std::to_string(i);
      auto const& e    = edges[i];
      if (!e.is_array() || e.size() != 2) {
        fail("edge must be a two-element array", where);
      }
      Vertex const u = read_vertex(e[0], where + "/0");
      Vertex const v = read_vertex(e[1], where + "/1");
      if (u >= n || v >= n) {
        fail("edge endpoint out of range", where);
      }
      if (u == v) {
        fail("self-loop", where);
      }
      if (seen.contains({u, v})) {
        fail("duplicate edge", where);
      }
      if (seen.contains({v, u})) {
        fail("edges in both directions between " + std::to_string(u) + " and " + std::to_string(v),
             where);
      }
      seen.emplace(u, v);
      g.set(u, v, PairType::Out);
    }
    return g;
  }

  Json to_json(Transform const& t) {
    return std::visit(TransformEncoder{}, t.op);
  }

  Transform transform_from_json(Json const& j) {
    return transform_at(j, "");
  }

  std::vector<Vertex> vertex_map_from_json(Json const& j) {
    if (!j.is_array()) {
      fail("expected an array of target vertices", "");
    }
    std::vector<Vertex> f;
    for (std::size_t i = 0; i < j.size(); ++i) {
      f.push_back(read_vertex(j[i], "/" + std::to_string(i)));
    }
    return f;
  }

  Json to_json(EPReport const& r) {
    Json failures = Json::array();
    for (auto const& t : r.failures) {
      failures.push_back(Json{{"U", t.U}, {"V", t.V}, {"W", t.W}});
    }
    return Json{{"k", r.k}, {"pass", r.pass}, {"failures", std::move(failures)}};
  }

  Json to_json(RelationSet const& s) {
    Json out = Json::array();
    for (auto r : s.members()) {
      out.push_back(std::string(to_string(r)));
    }
    return out;
  }

  Json to_json(Classification const& c) {
    Json excluded = Json::object();
    for (auto const& [rel, tuple] : c.preservation.excluded_by) {
      excluded[std::string(to_string(rel))] = tuple;
    }
    Json out{{"node", std::string(to_string(c.node))},
             {"preserved", to_json(c.preservation.preserved)},
             {"excluded_by", std::move(excluded)}};
    out["exact_match"] = c.exact_match;
    if (c.minimal_candidates.size() > 1) {
      Json cands = Json::array();
      for (auto a : c.minimal_candidates) {
        cands.push_back(std::string(to_string(a)));
      }
      out["ambiguous"] = std::move(cands);
    }
    return out;
  }

  Json parse_json(std::string const& text) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError("invalid JSON", "byte " + std::to_string(e.byte));
    }
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw IoError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_file(std::filesystem::path const& path, std::string const& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot write " + path.string());
    }
    out << content;
    if (!out) {
      throw IoError("write failed for " + path.string());
    }
  }

  std::string dump(Json const& j) {
    return j.dump() + "\n";
  }

  Digraph load_digraph(std::filesystem::path const& path) {
    return digraph_from_json(parse_json(read_file(path)));
  }

  Transform load_transform(std::filesystem::path const& path) {
    return transform_from_json(parse_json(read_file(path)));
  }

  std::vector<Vertex> load_vertex_map(std::filesystem::path const& path) {
    return vertex_map_from_json(parse_json(read_file(path)));
  }

}  // namespace reducts
