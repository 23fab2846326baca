// JSON encodings for digraphs, transforms, vertex maps and reports.

#ifndef REDUCTS_IO_HPP_
#define REDUCTS_IO_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "reducts/canonical_behaviors.hpp"
#include "reducts/digraph.hpp"
#include "reducts/generic_builder.hpp"
#include "reducts/lattice.hpp"
#include "reducts/transforms.hpp"

namespace reducts {

  using Json = nlohmann::ordered_json;

  // Malformed input. `where` is a byte offset for syntax errors and a JSON
  // pointer for structural ones.
  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& what, std::string where)
        : std::runtime_error(what + " at " + where), where_(std::move(where)) {}

    std::string const& where() const noexcept {
      return where_;
    }

   private:
    std::string where_;
  };

  class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  Json    to_json(Digraph const& g);
  Digraph digraph_from_json(Json const& j);

  Json      to_json(Transform const& t);
  Transform transform_from_json(Json const& j);

  std::vector<Vertex> vertex_map_from_json(Json const& j);

  Json to_json(EPReport const& r);
  Json to_json(Classification const& c);
  Json to_json(RelationSet const& s);

  // Syntax errors become ParseError with the byte offset.
  Json parse_json(std::string const& text);

  std::string read_file(std::filesystem::path const& path);
  void        write_file(std::filesystem::path const& path, std::string const& content);

  // Compact one-line dump followed by a newline.
  std::string dump(Json const& j);

  Digraph   load_digraph(std::filesystem::path const& path);
  Transform load_transform(std::filesystem::path const& path);
  std::vector<Vertex> load_vertex_map(std::filesystem::path const& path);

}  // namespace reducts

#endif  // REDUCTS_IO_HPP_
