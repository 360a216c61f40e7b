#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rainbow/coloring.hpp"
#include "rainbow/diameter_builder.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/planar.hpp"

namespace rainbow {

// Malformed input; line and column are 1-based (column 0 when the whole line
// is at fault).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// "n m" then m lines "u v". Blank lines after the last edge are ignored.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// "n" then one line "v: w1 w2 ..." per vertex, counterclockwise.
PlanarEmbedding parse_rotation(std::string_view text);
std::string emit_rotation(const PlanarEmbedding& emb);

// {"n": int, "colors": int, "edges": [{"u", "v", "c"}]}, edges in id order.
// An optional "paths" array carries a construction's path system.
struct ColoringDocument {
  int n = 0;
  int colors = 0;
  struct Entry {
    Vertex u;
    Vertex v;
    Color c;
  };
  std::vector<Entry> edges;
  std::optional<PathSystem> paths;
};

ColoringDocument coloring_document(const Graph& g, const EdgeColoring& col,
                                   const std::optional<PathSystem>& paths = std::nullopt);
std::string emit_coloring_json(const ColoringDocument& doc);
// Throws ParseError (line 0) on schema violations.
ColoringDocument parse_coloring_json(std::string_view text);
// Maps a document onto g's edge ids; throws ColoringError when the edge sets
// or vertex counts differ or the declared color count is wrong.
EdgeColoring to_edge_coloring(const Graph& g, const ColoringDocument& doc);

// Graphviz with a fixed 12-color palette cycled by color id.
std::string emit_coloring_dot(const Graph& g, const EdgeColoring& col);

// Sidecar reports. Bounds are emitted as the integer ceiling plus the exact
// fraction and its decimal value.
nlohmann::ordered_json diameter_report(const DiameterConstruction& dc);
nlohmann::ordered_json planar_report(const PlanarConstruction& pc);

}  // namespace rainbow
