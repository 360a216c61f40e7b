#include "rainbow/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <sstream>

namespace rainbow {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) +
                                        (column > 0 ? ", column " + std::to_string(column) : "") +
                                        ": " + what
                                  : what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{++number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

int to_int(const Line& line, const Token& tok, const char* what) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) {
    throw ParseError(line.number, tok.column,
                     std::string("expected non-negative integer ") + what + ", got '" +
                         std::string(tok.text) + "'");
  }
  return value;
}

// Lines holding content, with trailing blank lines dropped; blank lines in the
// middle are errors for the line-oriented formats.
std::vector<Line> content_lines(std::string_view text) {
  auto lines = split_lines(text);
  while (!lines.empty() && lines.back().tokens.empty()) lines.pop_back();
  return lines;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 0, "missing header 'n m'");
  const Line& header = lines[0];
  if (header.tokens.size() != 2) throw ParseError(1, 0, "header must be 'n m'");
  const int n = to_int(header, header.tokens[0], "vertex count");
  const int m = to_int(header, header.tokens[1], "edge count");
  if (static_cast<int>(lines.size()) - 1 != m) {
    throw ParseError(static_cast<int>(lines.size()), 0,
                     "header declares " + std::to_string(m) + " edges but " +
                         std::to_string(lines.size() - 1) + " edge lines follow");
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) throw ParseError(line.number, 0, "edge line must be 'u v'");
    std::array<int, 2> ends{};
    for (int j = 0; j < 2; ++j) {
      ends[j] = to_int(line, line.tokens[j], "endpoint");
      if (ends[j] >= n) {
        throw ParseError(line.number, line.tokens[j].column,
                         "endpoint " + std::to_string(ends[j]) + " out of range for n = " +
                             std::to_string(n));
      }
    }
    if (ends[0] == ends[1]) throw ParseError(line.number, 0, "self-loop");
    const Edge e = make_edge(ends[0], ends[1]);
    if (!seen.insert(e).second) throw ParseError(line.number, 0, "duplicate edge");
    edges.push_back(e);
  }
  return Graph::from_edges(n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

PlanarEmbedding parse_rotation(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 0, "missing vertex count");
  if (lines[0].tokens.size() != 1) throw ParseError(1, 0, "first line must be 'n'");
  const int n = to_int(lines[0], lines[0].tokens[0], "vertex count");
  if (static_cast<int>(lines.size()) - 1 != n) {
    throw ParseError(static_cast<int>(lines.size()), 0,
                     "expected " + std::to_string(n) + " rotation lines, found " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Vertex>> rotation(n);
  std::vector<char> given(n, 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.empty()) throw ParseError(line.number, 0, "blank rotation line");
    Token head = line.tokens[0];
    if (head.text.size() < 2 || head.text.back() != ':') {
      throw ParseError(line.number, head.column, "expected 'v:'");
    }
    head.text.remove_suffix(1);
    const int v = to_int(line, head, "vertex");
    if (v >= n) throw ParseError(line.number, head.column, "vertex out of range");
    if (given[v]) throw ParseError(line.number, head.column, "vertex listed twice");
    given[v] = 1;
    for (std::size_t j = 1; j < line.tokens.size(); ++j) {
      const int w = to_int(line, line.tokens[j], "neighbor");
      if (w >= n) throw ParseError(line.number, line.tokens[j].column, "neighbor out of range");
      rotation[v].push_back(w);
    }
  }
  // Symmetry is checked here so that errors point at a line.
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rotation[v]) {
      if (std::find(rotation[w].begin(), rotation[w].end(), v) == rotation[w].end()) {
        throw ParseError(0, 0,
                         "rotation is not symmetric: " + std::to_string(v) + " lists " +
                             std::to_string(w) + " but not conversely");
      }
    }
  }
  try {
    return PlanarEmbedding::from_rotation(std::move(rotation));
  } catch (const EmbeddingError& e) {
    throw ParseError(0, 0, e.what());
  }
}

std::string emit_rotation(const PlanarEmbedding& emb) {
  std::ostringstream out;
  out << emb.graph().n() << '\n';
  for (Vertex v = 0; v < emb.graph().n(); ++v) {
    out << v << ':';
    for (Vertex w : emb.rotation(v)) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

ColoringDocument coloring_document(const Graph& g, const EdgeColoring& col,
                                   const std::optional<PathSystem>& paths) {
  if (col.m() != g.m()) throw ColoringError("coloring does not match the graph");
  if (!col.is_total()) throw ColoringError("coloring is partial");
  ColoringDocument doc;
  doc.n = g.n();
  doc.colors = col.palette_size();
  for (int e = 0; e < g.m(); ++e) doc.edges.push_back({g.edge(e).u, g.edge(e).v, col[e]});
  doc.paths = paths;
  return doc;
}

std::string emit_coloring_json(const ColoringDocument& doc) {
  nlohmann::ordered_json j;
  j["n"] = doc.n;
  j["colors"] = doc.colors;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : doc.edges) {
    nlohmann::ordered_json rec;
    rec["u"] = e.u;
    rec["v"] = e.v;
    rec["c"] = e.c;
    j["edges"].push_back(std::move(rec));
  }
  if (doc.paths) {
    nlohmann::ordered_json ps;
    ps["u1"] = doc.paths->u1;
    ps["u2"] = doc.paths->u2;
    ps["paths"] = doc.paths->paths;
    j["paths"] = std::move(ps);
  }
  return j.dump() + "\n";
}

ColoringDocument parse_coloring_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, 0, std::string("invalid JSON: ") + e.what());
  }
  auto need_int = [](const nlohmann::json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key) || !obj[key].is_number_integer()) {
      throw ParseError(0, 0, std::string("missing integer field '") + key + "'");
    }
    return obj[key].get<int>();
  };
  ColoringDocument doc;
  doc.n = need_int(j, "n");
  doc.colors = need_int(j, "colors");
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError(0, 0, "missing 'edges' array");
  for (const auto& rec : j["edges"]) {
    doc.edges.push_back({need_int(rec, "u"), need_int(rec, "v"), need_int(rec, "c")});
  }
  if (j.contains("paths")) {
    const auto& ps = j["paths"];
    PathSystem system;
    system.u1 = need_int(ps, "u1");
    system.u2 = need_int(ps, "u2");
    try {
      system.paths = ps.at("paths").get<std::vector<Path>>();
    } catch (const nlohmann::json::exception&) {
      throw ParseError(0, 0, "malformed 'paths' field");
    }
    doc.paths = std::move(system);
  }
  return doc;
}

EdgeColoring to_edge_coloring(const Graph& g, const ColoringDocument& doc) {
  if (doc.n != g.n()) {
    throw ColoringError("coloring is for " + std::to_string(doc.n) + " vertices, graph has " +
                        std::to_string(g.n()));
  }
  EdgeColoring col(g);
  for (const auto& e : doc.edges) {
    const int id = g.contains(e.u) && g.contains(e.v) ? g.edge_id(e.u, e.v) : -1;
    if (id < 0) {
      throw ColoringError("coloring lists " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                          ", which is not an edge");
    }
    if (col.is_colored(id)) throw ColoringError("edge listed twice in coloring");
    if (e.c < 0) throw ColoringError("negative color id");
    col.set(id, e.c);
  }
  if (!col.is_total()) throw ColoringError("coloring leaves edges uncolored");
  if (col.palette_size() != doc.colors) {
    throw ColoringError("declared " + std::to_string(doc.colors) + " colors, found " +
                        std::to_string(col.palette_size()));
  }
  return col;
}

std::string emit_coloring_dot(const Graph& g, const EdgeColoring& col) {
  static const std::array<const char*, 12> palette = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};
  if (!col.is_total()) throw ColoringError("coloring is partial");
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (int e = 0; e < g.m(); ++e) {
    const Color c = col[e];
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v << " [color=\"" << palette[c % 12]
        << "\", label=\"" << c << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

nlohmann::ordered_json rational_json(const Rational& r) {
  nlohmann::ordered_json j;
  j["ceil"] = r.ceil();
  j["exact"] = r.str();
  j["decimal"] = r.to_double();
  return j;
}

}  // namespace

nlohmann::ordered_json diameter_report(const DiameterConstruction& dc) {
  nlohmann::ordered_json j;
  j["kappa"] = dc.kappa;
  j["n"] = dc.n;
  j["diam"] = dc.diameter;
  j["c"] = dc.deficit.str();
  j["bound"] = dc.claimed_bound;
  j["palette"] = dc.palette;
  j["verified"] = dc.verified();
  j["bound_met"] = dc.bound_met();
  j["bound_exact"] = rational_json(diameter_bound(dc.kappa, dc.n, dc.diameter));
  j["connectivity"] = dc.connectivity;
  j["contracted"] = dc.contracted_count;
  j["spine_palette"] = dc.spine_palette;
  j["level_max"] = dc.level_max;
  j["level_bound"] = dc.level_bound;
  j["level_bound_ok"] = dc.level_bound_ok;
  j["contracted_palette"] = dc.contracted_palette;
  j["contracted_bound"] = dc.contracted_bound;
  j["contracted_bound_ok"] = dc.contracted_bound_ok;
  if (dc.verification.failing_pair) {
    j["failing_pair"] = {dc.verification.failing_pair->first, dc.verification.failing_pair->second};
  }
  return j;
}

nlohmann::ordered_json planar_report(const PlanarConstruction& pc) {
  nlohmann::ordered_json j;
  j["kappa"] = pc.kappa;
  j["n"] = pc.n;
  j["diam"] = pc.diameter;
  j["c"] = (Rational(pc.n, pc.kappa) - Rational(pc.diameter)).str();
  j["bound"] = pc.proof_bound.ceil();
  j["palette"] = pc.palette;
  j["verified"] = pc.verified();
  j["t"] = pc.layers.t();
  std::vector<int> sizes;
  for (const auto& layer : pc.layers.layers) sizes.push_back(layer.size());
  j["layer_sizes"] = sizes;
  j["A"] = pc.plan.selected;
  j["bound_met"] = pc.bound_met();
  j["proof_bound"] = rational_json(pc.proof_bound);
  j["headline_bound"] = rational_json(pc.headline_bound);
  j["dominating_bound"] = rational_json(pc.dominating_bound);
  j["residue"] = pc.plan.residue;
  j["dominating_size"] = pc.plan.dominating.size();
  j["dominating_palette"] = pc.dominating.palette;
  j["dominating_verified"] = pc.dominating.verification.rainbow_connected;
  j["dominates"] = pc.plan.dominates;
  j["layer_fallbacks"] = pc.dominating.layer_fallbacks;
  j["fresh_colors"] = pc.extension.fresh_colors;
  j["extension_budget"] = pc.extension.budget;
  j["extension_primary"] = pc.extension.primary;
  j["face_fallback"] = pc.face_fallback;
  return j;
}

}  // namespace rainbow
