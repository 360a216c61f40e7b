#include "rainbow/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <regex>

namespace rainbow {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw GeneratorError("empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

Graph clique_tower(int kappa, int layers) {
  if (kappa < 2 || layers < 1) throw GeneratorError("clique tower needs kappa >= 2, layers >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i <= layers; ++i) {
    for (int a = 0; a < kappa; ++a) {
      for (int b = a + 1; b < kappa; ++b) edges.push_back({i * kappa + a, i * kappa + b});
      if (i < layers) edges.push_back({i * kappa + a, (i + 1) * kappa + a});
    }
  }
  return Graph::from_edges(kappa * (layers + 1), edges);
}

namespace {

struct Point {
  double x, y, z;
};

Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Point cross(Point a, Point b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Rotation system of a convex polyhedron centered at the origin: neighbors
// sorted counterclockwise as seen from outside.
PlanarEmbedding polyhedron(const std::vector<Point>& pts, double edge_length) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<Vertex>> rotation(n);
  for (int v = 0; v < n; ++v) {
    const Point normal = pts[v];
    std::vector<std::pair<double, Vertex>> around;
    Point e1{0, 0, 0};
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      const Point d = sub(pts[w], pts[v]);
      if (std::abs(std::sqrt(dot(d, d)) - edge_length) > 1e-6) continue;
      if (dot(e1, e1) == 0) {
        const double s = dot(d, normal) / dot(normal, normal);
        e1 = {d.x - s * normal.x, d.y - s * normal.y, d.z - s * normal.z};
      }
      const Point e2 = cross(normal, e1);
      around.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), w);
    }
    std::sort(around.begin(), around.end());
    for (auto& [angle, w] : around) rotation[v].push_back(w);
  }
  return PlanarEmbedding::from_rotation(std::move(rotation));
}

}  // namespace

PlanarEmbedding tetrahedron() {
  return polyhedron({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}, std::sqrt(8.0));
}

PlanarEmbedding octahedron() {
  return polyhedron({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
                    std::sqrt(2.0));
}

PlanarEmbedding icosahedron() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Point> pts;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-phi, phi}) {
      pts.push_back({0, a, b});
      pts.push_back({a, b, 0});
      pts.push_back({b, 0, a});
    }
  }
  return polyhedron(pts, 2.0);
}

PlanarEmbedding cycle_embedding(int n) {
  if (n < 3) throw GeneratorError("cycle needs at least 3 vertices");
  std::vector<std::vector<Vertex>> rotation(n);
  for (int v = 0; v < n; ++v) rotation[v] = {(v + n - 1) % n, (v + 1) % n};
  return PlanarEmbedding::from_rotation(std::move(rotation));
}

PlanarEmbedding stacked_triangulation(int n, std::uint64_t seed) {
  if (n < 4) throw GeneratorError("stacked triangulation needs n >= 4");
  PlanarEmbedding base = tetrahedron();
  std::vector<std::vector<Vertex>> rotation = base.rotations();
  std::vector<std::array<Vertex, 3>> faces;
  for (const auto& f : base.faces()) faces.push_back({f[0], f[1], f[2]});

  auto insert_after = [&](Vertex at, Vertex after, Vertex x) {
    auto& rot = rotation[at];
    auto it = std::find(rot.begin(), rot.end(), after);
    rot.insert(it + 1, x);
  };

  SplitMix64 rng(seed);
  for (Vertex x = 4; x < n; ++x) {
    const std::size_t pick = rng.below(faces.size());
    const auto [a, b, c] = faces[pick];
    // Face a->b->c: c follows a around b, a follows b around c, b follows c around a.
    insert_after(b, a, x);
    insert_after(c, b, x);
    insert_after(a, c, x);
    rotation.push_back({a, c, b});
    faces[pick] = {a, b, x};
    faces.push_back({b, c, x});
    faces.push_back({c, a, x});
  }
  return PlanarEmbedding::from_rotation(std::move(rotation));
}

Graph add_random_chords(const Graph& g, int chords, std::uint64_t seed) {
  std::vector<Edge> missing;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!g.has_edge(u, v)) missing.push_back({u, v});
    }
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges = g.edges();
  for (int i = 0; i < chords && !missing.empty(); ++i) {
    const std::size_t pick = rng.below(missing.size());
    edges.push_back(missing[pick]);
    missing.erase(missing.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Graph::from_edges(g.n(), edges);
}

Graph random_connected_graph(int n, int extra_num, int extra_den, std::uint64_t seed) {
  if (n < 1) throw GeneratorError("empty graph");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  std::vector<char> present(static_cast<std::size_t>(n) * n, 0);
  for (Vertex v = 1; v < n; ++v) {
    const Vertex u = static_cast<Vertex>(rng.below(v));
    edges.push_back({u, v});
    present[static_cast<std::size_t>(u) * n + v] = 1;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (present[static_cast<std::size_t>(u) * n + v]) continue;
      if (rng.below(extra_den) < static_cast<std::uint64_t>(extra_num)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GeneratorError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
    edges.push_back({i, i + 5});
  }
  return Graph::from_edges(10, edges);
}

NamedInstance named(const std::string& name) {
  if (name == "petersen") return petersen_graph();
  if (name == "octahedron") return octahedron();
  if (name == "icosahedron") return icosahedron();
  std::smatch match;
  static const std::regex pattern(R"((K|P|C|star)(\d+))");
  if (std::regex_match(name, match, pattern)) {
    const int size = std::stoi(match[2].str());
    const std::string family = match[1].str();
    if (family == "K") {
      if (size == 4) return tetrahedron();
      if (size < 1) throw GeneratorError("K needs n >= 1");
      return complete_graph(size);
    }
    if (family == "P") {
      if (size < 1) throw GeneratorError("P needs n >= 1");
      return path_graph(size);
    }
    if (family == "C") return cycle_embedding(size);
    return star_graph(size);
  }
  throw GeneratorError("unknown instance name: " + name);
}

}  // namespace rainbow
