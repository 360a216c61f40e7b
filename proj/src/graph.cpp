#include "rainbow/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include <omp.h>

namespace rainbow {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("endpoint out of range: (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") with n=" + std::to_string(n));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    g.edges_.push_back(make_edge(e.u, e.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) +
                     ")");
  }

  std::vector<int> degree(n, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[n]);
  g.incident_.resize(g.offsets_[n]);
  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so for each vertex the neighbors arrive in
  // ascending order once both directions are merged below.
  for (int id = 0; id < g.m(); ++id) {
    const Edge& e = g.edges_[id];
    g.adjacency_[fill[e.u]] = e.v;
    g.incident_[fill[e.u]++] = id;
    g.adjacency_[fill[e.v]] = e.u;
    g.incident_[fill[e.v]++] = id;
  }
  for (int v = 0; v < n; ++v) {
    const int lo = g.offsets_[v];
    const int hi = g.offsets_[v + 1];
    std::vector<std::pair<Vertex, int>> row;
    row.reserve(hi - lo);
    for (int i = lo; i < hi; ++i) row.emplace_back(g.adjacency_[i], g.incident_[i]);
    std::sort(row.begin(), row.end());
    for (int i = lo; i < hi; ++i) {
      g.adjacency_[i] = row[i - lo].first;
      g.incident_[i] = row[i - lo].second;
    }
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) list.push_back({a, b});
  return from_edges(n, list);
}

int Graph::edge_id(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return -1;
  auto nbrs = neighbors(a);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return -1;
  return incident_[offsets_[a] + (it - nbrs.begin())];
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::all(int n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return VertexSet(std::move(v));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> VertexSet::mask(int n) const {
  std::vector<char> out(n, 0);
  for (Vertex v : members_) {
    if (v < 0 || v >= n) throw GraphError("vertex set member out of range");
    out[v] = 1;
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, VertexSet{source});
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources) {
  std::vector<int> dist(g.n(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  for (Vertex s : sources) {
    if (!g.contains(s)) throw GraphError("BFS source out of range");
    dist[s] = 0;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> all_pairs_distances_serial(const Graph& g) {
  const int n = g.n();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(s) * n);
  }
  return out;
}

std::vector<int> all_pairs_distances(const Graph& g) {
  const int n = g.n();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(dynamic, 8)
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(s) * n);
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

int girth(const Graph& g) {
  const int n = g.n();
  int best = kInfinite;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    dist[root] = 0;
    parent[root] = -1;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      if (2 * dist[v] + 1 >= best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

Metrics metrics(const Graph& g) {
  Metrics out;
  const int n = g.n();
  out.min_degree = 0;
  if (n > 0) {
    out.min_degree = g.degree(0);
    for (Vertex v = 1; v < n; ++v) out.min_degree = std::min(out.min_degree, g.degree(v));
  }
  out.girth = girth(g);
  out.connected = is_connected(g);
  if (!out.connected || n == 0) return out;

  auto dist = all_pairs_distances(g);
  out.diameter = 0;
  out.radius = kInfinite;
  for (Vertex s = 0; s < n; ++s) {
    int ecc = 0;
    for (Vertex t = 0; t < n; ++t) ecc = std::max(ecc, dist[static_cast<std::size_t>(s) * n + t]);
    out.diameter = std::max(out.diameter, ecc);
    out.radius = std::min(out.radius, ecc);
  }
  return out;
}

VertexSet l_step_neighborhood(const Graph& g, const VertexSet& x, int l, NeighborhoodMode mode) {
  if (x.empty()) throw GraphError("l-step neighborhood of an empty set");
  if (l < 0) throw GraphError("negative step count");
  auto dist = bfs_distances(g, x);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (dist[v] == kUnreachable) continue;
    if (mode == NeighborhoodMode::kOpen ? dist[v] == l : dist[v] <= l) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  if (x.empty()) throw GraphError("induced subgraph on an empty set");
  InducedSubgraph out;
  out.from_parent.assign(g.n(), -1);
  for (Vertex v : x) {
    if (!g.contains(v)) throw GraphError("induced subgraph vertex out of range");
    out.from_parent[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (out.from_parent[e.u] >= 0 && out.from_parent[e.v] >= 0) {
      edges.push_back({out.from_parent[e.u], out.from_parent[e.v]});
    }
  }
  out.graph = Graph::from_edges(x.size(), edges);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, const std::vector<char>& keep) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (!keep[s] || seen[s]) continue;
    seen[s] = 1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (keep[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    out.emplace_back(queue);
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, std::vector<char>(g.n(), 1));
}

ContractionMap contract_components(const Graph& g, std::span<const VertexSet> parts) {
  const int n = g.n();
  std::vector<int> part_of(n, -1);
  for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
    if (parts[p].empty()) throw GraphError("empty contraction part");
    for (Vertex v : parts[p]) {
      if (!g.contains(v)) throw GraphError("contraction part vertex out of range");
      if (part_of[v] >= 0) {
        throw GraphError("contraction parts overlap at vertex " + std::to_string(v));
      }
      part_of[v] = p;
    }
    auto comps = connected_components(g, parts[p].mask(n));
    if (comps.size() != 1) throw GraphError("contraction part does not induce a connected subgraph");
  }

  // A quotient vertex is either a whole part or a singleton; order them by
  // their smallest original member.
  ContractionMap out;
  out.image.assign(n, -1);
  std::vector<int> part_image(parts.size(), -1);
  for (Vertex v = 0; v < n; ++v) {
    const int p = part_of[v];
    if (p < 0) {
      out.image[v] = static_cast<Vertex>(out.origin.size());
      out.origin.push_back(VertexSet{v});
    } else if (part_image[p] < 0) {
      part_image[p] = static_cast<int>(out.origin.size());
      out.image[v] = part_image[p];
      out.origin.push_back(parts[p]);
    } else {
      out.image[v] = part_image[p];
    }
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = out.image[e.u];
    const Vertex b = out.image[e.v];
    if (a != b) edges.push_back(make_edge(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.quotient = Graph::from_edges(static_cast<int>(out.origin.size()), edges);
  return out;
}

}  // namespace rainbow
