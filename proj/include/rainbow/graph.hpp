#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = int;

inline constexpr int kInfinite = std::numeric_limits<int>::max();
inline constexpr int kUnreachable = -1;

// Thrown for malformed graphs and violated preconditions on graph queries.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Simple undirected graph over the dense vertex ids 0..n-1. Edges are kept
// sorted lexicographically; an edge's index in that order is its edge id.
// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws GraphError on out-of-range endpoints, self-loops and duplicates.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  // Edge ids parallel to neighbors(v).
  std::span<const int> incident_edges(Vertex v) const {
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b) >= 0; }
  // -1 when a and b are not adjacent.
  int edge_id(Vertex a, Vertex b) const;

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<int> incident_;
};

// A set of vertex ids, kept sorted and duplicate-free.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet all(int n);

  const std::vector<Vertex>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // Membership mask of length n.
  std::vector<char> mask(int n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

struct Metrics {
  bool connected = false;
  int diameter = kInfinite;  // kInfinite when disconnected
  int radius = kInfinite;    // kInfinite when disconnected
  int girth = kInfinite;     // kInfinite for forests
  int min_degree = 0;
};

// Single-source BFS distances; kUnreachable for vertices in other components.
std::vector<int> bfs_distances(const Graph& g, Vertex source);
std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources);

// Row-major n*n distance matrix. The parallel variant splits sources across
// OpenMP threads; the serial one is the reference.
std::vector<int> all_pairs_distances(const Graph& g);
std::vector<int> all_pairs_distances_serial(const Graph& g);

bool is_connected(const Graph& g);

// Diameter and radius come from all-pairs BFS. Girth is the minimum over
// BFS roots of d(u)+d(w)+1 for non-tree edges uw, O(nm) overall.
Metrics metrics(const Graph& g);
int girth(const Graph& g);

enum class NeighborhoodMode { kOpen, kClosed };

// N^l(X) = {v : d(v,X) = l} in open mode, N^l[X] = {v : d(v,X) <= l} in closed
// mode. Distances to a set use the minimum over its members.
VertexSet l_step_neighborhood(const Graph& g, const VertexSet& x, int l, NeighborhoodMode mode);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // sub id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> sub id, -1 outside
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

// Quotient of g in which every part is merged into one vertex. Quotient
// vertices are ordered by the smallest original vertex they represent.
struct ContractionMap {
  Graph quotient;
  std::vector<VertexSet> origin;  // quotient vertex -> original vertices
  std::vector<Vertex> image;      // original vertex -> quotient vertex
};

ContractionMap contract_components(const Graph& g, std::span<const VertexSet> parts);

// Connected components, each as a sorted VertexSet, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g, const std::vector<char>& keep);

}  // namespace rainbow
