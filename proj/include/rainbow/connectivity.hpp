#pragma once

#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using Path = std::vector<Vertex>;

// k internally vertex-disjoint u1 -> u2 paths.
struct PathSystem {
  Vertex u1 = 0;
  Vertex u2 = 0;
  std::vector<Path> paths;

  int k() const { return static_cast<int>(paths.size()); }
  // X_i: vertices of path i other than the endpoints.
  VertexSet interior(int i) const;
};

class ConnectivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maximum number of internally disjoint a-b paths, capped at `limit`
// (unit-capacity max-flow on the split-vertex digraph). An a-b edge counts as
// one path.
int local_connectivity(const Graph& g, Vertex a, Vertex b, int limit = kInfinite);

// kappa(G); n-1 for complete graphs, 0 for disconnected graphs. The parallel
// variant spreads the sink loop of Even's algorithm over OpenMP threads.
int vertex_connectivity(const Graph& g);
int vertex_connectivity_serial(const Graph& g);

// Exactly k paths sorted by (length, vertex sequence). Throws
// ConnectivityError when the flow value is below k.
PathSystem disjoint_paths(const Graph& g, Vertex u1, Vertex u2, int k);

// Replaces each path by the lexicographically smallest shortest u1-u2 path
// inside its own vertex set. The u1-u2 edge, if present, replaces the first
// longer path when no path is that edge already; otherwise it is skipped. The
// result is chordless apart from a possible u1-u2 chord.
PathSystem make_induced(const Graph& g, const PathSystem& ps);

// Independent validity check: endpoints, adjacency, simplicity, pairwise
// disjoint interiors. Returns an empty string when valid.
std::string validate_path_system(const Graph& g, const PathSystem& ps);

// True if no edge joins two non-consecutive vertices of the path, ignoring the
// edge between its endpoints.
bool is_chordless(const Graph& g, const Path& path);

}  // namespace rainbow
