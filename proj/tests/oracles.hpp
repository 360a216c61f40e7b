#pragma once

// Slow, obviously-correct reference computations the tests compare against.
// None of them call into the library beyond the Graph accessors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace oracle {

using rainbow::Graph;
using rainbow::Vertex;

inline constexpr int kFar = 1 << 20;

// Floyd-Warshall over the adjacency matrix; kFar for unreachable pairs.
inline std::vector<std::vector<int>> distances(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Connectivity of g with the vertices in `removed` deleted (empty counts as
// connected).
inline bool connected_without(const Graph& g, std::uint32_t removed) {
  const int n = g.n();
  int start = -1;
  int alive = 0;
  for (int v = 0; v < n; ++v) {
    if (!(removed >> v & 1)) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if ((removed >> w & 1) || seen[w]) continue;
      seen[w] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  return count == alive;
}

// Smallest vertex set whose removal disconnects g; n - 1 when no such set
// exists (complete graphs), 0 when g is already disconnected. n <= 20.
inline int min_vertex_cut(const Graph& g) {
  const int n = g.n();
  if (!connected_without(g, 0)) return 0;
  int best = std::max(0, n - 1);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size >= best || n - size < 2) continue;
    if (!connected_without(g, s)) best = size;
  }
  return best;
}

// Smallest set of vertices other than a, b separating non-adjacent a and b.
inline int min_separator(const Graph& g, Vertex a, Vertex b) {
  const int n = g.n();
  int best = n;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if ((s >> a & 1) || (s >> b & 1)) continue;
    const int size = __builtin_popcount(s);
    if (size >= best) continue;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{a};
    seen[a] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if ((s >> w & 1) || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    if (!seen[b]) best = size;
  }
  return best;
}

// Every simple path from a to b, by DFS.
inline std::vector<std::vector<Vertex>> simple_paths(const Graph& g, Vertex a, Vertex b) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{a};
  std::vector<char> on(g.n(), 0);
  on[a] = 1;
  std::function<void(Vertex)> dfs = [&](Vertex v) {
    if (v == b) {
      out.push_back(path);
      return;
    }
    for (Vertex w : g.neighbors(v)) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on[w] = 0;
    }
  };
  dfs(a);
  return out;
}

inline bool rainbow(const Graph& g, const std::vector<int>& colors, const std::vector<Vertex>& p) {
  std::set<int> used;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!used.insert(colors[g.edge_id(p[i], p[i + 1])]).second) return false;
  }
  return true;
}

inline bool has_rainbow_path(const Graph& g, const std::vector<int>& colors, Vertex a, Vertex b) {
  for (const auto& p : simple_paths(g, a, b)) {
    if (rainbow(g, colors, p)) return true;
  }
  return false;
}

inline bool rainbow_connected(const Graph& g, const std::vector<int>& colors) {
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b)
      if (!has_rainbow_path(g, colors, a, b)) return false;
  return true;
}

// rc by trying every coloring with k = 1, 2, ... colors. Only for tiny m.
inline int brute_rc(const Graph& g) {
  const int m = g.m();
  if (g.n() <= 1) return 0;
  for (int k = 1; k <= m; ++k) {
    std::vector<int> colors(m, 0);
    for (;;) {
      if (rainbow_connected(g, colors)) return k;
      int i = 0;
      while (i < m && ++colors[i] == k) colors[i++] = 0;
      if (i == m) break;
    }
  }
  return m;
}

}  // namespace oracle
