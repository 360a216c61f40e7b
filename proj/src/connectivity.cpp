#include "rainbow/connectivity.hpp"

#include <algorithm>
#include <string>

namespace rainbow {
namespace {

// Unit-capacity flow network on the split-vertex digraph: vertex v becomes
// in-node 2v and out-node 2v+1 joined by a capacity-1 arc.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, Vertex source, Vertex sink) : source_(source), sink_(sink) {
    const int nodes = 2 * g.n();
    arcs_.resize(nodes);
    for (Vertex v = 0; v < g.n(); ++v) {
      if (v != source && v != sink) add_arc(in(v), out(v));
    }
    for (Vertex v = 0; v < g.n(); ++v) {
      for (Vertex w : g.neighbors(v)) {
        if (w == source || v == sink) continue;
        add_arc(out(v), in(w));
      }
    }
  }

  // Augments along BFS-shortest residual paths until `limit` is reached.
  int run(int limit) {
    int flow = 0;
    const int nodes = static_cast<int>(arcs_.size());
    std::vector<int> prev_node(nodes);
    std::vector<int> prev_arc(nodes);
    std::vector<int> queue;
    while (flow < limit) {
      std::fill(prev_node.begin(), prev_node.end(), -1);
      const int s = out(source_);
      const int t = in(sink_);
      prev_node[s] = s;
      queue.assign(1, s);
      for (std::size_t head = 0; head < queue.size() && prev_node[t] < 0; ++head) {
        const int x = queue[head];
        for (int a = 0; a < static_cast<int>(arcs_[x].size()); ++a) {
          const Arc& arc = arcs_[x][a];
          if (arc.cap > 0 && prev_node[arc.to] < 0) {
            prev_node[arc.to] = x;
            prev_arc[arc.to] = a;
            queue.push_back(arc.to);
          }
        }
      }
      if (prev_node[t] < 0) break;
      for (int y = t; y != s; y = prev_node[y]) {
        Arc& arc = arcs_[prev_node[y]][prev_arc[y]];
        arc.cap -= 1;
        arcs_[y][arc.rev].cap += 1;
      }
      ++flow;
    }
    return flow;
  }

  // Follows saturated forward arcs from the source; each walk ends at the sink.
  std::vector<Path> decompose() {
    std::vector<Path> paths;
    const int s = out(source_);
    const int t = in(sink_);
    for (;;) {
      Path path{source_};
      int x = s;
      bool found = false;
      while (x != t) {
        found = false;
        for (Arc& arc : arcs_[x]) {
          if (arc.forward && arc.cap == 0 && !arc.used) {
            arc.used = true;
            x = arc.to;
            found = true;
            break;
          }
        }
        if (!found) break;
        if (x % 2 == 0 && x != t) {
          // in-node: cross to the out-node of the same vertex
          path.push_back(x / 2);
          Arc* split = nullptr;
          for (Arc& arc : arcs_[x]) {
            if (arc.forward && arc.to == x + 1) split = &arc;
          }
          split->used = true;
          x = x + 1;
        }
      }
      if (!found) break;
      path.push_back(sink_);
      paths.push_back(std::move(path));
    }
    return paths;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int rev;
    bool forward;
    bool used = false;
  };

  static int in(Vertex v) { return 2 * v; }
  static int out(Vertex v) { return 2 * v + 1; }

  void add_arc(int from, int to) {
    arcs_[from].push_back({to, 1, static_cast<int>(arcs_[to].size()), true});
    arcs_[to].push_back({from, 0, static_cast<int>(arcs_[from].size()) - 1, false});
  }

  Vertex source_;
  Vertex sink_;
  std::vector<std::vector<Arc>> arcs_;
};

void sort_paths(std::vector<Path>& paths) {
  std::sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

bool is_complete(const Graph& g) {
  const long long n = g.n();
  return g.m() == n * (n - 1) / 2;
}

}  // namespace

VertexSet PathSystem::interior(int i) const {
  const Path& p = paths.at(i);
  if (p.size() <= 2) return {};
  return VertexSet(std::vector<Vertex>(p.begin() + 1, p.end() - 1));
}

int local_connectivity(const Graph& g, Vertex a, Vertex b, int limit) {
  if (!g.contains(a) || !g.contains(b) || a == b) throw GraphError("invalid flow endpoints");
  SplitFlow flow(g, a, b);
  return flow.run(limit);
}

int vertex_connectivity_serial(const Graph& g) {
  const int n = g.n();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (is_complete(g)) return n - 1;
  int best = n - 1;
  for (Vertex v = 0; v < n; ++v) best = std::min(best, g.degree(v));
  for (Vertex i = 0; i <= best && i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      best = std::min(best, local_connectivity(g, i, j, best));
    }
  }
  return best;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.n();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (is_complete(g)) return n - 1;
  int best = n - 1;
  for (Vertex v = 0; v < n; ++v) best = std::min(best, g.degree(v));
  for (Vertex i = 0; i <= best && i < n; ++i) {
    const int cap = best;
    int round = cap;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : round)
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      round = std::min(round, local_connectivity(g, i, j, cap));
    }
    best = std::min(best, round);
  }
  return best;
}

PathSystem disjoint_paths(const Graph& g, Vertex u1, Vertex u2, int k) {
  if (u1 == u2) throw GraphError("disjoint paths need distinct endpoints");
  if (!g.contains(u1) || !g.contains(u2)) throw GraphError("path endpoint out of range");
  SplitFlow flow(g, u1, u2);
  const int value = flow.run(k);
  if (value < k) {
    throw ConnectivityError("only " + std::to_string(value) + " internally disjoint paths between " +
                            std::to_string(u1) + " and " + std::to_string(u2) + ", need " +
                            std::to_string(k));
  }
  PathSystem ps{u1, u2, flow.decompose()};
  sort_paths(ps.paths);
  return ps;
}

PathSystem make_induced(const Graph& g, const PathSystem& ps) {
  PathSystem out{ps.u1, ps.u2, {}};
  // The u1-u2 edge can serve as one path only.
  bool edge_taken = false;
  for (const Path& path : ps.paths) edge_taken |= path.size() == 2;
  for (const Path& path : ps.paths) {
    if (path.size() <= 2) {
      out.paths.push_back(path);
      continue;
    }
    if (!edge_taken && g.has_edge(ps.u1, ps.u2)) {
      out.paths.push_back({ps.u1, ps.u2});
      edge_taken = true;
      continue;
    }
    // BFS from u2 inside the path's vertex set, skipping the u1-u2 edge.
    VertexSet inside{std::vector<Vertex>(path)};
    auto mask = inside.mask(g.n());
    std::vector<int> dist(g.n(), kUnreachable);
    std::vector<Vertex> queue{ps.u2};
    dist[ps.u2] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (!mask[w] || dist[w] != kUnreachable) continue;
        if ((v == ps.u2 && w == ps.u1) || (v == ps.u1 && w == ps.u2)) continue;
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
    Path shortcut{ps.u1};
    Vertex cur = ps.u1;
    while (cur != ps.u2) {
      Vertex next = -1;
      for (Vertex w : g.neighbors(cur)) {
        if (!mask[w] || dist[w] != dist[cur] - 1) continue;
        if (cur == ps.u1 && w == ps.u2) continue;
        next = w;
        break;
      }
      shortcut.push_back(next);
      cur = next;
    }
    out.paths.push_back(std::move(shortcut));
  }
  sort_paths(out.paths);
  return out;
}

bool is_chordless(const Graph& g, const Path& path) {
  const int len = static_cast<int>(path.size());
  for (int i = 0; i < len; ++i) {
    for (int j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.has_edge(path[i], path[j])) return false;
    }
  }
  return true;
}

std::string validate_path_system(const Graph& g, const PathSystem& ps) {
  if (ps.u1 == ps.u2) return "endpoints coincide";
  std::vector<int> owner(g.n(), -1);
  for (int i = 0; i < ps.k(); ++i) {
    const Path& p = ps.paths[i];
    const std::string tag = "path " + std::to_string(i) + ": ";
    if (p.size() < 2) return tag + "too short";
    if (p.front() != ps.u1 || p.back() != ps.u2) return tag + "wrong endpoints";
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      if (!g.has_edge(p[j], p[j + 1])) return tag + "non-adjacent consecutive vertices";
    }
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      const Vertex v = p[j];
      if (v == ps.u1 || v == ps.u2) return tag + "endpoint repeated inside";
      if (owner[v] == i) return tag + "repeats vertex " + std::to_string(v);
      if (owner[v] >= 0) return tag + "shares interior vertex " + std::to_string(v);
      owner[v] = i;
    }
    if (p.size() == 2) {
      for (int j = 0; j < i; ++j) {
        if (ps.paths[j].size() == 2) return tag + "duplicate direct edge";
      }
    }
  }
  return {};
}

}  // namespace rainbow
