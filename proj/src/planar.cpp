#include "rainbow/planar.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "rainbow/connectivity.hpp"

namespace rainbow {

PlanarEmbedding::PlanarEmbedding(Graph graph, std::vector<std::vector<Vertex>> rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  if (static_cast<int>(rotation_.size()) != graph_.n()) {
    throw EmbeddingError("rotation system has " + std::to_string(rotation_.size()) +
                         " entries for " + std::to_string(graph_.n()) + " vertices");
  }
  for (Vertex v = 0; v < graph_.n(); ++v) {
    std::vector<Vertex> sorted = rotation_[v];
    std::sort(sorted.begin(), sorted.end());
    auto nb = graph_.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      throw EmbeddingError("rotation of vertex " + std::to_string(v) +
                           " is not a permutation of its neighbors");
    }
  }
}

PlanarEmbedding PlanarEmbedding::from_rotation(std::vector<std::vector<Vertex>> rotation) {
  const int n = static_cast<int>(rotation.size());
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rotation[v]) {
      if (w < 0 || w >= n) {
        throw EmbeddingError("vertex " + std::to_string(v) + " lists out-of-range neighbor " +
                             std::to_string(w));
      }
      if (w == v) throw EmbeddingError("self-loop at vertex " + std::to_string(v));
      if (v < w) edges.push_back({v, w});
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw EmbeddingError("rotation lists a neighbor twice");
  }
  Graph g = Graph::from_edges(n, edges);
  return PlanarEmbedding(std::move(g), std::move(rotation));
}

int PlanarEmbedding::position(Vertex v, Vertex w) const {
  const auto& rot = rotation_[v];
  auto it = std::find(rot.begin(), rot.end(), w);
  if (it == rot.end()) {
    throw EmbeddingError(std::to_string(w) + " is not a neighbor of " + std::to_string(v));
  }
  return static_cast<int>(it - rot.begin());
}

Vertex PlanarEmbedding::next_around(Vertex v, Vertex w) const {
  const auto& rot = rotation_[v];
  return rot[(position(v, w) + 1) % rot.size()];
}

Vertex PlanarEmbedding::prev_around(Vertex v, Vertex w) const {
  const auto& rot = rotation_[v];
  return rot[(position(v, w) + rot.size() - 1) % rot.size()];
}

std::vector<std::vector<Vertex>> PlanarEmbedding::faces() const {
  std::vector<std::vector<char>> used(graph_.n());
  for (Vertex v = 0; v < graph_.n(); ++v) used[v].assign(rotation_[v].size(), 0);
  std::vector<std::vector<Vertex>> result;
  for (Vertex start = 0; start < graph_.n(); ++start) {
    for (std::size_t i = 0; i < rotation_[start].size(); ++i) {
      if (used[start][i]) continue;
      std::vector<Vertex> face;
      Vertex u = start;
      Vertex v = rotation_[start][i];
      while (!used[u][position(u, v)]) {
        used[u][position(u, v)] = 1;
        face.push_back(u);
        const Vertex w = next_around(v, u);
        u = v;
        v = w;
      }
      result.push_back(std::move(face));
    }
  }
  return result;
}

PlanarityReport validate_maximal_planar(const PlanarEmbedding& emb) {
  const Graph& g = emb.graph();
  if (g.n() < 3) throw EmbeddingError("need at least 3 vertices");
  if (!is_connected(g)) throw EmbeddingError("graph is not connected");
  const auto faces = emb.faces();
  const int f = static_cast<int>(faces.size());
  if (g.n() - g.m() + f != 2) {
    throw EmbeddingError("Euler check failed: n - m + f = " + std::to_string(g.n() - g.m() + f));
  }
  PlanarityReport report;
  report.faces = f;
  report.maximal = std::all_of(faces.begin(), faces.end(),
                               [](const auto& face) { return face.size() == 3; });
  return report;
}

VertexSet smallest_face(const PlanarEmbedding& emb) {
  std::optional<std::vector<Vertex>> best;
  for (auto face : emb.faces()) {
    if (face.size() != 3) continue;
    std::sort(face.begin(), face.end());
    if (!best || face < *best) best = face;
  }
  if (!best) throw EmbeddingError("no triangular face");
  return VertexSet(*best);
}

LayerDecomposition layer_decomposition(const PlanarEmbedding& emb, const VertexSet& face) {
  bool found = false;
  for (auto f : emb.faces()) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f == face.members()) {
      found = true;
      break;
    }
  }
  if (!found) throw EmbeddingError("seed set is not a face of the embedding");

  const Graph& g = emb.graph();
  LayerDecomposition ld;
  ld.face = face;
  ld.layer_of = bfs_distances(g, face);
  ld.bfs_parent.assign(g.n(), -1);
  int t = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (ld.layer_of[v] == kUnreachable) throw EmbeddingError("graph is not connected");
    t = std::max(t, ld.layer_of[v]);
  }
  std::vector<std::vector<Vertex>> members(t + 1);
  for (Vertex v = 0; v < g.n(); ++v) {
    members[ld.layer_of[v]].push_back(v);
    if (ld.layer_of[v] == 0) continue;
    for (Vertex w : g.neighbors(v)) {
      if (ld.layer_of[w] == ld.layer_of[v] - 1) {
        ld.bfs_parent[v] = w;
        break;
      }
    }
  }
  for (auto& layer : members) ld.layers.emplace_back(std::move(layer));
  return ld;
}

namespace {

// Sweep of every cycle vertex's rotation between its two cycle edges, on one
// side. Lists run from the incoming edge towards the outgoing one, so the last
// vertex swept at c_j is the first swept at c_{j+1} when the lemma holds.
NeighborSide sweep_side(const PlanarEmbedding& emb, const std::vector<Vertex>& cycle,
                        const std::vector<char>& on_cycle, bool clockwise) {
  const int len = static_cast<int>(cycle.size());
  std::vector<Vertex> raw;
  for (int j = 0; j < len; ++j) {
    const Vertex c = cycle[j];
    const Vertex prev = cycle[(j + len - 1) % len];
    const Vertex next = cycle[(j + 1) % len];
    Vertex w = clockwise ? emb.prev_around(c, prev) : emb.next_around(c, prev);
    while (w != next) {
      if (!on_cycle[w]) raw.push_back(w);
      w = clockwise ? emb.prev_around(c, w) : emb.next_around(c, w);
    }
  }
  NeighborSide side;
  for (Vertex v : raw) {
    if (side.order.empty() || side.order.back() != v) side.order.push_back(v);
  }
  while (side.order.size() > 1 && side.order.front() == side.order.back()) side.order.pop_back();

  std::set<Vertex> distinct(side.order.begin(), side.order.end());
  side.degenerate = distinct.size() < 3;
  if (!side.degenerate && distinct.size() == side.order.size()) {
    const Graph& g = emb.graph();
    const std::size_t k = side.order.size();
    side.hamiltonian = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (!g.has_edge(side.order[i], side.order[(i + 1) % k])) side.hamiltonian = false;
    }
  }
  return side;
}

std::size_t distinct_count(const NeighborSide& s) {
  return std::set<Vertex>(s.order.begin(), s.order.end()).size();
}

}  // namespace

NeighborCycles neighbor_cycle(const PlanarEmbedding& emb, const std::vector<Vertex>& cycle) {
  const Graph& g = emb.graph();
  const int len = static_cast<int>(cycle.size());
  if (len < 3) throw EmbeddingError("a cycle needs at least 3 vertices");
  std::vector<char> on_cycle(g.n(), 0);
  for (int j = 0; j < len; ++j) {
    const Vertex v = cycle[j];
    if (!g.contains(v) || on_cycle[v]) throw EmbeddingError("not a cycle: repeated vertex");
    on_cycle[v] = 1;
    if (!g.has_edge(v, cycle[(j + 1) % len])) {
      throw EmbeddingError("not a cycle: " + std::to_string(v) + " and " +
                           std::to_string(cycle[(j + 1) % len]) + " are not adjacent");
    }
  }
  NeighborSide ccw = sweep_side(emb, cycle, on_cycle, false);
  NeighborSide cw = sweep_side(emb, cycle, on_cycle, true);
  NeighborCycles result;
  if (distinct_count(cw) < distinct_count(ccw)) {
    result.inside = std::move(cw);
    result.outside = std::move(ccw);
  } else {
    result.inside = std::move(ccw);
    result.outside = std::move(cw);
  }
  return result;
}

namespace {

// N_1 comes from the face, N_{k+1} from the side of N_k's cycle that sweeps
// exactly N_{k+1}. Stops at the first layer without such an order.
std::vector<std::vector<Vertex>> layer_orders(const PlanarEmbedding& emb,
                                              const LayerDecomposition& ld) {
  std::vector<std::vector<Vertex>> order(ld.layers.size());
  order[0].assign(ld.face.begin(), ld.face.end());
  for (int k = 1; k <= ld.t() && order[k - 1].size() >= 3; ++k) {
    const auto sides = neighbor_cycle(emb, order[k - 1]);
    for (const NeighborSide* side : {&sides.outside, &sides.inside}) {
      if (!side->hamiltonian) continue;
      std::vector<Vertex> sorted = side->order;
      std::sort(sorted.begin(), sorted.end());
      if (sorted == ld.layers[k].members()) {
        order[k] = side->order;
        break;
      }
    }
  }
  return order;
}

struct ClassCheck {
  VertexSet dominating;
  std::vector<int> selected;
  bool dominates = true;
  bool connected = false;
  std::optional<Vertex> undominated;
};

ClassCheck check_class(const Graph& g, const LayerDecomposition& ld, const DominatingPlan& plan,
                       int residue) {
  ClassCheck c;
  for (std::size_t i = 0; i < plan.large.size(); ++i) {
    if (static_cast<int>((i + 1) % plan.kappa) == residue) c.selected.push_back(plan.large[i]);
  }
  std::vector<Vertex> d(ld.face.begin(), ld.face.end());
  for (int k : c.selected) {
    d.insert(d.end(), ld.layers[k].begin(), ld.layers[k].end());
  }
  d.insert(d.end(), plan.transversal.begin(), plan.transversal.end());
  c.dominating = VertexSet(std::move(d));
  const auto dist = bfs_distances(g, c.dominating);
  for (Vertex u = 0; u < g.n(); ++u) {
    if (dist[u] > plan.radius) {
      c.dominates = false;
      c.undominated = u;
      break;
    }
  }
  c.connected = is_connected(induced_subgraph(g, c.dominating).graph);
  return c;
}

}  // namespace

DominatingPlan build_dominating_plan(const PlanarEmbedding& emb, const LayerDecomposition& ld,
                                     int kappa) {
  if (kappa < 3 || kappa > 5) throw EmbeddingError("kappa must be 3, 4 or 5");
  const Graph& g = emb.graph();
  const int t = ld.t();
  DominatingPlan plan;
  plan.kappa = kappa;
  plan.radius = kappa;
  for (int k = 0; k <= t; ++k) {
    const int size = ld.layers[k].size();
    if (size <= 2 * kappa - 1) {
      plan.a1.push_back(k);
    } else if (size == 2 * kappa) {
      plan.a2.push_back(k);
    } else {
      plan.a3.push_back(k);
    }
  }
  std::merge(plan.a2.begin(), plan.a2.end(), plan.a3.begin(), plan.a3.end(),
             std::back_inserter(plan.large));

  // Classes indexed by i mod kappa with k_1 the first large layer.
  plan.class_sums.assign(kappa, 0);
  for (std::size_t i = 0; i < plan.large.size(); ++i) {
    const int size = ld.layers[plan.large[i]].size();
    plan.class_sums[(i + 1) % kappa] += (size + 1) / 2;
  }

  Vertex v = ld.layers[t].members().front();
  while (v != -1) {
    plan.transversal.push_back(v);
    v = ld.bfs_parent[v];
  }
  std::reverse(plan.transversal.begin(), plan.transversal.end());
  plan.layer_orders = layer_orders(emb, ld);

  plan.residue = static_cast<int>(
      std::min_element(plan.class_sums.begin(), plan.class_sums.end()) - plan.class_sums.begin());
  const ClassCheck chosen = check_class(g, ld, plan, plan.residue);
  plan.selected = chosen.selected;
  plan.dominating = chosen.dominating;
  plan.dominates = chosen.dominates;
  plan.undominated = chosen.undominated;
  plan.connected = chosen.connected;
  plan.layer_floor_ok = true;
  for (int k = 1; k < t; ++k) {
    if (ld.layers[k].size() < kappa) plan.layer_floor_ok = false;
  }
  return plan;
}

namespace {

// Colors the edges of `tree_of` (a vertex -> parent map restricted to `part`)
// with consecutive fresh colors starting at `next`.
Color color_spanning_tree(const Graph& g, const VertexSet& part, EdgeColoring& col, Color next) {
  const auto sub = induced_subgraph(g, part);
  std::vector<char> seen(sub.graph.n(), 0);
  for (Vertex root = 0; root < sub.graph.n(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : sub.graph.neighbors(x)) {
        if (seen[y]) continue;
        seen[y] = 1;
        col.set(g.edge_id(sub.to_parent[x], sub.to_parent[y]), next++);
        queue.push_back(y);
      }
    }
  }
  return next;
}

VerificationReport verify_on(const Graph& g, const VertexSet& part, const EdgeColoring& col,
                             bool parallel) {
  const auto sub = induced_subgraph(g, part);
  if (!is_connected(sub.graph)) return {};
  EdgeColoring local(sub.graph);
  for (int e = 0; e < sub.graph.m(); ++e) {
    const Edge& edge = sub.graph.edge(e);
    local.set(e, col[g.edge_id(sub.to_parent[edge.u], sub.to_parent[edge.v])]);
  }
  VerifyOptions options;
  options.parallel = parallel;
  VerificationReport report = is_rainbow_connected(sub.graph, local, options);
  if (report.failing_pair) {
    report.failing_pair = {sub.to_parent[report.failing_pair->first],
                           sub.to_parent[report.failing_pair->second]};
  }
  return report;
}

}  // namespace

DominatingColoring color_dominating_set(const PlanarEmbedding& emb, const LayerDecomposition& ld,
                                        const DominatingPlan& plan) {
  const Graph& g = emb.graph();
  DominatingColoring result;
  result.coloring = EdgeColoring(g);
  EdgeColoring& col = result.coloring;

  Color next = 1;
  for (std::size_t i = 0; i + 1 < plan.transversal.size(); ++i) {
    col.set(g.edge_id(plan.transversal[i], plan.transversal[i + 1]), next++);
  }
  const Color phi = next++;
  for (Vertex a : ld.face) {
    for (Vertex b : ld.face) {
      if (a < b) col.set(g.edge_id(a, b), phi);
    }
  }

  for (int k : plan.selected) {
    const auto& cyc = plan.layer_orders[k];
    if (!cyc.empty()) {
      const auto seq = cycle_color_sequence(static_cast<int>(cyc.size()), next);
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        col.set(g.edge_id(cyc[i], cyc[(i + 1) % cyc.size()]), seq[i]);
      }
      next += static_cast<Color>((cyc.size() + 1) / 2);
    } else {
      result.layer_fallbacks.push_back(k);
      next = color_spanning_tree(g, ld.layers[k], col, next);
    }
  }

  // Remaining edges of G|_D are never needed by the witness paths.
  const auto mask = plan.dominating.mask(g.n());
  for (int e = 0; e < g.m(); ++e) {
    const Edge& edge = g.edge(e);
    if (mask[edge.u] && mask[edge.v] && !col.is_colored(e)) col.set(e, phi);
  }
  result.palette = col.palette_size();
  result.verification = verify_on(g, plan.dominating, col, true);
  return result;
}

namespace {

Color max_color(const EdgeColoring& col) {
  Color top = 0;
  for (Color c : col.colors()) top = std::max(top, c);
  return top;
}

// Every vertex outside D keeps its BFS parent edge; each one gets its own
// fresh color.
EdgeColoring forest_fallback(const Graph& g, const VertexSet& d, const EdgeColoring& base,
                             int& fresh) {
  EdgeColoring col = base;
  const Color filler = max_color(base) + 1;
  Color next = filler;
  const auto dist = bfs_distances(g, d);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (dist[v] <= 0) continue;
    for (int k = 0; k < g.degree(v); ++k) {
      const Vertex w = g.neighbors(v)[k];
      if (dist[w] == dist[v] - 1) {
        col.set(g.incident_edges(v)[k], next++);
        break;
      }
    }
  }
  for (int e = 0; e < g.m(); ++e) {
    if (!col.is_colored(e)) col.set(e, filler);
  }
  fresh = next - filler;
  if (fresh == 0) fresh = col.palette_size() - base.palette_size();
  return col;
}

}  // namespace

ExtensionResult extend_coloring(const Graph& g, const VertexSet& d, const EdgeColoring& base,
                                int radius, bool parallel_verify) {
  ExtensionResult result;
  result.budget = radius * radius + 2 * radius;
  const auto dist = bfs_distances(g, d);
  int depth = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (dist[v] == kUnreachable) throw EmbeddingError("graph is not connected");
    depth = std::max(depth, dist[v]);
  }
  if (depth > radius) {
    throw EmbeddingError("vertex set does not dominate within radius " + std::to_string(radius));
  }
  if (!is_connected(induced_subgraph(g, d).graph)) {
    throw EmbeddingError("dominating set does not induce a connected subgraph");
  }

  // Level i gets colors a_i, b_i for edges down to D_{i-1} and a'_i, b'_i for
  // edges inside the level. Each level vertex gets a route of A colors and a
  // route of B colors down to D_{i-1}: either one down edge, or one level
  // edge followed by a neighbor's down edge of the same class.
  EdgeColoring col = base;
  Color next = max_color(base) + 1;
  bool ok = true;
  for (int level = 1; level <= depth && ok; ++level) {
    const Color a = next, b = next + 1, a2 = next + 2, b2 = next + 3;
    next += 4;
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (dist[v] == level) members.push_back(v);
    }
    // kind: 0 = two or more down edges, 1 = single down edge colored a,
    // 2 = single down edge colored b, -1 = not yet assigned.
    std::vector<int> kind(g.n(), -1);
    std::deque<Vertex> queue;
    for (Vertex v : members) {
      int down = 0;
      for (int k = 0; k < g.degree(v); ++k) {
        const Vertex w = g.neighbors(v)[k];
        if (dist[w] != level - 1) continue;
        col.set(g.incident_edges(v)[k], down == 0 ? a : b);
        ++down;
      }
      if (down >= 2) {
        kind[v] = 0;
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      const Vertex w = queue.front();
      queue.pop_front();
      for (int k = 0; k < g.degree(w); ++k) {
        const Vertex v = g.neighbors(w)[k];
        if (dist[v] != level || kind[v] != -1) continue;
        int down_edge = -1;
        for (int j = 0; j < g.degree(v); ++j) {
          if (dist[g.neighbors(v)[j]] == level - 1) down_edge = g.incident_edges(v)[j];
        }
        // v's own down edge covers one class, the route through w the other.
        if (kind[w] == 0 || kind[w] == 2) {
          kind[v] = 1;
          col.set(down_edge, a);
          col.set(g.incident_edges(w)[k], b2);
        } else {
          kind[v] = 2;
          col.set(down_edge, b);
          col.set(g.incident_edges(w)[k], a2);
        }
        queue.push_back(v);
      }
    }
    for (Vertex v : members) {
      if (kind[v] == -1) ok = false;
    }
    for (Vertex v : members) {
      for (int k = 0; k < g.degree(v); ++k) {
        const Vertex w = g.neighbors(v)[k];
        const int e = g.incident_edges(v)[k];
        if (dist[w] == level && !col.is_colored(e)) col.set(e, a2);
      }
    }
  }

  if (ok) {
    result.coloring = std::move(col);
    result.fresh_colors = result.coloring.palette_size() - base.palette_size();
    VerifyOptions options;
    options.parallel = parallel_verify;
    result.verification = is_rainbow_connected(g, result.coloring, options);
    result.primary = result.verification.rainbow_connected;
  }
  if (!result.primary) {
    result.coloring = forest_fallback(g, d, base, result.fresh_colors);
    VerifyOptions options;
    options.parallel = parallel_verify;
    result.verification = is_rainbow_connected(g, result.coloring, options);
  }
  return result;
}

PlanarConstruction construct_planar(const PlanarEmbedding& emb, bool parallel_verify) {
  const Graph& g = emb.graph();
  const PlanarityReport report = validate_maximal_planar(emb);
  if (!report.maximal) throw EmbeddingError("embedding is not maximal planar");
  PlanarConstruction pc;
  pc.n = g.n();
  pc.diameter = metrics(g).diameter;
  pc.kappa = vertex_connectivity(g);
  if (pc.kappa < 3) throw EmbeddingError("vertex connectivity below 3");
  const int k = pc.kappa;
  pc.proof_bound = Rational(pc.n, k) + Rational(1 + k * k + 2 * k);
  pc.headline_bound = Rational(pc.n, k) + Rational(36);
  pc.dominating_bound = Rational(pc.n, k) + Rational(1);

  pc.layers = layer_decomposition(emb, smallest_face(emb));
  pc.plan = build_dominating_plan(emb, pc.layers, k);
  pc.dominating = color_dominating_set(emb, pc.layers, pc.plan);

  if (pc.plan.dominates && pc.plan.connected && pc.dominating.verification.rainbow_connected) {
    pc.extension = extend_coloring(g, pc.plan.dominating, pc.dominating.coloring, pc.plan.radius,
                                   parallel_verify);
    pc.coloring = pc.extension.coloring;
  } else {
    // D unusable: extend from the seed face, colored with one color, out to
    // every layer.
    pc.face_fallback = true;
    EdgeColoring base(g);
    for (Vertex a : pc.layers.face) {
      for (Vertex b : pc.layers.face) {
        if (a < b) base.set(g.edge_id(a, b), 1);
      }
    }
    pc.extension = extend_coloring(g, pc.layers.face, base, pc.layers.t(), parallel_verify);
    pc.coloring = pc.extension.coloring;
  }
  pc.palette = pc.coloring.palette_size();
  VerifyOptions options;
  options.parallel = parallel_verify;
  pc.verification = is_rainbow_connected(g, pc.coloring, options);
  pc.extension.verification = pc.verification;
  return pc;
}

}  // namespace rainbow
