#include "rainbow/diameter_builder.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <tuple>

namespace rainbow {
namespace {

std::string str(int v) { return std::to_string(v); }

// Path skeleton of the construction, translated into quotient ids.
struct Skeleton {
  PathSystem paths;        // in G
  ContractionMap cm;       // G -> G'
  std::vector<Path> qpaths;  // in G'
  std::vector<int> owner;    // quotient vertex -> path index, -2 endpoint, -1 contracted
  int y_count = 0;
};

Skeleton build_skeleton(const Graph& g, int k) {
  Skeleton sk;
  auto [u1, u2] = diametral_pair(g);
  sk.paths = make_induced(g, disjoint_paths(g, u1, u2, k));
  if (auto err = validate_path_system(g, sk.paths); !err.empty()) {
    throw ConstructionError("invalid path system: " + err);
  }

  std::vector<char> on_path(g.n(), 0);
  for (const Path& p : sk.paths.paths) {
    for (Vertex v : p) on_path[v] = 1;
  }
  std::vector<char> rest(g.n());
  for (Vertex v = 0; v < g.n(); ++v) rest[v] = !on_path[v];
  auto parts = connected_components(g, rest);
  sk.cm = contract_components(g, parts);
  sk.y_count = static_cast<int>(parts.size());

  const int nq = sk.cm.quotient.n();
  sk.owner.assign(nq, -1);
  for (int i = 0; i < k; ++i) {
    Path q;
    for (Vertex v : sk.paths.paths[i]) q.push_back(sk.cm.image[v]);
    for (std::size_t j = 1; j + 1 < q.size(); ++j) sk.owner[q[j]] = i;
    sk.qpaths.push_back(std::move(q));
  }
  sk.owner[sk.cm.image[u1]] = -2;
  sk.owner[sk.cm.image[u2]] = -2;
  return sk;
}

// Lifts a coloring of G' back to G: edges between different quotient
// vertices inherit the quotient edge's color; each contracted component gets
// a BFS spanning forest with one fresh color per edge. Remaining edges inside
// a component take `filler`.
EdgeColoring expand(const Graph& g, const Skeleton& sk, const EdgeColoring& qcol,
                    ColorRegistry& registry, Color filler) {
  const Graph& gq = sk.cm.quotient;
  EdgeColoring col(g);
  std::vector<char> tree(g.m(), 0);
  for (Vertex q = 0; q < gq.n(); ++q) {
    const VertexSet& part = sk.cm.origin[q];
    if (part.size() < 2) continue;
    auto mask = part.mask(g.n());
    std::vector<char> seen(g.n(), 0);
    std::vector<Vertex> queue{part.members().front()};
    seen[queue[0]] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      auto nbrs = g.neighbors(v);
      auto ids = g.incident_edges(v);
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        if (!mask[nbrs[j]] || seen[nbrs[j]]) continue;
        seen[nbrs[j]] = 1;
        queue.push_back(nbrs[j]);
        tree[ids[j]] = 1;
      }
    }
  }
  for (int id = 0; id < g.m(); ++id) {
    const Edge& e = g.edge(id);
    const Vertex a = sk.cm.image[e.u];
    const Vertex b = sk.cm.image[e.v];
    if (a != b) {
      col.set(id, qcol[gq.edge_id(a, b)]);
    } else if (tree[id]) {
      col.set(id, registry.id("forest_" + str(id)));
    } else {
      col.set(id, filler);
    }
  }
  return col;
}

bool cycle_alone_rainbow(const Graph& gq, const EdgeColoring& qcol, const Path& cycle) {
  const int len = static_cast<int>(cycle.size());
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, Color>> colored;
  for (int i = 0; i < len; ++i) {
    const Edge e = make_edge(i, (i + 1) % len);
    edges.push_back(e);
    colored.emplace_back(e, qcol[gq.edge_id(cycle[i], cycle[(i + 1) % len])]);
  }
  Graph c = Graph::from_edges(len, edges);
  EdgeColoring col(c);
  for (auto& [e, color] : colored) col.set(c.edge_id(e.u, e.v), color);
  return is_rainbow_connected(c, col, {.collect_witnesses = false, .parallel = false})
      .rainbow_connected;
}

void finish(const Graph& g, DiameterConstruction& dc, const ConstructionOptions& options) {
  dc.palette = dc.coloring.palette_size();
  dc.verification =
      is_rainbow_connected(g, dc.coloring, {.collect_witnesses = false, .parallel = options.parallel_verify});
  if (!dc.verified() && options.throw_on_failure) {
    throw ConstructionError("construction does not verify\n" + describe(dc));
  }
}

void require_kappa(const Graph& g, int kappa, DiameterConstruction& dc) {
  if (!is_connected(g)) throw ConstructionError("graph is disconnected");
  dc.connectivity = vertex_connectivity(g);
  if (dc.connectivity < kappa) {
    throw ConstructionError("vertex connectivity " + str(dc.connectivity) + " is below " +
                            str(kappa));
  }
  dc.kappa = kappa;
  dc.n = g.n();
  dc.diameter = metrics(g).diameter;
  dc.deficit = Rational(g.n(), kappa) - Rational(dc.diameter);
  dc.claimed_bound = diameter_bound(kappa, g.n(), dc.diameter).ceil();
}

}  // namespace

std::pair<Vertex, Vertex> diametral_pair(const Graph& g) {
  if (g.n() < 2 || !is_connected(g)) throw GraphError("diametral pair needs a connected graph");
  auto dist = all_pairs_distances(g);
  const int n = g.n();
  int best = -1;
  std::pair<Vertex, Vertex> pair{0, 1};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int d = dist[static_cast<std::size_t>(u) * n + v];
      if (d > best) {
        best = d;
        pair = {u, v};
      }
    }
  }
  return pair;
}

int DominationTable::max_level() const {
  int best = 0;
  for (int l : level) best = std::max(best, l);
  return best;
}

bool DominationTable::is_parent_edge(int edge_id) const {
  return std::find(parent_edge.begin(), parent_edge.end(), edge_id) != parent_edge.end();
}

DominationTable constrained_domination(const Graph& g, const VertexSet& base, const Path& spine,
                                       const DominationOptions& options) {
  const int n = g.n();
  std::vector<char> domain = options.domain.empty() ? std::vector<char>(n, 1) : options.domain;
  std::vector<char> spine_edge(g.m(), 0);
  for (std::size_t i = 0; i + 1 < spine.size(); ++i) {
    const int id = g.edge_id(spine[i], spine[i + 1]);
    if (id < 0) throw ConstructionError("spine is not a path");
    spine_edge[id] = 1;
  }

  DominationTable t;
  t.level.assign(n, -1);
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  t.spine_count.assign(n, 0);
  std::vector<char> done(n, 0);

  // (level, spine edges, parent, vertex, edge); lexicographic pop order
  // realizes the tie-breaking rules.
  using Entry = std::tuple<int, int, Vertex, Vertex, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  for (Vertex b : base) {
    if (!g.contains(b)) throw ConstructionError("base vertex out of range");
    pq.emplace(0, 0, -1, b, -1);
  }
  while (!pq.empty()) {
    auto [l, sc, p, v, pe] = pq.top();
    pq.pop();
    if (done[v]) continue;
    done[v] = 1;
    t.level[v] = l;
    t.parent[v] = p;
    t.parent_edge[v] = pe;
    t.spine_count[v] = sc;
    const bool arrived_by_spine = pe >= 0 && spine_edge[pe];
    auto nbrs = g.neighbors(v);
    auto ids = g.incident_edges(v);
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      const Vertex w = nbrs[j];
      if (done[w] || !domain[w]) continue;
      const bool via_spine = spine_edge[ids[j]];
      if (options.forbid_consecutive_spine && via_spine && arrived_by_spine) continue;
      pq.emplace(l + 1, sc + (via_spine ? 1 : 0), v, w, ids[j]);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (domain[v] && !done[v]) {
      throw ConstructionError("vertex " + str(v) + " cannot reach the base under the chain constraint");
    }
    if (!domain[v]) t.level[v] = -1;
  }
  return t;
}

Rational diameter_bound(int kappa, int n, int diameter) {
  const Rational c = Rational(n, kappa) - Rational(diameter);
  if (kappa == 3) return Rational(n, 3) + Rational(11) * c + Rational(6);
  if (kappa == 4) return Rational(n, 4) + Rational(15) * c + Rational(18);
  throw ConstructionError("diameter constructions exist only for kappa 3 and 4");
}

DiameterConstruction construct_k3(const Graph& g, ConstructionOptions options) {
  DiameterConstruction dc;
  require_kappa(g, 3, dc);
  Skeleton sk = build_skeleton(g, 3);
  dc.paths = sk.paths;
  dc.contracted_count = sk.y_count;
  const Graph& gq = sk.cm.quotient;
  const Path& p1 = sk.qpaths[0];
  const Path& p2 = sk.qpaths[1];
  const Path& p3 = sk.qpaths[2];

  // Cycle C = u1 -> P1 -> u2 -> P3 -> u1 in cyclic colors c_1..c_mc.
  Path cycle(p1.begin(), p1.end());
  for (auto it = p3.rbegin() + 1; it + 1 != p3.rend(); ++it) cycle.push_back(*it);
  const int cycle_len = static_cast<int>(cycle.size());
  const int mc = (cycle_len + 1) / 2;
  const int p2_edges = static_cast<int>(p2.size()) - 1;
  const int m = std::max(mc, p2_edges);
  dc.spine_palette = m;

  ColorRegistry& reg = dc.registry;
  auto c = [&](int i) { return reg.id("c" + str(i)); };
  for (int i = 1; i <= m; ++i) c(i);

  EdgeColoring qcol(gq);
  std::vector<char> path_edge(gq.m(), 0);
  auto seq = cycle_color_sequence(cycle_len, 1);
  for (int i = 0; i < cycle_len; ++i) {
    const int id = gq.edge_id(cycle[i], cycle[(i + 1) % cycle_len]);
    qcol.set(id, c(seq[i]));
    path_edge[id] = 1;
  }
  dc.spine_cycle_rainbow = cycle_alone_rainbow(gq, qcol, cycle);
  // P2 gets one color per edge, reusing c_1, c_2, ... from the u1 end.
  for (int j = 0; j < p2_edges; ++j) {
    const int id = gq.edge_id(p2[j], p2[j + 1]);
    qcol.set(id, c(j + 1));
    path_edge[id] = 1;
  }

  // X = X1 u X3 u {u1, u2}; chains from X2 and Y back to X.
  std::vector<char> in_x(gq.n(), 0);
  std::vector<Vertex> x_members;
  for (Vertex v = 0; v < gq.n(); ++v) {
    if (sk.owner[v] == 0 || sk.owner[v] == 2 || sk.owner[v] == -2) {
      in_x[v] = 1;
      x_members.push_back(v);
    }
  }
  auto in_x2 = [&](Vertex v) { return sk.owner[v] == 1; };
  auto in_y = [&](Vertex v) { return sk.owner[v] == -1; };
  DominationTable table = constrained_domination(gq, VertexSet(x_members), p2, {});

  int max_l = 0;
  for (Vertex v = 0; v < gq.n(); ++v) max_l = std::max(max_l, table.level[v]);
  dc.level_max = {max_l};
  dc.level_bound = {3 * sk.y_count};
  dc.level_bound_ok = max_l <= 3 * sk.y_count;

  // Case table. Parent edges take precedence, recoloring P2 where chains use it.
  std::vector<char> decided(gq.m(), 0);
  for (Vertex v = 0; v < gq.n(); ++v) {
    const int pe = table.parent_edge[v];
    if (pe < 0) continue;
    if (in_x2(v)) {
      qcol.set(pe, c(m + table.level[v]));
    } else if (in_y(v)) {
      qcol.set(pe, reg.id("cv" + str(v)));
    } else {
      throw ConstructionError("base vertex with a parent edge");
    }
    decided[pe] = 1;
  }
  for (int id = 0; id < gq.m(); ++id) {
    if (decided[id] || path_edge[id]) continue;
    Vertex a = gq.edge(id).u;
    Vertex b = gq.edge(id).v;
    if (in_y(b)) std::swap(a, b);
    if (in_y(a) && in_y(b)) throw ConstructionError("edge between contracted vertices");
    if (in_x2(a) && in_x2(b)) throw ConstructionError("chord on P2");
    if (in_y(a) && in_x[b]) {
      qcol.set(id, reg.id("d"));
    } else if (in_x2(a) || in_x2(b)) {
      qcol.set(id, reg.id("e"));
    } else {
      // X-X chords carry no designated route; any existing color will do.
      qcol.set(id, c(1));
    }
  }
  dc.quotient_coloring = qcol;
  dc.contracted_palette = qcol.palette_size();
  dc.contracted_bound = static_cast<std::int64_t>(m) + 4 * sk.y_count + 2;
  dc.contracted_bound_ok = dc.contracted_palette <= dc.contracted_bound;

  dc.tables = {std::move(table)};
  dc.coloring = expand(g, sk, qcol, reg, c(1));
  dc.contraction = std::move(sk.cm);
  finish(g, dc, options);
  return dc;
}

DiameterConstruction construct_k4(const Graph& g, ConstructionOptions options) {
  DiameterConstruction dc;
  require_kappa(g, 4, dc);
  Skeleton sk = build_skeleton(g, 4);
  dc.paths = sk.paths;
  dc.contracted_count = sk.y_count;
  const Graph& gq = sk.cm.quotient;
  constexpr int k = 4;

  int m = 0;
  for (const Path& p : sk.qpaths) m = std::max(m, static_cast<int>(p.size()) - 1);
  dc.spine_palette = m;
  ColorRegistry& reg = dc.registry;
  auto c = [&](int i) { return reg.id("c" + str(i)); };
  for (int i = 1; i <= m; ++i) c(i);

  // P1, P4 colored from u1; P2, P3 from u2.
  EdgeColoring qcol(gq);
  std::vector<char> path_edge(gq.m(), 0);
  for (int i = 0; i < k; ++i) {
    const Path& p = sk.qpaths[i];
    const int len = static_cast<int>(p.size()) - 1;
    const bool forward = (i == 0 || i == 3);
    for (int j = 0; j < len; ++j) {
      const int id = gq.edge_id(p[j], p[j + 1]);
      qcol.set(id, c(forward ? j + 1 : len - j));
      path_edge[id] = 1;
    }
  }
  {
    Path cycle(sk.qpaths[0].begin(), sk.qpaths[0].end());
    const Path& p2 = sk.qpaths[1];
    for (auto it = p2.rbegin() + 1; it + 1 != p2.rend(); ++it) cycle.push_back(*it);
    dc.spine_cycle_rainbow = cycle.size() >= 3 && cycle_alone_rainbow(gq, qcol, cycle);
  }

  // Z_i: contracted vertices adjacent only to interior vertices of P_i.
  std::vector<int> z_of(gq.n(), -1);
  dc.z_sizes.assign(k, 0);
  for (Vertex v = 0; v < gq.n(); ++v) {
    if (sk.owner[v] != -1) continue;
    int only = -3;
    for (Vertex w : gq.neighbors(v)) {
      const int o = sk.owner[w];
      if (only == -3) only = o;
      if (o < 0 || o != only) {
        only = -4;
        break;
      }
    }
    if (only >= 0) {
      z_of[v] = only;
      ++dc.z_sizes[only];
    }
  }

  std::vector<char> decided(gq.m(), 0);
  int z_total = 0;
  dc.level_bound_ok = true;
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> base;
    DominationOptions opt;
    opt.forbid_consecutive_spine = false;
    opt.domain.assign(gq.n(), 0);
    for (Vertex v = 0; v < gq.n(); ++v) {
      const int o = sk.owner[v];
      if (o == -2 || (o >= 0 && o != i)) {
        base.push_back(v);
        opt.domain[v] = 1;
      } else if (o == i || z_of[v] == i) {
        opt.domain[v] = 1;
      }
    }
    DominationTable table = constrained_domination(gq, VertexSet(base), sk.qpaths[i], opt);
    int max_l = 0;
    for (Vertex v = 0; v < gq.n(); ++v) {
      const int pe = table.parent_edge[v];
      if (pe < 0) continue;
      max_l = std::max(max_l, table.level[v]);
      if (decided[pe]) continue;
      if (sk.owner[v] == i) {
        qcol.set(pe, reg.id("c" + str(i + 1) + "," + str(table.level[v])));
      } else {
        qcol.set(pe, reg.id("cz" + str(i + 1) + "," + str(v)));
      }
      decided[pe] = 1;
    }
    dc.level_max.push_back(max_l);
    dc.level_bound.push_back(3 * dc.z_sizes[i]);
    dc.level_bound_ok = dc.level_bound_ok && max_l <= 3 * dc.z_sizes[i];
    z_total += dc.z_sizes[i];
    dc.tables.push_back(std::move(table));
  }

  for (int id = 0; id < gq.m(); ++id) {
    if (decided[id] || path_edge[id]) continue;
    Vertex a = gq.edge(id).u;
    Vertex b = gq.edge(id).v;
    int oa = sk.owner[a];
    int ob = sk.owner[b];
    if (ob == -1) {
      std::swap(a, b);
      std::swap(oa, ob);
    }
    if (oa == -1 && ob == -1) throw ConstructionError("edge between contracted vertices");
    if (oa == -1 && ob >= 0) {
      qcol.set(id, reg.id("d" + str(ob + 1)));
    } else if (oa == -1 && ob == -2) {
      qcol.set(id, reg.id("d0"));
    } else if (oa >= 0 && ob >= 0 && oa != ob) {
      qcol.set(id, reg.id("e" + str(std::min(oa, ob) + 1) + str(std::max(oa, ob) + 1)));
    } else {
      qcol.set(id, c(1));
    }
  }
  dc.quotient_coloring = qcol;
  dc.contracted_palette = qcol.palette_size();
  dc.contracted_bound = static_cast<std::int64_t>(m) + 4 * z_total + 10;
  dc.contracted_bound_ok = dc.contracted_palette <= dc.contracted_bound;

  dc.coloring = expand(g, sk, qcol, reg, c(1));
  dc.contraction = std::move(sk.cm);
  finish(g, dc, options);
  return dc;
}

std::string describe(const DiameterConstruction& dc) {
  std::ostringstream os;
  os << "kappa=" << dc.kappa << " (measured " << dc.connectivity << ") n=" << dc.n
     << " diam=" << dc.diameter << " c=" << dc.deficit.str() << " bound=" << dc.claimed_bound
     << "\n";
  os << "paths u1=" << dc.paths.u1 << " u2=" << dc.paths.u2 << "\n";
  for (const Path& p : dc.paths.paths) {
    os << "  ";
    for (Vertex v : p) os << v << ' ';
    os << "(" << p.size() - 1 << " edges)\n";
  }
  os << "|Y|=" << dc.contracted_count << " m=" << dc.spine_palette << " level_max=";
  for (int l : dc.level_max) os << l << ' ';
  os << "level_bound=";
  for (int l : dc.level_bound) os << l << ' ';
  os << "\ncontracted palette=" << dc.contracted_palette << " (bound " << dc.contracted_bound
     << ") final palette=" << dc.palette << "\n";
  if (dc.verification.failing_pair) {
    os << "failing pair (" << dc.verification.failing_pair->first << ","
       << dc.verification.failing_pair->second << ")\n";
  }
  return os.str();
}

}  // namespace rainbow
