#include "rainbow/coloring.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rainbow {
namespace {

using Mask = unsigned __int128;

constexpr std::size_t kStateCap = 20000000;

Mask bit(int i) { return static_cast<Mask>(1) << i; }

// Dense 0..P-1 color index per edge.
std::vector<int> dense_colors(const EdgeColoring& col) {
  if (!col.is_total()) throw ColoringError("coloring is partial");
  std::vector<Color> distinct(col.colors());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (static_cast<int>(distinct.size()) > kMaxPalette) {
    throw ColoringError("palette of " + std::to_string(distinct.size()) + " colors exceeds the " +
                        std::to_string(kMaxPalette) + "-color search limit");
  }
  std::vector<int> out(col.m());
  for (int e = 0; e < col.m(); ++e) {
    out[e] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), col[e]) -
                              distinct.begin());
  }
  return out;
}

// Breadth-first search over (vertex, color set) states from one source.
class RainbowSearch {
 public:
  RainbowSearch(const Graph& g, const std::vector<int>& dense) : g_(g), dense_(dense) {}

  // Marks reached[v] for every target v reachable by a rainbow path; stops
  // early once all targets are reached. Returns the end state per vertex
  // (-1 when unreached).
  std::vector<int> run(Vertex source, const std::vector<char>& is_target) {
    const int n = g_.n();
    int remaining = 0;
    for (Vertex v = 0; v < n; ++v) remaining += (is_target[v] && v != source) ? 1 : 0;
    std::vector<int> hit(n, -1);
    states_.clear();
    masks_at_.assign(n, {});
    states_.push_back({source, 0, -1});
    masks_at_[source].push_back(0);
    std::size_t level_begin = 0;
    while (remaining > 0 && level_begin < states_.size()) {
      const std::size_t level_end = states_.size();
      for (std::size_t i = level_begin; i < level_end && remaining > 0; ++i) {
        const State s = states_[i];
        auto nbrs = g_.neighbors(s.vertex);
        auto ids = g_.incident_edges(s.vertex);
        for (std::size_t j = 0; j < nbrs.size(); ++j) {
          const int c = dense_[ids[j]];
          if (s.mask & bit(c)) continue;
          const Vertex w = nbrs[j];
          const Mask next = s.mask | bit(c);
          if (dominated(w, next)) continue;
          masks_at_[w].push_back(next);
          states_.push_back({w, next, static_cast<int>(i)});
          if (hit[w] < 0) {
            hit[w] = static_cast<int>(states_.size()) - 1;
            if (is_target[w] && w != source) --remaining;
          }
        }
        if (states_.size() > kStateCap) {
          throw ColoringError("rainbow path search exceeded its state cap");
        }
      }
      level_begin = level_end;
    }
    return hit;
  }

  Path trace(int state) const {
    Path out;
    for (int s = state; s >= 0; s = states_[s].parent) out.push_back(states_[s].vertex);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  struct State {
    Vertex vertex;
    Mask mask;
    int parent;
  };

  bool dominated(Vertex w, Mask next) const {
    for (Mask m : masks_at_[w]) {
      if ((m & next) == m) return true;
    }
    return false;
  }

  const Graph& g_;
  const std::vector<int>& dense_;
  std::vector<State> states_;
  std::vector<std::vector<Mask>> masks_at_;
};

void require_total(const Graph& g, const EdgeColoring& col) {
  if (col.m() != g.m()) throw ColoringError("coloring does not match the graph's edge count");
  if (!col.is_total()) throw ColoringError("coloring is partial");
}

struct SourceResult {
  Vertex first_failure = -1;
  std::vector<std::pair<Vertex, Path>> witnesses;
};

SourceResult check_source(const Graph& g, const std::vector<int>& dense, Vertex u,
                          bool collect_witnesses) {
  SourceResult out;
  std::vector<char> target(g.n(), 0);
  for (Vertex v = u + 1; v < g.n(); ++v) target[v] = 1;
  RainbowSearch search(g, dense);
  auto hit = search.run(u, target);
  for (Vertex v = u + 1; v < g.n(); ++v) {
    if (hit[v] < 0) {
      out.first_failure = v;
      break;
    }
    if (collect_witnesses) out.witnesses.emplace_back(v, search.trace(hit[v]));
  }
  return out;
}

VerificationReport assemble(std::vector<SourceResult>& per_source, bool collect_witnesses) {
  VerificationReport report;
  report.rainbow_connected = true;
  for (Vertex u = 0; u < static_cast<Vertex>(per_source.size()); ++u) {
    if (per_source[u].first_failure >= 0) {
      report.rainbow_connected = false;
      report.failing_pair = std::make_pair(u, per_source[u].first_failure);
      report.witness_paths.clear();
      return report;
    }
    if (collect_witnesses) {
      for (auto& [v, path] : per_source[u].witnesses) {
        report.witness_paths.emplace(std::make_pair(u, v), std::move(path));
      }
    }
  }
  return report;
}

}  // namespace

bool EdgeColoring::is_total() const {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
}

int EdgeColoring::palette_size() const {
  std::set<Color> distinct;
  for (Color c : colors_) {
    if (c != kUncolored) distinct.insert(c);
  }
  return static_cast<int>(distinct.size());
}

Color ColorRegistry::id(const std::string& name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  const Color c = next_++;
  ids_.emplace(name, c);
  names_.emplace(c, name);
  return c;
}

std::optional<Color> ColorRegistry::find(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool is_rainbow_path(const Graph& g, const EdgeColoring& col, const Path& path) {
  if (path.empty()) return false;
  std::set<Vertex> seen(path.begin(), path.end());
  if (seen.size() != path.size()) return false;
  std::set<Color> used;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int id = g.edge_id(path[i], path[i + 1]);
    if (id < 0 || !col.is_colored(id)) return false;
    if (!used.insert(col[id]).second) return false;
  }
  return true;
}

std::optional<Path> exists_rainbow_path(const Graph& g, const EdgeColoring& col, Vertex u,
                                        Vertex v) {
  require_total(g, col);
  if (!g.contains(u) || !g.contains(v)) throw GraphError("vertex out of range");
  if (u == v) throw GraphError("rainbow path endpoints must differ");
  auto dense = dense_colors(col);
  std::vector<char> target(g.n(), 0);
  target[v] = 1;
  RainbowSearch search(g, dense);
  auto hit = search.run(u, target);
  if (hit[v] < 0) return std::nullopt;
  return search.trace(hit[v]);
}

VerificationReport is_rainbow_connected_serial(const Graph& g, const EdgeColoring& col,
                                               bool collect_witnesses) {
  require_total(g, col);
  if (!is_connected(g)) throw GraphError("rainbow connectivity of a disconnected graph");
  auto dense = dense_colors(col);
  std::vector<SourceResult> per_source(std::max(0, g.n() - 1));
  for (Vertex u = 0; u + 1 < g.n(); ++u) {
    per_source[u] = check_source(g, dense, u, collect_witnesses);
    if (per_source[u].first_failure >= 0) break;
  }
  return assemble(per_source, collect_witnesses);
}

VerificationReport is_rainbow_connected(const Graph& g, const EdgeColoring& col,
                                        VerifyOptions options) {
  if (!options.parallel) return is_rainbow_connected_serial(g, col, options.collect_witnesses);
  require_total(g, col);
  if (!is_connected(g)) throw GraphError("rainbow connectivity of a disconnected graph");
  auto dense = dense_colors(col);
  const int sources = std::max(0, g.n() - 1);
  std::vector<SourceResult> per_source(sources);
  std::string error;
#pragma omp parallel for schedule(dynamic, 1)
  for (Vertex u = 0; u < sources; ++u) {
    try {
      per_source[u] = check_source(g, dense, u, options.collect_witnesses);
    } catch (const std::exception& ex) {
#pragma omp critical
      error = ex.what();
    }
  }
  if (!error.empty()) throw ColoringError(error);
  return assemble(per_source, options.collect_witnesses);
}

std::vector<Color> cycle_color_sequence(int length, Color first) {
  if (length < 3) throw ColoringError("cycle length must be at least 3");
  const int palette = (length + 1) / 2;
  std::vector<Color> out(length);
  for (int i = 0; i < length; ++i) out[i] = first + i % palette;
  return out;
}

EdgeColoring color_cycle(const Graph& g, const Path& cycle, Color first) {
  const int length = static_cast<int>(cycle.size());
  auto sequence = cycle_color_sequence(length, first);
  EdgeColoring col(g);
  for (int i = 0; i < length; ++i) {
    const int id = g.edge_id(cycle[i], cycle[(i + 1) % length]);
    if (id < 0) throw ColoringError("cycle vertices are not consecutive neighbors");
    if (col.is_colored(id)) throw ColoringError("cycle repeats an edge");
    col.set(id, sequence[i]);
  }
  return col;
}

namespace {

// Exhaustive search for a rainbow coloring with k colors.
class RcSearch {
 public:
  RcSearch(const Graph& g, std::vector<int> order, int k, std::uint64_t& steps,
           std::uint64_t cap)
      : g_(g), order_(std::move(order)), k_(k), steps_(steps), cap_(cap) {
    position_of_.assign(g.m(), 0);
    for (int i = 0; i < g.m(); ++i) position_of_[order_[i]] = i;
    enumerate_paths();
    assigned_.assign(g.m(), -1);
  }

  bool too_many_paths() const { return too_many_; }

  // true: found; false: exhausted; nullopt: cap hit.
  std::optional<bool> run() {
    for (const auto& list : pair_paths_) {
      if (list.empty()) return false;
    }
    witness_.assign(pair_paths_.size(), 0);
    auto found = descend(0, -1);
    return found;
  }

  EdgeColoring coloring() const {
    EdgeColoring col(g_);
    for (int pos = 0; pos < g_.m(); ++pos) col.set(order_[pos], assigned_[pos] + 1);
    return col;
  }

 private:
  struct PathRecord {
    std::vector<int> positions;
    std::uint64_t edge_mask = 0;
  };

  void enumerate_paths() {
    const int n = g_.n();
    std::vector<char> on_path(n, 0);
    std::vector<int> stack;
    pair_paths_.clear();
    pair_index_.assign(static_cast<std::size_t>(n) * n, -1);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        pair_index_[static_cast<std::size_t>(u) * n + v] = static_cast<int>(pair_paths_.size());
        pair_paths_.emplace_back();
      }
    }
    std::size_t total = 0;
    for (Vertex u = 0; u < n && !too_many_; ++u) {
      on_path[u] = 1;
      extend(u, u, on_path, stack, total);
      on_path[u] = 0;
    }
  }

  void extend(Vertex start, Vertex at, std::vector<char>& on_path, std::vector<int>& stack,
              std::size_t& total) {
    if (static_cast<int>(stack.size()) == k_ || too_many_) return;
    auto nbrs = g_.neighbors(at);
    auto ids = g_.incident_edges(at);
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      const Vertex w = nbrs[j];
      if (on_path[w]) continue;
      stack.push_back(position_of_[ids[j]]);
      if (w > start) {
        PathRecord rec;
        rec.positions = stack;
        for (int p : stack) rec.edge_mask |= std::uint64_t{1} << p;
        pair_paths_[pair_index_[static_cast<std::size_t>(start) * g_.n() + w]].push_back(
            std::move(rec));
        if (++total > kPathCap) too_many_ = true;
      }
      on_path[w] = 1;
      extend(start, w, on_path, stack, total);
      on_path[w] = 0;
      stack.pop_back();
    }
  }

  bool path_ok(const PathRecord& rec) const {
    std::uint64_t used = 0;
    for (int p : rec.positions) {
      const int c = assigned_[p];
      if (c < 0) continue;
      const std::uint64_t b = std::uint64_t{1} << c;
      if (used & b) return false;
      used |= b;
    }
    return true;
  }

  bool pairs_feasible(int pos) {
    const std::uint64_t changed = std::uint64_t{1} << pos;
    for (std::size_t p = 0; p < pair_paths_.size(); ++p) {
      const auto& list = pair_paths_[p];
      if (!(list[witness_[p]].edge_mask & changed)) continue;
      if (path_ok(list[witness_[p]])) continue;
      bool ok = false;
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (path_ok(list[i])) {
          witness_[p] = static_cast<int>(i);
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  std::optional<bool> descend(int pos, int max_used) {
    if (pos == g_.m()) return true;
    const int limit = std::min(k_ - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (++steps_ > cap_) return std::nullopt;
      assigned_[pos] = c;
      if (pairs_feasible(pos)) {
        auto r = descend(pos + 1, std::max(max_used, c));
        if (!r.has_value() || *r) return r;
      }
    }
    assigned_[pos] = -1;
    return false;
  }

  static constexpr std::size_t kPathCap = 4000000;

  const Graph& g_;
  std::vector<int> order_;
  std::vector<int> position_of_;
  int k_;
  std::uint64_t& steps_;
  std::uint64_t cap_;
  bool too_many_ = false;
  std::vector<std::vector<PathRecord>> pair_paths_;
  std::vector<int> pair_index_;
  std::vector<int> witness_;
  std::vector<int> assigned_;
};

// Spanning-tree edges in BFS discovery order first, then the rest by id.
std::vector<int> tree_first_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> used(g.m(), 0);
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    auto nbrs = g.neighbors(v);
    auto ids = g.incident_edges(v);
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      if (seen[nbrs[j]]) continue;
      seen[nbrs[j]] = 1;
      queue.push_back(nbrs[j]);
      order.push_back(ids[j]);
      used[ids[j]] = 1;
    }
  }
  for (int e = 0; e < g.m(); ++e) {
    if (!used[e]) order.push_back(e);
  }
  return order;
}

}  // namespace

RcResult rc_exact(const Graph& g, RcOptions options) {
  if (!is_connected(g)) throw GraphError("rc of a disconnected graph");
  if (g.m() > 64) throw GraphError("rc_exact supports at most 64 edges");
  RcResult result;
  if (g.n() <= 1) {
    result.status = RcStatus::kFound;
    result.value = 0;
    result.witness = EdgeColoring(g);
    return result;
  }
  const int start = options.start_at_one ? 1 : std::max(1, metrics(g).diameter);
  auto order = tree_first_order(g);
  for (int k = start; k <= options.budget; ++k) {
    RcSearch search(g, order, k, result.steps, options.work_cap);
    if (search.too_many_paths()) {
      result.status = RcStatus::kExceeded;
      return result;
    }
    auto found = search.run();
    if (!found.has_value()) {
      result.status = RcStatus::kExceeded;
      return result;
    }
    if (*found) {
      result.status = RcStatus::kFound;
      result.value = k;
      result.witness = search.coloring();
      return result;
    }
  }
  result.status = RcStatus::kBudgetTooSmall;
  return result;
}

}  // namespace rainbow
