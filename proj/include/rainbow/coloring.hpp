#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rainbow/connectivity.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

using Color = int;
inline constexpr Color kUncolored = -1;

// Rainbow-path search tracks used colors in a fixed 128-bit mask.
inline constexpr int kMaxPalette = 128;

class ColoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Colors indexed by edge id of the graph the coloring was built for.
// Uncolored edges (kUncolored) make the coloring partial.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(const Graph& g) : colors_(g.m(), kUncolored) {}
  explicit EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  int m() const { return static_cast<int>(colors_.size()); }
  Color operator[](int edge_id) const { return colors_[edge_id]; }
  void set(int edge_id, Color c) { colors_[edge_id] = c; }
  bool is_colored(int edge_id) const { return colors_[edge_id] != kUncolored; }
  const std::vector<Color>& colors() const { return colors_; }

  bool is_total() const;
  int palette_size() const;  // distinct colors among colored edges

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
};

// Injective symbolic-name -> color-id map; ids are handed out in first-use
// order starting at `first`.
class ColorRegistry {
 public:
  explicit ColorRegistry(Color first = 1) : next_(first) {}
  Color id(const std::string& name);
  std::optional<Color> find(const std::string& name) const;
  const std::string& name(Color c) const { return names_.at(c); }
  int size() const { return static_cast<int>(ids_.size()); }

 private:
  Color next_;
  std::unordered_map<std::string, Color> ids_;
  std::map<Color, std::string> names_;
};

struct VerificationReport {
  bool rainbow_connected = false;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;
  // Filled only when witnesses were requested; keyed by (u, v) with u < v.
  std::map<std::pair<Vertex, Vertex>, Path> witness_paths;
};

// True if consecutive vertices are adjacent, no vertex repeats and all edge
// colors along the path are distinct.
bool is_rainbow_path(const Graph& g, const EdgeColoring& col, const Path& path);

// A rainbow u-v path or nullopt. Search is breadth-first over
// (vertex, used-color set) states with subset-dominance pruning, so the
// returned path is a shortest rainbow path. Throws ColoringError on partial
// colorings or palettes wider than kMaxPalette.
std::optional<Path> exists_rainbow_path(const Graph& g, const EdgeColoring& col, Vertex u, Vertex v);

struct VerifyOptions {
  bool collect_witnesses = false;
  bool parallel = true;
};

// Checks every unordered pair. The reported failing pair is the
// lexicographic minimum regardless of thread scheduling.
VerificationReport is_rainbow_connected(const Graph& g, const EdgeColoring& col,
                                        VerifyOptions options = {});
VerificationReport is_rainbow_connected_serial(const Graph& g, const EdgeColoring& col,
                                               bool collect_witnesses = false);

// Cycle given as a vertex sequence v0..v_{L-1} (closing edge v_{L-1}v0).
// Edges v_i v_{i+1} get colors first + (i mod ceil(L/2)).
EdgeColoring color_cycle(const Graph& g, const Path& cycle, Color first = 1);
// Colors for a bare cycle of length L in edge order, as used above.
std::vector<Color> cycle_color_sequence(int length, Color first = 1);

enum class RcStatus { kFound, kExceeded, kBudgetTooSmall };

struct RcResult {
  RcStatus status = RcStatus::kExceeded;
  int value = 0;            // valid when status == kFound
  std::uint64_t steps = 0;  // search nodes visited
  EdgeColoring witness;     // an optimal coloring when found
};

struct RcOptions {
  int budget = 16;                     // largest palette tried
  std::uint64_t work_cap = 100000000;  // search-node cap over all k
  // Start at k = 1 instead of max(1, diameter); used to test the lower bound
  // without assuming it.
  bool start_at_one = false;
};

// Exact rc(G) by exhaustive search with canonical color-symmetry pruning
// (edge i may use at most 1 + max color on edges 0..i-1) and a per-pair
// feasibility check over simple paths with at most k edges.
RcResult rc_exact(const Graph& g, RcOptions options = {});

}  // namespace rainbow
