#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rotation system: for every vertex its neighbors in counterclockwise order.
// The face after dart u->v continues with v->w where w follows u in v's
// rotation.
class PlanarEmbedding {
 public:
  PlanarEmbedding() = default;
  // Throws EmbeddingError unless each rotation is a permutation of the
  // vertex's adjacency list.
  PlanarEmbedding(Graph graph, std::vector<std::vector<Vertex>> rotation);
  // Builds the graph from the rotation lists themselves.
  static PlanarEmbedding from_rotation(std::vector<std::vector<Vertex>> rotation);

  const Graph& graph() const { return graph_; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }

  // Neighbor following / preceding w in v's counterclockwise order.
  Vertex next_around(Vertex v, Vertex w) const;
  Vertex prev_around(Vertex v, Vertex w) const;

  // Every dart used exactly once; each face as its boundary vertex walk.
  std::vector<std::vector<Vertex>> faces() const;

 private:
  int position(Vertex v, Vertex w) const;

  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
};

struct PlanarityReport {
  int faces = 0;
  bool maximal = false;
};

// Face traversal plus Euler's formula n - m + f = 2. Throws EmbeddingError
// when Euler fails (inconsistent rotation or a non-planar graph).
PlanarityReport validate_maximal_planar(const PlanarEmbedding& emb);

// Lexicographically smallest triangular face as a sorted vertex set.
VertexSet smallest_face(const PlanarEmbedding& emb);

// Layers N_k = N^k(F) around a face F.
struct LayerDecomposition {
  VertexSet face;
  std::vector<VertexSet> layers;  // layers[0] == face
  std::vector<int> layer_of;      // vertex -> k
  std::vector<Vertex> bfs_parent;  // parent one layer closer to F, -1 on F

  int t() const { return static_cast<int>(layers.size()) - 1; }
};

LayerDecomposition layer_decomposition(const PlanarEmbedding& emb, const VertexSet& face);

// One side of N^1(C) for a cycle C: the neighbors met while sweeping each
// cycle vertex's rotation from one cycle edge to the other, in order, with
// consecutive repeats merged.
struct NeighborSide {
  std::vector<Vertex> order;  // cyclic order of the sweep
  bool hamiltonian = false;   // order is a simple cycle of the induced subgraph, length >= 3
  bool degenerate = false;    // fewer than 3 distinct vertices
};

// inside is the side with fewer distinct vertices (ties: the side swept
// counterclockwise from the outgoing cycle edge), outside the other one.
struct NeighborCycles {
  NeighborSide inside;
  NeighborSide outside;
};

NeighborCycles neighbor_cycle(const PlanarEmbedding& emb, const std::vector<Vertex>& cycle);

// Dominating set D built from residue classes of the large layers.
struct DominatingPlan {
  int kappa = 0;
  std::vector<int> a1, a2, a3;  // layer indices by size class
  std::vector<int> large;       // A2 u A3 ascending: k_1, k_2, ...
  int residue = 0;              // a
  std::vector<int> selected;    // A
  std::vector<std::int64_t> class_sums;  // sum of ceil(|N_k|/2) per residue
  std::vector<Vertex> transversal;  // P: one vertex per layer, from F outwards
  VertexSet dominating;             // D
  int radius = 0;                   // l = kappa
  bool dominates = false;           // every vertex within radius of D
  bool connected = false;           // G|_D connected
  std::optional<Vertex> undominated;
  bool layer_floor_ok = false;      // |N_k| >= kappa for 0 < k < t
  // Hamiltonian order of N_k from the layer-by-layer neighbor cycles; empty
  // where the sweep does not produce one.
  std::vector<std::vector<Vertex>> layer_orders;
};

// Residue class minimizing sum ceil(|N_k|/2), ties to the smallest a. The
// domination and connectivity invariants are checked, not assumed.
DominatingPlan build_dominating_plan(const PlanarEmbedding& emb, const LayerDecomposition& ld,
                                     int kappa);

struct DominatingColoring {
  EdgeColoring coloring;  // over emb.graph(); only edges inside D are colored
  int palette = 0;
  std::vector<int> layer_fallbacks;  // selected layers colored by a spanning tree
  VerificationReport verification;   // on the induced subgraph G|_D
};

// P gets |P| distinct colors, F one color, and every selected layer a fresh
// cycle palette on its Hamiltonian order from the layer-by-layer neighbor
// cycles.
DominatingColoring color_dominating_set(const PlanarEmbedding& emb, const LayerDecomposition& ld,
                                        const DominatingPlan& plan);

struct ExtensionResult {
  EdgeColoring coloring;  // total
  int fresh_colors = 0;
  int budget = 0;  // l^2 + 2l
  bool primary = false;  // two-route scheme used (otherwise the BFS-forest fallback)
  VerificationReport verification;
};

// Extends a rainbow coloring of G|_D to all of G: first the two-route scheme
// within l^2 + 2l fresh colors, else one fresh color per BFS-forest edge.
ExtensionResult extend_coloring(const Graph& g, const VertexSet& d, const EdgeColoring& base,
                                int radius, bool parallel_verify = true);

struct PlanarConstruction {
  int n = 0;
  int kappa = 0;
  int diameter = 0;
  LayerDecomposition layers;
  DominatingPlan plan;
  DominatingColoring dominating;
  ExtensionResult extension;
  EdgeColoring coloring;
  int palette = 0;
  Rational proof_bound;   // n/kappa + 1 + kappa^2 + 2 kappa
  Rational headline_bound;  // n/kappa + 36
  Rational dominating_bound;  // n/kappa + 1
  VerificationReport verification;

  bool face_fallback = false;  // D unusable, extended from the seed face alone

  bool verified() const { return verification.rainbow_connected; }
  bool bound_met() const {
    return !face_fallback && extension.primary && dominating.layer_fallbacks.empty() &&
           palette <= proof_bound.ceil() && palette <= headline_bound.ceil();
  }
};

// Throws EmbeddingError if the embedding is not maximal planar and
// ConstructionError-like EmbeddingError when kappa < 3.
PlanarConstruction construct_planar(const PlanarEmbedding& emb, bool parallel_verify = true);

}  // namespace rainbow
