#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/planar.hpp"

namespace rainbow {

// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9, z = (z ^ (z >> 27)) *
// 0x94D049BB133111EB, return z ^ (z >> 31). Fixed so instances can be
// reproduced bit for bit in any language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound) by rejection sampling.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// layers + 1 copies of K_kappa; vertex (layer i, column j) has id
// i * kappa + j and is joined to (i + 1, j).
Graph clique_tower(int kappa, int layers);

// Start from K_4 and repeatedly insert a vertex into a face chosen by the
// generator, joining it to the face's three corners.
PlanarEmbedding stacked_triangulation(int n, std::uint64_t seed);

// Adds up to `chords` random non-edges to g.
Graph add_random_chords(const Graph& g, int chords, std::uint64_t seed);

// Connected graph on n vertices: random spanning tree plus each remaining
// pair with probability extra_num / extra_den.
Graph random_connected_graph(int n, int extra_num, int extra_den, std::uint64_t seed);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();
PlanarEmbedding tetrahedron();
PlanarEmbedding octahedron();
PlanarEmbedding icosahedron();
PlanarEmbedding cycle_embedding(int n);

using NamedInstance = std::variant<Graph, PlanarEmbedding>;

// Names: K<n>, P<n>, C<n>, star<n>, petersen, octahedron, icosahedron
// (K4 and C<n> come with embeddings). Throws GeneratorError otherwise.
NamedInstance named(const std::string& name);

}  // namespace rainbow
