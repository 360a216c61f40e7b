#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/connectivity.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lexicographically smallest pair (u1 < u2) with d(u1, u2) = diam(G).
std::pair<Vertex, Vertex> diametral_pair(const Graph& g);

// Shortest chains from every domain vertex to a base set X. l(v) is the chain
// length, p(v) the next vertex on the chain; the parent edges form E_p.
struct DominationTable {
  std::vector<int> level;        // 0 on the base, -1 outside the domain
  std::vector<Vertex> parent;    // -1 on the base and outside the domain
  std::vector<int> parent_edge;  // edge id of {v, p(v)}, -1 when no parent
  std::vector<int> spine_count;  // spine edges on the chain from v

  int max_level() const;
  bool is_parent_edge(int edge_id) const;
};

struct DominationOptions {
  // Chains may not use two consecutive spine edges.
  bool forbid_consecutive_spine = true;
  // Vertices allowed on chains; empty means every vertex.
  std::vector<char> domain;
};

// Chains minimize length first and spine-edge usage second; remaining ties go
// to the lowest parent id. Chains are tree-consistent: p(v)'s own chain is a
// suffix of v's. Throws ConstructionError if a domain vertex cannot reach the
// base.
DominationTable constrained_domination(const Graph& g, const VertexSet& base, const Path& spine,
                                       const DominationOptions& options = {});

// Everything the construction computed, kept for auditing.
struct DiameterConstruction {
  int kappa = 0;         // 3 or 4: the construction that ran
  int connectivity = 0;  // measured kappa(G)
  int n = 0;
  int diameter = 0;
  Rational deficit;            // c = n/kappa - diam(G)
  std::int64_t claimed_bound;  // ceil(n/3 + 11c + 6) or ceil(n/4 + 15c + 18)

  PathSystem paths;  // induced, sorted by length, in G's ids
  ContractionMap contraction;
  int contracted_count = 0;  // |Y|
  std::vector<DominationTable> tables;  // over the quotient; one per path for kappa = 4

  int spine_palette = 0;  // m
  bool spine_cycle_rainbow = false;

  // Internal audits. For kappa = 3: max l(v) against 3|Y|. For kappa = 4:
  // per path max l_i(v) against 3|Z_i|.
  std::vector<int> level_max;
  std::vector<int> level_bound;
  bool level_bound_ok = false;
  int contracted_palette = 0;
  std::int64_t contracted_bound = 0;  // m + 4|Y| + 2, or max(|P_i|-1) + 4 sum|Z_i| + 10
  bool contracted_bound_ok = false;
  std::vector<int> z_sizes;  // |Z_i|, kappa = 4 only

  ColorRegistry registry;
  EdgeColoring quotient_coloring;
  EdgeColoring coloring;
  int palette = 0;
  VerificationReport verification;

  bool verified() const { return verification.rainbow_connected; }
  bool bound_met() const { return palette <= claimed_bound; }
};

struct ConstructionOptions {
  // Throw ConstructionError (with a state dump) when the final coloring does
  // not verify. When false the failed construction is returned as is.
  bool throw_on_failure = true;
  bool parallel_verify = true;
};

// rc(G) <= n/3 + 11c + 6 for 3-connected G with diam(G) = n/3 - c.
DiameterConstruction construct_k3(const Graph& g, ConstructionOptions options = {});
// rc(G) <= n/4 + 15c + 18 for 4-connected G with diam(G) = n/4 - c.
DiameterConstruction construct_k4(const Graph& g, ConstructionOptions options = {});

Rational diameter_bound(int kappa, int n, int diameter);

// Multi-line human-readable summary of a construction's state.
std::string describe(const DiameterConstruction& dc);

}  // namespace rainbow
