#pragma once

#include <array>
#include <utility>
#include <vector>

#include "probekit/graph.hpp"
#include "probekit/types.hpp"

namespace probekit::graphcore {

// Sparse personalized-ranking vector with per-node residual tolerance.
struct PprVector {
  std::vector<std::pair<int, double>> estimates;  // sorted by node id, > 0
  std::vector<std::pair<int, double>> residuals;  // sorted by node id, > 0
  double alpha = 0.0;
  double epsilon = 0.0;
};

// Push-style approximation of the seeded ranking vector. FIFO push order,
// lowest-id tiebreak at activation, so the result is deterministic.
// Terminates with residual[v] < epsilon * degree(v) everywhere.
PprVector ppr_push(const Graph& g, int seed_node, double alpha, double epsilon);

Vector ppr_dense_estimates(const Graph& g, const PprVector& ppr);

// One sweep over nodes ordered by ranking/degree descending (ties by id):
// prefix cut weight and volume for prefixes of size 1..n-1, maintained
// incrementally.
struct SweepCurve {
  std::vector<int> order;
  std::vector<double> prefix_cut;
  std::vector<double> prefix_vol;

  double prefix_conductance(const Graph& g, std::size_t prefix_size) const;
};

SweepCurve sweep_curve(const Graph& g, const std::vector<double>& ranking);

// Best-conductance prefix among sizes 1..n-1.
std::pair<NodeSet, CutStats> sweep_cut(const Graph& g, const std::vector<double>& ranking);

inline constexpr std::array<double, 4> kLocalAlphaGrid{0.01, 0.05, 0.15, 0.3};

// One sweep curve per alpha in kLocalAlphaGrid, from ppr_push with
// epsilon = 1/(10*target_volume).
std::vector<SweepCurve> local_spectral_sweeps(const Graph& g, int seed_node,
                                              double target_volume);

// Best conductance set of volume <= 2*target_volume across the alpha grid;
// falls back to the best found when no prefix fits the volume cap.
std::pair<NodeSet, CutStats> local_spectral_cluster(const Graph& g, int seed_node,
                                                    double target_volume);

// Second eigenvector of the normalized Laplacian via deflated power
// iteration on the shifted operator 2I - L_sym (tolerance 1e-8, at most 1e4
// iterations).
Vector fiedler_vector(const Graph& g);

// Sweep cut over the Fiedler ordering; returns the smaller-volume side.
std::pair<NodeSet, CutStats> spectral_bisection(const Graph& g);

// Flow-based improvement: returns S' subseteq S with conductance(S') <=
// conductance(S), via repeated max-flow feasibility probes at the current
// quotient. Requires vol(S) <= total_volume/2.
std::pair<NodeSet, CutStats> mqi_improve(const Graph& g, const NodeSet& s);

struct Whisker {
  NodeSet nodes;
  Edge bridge;  // bridge.u lies outside the whisker, bridge.v inside
};

struct WhiskerDecomposition {
  NodeSet core;
  std::vector<Whisker> whiskers;     // ordered by smallest contained node id
  std::vector<Edge> bridge_edges;    // all bridges of the graph, u < v
};

// Bridges by low-link DFS; the core is the maximum-volume 2-edge-connected
// component (ties: most nodes, then lowest min id); every maximal subtree
// hanging off the core via one bridge forms one whisker.
WhiskerDecomposition whisker_decomposition(const Graph& g);

struct EdgeResistance {
  int u;
  int v;
  double weight;
  double resistance;  // (e_u - e_v)^T L^+ (e_u - e_v)
};

// Effective resistance of every edge through the dense Laplacian
// pseudoinverse. Guarded to n <= 2000; weight*resistance sums to n-1 on a
// connected graph.
std::vector<EdgeResistance> edge_effective_resistance(const Graph& g);

}  // namespace probekit::graphcore
