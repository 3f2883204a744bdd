#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "probekit/errors.hpp"

namespace probekit::graphcore {

struct Neighbor {
  int node;
  double weight;
};

struct Edge {
  int u;
  int v;
  double weight = 1.0;
};

// Undirected weighted graph. Symmetric adjacency with sorted neighbor lists,
// no self-loops, positive weights. Immutable after construction and safe to
// share across threads.
struct Graph {
  std::vector<std::vector<Neighbor>> adj;
  std::vector<double> degree;  // weighted degree per node
  double total_volume = 0.0;   // sum of degrees = 2 * total edge weight
  int dropped_self_loops = 0;

  int node_count() const { return static_cast<int>(adj.size()); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;  // u < v, ascending
};

// Sorted distinct node ids.
using NodeSet = std::vector<int>;

struct CutStats {
  double cut_weight = 0.0;
  double vol_s = 0.0;
  double vol_complement = 0.0;
  int size_s = 0;
  double conductance = 0.0;  // NaN when min(vol_s, vol_complement) == 0
  double expansion = 0.0;
};

bool conductance_defined(const CutStats& stats);

// Merges parallel edges by weight summation and drops self-loops (counted).
// Rejects non-positive weights and out-of-range endpoints.
Graph build_graph(int node_count, const std::vector<Edge>& edges);

// Sorts and validates: distinct ids within [0, n).
NodeSet normalize_node_set(std::vector<int> ids, int node_count);

NodeSet complement(const Graph& g, const NodeSet& s);

double set_volume(const Graph& g, const NodeSet& s);

// Exact edge-weight counting; min-denominator conductance. Errors on the
// empty set and the full vertex set.
CutStats cut_stats(const Graph& g, const NodeSet& s);

std::vector<int> connected_components(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

// Induced subgraph on the sorted set s; local id i corresponds to s[i].
Graph induced_subgraph(const Graph& g, const NodeSet& s);

// Structural content hash used to match profiles to the graph they came from.
std::uint64_t graph_digest(const Graph& g);

}  // namespace probekit::graphcore
