#include "probekit/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <deque>
#include <limits>
#include <map>
#include <string>

namespace probekit::graphcore {

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adj) twice += nbrs.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int u = 0; u < node_count(); ++u)
    for (const Neighbor& nb : adj[static_cast<std::size_t>(u)])
      if (u < nb.node) out.push_back(Edge{u, nb.node, nb.weight});
  return out;
}

bool conductance_defined(const CutStats& stats) { return !std::isnan(stats.conductance); }

Graph build_graph(int node_count, const std::vector<Edge>& edges) {
  if (node_count < 1) throw input_error("build_graph: node count must be >= 1");
  Graph g;
  g.adj.resize(static_cast<std::size_t>(node_count));
  std::vector<std::map<int, double>> merged(static_cast<std::size_t>(node_count));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count)
      throw input_error("build_graph: edge endpoint out of range: (" +
                        std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw input_error("build_graph: edge weights must be positive and finite");
    if (e.u == e.v) {
      ++g.dropped_self_loops;
      continue;
    }
    merged[static_cast<std::size_t>(e.u)][e.v] += e.weight;
    merged[static_cast<std::size_t>(e.v)][e.u] += e.weight;
  }
  g.degree.assign(static_cast<std::size_t>(node_count), 0.0);
  for (int u = 0; u < node_count; ++u) {
    auto& nbrs = g.adj[static_cast<std::size_t>(u)];
    nbrs.reserve(merged[static_cast<std::size_t>(u)].size());
    double deg = 0.0;
    for (const auto& [v, w] : merged[static_cast<std::size_t>(u)]) {
      nbrs.push_back(Neighbor{v, w});
      deg += w;
    }
    g.degree[static_cast<std::size_t>(u)] = deg;
    g.total_volume += deg;
  }
  return g;
}

NodeSet normalize_node_set(std::vector<int> ids, int node_count) {
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || ids[i] >= node_count)
      throw input_error("node set: id " + std::to_string(ids[i]) + " out of range");
    if (i > 0 && ids[i] == ids[i - 1])
      throw input_error("node set: duplicate id " + std::to_string(ids[i]));
  }
  return ids;
}

NodeSet complement(const Graph& g, const NodeSet& s) {
  NodeSet out;
  out.reserve(static_cast<std::size_t>(g.node_count()) - s.size());
  std::size_t pos = 0;
  for (int u = 0; u < g.node_count(); ++u) {
    if (pos < s.size() && s[pos] == u) {
      ++pos;
      continue;
    }
    out.push_back(u);
  }
  return out;
}

double set_volume(const Graph& g, const NodeSet& s) {
  double vol = 0.0;
  for (const int u : s) vol += g.degree[static_cast<std::size_t>(u)];
  return vol;
}

CutStats cut_stats(const Graph& g, const NodeSet& s) {
  const int n = g.node_count();
  if (s.empty() || static_cast<int>(s.size()) >= n)
    throw input_error("cut_stats: conductance is undefined for the empty set and the full vertex set");
  std::vector<char> member(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int u = s[i];
    if (u < 0 || u >= n) throw input_error("cut_stats: node id out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw input_error("cut_stats: set must be sorted and distinct");
    member[static_cast<std::size_t>(u)] = 1;
  }

  CutStats stats;
  stats.size_s = static_cast<int>(s.size());
  for (const int u : s) {
    stats.vol_s += g.degree[static_cast<std::size_t>(u)];
    for (const Neighbor& nb : g.adj[static_cast<std::size_t>(u)])
      if (!member[static_cast<std::size_t>(nb.node)]) stats.cut_weight += nb.weight;
  }
  stats.vol_complement = g.total_volume - stats.vol_s;
  const double min_vol = std::min(stats.vol_s, stats.vol_complement);
  stats.conductance =
      min_vol > 0.0 ? stats.cut_weight / min_vol : std::numeric_limits<double>::quiet_NaN();
  stats.expansion =
      stats.cut_weight / static_cast<double>(std::min(stats.size_s, n - stats.size_s));
  return stats;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  const int n = g.node_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::deque<int> queue;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    comp[static_cast<std::size_t>(start)] = next;
    queue.push_back(start);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const Neighbor& nb : g.adj[static_cast<std::size_t>(u)]) {
        if (comp[static_cast<std::size_t>(nb.node)] < 0) {
          comp[static_cast<std::size_t>(nb.node)] = next;
          queue.push_back(nb.node);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

Graph induced_subgraph(const Graph& g, const NodeSet& s) {
  std::vector<int> local(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) local[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const int u : s)
    for (const Neighbor& nb : g.adj[static_cast<std::size_t>(u)])
      if (u < nb.node && local[static_cast<std::size_t>(nb.node)] >= 0)
        edges.push_back(Edge{local[static_cast<std::size_t>(u)],
                             local[static_cast<std::size_t>(nb.node)], nb.weight});
  return build_graph(static_cast<int>(s.size()), edges);
}

std::uint64_t graph_digest(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  auto mix = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  mix(static_cast<std::uint64_t>(g.node_count()));
  for (int u = 0; u < g.node_count(); ++u) {
    for (const Neighbor& nb : g.adj[static_cast<std::size_t>(u)]) {
      mix(static_cast<std::uint64_t>(nb.node));
      std::uint64_t bits;
      std::memcpy(&bits, &nb.weight, sizeof bits);
      mix(bits);
    }
  }
  return h;
}

}  // namespace probekit::graphcore
