#include "probekit/graphcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <set>
#include <string>

#include "probekit/rng.hpp"

namespace probekit::graphcore {

namespace {

constexpr double kFlowScale = 1048576.0;  // 2^20 capacity quantization

double prefix_phi(const Graph& g, double cut, double vol) {
  const double min_vol = std::min(vol, g.total_volume - vol);
  return min_vol > 0.0 ? cut / min_vol : std::numeric_limits<double>::infinity();
}

// Dinic max-flow with int64 capacities; deterministic for a fixed arc
// insertion order.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  void add_edge(int u, int v, std::int64_t cap) {
    arcs_.push_back({v, head_[static_cast<std::size_t>(u)], cap});
    head_[static_cast<std::size_t>(u)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[static_cast<std::size_t>(v)], 0});
    head_[static_cast<std::size_t>(v)] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t run(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      std::int64_t pushed;
      while ((pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max())) > 0) flow += pushed;
    }
    return flow;
  }

  // Nodes reachable from s in the residual network after run().
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int a = head_[static_cast<std::size_t>(u)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
          seen[static_cast<std::size_t>(arc.to)] = 1;
          queue.push_back(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::deque<int> queue{s};
    level_[static_cast<std::size_t>(s)] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int a = head_[static_cast<std::size_t>(u)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
          level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(u)] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& a = iter_[static_cast<std::size_t>(u)]; a >= 0;
         a = arcs_[static_cast<std::size_t>(a)].next) {
      Arc& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] ==
                             level_[static_cast<std::size_t>(u)] + 1) {
        const std::int64_t pushed = dfs(arc.to, t, std::min(limit, arc.cap));
        if (pushed > 0) {
          arc.cap -= pushed;
          arcs_[static_cast<std::size_t>(a ^ 1)].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> iter_;
  std::vector<int> level_;
};

}  // namespace

PprVector ppr_push(const Graph& g, int seed_node, double alpha, double epsilon) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw input_error("ppr_push: alpha must lie in (0,1)");
  if (!(epsilon > 0.0)) throw input_error("ppr_push: epsilon must be positive");
  const int n = g.node_count();
  if (seed_node < 0 || seed_node >= n) throw input_error("ppr_push: seed node out of range");

  std::vector<double> est(static_cast<std::size_t>(n), 0.0);
  std::vector<double> res(static_cast<std::size_t>(n), 0.0);
  std::vector<char> queued(static_cast<std::size_t>(n), 0);
  std::deque<int> queue;
  res[static_cast<std::size_t>(seed_node)] = 1.0;

  auto active = [&](int u) {
    const double deg = g.degree[static_cast<std::size_t>(u)];
    if (deg == 0.0) return res[static_cast<std::size_t>(u)] > 0.0;
    return res[static_cast<std::size_t>(u)] >= epsilon * deg;
  };
  if (active(seed_node)) {
    queue.push_back(seed_node);
    queued[static_cast<std::size_t>(seed_node)] = 1;
  }

  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    queued[static_cast<std::size_t>(u)] = 0;
    if (!active(u)) continue;
    const double r = res[static_cast<std::size_t>(u)];
    const double deg = g.degree[static_cast<std::size_t>(u)];
    if (deg == 0.0) {
      // teleport-only walk from an isolated node stays put
      est[static_cast<std::size_t>(u)] += r;
      res[static_cast<std::size_t>(u)] = 0.0;
      continue;
    }
    est[static_cast<std::size_t>(u)] += alpha * r;
    res[static_cast<std::size_t>(u)] = 0.0;
    const double spread = (1.0 - alpha) * r / deg;
    for (const Neighbor& nb : g.adj[static_cast<std::size_t>(u)]) {
      res[static_cast<std::size_t>(nb.node)] += spread * nb.weight;
      if (!queued[static_cast<std::size_t>(nb.node)] && active(nb.node)) {
        queue.push_back(nb.node);
        queued[static_cast<std::size_t>(nb.node)] = 1;
      }
    }
    if (!queued[static_cast<std::size_t>(u)] && active(u)) {
      queue.push_back(u);
      queued[static_cast<std::size_t>(u)] = 1;
    }
  }

  PprVector out;
  out.alpha = alpha;
  out.epsilon = epsilon;
  for (int v = 0; v < n; ++v) {
    if (est[static_cast<std::size_t>(v)] > 0.0) out.estimates.emplace_back(v, est[static_cast<std::size_t>(v)]);
    if (res[static_cast<std::size_t>(v)] > 0.0) out.residuals.emplace_back(v, res[static_cast<std::size_t>(v)]);
  }
  return out;
}

Vector ppr_dense_estimates(const Graph& g, const PprVector& ppr) {
  Vector dense = Vector::Zero(g.node_count());
  for (const auto& [v, p] : ppr.estimates) dense(v) = p;
  return dense;
}

double SweepCurve::prefix_conductance(const Graph& g, std::size_t prefix_size) const {
  return prefix_phi(g, prefix_cut[prefix_size - 1], prefix_vol[prefix_size - 1]);
}

SweepCurve sweep_curve(const Graph& g, const std::vector<double>& ranking) {
  const int n = g.node_count();
  if (ranking.empty()) throw input_error("sweep_curve: ranking must be non-empty");
  if (static_cast<int>(ranking.size()) != n)
    throw input_error("sweep_curve: ranking length does not match node count");

  SweepCurve curve;
  curve.order.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) curve.order[static_cast<std::size_t>(i)] = i;
  std::vector<double> key(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const double deg = g.degree[static_cast<std::size_t>(i)];
    key[static_cast<std::size_t>(i)] = deg > 0.0 ? ranking[static_cast<std::size_t>(i)] / deg : 0.0;
  }
  std::sort(curve.order.begin(), curve.order.end(), [&](int a, int b) {
    if (key[static_cast<std::size_t>(a)] != key[static_cast<std::size_t>(b)])
      return key[static_cast<std::size_t>(a)] > key[static_cast<std::size_t>(b)];
    return a < b;
  });

  const std::size_t prefixes = static_cast<std::size_t>(std::max(0, n - 1));
  curve.prefix_cut.resize(prefixes);
  curve.prefix_vol.resize(prefixes);
  std::vector<char> member(static_cast<std::size_t>(n), 0);
  double cut = 0.0;
  double vol = 0.0;
  for (std::size_t i = 0; i < prefixes; ++i) {
    const int u = curve.order[i];
    double to_inside = 0.0;
    for (const Neighbor& nb : g.adj[static_cast<std::size_t>(u)])
      if (member[static_cast<std::size_t>(nb.node)]) to_inside += nb.weight;
    cut += g.degree[static_cast<std::size_t>(u)] - 2.0 * to_inside;
    vol += g.degree[static_cast<std::size_t>(u)];
    member[static_cast<std::size_t>(u)] = 1;
    curve.prefix_cut[i] = cut;
    curve.prefix_vol[i] = vol;
  }
  return curve;
}

std::pair<NodeSet, CutStats> sweep_cut(const Graph& g, const std::vector<double>& ranking) {
  const SweepCurve curve = sweep_curve(g, ranking);
  if (curve.prefix_cut.empty())
    throw input_error("sweep_cut: graph needs at least two nodes");
  std::size_t best = curve.prefix_cut.size();
  double best_phi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < curve.prefix_cut.size(); ++i) {
    const double phi = prefix_phi(g, curve.prefix_cut[i], curve.prefix_vol[i]);
    if (phi < best_phi) {
      best_phi = phi;
      best = i;
    }
  }
  if (best == curve.prefix_cut.size())
    throw numerical_error("sweep_cut: no prefix has defined conductance");
  NodeSet s(curve.order.begin(), curve.order.begin() + static_cast<std::ptrdiff_t>(best) + 1);
  std::sort(s.begin(), s.end());
  return {s, cut_stats(g, s)};
}

std::vector<SweepCurve> local_spectral_sweeps(const Graph& g, int seed_node,
                                              double target_volume) {
  if (!(target_volume > 0.0) || target_volume > g.total_volume / 2.0)
    throw input_error("local_spectral: target volume must lie in (0, total_volume/2]");
  const double epsilon = 1.0 / (10.0 * target_volume);
  std::vector<SweepCurve> curves;
  curves.reserve(kLocalAlphaGrid.size());
  for (const double alpha : kLocalAlphaGrid) {
    const PprVector ppr = ppr_push(g, seed_node, alpha, epsilon);
    std::vector<double> ranking(static_cast<std::size_t>(g.node_count()), 0.0);
    for (const auto& [v, p] : ppr.estimates) ranking[static_cast<std::size_t>(v)] = p;
    curves.push_back(sweep_curve(g, ranking));
  }
  return curves;
}

std::pair<NodeSet, CutStats> local_spectral_cluster(const Graph& g, int seed_node,
                                                    double target_volume) {
  const std::vector<SweepCurve> curves = local_spectral_sweeps(g, seed_node, target_volume);
  const double vol_cap = 2.0 * target_volume;

  std::size_t best_curve = 0, best_prefix = 0;
  double best_phi = std::numeric_limits<double>::infinity();
  bool found = false;
  for (int capped = 1; capped >= 0 && !found; --capped) {
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
      const SweepCurve& curve = curves[ci];
      for (std::size_t i = 0; i < curve.prefix_cut.size(); ++i) {
        if (capped && curve.prefix_vol[i] > vol_cap) continue;
        const double phi = prefix_phi(g, curve.prefix_cut[i], curve.prefix_vol[i]);
        if (phi < best_phi) {
          best_phi = phi;
          best_curve = ci;
          best_prefix = i;
          found = true;
        }
      }
    }
    if (found) break;  // fall back to uncapped only when nothing fits the cap
  }
  if (!found) throw numerical_error("local_spectral_cluster: no valid sweep prefix");

  const SweepCurve& curve = curves[best_curve];
  NodeSet s(curve.order.begin(),
            curve.order.begin() + static_cast<std::ptrdiff_t>(best_prefix) + 1);
  std::sort(s.begin(), s.end());
  return {s, cut_stats(g, s)};
}

Vector fiedler_vector(const Graph& g) {
  const int n = g.node_count();
  if (n < 2) throw input_error("fiedler_vector: graph needs at least two nodes");
  if (!is_connected(g))
    throw input_error("fiedler_vector: disconnected input; process components separately");

  Vector sqrt_deg(n);
  for (int i = 0; i < n; ++i) sqrt_deg(i) = std::sqrt(g.degree[static_cast<std::size_t>(i)]);
  Vector v0 = sqrt_deg / sqrt_deg.norm();

  // 2I - L_sym applied through the adjacency lists.
  auto apply_shifted = [&](const Vector& x) {
    Vector y = x;  // (2 - 1) x + D^{-1/2} A D^{-1/2} x
    for (int u = 0; u < n; ++u) {
      double acc = 0.0;
      for (const Neighbor& nb : g.adj[static_cast<std::size_t>(u)])
        acc += nb.weight * x(nb.node) / sqrt_deg(nb.node);
      y(u) += acc / sqrt_deg(u);
    }
    return y;
  };

  Rng rng(0x9e3779b97f4a7c15ull);
  Vector x(n);
  for (int i = 0; i < n; ++i) x(i) = rng.uniform() - 0.5;
  x -= v0.dot(x) * v0;
  if (x.norm() < 1e-12) x = Vector::Unit(n, 0) - v0(0) * v0;
  x.normalize();

  constexpr int kMaxIters = 10000;
  constexpr double kTol = 1e-8;
  for (int iter = 0; iter < kMaxIters; ++iter) {
    Vector y = apply_shifted(x);
    y -= v0.dot(y) * v0;
    const double norm = y.norm();
    if (norm < 1e-14) break;  // graph has no second eigendirection to find
    y /= norm;
    if (y.dot(x) < 0.0) y = -y;
    const double delta = (y - x).norm();
    x = y;
    if (delta <= kTol) break;
  }

  // canonical sign: largest-magnitude entry positive, ties by lowest id
  int arg = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(x(i)) > std::abs(x(arg))) arg = i;
  if (x(arg) < 0.0) x = -x;
  return x;
}

std::pair<NodeSet, CutStats> spectral_bisection(const Graph& g) {
  const Vector x = fiedler_vector(g);
  std::vector<double> ranking(static_cast<std::size_t>(g.node_count()));
  for (int i = 0; i < g.node_count(); ++i)
    ranking[static_cast<std::size_t>(i)] =
        std::sqrt(g.degree[static_cast<std::size_t>(i)]) * x(i);
  auto [s, stats] = sweep_cut(g, ranking);
  if (stats.vol_s > g.total_volume / 2.0) {
    s = complement(g, s);
    stats = cut_stats(g, s);
  }
  return {s, stats};
}

std::pair<NodeSet, CutStats> mqi_improve(const Graph& g, const NodeSet& s_in) {
  const int n = g.node_count();
  NodeSet cur = normalize_node_set(s_in, n);
  if (cur.empty()) throw input_error("mqi_improve: set must be non-empty");
  CutStats cur_stats = cut_stats(g, cur);
  if (cur_stats.vol_s > g.total_volume / 2.0 + 1e-12)
    throw input_error("mqi_improve: vol(S) must not exceed half the total volume");

  for (;;) {
    const double q = cur_stats.conductance;
    const int sz = static_cast<int>(cur.size());
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < sz; ++i) local[static_cast<std::size_t>(cur[static_cast<std::size_t>(i)]]] = i;
    const int source = sz;
    const int sink = sz + 1;
    MaxFlow flow(sz + 2);

    for (int i = 0; i < sz; ++i) {
      const int u = cur[static_cast<std::size_t>(i)];
      double boundary = 0.0;
      for (const Neighbor& nb : g.adj[static_cast<std::size_t>(u)]) {
        const int j = local[static_cast<std::size_t>(nb.node)];
        if (j < 0) {
          boundary += nb.weight;
        } else if (j > i) {
          const std::int64_t cap = std::llround(nb.weight * kFlowScale);
          flow.add_edge(i, j, cap);
          flow.add_edge(j, i, cap);
        }
      }
      if (boundary > 0.0) flow.add_edge(source, i, std::llround(boundary * kFlowScale));
      flow.add_edge(i, sink, std::llround(q * g.degree[static_cast<std::size_t>(u)] * kFlowScale));
    }

    flow.run(source, sink);
    const std::vector<char> reach = flow.source_side(source);
    NodeSet candidate;
    for (int i = 0; i < sz; ++i)
      if (!reach[static_cast<std::size_t>(i)]) candidate.push_back(cur[static_cast<std::size_t>(i)]);
    if (candidate.empty() || candidate.size() == cur.size()) break;

    const CutStats cand_stats = cut_stats(g, candidate);
    if (!(cand_stats.conductance < cur_stats.conductance)) break;
    cur = std::move(candidate);
    cur_stats = cand_stats;
  }
  return {cur, cur_stats};
}

WhiskerDecomposition whisker_decomposition(const Graph& g) {
  const int n = g.node_count();
  if (!is_connected(g))
    throw input_error("whisker_decomposition: disconnected input");

  // bridges via iterative low-link DFS (graph is simple after merging)
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::set<std::pair<int, int>> bridges;
  int timer = 0;
  struct Frame {
    int node;
    int parent;
    std::size_t next_edge;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    stack.push_back({root, -1, 0});
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const auto& nbrs = g.adj[static_cast<std::size_t>(fr.node)];
      if (fr.next_edge < nbrs.size()) {
        const int to = nbrs[fr.next_edge].node;
        ++fr.next_edge;
        if (to == fr.parent) continue;
        if (disc[static_cast<std::size_t>(to)] >= 0) {
          low[static_cast<std::size_t>(fr.node)] =
              std::min(low[static_cast<std::size_t>(fr.node)], disc[static_cast<std::size_t>(to)]);
        } else {
          disc[static_cast<std::size_t>(to)] = low[static_cast<std::size_t>(to)] = timer++;
          stack.push_back({to, fr.node, 0});
        }
      } else {
        const int u = fr.node;
        const int parent = fr.parent;
        stack.pop_back();
        if (parent >= 0) {
          low[static_cast<std::size_t>(parent)] =
              std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(u)]);
          if (low[static_cast<std::size_t>(u)] > disc[static_cast<std::size_t>(parent)])
            bridges.insert({std::min(parent, u), std::max(parent, u)});
        }
      }
    }
  }

  // 2-edge-connected components: connectivity with bridges removed
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int comp_count = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    std::deque<int> queue{start};
    comp[static_cast<std::size_t>(start)] = comp_count;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const Neighbor& nb : g.adj[static_cast<std::size_t>(u)]) {
        if (comp[static_cast<std::size_t>(nb.node)] >= 0) continue;
        if (bridges.count({std::min(u, nb.node), std::max(u, nb.node)})) continue;
        comp[static_cast<std::size_t>(nb.node)] = comp_count;
        queue.push_back(nb.node);
      }
    }
    ++comp_count;
  }

  std::vector<double> comp_vol(static_cast<std::size_t>(comp_count), 0.0);
  std::vector<int> comp_size(static_cast<std::size_t>(comp_count), 0);
  std::vector<int> comp_min_id(static_cast<std::size_t>(comp_count), n);
  for (int u = 0; u < n; ++u) {
    const int c = comp[static_cast<std::size_t>(u)];
    comp_vol[static_cast<std::size_t>(c)] += g.degree[static_cast<std::size_t>(u)];
    comp_size[static_cast<std::size_t>(c)]++;
    comp_min_id[static_cast<std::size_t>(c)] = std::min(comp_min_id[static_cast<std::size_t>(c)], u);
  }
  int core_comp = 0;
  for (int c = 1; c < comp_count; ++c) {
    const auto key = [&](int cc) {
      return std::make_tuple(comp_vol[static_cast<std::size_t>(cc)],
                             static_cast<double>(comp_size[static_cast<std::size_t>(cc)]),
                             static_cast<double>(-comp_min_id[static_cast<std::size_t>(cc)]));
    };
    if (key(c) > key(core_comp)) core_comp = c;
  }

  // bridge tree: components as supernodes joined by bridges
  std::vector<std::vector<std::pair<int, Edge>>> tree(static_cast<std::size_t>(comp_count));
  for (const auto& [bu, bv] : bridges) {
    double w = 0.0;
    for (const Neighbor& nb : g.adj[static_cast<std::size_t>(bu)])
      if (nb.node == bv) w = nb.weight;
    const int cu = comp[static_cast<std::size_t>(bu)];
    const int cv = comp[static_cast<std::size_t>(bv)];
    tree[static_cast<std::size_t>(cu)].push_back({cv, Edge{bu, bv, w}});
    tree[static_cast<std::size_t>(cv)].push_back({cu, Edge{bv, bu, w}});
  }

  WhiskerDecomposition out;
  for (const auto& [bu, bv] : bridges) {
    double w = 0.0;
    for (const Neighbor& nb : g.adj[static_cast<std::size_t>(bu)])
      if (nb.node == bv) w = nb.weight;
    out.bridge_edges.push_back(Edge{bu, bv, w});
  }

  for (int u = 0; u < n; ++u)
    if (comp[static_cast<std::size_t>(u)] == core_comp) out.core.push_back(u);

  // each subtree of the bridge tree hanging off the core is one whisker
  for (const auto& [child, bridge] : tree[static_cast<std::size_t>(core_comp)]) {
    std::vector<char> in_subtree(static_cast<std::size_t>(comp_count), 0);
    std::deque<std::pair<int, int>> queue{{child, core_comp}};
    in_subtree[static_cast<std::size_t>(child)] = 1;
    while (!queue.empty()) {
      const auto [c, from] = queue.front();
      queue.pop_front();
      for (const auto& [next, _] : tree[static_cast<std::size_t>(c)]) {
        if (next == from || in_subtree[static_cast<std::size_t>(next)]) continue;
        // subtree interior never loops back to the core in a tree
        in_subtree[static_cast<std::size_t>(next)] = 1;
        queue.push_back({next, c});
      }
    }
    Whisker w;
    w.bridge = bridge;  // bridge.u on the core side
    for (int u = 0; u < n; ++u)
      if (in_subtree[static_cast<std::size_t>(comp[static_cast<std::size_t>(u)])])
        w.nodes.push_back(u);
    out.whiskers.push_back(std::move(w));
  }
  std::sort(out.whiskers.begin(), out.whiskers.end(),
            [](const Whisker& a, const Whisker& b) { return a.nodes.front() < b.nodes.front(); });
  return out;
}

std::vector<EdgeResistance> edge_effective_resistance(const Graph& g) {
  const int n = g.node_count();
  if (n > 2000)
    throw guard_error("edge_effective_resistance: node count " + std::to_string(n) +
                      " exceeds the dense pseudoinverse guard of 2000");
  if (!is_connected(g)) throw input_error("edge_effective_resistance: disconnected input");

  Matrix lap = Matrix::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    lap(u, u) = g.degree[static_cast<std::size_t>(u)];
    for (const Neighbor& nb : g.adj[static_cast<std::size_t>(u)]) lap(u, nb.node) -= nb.weight;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(lap);
  const Vector& evals = eig.eigenvalues();
  const Matrix& evecs = eig.eigenvectors();
  const double cutoff = 1e-12 * std::max(1.0, evals(n - 1));
  Matrix pinv = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    if (evals(i) > cutoff) pinv += evecs.col(i) * evecs.col(i).transpose() / evals(i);

  std::vector<EdgeResistance> out;
  for (const Edge& e : g.edges()) {
    const double r = pinv(e.u, e.u) + pinv(e.v, e.v) - 2.0 * pinv(e.u, e.v);
    out.push_back(EdgeResistance{e.u, e.v, e.weight, r});
  }
  return out;
}

}  // namespace probekit::graphcore
