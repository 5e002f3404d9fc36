#include "tlp/features.hpp"

#include <algorithm>
#include <stdexcept>

namespace tlp {

const std::vector<FeatureDistancePair>& feature_distance_pairs() {
  static const std::vector<FeatureDistancePair> kPairs = {
      {"P+,P-", "wasserstein2"}, {"P+,Pc", "wasserstein2"},
      {"P+,Pu", "wasserstein2"}, {"P+,Pv", "wasserstein2"},
      {"P+,P-", "bottleneck"},   {"P+,Pc", "bottleneck"},
      {"P+,Pu", "bottleneck"},   {"P+,Pv", "bottleneck"},
  };
  return kPairs;
}

const BallMetricCache::Entry& BallMetricCache::ball(const Graph& g, int u, int k,
                                                    const PdConfig& cfg) {
  long long key = static_cast<long long>(u) * 131071LL + k;
  auto it = entries_.find(key);
  if (it != entries_.end()) return it->second;
  NodeSet s = khop_neighborhood(g, u, k);
  Graph sub = induce(g, s);
  Entry e{graph_metric(sub, cfg), static_cast<int>(s.size())};
  return entries_.emplace(key, std::move(e)).first->second;
}

namespace {

int local_index(const NodeSet& s, int parent) {
  auto it = std::lower_bound(s.members.begin(), s.members.end(), parent);
  return static_cast<int>(it - s.members.begin());
}

/// Metric of the unit-weight complete graph on n nodes: every off-diagonal
/// distance is 1. Identical to apsp(complete_graph(...)).
DistanceMatrix complete_metric(int n) {
  DistanceMatrix d(n, static_cast<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) d.at(i, j) = 1.0;
  return d;
}

}  // namespace

LinkFeatureVector link_feature_vector(const Graph& g, int u, int v, int k,
                                      const PdConfig& cfg,
                                      BallMetricCache* cache) {
  if (u == v) throw std::invalid_argument("query nodes must be distinct");
  if (u < 0 || u >= g.num_nodes() || v < 0 || v >= g.num_nodes())
    throw std::invalid_argument("invalid node index");
  if (k < 1) throw std::invalid_argument("k must be >= 1");

  BallMetricCache local_cache;
  BallMetricCache& c = cache ? *cache : local_cache;
  const BallMetricCache::Entry& ball_u = c.ball(g, u, k, cfg);
  const BallMetricCache::Entry& ball_v = c.ball(g, v, k, cfg);

  NodeSet combined = combined_neighborhood(g, u, v, k);
  Graph sub = induce(g, combined);
  int lu = local_index(combined, u);
  int lv = local_index(combined, v);
  DistanceMatrix d_plus = graph_metric(toggle_edge(sub, lu, lv, true), cfg);
  DistanceMatrix d_minus = graph_metric(toggle_edge(sub, lu, lv, false), cfg);
  DistanceMatrix d_complete = complete_metric(static_cast<int>(combined.size()));

  // One tau for all five diagrams of this query: the max of the
  // per-subgraph policy values (or the explicit override).
  double tau;
  if (cfg.tau.has_value()) {
    tau = *cfg.tau;
  } else {
    tau = 0.0;
    for (const DistanceMatrix* m : std::initializer_list<const DistanceMatrix*>{
             &ball_u.metric, &ball_v.metric, &d_plus, &d_minus, &d_complete})
      tau = std::max(tau, 1.5 * m->sentinel_m());
  }

  PersistenceDiagram p_u = persistence_diagram_0(ball_u.metric, tau);
  PersistenceDiagram p_v = persistence_diagram_0(ball_v.metric, tau);
  PersistenceDiagram p_plus = persistence_diagram_0(d_plus, tau);
  PersistenceDiagram p_minus = persistence_diagram_0(d_minus, tau);
  PersistenceDiagram p_complete = persistence_diagram_0(d_complete, tau);

  LinkFeatureVector out;
  out.u = u;
  out.v = v;
  out.k = k;
  out.size_ball_u = ball_u.size;
  out.size_ball_v = ball_v.size;
  out.size_combined = static_cast<int>(combined.size());
  out.d[0] = wasserstein_q(p_plus, p_minus, 2.0);
  out.d[1] = wasserstein_q(p_plus, p_complete, 2.0);
  out.d[2] = wasserstein_q(p_plus, p_u, 2.0);
  out.d[3] = wasserstein_q(p_plus, p_v, 2.0);
  out.d[4] = bottleneck(p_plus, p_minus);
  out.d[5] = bottleneck(p_plus, p_complete);
  out.d[6] = bottleneck(p_plus, p_u);
  out.d[7] = bottleneck(p_plus, p_v);
  return out;
}

}  // namespace tlp
