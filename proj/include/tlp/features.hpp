#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "tlp/pd_distance.hpp"
#include "tlp/persistence.hpp"

namespace tlp {

/// The eight diagram distances for one (u, v) query pair:
/// d1..d4 Wasserstein-2, d5..d8 bottleneck, over the diagram pairs
/// (P+,P-), (P+,Pc), (P+,Pu), (P+,Pv).
struct LinkFeatureVector {
  std::array<double, 8> d{};
  int u = -1, v = -1, k = 0;
  int size_ball_u = 0, size_ball_v = 0, size_combined = 0;
};

struct FeatureDistancePair {
  std::string diagram_pair;  // e.g. "P+,P-"
  std::string metric;        // "wasserstein2" or "bottleneck"
};

/// Canonical ordering of the eight (diagram pair, metric) slots.
const std::vector<FeatureDistancePair>& feature_distance_pairs();

/// Memoizes the symmetrized metric of k-hop ball subgraphs per source node.
/// Not thread-safe; use one cache per worker.
class BallMetricCache {
 public:
  struct Entry {
    DistanceMatrix metric;
    int size = 0;
  };

  const Entry& ball(const Graph& g, int u, int k, const PdConfig& cfg);

 private:
  std::unordered_map<long long, Entry> entries_;  // key: (u, k)
};

/// Algorithm: build the five neighborhood subgraphs of the query pair,
/// compute their dim-0 diagrams under one common tau, and return the
/// 8-distance vector.
LinkFeatureVector link_feature_vector(const Graph& g, int u, int v, int k,
                                      const PdConfig& cfg,
                                      BallMetricCache* cache = nullptr);

}  // namespace tlp
