#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tlp/features.hpp"
#include "tlp/graph.hpp"

namespace tlp {

/// Ranked list of candidate targets for one source node.
struct RankedList {
  std::string source;
  std::vector<std::pair<std::string, double>> entries;  // best first
  bool ascending = false;  // true when smaller scores rank higher

  /// 1-based rank of a target label, or 0 if absent.
  int rank_of(const std::string& target) const;
};

/// Reproducible train/test edge split.
struct SplitSpec {
  double test_fraction = 0.05;
  std::uint64_t rng_seed = 0;
  std::vector<Edge> test_edges;  // indices valid in train (nodes retained)
  Graph train;
};

struct EvalReport {
  std::string method;
  double test_fraction = 0.0;
  std::uint64_t rng_seed = 0;
  std::string pool;
  bool filtered = false;
  int num_test = 0;
  std::map<int, double> hits;  // N -> hit rate
};

enum class Method { kAdamicAdar, kMilneWitten, kTopology };

Method parse_method(const std::string& name);  // "aa" | "mw" | "topology"
std::string method_name(Method m);

enum class PoolPolicy { kAll, kTwoKHop };

struct RankOptions {
  int k = 2;
  PdConfig cfg;
  PoolPolicy pool = PoolPolicy::kAll;
  bool filtered = false;  // drop candidates already adjacent to the source
};

/// Rank-product aggregation: each candidate's score is the geometric mean of
/// its 1-based ranks across the input lists (ties within a list get the mean
/// of the tied positions); output sorted ascending, final ties by label.
RankedList rank_product(const std::vector<RankedList>& lists);

/// Sum over common neighbors w of 1/ln(deg(w)); neighbors and degrees taken
/// ignoring edge direction.
double adamic_adar(const Graph& g, int u, int v);

/// Normalized link-distance relatedness on in-neighbor sets (plain neighbor
/// sets when undirected), clamped to [0,1]; 0 on disjoint neighborhoods.
double milne_witten(const Graph& g, int u, int v);

/// Holds out round(fraction * m) edges chosen by a seeded generator; the
/// train graph keeps all nodes.
SplitSpec holdout_split(const Graph& g, double fraction, std::uint64_t seed);

/// Ranks every pool candidate for one source node with the given method.
RankedList rank_targets(const Graph& train, int source, Method method,
                        const RankOptions& opts,
                        BallMetricCache* cache = nullptr);

/// Hit rate at each N: fraction of test edges whose target appears within
/// the top N of its source's ranking. Targets outside the pool are misses.
EvalReport hits_at_n(const SplitSpec& split,
                     const std::map<std::string, RankedList>& rankings,
                     const std::vector<int>& ns);

/// Full protocol for one method: rank each test-edge source (OpenMP-parallel
/// over sources, output independent of worker count) and score Hits@N.
EvalReport evaluate_method(const SplitSpec& split, Method method,
                           const RankOptions& opts, const std::vector<int>& ns);

}  // namespace tlp
