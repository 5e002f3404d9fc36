#include "tlp/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tlp {

int RankedList::rank_of(const std::string& target) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].first == target) return static_cast<int>(i) + 1;
  return 0;
}

Method parse_method(const std::string& name) {
  if (name == "aa") return Method::kAdamicAdar;
  if (name == "mw") return Method::kMilneWitten;
  if (name == "topology") return Method::kTopology;
  throw std::invalid_argument("unknown method: " + name);
}

std::string method_name(Method m) {
  switch (m) {
    case Method::kAdamicAdar: return "aa";
    case Method::kMilneWitten: return "mw";
    case Method::kTopology: return "topology";
  }
  return "?";
}

namespace {

/// 1-based ranks of a list's entries in its own order, ties (equal scores)
/// replaced by the mean of the tied positions.
std::unordered_map<std::string, double> average_ranks(const RankedList& list) {
  std::unordered_map<std::string, double> rank;
  const auto& e = list.entries;
  std::size_t i = 0;
  while (i < e.size()) {
    std::size_t j = i;
    while (j + 1 < e.size() && e[j + 1].second == e[i].second) ++j;
    double mean_pos = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) rank[e[t].first] = mean_pos;
    i = j + 1;
  }
  return rank;
}

std::vector<int> neighbor_set_undirected(const Graph& g, int v) {
  std::vector<int> out;
  for (auto [w, wt] : g.undirected_neighbors(v)) {
    (void)wt;
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> in_neighbor_set(const Graph& g, int v) {
  if (!g.directed()) return neighbor_set_undirected(g, v);
  std::vector<int> out;
  for (const Edge& e : g.edges())
    if (e.dst == v) out.push_back(e.src);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void sort_entries(RankedList& list) {
  std::sort(list.entries.begin(), list.entries.end(),
            [&](const auto& a, const auto& b) {
              if (a.second != b.second)
                return list.ascending ? a.second < b.second : a.second > b.second;
              return a.first < b.first;
            });
}

}  // namespace

RankedList rank_product(const std::vector<RankedList>& lists) {
  if (lists.empty()) throw std::invalid_argument("need at least one ranked list");
  std::vector<std::string> candidates;
  for (const auto& e : lists.front().entries) candidates.push_back(e.first);
  std::sort(candidates.begin(), candidates.end());

  const double m = static_cast<double>(lists.size());
  std::unordered_map<std::string, double> rp;
  for (const std::string& c : candidates) rp[c] = 1.0;
  for (const RankedList& list : lists) {
    auto ranks = average_ranks(list);
    if (ranks.size() != candidates.size())
      throw std::invalid_argument("ranked lists cover different candidate sets");
    for (const std::string& c : candidates) {
      auto it = ranks.find(c);
      if (it == ranks.end())
        throw std::invalid_argument("candidate missing from a ranked list: " + c);
      rp[c] *= it->second;
    }
  }

  RankedList out;
  out.source = lists.front().source;
  out.ascending = true;
  for (const std::string& c : candidates)
    out.entries.emplace_back(c, std::pow(rp[c], 1.0 / m));
  sort_entries(out);
  return out;
}

double adamic_adar(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("query nodes must be distinct");
  std::vector<int> nu = neighbor_set_undirected(g, u);
  std::vector<int> nv = neighbor_set_undirected(g, v);
  std::vector<int> common;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                        std::back_inserter(common));
  double score = 0.0;
  for (int w : common) {
    double deg = static_cast<double>(neighbor_set_undirected(g, w).size());
    score += 1.0 / std::log(deg);
  }
  return score;
}

double milne_witten(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("query nodes must be distinct");
  std::vector<int> a = in_neighbor_set(g, u);
  std::vector<int> b = in_neighbor_set(g, v);
  if (a.empty() || b.empty()) return 0.0;
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  if (common.empty()) return 0.0;
  double lo = static_cast<double>(std::min(a.size(), b.size()));
  double hi = static_cast<double>(std::max(a.size(), b.size()));
  double inter = static_cast<double>(common.size());
  double n = static_cast<double>(g.num_nodes());
  double denom = std::log(n) - std::log(lo);
  if (denom <= 0.0) return 1.0;
  double score = 1.0 - (std::log(hi) - std::log(inter)) / denom;
  return std::clamp(score, 0.0, 1.0);
}

SplitSpec holdout_split(const Graph& g, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0))
    throw std::invalid_argument("test fraction must lie in (0,1)");
  const int m = g.num_edges();
  if (m < 2) throw std::invalid_argument("need at least two edges to split");
  int t = static_cast<int>(std::floor(fraction * m + 0.5));
  if (t == 0) throw std::invalid_argument("fraction yields an empty test set");
  if (t >= m) t = m - 1;

  // Explicit Fisher-Yates so splits are identical across standard libraries.
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  for (int i = m - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(idx[i], idx[j]);
  }

  std::unordered_set<int> test_idx(idx.begin(), idx.begin() + t);
  SplitSpec split;
  split.test_fraction = fraction;
  split.rng_seed = seed;
  std::vector<Edge> train_edges;
  for (int i = 0; i < m; ++i) {
    if (test_idx.count(i))
      split.test_edges.push_back(g.edges()[i]);
    else
      train_edges.push_back(g.edges()[i]);
  }
  std::sort(split.test_edges.begin(), split.test_edges.end(),
            [](const Edge& a, const Edge& b) {
              return std::pair{a.src, a.dst} < std::pair{b.src, b.dst};
            });
  split.train = Graph(g.labels(), g.directed(), std::move(train_edges), g.weighted());
  return split;
}

RankedList rank_targets(const Graph& train, int source, Method method,
                        const RankOptions& opts, BallMetricCache* cache) {
  if (source < 0 || source >= train.num_nodes())
    throw std::invalid_argument("invalid source node");

  std::vector<int> pool;
  if (opts.pool == PoolPolicy::kTwoKHop) {
    NodeSet ball = khop_neighborhood(train, source, 2 * opts.k);
    for (int v : ball.members)
      if (v != source) pool.push_back(v);
  } else {
    for (int v = 0; v < train.num_nodes(); ++v)
      if (v != source) pool.push_back(v);
  }
  if (opts.filtered) {
    std::erase_if(pool, [&](int v) { return train.has_edge(source, v); });
  }

  RankedList out;
  out.source = train.label(source);
  if (method == Method::kAdamicAdar || method == Method::kMilneWitten) {
    out.ascending = false;
    for (int v : pool) {
      double s = method == Method::kAdamicAdar ? adamic_adar(train, source, v)
                                               : milne_witten(train, source, v);
      out.entries.emplace_back(train.label(v), s);
    }
    sort_entries(out);
    return out;
  }

  // Topology: one ascending list per distance slot, combined by rank product.
  std::vector<RankedList> lists(8);
  for (auto& l : lists) {
    l.source = train.label(source);
    l.ascending = true;
  }
  for (int v : pool) {
    LinkFeatureVector f =
        link_feature_vector(train, source, v, opts.k, opts.cfg, cache);
    for (int i = 0; i < 8; ++i)
      lists[i].entries.emplace_back(train.label(v), f.d[i]);
  }
  if (lists.front().entries.empty()) return out;
  for (auto& l : lists) sort_entries(l);
  RankedList combined = rank_product(lists);
  combined.source = train.label(source);
  return combined;
}

EvalReport hits_at_n(const SplitSpec& split,
                     const std::map<std::string, RankedList>& rankings,
                     const std::vector<int>& ns) {
  if (split.test_edges.empty()) throw std::invalid_argument("empty test set");
  if (ns.empty()) throw std::invalid_argument("no N values given");
  EvalReport report;
  report.test_fraction = split.test_fraction;
  report.rng_seed = split.rng_seed;
  report.num_test = static_cast<int>(split.test_edges.size());
  for (int n : ns) report.hits[n] = 0.0;
  for (const Edge& e : split.test_edges) {
    const std::string& src = split.train.label(e.src);
    const std::string& dst = split.train.label(e.dst);
    auto it = rankings.find(src);
    if (it == rankings.end())
      throw std::invalid_argument("no ranking for test source " + src);
    int rank = it->second.rank_of(dst);  // 0 when outside the pool: a miss
    for (int n : ns)
      if (rank > 0 && rank <= n) report.hits[n] += 1.0;
  }
  for (auto& [n, h] : report.hits) h /= static_cast<double>(report.num_test);
  return report;
}

EvalReport evaluate_method(const SplitSpec& split, Method method,
                           const RankOptions& opts, const std::vector<int>& ns) {
  std::set<std::string> source_labels;
  for (const Edge& e : split.test_edges)
    source_labels.insert(split.train.label(e.src));
  const std::vector<std::string> sources(source_labels.begin(),
                                         source_labels.end());

  std::vector<RankedList> results(sources.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < sources.size(); ++i) {
    int src = *split.train.index_of(sources[i]);
    BallMetricCache cache;  // per-worker, reused across this source's candidates
    results[i] = rank_targets(split.train, src, method, opts, &cache);
  }

  std::map<std::string, RankedList> rankings;
  for (std::size_t i = 0; i < sources.size(); ++i)
    rankings.emplace(sources[i], std::move(results[i]));

  EvalReport report = hits_at_n(split, rankings, ns);
  report.method = method_name(method);
  report.pool = opts.pool == PoolPolicy::kAll ? "all" : "2khop";
  report.filtered = opts.filtered;
  return report;
}

}  // namespace tlp
