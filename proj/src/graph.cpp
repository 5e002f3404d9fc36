#include "tlp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace tlp {

bool NodeSet::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

namespace {

std::pair<int, int> canonical_pair(int u, int v, bool directed) {
  if (!directed && u > v) std::swap(u, v);
  return {u, v};
}

}  // namespace

Graph::Graph(std::vector<std::string> labels, bool directed,
             std::vector<Edge> edges, bool weighted)
    : labels_(std::move(labels)), directed_(directed), weighted_(weighted) {
  const int n = num_nodes();
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.src == e.dst) throw std::invalid_argument("self-loop not allowed");
    if (!(e.weight > 0.0)) throw std::invalid_argument("non-positive edge weight");
    auto [s, d] = canonical_pair(e.src, e.dst, directed_);
    edges_.push_back({s, d, e.weight});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair{a.src, a.dst} < std::pair{b.src, b.dst};
  });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].src == edges_[i - 1].src && edges_[i].dst == edges_[i - 1].dst)
      throw std::invalid_argument("duplicate edge");

  out_.resize(n);
  und_.resize(n);
  for (const Edge& e : edges_) {
    out_[e.src].emplace_back(e.dst, e.weight);
    if (!directed_) out_[e.dst].emplace_back(e.src, e.weight);
    und_[e.src].emplace_back(e.dst, e.weight);
    und_[e.dst].emplace_back(e.src, e.weight);
  }
}

std::optional<int> Graph::index_of(const std::string& label) const {
  for (int i = 0; i < num_nodes(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool Graph::has_edge(int u, int v) const {
  auto [s, d] = canonical_pair(u, v, directed_);
  Edge probe{s, d, 0.0};
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), probe, [](const Edge& a, const Edge& b) {
        return std::pair{a.src, a.dst} < std::pair{b.src, b.dst};
      });
  return it != edges_.end() && it->src == s && it->dst == d;
}

double Graph::max_edge_weight() const {
  double w = 1.0;
  for (const Edge& e : edges_) w = std::max(w, e.weight);
  return w;
}

double Graph::mean_edge_weight() const {
  if (edges_.empty()) return 1.0;
  double sum = 0.0;
  for (const Edge& e : edges_) sum += e.weight;
  return sum / static_cast<double>(edges_.size());
}

DistanceMatrix::DistanceMatrix(int n, double sentinel_m)
    : n_(n), m_(sentinel_m), data_(static_cast<std::size_t>(n) * n, 0.0) {}

double DistanceMatrix::max_entry() const {
  double mx = 0.0;
  for (double x : data_) mx = std::max(mx, x);
  return mx;
}

bool DistanceMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Graph load_edge_list(std::istream& in, bool directed, bool weighted,
                     EdgeListStats* stats) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<Edge> edges;
  std::unordered_map<std::int64_t, bool> seen;  // (src, dst) packed
  EdgeListStats local;

  auto intern = [&](const std::string& lbl) {
    auto it = index.find(lbl);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(labels.size());
    labels.push_back(lbl);
    index.emplace(lbl, id);
    return id;
  };

  std::string line;
  std::size_t lineno = 0;
  bool any_data = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') continue;
    any_data = true;

    std::istringstream ls(line);
    std::string a, b, rest;
    double w = 1.0;
    if (!(ls >> a >> b))
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": expected at least two tokens");
    if (weighted) {
      if (!(ls >> w) || !(w > 0.0) || !std::isfinite(w))
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": expected a positive weight");
    }
    if (ls >> rest)
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": unexpected trailing tokens");

    int u = intern(a), v = intern(b);
    if (u == v) {
      ++local.self_loops_dropped;
      continue;
    }
    auto [s, d] = canonical_pair(u, v, directed);
    std::int64_t key = static_cast<std::int64_t>(s) * (1LL << 31) + d;
    if (seen.count(key)) {
      ++local.duplicates_dropped;  // keep first weight
      continue;
    }
    seen.emplace(key, true);
    edges.push_back({s, d, w});
  }
  if (!any_data) throw std::runtime_error("empty edge list input");
  if (stats) *stats = local;
  return Graph(std::move(labels), directed, std::move(edges), weighted);
}

NodeSet khop_neighborhood(const Graph& g, int u, int k) {
  if (u < 0 || u >= g.num_nodes()) throw std::invalid_argument("invalid node index");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<int> depth(g.num_nodes(), -1);
  std::deque<int> queue{u};
  depth[u] = 0;
  std::vector<int> members{u};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (depth[x] == k) continue;
    for (auto [y, w] : g.undirected_neighbors(x)) {
      (void)w;
      if (depth[y] < 0) {
        depth[y] = depth[x] + 1;
        members.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return NodeSet{std::move(members)};
}

NodeSet combined_neighborhood(const Graph& g, int u, int v, int k) {
  if (u == v) throw std::invalid_argument("query nodes must be distinct");
  NodeSet a = khop_neighborhood(g, u, k);
  NodeSet b = khop_neighborhood(g, v, k);
  NodeSet out;
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(),
                 b.members.end(), std::back_inserter(out.members));
  return out;
}

Graph induce(const Graph& g, const NodeSet& s, std::vector<int>* parent_of_local) {
  if (s.members.empty()) throw std::invalid_argument("empty node set");
  std::vector<int> local(g.num_nodes(), -1);
  std::vector<std::string> labels;
  labels.reserve(s.size());
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    int p = s.members[i];
    if (p < 0 || p >= g.num_nodes())
      throw std::invalid_argument("node set member out of range");
    local[p] = static_cast<int>(i);
    labels.push_back(g.label(p));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (local[e.src] >= 0 && local[e.dst] >= 0)
      edges.push_back({local[e.src], local[e.dst], e.weight});
  if (parent_of_local) *parent_of_local = s.members;
  return Graph(std::move(labels), g.directed(), std::move(edges), g.weighted());
}

Graph toggle_edge(const Graph& g, int u, int v, bool present) {
  if (u == v) throw std::invalid_argument("cannot toggle a self-loop");
  if (u < 0 || u >= g.num_nodes() || v < 0 || v >= g.num_nodes())
    throw std::invalid_argument("invalid node index");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() + 1);
  bool found = false;
  for (const Edge& e : g.edges()) {
    bool match = g.directed() ? (e.src == u && e.dst == v)
                              : ((e.src == std::min(u, v)) && (e.dst == std::max(u, v)));
    if (match) {
      found = true;
      if (!present) continue;
    }
    edges.push_back(e);
  }
  if (present && !found) {
    double w = g.weighted() ? g.mean_edge_weight() : 1.0;
    edges.push_back({u, v, w});
  }
  return Graph(g.labels(), g.directed(), std::move(edges), g.weighted());
}

Graph complete_graph(const Graph& g, const NodeSet& s) {
  if (s.members.empty()) throw std::invalid_argument("empty node set");
  std::vector<std::string> labels;
  for (int p : s.members) labels.push_back(g.label(p));
  std::vector<Edge> edges;
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  return Graph(std::move(labels), /*directed=*/false, std::move(edges));
}

namespace {

void sssp_into(const Graph& g, int src, bool unit_weights, double sentinel,
               DistanceMatrix& d) {
  const int n = g.num_nodes();
  if (unit_weights) {
    std::vector<double> dist(n, sentinel);
    std::deque<int> queue{src};
    dist[src] = 0.0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (auto [y, w] : g.out_neighbors(x)) {
        (void)w;
        if (dist[y] == sentinel) {
          dist[y] = dist[x] + 1.0;
          queue.push_back(y);
        }
      }
    }
    for (int j = 0; j < n; ++j) d.at(src, j) = dist[j];
  } else {
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[src] = 0.0;
    heap.push({0.0, src});
    while (!heap.empty()) {
      auto [dx, x] = heap.top();
      heap.pop();
      if (dx > dist[x]) continue;
      for (auto [y, w] : g.out_neighbors(x)) {
        if (dist[x] + w < dist[y]) {
          dist[y] = dist[x] + w;
          heap.push({dist[y], y});
        }
      }
    }
    for (int j = 0; j < n; ++j)
      d.at(src, j) = std::isfinite(dist[j]) ? dist[j] : sentinel;
  }
}

DistanceMatrix apsp_impl(const Graph& g, bool parallel) {
  if (g.num_nodes() == 0) throw std::invalid_argument("empty graph");
  const int n = g.num_nodes();
  const double sentinel = static_cast<double>(n) * g.max_edge_weight();
  bool unit = true;
  for (const Edge& e : g.edges())
    if (e.weight != 1.0) {
      unit = false;
      break;
    }
  DistanceMatrix d(n, sentinel);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (int src = 0; src < n; ++src) sssp_into(g, src, unit, sentinel, d);
  } else {
    for (int src = 0; src < n; ++src) sssp_into(g, src, unit, sentinel, d);
  }
  if (!g.directed()) {
    // Dijkstra accumulates path weights in opposite orders for d(i,j) and
    // d(j,i), which can differ in the last ulp; pin both to one value.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double v = std::min(d.at(i, j), d.at(j, i));
        d.at(i, j) = v;
        d.at(j, i) = v;
      }
  }
  return d;
}

}  // namespace

DistanceMatrix apsp(const Graph& g) { return apsp_impl(g, true); }

DistanceMatrix apsp_serial(const Graph& g) { return apsp_impl(g, false); }

}  // namespace tlp
