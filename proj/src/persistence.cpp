#include "tlp/persistence.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tlp {

namespace {

void check_pd_input(const DistanceMatrix& d, double tau) {
  const int n = d.size();
  if (n == 0) throw std::invalid_argument("empty distance matrix");
  for (int i = 0; i < n; ++i)
    if (d.at(i, i) != 0.0) throw std::invalid_argument("nonzero diagonal");
  if (!d.is_symmetric())
    throw std::invalid_argument("persistence requires a symmetric matrix");
  if (!(tau > d.max_entry()))
    throw std::invalid_argument("tau must exceed the maximum distance");
}

PersistenceDiagram diagram_from_deaths(std::vector<double> deaths, double tau) {
  deaths.push_back(tau);  // essential class
  std::sort(deaths.begin(), deaths.end());
  PersistenceDiagram pd;
  pd.tau = tau;
  pd.points.reserve(deaths.size());
  for (double death : deaths) pd.points.emplace_back(0.0, death);
  return pd;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

DistanceMatrix symmetrize(const DistanceMatrix& d, double a) {
  if (!(a >= 0.0 && a <= 0.5))
    throw std::invalid_argument("symmetrization weight must lie in [0, 1/2]");
  const int n = d.size();
  DistanceMatrix out(n, d.sentinel_m());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double lo = std::min(d.at(i, j), d.at(j, i));
      double hi = std::max(d.at(i, j), d.at(j, i));
      double s = a * lo + (1.0 - a) * hi;
      out.at(i, j) = out.at(j, i) = s;
    }
  return out;
}

PersistenceDiagram persistence_diagram_0(const DistanceMatrix& d, double tau) {
  check_pd_input(d, tau);
  const int n = d.size();
  // Dense Prim over the complete graph with costs d_ij; ties fall to the
  // lowest-index candidate, matching the sweep's (i,j) order.
  std::vector<bool> in_tree(n, false);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<double> deaths;
  deaths.reserve(n - 1);
  best[0] = 0.0;
  for (int step = 0; step < n; ++step) {
    int next = -1;
    for (int v = 0; v < n; ++v)
      if (!in_tree[v] && (next < 0 || best[v] < best[next])) next = v;
    in_tree[next] = true;
    if (step > 0) deaths.push_back(best[next]);
    for (int v = 0; v < n; ++v)
      if (!in_tree[v] && d.at(next, v) < best[v]) best[v] = d.at(next, v);
  }
  return diagram_from_deaths(std::move(deaths), tau);
}

PersistenceDiagram pd_oracle_sweep(const DistanceMatrix& d, double tau) {
  check_pd_input(d, tau);
  const int n = d.size();
  struct Pair {
    double dist;
    int i, j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({d.at(i, j), i, j});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    return std::tie(a.dist, a.i, a.j) < std::tie(b.dist, b.i, b.j);
  });
  UnionFind uf(n);
  std::vector<double> deaths;
  for (const Pair& p : pairs)
    if (uf.unite(p.i, p.j)) deaths.push_back(p.dist);
  return diagram_from_deaths(std::move(deaths), tau);
}

DistanceMatrix graph_metric(const Graph& g, const PdConfig& cfg) {
  DistanceMatrix d = apsp(g);
  if (g.directed()) d = symmetrize(d, cfg.symmetrization_weight);
  return d;
}

PersistenceDiagram get_pd(const Graph& g, const PdConfig& cfg) {
  DistanceMatrix d = graph_metric(g, cfg);
  return persistence_diagram_0(d, cfg.effective_tau(d.sentinel_m()));
}

std::string pd_to_lines(const PersistenceDiagram& pd) {
  std::ostringstream out;
  for (auto [b, death] : pd.points) out << b << ' ' << death << '\n';
  return out.str();
}

std::string pd_to_json(const PersistenceDiagram& pd) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < pd.points.size(); ++i) {
    if (i) out << ',';
    out << '[' << pd.points[i].first << ',' << pd.points[i].second << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace tlp
