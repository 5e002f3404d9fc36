#pragma once

// Shared helpers for the unit and acceptance suites: small graph builders,
// random generators, and independent brute-force oracles.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <tuple>
#include <utility>
#include <random>
#include <string>
#include <vector>

#include "tlp/graph.hpp"
#include "tlp/persistence.hpp"

namespace tlp_test {

inline tlp::Graph graph_of(int n, std::vector<std::tuple<int, int, double>> edges,
                           bool directed = false, bool weighted = false) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("n" + std::to_string(i));
  std::vector<tlp::Edge> es;
  for (auto [u, v, w] : edges) es.push_back({u, v, w});
  return tlp::Graph(std::move(labels), directed, std::move(es), weighted);
}

inline tlp::Graph unit_graph(int n, std::vector<std::pair<int, int>> edges,
                             bool directed = false) {
  std::vector<std::tuple<int, int, double>> es;
  for (auto [u, v] : edges) es.emplace_back(u, v, 1.0);
  return graph_of(n, std::move(es), directed);
}

inline tlp::Graph random_graph(std::mt19937_64& rng, int max_nodes,
                               bool directed, bool random_weights,
                               double edge_prob = 0.35) {
  int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_nodes));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.1, 5.0);
  std::vector<std::tuple<int, int, double>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!directed && j < i) continue;
      if (coin(rng) < edge_prob)
        edges.emplace_back(i, j, random_weights ? weight(rng) : 1.0);
    }
  return graph_of(n, std::move(edges), directed, random_weights);
}

/// Bellman-Ford all-pairs oracle, independent of the Dijkstra/BFS path.
inline tlp::DistanceMatrix bellman_ford_apsp(const tlp::Graph& g) {
  const int n = g.num_nodes();
  const double inf = std::numeric_limits<double>::infinity();
  const double sentinel = n * g.max_edge_weight();
  tlp::DistanceMatrix d(n, sentinel);
  for (int s = 0; s < n; ++s) {
    std::vector<double> dist(n, inf);
    dist[s] = 0.0;
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (const tlp::Edge& e : g.edges()) {
        if (dist[e.src] + e.weight < dist[e.dst]) {
          dist[e.dst] = dist[e.src] + e.weight;
          changed = true;
        }
        if (!g.directed() && dist[e.dst] + e.weight < dist[e.src]) {
          dist[e.src] = dist[e.dst] + e.weight;
          changed = true;
        }
      }
      if (!changed) break;
    }
    for (int j = 0; j < n; ++j)
      d.at(s, j) = std::isinf(dist[j]) ? sentinel : dist[j];
  }
  return d;
}

inline tlp::PersistenceDiagram random_diagram(std::mt19937_64& rng,
                                              int max_points, double tau = 10.0) {
  std::uniform_real_distribution<double> birth(0.0, tau / 2.0);
  tlp::PersistenceDiagram pd;
  pd.tau = tau;
  int n = static_cast<int>(rng() % static_cast<std::uint64_t>(max_points + 1));
  for (int i = 0; i < n; ++i) {
    double b = birth(rng);
    std::uniform_real_distribution<double> death(b, tau);
    pd.points.emplace_back(b, death(rng));
  }
  std::sort(pd.points.begin(), pd.points.end(),
            [](auto& a, auto& b) { return std::pair{a.second, a.first} <
                                          std::pair{b.second, b.first}; });
  return pd;
}

/// Exhaustive search over augmented bijections: every point of P1 maps to an
/// unused point of P2 or to the diagonal; unmatched P2 points go to the
/// diagonal. Pass q >= 1 for Wasserstein-q, q <= 0 for bottleneck (sup cost).
inline double brute_force_distance(const tlp::PersistenceDiagram& p1,
                                   const tlp::PersistenceDiagram& p2, double q) {
  auto linf = [](std::pair<double, double> a, std::pair<double, double> b) {
    return std::max(std::abs(a.first - b.first), std::abs(a.second - b.second));
  };
  auto diag = [](std::pair<double, double> p) {
    return (p.second - p.first) / 2.0;
  };
  const auto& a = p1.points;
  const auto& b = p2.points;
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);

  auto finish = [&](double acc) {
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!used[j])
        acc = q > 0 ? acc + std::pow(diag(b[j]), q) : std::max(acc, diag(b[j]));
    best = std::min(best, acc);
  };
  std::function<void(std::size_t, double)> rec = [&](std::size_t i, double acc) {
    if (acc >= best) return;
    if (i == a.size()) {
      finish(acc);
      return;
    }
    double dc = diag(a[i]);
    rec(i + 1, q > 0 ? acc + std::pow(dc, q) : std::max(acc, dc));
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!used[j]) {
        used[j] = true;
        double c = linf(a[i], b[j]);
        rec(i + 1, q > 0 ? acc + std::pow(c, q) : std::max(acc, c));
        used[j] = false;
      }
  };
  rec(0, 0.0);
  return q > 0 ? std::pow(best, 1.0 / q) : best;
}

}  // namespace tlp_test
