// Compares the serial reference kernels against the OpenMP-parallel paths:
// all-pairs shortest paths and a batch of per-pair feature vectors.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tlp/features.hpp"
#include "tlp/graph.hpp"

namespace {

double now() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

tlp::Graph random_graph(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("n" + std::to_string(i));
  std::vector<tlp::Edge> edges;
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  while (static_cast<int>(edges.size()) < m) {
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u == v || seen[u][v] || seen[v][u]) continue;
    seen[u][v] = true;
    edges.push_back({u, v, 1.0});
  }
  return tlp::Graph(std::move(labels), false, std::move(edges));
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP\n");
#endif

  {
    tlp::Graph g = random_graph(1500, 6000, 1);
    double t0 = now();
    tlp::DistanceMatrix ds = tlp::apsp_serial(g);
    double t1 = now();
    tlp::DistanceMatrix dp = tlp::apsp(g);
    double t2 = now();
    bool same = true;
    for (int i = 0; i < g.num_nodes() && same; ++i)
      for (int j = 0; j < g.num_nodes(); ++j)
        if (ds.at(i, j) != dp.at(i, j)) {
          same = false;
          break;
        }
    std::printf("apsp n=%d m=%d: serial %.3fs, parallel %.3fs (%.2fx), %s\n",
                g.num_nodes(), g.num_edges(), t1 - t0, t2 - t1,
                (t1 - t0) / (t2 - t1), same ? "results match" : "MISMATCH");
  }

  {
    tlp::Graph g = random_graph(300, 1200, 2);
    tlp::PdConfig cfg;
    const int queries = 64;
    std::mt19937_64 rng(3);
    std::vector<std::pair<int, int>> pairs;
    while (static_cast<int>(pairs.size()) < queries) {
      int u = static_cast<int>(rng() % g.num_nodes());
      int v = static_cast<int>(rng() % g.num_nodes());
      if (u != v) pairs.emplace_back(u, v);
    }
    std::vector<tlp::LinkFeatureVector> serial(queries), parallel(queries);

    double t0 = now();
    for (int i = 0; i < queries; ++i)
      serial[i] = tlp::link_feature_vector(g, pairs[i].first, pairs[i].second, 2, cfg);
    double t1 = now();
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < queries; ++i)
      parallel[i] =
          tlp::link_feature_vector(g, pairs[i].first, pairs[i].second, 2, cfg);
    double t2 = now();
    bool same = true;
    for (int i = 0; i < queries; ++i)
      if (serial[i].d != parallel[i].d) same = false;
    std::printf(
        "feature batch (%d queries, n=%d): serial %.3fs, parallel %.3fs "
        "(%.2fx), %s\n",
        queries, g.num_nodes(), t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1),
        same ? "results match" : "MISMATCH");
  }
  return 0;
}
