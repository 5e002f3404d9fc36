#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlp/graph.hpp"

namespace tlp {

/// Finite multiset of (birth, death) points with deaths capped at tau.
/// Dim-0 diagrams produced here always have birth 0 for every point.
struct PersistenceDiagram {
  std::vector<std::pair<double, double>> points;  // sorted by (death, birth)
  double tau = 0.0;

  friend bool operator==(const PersistenceDiagram&,
                         const PersistenceDiagram&) = default;
};

struct PdConfig {
  /// Explicit persistence threshold. When unset, tau = 1.5 * M of the
  /// matrix at hand. An explicit value <= max entry is an error.
  std::optional<double> tau;
  /// Directed-distance symmetrization weight a in [0, 1/2]; 1/2 is the
  /// plain average of the two directed distances.
  double symmetrization_weight = 0.5;

  double effective_tau(double sentinel_m) const {
    return tau.has_value() ? *tau : 1.5 * sentinel_m;
  }
};

/// Symmetrizes a quasi-metric: out[i][j] = a*min(dij,dji) + (1-a)*max(dij,dji)
/// with a in [0,1/2], so a = 1/2 is the plain average.
DistanceMatrix symmetrize(const DistanceMatrix& d, double a);

/// Dim-0 persistence diagram of the Rips filtration over a symmetric
/// distance matrix: n points with birth 0; deaths are the n-1 minimum
/// spanning tree edge weights plus one essential class dying at tau.
/// Computed by dense Prim.
PersistenceDiagram persistence_diagram_0(const DistanceMatrix& d, double tau);

/// Brute-force reference: sorts all C(n,2) pairwise distances ascending and
/// sweeps a union-find, recording a death at each component merge. Identical
/// contract to persistence_diagram_0.
PersistenceDiagram pd_oracle_sweep(const DistanceMatrix& d, double tau);

/// Shortest-path metric of g: apsp, symmetrized when g is directed.
DistanceMatrix graph_metric(const Graph& g, const PdConfig& cfg);

/// Full pipeline: apsp -> symmetrize (if directed) -> persistence_diagram_0.
PersistenceDiagram get_pd(const Graph& g, const PdConfig& cfg);

/// One "birth death" pair per line, sorted by (death, birth).
std::string pd_to_lines(const PersistenceDiagram& pd);

/// JSON array form [[b,d],...] for reports.
std::string pd_to_json(const PersistenceDiagram& pd);

}  // namespace tlp
