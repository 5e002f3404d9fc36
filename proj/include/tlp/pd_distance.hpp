#pragma once

#include "tlp/persistence.hpp"

namespace tlp {

/// Exact Wasserstein-q distance between diagrams: minimum over bijections of
/// the diagonal-augmented point sets of the l_q aggregate of l_inf point
/// costs, solved with an O(n^3) assignment algorithm. Requires q >= 1.
double wasserstein_q(const PersistenceDiagram& p1, const PersistenceDiagram& p2,
                     double q);

/// Exact bottleneck distance: minimum over augmented bijections of the
/// maximum l_inf point cost. Binary search over candidate costs with a
/// Hopcroft-Karp feasibility test at each candidate.
double bottleneck(const PersistenceDiagram& p1, const PersistenceDiagram& p2);

}  // namespace tlp
