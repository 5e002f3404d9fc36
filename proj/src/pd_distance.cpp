#include "tlp/pd_distance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace tlp {

namespace {

using Point = std::pair<double, double>;

double linf(const Point& a, const Point& b) {
  return std::max(std::abs(a.first - b.first), std::abs(a.second - b.second));
}

double diag_cost(const Point& p) { return (p.second - p.first) / 2.0; }

/// Minimum-cost perfect assignment on a square matrix (potentials method).
double solve_assignment(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = match[j0], j1 = -1;
      double delta = inf;
      for (int j = 1; j <= n; ++j)
        if (!used[j]) {
          double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
          if (minv[j] < delta) {
            delta = minv[j];
            j1 = j;
          }
        }
      for (int j = 0; j <= n; ++j)
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }
  double total = 0.0;
  for (int j = 1; j <= n; ++j) total += cost[match[j] - 1][j - 1];
  return total;
}

/// Removes points common to both multisets; valid for the sup-cost
/// (bottleneck) objective only.
void cancel_common(std::vector<Point>& a, std::vector<Point>& b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Point> ra, rb;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ra.push_back(a[i++]);
    } else {
      rb.push_back(b[j++]);
    }
  }
  ra.insert(ra.end(), a.begin() + i, a.end());
  rb.insert(rb.end(), b.begin() + j, b.end());
  a.swap(ra);
  b.swap(rb);
}

/// Hopcroft-Karp maximum matching; returns true if a perfect matching of
/// the augmented sets exists using only edges with cost <= t.
bool feasible(const std::vector<Point>& a, const std::vector<Point>& b,
              double t) {
  const int n1 = static_cast<int>(a.size());
  const int n2 = static_cast<int>(b.size());
  const int n = n1 + n2;  // rows: a points then b-diagonal slots
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j)
      if (linf(a[i], b[j]) <= t) adj[i].push_back(j);
    if (diag_cost(a[i]) <= t)
      for (int j = n2; j < n; ++j) adj[i].push_back(j);
  }
  for (int i = n1; i < n; ++i) {
    for (int j = 0; j < n2; ++j)
      if (diag_cost(b[j]) <= t) adj[i].push_back(j);
    for (int j = n2; j < n; ++j) adj[i].push_back(j);  // diag-diag, cost 0
  }

  const int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_l(n, -1), match_r(n, -1), dist(n);
  auto bfs = [&] {
    std::vector<int> queue;
    for (int i = 0; i < n; ++i) {
      dist[i] = match_l[i] < 0 ? 0 : kInf;
      if (match_l[i] < 0) queue.push_back(i);
    }
    bool found = false;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int i = queue[h];
      for (int j : adj[i]) {
        int i2 = match_r[j];
        if (i2 < 0)
          found = true;
        else if (dist[i2] == kInf) {
          dist[i2] = dist[i] + 1;
          queue.push_back(i2);
        }
      }
    }
    return found;
  };
  std::function<bool(int)> dfs = [&](int i) {
    for (int j : adj[i]) {
      int i2 = match_r[j];
      if (i2 < 0 || (dist[i2] == dist[i] + 1 && dfs(i2))) {
        match_l[i] = j;
        match_r[j] = i;
        return true;
      }
    }
    dist[i] = kInf;
    return false;
  };
  int matched = 0;
  while (bfs())
    for (int i = 0; i < n; ++i)
      if (match_l[i] < 0 && dfs(i)) ++matched;
  return matched == n;
}

}  // namespace

double wasserstein_q(const PersistenceDiagram& p1, const PersistenceDiagram& p2,
                     double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("wasserstein order q must be >= 1");
  const auto& a = p1.points;
  const auto& b = p2.points;
  const int n1 = static_cast<int>(a.size());
  const int n2 = static_cast<int>(b.size());
  const int n = n1 + n2;
  if (n == 0) return 0.0;
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) cost[i][j] = std::pow(linf(a[i], b[j]), q);
    double dc = std::pow(diag_cost(a[i]), q);
    for (int j = n2; j < n; ++j) cost[i][j] = dc;
  }
  for (int j = 0; j < n2; ++j) {
    double dc = std::pow(diag_cost(b[j]), q);
    for (int i = n1; i < n; ++i) cost[i][j] = dc;
  }
  double total = solve_assignment(cost);
  return std::pow(std::max(total, 0.0), 1.0 / q);
}

double bottleneck(const PersistenceDiagram& p1, const PersistenceDiagram& p2) {
  std::vector<Point> a = p1.points, b = p2.points;
  cancel_common(a, b);
  if (a.empty() && b.empty()) return 0.0;

  std::vector<double> candidates{0.0};
  for (const Point& p : a) candidates.push_back(diag_cost(p));
  for (const Point& p : b) candidates.push_back(diag_cost(p));
  for (const Point& pa : a)
    for (const Point& pb : b) candidates.push_back(linf(pa, pb));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (feasible(a, b, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

}  // namespace tlp
