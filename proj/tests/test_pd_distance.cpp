#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "tlp/pd_distance.hpp"

using namespace tlp;
using tlp_test::random_diagram;

namespace {

PersistenceDiagram diagram(std::vector<std::pair<double, double>> pts,
                           double tau = 100.0) {
  PersistenceDiagram pd;
  pd.tau = tau;
  pd.points = std::move(pts);
  return pd;
}

}  // namespace

TEST_CASE("wasserstein_q examples") {
  PersistenceDiagram a = diagram({{0, 2}});
  CHECK(wasserstein_q(a, a, 2.0) == 0.0);
  CHECK(wasserstein_q(a, diagram({}), 2.0) == doctest::Approx(1.0));
  // direct pairing (cost 2) beats the double-diagonal route (sqrt(5))
  CHECK(wasserstein_q(a, diagram({{0, 4}}), 2.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(wasserstein_q(a, a, 0.5), std::invalid_argument);
}

TEST_CASE("bottleneck examples") {
  PersistenceDiagram a = diagram({{0, 2}});
  CHECK(bottleneck(a, a) == 0.0);
  CHECK(bottleneck(a, diagram({})) == doctest::Approx(1.0));
  CHECK(bottleneck(diagram({{0, 2}, {0, 6}}), diagram({{0, 4}})) ==
        doctest::Approx(2.0));
}

TEST_CASE("both distances match exhaustive enumeration") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    PersistenceDiagram p1 = random_diagram(rng, 5);
    PersistenceDiagram p2 = random_diagram(rng, 5);
    CHECK(wasserstein_q(p1, p2, 2.0) ==
          doctest::Approx(tlp_test::brute_force_distance(p1, p2, 2.0)).epsilon(1e-9));
    CHECK(bottleneck(p1, p2) ==
          doctest::Approx(tlp_test::brute_force_distance(p1, p2, -1.0)).epsilon(1e-9));
    double w1 = wasserstein_q(p1, p2, 1.0);
    CHECK(w1 == doctest::Approx(tlp_test::brute_force_distance(p1, p2, 1.0)).epsilon(1e-9));
  }
}

TEST_CASE("bottleneck <= wasserstein_q") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 250; ++trial) {
    PersistenceDiagram p1 = random_diagram(rng, 8);
    PersistenceDiagram p2 = random_diagram(rng, 8);
    double b = bottleneck(p1, p2);
    for (double q : {1.0, 2.0, 3.0})
      CHECK(b <= wasserstein_q(p1, p2, q) + 1e-9);
  }
}

TEST_CASE("metric axioms on random diagrams") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    PersistenceDiagram p1 = random_diagram(rng, 8);
    PersistenceDiagram p2 = random_diagram(rng, 8);
    PersistenceDiagram p3 = random_diagram(rng, 8);
    for (bool use_w : {false, true}) {
      auto dist = [&](const PersistenceDiagram& x, const PersistenceDiagram& y) {
        return use_w ? wasserstein_q(x, y, 2.0) : bottleneck(x, y);
      };
      double d12 = dist(p1, p2), d13 = dist(p1, p3), d23 = dist(p2, p3);
      CHECK(d12 >= 0.0);
      CHECK(dist(p1, p1) == 0.0);
      CHECK(d12 == doctest::Approx(dist(p2, p1)).epsilon(1e-12));
      CHECK(d13 <= d12 + d23 + 1e-9);
    }
  }
}

TEST_CASE("stability: perturbing deaths by eps moves bottleneck by <= eps") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    PersistenceDiagram p = random_diagram(rng, 8);
    double eps = 0.05;
    PersistenceDiagram shifted = p;
    for (auto& [b, d] : shifted.points) d += eps;
    CHECK(bottleneck(p, shifted) <= eps + 1e-12);
  }
}

TEST_CASE("wasserstein is sensitive where bottleneck is not") {
  // duplicating a low-persistence point changes W2 but not bottleneck
  PersistenceDiagram base = diagram({{0, 10}});
  PersistenceDiagram extra = diagram({{0, 10}, {0, 0.5}});
  CHECK(bottleneck(base, extra) == doctest::Approx(0.25));
  PersistenceDiagram extra2 = diagram({{0, 10}, {0, 0.5}, {0, 0.5}});
  CHECK(bottleneck(base, extra) == doctest::Approx(bottleneck(base, extra2)));
  CHECK(wasserstein_q(base, extra2, 2.0) > wasserstein_q(base, extra, 2.0));
}
