#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "curvehash/curve.hpp"
#include "curvehash/distance.hpp"
#include "curvehash/traversal.hpp"
#include "helpers.hpp"

using namespace curvehash;
using testutil::random_curve;

namespace {

// Independent count of monotone lattice paths (Delannoy numbers).
std::uint64_t delannoy(std::size_t a, std::size_t b) {
  std::vector<std::vector<std::uint64_t>> D(a + 1, std::vector<std::uint64_t>(b + 1, 1));
  for (std::size_t i = 1; i <= a; ++i)
    for (std::size_t j = 1; j <= b; ++j)
      D[i][j] = D[i - 1][j] + D[i][j - 1] + D[i - 1][j - 1];
  return D[a][b];
}

// Brute-force minimum over all enumerated traversals satisfying the kind's
// constraint; nullopt when no traversal qualifies. Costs are evaluated here,
// independently of the DP code path.
std::optional<double> brute_force(const curve& P, const curve& Q,
                                  const distance_kind& kind) {
  double best = std::numeric_limits<double>::infinity();
  bool found = false;
  for (const traversal& t : enumerate_traversals(P.size(), Q.size())) {
    using fam = distance_kind::family;
    if ((kind.fam == fam::anchored_frechet || kind.fam == fam::anchored_dtw) &&
        !is_anchored_traversal(t, kind.w))
      continue;
    if ((kind.fam == fam::speed_frechet || kind.fam == fam::speed_dtw) &&
        !is_speed_traversal(t, P.size(), Q.size(), kind.w))
      continue;
    double cost = 0;
    for (const auto& [i, j] : t.pairs) {
      const double c = vertex_distance(P.vertex(i), Q.vertex(j));
      cost = kind.sums_costs() ? cost + c : std::max(cost, c);
    }
    best = std::min(best, cost);
    found = true;
  }
  if (!found) return std::nullopt;
  return best;
}

void check_against_oracle(const curve& P, const curve& Q, const distance_kind& kind) {
  const auto expected = brute_force(P, Q, kind);
  if (!expected) {
    REQUIRE_THROWS_AS(constrained_distance(P, Q, kind), no_valid_traversal);
    return;
  }
  REQUIRE_THAT(constrained_distance(P, Q, kind),
               Catch::Matchers::WithinAbs(*expected, 1e-9));
}

}  // namespace

TEST_CASE("discrete Frechet matches hand-checked values", "[curves]") {
  const curve a = curve1d("a", {0, 1});
  CHECK(discrete_frechet(a, a) == 0.0);
  CHECK(discrete_frechet(curve1d("p", {0, 4}), curve1d("q", {0, 2, 4})) == 2.0);
  const curve p2("p", {{0, 0}, {1, 0}});
  const curve q2("q", {{0, 1}, {1, 1}});
  CHECK(discrete_frechet(p2, q2) == 1.0);
}

TEST_CASE("dtw matches hand-checked values", "[curves]") {
  const curve a = curve1d("a", {0, 1});
  CHECK(dtw(a, a) == 0.0);
  CHECK(dtw(curve1d("p", {0, 4}), curve1d("q", {0, 2, 4})) == 2.0);
  CHECK(dtw(curve1d("p", {0}), curve1d("q", {1, 2})) == 3.0);
}

TEST_CASE("distance ops reject mismatched dimensions", "[curves]") {
  const curve p1 = curve1d("p", {0, 1});
  const curve q2("q", {{0, 0}, {1, 1}});
  CHECK_THROWS_AS(discrete_frechet(p1, q2), std::invalid_argument);
  CHECK_THROWS_AS(dtw(p1, q2), std::invalid_argument);
}

TEST_CASE("anchored distance on hand-checked cases", "[curves]") {
  const curve p = curve1d("p", {0, 4, 8});
  CHECK(constrained_distance(p, p, distance_kind::anchored_frechet(2)) == 0.0);
  CHECK(constrained_distance(curve1d("p", {0, 2}), curve1d("q", {0, 1, 2}),
                             distance_kind::anchored_frechet(2)) == 1.0);
  CHECK_THROWS_AS(constrained_distance(curve1d("p", {0}), curve1d("q", {1, 2, 3, 4}),
                                       distance_kind::anchored_frechet(2)),
                  no_valid_traversal);
}

TEST_CASE("distance_kind validates constraint parameters", "[curves]") {
  CHECK_THROWS_AS(distance_kind::anchored_frechet(3), std::invalid_argument);
  CHECK_THROWS_AS(distance_kind::anchored_dtw(0), std::invalid_argument);
  CHECK_THROWS_AS(distance_kind::speed_frechet(0), std::invalid_argument);
}

TEST_CASE("traversal enumeration counts and validity", "[curves]") {
  CHECK(enumerate_traversals(1, 1).size() == 1);
  CHECK(enumerate_traversals(2, 2).size() == 3);
  CHECK(enumerate_traversals(2, 3).size() == 5);
  for (std::size_t m1 = 1; m1 <= 5; ++m1) {
    for (std::size_t m2 = 1; m2 <= 5; ++m2) {
      const auto all = enumerate_traversals(m1, m2);
      CHECK(all.size() == delannoy(m1 - 1, m2 - 1));
      std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
      for (const auto& t : all) {
        CHECK(is_valid_traversal(t, m1, m2));
        seen.insert(t.pairs);
      }
      CHECK(seen.size() == all.size());
    }
  }
  CHECK_THROWS_AS(enumerate_traversals(9, 2), std::invalid_argument);
}

TEST_CASE("normalize_traversal removes redundant middle pairs", "[curves]") {
  const traversal diag{{{0, 0}, {1, 1}}};
  CHECK(normalize_traversal(diag) == diag);

  const traversal up_then_right{{{0, 0}, {0, 1}, {1, 1}}};
  CHECK(normalize_traversal(up_then_right) == diag);

  const traversal right_then_up{{{0, 0}, {1, 0}, {1, 1}}};
  CHECK(normalize_traversal(right_then_up) == diag);
}

TEST_CASE("normalize_traversal yields star components without raising costs",
          "[curves]") {
  rng_engine g = make_rng(20260811, {1});
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t m1 = 1 + uniform_below(g, 5);
    const std::size_t m2 = 1 + uniform_below(g, 5);
    const auto all = enumerate_traversals(m1, m2);
    const traversal& t = all[uniform_below(g, all.size())];
    const traversal n = normalize_traversal(t);

    REQUIRE(is_valid_traversal(n, m1, m2));
    // subset of the input pairs
    std::set<std::pair<std::size_t, std::size_t>> orig(t.pairs.begin(), t.pairs.end());
    for (const auto& pr : n.pairs) REQUIRE(orig.count(pr) == 1);

    const auto comps = traversal_components(n);
    REQUIRE(comps.size() <= std::min(m1, m2));
    for (const auto& comp : comps) {
      bool share_i = true, share_j = true;
      for (const auto& pr : comp) {
        share_i = share_i && pr.first == comp.front().first;
        share_j = share_j && pr.second == comp.front().second;
      }
      REQUIRE((share_i || share_j));
    }

    const curve P = random_curve(g, m1, 2);
    const curve Q = random_curve(g, m2, 2);
    REQUIRE(traversal_cost_max(P, Q, n) <= traversal_cost_max(P, Q, t) + 1e-12);
    REQUIRE(traversal_cost_sum(P, Q, n) <= traversal_cost_sum(P, Q, t) + 1e-12);
  }
}

TEST_CASE("all DP distances agree with brute force on random instances", "[curves]") {
  rng_engine g = make_rng(20260811, {2});
  const std::vector<distance_kind> kinds = {
      distance_kind::frechet(),          distance_kind::dtw(),
      distance_kind::anchored_frechet(2), distance_kind::anchored_frechet(4),
      distance_kind::anchored_dtw(2),     distance_kind::anchored_dtw(4),
      distance_kind::speed_frechet(1),    distance_kind::speed_frechet(2),
      distance_kind::speed_frechet(3),    distance_kind::speed_dtw(2),
  };
  for (int iter = 0; iter < 120; ++iter) {
    const std::size_t d = 1 + uniform_below(g, 3);
    const curve P = random_curve(g, 1 + uniform_below(g, 6), d);
    const curve Q = random_curve(g, 1 + uniform_below(g, 6), d);
    for (const auto& kind : kinds) check_against_oracle(P, Q, kind);
  }
}

TEST_CASE("frechet and dtw are symmetric and vanish on identical curves", "[curves]") {
  rng_engine g = make_rng(20260811, {3});
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t d = 1 + uniform_below(g, 3);
    const curve P = random_curve(g, 1 + uniform_below(g, 6), d);
    const curve Q = random_curve(g, 1 + uniform_below(g, 6), d);
    REQUIRE(discrete_frechet(P, Q) == discrete_frechet(Q, P));
    REQUIRE(dtw(P, Q) == dtw(Q, P));
    REQUIRE(discrete_frechet(P, P) == 0.0);
    REQUIRE(dtw(P, P) == 0.0);
  }
}

TEST_CASE("discrete Frechet satisfies the triangle inequality", "[curves]") {
  rng_engine g = make_rng(20260811, {4});
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t d = 1 + uniform_below(g, 3);
    const curve A = random_curve(g, 1 + uniform_below(g, 6), d);
    const curve B = random_curve(g, 1 + uniform_below(g, 6), d);
    const curve C = random_curve(g, 1 + uniform_below(g, 6), d);
    REQUIRE(discrete_frechet(A, C) <=
            discrete_frechet(A, B) + discrete_frechet(B, C) + 1e-9);
  }
}

TEST_CASE("loose constraints recover the unconstrained distances", "[curves]") {
  rng_engine g = make_rng(20260811, {5});
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t d = 1 + uniform_below(g, 2);
    const curve P = random_curve(g, 1 + uniform_below(g, 6), d);
    const curve Q = random_curve(g, 1 + uniform_below(g, 6), d);
    const std::size_t mx = std::max(P.size(), Q.size());
    std::size_t wa = 2 * mx;
    if (wa % 2 != 0) ++wa;
    REQUIRE_THAT(constrained_distance(P, Q, distance_kind::anchored_frechet(wa)),
                 Catch::Matchers::WithinAbs(discrete_frechet(P, Q), 1e-12));
    REQUIRE_THAT(constrained_distance(P, Q, distance_kind::anchored_dtw(wa)),
                 Catch::Matchers::WithinAbs(dtw(P, Q), 1e-12));
    REQUIRE_THAT(constrained_distance(P, Q, distance_kind::speed_frechet(mx)),
                 Catch::Matchers::WithinAbs(discrete_frechet(P, Q), 1e-12));
    REQUIRE_THAT(constrained_distance(P, Q, distance_kind::speed_dtw(mx)),
                 Catch::Matchers::WithinAbs(dtw(P, Q), 1e-12));
  }
}

TEST_CASE("continuous Frechet on hand-checked 1D cases", "[curves]") {
  const curve tri = curve1d("p", {0, 4, 0});
  CHECK(continuous_frechet_1d(tri, tri) == 0.0);
  CHECK(continuous_frechet_1d(curve1d("p", {0, 4}), curve1d("q", {0, 2, 4})) == 0.0);
  CHECK_THAT(continuous_frechet_1d(curve1d("p", {0, 4, 0}), curve1d("q", {0, 3, 0})),
             Catch::Matchers::WithinAbs(1.0, 1e-9));
  CHECK_THROWS_AS(continuous_frechet_1d(curve("p", {{0, 0}, {1, 1}}),
                                        curve("q", {{0, 0}, {1, 1}})),
                  std::invalid_argument);
}

TEST_CASE("continuous Frechet never exceeds the discrete distance", "[curves]") {
  rng_engine g = make_rng(20260811, {6});
  for (int iter = 0; iter < 150; ++iter) {
    const curve P = random_curve(g, 1 + uniform_below(g, 6), 1);
    const curve Q = random_curve(g, 1 + uniform_below(g, 6), 1);
    REQUIRE(continuous_frechet_1d(P, Q) <= discrete_frechet(P, Q) + 1e-9);
  }
}

TEST_CASE("single-vertex curves pair with every vertex of the other curve", "[curves]") {
  const curve P = curve1d("p", {5});
  const curve Q = curve1d("q", {1, 9, 5});
  CHECK(discrete_frechet(P, Q) == 4.0);
  CHECK(dtw(P, Q) == 8.0);
}
