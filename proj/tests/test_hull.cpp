#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "presort/hull.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace presort;

namespace {

std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

void expect_witnesses_valid(std::span<const Point> pts, const HullOutput& out) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const HullTriple& w = out.witnesses[i];
    if (w == kNoTriangle) continue;
    EXPECT_TRUE(oracle::inside(pts[i], pts[static_cast<std::size_t>(w[0])],
                               pts[static_cast<std::size_t>(w[1])],
                               pts[static_cast<std::size_t>(w[2])]));
  }
}

}  // namespace

TEST(ConvexHull, Triangle) {
  const std::vector<Point> pts{{0, 0}, {5, 1}, {2, 4}};
  const HullOutput out = convex_hull(pts);
  EXPECT_EQ(out.hull, (std::vector<std::size_t>{0, 1, 2}));
  for (const auto& w : out.witnesses) EXPECT_EQ(w, kNoTriangle);
}

TEST(ConvexHull, PerturbedSquareWithCenter) {
  const std::vector<Point> pts{{0, 1}, {40, 0}, {41, 40}, {1, 41}, {20, 12}};
  const HullOutput out = convex_hull(pts);
  EXPECT_EQ(out.hull, (std::vector<std::size_t>{0, 1, 2, 3}));
  ASSERT_NE(out.witnesses[4], kNoTriangle);
  expect_witnesses_valid(pts, out);
  EXPECT_TRUE(verify_hull(pts, out));
}

TEST(ConvexHull, SmallInputs) {
  EXPECT_TRUE(convex_hull(std::vector<Point>{}).hull.empty());
  EXPECT_EQ(convex_hull(std::vector<Point>{{3, 3}}).hull, (std::vector<std::size_t>{0}));
  const HullOutput two = convex_hull(std::vector<Point>{{3, 3}, {1, 5}});
  EXPECT_EQ(two.hull, (std::vector<std::size_t>{1, 0}));
  EXPECT_TRUE(verify_hull(std::vector<Point>{{3, 3}, {1, 5}}, two));
}

TEST(ConvexHull, RejectsDegenerateInput) {
  EXPECT_THROW(convex_hull(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}}), GeneralPositionError);
  EXPECT_THROW(convex_hull(std::vector<Point>{{0, 0}, {0, 3}, {2, 1}}), GeneralPositionError);
}

TEST(ConvexHull, MatchesContainmentOracle) {
  gen::Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const auto pts = gen::points(rng, 12, 1000);
    const HullOutput out = convex_hull(pts);
    ASSERT_EQ(as_set(out.hull), oracle::hull_vertex_set(pts));
    EXPECT_TRUE(verify_hull(pts, out));
    expect_witnesses_valid(pts, out);
  }
}

TEST(ConvexHull, SortedInputsOfAllFourOrders) {
  gen::Rng rng(13);
  for (AxisOrder order : kAxisOrders) {
    for (int t = 0; t < 10; ++t) {
      auto pts = gen::points(rng, 30, 400);
      std::sort(pts.begin(), pts.end(), [&](auto a, auto b) { return precedes(order, a, b); });
      const HullOutput out = convex_hull(pts);
      EXPECT_EQ(as_set(out.hull), oracle::hull_vertex_set(pts));
      EXPECT_TRUE(verify_hull(pts, out));
    }
  }
}

TEST(ConvexHull, LargeInputsDetectCollinearity) {
  // beyond the size of the up-front check, a collinear triple on the hull
  // must still be reported
  std::vector<Point> pts;
  for (std::int64_t i = 0; i < 3000; ++i) pts.push_back({i, i * i});
  pts.push_back({1500, 1500 * 1500 + 10000000});
  pts.push_back({-1, 7});
  pts.push_back({3000, 3000 * 3000});
  EXPECT_THROW(convex_hull(pts), GeneralPositionError);
}

TEST(VerifyHull, RejectsReversalAndCorruption) {
  const std::vector<Point> pts{{0, 1}, {40, 0}, {41, 40}, {1, 41}, {20, 12}};
  HullOutput out = convex_hull(pts);
  HullOutput reversed = out;
  std::reverse(reversed.hull.begin(), reversed.hull.end());
  EXPECT_FALSE(verify_hull(pts, reversed));
  HullOutput bad = out;
  bad.witnesses[4] = {0, 1, 4};
  EXPECT_FALSE(verify_hull(pts, bad));
  HullOutput dropped = out;
  dropped.hull.erase(dropped.hull.begin() + 2);
  EXPECT_FALSE(verify_hull(pts, dropped));
  HullOutput rotated = out;
  std::rotate(rotated.hull.begin(), rotated.hull.begin() + 1, rotated.hull.end());
  EXPECT_FALSE(verify_hull(pts, rotated));
}

TEST(VerifyHull, RejectsDoubleWinding) {
  // a pentagram visits the pentagon's vertices with every turn counterclockwise
  std::vector<Point> pts;
  for (int k = 0; k < 5; ++k) {
    const double a = 2 * M_PI * k / 5 + 0.1;
    pts.push_back({std::llround(1000 * std::cos(a)), std::llround(1000 * std::sin(a))});
  }
  HullOutput out = convex_hull(pts);
  ASSERT_EQ(out.hull.size(), 5U);
  HullOutput star = out;
  for (std::size_t i = 0; i < 5; ++i) star.hull[i] = out.hull[(2 * i) % 5];
  EXPECT_FALSE(verify_hull(pts, star));
}

TEST(FindBridge, TwoPointsStraddling) {
  const std::vector<Point> pts{{0, 0}, {10, 3}};
  const std::vector<std::size_t> ids{0, 1};
  CostMeter meter;
  const Bridge b = find_bridge(pts, ids, 5, meter);
  EXPECT_EQ(b.left, 0U);
  EXPECT_EQ(b.right, 1U);
}

TEST(FindBridge, ParabolaArc) {
  std::vector<Point> pts;
  for (std::int64_t i = 0; i < 8; ++i) pts.push_back({i * 10, 1000 - (i * 10 - 35) * (i * 10 - 35)});
  std::vector<std::size_t> ids(8);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  CostMeter meter;
  const Bridge b = find_bridge(pts, ids, 35, meter);
  EXPECT_EQ(b.left, 3U);
  EXPECT_EQ(b.right, 4U);
}

TEST(FindBridge, EndpointsAreHullVerticesOfS) {
  gen::Rng rng(77);
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 2, 64));
    const auto pts = gen::points(rng, n, 4096, false);
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    std::vector<std::int64_t> xs;
    for (const Point& p : pts) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    const std::int64_t m = xs[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<std::int64_t>(n) - 2))];
    CostMeter meter;
    const Bridge b = find_bridge(pts, ids, m, meter);
    ASSERT_LE(pts[b.left].x, m);
    ASSERT_GT(pts[b.right].x, m);
    for (const Point& p : pts) ASSERT_LE(cross(pts[b.left], pts[b.right], p), 0);
  }
}

TEST(QuadrangleTree, EmptyRegionsOnConvexPolygon) {
  std::vector<Point> pts;
  for (int k = 0; k < 8; ++k) {
    const double a = 2 * M_PI * k / 8 + 0.05;
    pts.push_back({std::llround(1000 * std::cos(a)), std::llround(1000 * std::sin(a))});
  }
  const QuadrangleTree tree = build_quadrangle_tree(pts, RegionSet::triangles({}));
  for (const QuadrangleNode& node : tree.nodes) EXPECT_LE(node.population.size(), 2U);
  const oracle::Replay replay = oracle::quadrangle_replay(pts, RegionSet::triangles({}));
  std::uint64_t sum = 0;
  for (std::size_t p = 0; p < pts.size(); ++p) sum += tree.node_of[p] < 0 ? 0 : tree.depth_of(p);
  EXPECT_EQ(sum, replay.depth_sum());
  EXPECT_EQ(tree.depth_cost(), replay.depth_sum());
}

TEST(QuadrangleTree, InsidePointsStayWithTheRoot) {
  std::vector<Point> pts{{0, 0}, {1000, 10}, {500, 900}};
  for (const Point p : {Point{450, 250}, Point{520, 300}, Point{505, 350}}) pts.push_back(p);
  const Triangle inner{{400, 200}, {600, 210}, {500, 400}};
  // the top vertex lies outside the region, so the root splits and keeps
  // the three points inside its quadrangle
  const QuadrangleTree split = build_quadrangle_tree(pts, RegionSet::triangles({inner}));
  ASSERT_EQ(split.nodes.size(), 1U);
  EXPECT_FALSE(split.nodes[0].truncated());
  EXPECT_EQ(split.nodes[0].population.size(), 4U);
  EXPECT_EQ(split.depth_cost(), 0U);
  const Triangle outer{{100, 100}, {900, 100}, {500, 1000}};
  const QuadrangleTree cut = build_quadrangle_tree(pts, RegionSet::triangles({outer}));
  ASSERT_EQ(cut.nodes.size(), 1U);
  EXPECT_TRUE(cut.nodes[0].truncated());
  EXPECT_EQ(cut.nodes[0].region, std::optional<std::size_t>{0});
}

TEST(QuadrangleTree, MatchesReplayAndPartitions) {
  gen::Rng rng(321);
  for (int t = 0; t < 300; ++t) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 3, 20));
    const auto pts = gen::points(rng, n, 200);
    const RegionSet regions = gen::triangles(rng, static_cast<std::size_t>(t % 4), 200);
    const QuadrangleTree tree = build_quadrangle_tree(pts, regions);
    const oracle::Replay replay = oracle::quadrangle_replay(pts, regions);
    ASSERT_EQ(tree.depth_cost(), replay.depth_sum());
    std::set<std::set<std::size_t>> groups;
    std::size_t covered = 0;
    for (const QuadrangleNode& node : tree.nodes) {
      groups.insert({node.population.begin(), node.population.end()});
      covered += node.population.size();
    }
    EXPECT_EQ(covered, n - 2);
    EXPECT_EQ(groups, replay.groups());
    EXPECT_LT(tree.node_of[tree.leftmost], 0);
    EXPECT_LT(tree.node_of[tree.rightmost], 0);
  }
}

TEST(QuadrangleTree, PrecedesIsAStrictPartialOrder) {
  gen::Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    const auto pts = gen::points(rng, 12, 300);
    const QuadrangleTree tree = build_quadrangle_tree(pts, RegionSet::triangles({}));
    const std::size_t n = pts.size();
    for (std::size_t p = 0; p < n; ++p) {
      EXPECT_FALSE(tree.precedes(p, p));
      for (std::size_t q = 0; q < n; ++q) {
        if (!tree.precedes(p, q)) continue;
        EXPECT_FALSE(tree.precedes(q, p));
        for (std::size_t r = 0; r < n; ++r) {
          if (tree.precedes(q, r)) {
            EXPECT_TRUE(tree.precedes(p, r));
          }
        }
      }
    }
  }
}

TEST(QuadrangleOrder, IdentityWithoutRegions) {
  gen::Rng rng(6);
  const auto pts = gen::points(rng, 10, 300);
  const QuadrangleTree tree = build_quadrangle_tree(pts, RegionSet::triangles({}));
  const QuadrangleOrder ord = quadrangle_order(pts, RegionSet::triangles({}), tree, {});
  std::vector<std::size_t> id(pts.size());
  std::iota(id.begin(), id.end(), std::size_t{0});
  EXPECT_EQ(ord.rho, id);
}

TEST(QuadrangleOrder, ReversingCompassReversesTheMatching) {
  // three points of one region in one node whose depth order is by x
  const std::vector<Point> pts{{0, 0}, {1000, 1}, {500, 900}, {480, 200}, {501, 240}, {520, 280}};
  const Triangle region{{440, 150}, {560, 150}, {500, 400}};
  const RegionSet regions = RegionSet::triangles({region});
  const QuadrangleTree tree = build_quadrangle_tree(pts, regions);
  ASSERT_EQ(tree.node_of[3], tree.node_of[4]);
  ASSERT_EQ(tree.node_of[4], tree.node_of[5]);
  const QuadrangleOrder inc = quadrangle_order(pts, regions, tree, {AxisOrder::kIncreasingX});
  const QuadrangleOrder dec = quadrangle_order(pts, regions, tree, {AxisOrder::kDecreasingX});
  ASSERT_TRUE(tree.precedes(3, 4) && tree.precedes(4, 5));
  EXPECT_EQ(inc.rho[3], 3U);
  EXPECT_EQ(dec.rho[3], 5U);
  EXPECT_EQ(dec.rho[5], 3U);
  EXPECT_EQ(dec.rho[4], 4U);
  // property (2): inside the group the permuted order is the compass order
  for (const QuadrangleOrder* ord : {&inc, &dec}) {
    const bool increasing = ord == &inc;
    for (std::size_t a : {3U, 4U, 5U}) {
      for (std::size_t b : {3U, 4U, 5U}) {
        if (a == b) continue;
        const bool before = increasing ? pts[a].x < pts[b].x : pts[a].x > pts[b].x;
        EXPECT_EQ(ord->rank[a] < ord->rank[b], before);
      }
    }
  }
}
