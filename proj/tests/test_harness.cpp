#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "presort/harness.hpp"
#include "support/oracles.hpp"

using namespace presort;
using namespace presort::harness;

namespace {

GeneratorSpec spec(Family f, std::size_t n, std::size_t k = 1, Problem problem = Problem::kPareto,
                   std::uint64_t seed = 1) {
  return {f, n, seed, k, problem};
}

}  // namespace

TEST(Names, RoundTrip) {
  for (Family f : {Family::kSorted, Family::kReversed, Family::kInterleavedHalves,
                   Family::kEvensThenOdds, Family::kRuns, Family::kGridRandom,
                   Family::kCircleArcClusters, Family::kRegionRespecting}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_THROW(parse_family("zigzag"), InputError);
  EXPECT_EQ(parse_algorithm("hull"), Algorithm::kHull);
  EXPECT_EQ(spec(Family::kRuns, 8, 4).label(), "runs-4");
  EXPECT_EQ(spec(Family::kSorted, 8).label(), "sorted");
}

TEST(GenerateScalars, Shapes) {
  EXPECT_EQ(generate_scalars(spec(Family::kSorted, 4)).values, (Scalars{1, 2, 3, 4}));
  EXPECT_EQ(generate_scalars(spec(Family::kReversed, 4)).values, (Scalars{4, 3, 2, 1}));
  const ScalarInstance inter = generate_scalars(spec(Family::kInterleavedHalves, 7));
  EXPECT_EQ(inter.values, (Scalars{0, 8, 2, 10, 4, 12, 6}));
  EXPECT_EQ(inter.universe_sizes, (SizeVector{4, 3}));
  EXPECT_THROW(generate_scalars(spec(Family::kCircleArcClusters, 8, 2)), InputError);
  EXPECT_THROW(generate_scalars(spec(Family::kSorted, 0)), InputError);
  EXPECT_THROW(generate_scalars(spec(Family::kRuns, 4, 5)), InputError);
}

TEST(GenerateScalars, RunsAreContiguousMonotoneBlocks) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ScalarInstance inst = generate_scalars(spec(Family::kRuns, 100, 7, Problem::kPareto, seed));
    std::vector<std::int64_t> sorted = inst.values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::int64_t> id(100);
    std::iota(id.begin(), id.end(), std::int64_t{1});
    ASSERT_EQ(sorted, id);
    ASSERT_EQ(inst.universe_sizes.size(), 7U);
    // sizes are listed by rank; each rank block sits contiguously and monotone
    std::int64_t lo = 1;
    for (std::size_t size : inst.universe_sizes) {
      const std::int64_t hi = lo + static_cast<std::int64_t>(size);
      std::vector<std::size_t> where;
      std::vector<std::int64_t> block;
      for (std::size_t i = 0; i < inst.values.size(); ++i) {
        if (inst.values[i] >= lo && inst.values[i] < hi) {
          where.push_back(i);
          block.push_back(inst.values[i]);
        }
      }
      ASSERT_EQ(where.size(), size);
      EXPECT_EQ(where.back() - where.front() + 1, size);
      EXPECT_TRUE(std::is_sorted(block.begin(), block.end()) ||
                  std::is_sorted(block.begin(), block.end(), std::greater<>{}));
      lo = hi;
    }
    EXPECT_LE(quicksort_entropy(inst.values).value_bits, size_entropy(inst.universe_sizes) + 1e-9);
  }
}

TEST(GenerateScalars, Reproducible) {
  const GeneratorSpec s = spec(Family::kGridRandom, 500, 1, Problem::kPareto, 9);
  EXPECT_EQ(generate_scalars(s).values, generate_scalars(s).values);
  GeneratorSpec other = s;
  other.seed = 10;
  EXPECT_NE(generate_scalars(s).values, generate_scalars(other).values);
}

TEST(GeneratePoints, RegionFamiliesRespectTheirRegions) {
  for (Problem problem : {Problem::kPareto, Problem::kHull}) {
    for (std::size_t k : {1U, 3U, 8U}) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const PointInstance inst =
            generate_points(spec(Family::kRegionRespecting, 200, k, problem, seed));
        ASSERT_EQ(inst.points.size(), 200U);
        ASSERT_EQ(inst.regions.size(), k);
        ASSERT_NO_THROW(inst.regions.validate());
        EXPECT_EQ(inst.regions.kind() == RegionKind::kTriangles, problem == Problem::kHull);
        EXPECT_TRUE(oracle::respects(inst.points, inst.regions));
        EXPECT_TRUE(oracle::in_general_position(inst.points));
        const std::vector<int> where = inst.regions.locate(inst.points);
        EXPECT_TRUE(std::none_of(where.begin(), where.end(), [](int r) { return r < 0; }));
        EXPECT_EQ(std::accumulate(inst.universe_sizes.begin(), inst.universe_sizes.end(), std::size_t{0}),
                  200U);
      }
    }
  }
}

TEST(GeneratePoints, SortedFamiliesAndArcs) {
  const PointInstance sorted = generate_points(spec(Family::kSorted, 100, 1, Problem::kHull));
  EXPECT_TRUE(std::is_sorted(sorted.points.begin(), sorted.points.end(),
                             [](const Point& a, const Point& b) { return a.x < b.x; }));
  EXPECT_TRUE(oracle::respects(sorted.points, sorted.regions));
  const PointInstance rev = generate_points(spec(Family::kReversed, 100));
  EXPECT_TRUE(std::is_sorted(rev.points.begin(), rev.points.end(),
                             [](const Point& a, const Point& b) { return a.x > b.x; }));
  const PointInstance arcs = generate_points(spec(Family::kCircleArcClusters, 60, 4, Problem::kHull));
  EXPECT_EQ(arcs.regions.size(), 4U);
  EXPECT_TRUE(oracle::respects(arcs.points, arcs.regions));
  EXPECT_THROW(generate_points(spec(Family::kCircleArcClusters, 8, 4, Problem::kHull)), InputError);
  EXPECT_THROW(generate_points(spec(Family::kInterleavedHalves, 8)), InputError);
}

TEST(RunOne, VerifiesAndCounts) {
  const BenchRecord sort = run_one(Algorithm::kSort, spec(Family::kInterleavedHalves, 1024));
  EXPECT_NEAR(sort.bound_bits, 1.0, 1e-12);
  ASSERT_TRUE(sort.entropy_bits.has_value());
  EXPECT_NEAR(*sort.entropy_bits, 1.0, 1e-9);
  EXPECT_GT(sort.meter.total(), 0U);
  EXPECT_NEAR(sort.cost_constant(),
              static_cast<double>(sort.meter.total()) / (1024.0 * (1 + sort.bound_bits)), 1e-12);
  const BenchRecord hull = run_one(Algorithm::kHull, spec(Family::kRegionRespecting, 256, 4, Problem::kHull));
  EXPECT_GT(hull.meter.orientation_tests, 0U);
  EXPECT_EQ(hull.generator, "region-respecting-4");
  const BenchRecord pareto = run_one(Algorithm::kPareto, spec(Family::kSorted, 256));
  EXPECT_DOUBLE_EQ(pareto.bound_bits, 0.0);
}

TEST(Bench, SeedsAdvancePerRepeat) {
  const std::vector<GeneratorSpec> specs{spec(Family::kGridRandom, 64, 1, Problem::kPareto, 5)};
  const auto records = bench(Algorithm::kSort, specs, 3);
  ASSERT_EQ(records.size(), 3U);
  EXPECT_EQ(records[0].seed, 5U);
  EXPECT_EQ(records[2].seed, 7U);
}

TEST(Bench, ParallelMatchesSequential) {
  const std::vector<GeneratorSpec> specs{spec(Family::kRegionRespecting, 300, 4, Problem::kHull, 2),
                                         spec(Family::kGridRandom, 200, 1, Problem::kHull, 8)};
  BenchOptions options;
  const auto seq = bench(Algorithm::kHull, specs, 5, options);
  options.threads = 4;
  const auto par = bench(Algorithm::kHull, specs, 5, options);
  ASSERT_EQ(par.size(), seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    EXPECT_EQ(par[i].generator, seq[i].generator);
    EXPECT_EQ(par[i].seed, seq[i].seed);
    EXPECT_EQ(par[i].meter.total(), seq[i].meter.total());
  }
  // the failure surfaced is the first one in job order
  const std::vector<GeneratorSpec> bad{spec(Family::kSorted, 10), spec(Family::kRuns, 4, 5)};
  EXPECT_THROW(bench(Algorithm::kSort, bad, 3, options), InputError);
}

TEST(ScalingReport, FlagsShrinkingTotals) {
  BenchRecord a;
  a.generator = "g";
  a.n = 100;
  a.meter.comparisons = 500;
  BenchRecord b = a;
  b.n = 200;
  b.meter.comparisons = 400;
  BenchRecord c = a;
  c.generator = "h";
  c.meter.comparisons = 300;
  const std::vector<BenchRecord> records{a, b, c};
  const ScalingReport report = scaling_report(records);
  ASSERT_EQ(report.rows.size(), 2U);
  EXPECT_TRUE(report.rows[0].anomaly);
  EXPECT_FALSE(report.rows[1].anomaly);
  EXPECT_DOUBLE_EQ(report.rows[0].max_c, 5.0);
  EXPECT_DOUBLE_EQ(report.rows[0].min_c, 2.0);
  EXPECT_DOUBLE_EQ(report.global_c, 5.0);
}

TEST(Csv, RoundTrip) {
  const std::vector<GeneratorSpec> specs{spec(Family::kRuns, 300, 3), spec(Family::kSorted, 50)};
  const auto records = bench(Algorithm::kSort, specs, 2);
  std::stringstream s;
  write_csv(s, records);
  const auto back = read_csv(s);
  ASSERT_EQ(back.size(), records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(back[i].generator, records[i].generator);
    EXPECT_EQ(back[i].n, records[i].n);
    EXPECT_EQ(back[i].seed, records[i].seed);
    EXPECT_EQ(back[i].meter.total(), records[i].meter.total());
    EXPECT_NEAR(back[i].bound_bits, records[i].bound_bits, 1e-9);
  }
  EXPECT_NE(to_json(records).find("\"generator\""), std::string::npos);
  std::istringstream bad("# presort bench records v1\nnot,a,record\n");
  EXPECT_THROW(read_csv(bad), InputError);
}
