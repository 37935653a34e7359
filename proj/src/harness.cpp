#include "presort/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <istream>
#include <limits>
#include <exception>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "presort/hull.hpp"
#include "presort/io.hpp"
#include "presort/pareto.hpp"

namespace presort::harness {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames = {{
    {Family::kSorted, "sorted"},
    {Family::kReversed, "reversed"},
    {Family::kInterleavedHalves, "interleaved-halves"},
    {Family::kEvensThenOdds, "evens-then-odds"},
    {Family::kRuns, "runs"},
    {Family::kGridRandom, "grid-random"},
    {Family::kCircleArcClusters, "circle-arc-clusters"},
    {Family::kRegionRespecting, "region-respecting"},
}};

// Coordinates of generated points lie in [0, kSpan).
constexpr std::int64_t kSpan = std::int64_t{1} << 28;
constexpr std::size_t kFullCheckLimit = 2048;
constexpr int kRetries = 16;

// std::mt19937_64 output is fixed by the standard; the distributions are
// not, so sampling is done by hand.
using Rng = std::mt19937_64;

std::uint64_t below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % bound;
}

double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(rng, i)]);
}

SizeVector split_evenly(std::size_t n, std::size_t k) {
  SizeVector sizes(k, n / k);
  for (std::size_t i = 0; i < n % k; ++i) sizes[i] += 1;
  return sizes;
}

// Distinct values from [lo, lo + width), skipping those already in `used`.
std::vector<std::int64_t> distinct_values(Rng& rng, std::size_t count, std::int64_t lo,
                                          std::int64_t width,
                                          std::unordered_set<std::int64_t>& used) {
  if (static_cast<std::uint64_t>(width) < 4 * count) {
    throw InputError("coordinate range too small for the requested size");
  }
  std::vector<std::int64_t> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::int64_t v = lo + static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(width)));
    if (used.insert(v).second) out.push_back(v);
  }
  return out;
}

// Random points in a box with coordinates unused so far.
std::vector<Point> box_points(Rng& rng, std::size_t count, const Rectangle& box,
                              std::unordered_set<std::int64_t>& used_x,
                              std::unordered_set<std::int64_t>& used_y) {
  const auto xs = distinct_values(rng, count, box.xmin, box.xmax - box.xmin + 1, used_x);
  auto ys = distinct_values(rng, count, box.ymin, box.ymax - box.ymin + 1, used_y);
  shuffle(ys, rng);
  std::vector<Point> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = {xs[i], ys[i]};
  return out;
}

// Moves p by unit steps until neither coordinate is taken, then claims both.
Point claim(Point p, std::unordered_set<std::int64_t>& used_x,
            std::unordered_set<std::int64_t>& used_y) {
  while (used_x.contains(p.x)) ++p.x;
  while (used_y.contains(p.y)) ++p.y;
  used_x.insert(p.x);
  used_y.insert(p.y);
  return p;
}

// Triangle i of k inscribed in its own arc of a circle, vertices included as
// points, plus `sizes[i] - 3` points drawn strictly inside.
std::vector<std::vector<Point>> arc_triangles(Rng& rng, const SizeVector& sizes,
                                              std::vector<Triangle>& triangles) {
  const std::size_t k = sizes.size();
  const double center = static_cast<double>(kSpan) / 2;
  const double radius = static_cast<double>(kSpan) * 0.45;
  std::unordered_set<std::int64_t> used_x;
  std::unordered_set<std::int64_t> used_y;
  std::vector<std::vector<Point>> groups(k);
  triangles.clear();
  for (std::size_t i = 0; i < k; ++i) {
    std::array<Point, 3> v;
    const std::array<double, 3> at = {0.05, 0.5, 0.95};
    for (std::size_t t = 0; t < 3; ++t) {
      const double theta =
          2 * std::numbers::pi * (static_cast<double>(i) + at[t]) / static_cast<double>(k);
      const Point raw{std::llround(center + radius * std::cos(theta)),
                      std::llround(center + radius * std::sin(theta))};
      v[t] = claim(raw, used_x, used_y);
    }
    triangles.push_back({v[0], v[1], v[2]});
    groups[i].assign(v.begin(), v.end());
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Triangle& tri = triangles[i];
    std::size_t attempts = 0;
    while (groups[i].size() < sizes[i]) {
      if (++attempts > 64 * sizes[i] + 1024) throw InputError("triangle too thin for its points");
      double u = unit(rng);
      double w = unit(rng);
      if (u + w > 1) {
        u = 1 - u;
        w = 1 - w;
      }
      const auto lerp = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
        return std::llround(static_cast<double>(a) + u * static_cast<double>(b - a) +
                            w * static_cast<double>(c - a));
      };
      const Point p{lerp(tri.a.x, tri.b.x, tri.c.x), lerp(tri.a.y, tri.b.y, tri.c.y)};
      if (!strictly_inside_triangle(p, tri.a, tri.b, tri.c)) continue;
      if (used_x.contains(p.x) || used_y.contains(p.y)) continue;
      used_x.insert(p.x);
      used_y.insert(p.y);
      groups[i].push_back(p);
    }
  }
  return groups;
}

// Sorts each group by a random axis order and interleaves the groups
// uniformly at random.
void emit_respecting(Rng& rng, std::vector<std::vector<Point>>& groups, PointInstance& out) {
  out.compass.clear();
  std::vector<std::size_t> slots;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const AxisOrder order = kAxisOrders[below(rng, 4)];
    out.compass.push_back(order);
    std::sort(groups[g].begin(), groups[g].end(),
              [&](const Point& a, const Point& b) { return precedes(order, a, b); });
    slots.insert(slots.end(), groups[g].size(), g);
  }
  shuffle(slots, rng);
  std::vector<std::size_t> next(groups.size(), 0);
  out.points.clear();
  for (std::size_t g : slots) out.points.push_back(groups[g][next[g]++]);
}

PointInstance generate_points_once(const GeneratorSpec& spec, Rng& rng) {
  const std::size_t n = spec.n;
  const bool hull = spec.problem == Problem::kHull;
  PointInstance out;
  std::unordered_set<std::int64_t> used_x;
  std::unordered_set<std::int64_t> used_y;
  const Rectangle square{0, 0, kSpan - 1, kSpan - 1};
  switch (spec.family) {
    case Family::kSorted:
    case Family::kReversed: {
      out.points = box_points(rng, n, square, used_x, used_y);
      const AxisOrder order =
          spec.family == Family::kSorted ? AxisOrder::kIncreasingX : AxisOrder::kDecreasingX;
      std::sort(out.points.begin(), out.points.end(),
                [&](const Point& a, const Point& b) { return precedes(order, a, b); });
      if (hull) {
        out.regions = RegionSet::triangles(
            {{{-kSpan, -kSpan}, {4 * kSpan, -kSpan}, {-kSpan, 4 * kSpan}}});
      } else {
        out.regions = RegionSet::rectangles({square});
      }
      out.compass = {order};
      out.universe_sizes = {n};
      return out;
    }
    case Family::kGridRandom: {
      out.points = box_points(rng, n, square, used_x, used_y);
      out.regions = hull ? RegionSet::triangles({}) : RegionSet::rectangles({});
      out.universe_sizes.assign(n, 1);
      return out;
    }
    case Family::kCircleArcClusters: {
      if (spec.k < 1 || n < 3 * spec.k) throw InputError("circle-arc-clusters needs n >= 3k");
      SizeVector sizes(spec.k, 3);
      sizes[0] = n - 3 * (spec.k - 1);
      std::vector<Triangle> tris;
      auto groups = arc_triangles(rng, sizes, tris);
      emit_respecting(rng, groups, out);
      if (hull) {
        out.regions = RegionSet::triangles(std::move(tris));
        out.universe_sizes = sizes;
      } else {
        out.regions = RegionSet::rectangles({});
        out.compass.clear();
        out.universe_sizes.assign(n, 1);
      }
      return out;
    }
    case Family::kRegionRespecting: {
      if (spec.k < 1 || spec.k > n) throw InputError("region-respecting needs 1 <= k <= n");
      const SizeVector sizes = split_evenly(n, spec.k);
      std::vector<std::vector<Point>> groups;
      if (hull) {
        if (n < 3 * spec.k) throw InputError("hull regions need at least 3 points each");
        std::vector<Triangle> tris;
        groups = arc_triangles(rng, sizes, tris);
        out.regions = RegionSet::triangles(std::move(tris));
      } else {
        // boxes along an anti-diagonal staircase
        const std::int64_t width = kSpan / static_cast<std::int64_t>(spec.k);
        std::vector<Rectangle> boxes;
        for (std::size_t i = 0; i < spec.k; ++i) {
          const auto xi = static_cast<std::int64_t>(i);
          const auto yi = static_cast<std::int64_t>(spec.k - 1 - i);
          boxes.push_back({xi * width, yi * width, xi * width + width - 1, yi * width + width - 1});
          groups.push_back(box_points(rng, sizes[i], boxes.back(), used_x, used_y));
        }
        out.regions = RegionSet::rectangles(std::move(boxes));
      }
      emit_respecting(rng, groups, out);
      out.universe_sizes = sizes;
      return out;
    }
    default:
      break;
  }
  throw InputError("family '" + std::string(to_string(spec.family)) + "' has no point form");
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view text) {
  for (const auto& [f, name] : kFamilyNames) {
    if (name == text) return f;
  }
  throw InputError("unknown generator family '" + std::string(text) + "'");
}

bool has_scalar_form(Family family) {
  return family != Family::kCircleArcClusters && family != Family::kRegionRespecting;
}

bool uses_k(Family family) {
  return family == Family::kRuns || family == Family::kCircleArcClusters ||
         family == Family::kRegionRespecting;
}

bool has_point_form(Family family) {
  return family == Family::kSorted || family == Family::kReversed ||
         family == Family::kGridRandom || family == Family::kCircleArcClusters ||
         family == Family::kRegionRespecting;
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kSort:
      return "sort";
    case Algorithm::kPareto:
      return "pareto";
    case Algorithm::kHull:
      return "hull";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "sort") return Algorithm::kSort;
  if (text == "pareto") return Algorithm::kPareto;
  if (text == "hull") return Algorithm::kHull;
  throw InputError("unknown algorithm '" + std::string(text) + "'");
}

std::string GeneratorSpec::label() const {
  std::string out(to_string(family));
  if (uses_k(family)) out += "-" + std::to_string(k);
  return out;
}

ScalarInstance generate_scalars(const GeneratorSpec& spec) {
  const std::size_t n = spec.n;
  if (n == 0) throw InputError("n must be positive");
  if (!has_scalar_form(spec.family)) {
    throw InputError("family '" + std::string(to_string(spec.family)) + "' has no scalar form");
  }
  Rng rng(spec.seed);
  ScalarInstance out;
  auto& v = out.values;
  v.reserve(n);
  const auto sn = static_cast<std::int64_t>(n);
  switch (spec.family) {
    case Family::kSorted:
      for (std::int64_t i = 1; i <= sn; ++i) v.push_back(i);
      out.universe_sizes = {n};
      break;
    case Family::kReversed:
      for (std::int64_t i = sn; i >= 1; --i) v.push_back(i);
      out.universe_sizes = {n};
      break;
    case Family::kInterleavedHalves:
      for (std::int64_t i = 0; i < sn; ++i) v.push_back(i % 2 == 0 ? i : sn + i);
      out.universe_sizes = n == 1 ? SizeVector{1} : SizeVector{(n + 1) / 2, n / 2};
      break;
    case Family::kEvensThenOdds:
      for (std::int64_t i = 2; i <= sn; i += 2) v.push_back(i);
      for (std::int64_t i = 1; i <= sn; i += 2) v.push_back(i);
      // ranks 2t-1 and 2t appear in decreasing order; nothing longer is monotone
      out.universe_sizes.assign(n / 2, 2);
      if (n % 2 == 1) out.universe_sizes.push_back(1);
      break;
    case Family::kRuns: {
      if (spec.k < 1 || spec.k > n) throw InputError("runs needs 1 <= k <= n");
      out.universe_sizes = split_evenly(n, spec.k);
      std::vector<std::size_t> blocks(spec.k);
      for (std::size_t b = 0; b < spec.k; ++b) blocks[b] = b;
      shuffle(blocks, rng);
      std::vector<std::int64_t> start(spec.k + 1, 1);
      for (std::size_t b = 0; b < spec.k; ++b) {
        start[b + 1] = start[b] + static_cast<std::int64_t>(out.universe_sizes[b]);
      }
      for (std::size_t b : blocks) {
        if (below(rng, 2) == 0) {
          for (std::int64_t x = start[b]; x < start[b + 1]; ++x) v.push_back(x);
        } else {
          for (std::int64_t x = start[b + 1] - 1; x >= start[b]; --x) v.push_back(x);
        }
      }
      break;
    }
    case Family::kGridRandom: {
      std::map<std::int64_t, std::size_t> counts;
      for (std::size_t i = 0; i < n; ++i) {
        v.push_back(static_cast<std::int64_t>(below(rng, n)));
        counts[v.back()] += 1;
      }
      for (const auto& [value, c] : counts) out.universe_sizes.push_back(c);
      break;
    }
    default:
      break;
  }
  return out;
}

PointInstance generate_points(const GeneratorSpec& spec) {
  if (spec.n == 0) throw InputError("n must be positive");
  if (!has_point_form(spec.family)) {
    throw InputError("family '" + std::string(to_string(spec.family)) + "' has no point form");
  }
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    PointInstance out = generate_points_once(spec, rng);
    if (spec.n > kFullCheckLimit || general_position_check(out.points)) return out;
  }
  throw InputError("could not reach general position within the retry budget");
}

double BenchRecord::cost_constant() const {
  return static_cast<double>(meter.total()) / (static_cast<double>(n) * (1.0 + bound_bits));
}

namespace {

std::string dump_scalars(std::span<const std::int64_t> values) {
  std::ostringstream out;
  io::write_scalars(out, values);
  return out.str();
}

std::string dump_points(std::span<const Point> points) {
  std::ostringstream out;
  io::write_points(out, points);
  return out.str();
}

bool stable_sorted(std::span<const std::int64_t> values, std::span<const std::size_t> positions) {
  const std::size_t n = values.size();
  if (positions.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = positions[k];
    if (p >= n || seen[p]) return false;
    seen[p] = 1;
    if (k == 0) continue;
    const std::size_t prev = positions[k - 1];
    if (values[prev] > values[p]) return false;
    if (values[prev] == values[p] && prev > p) return false;
  }
  return true;
}

}  // namespace

BenchRecord run_one(Algorithm algorithm, const GeneratorSpec& spec, const BenchOptions& options) {
  BenchRecord rec;
  rec.generator = spec.label();
  rec.algorithm = algorithm;
  rec.n = spec.n;
  rec.k = spec.k;
  rec.seed = spec.seed;
  using Clock = std::chrono::steady_clock;

  if (algorithm == Algorithm::kSort) {
    const ScalarInstance inst = generate_scalars(spec);
    rec.bound_bits = size_entropy(inst.universe_sizes);
    rec.lower_bound_bits = universe_lower_bound(inst.universe_sizes);
    if (spec.n <= options.exact_entropy_limit) {
      rec.entropy_bits = quicksort_entropy(inst.values).value_bits;
    }
    const auto start = Clock::now();
    const auto positions = truncated_quicksort_positions(inst.values, rec.meter);
    rec.wall_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
    if (options.verify && !stable_sorted(inst.values, positions)) {
      throw VerificationFailure("sort output is not the stable order of " + rec.generator,
                                dump_scalars(inst.values));
    }
    return rec;
  }

  GeneratorSpec point_spec = spec;
  point_spec.problem = algorithm == Algorithm::kHull ? Problem::kHull : Problem::kPareto;
  const PointInstance inst = generate_points(point_spec);
  rec.bound_bits = size_entropy(inst.universe_sizes);
  rec.lower_bound_bits = universe_lower_bound(inst.universe_sizes);
  const auto start = Clock::now();
  Verdict verdict;
  if (algorithm == Algorithm::kPareto) {
    const ParetoOutput out = pareto_front(inst.points, rec.meter);
    rec.wall_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
    if (options.verify) verdict = verify_pareto(inst.points, out.front, out.witnesses);
  } else {
    const HullOutput out = convex_hull(inst.points, rec.meter);
    rec.wall_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
    if (options.verify) verdict = verify_hull(inst.points, out.hull, out.witnesses);
  }
  if (!verdict) {
    throw VerificationFailure(std::string(to_string(algorithm)) + " output rejected (" +
                                  verdict.reason + ") on " + rec.generator,
                              dump_points(inst.points));
  }
  return rec;
}

std::vector<BenchRecord> bench(Algorithm algorithm, std::span<const GeneratorSpec> specs,
                               std::size_t repeats, const BenchOptions& options) {
  std::vector<GeneratorSpec> jobs;
  for (const GeneratorSpec& spec : specs) {
    for (std::size_t r = 0; r < repeats; ++r) {
      GeneratorSpec s = spec;
      s.seed = spec.seed + r;
      jobs.push_back(s);
    }
  }
  std::vector<BenchRecord> out(jobs.size());
  if (options.threads <= 1 || jobs.size() <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = run_one(algorithm, jobs[i], options);
    return out;
  }

  // each worker claims the next job; the lowest failing job wins so errors match a sequential run
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::size_t failed_job = jobs.size();
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        out[i] = run_one(algorithm, jobs[i], options);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (i < failed_job) {
          failed_job = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(options.threads, jobs.size()); ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

ScalingReport scaling_report(std::span<const BenchRecord> records) {
  ScalingReport report;
  std::map<std::pair<Algorithm, std::string>, std::size_t> row_of;
  std::vector<std::map<std::size_t, std::uint64_t>> max_total_by_n;
  for (const BenchRecord& rec : records) {
    const auto key = std::make_pair(rec.algorithm, rec.generator);
    auto [it, fresh] = row_of.try_emplace(key, report.rows.size());
    if (fresh) {
      report.rows.push_back({rec.algorithm, rec.generator, 0,
                             std::numeric_limits<double>::infinity(), 0.0, false});
      max_total_by_n.emplace_back();
    }
    ScalingRow& row = report.rows[it->second];
    const double c = rec.cost_constant();
    row.records += 1;
    row.min_c = std::min(row.min_c, c);
    row.max_c = std::max(row.max_c, c);
    auto& by_n = max_total_by_n[it->second][rec.n];
    by_n = std::max(by_n, rec.meter.total());
    report.global_c = std::max(report.global_c, c);
  }
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    std::uint64_t prev = 0;
    for (const auto& [n, total] : max_total_by_n[r]) {
      if (total < prev) report.rows[r].anomaly = true;
      prev = total;
    }
  }
  return report;
}

namespace {

constexpr std::string_view kRecordHeader =
    "generator,algorithm,n,k,seed,bound_bits,entropy_bits,lower_bound_bits,comparisons,"
    "orientation_tests,elements_touched,total,wall_ns";

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

nlohmann::json record_json(const BenchRecord& rec) {
  nlohmann::json j = {
      {"generator", rec.generator},
      {"algorithm", std::string(to_string(rec.algorithm))},
      {"n", rec.n},
      {"k", rec.k},
      {"seed", rec.seed},
      {"bound_bits", rec.bound_bits},
      {"lower_bound_bits", rec.lower_bound_bits},
      {"comparisons", rec.meter.comparisons},
      {"orientation_tests", rec.meter.orientation_tests},
      {"elements_touched", rec.meter.elements_touched},
      {"total", rec.meter.total()},
      {"wall_ns", rec.wall_ns},
  };
  j["entropy_bits"] = rec.entropy_bits ? nlohmann::json(*rec.entropy_bits) : nlohmann::json();
  return j;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "# presort bench records v1\n" << kRecordHeader << '\n';
  for (const BenchRecord& r : records) {
    out << r.generator << ',' << to_string(r.algorithm) << ',' << r.n << ',' << r.k << ','
        << r.seed << ',' << format_double(r.bound_bits) << ','
        << (r.entropy_bits ? format_double(*r.entropy_bits) : "") << ','
        << format_double(r.lower_bound_bits) << ',' << r.meter.comparisons << ','
        << r.meter.orientation_tests << ',' << r.meter.elements_touched << ','
        << r.meter.total() << ',' << r.wall_ns << '\n';
  }
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::vector<BenchRecord> out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kRecordHeader) throw InputError("unrecognized bench CSV header");
      header_seen = true;
      continue;
    }
    std::vector<std::string> f;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.emplace_back();
    if (f.size() != 13) throw InputError("line " + std::to_string(line_no) + ": expected 13 fields");
    try {
      BenchRecord r;
      r.generator = f[0];
      r.algorithm = parse_algorithm(f[1]);
      r.n = std::stoull(f[2]);
      r.k = std::stoull(f[3]);
      r.seed = std::stoull(f[4]);
      r.bound_bits = std::stod(f[5]);
      if (!f[6].empty()) r.entropy_bits = std::stod(f[6]);
      r.lower_bound_bits = std::stod(f[7]);
      r.meter.comparisons = std::stoull(f[8]);
      r.meter.orientation_tests = std::stoull(f[9]);
      r.meter.elements_touched = std::stoull(f[10]);
      r.wall_ns = std::stoull(f[12]);
      if (r.n == 0) throw InputError("n must be positive");
      out.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw InputError("line " + std::to_string(line_no) + ": malformed number");
    }
  }
  return out;
}

std::string to_json(std::span<const BenchRecord> records) {
  nlohmann::json j = nlohmann::json::array();
  for (const BenchRecord& r : records) j.push_back(record_json(r));
  return nlohmann::json{{"schema", "presort bench records v1"}, {"records", j}}.dump(2);
}

void write_csv(std::ostream& out, const ScalingReport& report) {
  out << "# presort scaling report v1 (C = total / (n (1 + universe bound)))\n"
      << "algorithm,generator,records,min_c,max_c,anomaly\n";
  for (const ScalingRow& r : report.rows) {
    out << to_string(r.algorithm) << ',' << r.generator << ',' << r.records << ','
        << format_double(r.min_c) << ',' << format_double(r.max_c) << ','
        << (r.anomaly ? "yes" : "no") << '\n';
  }
  out << "# global_c," << format_double(report.global_c) << '\n';
}

std::string to_json(const ScalingReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ScalingRow& r : report.rows) {
    rows.push_back({{"algorithm", std::string(to_string(r.algorithm))},
                    {"generator", r.generator},
                    {"records", r.records},
                    {"min_c", r.min_c},
                    {"max_c", r.max_c},
                    {"anomaly", r.anomaly}});
  }
  return nlohmann::json{{"schema", "presort scaling report v1"},
                        {"rows", rows},
                        {"global_c", report.global_c}}
      .dump(2);
}

}  // namespace presort::harness
