#include "presort/pareto.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "presort/select.hpp"

namespace presort {

namespace {

void require_pareto_input(std::span<const Point> input) {
  require_coordinate_range(input);
  if (!distinct_coordinates(input)) {
    throw GeneralPositionError("two points share an x- or y-coordinate");
  }
}

class ParetoSolver {
 public:
  ParetoSolver(std::span<const Point> points, CostMeter& meter, ParetoOutput& out)
      : points_(points), meter_(meter), out_(out) {}

  void solve(std::vector<std::size_t> ids) {
    if (ids.empty()) return;
    meter_.elements_touched += ids.size();
    if (const auto order = first_sorted_order(points_, ids, meter_)) {
      scan_sorted(ids, *order);
      return;
    }

    std::vector<std::int64_t> xs;
    xs.reserve(ids.size());
    for (std::size_t id : ids) xs.push_back(points_[id].x);
    const std::int64_t m = select_median(std::move(xs), std::less<std::int64_t>{}, meter_);

    std::size_t q = ids.front();
    bool have_q = false;
    for (std::size_t id : ids) {
      ++meter_.comparisons;
      if (points_[id].x < m) continue;
      ++meter_.comparisons;
      if (!have_q || points_[id].y > points_[q].y) {
        q = id;
        have_q = true;
      }
    }

    std::vector<std::size_t> above;
    std::vector<std::size_t> right;
    const Point& pq = points_[q];
    for (std::size_t id : ids) {
      if (id == q) continue;
      const Point& p = points_[id];
      meter_.comparisons += 2;
      if (p.y > pq.y) {
        above.push_back(id);
      } else if (p.x > pq.x) {
        right.push_back(id);
      } else {
        out_.witnesses[id] = static_cast<std::int64_t>(q);
      }
    }
    ids.clear();
    ids.shrink_to_fit();
    solve(std::move(above));
    out_.front.push_back(q);
    solve(std::move(right));
  }

 private:
  // Scan from the largest coordinate of the sort key downwards, keeping the
  // running maximum of the other coordinate.
  void scan_sorted(const std::vector<std::size_t>& ids, AxisOrder order) {
    const bool by_x = sorts_by_x(order);
    const bool ascending = order == AxisOrder::kIncreasingX || order == AxisOrder::kIncreasingY;
    const std::size_t n = ids.size();
    std::vector<std::size_t> found;
    std::size_t best = ids[ascending ? n - 1 : 0];
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t id = ids[ascending ? n - 1 - k : k];
      const Point& p = points_[id];
      ++meter_.comparisons;
      const bool maximal =
          k == 0 || (by_x ? p.y > points_[best].y : p.x > points_[best].x);
      if (maximal) {
        found.push_back(id);
        best = id;
      } else {
        out_.witnesses[id] = static_cast<std::int64_t>(best);
      }
    }
    // x-keyed scans meet the front by decreasing x, y-keyed ones by
    // increasing x.
    if (by_x) std::reverse(found.begin(), found.end());
    out_.front.insert(out_.front.end(), found.begin(), found.end());
  }

  std::span<const Point> points_;
  CostMeter& meter_;
  ParetoOutput& out_;
};

}  // namespace

ParetoOutput pareto_front(std::span<const Point> input, CostMeter& meter) {
  require_pareto_input(input);
  ParetoOutput out;
  out.witnesses.assign(input.size(), kNoWitness);
  std::vector<std::size_t> ids(input.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  ParetoSolver(input, meter, out).solve(std::move(ids));
  return out;
}

ParetoOutput pareto_front(std::span<const Point> input) {
  CostMeter scratch;
  return pareto_front(input, scratch);
}

Verdict verify_pareto(std::span<const Point> input, std::span<const std::size_t> front,
                      std::span<const std::int64_t> witnesses) {
  const std::size_t n = input.size();
  if (witnesses.size() != n) return Verdict::fail("witness_count");
  std::vector<char> in_front(n, 0);
  for (std::size_t k = 0; k < front.size(); ++k) {
    const std::size_t f = front[k];
    if (f >= n) return Verdict::fail("front_index_range", static_cast<std::int64_t>(k));
    if (in_front[f]) return Verdict::fail("front_duplicate", static_cast<std::int64_t>(f));
    in_front[f] = 1;
    if (k > 0) {
      const Point& prev = input[front[k - 1]];
      const Point& cur = input[f];
      if (!(prev.x < cur.x)) return Verdict::fail("front_x_order", static_cast<std::int64_t>(f));
      if (!(prev.y > cur.y)) return Verdict::fail("front_y_order", static_cast<std::int64_t>(f));
    }
  }
  if (n > 0 && front.empty()) return Verdict::fail("front_empty");
  std::size_t sentinels = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t w = witnesses[i];
    const auto idx = static_cast<std::int64_t>(i);
    if (w == kNoWitness) {
      ++sentinels;
      if (!in_front[i]) return Verdict::fail("unwitnessed_non_front", idx);
      continue;
    }
    if (in_front[i]) return Verdict::fail("front_point_witnessed", idx);
    if (w < 0 || static_cast<std::size_t>(w) >= n) return Verdict::fail("witness_range", idx);
    if (static_cast<std::size_t>(w) == i) return Verdict::fail("witness_self", idx);
    const Point& p = input[i];
    const Point& d = input[static_cast<std::size_t>(w)];
    if (d == p) return Verdict::fail("witness_coincident", idx);
    if (!dominates(d, p)) return Verdict::fail("witness_not_dominating", idx);
  }
  if (sentinels != front.size()) return Verdict::fail("front_count");
  return Verdict::pass();
}

namespace {

class QuadrantTreeBuilder {
 public:
  QuadrantTreeBuilder(std::span<const Point> points, const RegionSet& regions, QuadrantTree& tree)
      : points_(points), regions_(regions), tree_(tree) {}

  int build(std::vector<std::size_t> ids, std::size_t depth, int parent,
            std::optional<std::int64_t> x_above, std::optional<std::int64_t> y_above) {
    if (ids.empty()) return -1;
    const int index = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    {
      QuadrantNode& node = tree_.nodes.back();
      node.depth = depth;
      node.parent = parent;
      node.x_above = x_above;
      node.y_above = y_above;
    }

    if (const auto region = regions_.common_region(points_, ids)) {
      QuadrantNode& node = tree_.nodes[static_cast<std::size_t>(index)];
      node.region = *region;
      for (std::size_t id : ids) tree_.node_of[id] = static_cast<std::size_t>(index);
      node.population = std::move(ids);
      return index;
    }

    std::vector<std::int64_t> xs;
    xs.reserve(ids.size());
    for (std::size_t id : ids) xs.push_back(points_[id].x);
    const std::size_t mid = (xs.size() - 1) / 2;
    std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid), xs.end());
    const std::int64_t m = xs[mid];

    std::optional<std::size_t> q;
    for (std::size_t id : ids) {
      if (points_[id].x >= m && (!q || points_[id].y > points_[*q].y)) q = id;
    }

    std::vector<std::size_t> above;
    std::vector<std::size_t> right;
    std::vector<std::size_t> population;
    const Point pq = points_[*q];
    for (std::size_t id : ids) {
      const Point& p = points_[id];
      if (p.y > pq.y) {
        above.push_back(id);
      } else if (p.x > pq.x) {
        right.push_back(id);
      } else {
        population.push_back(id);
        tree_.node_of[id] = static_cast<std::size_t>(index);
      }
    }
    ids.clear();
    ids.shrink_to_fit();
    {
      QuadrantNode& node = tree_.nodes[static_cast<std::size_t>(index)];
      node.representative = *q;
      node.population = std::move(population);
    }
    const int left = build(std::move(above), depth + 1, index, x_above, pq.y);
    const int right_child = build(std::move(right), depth + 1, index, pq.x, y_above);
    tree_.nodes[static_cast<std::size_t>(index)].left = left;
    tree_.nodes[static_cast<std::size_t>(index)].right = right_child;
    return index;
  }

 private:
  std::span<const Point> points_;
  const RegionSet& regions_;
  QuadrantTree& tree_;
};

}  // namespace

QuadrantTree build_quadrant_tree(std::span<const Point> points, const RegionSet& regions) {
  require_pareto_input(points);
  regions.validate();
  QuadrantTree tree;
  tree.node_of.assign(points.size(), 0);
  std::vector<std::size_t> ids(points.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  QuadrantTreeBuilder(points, regions, tree).build(std::move(ids), 0, -1, std::nullopt,
                                                   std::nullopt);
  return tree;
}

std::uint64_t depth_cost(const QuadrantTree& tree) {
  std::uint64_t total = 0;
  for (std::size_t u : tree.node_of) total += tree.nodes[u].depth;
  return total;
}

}  // namespace presort
