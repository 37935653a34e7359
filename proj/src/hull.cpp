#include "presort/hull.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "presort/select.hpp"

namespace presort {

namespace {

// Above this size the cubic or n^2 log n collinearity scan is skipped;
// collinear triples that matter surface as zero orientations during the
// run or as a failed output check.
constexpr std::size_t kFullCheckLimit = 2048;

[[noreturn]] void collinear_error() {
  throw GeneralPositionError("three collinear points");
}

void require_hull_input(std::span<const Point> input) {
  require_coordinate_range(input);
  if (!distinct_coordinates(input)) {
    throw GeneralPositionError("two points share an x- or y-coordinate");
  }
  if (input.size() <= kFullCheckLimit && !general_position_check(input)) collinear_error();
}

// Slope dy / dx with dx > 0.
struct Slope {
  Int128 dy = 0;
  Int128 dx = 1;
};

bool slope_less(const Slope& a, const Slope& b) { return a.dy * b.dx < b.dy * a.dx; }

struct Split {
  Bridge bridge;
  std::vector<std::size_t> first;   // on or above p_l p_i
  std::vector<std::size_t> second;  // on or above p_j p_r
  std::vector<std::size_t> inside;  // the rest
};

Split split_at_bridge(std::span<const Point> pts, const std::vector<std::size_t>& ids,
                      std::size_t pl, std::size_t pr, CostMeter& meter) {
  std::vector<std::int64_t> xs;
  xs.reserve(ids.size());
  for (std::size_t id : ids) xs.push_back(pts[id].x);
  const std::int64_t m = select_median(std::move(xs), std::less<std::int64_t>{}, meter);

  Split split;
  split.bridge = find_bridge(pts, ids, m, meter);
  const std::size_t pi = split.bridge.left;
  const std::size_t pj = split.bridge.right;
  for (std::size_t id : ids) {
    if (id == pl || id == pi) {
      split.first.push_back(id);
      continue;
    }
    if (id == pj || id == pr) {
      split.second.push_back(id);
      continue;
    }
    if (pi != pl) {
      const Orientation o = orientation(pts[pl], pts[pi], pts[id], meter);
      if (o == Orientation::kCollinear) collinear_error();
      if (o == Orientation::kCounterClockwise) {
        split.first.push_back(id);
        continue;
      }
    }
    if (pj != pr) {
      const Orientation o = orientation(pts[pj], pts[pr], pts[id], meter);
      if (o == Orientation::kCollinear) collinear_error();
      if (o == Orientation::kCounterClockwise) {
        split.second.push_back(id);
        continue;
      }
    }
    split.inside.push_back(id);
  }
  return split;
}

class HullRun {
 public:
  HullRun(std::vector<Point> pts, CostMeter& meter, std::vector<HullTriple>& witnesses)
      : pts_(std::move(pts)), meter_(meter), witnesses_(witnesses) {}

  /// Upper chain of ids from pl to pr, both included.
  std::vector<std::size_t> chain(std::vector<std::size_t> ids, std::size_t pl, std::size_t pr) {
    chain_.assign(1, pl);
    solve(std::move(ids), pl, pr);
    return std::move(chain_);
  }

 private:
  // Appends the chain vertices after pl, up to and including pr.
  void solve(std::vector<std::size_t> ids, std::size_t pl, std::size_t pr) {
    meter_.elements_touched += ids.size();
    std::vector<std::size_t> inner;
    inner.reserve(ids.size());
    for (std::size_t id : ids) {
      if (id != pl && id != pr) inner.push_back(id);
    }
    if (inner.empty()) {
      chain_.push_back(pr);
      return;
    }
    if (const auto order = first_sorted_order(pts_, inner, meter_)) {
      solve_sorted(std::move(inner), *order, pl, pr);
      return;
    }
    inner.clear();
    inner.shrink_to_fit();

    Split split = split_at_bridge(pts_, ids, pl, pr, meter_);
    ids.clear();
    ids.shrink_to_fit();
    const std::size_t pi = split.bridge.left;
    const std::size_t pj = split.bridge.right;
    for (std::size_t id : split.inside) {
      meter_.elements_touched += 1;
      const Orientation o = orientation(pts_[pl], pts_[pj], pts_[id], meter_);
      if (o == Orientation::kCollinear) collinear_error();
      witnesses_[id] = o == Orientation::kClockwise ? triple(pl, pr, pj) : triple(pl, pj, pi);
    }
    split.inside.clear();
    if (pi != pl) solve(std::move(split.first), pl, pi);
    if (pj != pr) {
      chain_.push_back(pj);
      solve(std::move(split.second), pj, pr);
    } else {
      chain_.push_back(pr);
    }
  }

  // Monotone chain over the sorted points plus both endpoints. y-sorted
  // input is rotated by a quarter turn, which keeps orientations.
  void solve_sorted(std::vector<std::size_t> inner, AxisOrder order, std::size_t pl,
                    std::size_t pr) {
    if (order == AxisOrder::kDecreasingX || order == AxisOrder::kDecreasingY) {
      std::reverse(inner.begin(), inner.end());
    }
    std::vector<std::size_t> seq;
    seq.reserve(inner.size() + 2);
    const bool by_x = sorts_by_x(order);
    if (by_x) {
      seq.push_back(pl);
      seq.insert(seq.end(), inner.begin(), inner.end());
      seq.push_back(pr);
    } else {
      const std::int64_t yl = pts_[pl].y;
      const std::int64_t yr = pts_[pr].y;
      const std::size_t lo = yl < yr ? pl : pr;
      const std::size_t hi = yl < yr ? pr : pl;
      bool lo_done = false;
      bool hi_done = false;
      for (std::size_t id : inner) {
        meter_.comparisons += 2;
        if (!lo_done && pts_[lo].y < pts_[id].y) {
          seq.push_back(lo);
          lo_done = true;
        }
        if (!hi_done && pts_[hi].y < pts_[id].y) {
          seq.push_back(hi);
          hi_done = true;
        }
        seq.push_back(id);
      }
      if (!lo_done) seq.push_back(lo);
      if (!hi_done) seq.push_back(hi);
    }
    auto key = [&](std::size_t id) {
      const Point& p = pts_[id];
      return by_x ? p : Point{p.y, -p.x};
    };
    meter_.elements_touched += seq.size();

    std::vector<std::size_t> lower;
    std::vector<std::size_t> upper;
    for (std::size_t id : seq) {
      const Point p = key(id);
      while (lower.size() >= 2) {
        const Orientation o =
            orientation(key(lower[lower.size() - 2]), key(lower.back()), p, meter_);
        if (o == Orientation::kCollinear) collinear_error();
        if (o == Orientation::kCounterClockwise) break;
        lower.pop_back();
      }
      lower.push_back(id);
      while (upper.size() >= 2) {
        const Orientation o =
            orientation(key(upper[upper.size() - 2]), key(upper.back()), p, meter_);
        if (o == Orientation::kCollinear) collinear_error();
        if (o == Orientation::kClockwise) break;
        upper.pop_back();
      }
      upper.push_back(id);
    }

    std::vector<char> on_hull_flag;
    auto on_hull = [&](std::size_t k) { return on_hull_flag[k] != 0; };
    {
      on_hull_flag.assign(seq.size(), 0);
      std::size_t li = 0;
      std::size_t ui = 0;
      for (std::size_t k = 0; k < seq.size(); ++k) {
        if (li < lower.size() && lower[li] == seq[k]) {
          on_hull_flag[k] = 1;
          ++li;
        }
        if (ui < upper.size() && upper[ui] == seq[k]) {
          on_hull_flag[k] = 1;
          ++ui;
        }
      }
    }

    // Each interior point lies between a lower and an upper hull edge; the
    // quadrilateral they span is split along one diagonal.
    std::size_t il = 0;
    std::size_t iu = 0;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (on_hull(k)) continue;
      const std::size_t id = seq[k];
      const Point p = key(id);
      while (key(lower[il + 1]).x < p.x) ++il;
      while (key(upper[iu + 1]).x < p.x) ++iu;
      meter_.comparisons += 2;
      const Orientation o = orientation(key(lower[il]), key(upper[iu + 1]), p, meter_);
      if (o == Orientation::kCollinear) collinear_error();
      witnesses_[id] = o == Orientation::kClockwise
                           ? triple(lower[il], lower[il + 1], upper[iu + 1])
                           : triple(lower[il], upper[iu + 1], upper[iu]);
    }

    std::vector<std::size_t> cycle = lower;
    for (std::size_t k = upper.size() - 1; k-- > 1;) cycle.push_back(upper[k]);
    const std::size_t c = cycle.size();
    const auto at = std::find(cycle.begin(), cycle.end(), pl);
    if (at == cycle.end()) throw InvariantViolation("rooted edge endpoint left the hull");
    const auto start = static_cast<std::size_t>(at - cycle.begin());
    if (cycle[(start + 1) % c] != pr) throw InvariantViolation("rooted edge is not a hull edge");
    std::vector<std::size_t> between;
    for (std::size_t k = (start + 2) % c; k != start; k = (k + 1) % c) between.push_back(cycle[k]);
    chain_.insert(chain_.end(), between.rbegin(), between.rend());
    chain_.push_back(pr);
  }

  static HullTriple triple(std::size_t a, std::size_t b, std::size_t c) {
    return {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
            static_cast<std::int64_t>(c)};
  }

  std::vector<Point> pts_;
  CostMeter& meter_;
  std::vector<HullTriple>& witnesses_;
  std::vector<std::size_t> chain_;
};

std::vector<Point> reflected(std::span<const Point> input) {
  std::vector<Point> out;
  out.reserve(input.size());
  for (const Point& p : input) out.push_back({p.x, -p.y});
  return out;
}

struct Halves {
  std::size_t leftmost = 0;
  std::size_t rightmost = 0;
  std::vector<std::size_t> upper;
  std::vector<std::size_t> lower;
};

Halves split_halves(std::span<const Point> input, CostMeter& meter) {
  Halves h;
  for (std::size_t i = 1; i < input.size(); ++i) {
    meter.comparisons += 2;
    if (input[i].x < input[h.leftmost].x) h.leftmost = i;
    if (input[i].x > input[h.rightmost].x) h.rightmost = i;
  }
  const Point& pl = input[h.leftmost];
  const Point& pr = input[h.rightmost];
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (i == h.leftmost || i == h.rightmost) {
      h.upper.push_back(i);
      h.lower.push_back(i);
      continue;
    }
    const Orientation o = orientation(pl, pr, input[i], meter);
    if (o == Orientation::kCollinear) collinear_error();
    (o == Orientation::kCounterClockwise ? h.upper : h.lower).push_back(i);
  }
  meter.elements_touched += input.size();
  return h;
}

}  // namespace

Bridge find_bridge(std::span<const Point> points, std::span<const std::size_t> ids,
                   std::int64_t m, CostMeter& meter) {
  bool has_left = false;
  bool has_right = false;
  for (std::size_t id : ids) {
    has_left = has_left || points[id].x <= m;
    has_right = has_right || points[id].x > m;
  }
  if (!has_left || !has_right) throw InputError("bridge line does not separate the points");

  std::vector<std::size_t> candidates(ids.begin(), ids.end());
  struct Pair {
    std::size_t a;
    std::size_t b;
    Slope slope;
  };
  while (true) {
    meter.elements_touched += candidates.size();
    if (candidates.size() == 2) {
      std::size_t a = candidates[0];
      std::size_t b = candidates[1];
      ++meter.comparisons;
      if (points[b].x < points[a].x) std::swap(a, b);
      return {a, b};
    }

    std::vector<Pair> pairs;
    std::vector<std::size_t> next;
    pairs.reserve(candidates.size() / 2);
    for (std::size_t k = 0; k + 1 < candidates.size(); k += 2) {
      std::size_t a = candidates[k];
      std::size_t b = candidates[k + 1];
      ++meter.comparisons;
      if (points[b].x < points[a].x) std::swap(a, b);
      const Slope s{static_cast<Int128>(points[b].y) - points[a].y,
                    static_cast<Int128>(points[b].x) - points[a].x};
      if (s.dx == 0) throw GeneralPositionError("two points share an x-coordinate");
      pairs.push_back({a, b, s});
    }
    if (candidates.size() % 2 == 1) next.push_back(candidates.back());

    std::vector<Slope> slopes;
    slopes.reserve(pairs.size());
    for (const Pair& p : pairs) slopes.push_back(p.slope);
    const Slope k = select_median(std::move(slopes), slope_less, meter);

    // Support points in direction (-k.dy, k.dx): maximize dx*y - dy*x.
    auto height = [&](std::size_t id) {
      return k.dx * points[id].y - k.dy * points[id].x;
    };
    std::size_t lo = candidates.front();
    std::size_t hi = candidates.front();
    Int128 best = height(lo);
    for (std::size_t id : candidates) {
      const Int128 h = height(id);
      meter.comparisons += 1;
      if (h > best) {
        best = h;
        lo = hi = id;
      } else if (h == best) {
        meter.comparisons += 2;
        if (points[id].x < points[lo].x) lo = id;
        if (points[id].x > points[hi].x) hi = id;
      }
    }
    if (points[lo].x <= m && m < points[hi].x) return {lo, hi};

    const bool bridge_right = points[hi].x <= m;
    for (const Pair& p : pairs) {
      ++meter.comparisons;
      if (bridge_right) {
        if (slope_less(p.slope, k)) {
          next.push_back(p.a);
          next.push_back(p.b);
        } else {
          next.push_back(p.b);
        }
      } else {
        if (slope_less(k, p.slope)) {
          next.push_back(p.a);
          next.push_back(p.b);
        } else {
          next.push_back(p.a);
        }
      }
    }
    candidates = std::move(next);
  }
}

HullOutput convex_hull(std::span<const Point> input, CostMeter& meter) {
  require_hull_input(input);
  const std::size_t n = input.size();
  HullOutput out;
  out.witnesses.assign(n, kNoTriangle);
  if (n < 3) {
    for (std::size_t i = 0; i < n; ++i) out.hull.push_back(i);
    if (n == 2 && input[1] < input[0]) std::swap(out.hull[0], out.hull[1]);
    return out;
  }

  Halves halves = split_halves(input, meter);
  const std::size_t pl = halves.leftmost;
  const std::size_t pr = halves.rightmost;
  const std::vector<std::size_t> upper =
      HullRun(std::vector<Point>(input.begin(), input.end()), meter, out.witnesses)
          .chain(std::move(halves.upper), pl, pr);
  const std::vector<std::size_t> lower =
      HullRun(reflected(input), meter, out.witnesses).chain(std::move(halves.lower), pl, pr);

  out.hull = lower;
  for (std::size_t k = upper.size() - 1; k-- > 1;) out.hull.push_back(upper[k]);

  if (n > kFullCheckLimit) {
    if (const Verdict v = verify_hull(input, out); !v) {
      if (!general_position_check(input)) collinear_error();
      throw InvariantViolation("hull output failed verification: " + v.reason);
    }
  }
  return out;
}

HullOutput convex_hull(std::span<const Point> input) {
  CostMeter scratch;
  return convex_hull(input, scratch);
}

Verdict verify_hull(std::span<const Point> input, std::span<const std::size_t> hull,
                    std::span<const HullTriple> witnesses) {
  const std::size_t n = input.size();
  if (witnesses.size() != n) return Verdict::fail("witness_count");
  std::vector<char> on_hull(n, 0);
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const std::size_t h = hull[k];
    if (h >= n) return Verdict::fail("hull_index_range", static_cast<std::int64_t>(k));
    if (on_hull[h]) return Verdict::fail("hull_duplicate", static_cast<std::int64_t>(h));
    on_hull[h] = 1;
  }
  if (n > 0 && hull.empty()) return Verdict::fail("hull_empty");

  const std::size_t k = hull.size();
  if (n >= 3) {
    if (k < 3) return Verdict::fail("hull_too_small");
    std::size_t lexmin = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (input[i] < input[lexmin]) lexmin = i;
    }
    if (hull.front() != lexmin) return Verdict::fail("hull_start");
    for (std::size_t t = 0; t < k; ++t) {
      const Point& a = input[hull[t]];
      const Point& b = input[hull[(t + 1) % k]];
      const Point& c = input[hull[(t + 2) % k]];
      if (orientation(a, b, c) != Orientation::kCounterClockwise) {
        return Verdict::fail("hull_turn", static_cast<std::int64_t>(hull[(t + 1) % k]));
      }
    }
    // Left turns plus one lexicographic rise and fall make a simple polygon.
    std::size_t t = 1;
    while (t < k && input[hull[t - 1]] < input[hull[t]]) ++t;
    while (t < k && input[hull[t]] < input[hull[t - 1]]) ++t;
    if (t != k) return Verdict::fail("hull_winding", static_cast<std::int64_t>(hull[t]));
  } else if (k != n) {
    return Verdict::fail("hull_count");
  }

  std::size_t sentinels = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const HullTriple& w = witnesses[i];
    const auto idx = static_cast<std::int64_t>(i);
    if (w == kNoTriangle) {
      ++sentinels;
      if (!on_hull[i]) return Verdict::fail("unwitnessed_non_hull", idx);
      continue;
    }
    if (on_hull[i]) return Verdict::fail("hull_point_witnessed", idx);
    for (std::int64_t v : w) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) return Verdict::fail("witness_range", idx);
    }
    if (!strictly_inside_triangle(input[i], input[static_cast<std::size_t>(w[0])],
                                  input[static_cast<std::size_t>(w[1])],
                                  input[static_cast<std::size_t>(w[2])])) {
      return Verdict::fail("witness_not_containing", idx);
    }
  }
  if (sentinels != k) return Verdict::fail("hull_count");
  return Verdict::pass();
}

bool QuadrangleTree::precedes(std::size_t p, std::size_t q) const {
  const int np = node_of[p];
  const int nq = node_of[q];
  if (np < 0) return nq >= 0;
  if (nq < 0) return false;
  if (np == nq) return depth_key[q] > depth_key[p];
  for (int u = nodes[static_cast<std::size_t>(nq)].parent; u >= 0;
       u = nodes[static_cast<std::size_t>(u)].parent) {
    if (u == np) return true;
  }
  return false;
}

std::uint64_t QuadrangleTree::depth_cost() const {
  std::uint64_t total = 0;
  for (std::size_t p = 0; p < node_of.size(); ++p) total += depth_of(p);
  return total;
}

namespace {

class QuadrangleTreeBuilder {
 public:
  QuadrangleTreeBuilder(std::span<const Point> input, std::vector<Point> pts, bool upper,
                        const RegionSet& regions, QuadrangleTree& tree)
      : input_(input), pts_(std::move(pts)), upper_(upper), regions_(regions), tree_(tree) {}

  int build(std::vector<std::size_t> ids, std::size_t pl, std::size_t pr, std::size_t depth,
            int parent) {
    std::vector<std::size_t> inner;
    for (std::size_t id : ids) {
      if (id != pl && id != pr) inner.push_back(id);
    }
    if (inner.empty()) return -1;

    const int index = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    {
      QuadrangleNode& node = tree_.nodes.back();
      node.upper = upper_;
      node.edge_left = pl;
      node.edge_right = pr;
      node.depth = depth;
      node.parent = parent;
    }
    auto settle = [&](std::vector<std::size_t> population) {
      for (std::size_t id : population) {
        tree_.node_of[id] = index;
        tree_.depth_key[id] = cross(pts_[pl], pts_[pr], pts_[id]);
      }
      tree_.nodes[static_cast<std::size_t>(index)].population = std::move(population);
    };

    if (const auto region = regions_.common_region(input_, inner)) {
      tree_.nodes[static_cast<std::size_t>(index)].region = *region;
      settle(std::move(inner));
      return index;
    }

    CostMeter scratch;
    Split split = split_at_bridge(pts_, ids, pl, pr, scratch);
    const std::size_t pi = split.bridge.left;
    const std::size_t pj = split.bridge.right;
    std::vector<std::size_t> population = std::move(split.inside);
    if (pi != pl) population.push_back(pi);
    if (pj != pr) population.push_back(pj);
    std::sort(population.begin(), population.end());
    {
      QuadrangleNode& node = tree_.nodes[static_cast<std::size_t>(index)];
      node.bridge_left = pi;
      node.bridge_right = pj;
    }
    settle(std::move(population));
    const int left = pi != pl ? build(std::move(split.first), pl, pi, depth + 1, index) : -1;
    const int right = pj != pr ? build(std::move(split.second), pj, pr, depth + 1, index) : -1;
    tree_.nodes[static_cast<std::size_t>(index)].left = left;
    tree_.nodes[static_cast<std::size_t>(index)].right = right;
    return index;
  }

 private:
  std::span<const Point> input_;
  std::vector<Point> pts_;
  bool upper_;
  const RegionSet& regions_;
  QuadrangleTree& tree_;
};

}  // namespace

QuadrangleTree build_quadrangle_tree(std::span<const Point> points, const RegionSet& regions) {
  require_hull_input(points);
  regions.validate();
  QuadrangleTree tree;
  const std::size_t n = points.size();
  tree.node_of.assign(n, -1);
  tree.depth_key.assign(n, 0);
  if (n < 3) return tree;
  CostMeter scratch;
  Halves halves = split_halves(points, scratch);
  tree.leftmost = halves.leftmost;
  tree.rightmost = halves.rightmost;
  tree.upper_root =
      QuadrangleTreeBuilder(points, std::vector<Point>(points.begin(), points.end()), true,
                            regions, tree)
          .build(std::move(halves.upper), halves.leftmost, halves.rightmost, 0, -1);
  tree.lower_root = QuadrangleTreeBuilder(points, reflected(points), false, regions, tree)
                        .build(std::move(halves.lower), halves.leftmost, halves.rightmost, 0, -1);
  return tree;
}

QuadrangleOrder quadrangle_order(std::span<const Point> points, const RegionSet& regions,
                                 const QuadrangleTree& tree, const CompassFunction& compass) {
  if (compass.size() != regions.size()) {
    throw InputError("compass function must assign one order per region");
  }
  const std::vector<int> labels = regions.locate(points);
  return quadrangle_order(points, labels, tree, compass);
}

QuadrangleOrder quadrangle_order(std::span<const Point> points, std::span<const int> labels,
                                 const QuadrangleTree& tree, const CompassFunction& compass) {
  const std::size_t n = points.size();
  if (labels.size() != n || tree.node_of.size() != n) {
    throw InputError("labels and tree must cover every point");
  }
  for (int label : labels) {
    if (label >= static_cast<int>(compass.size())) {
      throw InputError("compass function must assign one order per region");
    }
  }
  QuadrangleOrder out;

  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  auto tree_key = [&](std::size_t p) {
    const int u = tree.node_of[p];
    const std::int64_t depth = u < 0 ? -1 : static_cast<std::int64_t>(tree.depth_of(p));
    return std::make_tuple(depth, u, tree.depth_key[p], p);
  };
  std::sort(ids.begin(), ids.end(),
            [&](std::size_t a, std::size_t b) { return tree_key(a) < tree_key(b); });
  out.rank_tree.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) out.rank_tree[ids[r]] = r;

  out.rho.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.rho[i] = i;
  const std::span<const int> where = labels;
  std::map<std::pair<int, int>, std::vector<std::size_t>> groups;
  for (std::size_t p = 0; p < n; ++p) {
    if (where[p] >= 0) groups[{tree.node_of[p], where[p]}].push_back(p);
  }
  for (auto& [key, members] : groups) {
    const AxisOrder order = compass[static_cast<std::size_t>(key.second)];
    std::vector<std::size_t> by_tree = members;
    std::sort(by_tree.begin(), by_tree.end(),
              [&](std::size_t a, std::size_t b) { return out.rank_tree[a] < out.rank_tree[b]; });
    std::vector<std::size_t> by_compass = members;
    std::sort(by_compass.begin(), by_compass.end(), [&](std::size_t a, std::size_t b) {
      return presort::precedes(order, points[a], points[b]);
    });
    for (std::size_t i = 0; i < members.size(); ++i) out.rho[by_compass[i]] = by_tree[i];
  }
  out.rho_inverse.resize(n);
  for (std::size_t p = 0; p < n; ++p) out.rho_inverse[out.rho[p]] = p;
  out.rank.resize(n);
  out.sequence.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    out.rank[p] = out.rank_tree[out.rho_inverse[p]];
    out.sequence[out.rank[p]] = p;
  }
  return out;
}

}  // namespace presort
