#pragma once

// Brute-force reference implementations. Each one works straight from the
// definition and shares no code path with the library beyond Point,
// orientation and dominates.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "presort/core.hpp"
#include "presort/regions.hpp"

namespace oracle {

using presort::Point;

inline std::vector<std::size_t> stable_sort_positions(std::span<const std::int64_t> v) {
  std::vector<std::size_t> ids(v.size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  return ids;
}

/// Positions of points dominated by no other point.
inline std::set<std::size_t> maximal_set(std::span<const Point> pts) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
      dominated = j != i && presort::dominates(pts[j], pts[i]);
    }
    if (!dominated) out.insert(i);
  }
  return out;
}

inline bool inside(const Point& p, const Point& a, const Point& b, const Point& c) {
  const auto o1 = presort::orientation(a, b, p);
  const auto o2 = presort::orientation(b, c, p);
  const auto o3 = presort::orientation(c, a, p);
  return o1 != presort::Orientation::kCollinear && o1 == o2 && o2 == o3;
}

/// Point i is a hull vertex iff no triangle of other points strictly
/// contains it.
inline std::set<std::size_t> hull_vertex_set(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    bool covered = false;
    for (std::size_t a = 0; a < n && !covered; ++a) {
      for (std::size_t b = a + 1; b < n && !covered; ++b) {
        for (std::size_t c = b + 1; c < n && !covered; ++c) {
          if (a == i || b == i || c == i) continue;
          covered = inside(pts[i], pts[a], pts[b], pts[c]);
        }
      }
    }
    if (!covered) out.insert(i);
  }
  return out;
}

inline bool in_general_position(std::span<const Point> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i].x == pts[j].x || pts[i].y == pts[j].y) return false;
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (presort::cross(pts[i], pts[j], pts[k]) == 0) return false;
      }
    }
  }
  return true;
}

inline bool monotone_in(std::span<const Point> seq, presort::AxisOrder order) {
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const Point& a = seq[i - 1];
    const Point& b = seq[i];
    bool ok = false;
    switch (order) {
      case presort::AxisOrder::kIncreasingX: ok = a.x < b.x; break;
      case presort::AxisOrder::kDecreasingX: ok = a.x > b.x; break;
      case presort::AxisOrder::kIncreasingY: ok = a.y < b.y; break;
      case presort::AxisOrder::kDecreasingY: ok = a.y > b.y; break;
    }
    if (!ok) return false;
  }
  return true;
}

/// Every region's subsequence is monotone in at least one axis order.
inline bool respects(std::span<const Point> input, const presort::RegionSet& regions) {
  for (std::size_t r = 0; r < regions.size(); ++r) {
    std::vector<Point> seq;
    for (const Point& p : input) {
      if (regions.contains(r, p)) seq.push_back(p);
    }
    bool any = false;
    for (auto o : presort::kAxisOrders) any = any || monotone_in(seq, o);
    if (!any) return false;
  }
  return true;
}

inline double part_weight(std::size_t c, std::size_t n) {
  if (c == 0) return 0.0;
  const double f = static_cast<double>(c) / static_cast<double>(n);
  return f * std::log2(1.0 / f);
}

// Minimum over all 2^(d-1) ways to cut items 0..d-1 into contiguous blocks;
// feasible(i, j) and weight(i, j) describe block [i, j].
inline double min_partition(std::size_t d, const std::function<bool(std::size_t, std::size_t)>& feasible,
                            const std::function<double(std::size_t, std::size_t)>& weight) {
  if (d == 0) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (d - 1)); ++cuts) {
    double total = 0.0;
    std::size_t start = 0;
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      const bool end = i == d - 1 || ((cuts >> i) & 1U);
      if (!end) continue;
      ok = feasible(start, i);
      total += weight(start, i);
      start = i + 1;
    }
    if (ok) best = std::min(best, total);
  }
  return best;
}

/// Quicksort entropy by exhaustive search over contiguous rank partitions.
inline double quicksort_entropy(std::span<const std::int64_t> v) {
  std::vector<std::int64_t> distinct(v.begin(), v.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::size_t n = v.size();
  auto rank = [&](std::int64_t x) {
    return static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), x) -
                                    distinct.begin());
  };
  auto feasible = [&](std::size_t i, std::size_t j) {
    std::vector<std::size_t> seq;
    for (std::int64_t x : v) {
      const std::size_t r = rank(x);
      if (r >= i && r <= j) seq.push_back(r);
    }
    return std::is_sorted(seq.begin(), seq.end()) ||
           std::is_sorted(seq.rbegin(), seq.rend());
  };
  auto weight = [&](std::size_t i, std::size_t j) {
    std::size_t c = 0;
    for (std::int64_t x : v) c += rank(x) >= i && rank(x) <= j ? 1 : 0;
    return part_weight(c, n);
  };
  return min_partition(distinct.size(), feasible, weight);
}

/// TimSort entropy by exhaustive search over partitions into monotone runs.
inline double timsort_entropy(std::span<const std::int64_t> v) {
  const std::size_t n = v.size();
  auto feasible = [&](std::size_t i, std::size_t j) {
    return std::is_sorted(v.begin() + static_cast<std::ptrdiff_t>(i),
                          v.begin() + static_cast<std::ptrdiff_t>(j + 1)) ||
           std::is_sorted(v.rbegin() + static_cast<std::ptrdiff_t>(n - 1 - j),
                          v.rbegin() + static_cast<std::ptrdiff_t>(n - i));
  };
  auto weight = [&](std::size_t i, std::size_t j) { return part_weight(j - i + 1, n); };
  return min_partition(n, feasible, weight);
}

inline double log2_factorial(std::size_t k) {
  double s = 0.0;
  for (std::size_t t = 2; t <= k; ++t) s += std::log2(static_cast<double>(t));
  return s;
}

// --- recursion-tree replays ------------------------------------------------

inline bool single_region(std::span<const Point> pts, const std::vector<std::size_t>& ids,
                          const presort::RegionSet& regions) {
  for (std::size_t r = 0; r < regions.size(); ++r) {
    bool all = true;
    for (std::size_t id : ids) all = all && regions.contains(r, pts[id]);
    if (all) return true;
  }
  return false;
}

/// Quadrant-tree replay: node id and depth of every point.
struct Replay {
  std::vector<int> node_of;
  std::vector<int> depth_of;
  int nodes = 0;

  [[nodiscard]] std::uint64_t depth_sum() const {
    std::uint64_t s = 0;
    for (int d : depth_of) s += d > 0 ? static_cast<std::uint64_t>(d) : 0;
    return s;
  }
  /// Points grouped by node.
  [[nodiscard]] std::set<std::set<std::size_t>> groups() const {
    std::map<int, std::set<std::size_t>> by;
    for (std::size_t p = 0; p < node_of.size(); ++p) {
      if (node_of[p] >= 0) by[node_of[p]].insert(p);
    }
    std::set<std::set<std::size_t>> out;
    for (auto& [k, g] : by) out.insert(g);
    return out;
  }
};

inline void quadrant_replay(std::span<const Point> pts, std::vector<std::size_t> ids, int depth,
                            const presort::RegionSet& regions, Replay& out) {
  if (ids.empty()) return;
  const int node = out.nodes++;
  auto settle = [&](std::size_t id) {
    out.node_of[id] = node;
    out.depth_of[id] = depth;
  };
  if (single_region(pts, ids, regions)) {
    for (std::size_t id : ids) settle(id);
    return;
  }
  std::vector<std::int64_t> xs;
  for (std::size_t id : ids) xs.push_back(pts[id].x);
  std::sort(xs.begin(), xs.end());
  const std::int64_t m = xs[(xs.size() - 1) / 2];
  std::size_t q = ids.front();
  bool have = false;
  for (std::size_t id : ids) {
    if (pts[id].x >= m && (!have || pts[id].y > pts[q].y)) {
      q = id;
      have = true;
    }
  }
  std::vector<std::size_t> above;
  std::vector<std::size_t> right;
  for (std::size_t id : ids) {
    if (pts[id].y > pts[q].y) {
      above.push_back(id);
    } else if (pts[id].x > pts[q].x) {
      right.push_back(id);
    } else {
      settle(id);
    }
  }
  quadrant_replay(pts, above, depth + 1, regions, out);
  quadrant_replay(pts, right, depth + 1, regions, out);
}

inline Replay quadrant_replay(std::span<const Point> pts, const presort::RegionSet& regions) {
  Replay out;
  out.node_of.assign(pts.size(), -1);
  out.depth_of.assign(pts.size(), -1);
  std::vector<std::size_t> ids(pts.size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  quadrant_replay(pts, ids, 0, regions, out);
  return out;
}

// Upper-hull recursion on run coordinates `run`; truncation is tested on the
// input coordinates `orig`.
inline void quadrangle_replay(std::span<const Point> orig, const std::vector<Point>& run,
                              std::vector<std::size_t> S, std::size_t pl, std::size_t pr,
                              int depth, const presort::RegionSet& regions, Replay& out) {
  std::vector<std::size_t> inner;
  for (std::size_t id : S) {
    if (id != pl && id != pr) inner.push_back(id);
  }
  if (inner.empty()) return;
  const int node = out.nodes++;
  auto settle = [&](std::size_t id) {
    out.node_of[id] = node;
    out.depth_of[id] = depth;
  };
  if (single_region(orig, inner, regions)) {
    for (std::size_t id : inner) settle(id);
    return;
  }
  std::vector<std::int64_t> xs;
  for (std::size_t id : S) xs.push_back(run[id].x);
  std::sort(xs.begin(), xs.end());
  const std::int64_t m = xs[(xs.size() - 1) / 2];
  // the hull edge over x = m: every point of S on or below it
  std::size_t pi = S.front();
  std::size_t pj = S.front();
  for (std::size_t a : S) {
    for (std::size_t b : S) {
      if (!(run[a].x <= m && m < run[b].x)) continue;
      bool edge = true;
      for (std::size_t c : S) edge = edge && presort::cross(run[a], run[b], run[c]) <= 0;
      if (edge) {
        pi = a;
        pj = b;
      }
    }
  }
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  for (std::size_t id : S) {
    const bool in_first = id == pl || id == pi || (pi != pl && presort::cross(run[pl], run[pi], run[id]) > 0);
    const bool in_second = id == pj || id == pr || (pj != pr && presort::cross(run[pj], run[pr], run[id]) > 0);
    if (in_first) {
      first.push_back(id);
    } else if (in_second) {
      second.push_back(id);
    } else {
      settle(id);
    }
  }
  if (pi != pl) settle(pi);
  if (pj != pr) settle(pj);
  if (pi != pl) quadrangle_replay(orig, run, first, pl, pi, depth + 1, regions, out);
  if (pj != pr) quadrangle_replay(orig, run, second, pj, pr, depth + 1, regions, out);
}

/// Both hull halves; the extreme-x points stay unassigned.
inline Replay quadrangle_replay(std::span<const Point> pts, const presort::RegionSet& regions) {
  Replay out;
  const std::size_t n = pts.size();
  out.node_of.assign(n, -1);
  out.depth_of.assign(n, -1);
  if (n < 3) return out;
  std::size_t pl = 0;
  std::size_t pr = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pts[i].x < pts[pl].x) pl = i;
    if (pts[i].x > pts[pr].x) pr = i;
  }
  std::vector<std::size_t> upper{pl, pr};
  std::vector<std::size_t> lower{pl, pr};
  for (std::size_t i = 0; i < n; ++i) {
    if (i == pl || i == pr) continue;
    (presort::cross(pts[pl], pts[pr], pts[i]) > 0 ? upper : lower).push_back(i);
  }
  std::vector<Point> same(pts.begin(), pts.end());
  std::vector<Point> flipped;
  for (const Point& p : pts) flipped.push_back({p.x, -p.y});
  quadrangle_replay(pts, same, upper, pl, pr, 0, regions, out);
  quadrangle_replay(pts, flipped, lower, pl, pr, 0, regions, out);
  return out;
}

// --- downdraft counting ----------------------------------------------------

/// Number of ordered normalized downdrafts, by enumerating every map from
/// the non-extremal points to P and every order of every fiber.
/// `above(p, q)`: q may be the image of p. `rank` is the linear order and
/// `label` the region of each point (-1 for none).
inline std::uint64_t count_ond(std::size_t n, const std::vector<std::size_t>& nonextremal,
                               const std::function<bool(std::size_t, std::size_t)>& above,
                               const std::vector<std::size_t>& rank, const std::vector<int>& label) {
  const std::size_t m = nonextremal.size();
  std::uint64_t maps = 1;
  for (std::size_t i = 0; i < m; ++i) maps *= n;
  std::uint64_t total = 0;
  std::vector<std::size_t> psi(m);
  for (std::uint64_t code = 0; code < maps; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < m; ++i) {
      psi[i] = static_cast<std::size_t>(c % n);
      c /= n;
    }
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) ok = above(nonextremal[i], psi[i]);
    // images of same-region points keep the linear order
    for (std::size_t a = 0; a < m && ok; ++a) {
      for (std::size_t b = 0; b < m && ok; ++b) {
        const std::size_t p = nonextremal[a];
        const std::size_t q = nonextremal[b];
        if (label[p] >= 0 && label[p] == label[q] && rank[p] < rank[q]) {
          ok = rank[psi[a]] <= rank[psi[b]];
        }
      }
    }
    if (!ok) continue;
    std::map<std::size_t, std::vector<std::size_t>> fibers;
    for (std::size_t i = 0; i < m; ++i) fibers[psi[i]].push_back(nonextremal[i]);
    std::uint64_t product = 1;
    for (auto& [t, members] : fibers) {
      std::sort(members.begin(), members.end());
      std::uint64_t orders = 0;
      do {
        // fiber order of same-region members follows the linear order
        bool good = true;
        for (std::size_t x = 0; x < members.size() && good; ++x) {
          for (std::size_t y = x + 1; y < members.size() && good; ++y) {
            const std::size_t p = members[x];
            const std::size_t q = members[y];
            if (label[p] >= 0 && label[p] == label[q]) good = rank[p] < rank[q];
          }
        }
        orders += good ? 1 : 0;
      } while (std::next_permutation(members.begin(), members.end()));
      product *= orders;
    }
    total += product;
  }
  return total;
}

// --- universe census ---------------------------------------------------------

struct Census {
  std::uint64_t inputs = 0;
  std::uint64_t outputs = 0;
  std::uint64_t witness_lists = 0;
  std::uint64_t v_max = 0;
};

/// Gift wrapping over the given vertex positions.
inline std::vector<std::size_t> wrap(std::span<const Point> pts, const std::set<std::size_t>& vertices) {
  std::vector<std::size_t> out;
  if (vertices.empty()) return out;
  std::size_t cur = *vertices.begin();
  for (std::size_t v : vertices) {
    if (pts[v].x < pts[cur].x) cur = v;
  }
  const std::size_t start = cur;
  do {
    out.push_back(cur);
    std::size_t next = cur;
    for (std::size_t v : vertices) {
      if (v == cur) continue;
      bool all_left = true;
      for (std::size_t w : vertices) {
        if (w != cur && w != v && presort::cross(pts[cur], pts[v], pts[w]) < 0) all_left = false;
      }
      if (all_left) next = v;
    }
    cur = next;
  } while (cur != start && out.size() <= vertices.size());
  return out;
}

/// Every ordering of `pts`; witness lists as position lists, hull
/// triangles as increasing position triples.
inline Census census(const std::vector<Point>& pts, const presort::RegionSet& regions, bool hull) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  // front lists by increasing x, hull lists counterclockwise from the
  // leftmost vertex
  std::set<std::vector<std::size_t>> outputs;
  std::map<std::vector<std::int64_t>, std::uint64_t> lists;
  Census out;
  do {
    std::vector<Point> input;
    for (std::size_t id : perm) input.push_back(pts[id]);
    if (!oracle::respects(input, regions)) continue;
    ++out.inputs;
    const std::set<std::size_t> extremal = hull ? hull_vertex_set(input) : maximal_set(input);
    std::vector<std::size_t> listed(extremal.begin(), extremal.end());
    if (!hull) {
      std::sort(listed.begin(), listed.end(),
                [&](std::size_t a, std::size_t b) { return input[a].x < input[b].x; });
    } else {
      listed = wrap(input, extremal);
    }
    outputs.insert(listed);
    std::vector<std::vector<std::vector<std::int64_t>>> options(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (extremal.contains(i)) {
        options[i].push_back(std::vector<std::int64_t>(hull ? 3 : 1, -1));
        continue;
      }
      for (std::size_t a = 0; a < n; ++a) {
        if (a == i) continue;
        if (!hull) {
          if (input[a].x >= input[i].x && input[a].y >= input[i].y) {
            options[i].push_back({static_cast<std::int64_t>(a)});
          }
          continue;
        }
        for (std::size_t b = a + 1; b < n; ++b) {
          for (std::size_t c = b + 1; c < n; ++c) {
            if (b == i || c == i) continue;
            if (inside(input[i], input[a], input[b], input[c])) {
              options[i].push_back({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                                    static_cast<std::int64_t>(c)});
            }
          }
        }
      }
    }
    std::vector<std::size_t> choice(n, 0);
    while (true) {
      std::vector<std::int64_t> key;
      for (std::size_t i = 0; i < n; ++i) {
        key.insert(key.end(), options[i][choice[i]].begin(), options[i][choice[i]].end());
      }
      ++lists[key];
      std::size_t i = 0;
      while (i < n && ++choice[i] == options[i].size()) choice[i++] = 0;
      if (i == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.outputs = outputs.size();
  out.witness_lists = lists.size();
  for (const auto& [key, count] : lists) out.v_max = std::max(out.v_max, count);
  return out;
}

}  // namespace oracle
