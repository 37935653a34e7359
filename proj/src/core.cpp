#include "presort/core.hpp"

#include <algorithm>
#include <numeric>

namespace presort {

void require_coordinate_range(std::span<const Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    if (p.x < kCoordinateMin || p.x > kCoordinateMax || p.y < kCoordinateMin ||
        p.y > kCoordinateMax) {
      throw InputError("point " + std::to_string(i) + " has a coordinate outside 32 bits");
    }
  }
}

bool strictly_inside_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  const Orientation abc = orientation(a, b, c);
  if (abc == Orientation::kCollinear) return false;
  return orientation(a, b, p) == abc && orientation(b, c, p) == abc &&
         orientation(c, a, p) == abc;
}

bool distinct_coordinates(std::span<const Point> points) {
  std::vector<std::int64_t> xs;
  std::vector<std::int64_t> ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const Point& p : points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end() &&
         std::adjacent_find(ys.begin(), ys.end()) == ys.end();
}

bool general_position_check_bruteforce(std::span<const Point> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].x == points[j].x || points[i].y == points[j].y) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orientation(points[i], points[j], points[k]) == Orientation::kCollinear) return false;
      }
    }
  }
  return true;
}

namespace {

// Direction from the pivot, folded into the half-plane dx > 0 (dx never
// vanishes once x-coordinates are distinct).
struct Direction {
  std::int64_t dx;
  std::int64_t dy;
};

}  // namespace

bool general_position_check(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n <= 48) return general_position_check_bruteforce(points);
  if (!distinct_coordinates(points)) return false;

  std::vector<Direction> dirs;
  dirs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    dirs.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::int64_t dx = points[j].x - points[i].x;
      std::int64_t dy = points[j].y - points[i].y;
      if (dx < 0) {
        dx = -dx;
        dy = -dy;
      }
      dirs.push_back({dx, dy});
    }
    // Slope order: a < b iff a.dy * b.dx < b.dy * a.dx (both dx > 0).
    auto less = [](const Direction& a, const Direction& b) {
      return static_cast<Int128>(a.dy) * b.dx < static_cast<Int128>(b.dy) * a.dx;
    };
    std::sort(dirs.begin(), dirs.end(), less);
    for (std::size_t k = 1; k < dirs.size(); ++k) {
      if (!less(dirs[k - 1], dirs[k])) return false;
    }
  }
  return true;
}

RankProfile rank_profile(std::span<const std::int64_t> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  RankProfile profile;
  profile.rank_of_position.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t pos = order[k];
    if (k == 0 || values[order[k - 1]] != values[pos]) profile.positions_of_rank.emplace_back();
    profile.positions_of_rank.back().push_back(pos);
    profile.rank_of_position[pos] = profile.positions_of_rank.size();
  }
  return profile;
}

}  // namespace presort
