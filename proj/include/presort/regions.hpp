#pragma once

// Region sets (disjoint closed rectangles or triangles), the four axis
// orders a compass function can assign, and the respect predicate that
// defines a universe (P, R).

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "presort/core.hpp"

namespace presort {

enum class AxisOrder : std::uint8_t { kIncreasingX, kDecreasingX, kIncreasingY, kDecreasingY };

/// Fixed precedence used whenever several orders fit the same sequence.
inline constexpr std::array<AxisOrder, 4> kAxisOrders = {
    AxisOrder::kIncreasingX, AxisOrder::kDecreasingX, AxisOrder::kIncreasingY,
    AxisOrder::kDecreasingY};

std::string_view to_string(AxisOrder order);
std::optional<AxisOrder> parse_axis_order(std::string_view text);

inline bool sorts_by_x(AxisOrder order) {
  return order == AxisOrder::kIncreasingX || order == AxisOrder::kDecreasingX;
}

/// True iff a comes strictly before b in `order`.
inline bool precedes(AxisOrder order, const Point& a, const Point& b) {
  switch (order) {
    case AxisOrder::kIncreasingX: return a.x < b.x;
    case AxisOrder::kDecreasingX: return a.x > b.x;
    case AxisOrder::kIncreasingY: return a.y < b.y;
    case AxisOrder::kDecreasingY: return a.y > b.y;
  }
  return false;
}

/// True iff points[ids[0]], points[ids[1]], ... is strictly monotone in
/// `order`. Charges one comparison per adjacent pair examined.
bool is_sorted_by(std::span<const Point> points, std::span<const std::size_t> ids,
                  AxisOrder order, CostMeter& meter);

/// First order in kAxisOrders under which the subsequence is sorted.
std::optional<AxisOrder> first_sorted_order(std::span<const Point> points,
                                            std::span<const std::size_t> ids, CostMeter& meter);
std::optional<AxisOrder> first_sorted_order(std::span<const Point> points,
                                            std::span<const std::size_t> ids);

/// Closed axis-aligned rectangle [xmin, xmax] x [ymin, ymax].
struct Rectangle {
  std::int64_t xmin = 0;
  std::int64_t ymin = 0;
  std::int64_t xmax = 0;
  std::int64_t ymax = 0;

  [[nodiscard]] bool empty() const { return xmin > xmax || ymin > ymax; }
  [[nodiscard]] bool contains(const Point& p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
  [[nodiscard]] bool intersects(const Rectangle& o) const {
    return !empty() && !o.empty() && xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax &&
           o.ymin <= ymax;
  }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// Closed, non-degenerate triangle.
struct Triangle {
  Point a;
  Point b;
  Point c;

  [[nodiscard]] bool contains(const Point& p) const;
  [[nodiscard]] bool intersects(const Triangle& o) const;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

enum class RegionKind { kRectangles, kTriangles };

class RegionSet {
 public:
  RegionSet() = default;
  static RegionSet rectangles(std::vector<Rectangle> rects);
  static RegionSet triangles(std::vector<Triangle> tris);

  [[nodiscard]] RegionKind kind() const { return kind_; }
  [[nodiscard]] std::size_t size() const {
    return kind_ == RegionKind::kRectangles ? rects_.size() : tris_.size();
  }
  [[nodiscard]] bool empty() const { return size() == 0; }
  [[nodiscard]] const std::vector<Rectangle>& rects() const { return rects_; }
  [[nodiscard]] const std::vector<Triangle>& tris() const { return tris_; }

  [[nodiscard]] bool contains(std::size_t region, const Point& p) const;

  /// Throws InputError if two regions share a point or a triangle is
  /// degenerate.
  void validate() const;

  /// Region index containing each point, or -1.
  [[nodiscard]] std::vector<int> locate(std::span<const Point> points) const;

  /// Regions that hold at least one point, in original order.
  [[nodiscard]] RegionSet without_empty(std::span<const Point> points) const;

  /// True iff every listed point lies in one common region.
  [[nodiscard]] std::optional<std::size_t> common_region(std::span<const Point> points,
                                                         std::span<const std::size_t> ids) const;

 private:
  RegionKind kind_ = RegionKind::kRectangles;
  std::vector<Rectangle> rects_;
  std::vector<Triangle> tris_;
};

/// One axis order per region of a region set.
using CompassFunction = std::vector<AxisOrder>;

/// True iff, for every region, the points of the region appear in I in one
/// of the four axis orders.
bool respects(std::span<const Point> input, const RegionSet& regions);

}  // namespace presort
