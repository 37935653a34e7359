#include "presort/regions.hpp"

#include <algorithm>
#include <string>

namespace presort {

std::string_view to_string(AxisOrder order) {
  switch (order) {
    case AxisOrder::kIncreasingX: return "inc-x";
    case AxisOrder::kDecreasingX: return "dec-x";
    case AxisOrder::kIncreasingY: return "inc-y";
    case AxisOrder::kDecreasingY: return "dec-y";
  }
  return "?";
}

std::optional<AxisOrder> parse_axis_order(std::string_view text) {
  for (AxisOrder order : kAxisOrders) {
    if (to_string(order) == text) return order;
  }
  return std::nullopt;
}

bool is_sorted_by(std::span<const Point> points, std::span<const std::size_t> ids,
                  AxisOrder order, CostMeter& meter) {
  for (std::size_t k = 1; k < ids.size(); ++k) {
    ++meter.comparisons;
    if (!precedes(order, points[ids[k - 1]], points[ids[k]])) return false;
  }
  return true;
}

std::optional<AxisOrder> first_sorted_order(std::span<const Point> points,
                                            std::span<const std::size_t> ids, CostMeter& meter) {
  for (AxisOrder order : kAxisOrders) {
    if (is_sorted_by(points, ids, order, meter)) return order;
  }
  return std::nullopt;
}

std::optional<AxisOrder> first_sorted_order(std::span<const Point> points,
                                            std::span<const std::size_t> ids) {
  CostMeter scratch;
  return first_sorted_order(points, ids, scratch);
}

bool Triangle::contains(const Point& p) const {
  const Orientation abc = orientation(a, b, c);
  const auto on_side = [abc](Orientation o) { return o == abc || o == Orientation::kCollinear; };
  return on_side(orientation(a, b, p)) && on_side(orientation(b, c, p)) &&
         on_side(orientation(c, a, p));
}

namespace {

bool on_segment(const Point& p, const Point& q, const Point& r) {
  return std::min(p.x, r.x) <= q.x && q.x <= std::max(p.x, r.x) && std::min(p.y, r.y) <= q.y &&
         q.y <= std::max(p.y, r.y);
}

// Closed segments pq and rs share a point.
bool segments_intersect(const Point& p, const Point& q, const Point& r, const Point& s) {
  const Orientation o1 = orientation(p, q, r);
  const Orientation o2 = orientation(p, q, s);
  const Orientation o3 = orientation(r, s, p);
  const Orientation o4 = orientation(r, s, q);
  if (o1 != o2 && o3 != o4 && o1 != Orientation::kCollinear && o2 != Orientation::kCollinear &&
      o3 != Orientation::kCollinear && o4 != Orientation::kCollinear) {
    return true;
  }
  if (o1 == Orientation::kCollinear && on_segment(p, r, q)) return true;
  if (o2 == Orientation::kCollinear && on_segment(p, s, q)) return true;
  if (o3 == Orientation::kCollinear && on_segment(r, p, s)) return true;
  if (o4 == Orientation::kCollinear && on_segment(r, q, s)) return true;
  return false;
}

}  // namespace

bool Triangle::intersects(const Triangle& o) const {
  const std::array<Point, 3> mine = {a, b, c};
  const std::array<Point, 3> theirs = {o.a, o.b, o.c};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (segments_intersect(mine[i], mine[(i + 1) % 3], theirs[j], theirs[(j + 1) % 3])) {
        return true;
      }
    }
  }
  return contains(o.a) || o.contains(a);
}

RegionSet RegionSet::rectangles(std::vector<Rectangle> rects) {
  RegionSet set;
  set.kind_ = RegionKind::kRectangles;
  set.rects_ = std::move(rects);
  return set;
}

RegionSet RegionSet::triangles(std::vector<Triangle> tris) {
  RegionSet set;
  set.kind_ = RegionKind::kTriangles;
  set.tris_ = std::move(tris);
  return set;
}

bool RegionSet::contains(std::size_t region, const Point& p) const {
  return kind_ == RegionKind::kRectangles ? rects_[region].contains(p) : tris_[region].contains(p);
}

void RegionSet::validate() const {
  if (kind_ == RegionKind::kRectangles) {
    for (std::size_t i = 0; i < rects_.size(); ++i) {
      if (rects_[i].empty()) throw InputError("rectangle " + std::to_string(i) + " is empty");
      for (std::size_t j = i + 1; j < rects_.size(); ++j) {
        if (rects_[i].intersects(rects_[j])) {
          throw InputError("regions " + std::to_string(i) + " and " + std::to_string(j) +
                           " overlap");
        }
      }
    }
    return;
  }
  for (std::size_t i = 0; i < tris_.size(); ++i) {
    const Triangle& t = tris_[i];
    if (orientation(t.a, t.b, t.c) == Orientation::kCollinear) {
      throw InputError("triangle " + std::to_string(i) + " is degenerate");
    }
    for (std::size_t j = i + 1; j < tris_.size(); ++j) {
      if (t.intersects(tris_[j])) {
        throw InputError("regions " + std::to_string(i) + " and " + std::to_string(j) +
                         " overlap");
      }
    }
  }
}

std::vector<int> RegionSet::locate(std::span<const Point> points) const {
  std::vector<int> where(points.size(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t r = 0; r < size(); ++r) {
      if (contains(r, points[i])) {
        where[i] = static_cast<int>(r);
        break;
      }
    }
  }
  return where;
}

RegionSet RegionSet::without_empty(std::span<const Point> points) const {
  RegionSet kept;
  kept.kind_ = kind_;
  for (std::size_t r = 0; r < size(); ++r) {
    bool used = false;
    for (const Point& p : points) {
      if (contains(r, p)) {
        used = true;
        break;
      }
    }
    if (!used) continue;
    if (kind_ == RegionKind::kRectangles) {
      kept.rects_.push_back(rects_[r]);
    } else {
      kept.tris_.push_back(tris_[r]);
    }
  }
  return kept;
}

std::optional<std::size_t> RegionSet::common_region(std::span<const Point> points,
                                                    std::span<const std::size_t> ids) const {
  if (ids.empty()) return std::nullopt;
  for (std::size_t r = 0; r < size(); ++r) {
    if (!contains(r, points[ids.front()])) continue;
    for (std::size_t id : ids) {
      if (!contains(r, points[id])) return std::nullopt;
    }
    return r;
  }
  return std::nullopt;
}

bool respects(std::span<const Point> input, const RegionSet& regions) {
  std::vector<std::size_t> members;
  for (std::size_t r = 0; r < regions.size(); ++r) {
    members.clear();
    for (std::size_t i = 0; i < input.size(); ++i) {
      if (regions.contains(r, input[i])) members.push_back(i);
    }
    if (!first_sorted_order(input, members)) return false;
  }
  return true;
}

}  // namespace presort
