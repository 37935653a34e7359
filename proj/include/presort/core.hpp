#pragma once

// Exact planar primitives, instances, rank profiles and operation counting
// shared by the sorting, Pareto front and convex hull algorithms.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace presort {

__extension__ using Int128 = __int128;

/// Thrown for malformed or out-of-contract input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a geometric operation receives points that share a
/// coordinate or contain a collinear triple.
class GeneralPositionError : public InputError {
 public:
  using InputError::InputError;
};

/// Thrown when an internal invariant that a proof guarantees is observed
/// to fail (for example a cycle in the red/blue order graph).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::int64_t kCoordinateMin = INT32_MIN;
inline constexpr std::int64_t kCoordinateMax = INT32_MAX;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// The input list I: points in the order they were presented.
using Instance = std::vector<Point>;
using Scalars = std::vector<std::int64_t>;

/// Throws InputError unless every coordinate fits in 32 signed bits.
void require_coordinate_range(std::span<const Point> points);

enum class Orientation { kClockwise = -1, kCollinear = 0, kCounterClockwise = 1 };

/// Exact determinant (b - a) x (c - a) in 128-bit arithmetic.
inline Int128 cross(const Point& a, const Point& b, const Point& c) {
  const Int128 bx = b.x - a.x;
  const Int128 by = b.y - a.y;
  const Int128 cx = c.x - a.x;
  const Int128 cy = c.y - a.y;
  return bx * cy - by * cx;
}

inline Orientation orientation(const Point& a, const Point& b, const Point& c) {
  const Int128 d = cross(a, b, c);
  if (d > 0) return Orientation::kCounterClockwise;
  if (d < 0) return Orientation::kClockwise;
  return Orientation::kCollinear;
}

/// p dominates q iff p.x >= q.x and p.y >= q.y (reflexive).
inline bool dominates(const Point& p, const Point& q) { return p.x >= q.x && p.y >= q.y; }

/// True iff p lies strictly inside triangle (a, b, c), in either winding.
bool strictly_inside_triangle(const Point& p, const Point& a, const Point& b, const Point& c);

/// Primitive operation counters for one algorithm invocation.
struct CostMeter {
  std::uint64_t comparisons = 0;
  std::uint64_t orientation_tests = 0;
  std::uint64_t elements_touched = 0;

  [[nodiscard]] std::uint64_t total() const {
    return comparisons + orientation_tests + elements_touched;
  }

  CostMeter& operator+=(const CostMeter& other) {
    comparisons += other.comparisons;
    orientation_tests += other.orientation_tests;
    elements_touched += other.elements_touched;
    return *this;
  }
};

/// Orientation test that is charged to a meter.
inline Orientation orientation(const Point& a, const Point& b, const Point& c, CostMeter& meter) {
  ++meter.orientation_tests;
  return orientation(a, b, c);
}

/// Outcome of an output verifier: a short machine-readable reason code and
/// the offending position when the check fails.
struct Verdict {
  bool ok = true;
  std::string reason;
  std::int64_t index = -1;

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string reason, std::int64_t index = -1) {
    return {false, std::move(reason), index};
  }
};

/// True iff no two points share an x- or y-coordinate. O(n log n).
bool distinct_coordinates(std::span<const Point> points);

/// True iff distinct_coordinates holds and no three points are collinear.
/// Uses the cubic scan for small inputs and an O(n^2 log n) direction sort
/// otherwise.
bool general_position_check(std::span<const Point> points);

/// Cubic reference used by tests and for tiny inputs.
bool general_position_check_bruteforce(std::span<const Point> points);

/// Ranks with ties collapsed: equal values share one rank; ranks are
/// contiguous and start at 1.
struct RankProfile {
  std::vector<std::size_t> rank_of_position;
  /// positions_of_rank[r - 1] lists the positions holding rank r, ascending.
  std::vector<std::vector<std::size_t>> positions_of_rank;

  [[nodiscard]] std::size_t distinct_ranks() const { return positions_of_rank.size(); }
};

RankProfile rank_profile(std::span<const std::int64_t> values);

}  // namespace presort
