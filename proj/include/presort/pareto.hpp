#pragma once

// Pareto front with early termination on axis-sorted sublists, the
// certified output model (front list plus witness list), its linear-time
// verifier, and the region-truncated quadrant tree.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "presort/core.hpp"
#include "presort/regions.hpp"

namespace presort {

inline constexpr std::int64_t kNoWitness = -1;

struct ParetoOutput {
  /// Positions of the maximal points, by increasing x.
  std::vector<std::size_t> front;
  /// witnesses[i] is a position whose point dominates I[i], or kNoWitness
  /// for front points.
  std::vector<std::int64_t> witnesses;
};

/// Throws GeneralPositionError if two points share a coordinate.
ParetoOutput pareto_front(std::span<const Point> input, CostMeter& meter);
ParetoOutput pareto_front(std::span<const Point> input);

/// O(n) check of a certified Pareto output.
Verdict verify_pareto(std::span<const Point> input, std::span<const std::size_t> front,
                      std::span<const std::int64_t> witnesses);
inline Verdict verify_pareto(std::span<const Point> input, const ParetoOutput& out) {
  return verify_pareto(input, out.front, out.witnesses);
}

struct QuadrantNode {
  /// Absent for truncated leaves.
  std::optional<std::size_t> representative;
  std::vector<std::size_t> population;
  /// Open lower bounds of the node's subproblem: x > x_above, y > y_above.
  std::optional<std::int64_t> x_above;
  std::optional<std::int64_t> y_above;
  std::size_t depth = 0;
  int parent = -1;
  /// Child over the points above the representative, and to its right.
  int left = -1;
  int right = -1;
  /// Region holding the whole subproblem, for truncated leaves.
  std::optional<std::size_t> region;

  [[nodiscard]] bool truncated() const { return !representative.has_value(); }
};

struct QuadrantTree {
  std::vector<QuadrantNode> nodes;  // nodes[0] is the root when P is nonempty
  /// node_of[p] = u(p).
  std::vector<std::size_t> node_of;

  [[nodiscard]] std::size_t depth_of(std::size_t point) const {
    return nodes[node_of[point]].depth;
  }
};

/// Recursion tree of the algorithm with the sortedness test replaced by
/// "all remaining points lie in one region". Depends only on (P, R).
QuadrantTree build_quadrant_tree(std::span<const Point> points, const RegionSet& regions);

/// Sum over p of depth(u(p)).
std::uint64_t depth_cost(const QuadrantTree& tree);

}  // namespace presort
