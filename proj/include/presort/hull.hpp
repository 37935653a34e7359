#pragma once

// Planar convex hull by bridge finding with early termination on
// axis-sorted subproblems, triangle witnesses for interior points, the
// hull verifier, and the region-truncated quadrangle tree with its partial
// order and the region-aligning permutation rho.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "presort/core.hpp"
#include "presort/regions.hpp"

namespace presort {

using HullTriple = std::array<std::int64_t, 3>;
inline constexpr HullTriple kNoTriangle = {-1, -1, -1};

struct HullOutput {
  /// Hull vertices counterclockwise, starting at the lexicographically
  /// smallest point.
  std::vector<std::size_t> hull;
  /// Positions of a triangle strictly containing I[i], or kNoTriangle.
  std::vector<HullTriple> witnesses;
};

/// Throws GeneralPositionError on shared coordinates or collinear triples.
HullOutput convex_hull(std::span<const Point> input, CostMeter& meter);
HullOutput convex_hull(std::span<const Point> input);

/// O(n) check of a certified hull output.
Verdict verify_hull(std::span<const Point> input, std::span<const std::size_t> hull,
                    std::span<const HullTriple> witnesses);
inline Verdict verify_hull(std::span<const Point> input, const HullOutput& out) {
  return verify_hull(input, out.hull, out.witnesses);
}

struct Bridge {
  std::size_t left = 0;
  std::size_t right = 0;
};

/// Upper-hull edge of points[ids] crossing the vertical line x = m:
/// left.x <= m < right.x. Requires ids to hold a point on each side.
Bridge find_bridge(std::span<const Point> points, std::span<const std::size_t> ids,
                   std::int64_t m, CostMeter& meter);

struct QuadrangleNode {
  /// Upper or lower half of the hull.
  bool upper = true;
  /// Rooted edge (p_l, p_r).
  std::size_t edge_left = 0;
  std::size_t edge_right = 0;
  /// Hull edge (p_i, p_j) closing the quadrangle; absent for truncated leaves.
  std::optional<std::size_t> bridge_left;
  std::optional<std::size_t> bridge_right;
  std::vector<std::size_t> population;
  std::size_t depth = 0;
  int parent = -1;
  int left = -1;
  int right = -1;
  std::optional<std::size_t> region;

  [[nodiscard]] bool truncated() const { return !bridge_left.has_value(); }
};

/// Two rooted trees, one per hull half, both rooted at the edge between
/// the extreme-x points. Those two points belong to no node and precede
/// every other point.
struct QuadrangleTree {
  std::vector<QuadrangleNode> nodes;
  int upper_root = -1;
  int lower_root = -1;
  std::size_t leftmost = 0;
  std::size_t rightmost = 0;
  /// u(p), or -1 for the two extreme-x points.
  std::vector<int> node_of;
  /// Distance numerator of p from its node's rooted edge, inside the half.
  std::vector<Int128> depth_key;

  [[nodiscard]] std::size_t depth_of(std::size_t point) const {
    return node_of[point] < 0 ? 0 : nodes[static_cast<std::size_t>(node_of[point])].depth;
  }
  /// p precedes q in the tree order.
  [[nodiscard]] bool precedes(std::size_t p, std::size_t q) const;
  /// Sum over p of depth(u(p)).
  [[nodiscard]] std::uint64_t depth_cost() const;
};

QuadrangleTree build_quadrangle_tree(std::span<const Point> points, const RegionSet& regions);

struct QuadrangleOrder {
  /// rho[p]: image of point p under the permutation.
  std::vector<std::size_t> rho;
  std::vector<std::size_t> rho_inverse;
  /// Linear extension of the tree order before permuting: rank_tree[p].
  std::vector<std::size_t> rank_tree;
  /// Linear extension of the permuted order: rank[p], and points by rank.
  std::vector<std::size_t> rank;
  std::vector<std::size_t> sequence;

  /// p precedes q in the permuted partial order.
  [[nodiscard]] bool precedes(const QuadrangleTree& tree, std::size_t p, std::size_t q) const {
    return tree.precedes(rho_inverse[p], rho_inverse[q]);
  }
};

/// Matches, per (node, region) group, the tree-ordered points with the
/// compass-ordered points. `compass` holds one order per region.
QuadrangleOrder quadrangle_order(std::span<const Point> points, const RegionSet& regions,
                                 const QuadrangleTree& tree, const CompassFunction& compass);

/// Same, with regions given as a label per point (-1 for none) and one
/// order per label.
QuadrangleOrder quadrangle_order(std::span<const Point> points, std::span<const int> labels,
                                 const QuadrangleTree& tree, const CompassFunction& compass);

}  // namespace presort
