#pragma once

// Universe (P, R) machinery at desk scale: the compass-compatible linear
// order, region refinement along the quadrant tree, exhaustive enumeration
// of respecting inputs and witness lists, ordered normalized downdrafts,
// the map Phi, and exact checks of the counting bounds.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "presort/core.hpp"
#include "presort/hull.hpp"
#include "presort/pareto.hpp"
#include "presort/regions.hpp"

namespace presort {

/// Thrown when an exhaustive enumeration would exceed its configured size.
class LimitError : public InputError {
 public:
  using InputError::InputError;
};

enum class Problem { kPareto, kHull };

std::string_view to_string(Problem problem);
Problem parse_problem(std::string_view text);

struct EnumerationLimits {
  std::size_t max_points = 8;
  std::size_t max_points_phi = 6;
  /// Cap on (input, witness list) pairs and on downdraft candidates.
  std::uint64_t budget = 20'000'000;
};

/// Region membership as one label per point (-1 for none). Only regions
/// holding at least one point receive a label.
struct RegionLabels {
  std::vector<int> label;
  std::size_t count = 0;
  /// Index in the source region set of each label.
  std::vector<std::size_t> region_index;
  /// Sizes |r ∩ P| per label.
  [[nodiscard]] std::vector<std::size_t> sizes() const;
};

RegionLabels label_points(std::span<const Point> points, const RegionSet& regions);

struct LinearOrder {
  std::vector<std::size_t> sequence;
  std::vector<std::size_t> rank;

  [[nodiscard]] bool less(std::size_t p, std::size_t q) const { return rank[p] < rank[q]; }
};

/// Topological order of the domination / compass digraph, smallest index
/// first among ready vertices. Throws InvariantViolation on a cycle.
/// `compass` holds one order per label.
LinearOrder linear_order_L(std::span<const Point> points, const RegionLabels& labels,
                           const CompassFunction& compass);
/// Same, with one order per region of `regions`.
LinearOrder linear_order_L(std::span<const Point> points, const RegionSet& regions,
                           const CompassFunction& compass);

/// Splits every rectangle along the quadrant tree so that each piece meets
/// the population of one node. Pieces without points are dropped.
RegionSet refine_regions(std::span<const Point> points, const RegionSet& regions,
                         const QuadrantTree& tree);

/// Everything the downdraft counts depend on for one universe.
struct OndContext {
  Problem problem = Problem::kPareto;
  RegionLabels labels;
  /// Hull only: the truncated quadrangle tree.
  QuadrangleTree tree;
};

/// Context over the regions of R.
OndContext ond_context(std::span<const Point> points, const RegionSet& regions, Problem problem);
/// Context over the refined region set R': rectangle pieces from
/// refine_regions for the Pareto front, (node, region) groups of Q(P, R)
/// for the hull.
OndContext refined_ond_context(std::span<const Point> points, const RegionSet& regions,
                               Problem problem);

struct OndCount {
  std::uint64_t max = 0;
  CompassFunction argmax;
  /// One entry per compass function, in lexicographic order of the
  /// assignment (label 0 varies slowest).
  std::vector<std::uint64_t> per_compass;
};

OndCount enumerate_ond(std::span<const Point> points, const OndContext& context,
                       const EnumerationLimits& limits = {});

/// Image of one input under Phi, plus a diagnostic on whether psi is an
/// ordered normalized downdraft.
struct PhiImage {
  CompassFunction compass;
  /// psi[p] for non-extremal p, -1 elsewhere.
  std::vector<int> psi;
  /// Rank of p inside its fiber.
  std::vector<int> fiber_rank;
  std::vector<std::size_t> output_list;
  /// Hull only: chosen corner per position, -1 for hull points.
  std::vector<std::int64_t> corners;
  bool is_downdraft = true;
  bool is_normalized = true;

  [[nodiscard]] std::string key() const;
};

/// `perm` places the points: I[i] = points[perm[i]]. I must respect the
/// context's regions and W must be a witness list for I.
PhiImage phi_map(std::span<const Point> points, std::span<const std::size_t> perm,
                 std::span<const std::int64_t> witnesses, const OndContext& context);
PhiImage phi_map(std::span<const Point> points, std::span<const std::size_t> perm,
                 std::span<const HullTriple> witnesses, const OndContext& context);

struct PhiCheck {
  bool checked = false;
  bool injective = true;
  std::uint64_t witness_lists = 0;
  std::uint64_t images = 0;
  std::uint64_t outside_ond = 0;
};

struct UniverseCensus {
  Problem problem = Problem::kPareto;
  std::size_t n = 0;
  std::size_t regions_used = 0;
  std::vector<std::size_t> region_sizes;
  std::uint64_t inputs_count = 0;
  /// Distinct front or hull lists.
  std::uint64_t outputs_count = 0;
  std::uint64_t witness_lists = 0;
  std::uint64_t v_max = 0;
  std::uint64_t compass_count = 0;
  std::uint64_t ond_max = 0;
  std::vector<std::uint64_t> ond_per_compass;
  std::size_t refined_regions = 0;
  std::vector<std::size_t> refined_sizes;
  std::uint64_t ond_max_refined = 0;
  /// Sum of depth(u(p)) in the truncated tree over R'.
  std::uint64_t depth_sum = 0;
  PhiCheck phi;
};

/// Enumerates all n! orderings of P. Throws LimitError beyond the limits.
UniverseCensus enumerate_universe(std::span<const Point> points, const RegionSet& regions,
                                  Problem problem, bool check_phi = false,
                                  const EnumerationLimits& limits = {});

struct BoundCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  double slack_bits = 0.0;
  bool holds = false;
};

struct BoundsReport {
  std::vector<BoundCheck> checks;
  [[nodiscard]] bool all_hold() const;
};

/// Exact big-integer checks of the witness-count bound, the downdraft bound
/// over the refined regions, and inputs >= n! / prod |r ∩ P|!.
BoundsReport check_counting_bounds(const UniverseCensus& census);

}  // namespace presort
