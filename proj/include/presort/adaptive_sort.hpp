#pragma once

// Truncated quicksort and the presortedness entropies it is measured
// against: quicksort entropy over respectful rank partitions, TimSort
// entropy over monotone runs, and multiset entropy over equal-value groups.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "presort/core.hpp"

namespace presort {

/// Positive part sizes (s_1, ..., s_k) of a universe.
using SizeVector = std::vector<std::size_t>;

/// log2(n! / prod s_i!) where n = sum of sizes. Throws InputError on a zero
/// part or when `n` does not match the sum.
double universe_lower_bound(std::span<const std::size_t> sizes, std::size_t n);
double universe_lower_bound(std::span<const std::size_t> sizes);

/// sum (s_i / n) log2(n / s_i).
double size_entropy(std::span<const std::size_t> sizes);

enum class EntropyKind { kQuicksort, kTimsort, kMultiset };

std::string_view to_string(EntropyKind kind);

/// One part of an optimal partition. For quicksort entropy [first, last]
/// is a rank interval (1-based, inclusive); for TimSort entropy it is a
/// position interval (0-based, inclusive); for multiset entropy it is the
/// single rank of the group. `size` counts input elements in the part.
struct EntropyPart {
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t size = 0;
};

struct EntropyReport {
  EntropyKind kind = EntropyKind::kQuicksort;
  double value_bits = 0.0;
  std::vector<EntropyPart> partition;
  /// universe_lower_bound of the partition's sizes.
  double lower_bound_bits = 0.0;

  [[nodiscard]] SizeVector sizes() const;
};

/// Stable sort that returns early on non-decreasing or non-increasing
/// sublists and otherwise splits three ways around the exact median.
/// Returns input positions in stable sorted order.
std::vector<std::size_t> truncated_quicksort_positions(std::span<const std::int64_t> values,
                                                       CostMeter& meter);

/// Sorted copy of `values`; see truncated_quicksort_positions.
Scalars truncated_quicksort(std::span<const std::int64_t> values, CostMeter& meter);

EntropyReport quicksort_entropy(std::span<const std::int64_t> values);
EntropyReport timsort_entropy(std::span<const std::int64_t> values);
EntropyReport multiset_entropy(std::span<const std::int64_t> values);
EntropyReport entropy(std::span<const std::int64_t> values, EntropyKind kind);

}  // namespace presort
