#pragma once

// Deterministic linear-time selection (median of medians, groups of five).
// Every call of the ordering predicate is charged to the meter.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "presort/core.hpp"

namespace presort {

namespace detail {

template <class T, class Less>
void insertion_sort_counted(std::vector<T>& items, std::size_t first, std::size_t last,
                            Less& less, CostMeter& meter) {
  for (std::size_t i = first + 1; i < last; ++i) {
    for (std::size_t j = i; j > first; --j) {
      ++meter.comparisons;
      if (!less(items[j], items[j - 1])) break;
      std::swap(items[j], items[j - 1]);
    }
  }
}

}  // namespace detail

/// Returns the element of rank k (0-based) of `items` under `less`.
/// Requires k < items.size().
template <class T, class Less>
T select_kth(std::vector<T> items, std::size_t k, Less less, CostMeter& meter) {
  while (true) {
    const std::size_t n = items.size();
    if (n <= 10) {
      detail::insertion_sort_counted(items, 0, n, less, meter);
      return items[k];
    }

    std::vector<T> medians;
    medians.reserve(n / 5 + 1);
    for (std::size_t first = 0; first < n; first += 5) {
      const std::size_t last = std::min(first + 5, n);
      detail::insertion_sort_counted(items, first, last, less, meter);
      medians.push_back(items[first + (last - first - 1) / 2]);
    }
    const std::size_t mid = (medians.size() - 1) / 2;
    const T pivot = select_kth(std::move(medians), mid, less, meter);

    std::vector<T> lower;
    std::vector<T> upper;
    std::size_t equal = 0;
    for (T& item : items) {
      meter.comparisons += 1;
      if (less(item, pivot)) {
        lower.push_back(std::move(item));
        continue;
      }
      meter.comparisons += 1;
      if (less(pivot, item)) {
        upper.push_back(std::move(item));
      } else {
        ++equal;
      }
    }

    if (k < lower.size()) {
      items = std::move(lower);
    } else if (k < lower.size() + equal) {
      return pivot;
    } else {
      k -= lower.size() + equal;
      items = std::move(upper);
    }
  }
}

/// Lower median: rank (n - 1) / 2.
template <class T, class Less>
T select_median(std::vector<T> items, Less less, CostMeter& meter) {
  const std::size_t k = (items.size() - 1) / 2;
  return select_kth(std::move(items), k, std::move(less), meter);
}

}  // namespace presort
