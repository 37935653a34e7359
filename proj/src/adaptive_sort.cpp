#include "presort/adaptive_sort.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "presort/select.hpp"

namespace presort {

namespace {

// Kahan-compensated long double sum of log2(t) weighted by `weight(t)`.
template <class Weight>
double weighted_log2_sum(std::size_t upto, Weight weight) {
  long double sum = 0.0L;
  long double carry = 0.0L;
  for (std::size_t t = 2; t <= upto; ++t) {
    const long double w = weight(t);
    if (w == 0.0L) continue;
    const long double term = w * std::log2(static_cast<long double>(t)) - carry;
    const long double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return static_cast<double>(sum);
}

}  // namespace

double universe_lower_bound(std::span<const std::size_t> sizes, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t s : sizes) {
    if (s == 0) throw InputError("universe part sizes must be positive");
    total += s;
  }
  if (total != n) {
    throw InputError("universe part sizes sum to " + std::to_string(total) + ", expected " +
                     std::to_string(n));
  }
  // parts_reaching[t] = number of parts with s_i >= t.
  std::vector<std::size_t> parts_reaching(n + 2, 0);
  for (std::size_t s : sizes) parts_reaching[s] += 1;
  for (std::size_t t = n; t-- > 1;) parts_reaching[t] += parts_reaching[t + 1];
  return weighted_log2_sum(n, [&](std::size_t t) {
    return 1.0L - static_cast<long double>(parts_reaching[t]);
  });
}

double universe_lower_bound(std::span<const std::size_t> sizes) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  return universe_lower_bound(sizes, n);
}

double size_entropy(std::span<const std::size_t> sizes) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (n == 0) return 0.0;
  double h = 0.0;
  for (std::size_t s : sizes) {
    if (s == 0) continue;
    const double frac = static_cast<double>(s) / static_cast<double>(n);
    h += frac * std::log2(1.0 / frac);
  }
  return h;
}

std::string_view to_string(EntropyKind kind) {
  switch (kind) {
    case EntropyKind::kQuicksort: return "quicksort";
    case EntropyKind::kTimsort: return "timsort";
    case EntropyKind::kMultiset: return "multiset";
  }
  return "?";
}

SizeVector EntropyReport::sizes() const {
  SizeVector out;
  out.reserve(partition.size());
  for (const EntropyPart& part : partition) out.push_back(part.size);
  return out;
}

namespace {

struct Item {
  std::int64_t value;
  std::size_t position;
};

void truncated_quicksort_rec(std::vector<Item> items, std::vector<std::size_t>& out,
                             CostMeter& meter) {
  if (items.empty()) return;
  meter.elements_touched += items.size();

  bool non_decreasing = true;
  bool non_increasing = true;
  for (std::size_t k = 1; k < items.size() && (non_decreasing || non_increasing); ++k) {
    ++meter.comparisons;
    const std::int64_t a = items[k - 1].value;
    const std::int64_t b = items[k].value;
    if (a > b) non_decreasing = false;
    if (a < b) non_increasing = false;
  }
  if (non_decreasing) {
    for (const Item& item : items) out.push_back(item.position);
    return;
  }
  if (non_increasing) {
    // Reverse the sequence of equal-value blocks, keeping each block in
    // input order so that the result stays stable.
    std::size_t end = items.size();
    while (end > 0) {
      std::size_t begin = end - 1;
      while (begin > 0 && items[begin - 1].value == items[end - 1].value) --begin;
      for (std::size_t k = begin; k < end; ++k) out.push_back(items[k].position);
      end = begin;
    }
    return;
  }

  std::vector<std::int64_t> values;
  values.reserve(items.size());
  for (const Item& item : items) values.push_back(item.value);
  const std::int64_t median =
      select_median(std::move(values), std::less<std::int64_t>{}, meter);

  std::vector<Item> lower;
  std::vector<Item> upper;
  std::vector<std::size_t> equal;
  for (const Item& item : items) {
    ++meter.comparisons;
    if (item.value < median) {
      lower.push_back(item);
    } else if (item.value > median) {
      upper.push_back(item);
    } else {
      equal.push_back(item.position);
    }
  }
  items.clear();
  items.shrink_to_fit();
  truncated_quicksort_rec(std::move(lower), out, meter);
  out.insert(out.end(), equal.begin(), equal.end());
  truncated_quicksort_rec(std::move(upper), out, meter);
}

// w[c] = (c / n) log2(n / c) for c in [0, n].
std::vector<double> part_weights(std::size_t n) {
  std::vector<double> w(n + 1, 0.0);
  for (std::size_t c = 1; c <= n; ++c) {
    const double frac = static_cast<double>(c) / static_cast<double>(n);
    w[c] = frac * std::log2(1.0 / frac);
  }
  return w;
}

// Minimum-weight partition of items 1..d into contiguous intervals [i, j]
// with i >= earliest[j]; interval weight is w[prefix[j] - prefix[i - 1]].
// Returns (value, intervals).
std::pair<double, std::vector<std::pair<std::size_t, std::size_t>>> interval_dp(
    const std::vector<std::size_t>& earliest, const std::vector<std::size_t>& prefix,
    const std::vector<double>& w) {
  const std::size_t d = earliest.size() - 1;
  std::vector<double> best(d + 1, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> choice(d + 1, 0);
  best[0] = 0.0;
  for (std::size_t j = 1; j <= d; ++j) {
    double b = std::numeric_limits<double>::infinity();
    std::size_t arg = j;
    const std::size_t pj = prefix[j];
    for (std::size_t i = earliest[j]; i <= j; ++i) {
      const double candidate = best[i - 1] + w[pj - prefix[i - 1]];
      if (candidate < b) {
        b = candidate;
        arg = i;
      }
    }
    best[j] = b;
    choice[j] = arg;
  }
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  for (std::size_t j = d; j > 0; j = choice[j] - 1) parts.emplace_back(choice[j], j);
  std::reverse(parts.begin(), parts.end());
  return {d == 0 ? 0.0 : best[d], std::move(parts)};
}

void finish(EntropyReport& report) {
  if (report.value_bits < 0.0) report.value_bits = 0.0;
  const SizeVector sizes = report.sizes();
  report.lower_bound_bits = sizes.empty() ? 0.0 : universe_lower_bound(sizes);
}

}  // namespace

std::vector<std::size_t> truncated_quicksort_positions(std::span<const std::int64_t> values,
                                                       CostMeter& meter) {
  std::vector<Item> items;
  items.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) items.push_back({values[i], i});
  std::vector<std::size_t> out;
  out.reserve(values.size());
  truncated_quicksort_rec(std::move(items), out, meter);
  return out;
}

Scalars truncated_quicksort(std::span<const std::int64_t> values, CostMeter& meter) {
  const std::vector<std::size_t> order = truncated_quicksort_positions(values, meter);
  Scalars sorted;
  sorted.reserve(order.size());
  for (std::size_t pos : order) sorted.push_back(values[pos]);
  return sorted;
}

EntropyReport quicksort_entropy(std::span<const std::int64_t> values) {
  EntropyReport report;
  report.kind = EntropyKind::kQuicksort;
  const std::size_t n = values.size();
  if (n == 0) return report;

  const RankProfile profile = rank_profile(values);
  const std::size_t d = profile.distinct_ranks();
  std::vector<std::size_t> min_pos(d + 1);
  std::vector<std::size_t> max_pos(d + 1);
  std::vector<std::size_t> prefix(d + 1, 0);
  for (std::size_t r = 1; r <= d; ++r) {
    const auto& positions = profile.positions_of_rank[r - 1];
    min_pos[r] = positions.front();
    max_pos[r] = positions.back();
    prefix[r] = prefix[r - 1] + positions.size();
  }

  // Rank interval [i, j] is feasible iff every consecutive rank pair in it
  // is ordered the same way by position.
  std::vector<std::size_t> earliest(d + 1, 1);
  std::size_t run_inc = 1;
  std::size_t run_dec = 1;
  for (std::size_t j = 1; j <= d; ++j) {
    if (j > 1) {
      if (!(max_pos[j - 1] < min_pos[j])) run_inc = j;
      if (!(min_pos[j - 1] > max_pos[j])) run_dec = j;
    }
    earliest[j] = std::min(run_inc, run_dec);
  }

  auto [value, parts] = interval_dp(earliest, prefix, part_weights(n));
  report.value_bits = value;
  for (const auto& [first, last] : parts) {
    report.partition.push_back({first, last, prefix[last] - prefix[first - 1]});
  }
  finish(report);
  return report;
}

EntropyReport timsort_entropy(std::span<const std::int64_t> values) {
  EntropyReport report;
  report.kind = EntropyKind::kTimsort;
  const std::size_t n = values.size();
  if (n == 0) return report;

  // 1-based positions for the DP; a run [i, j] is feasible iff it is
  // non-decreasing or non-increasing.
  std::vector<std::size_t> earliest(n + 1, 1);
  std::vector<std::size_t> prefix(n + 1, 0);
  std::size_t run_inc = 1;
  std::size_t run_dec = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    prefix[j] = j;
    if (j > 1) {
      if (values[j - 2] > values[j - 1]) run_inc = j;
      if (values[j - 2] < values[j - 1]) run_dec = j;
    }
    earliest[j] = std::min(run_inc, run_dec);
  }

  auto [value, parts] = interval_dp(earliest, prefix, part_weights(n));
  report.value_bits = value;
  for (const auto& [first, last] : parts) {
    report.partition.push_back({first - 1, last - 1, last - first + 1});
  }
  finish(report);
  return report;
}

EntropyReport multiset_entropy(std::span<const std::int64_t> values) {
  EntropyReport report;
  report.kind = EntropyKind::kMultiset;
  if (values.empty()) return report;
  const RankProfile profile = rank_profile(values);
  SizeVector sizes;
  for (std::size_t r = 1; r <= profile.distinct_ranks(); ++r) {
    const std::size_t size = profile.positions_of_rank[r - 1].size();
    report.partition.push_back({r, r, size});
    sizes.push_back(size);
  }
  report.value_bits = size_entropy(sizes);
  finish(report);
  return report;
}

EntropyReport entropy(std::span<const std::int64_t> values, EntropyKind kind) {
  switch (kind) {
    case EntropyKind::kQuicksort: return quicksort_entropy(values);
    case EntropyKind::kTimsort: return timsort_entropy(values);
    case EntropyKind::kMultiset: return multiset_entropy(values);
  }
  throw InputError("unknown entropy kind");
}

}  // namespace presort
