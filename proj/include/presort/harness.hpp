#pragma once

// Instance generators, the verified benchmark runner, cost-vs-entropy
// scaling tables, and CSV / JSON record emission.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "presort/adaptive_sort.hpp"
#include "presort/core.hpp"
#include "presort/regions.hpp"
#include "presort/universes.hpp"

namespace presort::harness {

enum class Family {
  kSorted,
  kReversed,
  kInterleavedHalves,
  kEvensThenOdds,
  kRuns,
  kGridRandom,
  kCircleArcClusters,
  kRegionRespecting,
};

std::string_view to_string(Family family);
Family parse_family(std::string_view text);
bool has_scalar_form(Family family);
bool has_point_form(Family family);
/// Runs, arcs, and region families take the parameter k.
bool uses_k(Family family);

enum class Algorithm { kSort, kPareto, kHull };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view text);

struct GeneratorSpec {
  Family family = Family::kSorted;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  /// Runs, arcs, or regions, depending on the family.
  std::size_t k = 1;
  /// Region shape for point families.
  Problem problem = Problem::kPareto;

  /// "family" or "family-k" for parameterized families.
  [[nodiscard]] std::string label() const;
};

struct ScalarInstance {
  Scalars values;
  /// Sizes of the known respectful decomposition.
  SizeVector universe_sizes;
};

struct PointInstance {
  Instance points;
  RegionSet regions;
  CompassFunction compass;
  SizeVector universe_sizes;
};

/// Throws InputError for families without a scalar form or n == 0.
ScalarInstance generate_scalars(const GeneratorSpec& spec);
/// Throws InputError for families without a point form, bad parameters, or
/// an exhausted retry budget.
PointInstance generate_points(const GeneratorSpec& spec);

struct BenchOptions {
  bool verify = true;
  /// Exact quicksort entropy is O(n^2); skipped above this size.
  std::size_t exact_entropy_limit = std::size_t{1} << 14;
  /// Instances run concurrently on this many threads; record order is unchanged.
  std::size_t threads = 1;
};

struct BenchRecord {
  std::string generator;
  Algorithm algorithm = Algorithm::kSort;
  std::size_t n = 0;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  /// Σ (s_i/n) log2(n/s_i) over the generator's decomposition.
  double bound_bits = 0.0;
  /// Quicksort entropy of the instance (sort only, when computed).
  std::optional<double> entropy_bits;
  double lower_bound_bits = 0.0;
  CostMeter meter;
  std::uint64_t wall_ns = 0;

  /// total / (n (1 + bound_bits)).
  [[nodiscard]] double cost_constant() const;
};

/// Carries the offending instance serialized in the point / scalar format.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(const std::string& what, std::string instance)
      : std::runtime_error(what), instance_(std::move(instance)) {}
  [[nodiscard]] const std::string& instance() const { return instance_; }

 private:
  std::string instance_;
};

BenchRecord run_one(Algorithm algorithm, const GeneratorSpec& spec, const BenchOptions& options = {});

/// Every spec is run `repeats` times with seeds seed, seed+1, ...
std::vector<BenchRecord> bench(Algorithm algorithm, std::span<const GeneratorSpec> specs,
                               std::size_t repeats, const BenchOptions& options = {});

struct ScalingRow {
  Algorithm algorithm = Algorithm::kSort;
  std::string generator;
  std::size_t records = 0;
  double min_c = 0.0;
  double max_c = 0.0;
  /// Totals that shrink while n grows.
  bool anomaly = false;
};

struct ScalingReport {
  std::vector<ScalingRow> rows;
  double global_c = 0.0;
};

ScalingReport scaling_report(std::span<const BenchRecord> records);

void write_csv(std::ostream& out, std::span<const BenchRecord> records);
std::vector<BenchRecord> read_csv(std::istream& in);
std::string to_json(std::span<const BenchRecord> records);

void write_csv(std::ostream& out, const ScalingReport& report);
std::string to_json(const ScalingReport& report);

}  // namespace presort::harness
