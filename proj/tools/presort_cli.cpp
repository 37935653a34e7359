// Command-line front end: adaptive sorting, certified Pareto fronts and
// hulls, universe censuses, generators, and benchmarks.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "presort/adaptive_sort.hpp"
#include "presort/harness.hpp"
#include "presort/hull.hpp"
#include "presort/io.hpp"
#include "presort/pareto.hpp"
#include "presort/regions.hpp"
#include "presort/universes.hpp"

namespace {

using namespace presort;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInvalidInput = 2;

struct Globals {
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "csv";

  [[nodiscard]] bool as_json() const { return format == "json"; }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

json meter_json(const CostMeter& m) {
  return {{"comparisons", m.comparisons},
          {"orientation_tests", m.orientation_tests},
          {"elements_touched", m.elements_touched},
          {"total", m.total()}};
}

json parts_json(const EntropyReport& report) {
  json parts = json::array();
  for (const EntropyPart& p : report.partition) {
    parts.push_back({{"first", p.first}, {"last", p.last}, {"size", p.size}});
  }
  return parts;
}

json regions_json(const RegionSet& regions) {
  json out = json::array();
  if (regions.kind() == RegionKind::kRectangles) {
    for (const Rectangle& r : regions.rects()) out.push_back({r.xmin, r.ymin, r.xmax, r.ymax});
  } else {
    for (const Triangle& t : regions.tris()) {
      out.push_back({t.a.x, t.a.y, t.b.x, t.b.y, t.c.x, t.c.y});
    }
  }
  return out;
}

json compass_json(const CompassFunction& compass) {
  json out = json::array();
  for (AxisOrder o : compass) out.push_back(std::string(to_string(o)));
  return out;
}

template <typename T>
void write_lines(std::ostream& out, const std::vector<T>& values) {
  for (const T& v : values) out << v << '\n';
}

// --- sort / entropy --------------------------------------------------------

struct SortArgs {
  std::string input;
  bool count_ops = false;
  bool emit_partition = false;
};

int run_sort(const Globals& g, const SortArgs& a) {
  const Scalars values = io::read_scalars(a.input);
  CostMeter meter;
  const Scalars sorted = truncated_quicksort(values, meter);
  Output out(g.output);
  if (g.as_json()) {
    json j = {{"sorted", sorted}};
    if (a.count_ops) j["ops"] = meter_json(meter);
    if (a.emit_partition) {
      const EntropyReport h = quicksort_entropy(values);
      j["partition"] = parts_json(h);
      j["value_bits"] = h.value_bits;
    }
    out.stream() << j.dump() << '\n';
    return kOk;
  }
  io::write_scalars(out.stream(), sorted);
  if (a.count_ops) std::cerr << json{{"ops", meter_json(meter)}}.dump() << '\n';
  if (a.emit_partition) {
    const EntropyReport h = quicksort_entropy(values);
    std::cerr << json{{"value_bits", h.value_bits}, {"partition", parts_json(h)}}.dump() << '\n';
  }
  return kOk;
}

struct EntropyArgs {
  std::string input;
  std::string kind = "quicksort";
};

int run_entropy(const Globals& g, const EntropyArgs& a) {
  const Scalars values = io::read_scalars(a.input);
  EntropyKind kind = EntropyKind::kQuicksort;
  if (a.kind == "timsort") kind = EntropyKind::kTimsort;
  if (a.kind == "multiset") kind = EntropyKind::kMultiset;
  const EntropyReport report = entropy(values, kind);
  Output out(g.output);
  const std::string unit = kind == EntropyKind::kTimsort ? "position" : "rank";
  out.stream() << json{{"kind", std::string(to_string(kind))},
                       {"n", values.size()},
                       {"value_bits", report.value_bits},
                       {"lower_bound_bits", report.lower_bound_bits},
                       {"interval_unit", unit}}
                      .dump()
               << '\n';
  for (const json& part : parts_json(report)) out.stream() << part.dump() << '\n';
  return kOk;
}

// --- pareto / hull ---------------------------------------------------------

struct GeometryArgs {
  std::string input;
  std::string regions;
  bool emit_witnesses = false;
  bool verify = false;
  bool count_ops = false;
};

int finish_geometry(const Globals& g, const GeometryArgs& a, const std::string& list_name,
                    const std::vector<std::size_t>& list, const json& witnesses_json,
                    const std::function<void(std::ostream&)>& write_witnesses,
                    const std::optional<Verdict>& verdict, const CostMeter& meter,
                    const std::optional<json>& universe) {
  Output out(g.output);
  if (g.as_json()) {
    json j = {{list_name, list}};
    if (a.emit_witnesses) j["witnesses"] = witnesses_json;
    if (verdict) {
      j["verified"] = verdict->ok;
      if (!verdict->ok) j["reason"] = verdict->reason;
    }
    if (a.count_ops) j["ops"] = meter_json(meter);
    if (universe) j["universe"] = *universe;
    out.stream() << j.dump() << '\n';
  } else {
    out.stream() << "# " << list_name << '\n';
    write_lines(out.stream(), list);
    if (a.emit_witnesses) {
      out.stream() << "# witnesses\n";
      write_witnesses(out.stream());
    }
    if (a.count_ops) std::cerr << json{{"ops", meter_json(meter)}}.dump() << '\n';
    if (universe) std::cerr << json{{"universe", *universe}}.dump() << '\n';
  }
  if (verdict && !verdict->ok) {
    std::cerr << "verification failed: " << verdict->reason;
    if (verdict->index >= 0) std::cerr << " at " << verdict->index;
    std::cerr << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

json universe_json(std::span<const Point> points, const RegionSet& regions,
                   std::uint64_t depth_cost) {
  const RegionLabels labels = label_points(points, regions);
  SizeVector sizes = labels.sizes();
  std::size_t covered = 0;
  for (std::size_t s : sizes) covered += s;
  sizes.insert(sizes.end(), points.size() - covered, 1);
  return {{"respects", respects(points, regions)},
          {"regions_used", labels.count},
          {"depth_cost", depth_cost},
          {"universe_bound_bits", size_entropy(sizes)}};
}

int run_pareto(const Globals& g, const GeometryArgs& a) {
  const Instance points = io::read_points(a.input);
  CostMeter meter;
  const ParetoOutput out = pareto_front(points, meter);
  std::optional<Verdict> verdict;
  if (a.verify) verdict = verify_pareto(points, out.front, out.witnesses);
  std::optional<json> universe;
  if (!a.regions.empty()) {
    const RegionSet regions = io::read_rectangles(a.regions);
    universe = universe_json(points, regions, depth_cost(build_quadrant_tree(points, regions)));
  }
  return finish_geometry(
      g, a, "front", out.front, json(out.witnesses),
      [&](std::ostream& s) { io::write_witnesses(s, out.witnesses); }, verdict, meter, universe);
}

int run_hull(const Globals& g, const GeometryArgs& a) {
  const Instance points = io::read_points(a.input);
  CostMeter meter;
  const HullOutput out = convex_hull(points, meter);
  std::optional<Verdict> verdict;
  if (a.verify) verdict = verify_hull(points, out.hull, out.witnesses);
  std::optional<json> universe;
  if (!a.regions.empty()) {
    const RegionSet regions = io::read_triangles(a.regions);
    universe =
        universe_json(points, regions, build_quadrangle_tree(points, regions).depth_cost());
  }
  json witnesses = json::array();
  for (const HullTriple& w : out.witnesses) witnesses.push_back(w);
  return finish_geometry(
      g, a, "hull", out.hull, witnesses,
      [&](std::ostream& s) { io::write_witnesses(s, out.witnesses); }, verdict, meter, universe);
}

// --- enumerate / refine ----------------------------------------------------

struct EnumerateArgs {
  std::string input;
  std::string regions;
  std::string problem = "pareto";
  bool check_bounds = false;
  bool check_phi = false;
};

int run_enumerate(const Globals& g, const EnumerateArgs& a) {
  const Instance points = io::read_points(a.input);
  const Problem problem = parse_problem(a.problem);
  RegionSet regions = problem == Problem::kPareto ? RegionSet::rectangles({})
                                                  : RegionSet::triangles({});
  if (!a.regions.empty()) {
    regions = problem == Problem::kPareto ? io::read_rectangles(a.regions)
                                          : io::read_triangles(a.regions);
  }
  const UniverseCensus c = enumerate_universe(points, regions, problem, a.check_phi);
  json j = {{"problem", std::string(to_string(c.problem))},
            {"n", c.n},
            {"regions_used", c.regions_used},
            {"region_sizes", c.region_sizes},
            {"inputs_count", c.inputs_count},
            {"outputs_count", c.outputs_count},
            {"witness_lists", c.witness_lists},
            {"v_max", c.v_max},
            {"compass_count", c.compass_count},
            {"ond_max", c.ond_max},
            {"ond_per_compass", c.ond_per_compass},
            {"refined_regions", c.refined_regions},
            {"refined_sizes", c.refined_sizes},
            {"ond_max_refined", c.ond_max_refined},
            {"depth_sum", c.depth_sum}};
  int code = kOk;
  if (c.phi.checked) {
    j["phi"] = {{"injective", c.phi.injective},
                {"witness_lists", c.phi.witness_lists},
                {"images", c.phi.images},
                {"outside_ond", c.phi.outside_ond}};
    if (!c.phi.injective) code = kVerificationFailed;
  }
  if (a.check_bounds) {
    const BoundsReport report = check_counting_bounds(c);
    json checks = json::array();
    for (const BoundCheck& b : report.checks) {
      checks.push_back({{"name", b.name},
                        {"lhs", b.lhs},
                        {"rhs", b.rhs},
                        {"slack_bits", b.slack_bits},
                        {"holds", b.holds}});
    }
    j["bounds"] = checks;
    if (!report.all_hold()) code = kVerificationFailed;
  }
  Output out(g.output);
  out.stream() << j.dump(2) << '\n';
  return code;
}

struct RefineArgs {
  std::string input;
  std::string regions;
};

int run_refine(const Globals& g, const RefineArgs& a) {
  const Instance points = io::read_points(a.input);
  const RegionSet regions = io::read_rectangles(a.regions);
  const RegionSet refined = refine_regions(points, regions, build_quadrant_tree(points, regions));
  Output out(g.output);
  if (g.as_json()) {
    out.stream() << json{{"regions", regions_json(refined)}}.dump() << '\n';
  } else {
    io::write_regions(out.stream(), refined);
  }
  return kOk;
}

// --- gen / bench / report --------------------------------------------------

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 1;
  std::string problem = "pareto";
  bool points = false;
  std::string regions_out;
};

int run_gen(const Globals& g, const GenArgs& a) {
  harness::GeneratorSpec spec{harness::parse_family(a.family), a.n, g.seed, a.k,
                              parse_problem(a.problem)};
  Output out(g.output);
  const bool as_points = a.points || !harness::has_scalar_form(spec.family);
  if (!as_points) {
    const harness::ScalarInstance inst = harness::generate_scalars(spec);
    if (g.as_json()) {
      out.stream() << json{{"values", inst.values}, {"universe_sizes", inst.universe_sizes}}.dump()
                   << '\n';
    } else {
      io::write_scalars(out.stream(), inst.values);
    }
    return kOk;
  }
  const harness::PointInstance inst = harness::generate_points(spec);
  if (!a.regions_out.empty()) {
    std::ofstream regions(a.regions_out);
    if (!regions) throw InputError("cannot write '" + a.regions_out + "'");
    io::write_regions(regions, inst.regions);
  }
  if (g.as_json()) {
    json pts = json::array();
    for (const Point& p : inst.points) pts.push_back({p.x, p.y});
    out.stream() << json{{"points", pts},
                         {"regions", regions_json(inst.regions)},
                         {"compass", compass_json(inst.compass)},
                         {"universe_sizes", inst.universe_sizes}}
                        .dump()
                 << '\n';
  } else {
    io::write_points(out.stream(), inst.points);
  }
  return kOk;
}

struct BenchArgs {
  std::string algorithm = "sort";
  std::vector<std::string> families;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> ks = {1};
  std::size_t repeats = 1;
  std::string triage = "bench-failure.txt";
  bool parallel = false;
};

int run_bench(const Globals& g, const BenchArgs& a) {
  const harness::Algorithm algorithm = harness::parse_algorithm(a.algorithm);
  std::vector<harness::GeneratorSpec> specs;
  for (const std::string& f : a.families) {
    const harness::Family family = harness::parse_family(f);
    const std::vector<std::size_t> ks = harness::uses_k(family) ? a.ks : std::vector<std::size_t>{1};
    for (std::size_t k : ks) {
      for (std::size_t n : a.sizes) specs.push_back({family, n, g.seed, k, Problem::kPareto});
    }
  }
  std::vector<harness::BenchRecord> records;
  try {
    harness::BenchOptions options;
    if (a.parallel) options.threads = std::max(1U, std::thread::hardware_concurrency());
    records = harness::bench(algorithm, specs, a.repeats, options);
  } catch (const harness::VerificationFailure& e) {
    std::ofstream triage(a.triage);
    triage << e.instance();
    std::cerr << "verification failure: " << e.what() << " (instance written to " << a.triage
              << ")\n";
    return kVerificationFailed;
  }
  Output out(g.output);
  if (g.as_json()) {
    out.stream() << harness::to_json(records) << '\n';
  } else {
    harness::write_csv(out.stream(), records);
  }
  return kOk;
}

struct ReportArgs {
  std::string input;
};

int run_report(const Globals& g, const ReportArgs& a) {
  std::ifstream in(a.input);
  if (!in) throw InputError("cannot open '" + a.input + "'");
  const auto records = harness::read_csv(in);
  if (records.empty()) throw InputError("no bench records in '" + a.input + "'");
  const harness::ScalingReport report = harness::scaling_report(records);
  Output out(g.output);
  if (g.as_json()) {
    out.stream() << harness::to_json(report) << '\n';
  } else {
    harness::write_csv(out.stream(), report);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive sorting, certified Pareto fronts and convex hulls"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Generator seed");
  app.add_option("--output", g.output, "Write results to FILE instead of stdout");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  SortArgs sort_args;
  auto* sort = app.add_subcommand("sort", "Truncated quicksort of a scalar list");
  sort->add_option("--input", sort_args.input)->required()->check(CLI::ExistingFile);
  sort->add_flag("--count-ops", sort_args.count_ops);
  sort->add_flag("--emit-partition", sort_args.emit_partition);

  EntropyArgs entropy_args;
  auto* ent = app.add_subcommand("entropy", "Presortedness entropy of a scalar list");
  ent->add_option("--input", entropy_args.input)->required()->check(CLI::ExistingFile);
  ent->add_option("--kind", entropy_args.kind)
      ->check(CLI::IsMember({"quicksort", "timsort", "multiset"}));

  GeometryArgs pareto_args;
  GeometryArgs hull_args;
  auto add_geometry = [&](const char* name, const char* help, GeometryArgs& a) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--input", a.input)->required()->check(CLI::ExistingFile);
    cmd->add_option("--regions", a.regions)->check(CLI::ExistingFile);
    cmd->add_flag("--emit-witnesses", a.emit_witnesses);
    cmd->add_flag("--verify", a.verify);
    cmd->add_flag("--count-ops", a.count_ops);
    return cmd;
  };
  auto* pareto = add_geometry("pareto", "Certified Pareto front", pareto_args);
  auto* hull = add_geometry("hull", "Certified convex hull", hull_args);

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive census of a small universe");
  enumerate->add_option("--input", enum_args.input)->required()->check(CLI::ExistingFile);
  enumerate->add_option("--regions", enum_args.regions)->check(CLI::ExistingFile);
  enumerate->add_option("--problem", enum_args.problem)
      ->check(CLI::IsMember({"pareto", "hull"}));
  enumerate->add_flag("--check-bounds", enum_args.check_bounds);
  enumerate->add_flag("--check-phi", enum_args.check_phi);

  RefineArgs refine_args;
  auto* refine = app.add_subcommand("refine", "Refine rectangles along the quadrant tree");
  refine->add_option("--input", refine_args.input)->required()->check(CLI::ExistingFile);
  refine->add_option("--regions", refine_args.regions)->required()->check(CLI::ExistingFile);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", gen_args.family)->required();
  gen->add_option("--n", gen_args.n)->required()->check(CLI::PositiveNumber);
  gen->add_option("--k", gen_args.k)->check(CLI::PositiveNumber);
  gen->add_option("--problem", gen_args.problem)->check(CLI::IsMember({"pareto", "hull"}));
  gen->add_flag("--points", gen_args.points, "Emit points for families with both forms");
  gen->add_option("--regions-out", gen_args.regions_out, "Write the region set to FILE");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run verified benchmarks");
  bench->add_option("--algorithm", bench_args.algorithm)
      ->check(CLI::IsMember({"sort", "pareto", "hull"}));
  bench->add_option("--family", bench_args.families)->required();
  bench->add_option("--n", bench_args.sizes)->required()->check(CLI::PositiveNumber);
  bench->add_option("--k", bench_args.ks)->check(CLI::PositiveNumber);
  bench->add_option("--repeats", bench_args.repeats)->check(CLI::PositiveNumber);
  bench->add_option("--triage", bench_args.triage, "Where a failing instance is written");
  bench->add_flag("--parallel", bench_args.parallel, "Run instances concurrently");

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "Scaling table from bench CSV records");
  report->add_option("--input", report_args.input)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (*sort) return run_sort(g, sort_args);
    if (*ent) return run_entropy(g, entropy_args);
    if (*pareto) return run_pareto(g, pareto_args);
    if (*hull) return run_hull(g, hull_args);
    if (*enumerate) return run_enumerate(g, enum_args);
    if (*refine) return run_refine(g, refine_args);
    if (*gen) return run_gen(g, gen_args);
    if (*bench) return run_bench(g, bench_args);
    if (*report) return run_report(g, report_args);
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInvalidInput;
}
