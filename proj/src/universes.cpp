#include "presort/universes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace presort {

using BigInt = boost::multiprecision::cpp_int;

std::string_view to_string(Problem problem) {
  return problem == Problem::kPareto ? "pareto" : "hull";
}

Problem parse_problem(std::string_view text) {
  if (text == "pareto") return Problem::kPareto;
  if (text == "hull") return Problem::kHull;
  throw InputError("unknown problem '" + std::string(text) + "'");
}

std::vector<std::size_t> RegionLabels::sizes() const {
  std::vector<std::size_t> out(count, 0);
  for (int l : label) {
    if (l >= 0) out[static_cast<std::size_t>(l)] += 1;
  }
  return out;
}

RegionLabels label_points(std::span<const Point> points, const RegionSet& regions) {
  const std::vector<int> where = regions.locate(points);
  std::vector<int> compact(regions.size(), -1);
  RegionLabels labels;
  labels.label.assign(points.size(), -1);
  for (std::size_t r = 0; r < regions.size(); ++r) {
    if (std::find(where.begin(), where.end(), static_cast<int>(r)) == where.end()) continue;
    compact[r] = static_cast<int>(labels.count++);
    labels.region_index.push_back(r);
  }
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (where[p] >= 0) labels.label[p] = compact[static_cast<std::size_t>(where[p])];
  }
  return labels;
}

LinearOrder linear_order_L(std::span<const Point> points, const RegionLabels& labels,
                           const CompassFunction& compass) {
  const std::size_t n = points.size();
  if (compass.size() < labels.count) throw InputError("compass function misses a region");
  std::vector<std::vector<char>> edge(n, std::vector<char>(n, 0));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      // red: dominated point before its dominator
      if (dominates(points[p], points[q])) edge[q][p] = 1;
      const int l = labels.label[p];
      if (l < 0 || l != labels.label[q]) continue;
      const bool by_x = sorts_by_x(compass[static_cast<std::size_t>(l)]);
      const bool before = by_x ? points[p].x < points[q].x : points[p].y < points[q].y;
      if (before) edge[p][q] = 1;
    }
  }
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) indegree[q] += static_cast<std::size_t>(edge[p][q]);
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t p = 0; p < n; ++p) {
    if (indegree[p] == 0) ready.push(p);
  }
  LinearOrder order;
  order.rank.assign(n, 0);
  while (!ready.empty()) {
    const std::size_t p = ready.top();
    ready.pop();
    order.rank[p] = order.sequence.size();
    order.sequence.push_back(p);
    for (std::size_t q = 0; q < n; ++q) {
      if (edge[p][q] && --indegree[q] == 0) ready.push(q);
    }
  }
  if (order.sequence.size() != n) {
    throw InvariantViolation("domination/compass digraph has a cycle");
  }
  return order;
}

LinearOrder linear_order_L(std::span<const Point> points, const RegionSet& regions,
                           const CompassFunction& compass) {
  if (compass.size() != regions.size()) {
    throw InputError("compass function must assign one order per region");
  }
  const RegionLabels labels = label_points(points, regions);
  CompassFunction per_label;
  for (std::size_t r : labels.region_index) per_label.push_back(compass[r]);
  return linear_order_L(points, labels, per_label);
}

namespace {

void refine_walk(std::span<const Point> points, const QuadrantTree& tree, int u, Rectangle r,
                 std::vector<Rectangle>& out) {
  if (r.empty()) return;
  const QuadrantNode& node = tree.nodes[static_cast<std::size_t>(u)];
  if (node.truncated()) {
    out.push_back(r);
    return;
  }
  const Point& q = points[*node.representative];
  const Rectangle quadrant{r.xmin, r.ymin, std::min(r.xmax, q.x), std::min(r.ymax, q.y)};
  const Rectangle above{r.xmin, std::max(r.ymin, q.y + 1), std::min(r.xmax, q.x), r.ymax};
  const Rectangle right{std::max(r.xmin, q.x + 1), r.ymin, r.xmax, std::min(r.ymax, q.y)};
  if (!quadrant.empty()) out.push_back(quadrant);
  if (node.left >= 0) {
    refine_walk(points, tree, node.left, above, out);
  } else if (!above.empty()) {
    out.push_back(above);
  }
  if (node.right >= 0) {
    refine_walk(points, tree, node.right, right, out);
  } else if (!right.empty()) {
    out.push_back(right);
  }
}

}  // namespace

RegionSet refine_regions(std::span<const Point> points, const RegionSet& regions,
                         const QuadrantTree& tree) {
  if (regions.kind() != RegionKind::kRectangles) {
    throw InputError("refinement applies to rectangle regions");
  }
  regions.validate();
  std::vector<Rectangle> pieces;
  for (const Rectangle& r : regions.rects()) {
    if (tree.nodes.empty()) {
      pieces.push_back(r);
    } else {
      refine_walk(points, tree, 0, r, pieces);
    }
  }
  return RegionSet::rectangles(std::move(pieces)).without_empty(points);
}

OndContext ond_context(std::span<const Point> points, const RegionSet& regions, Problem problem) {
  OndContext ctx;
  ctx.problem = problem;
  ctx.labels = label_points(points, regions);
  if (problem == Problem::kHull) ctx.tree = build_quadrangle_tree(points, regions);
  return ctx;
}

OndContext refined_ond_context(std::span<const Point> points, const RegionSet& regions,
                               Problem problem) {
  if (problem == Problem::kPareto) {
    const QuadrantTree tree = build_quadrant_tree(points, regions);
    return ond_context(points, refine_regions(points, regions, tree), problem);
  }
  OndContext ctx = ond_context(points, regions, problem);
  std::map<std::pair<int, int>, int> group;
  RegionLabels refined;
  refined.label.assign(points.size(), -1);
  for (std::size_t p = 0; p < points.size(); ++p) {
    const int l = ctx.labels.label[p];
    if (l < 0) continue;
    const auto key = std::make_pair(ctx.tree.node_of[p], l);
    auto [it, fresh] = group.try_emplace(key, static_cast<int>(refined.count));
    if (fresh) {
      refined.count += 1;
      refined.region_index.push_back(ctx.labels.region_index[static_cast<std::size_t>(l)]);
    }
    refined.label[p] = it->second;
  }
  ctx.labels = std::move(refined);
  return ctx;
}

namespace {

std::vector<std::size_t> nonextremal_points(std::span<const Point> points, Problem problem) {
  std::vector<std::size_t> out;
  const std::size_t n = points.size();
  if (problem == Problem::kPareto) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (q != p && dominates(points[q], points[p])) {
          out.push_back(p);
          break;
        }
      }
    }
    return out;
  }
  std::vector<char> on_hull(n, 0);
  for (std::size_t h : convex_hull(points).hull) on_hull[h] = 1;
  for (std::size_t p = 0; p < n; ++p) {
    if (!on_hull[p]) out.push_back(p);
  }
  return out;
}

CompassFunction decode_compass(std::uint64_t code, std::size_t k) {
  CompassFunction compass(k);
  for (std::size_t l = k; l-- > 0;) {
    compass[l] = kAxisOrders[code % 4];
    code /= 4;
  }
  return compass;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > cap / base) throw LimitError("enumeration exceeds its budget");
    out *= base;
  }
  return out;
}

// Orders of a fiber compatible with the linear order inside each region.
// `signature` lists the members' labels in linear-order sequence.
class FiberOrders {
 public:
  std::uint64_t count(const std::vector<int>& signature) {
    auto it = cache_.find(signature);
    if (it != cache_.end()) return it->second;
    const std::size_t s = signature.size();
    std::vector<std::size_t> order(s);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::uint64_t total = 0;
    std::vector<std::size_t> place(s);
    do {
      for (std::size_t k = 0; k < s; ++k) place[order[k]] = k;
      bool ok = true;
      for (std::size_t a = 0; a < s && ok; ++a) {
        for (std::size_t b = a + 1; b < s && ok; ++b) {
          if (signature[a] >= 0 && signature[a] == signature[b] && place[a] > place[b]) ok = false;
        }
      }
      total += ok ? 1 : 0;
    } while (std::next_permutation(order.begin(), order.end()));
    cache_.emplace(signature, total);
    return total;
  }

 private:
  std::map<std::vector<int>, std::uint64_t> cache_;
};

// Sum over normalized downdrafts psi (candidates[k] lists the allowed
// images of nonextremal[k]) of the number of compatible fiber orders.
std::uint64_t count_ordered_normalized(const std::vector<std::size_t>& nonextremal,
                                       const std::vector<std::vector<std::size_t>>& candidates,
                                       const std::vector<int>& label,
                                       const std::vector<std::size_t>& rank,
                                       std::uint64_t budget, FiberOrders& fibers) {
  const std::size_t m = nonextremal.size();
  std::uint64_t combos = 1;
  for (const auto& c : candidates) {
    if (c.empty()) return 0;
    if (combos > budget / c.size()) throw LimitError("downdraft enumeration exceeds its budget");
    combos *= c.size();
  }
  // same-region pairs (a, b) with a before b in the linear order
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const int la = label[nonextremal[a]];
      if (a != b && la >= 0 && la == label[nonextremal[b]] &&
          rank[nonextremal[a]] < rank[nonextremal[b]]) {
        pairs.emplace_back(a, b);
      }
    }
  }
  std::vector<std::size_t> choice(m, 0);
  std::uint64_t total = 0;
  std::vector<std::size_t> image(m);
  std::map<std::size_t, std::vector<std::size_t>> fiber;
  while (true) {
    for (std::size_t k = 0; k < m; ++k) image[k] = candidates[k][choice[k]];
    bool normalized = true;
    for (const auto& [a, b] : pairs) {
      if (rank[image[a]] > rank[image[b]]) {
        normalized = false;
        break;
      }
    }
    if (normalized) {
      fiber.clear();
      for (std::size_t k = 0; k < m; ++k) fiber[image[k]].push_back(nonextremal[k]);
      std::uint64_t product = 1;
      for (auto& [target, members] : fiber) {
        std::sort(members.begin(), members.end(),
                  [&](std::size_t x, std::size_t y) { return rank[x] < rank[y]; });
        std::vector<int> signature;
        signature.reserve(members.size());
        for (std::size_t x : members) signature.push_back(label[x]);
        product *= fibers.count(signature);
      }
      total += product;
    }
    std::size_t k = 0;
    while (k < m && ++choice[k] == candidates[k].size()) choice[k++] = 0;
    if (k == m) break;
  }
  return total;
}

}  // namespace

OndCount enumerate_ond(std::span<const Point> points, const OndContext& context,
                       const EnumerationLimits& limits) {
  const std::size_t n = points.size();
  if (n > limits.max_points) throw LimitError("too many points for downdraft enumeration");
  const std::size_t k = context.labels.count;
  const std::uint64_t compasses = checked_power(4, k, limits.budget);
  const std::vector<std::size_t> nonextremal = nonextremal_points(points, context.problem);

  OndCount out;
  FiberOrders fibers;
  std::map<std::vector<std::size_t>, std::uint64_t> cache;
  for (std::uint64_t code = 0; code < compasses; ++code) {
    const CompassFunction compass = decode_compass(code, k);
    std::vector<std::size_t> rank;
    std::vector<std::vector<std::size_t>> candidates(nonextremal.size());
    std::vector<std::size_t> cache_key;
    if (context.problem == Problem::kPareto) {
      const LinearOrder order = linear_order_L(points, context.labels, compass);
      rank = order.rank;
      cache_key = order.sequence;
      for (std::size_t a = 0; a < nonextremal.size(); ++a) {
        const std::size_t p = nonextremal[a];
        for (std::size_t q = 0; q < n; ++q) {
          if (q != p && dominates(points[q], points[p])) candidates[a].push_back(q);
        }
      }
    } else {
      const QuadrangleOrder order =
          quadrangle_order(points, context.labels.label, context.tree, compass);
      rank = order.rank;
      cache_key = order.rho;
      for (std::size_t a = 0; a < nonextremal.size(); ++a) {
        const std::size_t p = nonextremal[a];
        for (std::size_t q = 0; q < n; ++q) {
          if (order.precedes(context.tree, p, q)) candidates[a].push_back(q);
        }
      }
    }
    auto it = cache.find(cache_key);
    if (it == cache.end()) {
      const std::uint64_t count = count_ordered_normalized(
          nonextremal, candidates, context.labels.label, rank, limits.budget, fibers);
      it = cache.emplace(cache_key, count).first;
    }
    out.per_compass.push_back(it->second);
    if (code == 0 || it->second > out.max) {
      out.max = it->second;
      out.argmax = compass;
    }
  }
  return out;
}

namespace {

CompassFunction observed_compass(std::span<const Point> points, std::span<const std::size_t> perm,
                                 const RegionLabels& labels) {
  CompassFunction compass(labels.count, AxisOrder::kIncreasingX);
  std::vector<std::vector<std::size_t>> members(labels.count);
  for (std::size_t id : perm) {
    if (labels.label[id] >= 0) members[static_cast<std::size_t>(labels.label[id])].push_back(id);
  }
  for (std::size_t l = 0; l < labels.count; ++l) {
    const auto order = first_sorted_order(points, members[l]);
    if (!order) throw InputError("input does not respect the region set");
    compass[l] = *order;
  }
  return compass;
}

// Shared tail of both Phi constructions: given phi on positions' points,
// builds sigma, psi, fiber ranks, and the membership diagnostics.
// `point_at[i]` is the point placed at position i; `phi_of` maps points
// to their phi image (or -1).
void finish_phi(PhiImage& image, const std::vector<std::size_t>& point_at,
                const std::vector<int>& phi_of, const std::vector<int>& label,
                const std::vector<std::size_t>& rank, std::size_t label_count,
                const std::function<bool(std::size_t, std::size_t)>& above) {
  const std::size_t n = point_at.size();
  std::vector<std::size_t> position_of(n);
  for (std::size_t i = 0; i < n; ++i) position_of[point_at[i]] = i;

  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> members(label_count);
  for (std::size_t p = 0; p < n; ++p) {
    if (phi_of[p] >= 0 && label[p] >= 0) members[static_cast<std::size_t>(label[p])].push_back(p);
  }
  for (auto& group : members) {
    std::vector<std::size_t> by_rank = group;
    std::sort(by_rank.begin(), by_rank.end(),
              [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
    std::vector<std::size_t> by_image = group;
    std::sort(by_image.begin(), by_image.end(), [&](std::size_t a, std::size_t b) {
      const auto ia = rank[static_cast<std::size_t>(phi_of[a])];
      const auto ib = rank[static_cast<std::size_t>(phi_of[b])];
      return ia != ib ? ia < ib : rank[a] < rank[b];
    });
    for (std::size_t i = 0; i < group.size(); ++i) sigma[by_rank[i]] = by_image[i];
  }

  image.psi.assign(n, -1);
  image.fiber_rank.assign(n, -1);
  std::map<int, std::vector<std::size_t>> fibers;
  for (std::size_t x = 0; x < n; ++x) {
    if (phi_of[x] < 0) continue;
    image.psi[x] = phi_of[sigma[x]];
    fibers[image.psi[x]].push_back(x);
  }
  for (auto& [target, xs] : fibers) {
    std::sort(xs.begin(), xs.end(), [&](std::size_t a, std::size_t b) {
      return position_of[sigma[a]] < position_of[sigma[b]];
    });
    for (std::size_t r = 0; r < xs.size(); ++r) image.fiber_rank[xs[r]] = static_cast<int>(r);
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (image.psi[x] >= 0 && !above(x, static_cast<std::size_t>(image.psi[x]))) {
      image.is_downdraft = false;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || image.psi[x] < 0 || image.psi[y] < 0) continue;
      if (label[x] < 0 || label[x] != label[y] || rank[x] > rank[y]) continue;
      const auto px = static_cast<std::size_t>(image.psi[x]);
      const auto py = static_cast<std::size_t>(image.psi[y]);
      if (rank[px] > rank[py]) image.is_normalized = false;
      if (px == py && image.fiber_rank[x] > image.fiber_rank[y]) image.is_normalized = false;
    }
  }
}

std::vector<Point> placed(std::span<const Point> points, std::span<const std::size_t> perm) {
  std::vector<Point> input;
  input.reserve(perm.size());
  for (std::size_t id : perm) input.push_back(points[id]);
  return input;
}

}  // namespace

std::string PhiImage::key() const {
  std::string out;
  for (AxisOrder o : compass) out.push_back(static_cast<char>('a' + static_cast<int>(o)));
  out.push_back('|');
  for (int v : psi) out.append(std::to_string(v)).push_back(',');
  out.push_back('|');
  for (int v : fiber_rank) out.append(std::to_string(v)).push_back(',');
  out.push_back('|');
  for (std::size_t v : output_list) out.append(std::to_string(v)).push_back(',');
  out.push_back('|');
  for (std::int64_t v : corners) out.append(std::to_string(v)).push_back(',');
  return out;
}

PhiImage phi_map(std::span<const Point> points, std::span<const std::size_t> perm,
                 std::span<const std::int64_t> witnesses, const OndContext& context) {
  if (context.problem != Problem::kPareto) throw InputError("context is not a Pareto universe");
  const std::size_t n = points.size();
  if (perm.size() != n || witnesses.size() != n) throw InputError("size mismatch");
  const std::vector<Point> input = placed(points, perm);
  if (!verify_pareto(input, pareto_front(input).front, witnesses)) {
    throw InputError("not a witness list for this input");
  }
  PhiImage image;
  image.compass = observed_compass(points, perm, context.labels);
  const LinearOrder order = linear_order_L(points, context.labels, image.compass);
  std::vector<int> phi_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (witnesses[i] >= 0) {
      phi_of[perm[i]] = static_cast<int>(perm[static_cast<std::size_t>(witnesses[i])]);
    }
  }
  image.output_list = pareto_front(input).front;
  const std::vector<std::size_t> point_at(perm.begin(), perm.end());
  finish_phi(image, point_at, phi_of, context.labels.label, order.rank, context.labels.count,
             [&](std::size_t x, std::size_t y) {
               return x != y && dominates(points[y], points[x]);
             });
  return image;
}

PhiImage phi_map(std::span<const Point> points, std::span<const std::size_t> perm,
                 std::span<const HullTriple> witnesses, const OndContext& context) {
  if (context.problem != Problem::kHull) throw InputError("context is not a hull universe");
  const std::size_t n = points.size();
  if (perm.size() != n || witnesses.size() != n) throw InputError("size mismatch");
  const std::vector<Point> input = placed(points, perm);
  const HullOutput hull = convex_hull(input);
  if (!verify_hull(input, hull.hull, witnesses)) {
    throw InputError("not a witness list for this input");
  }
  PhiImage image;
  image.compass = observed_compass(points, perm, context.labels);
  const QuadrangleOrder order =
      quadrangle_order(points, context.labels.label, context.tree, image.compass);

  image.corners.assign(n, -1);
  std::vector<std::size_t> permuted(n);
  for (std::size_t i = 0; i < n; ++i) permuted[i] = order.rho[perm[i]];
  std::vector<int> phi_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (witnesses[i] == kNoTriangle) continue;
    bool found = false;
    for (std::int64_t c : witnesses[i]) {
      if (context.tree.precedes(perm[i], perm[static_cast<std::size_t>(c)])) {
        image.corners[i] = c;
        found = true;
        break;
      }
    }
    if (!found) throw InvariantViolation("witness triangle has no corner above its point");
    phi_of[permuted[i]] = static_cast<int>(permuted[static_cast<std::size_t>(image.corners[i])]);
  }
  image.output_list = hull.hull;
  finish_phi(image, permuted, phi_of, context.labels.label, order.rank, context.labels.count,
             [&](std::size_t x, std::size_t y) { return order.precedes(context.tree, x, y); });
  return image;
}

namespace {

bool respects_labels(std::span<const Point> points, const std::vector<std::size_t>& perm,
                     const RegionLabels& labels, std::vector<std::vector<std::size_t>>& scratch) {
  scratch.assign(labels.count, {});
  for (std::size_t id : perm) {
    if (labels.label[id] >= 0) scratch[static_cast<std::size_t>(labels.label[id])].push_back(id);
  }
  for (const auto& members : scratch) {
    if (!first_sorted_order(points, members)) return false;
  }
  return true;
}

// Witness lists are serialized one char per entry (value + 1).
using WitnessKey = std::string;

}  // namespace

UniverseCensus enumerate_universe(std::span<const Point> points, const RegionSet& regions,
                                  Problem problem, bool check_phi,
                                  const EnumerationLimits& limits) {
  const std::size_t n = points.size();
  if (n > limits.max_points) throw LimitError("universe enumeration is limited to small n");
  if (check_phi && n > limits.max_points_phi) throw LimitError("Phi check is limited to small n");
  regions.validate();
  const bool triangles = regions.kind() == RegionKind::kTriangles;
  if (!regions.empty() && triangles != (problem == Problem::kHull)) {
    throw InputError("Pareto universes use rectangles, hull universes use triangles");
  }
  const OndContext context = ond_context(points, regions, problem);
  if (problem == Problem::kPareto) build_quadrant_tree(points, regions);

  UniverseCensus census;
  census.problem = problem;
  census.n = n;
  census.regions_used = context.labels.count;
  census.region_sizes = context.labels.sizes();

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> scratch;
  std::set<std::vector<std::size_t>> outputs;
  std::unordered_map<WitnessKey, std::uint64_t> table;
  std::unordered_map<WitnessKey, std::vector<std::uint32_t>> inputs_of;
  std::vector<std::vector<std::size_t>> respecting;
  std::uint64_t pairs = 0;
  const std::size_t width = problem == Problem::kPareto ? 1 : 3;

  do {
    if (!respects_labels(points, perm, context.labels, scratch)) continue;
    const std::vector<Point> input = placed(points, perm);
    census.inputs_count += 1;
    const auto input_id = static_cast<std::uint32_t>(respecting.size());
    if (check_phi) respecting.push_back(perm);

    // options[i]: the serialized choices for position i
    std::vector<std::vector<std::string>> options(n);
    if (problem == Problem::kPareto) {
      outputs.insert(pareto_front(input).front);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i && dominates(input[j], input[i])) {
            options[i].push_back(std::string(1, static_cast<char>(j + 1)));
          }
        }
        if (options[i].empty()) options[i].push_back(std::string(1, '\0'));
      }
    } else {
      const HullOutput hull = convex_hull(input);
      outputs.insert(hull.hull);
      std::vector<char> on_hull(n, 0);
      for (std::size_t h : hull.hull) on_hull[h] = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (on_hull[i]) {
          options[i].push_back(std::string(3, '\0'));
          continue;
        }
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
              if (a == i || b == i || c == i) continue;
              if (strictly_inside_triangle(input[i], input[a], input[b], input[c])) {
                options[i].push_back({static_cast<char>(a + 1), static_cast<char>(b + 1),
                                      static_cast<char>(c + 1)});
              }
            }
          }
        }
      }
    }

    std::uint64_t combos = 1;
    for (const auto& o : options) combos *= o.size();
    pairs += combos;
    if (pairs > limits.budget) throw LimitError("witness enumeration exceeds its budget");

    std::vector<std::size_t> choice(n, 0);
    WitnessKey key(n * width, '\0');
    while (true) {
      for (std::size_t i = 0; i < n; ++i) key.replace(i * width, width, options[i][choice[i]]);
      table[key] += 1;
      if (check_phi) inputs_of[key].push_back(input_id);
      std::size_t i = 0;
      while (i < n && ++choice[i] == options[i].size()) choice[i++] = 0;
      if (i == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  census.outputs_count = outputs.size();
  census.witness_lists = table.size();
  for (const auto& [key, count] : table) census.v_max = std::max(census.v_max, count);

  const OndCount ond = enumerate_ond(points, context, limits);
  census.compass_count = checked_power(4, context.labels.count, limits.budget);
  census.ond_max = ond.max;
  census.ond_per_compass = ond.per_compass;

  const OndContext refined = refined_ond_context(points, regions, problem);
  census.refined_regions = refined.labels.count;
  census.refined_sizes = refined.labels.sizes();
  census.ond_max_refined = enumerate_ond(points, refined, limits).max;
  if (problem == Problem::kPareto) {
    const QuadrantTree tree = build_quadrant_tree(points, regions);
    const RegionSet pieces = refine_regions(points, regions, tree);
    census.depth_sum = depth_cost(build_quadrant_tree(points, pieces));
  } else {
    census.depth_sum = context.tree.depth_cost();
  }

  if (check_phi) {
    census.phi.checked = true;
    for (const auto& [key, ids] : inputs_of) {
      census.phi.witness_lists += 1;
      std::unordered_set<std::string> images;
      for (std::uint32_t id : ids) {
        const std::vector<std::size_t>& order = respecting[id];
        PhiImage image;
        if (problem == Problem::kPareto) {
          std::vector<std::int64_t> w(n);
          for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<std::int64_t>(key[i]) - 1;
          image = phi_map(points, order, w, context);
        } else {
          std::vector<HullTriple> w(n);
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t t = 0; t < 3; ++t) {
              w[i][t] = static_cast<std::int64_t>(key[i * 3 + t]) - 1;
            }
          }
          image = phi_map(points, order, w, context);
        }
        census.phi.images += 1;
        if (!image.is_downdraft || !image.is_normalized) census.phi.outside_ond += 1;
        if (!images.insert(image.key()).second) census.phi.injective = false;
      }
    }
  }
  return census;
}

bool BoundsReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

namespace {

BigInt factorial(std::size_t k) {
  BigInt out = 1;
  for (std::size_t t = 2; t <= k; ++t) out *= t;
  return out;
}

BigInt power(std::uint64_t base, std::size_t exp) {
  BigInt out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

double log2_big(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(v);
  if (bits < 1000) return std::log2(v.convert_to<double>());
  const BigInt top = v >> (bits - 60);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 60);
}

BoundCheck compare(std::string name, const BigInt& lhs, const BigInt& rhs) {
  BoundCheck check;
  check.name = std::move(name);
  check.lhs = lhs.str();
  check.rhs = rhs.str();
  check.holds = lhs <= rhs;
  check.slack_bits = log2_big(rhs) - log2_big(lhs);
  return check;
}

}  // namespace

BoundsReport check_counting_bounds(const UniverseCensus& census) {
  BoundsReport report;
  const std::size_t n = census.n;
  const bool hull = census.problem == Problem::kHull;

  BigInt witness_rhs = BigInt(census.outputs_count) * census.ond_max * power(4, n);
  if (hull) witness_rhs *= power(3, n);
  report.checks.push_back(compare(hull ? "v_max <= hulls * ond_max * 4^n * 3^n"
                                       : "v_max <= fronts * ond_max * 4^n",
                                  BigInt(census.v_max), witness_rhs));

  BigInt ond_lhs = BigInt(census.ond_max_refined) << census.depth_sum;
  for (std::size_t s : census.refined_sizes) ond_lhs *= factorial(s);
  report.checks.push_back(
      compare("ond_max(R') * 2^depth_sum * prod |r ∩ P|! <= n^n", ond_lhs, power(n, n)));

  BigInt arrangements = factorial(n);
  for (std::size_t s : census.region_sizes) arrangements /= factorial(s);
  report.checks.push_back(
      compare("n! / prod |r ∩ P|! <= inputs", arrangements, BigInt(census.inputs_count)));
  return report;
}

}  // namespace presort
