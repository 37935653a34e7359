#include "presort/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace presort::io {

namespace {

// Each non-comment line must hold exactly `arity` integers.
std::vector<std::vector<std::int64_t>> read_records(std::istream& in, std::size_t arity) {
  std::vector<std::vector<std::int64_t>> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::vector<std::int64_t> fields;
    const char* p = line.data() + start;
    const char* end = line.data() + line.size();
    while (p < end) {
      if (*p == ' ' || *p == '\t') {
        ++p;
        continue;
      }
      if (*p == '+') ++p;
      std::int64_t v = 0;
      const auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc{} || (next < end && *next != ' ' && *next != '\t')) {
        throw InputError("line " + std::to_string(line_no) + ": expected integers");
      }
      fields.push_back(v);
      p = next;
    }
    if (fields.size() != arity) {
      throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(arity) +
                       " integers, found " + std::to_string(fields.size()));
    }
    records.push_back(std::move(fields));
  }
  return records;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

Scalars read_scalars(std::istream& in) {
  Scalars out;
  for (const auto& r : read_records(in, 1)) out.push_back(r[0]);
  return out;
}

Instance read_points(std::istream& in) {
  Instance out;
  for (const auto& r : read_records(in, 2)) out.push_back({r[0], r[1]});
  require_coordinate_range(out);
  return out;
}

RegionSet read_rectangles(std::istream& in) {
  std::vector<Rectangle> rects;
  for (const auto& r : read_records(in, 4)) rects.push_back({r[0], r[1], r[2], r[3]});
  RegionSet out = RegionSet::rectangles(std::move(rects));
  out.validate();
  return out;
}

RegionSet read_triangles(std::istream& in) {
  std::vector<Triangle> tris;
  for (const auto& r : read_records(in, 6)) {
    tris.push_back({{r[0], r[1]}, {r[2], r[3]}, {r[4], r[5]}});
  }
  RegionSet out = RegionSet::triangles(std::move(tris));
  out.validate();
  return out;
}

Scalars read_scalars(const std::filesystem::path& path) {
  auto in = open(path);
  return read_scalars(in);
}

Instance read_points(const std::filesystem::path& path) {
  auto in = open(path);
  return read_points(in);
}

RegionSet read_rectangles(const std::filesystem::path& path) {
  auto in = open(path);
  return read_rectangles(in);
}

RegionSet read_triangles(const std::filesystem::path& path) {
  auto in = open(path);
  return read_triangles(in);
}

void write_scalars(std::ostream& out, std::span<const std::int64_t> values) {
  for (std::int64_t v : values) out << v << '\n';
}

void write_points(std::ostream& out, std::span<const Point> points) {
  for (const Point& p : points) out << p.x << ' ' << p.y << '\n';
}

void write_regions(std::ostream& out, const RegionSet& regions) {
  if (regions.kind() == RegionKind::kRectangles) {
    for (const Rectangle& r : regions.rects()) {
      out << r.xmin << ' ' << r.ymin << ' ' << r.xmax << ' ' << r.ymax << '\n';
    }
    return;
  }
  for (const Triangle& t : regions.tris()) {
    out << t.a.x << ' ' << t.a.y << ' ' << t.b.x << ' ' << t.b.y << ' ' << t.c.x << ' ' << t.c.y
        << '\n';
  }
}

void write_witnesses(std::ostream& out, std::span<const std::int64_t> witnesses) {
  for (std::int64_t w : witnesses) out << w << '\n';
}

void write_witnesses(std::ostream& out, std::span<const HullTriple> witnesses) {
  for (const HullTriple& w : witnesses) out << w[0] << ' ' << w[1] << ' ' << w[2] << '\n';
}

}  // namespace presort::io
