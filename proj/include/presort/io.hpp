#pragma once

// Plain-text formats: whitespace-separated base-10 integers, one record per
// line. Blank lines and lines starting with '#' are skipped.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "presort/core.hpp"
#include "presort/hull.hpp"
#include "presort/regions.hpp"

namespace presort::io {

Scalars read_scalars(std::istream& in);
Instance read_points(std::istream& in);
RegionSet read_rectangles(std::istream& in);
RegionSet read_triangles(std::istream& in);

Scalars read_scalars(const std::filesystem::path& path);
Instance read_points(const std::filesystem::path& path);
RegionSet read_rectangles(const std::filesystem::path& path);
RegionSet read_triangles(const std::filesystem::path& path);

void write_scalars(std::ostream& out, std::span<const std::int64_t> values);
void write_points(std::ostream& out, std::span<const Point> points);
void write_regions(std::ostream& out, const RegionSet& regions);
void write_witnesses(std::ostream& out, std::span<const std::int64_t> witnesses);
void write_witnesses(std::ostream& out, std::span<const HullTriple> witnesses);

}  // namespace presort::io
