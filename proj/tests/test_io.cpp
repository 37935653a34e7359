#include <gtest/gtest.h>

#include <sstream>

#include "presort/io.hpp"

using namespace presort;

TEST(ReadScalars, SkipsCommentsAndBlankLines) {
  std::istringstream in("# values\n3\n\n-7\n  12  \n");
  EXPECT_EQ(io::read_scalars(in), (Scalars{3, -7, 12}));
}

TEST(ReadScalars, ReportsTheLine) {
  std::istringstream in("1\n2x\n");
  try {
    io::read_scalars(in);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  std::istringstream two("1 2\n");
  EXPECT_THROW(io::read_scalars(two), InputError);
}

TEST(ReadPoints, ParsesAndChecksRange) {
  std::istringstream in("1 2\n-3 4\n");
  EXPECT_EQ(io::read_points(in), (Instance{{1, 2}, {-3, 4}}));
  std::istringstream wide("4294967296 0\n");
  EXPECT_THROW(io::read_points(wide), InputError);
  std::istringstream short_line("5\n");
  EXPECT_THROW(io::read_points(short_line), InputError);
}

TEST(ReadRegions, ValidatesDisjointness) {
  std::istringstream ok("0 0 2 2\n3 3 4 4\n");
  EXPECT_EQ(io::read_rectangles(ok).size(), 2U);
  std::istringstream overlap("0 0 2 2\n2 2 4 4\n");
  EXPECT_THROW(io::read_rectangles(overlap), InputError);
  std::istringstream degenerate("0 0 1 1 2 2\n");
  EXPECT_THROW(io::read_triangles(degenerate), InputError);
  std::istringstream tri("0 0 4 0 0 4\n");
  const RegionSet t = io::read_triangles(tri);
  ASSERT_EQ(t.kind(), RegionKind::kTriangles);
  EXPECT_EQ(t.tris()[0].b, (Point{4, 0}));
}

TEST(ReadFile, MissingPathIsAnInputError) {
  EXPECT_THROW(io::read_points(std::filesystem::path("/nonexistent/points.txt")), InputError);
}

TEST(Write, RoundTrips) {
  const Instance pts{{5, -1}, {0, 9}};
  std::stringstream s;
  io::write_points(s, pts);
  EXPECT_EQ(io::read_points(s), pts);

  const RegionSet rects = RegionSet::rectangles({{0, 0, 1, 1}, {5, 5, 9, 9}});
  std::stringstream r;
  io::write_regions(r, rects);
  EXPECT_EQ(io::read_rectangles(r).rects(), rects.rects());

  const RegionSet tris = RegionSet::triangles({{{0, 0}, {4, 0}, {0, 4}}});
  std::stringstream t;
  io::write_regions(t, tris);
  EXPECT_EQ(io::read_triangles(t).tris(), tris.tris());

  std::stringstream w;
  io::write_witnesses(w, std::vector<HullTriple>{{0, 1, 2}, kNoTriangle});
  EXPECT_EQ(w.str(), "0 1 2\n-1 -1 -1\n");
  std::stringstream v;
  io::write_scalars(v, Scalars{4, 2});
  EXPECT_EQ(io::read_scalars(v), (Scalars{4, 2}));
}
