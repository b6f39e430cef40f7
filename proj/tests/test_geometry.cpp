// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "branchcut/partition.hpp"
#include "branchcut/path.hpp"

using namespace branchcut;

namespace {

PiecewisePath unit_circle(bool ccw = true) {
  return PiecewisePath::make({Segment::circle({0, 0}, 1.0, ccw)}, true);
}

// figure-eight: CCW lobe around 0, CW lobe around 1, one node at 0.5
PiecewisePath figure_eight() {
  std::vector<cplx> pts = {
      {0.5, 0}, {0.3, 0.45}, {-0.6, 0.5}, {-0.75, 0}, {-0.6, -0.5}, {0.3, -0.45},
      {0.5, 0}, {0.7, 0.45}, {1.6, 0.5},  {1.75, 0},  {1.6, -0.5},  {0.7, -0.45},
      {0.5, 0}};
  return PiecewisePath::make({Segment::polyline(pts)}, true);
}

// two concentric CCW loops: polar r(th) = 1 + 0.3 cos(th/2), th in [0, 4pi]
PiecewisePath doubled_loop(int n = 480) {
  std::vector<cplx> pts;
  for (int k = 0; k <= n; ++k) {
    double th = 4.0 * PI * k / n;
    double r = 1.0 + 0.3 * std::cos(0.5 * th);
    pts.push_back(std::polar(r, th));
  }
  pts.back() = pts.front();
  return PiecewisePath::make({Segment::polyline(pts)}, true);
}

// independent elementary oracle: all pairwise proper intersections of the
// straight segments of a polyline
std::vector<cplx> brute_force_crossings(const std::vector<cplx>& pts, bool closed) {
  std::vector<std::pair<cplx, cplx>> segs;
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    if (std::abs(pts[i + 1] - pts[i]) > 0) segs.push_back({pts[i], pts[i + 1]});
  std::vector<cplx> hits;
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size(); ++j) {
      auto [a, b] = segs[i];
      auto [c, d] = segs[j];
      double den = cross(b - a, d - c);
      if (std::abs(den) < 1e-14) continue;
      double t = cross(c - a, d - c) / den;
      double s = cross(c - a, b - a) / den;
      const double in = 1e-9;
      if (t > in && t < 1 - in && s > in && s < 1 - in) hits.push_back(a + t * (b - a));
      (void)closed;
    }
  }
  return hits;
}

}  // namespace

TEST_CASE("unit circle has no self-intersections") {
  CHECK(self_intersections(unit_circle()).empty());
}

TEST_CASE("figure-eight has exactly one node") {
  auto path = figure_eight();
  auto cr = self_intersections(path);
  REQUIRE(cr.size() == 1);
  CHECK(std::abs(cr[0].point - cplx{0.5, 0.0}) < 1e-12);

  // interior-interior brute force finds none (the node is a repeated vertex)
  std::vector<cplx> pts = {
      {0.5, 0}, {0.3, 0.45}, {-0.6, 0.5}, {-0.75, 0}, {-0.6, -0.5}, {0.3, -0.45},
      {0.5, 0}, {0.7, 0.45}, {1.6, 0.5},  {1.75, 0},  {1.6, -0.5},  {0.7, -0.45},
      {0.5, 0}};
  CHECK(brute_force_crossings(pts, true).empty());
}

TEST_CASE("open polyline crossing at 1+i") {
  std::vector<cplx> pts = {{0, 0}, {2, 2}, {2, 0}, {0, 2}};
  auto path = PiecewisePath::make({Segment::polyline(pts)}, false);
  auto cr = self_intersections(path);
  REQUIRE(cr.size() == 1);
  CHECK(std::abs(cr[0].point - cplx{1, 1}) < 1e-12);

  auto oracle = brute_force_crossings(pts, false);
  REQUIRE(oracle.size() == 1);
  CHECK(std::abs(oracle[0] - cr[0].point) < 1e-12);
}

TEST_CASE("tangential and overlapping inputs are rejected") {
  // two pieces crossing at an angle below theta_min
  CHECK_THROWS_AS(PiecewisePath::make(
                      {Segment::polyline({{0, 0}, {2, 4e-4}, {2.3, 1.5}, {-0.3, 1.5},
                                          {-0.3, 3e-4}, {2.2, -3e-4}})},
                      false),
                  TangentialIntersection);
  // retraced segment
  CHECK_THROWS_AS(PiecewisePath::make(
                      {Segment::polyline({{0, 0}, {1, 0}, {0.25, 0.0}})}, false),
                  OverlapDetected);
  // two CCW circles meeting at a point kiss instead of crossing
  CHECK_THROWS_AS(PiecewisePath::make(
                      {Segment::circle({0, 0}, 0.5, true, 0.0),
                       Segment::circle({1, 0}, 0.5, true, PI)},
                      true),
                  Error);
}

TEST_CASE("winding numbers") {
  auto circ = unit_circle();
  CHECK(winding_number(circ, {0, 0}) == 1);
  CHECK(winding_number(circ, {10, 0}) == 0);
  CHECK(winding_number(circ, {0.9, 0.1}) == 1);
  CHECK_THROWS_AS(winding_number(circ, {1, 0}), PointOnCurve);
  CHECK_THROWS_AS(
      winding_number(PiecewisePath::make({Segment::line({0, 0}, {1, 0})}, false), {0.5, 1}),
      NotClosed);

  auto dbl = doubled_loop();
  CHECK(winding_number(dbl, {0, 0}) == 2);
  CHECK(winding_number(dbl, {1.0, 0.05}) == 1);  // between the loops
  CHECK(winding_number(dbl, {3, 0}) == 0);

  // reversal flips the sign
  CHECK(winding_number(unit_circle(false), {0, 0}) == -1);
}

TEST_CASE("winding is additive over concatenated loops") {
  // the figure-eight is the concatenation of its two lobes at the node
  std::vector<cplx> lobe0 = {{0.5, 0}, {0.3, 0.45}, {-0.6, 0.5}, {-0.75, 0},
                             {-0.6, -0.5}, {0.3, -0.45}, {0.5, 0}};
  std::vector<cplx> lobe1 = {{0.5, 0}, {0.7, 0.45}, {1.6, 0.5}, {1.75, 0},
                             {1.6, -0.5}, {0.7, -0.45}, {0.5, 0}};
  auto whole = figure_eight();
  auto l0 = PiecewisePath::make({Segment::polyline(lobe0)}, true);
  auto l1 = PiecewisePath::make({Segment::polyline(lobe1)}, true);
  for (cplx z : {cplx{0, 0.1}, cplx{1, -0.1}, cplx{-3, 1}, cplx{0.45, 0.3}}) {
    CHECK(winding_number(whole, z) == winding_number(l0, z) + winding_number(l1, z));
  }
}

TEST_CASE("partition of the unit circle") {
  auto part = build_partition(unit_circle());
  REQUIRE(part.regions.size() == 2);
  CHECK(part.regions[0].mu == 0);
  CHECK(part.regions[1].mu == 1);
  CHECK(part.regions[0].depth == 0);
  CHECK(part.regions[1].depth == 1);
}

TEST_CASE("partition of the figure-eight") {
  auto part = build_partition(figure_eight());
  REQUIRE(part.regions.size() == 3);
  std::vector<int> mus;
  for (auto& r : part.regions) mus.push_back(r.mu);
  std::sort(mus.begin(), mus.end());
  CHECK(mus == std::vector<int>{-1, 0, 1});
  // winding oracle at the lobe centers
  auto path = figure_eight();
  CHECK(winding_number(path, {0, 0}) == 1);
  CHECK(winding_number(path, {1, 0}) == -1);
}

TEST_CASE("partition of two concentric loops") {
  auto part = build_partition(doubled_loop());
  REQUIRE(part.regions.size() == 3);
  std::vector<int> mus;
  for (auto& r : part.regions) mus.push_back(r.mu);
  std::sort(mus.begin(), mus.end());
  CHECK(mus == std::vector<int>{0, 1, 2});

  // depth by BFS
  CHECK(point_depth(part, {5, 5}).depth == 0);
  CHECK(point_depth(part, {1.0, 0.05}).depth == 1);
  CHECK(point_depth(part, {0, 0}).depth == 2);
}

TEST_CASE("adjacent regions differ by one winding unit") {
  for (auto* build : {+[] { return figure_eight(); }, +[] { return doubled_loop(); }}) {
    auto part = build_partition(build());
    for (auto& r : part.regions)
      for (auto [nb, seg] : r.adjacency)
        CHECK(std::abs(r.mu - part.regions[static_cast<size_t>(nb)].mu) == 1);
  }
}

TEST_CASE("crossing sequences against the unit circle") {
  auto circ = unit_circle();

  auto far_line = PiecewisePath::make_raw({Segment::line({3, 0}, {4, 1})}, false);
  CHECK(crossing_sequence(far_line, circ, {}).empty());

  // radial ray from 2 to 0: one crossing, entering to the left of gamma
  auto ray = PiecewisePath::make_raw({Segment::line({2, 0}, {0.01, 0})}, false);
  auto cr = crossing_sequence(ray, circ, {});
  REQUIRE(cr.size() == 1);
  CHECK(cr[0].sign == 1);
  CHECK(std::abs(cr[0].point - cplx{1, 0}) < 1e-12);

  // in and out: two crossings, opposite signs
  auto through = PiecewisePath::make_raw({Segment::line({2, 0.3}, {-2, 0.3})}, false);
  auto cr2 = crossing_sequence(through, circ, {});
  REQUIRE(cr2.size() == 2);
  CHECK(cr2[0].sign + cr2[1].sign == 0);
  CHECK(cr2[0].sign == 1);

  // forbidden point on the aux curve
  CHECK_THROWS_AS(crossing_sequence(ray, circ, std::vector<cplx>{cplx{1.5, 0.0}}),
                  NotAdmissible);
}

TEST_CASE("crossing signs sum to the winding difference") {
  auto dbl = doubled_loop();
  struct Probe {
    cplx from, to;
  };
  for (auto [from, to] : {Probe{{3, 0.4}, {0.02, 0.05}},
                          Probe{{2.5, -1}, {-1.12, 0.03}},
                          Probe{{0.1, 2.8}, {0.07, -0.02}}}) {
    auto aux = PiecewisePath::make_raw({Segment::line(from, to)}, false);
    auto cr = crossing_sequence(aux, dbl, {});
    int total = 0;
    for (auto& c : cr) total += c.sign;
    CHECK(total == winding_number(dbl, to) - winding_number(dbl, from));
  }
}

TEST_CASE("point depth basics") {
  auto part = build_partition(unit_circle());
  CHECK(point_depth(part, {4, 4}).depth == 0);
  CHECK(point_depth(part, {0.1, 0.2}).depth == 1);
  auto onb = point_depth(part, {1.0, 0.0});
  CHECK(onb.boundary);
  CHECK(onb.depth == 0);
}
