// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include <algorithm>

#include "branchcut/algebraic.hpp"

using namespace branchcut;

namespace {

// A(z,w) = w^2 - z
AlgebraicFunctionDef sqrt_z() {
  return AlgebraicFunctionDef::from_wpoly({CPoly({0, -1}), CPoly({0.0}), CPoly({1.0})});
}
// A(z,w) = w^2 - (1 - z^2)
AlgebraicFunctionDef circle_root() {
  return AlgebraicFunctionDef::from_wpoly({CPoly({-1, 0, 1}), CPoly({0.0}), CPoly({1.0})});
}
// A(z,w) = w^n - z
AlgebraicFunctionDef nth_root(int n) {
  std::vector<CPoly> wc(static_cast<size_t>(n) + 1, CPoly({0.0}));
  wc[0] = CPoly({0, -1});
  wc[static_cast<size_t>(n)] = CPoly({1.0});
  return AlgebraicFunctionDef::from_wpoly(std::move(wc));
}

CPoly chebyshev6() { return CPoly({-1, 0, 18, 0, -48, 0, 32}); }

PiecewisePath loop_around(cplx center, double r, cplx base) {
  cplx dir = (center - base) / std::abs(center - base);
  cplx touch = center - r * dir;
  return PiecewisePath::make_raw({Segment::line(base, touch),
                                  Segment::circle(center, r, true, std::arg(touch - center)),
                                  Segment::line(touch, base)},
                                 false);
}

}  // namespace

TEST_CASE("branches at regular points") {
  auto f = sqrt_z();
  auto b = branches_at(f, {4, 0});
  REQUIRE(b.size() == 2);
  CHECK(std::abs(b[0].jet.value() + 2.0) < 1e-12);
  CHECK(std::abs(b[1].jet.value() - 2.0) < 1e-12);
  // dw/dz = 1/(2w)
  CHECK(std::abs(b[1].jet[1] - 0.25) < 1e-10);

  auto c = circle_root();
  auto bc = branches_at(c, {0, 0});
  REQUIRE(bc.size() == 2);
  CHECK(std::abs(bc[0].jet.value() + 1.0) < 1e-12);
  CHECK(std::abs(bc[1].jet.value() - 1.0) < 1e-12);

  auto b3 = branches_at(nth_root(3), {1, 0});
  REQUIRE(b3.size() == 3);
  std::vector<cplx> vals;
  for (auto& g : b3) vals.push_back(g.jet.value());
  for (cplx root : {cplx{1, 0}, std::polar(1.0, 2 * PI / 3), std::polar(1.0, -2 * PI / 3)}) {
    bool found = false;
    for (cplx v : vals) found |= std::abs(v - root) < 1e-10;
    CHECK(found);
  }

  CHECK_THROWS_AS(branches_at(sqrt_z(), {0, 0}), NearDiscriminant);
}

TEST_CASE("continuation along paths") {
  auto f = sqrt_z();
  BranchGerm g = germ_at(f, {4, 0}, {2, 0});

  auto straight = PiecewisePath::make_raw({Segment::line({4, 0}, {9, 0})}, false);
  auto moved = continue_branch(f, g, straight);
  CHECK(std::abs(moved.jet.value() - 3.0) < 1e-10);

  auto loop = PiecewisePath::make_raw({Segment::circle({0, 0}, 4.0, true, 0.0)}, false);
  auto flipped = continue_branch(f, g, loop);
  CHECK(std::abs(flipped.jet.value() + 2.0) < 1e-10);

  auto c = circle_root();
  BranchGerm gc = germ_at(c, {0, 0}, {1, 0});
  auto around_one = loop_around({1, 0}, 0.4, {0, 0});
  auto gc2 = continue_branch(c, gc, around_one);
  CHECK(std::abs(gc2.jet.value() + 1.0) < 1e-10);
}

TEST_CASE("continuation is homotopy invariant") {
  auto f = circle_root();
  BranchGerm g = germ_at(f, {-2, 0}, f.fiber({-2, 0})[0]);
  // two paths from -2 to 2i avoiding the discriminant points +-1, homotopic
  // in their complement
  auto p1 = PiecewisePath::make_raw(
      {Segment::polyline({{-2, 0}, {-2, 1.5}, {0, 2.2}, {0, 2}})}, false);
  auto p2 = PiecewisePath::make_raw(
      {Segment::polyline({{-2, 0}, {-1.4, 1.1}, {-0.4, 1.6}, {0, 2}})}, false);
  auto g1 = continue_branch(f, g, p1);
  auto g2 = continue_branch(f, g, p2);
  CHECK(jets_equal(g1.jet, g2.jet, 1e-8));

  // passage through the gap between the branch points flips the branch
  auto p3 = PiecewisePath::make_raw(
      {Segment::polyline({{-2, 0}, {-1.2, -0.9}, {0, -0.8}, {0, 2}})}, false);
  auto g3 = continue_branch(f, g, p3);
  CHECK(!jets_equal(g1.jet, g3.jet, 1e-8));
}

TEST_CASE("monodromy of the cube root") {
  auto rep = monodromy_generators(nth_root(3), {2, 0.3});
  REQUIRE(rep.generators.size() == 1);
  // single generator is a 3-cycle
  auto p = rep.generators[0].perm;
  CHECK(p[p[p[0]]] == 0);
  CHECK(p[0] != 0);
  CHECK(rep.transitive);
  CHECK(!rep.doubly_transitive);
  CHECK(rep.order == 3);
  CHECK(rep.order_exact);
}

TEST_CASE("monodromy of the circle root") {
  auto rep = monodromy_generators(circle_root(), {0, -2});
  REQUIRE(rep.generators.size() == 2);
  for (auto& g : rep.generators) CHECK(g.perm == std::vector<int>{1, 0});
  CHECK(rep.transitive);
  CHECK(rep.doubly_transitive);  // n = 2, vacuous
}

TEST_CASE("Chebyshev composite has dihedral monodromy") {
  auto f = AlgebraicFunctionDef::from_composite(chebyshev6(), CPoly::x());
  auto rep = monodromy_generators(f, {0.37, 2.11});
  CHECK(rep.transitive);
  CHECK(!rep.doubly_transitive);
  CHECK(rep.order == 12);  // dihedral group on 6 sheets
  CHECK(rep.order_exact);
}

TEST_CASE("composite branches satisfy the fiber residual") {
  auto f = AlgebraicFunctionDef::from_composite(chebyshev6(), CPoly({0, 0, 0, 1}));
  cplx z{0.41, 0.73};
  auto b = branches_at(f, z);
  REQUIRE(static_cast<int>(b.size()) == 6);
  for (auto& g : b) {
    CHECK(std::abs(chebyshev6().eval(g.anchor) - z) < 1e-9);
    CHECK(std::abs(g.jet.value() - std::pow(g.anchor, 3)) < 1e-9);
  }
}

TEST_CASE("ramification profiles") {
  auto prof = ramification_profile(sqrt_z(), {0, 0}, 8);
  REQUIRE(prof.cycles.size() == 1);
  CHECK(prof.cycles[0].sheets.size() == 2);
  CHECK(prof.cycles[0].regular_part.max_abs() < 1e-9);
  CHECK(prof.cycles[0].fit_residual < 1e-8);

  // w = sqrt(z) + z: (w - z)^2 = z, regular part z
  auto shifted = AlgebraicFunctionDef::from_wpoly(
      {CPoly({0, -1, 1}), CPoly({0, -2}), CPoly({1.0})});
  auto prof2 = ramification_profile(shifted, {0, 0}, 8);
  REQUIRE(prof2.cycles.size() == 1);
  CHECK(prof2.cycles[0].sheets.size() == 2);
  CHECK(std::abs(prof2.cycles[0].regular_part[0]) < 1e-9);
  CHECK(std::abs(prof2.cycles[0].regular_part[1] - 1.0) < 1e-8);

  auto prof3 = ramification_profile(circle_root(), {1, 0}, 8);
  REQUIRE(prof3.cycles.size() == 1);
  CHECK(prof3.cycles[0].regular_part.max_abs() < 1e-9);

  // regular point: all cycles trivial
  auto prof4 = ramification_profile(sqrt_z(), {4, 0}, 8);
  CHECK(prof4.cycles.size() == 2);
}

TEST_CASE("nth root ramifies as one n-cycle") {
  for (int n = 2; n <= 8; ++n) {
    auto prof = ramification_profile(nth_root(n), {0, 0}, 6);
    REQUIRE(prof.cycles.size() == 1);
    CHECK(static_cast<int>(prof.cycles[0].sheets.size()) == n);
    CHECK(prof.cycles[0].regular_part.max_abs() < 1e-8);
  }
}

TEST_CASE("defining polynomial of a composite") {
  // P = x^2, Q = x^3  =>  A(z,w) = w^2 - z^3
  auto f = AlgebraicFunctionDef::from_composite(CPoly({0, 0, 1}), CPoly({0, 0, 0, 1}));
  auto wc = f.defining_polynomial();
  REQUIRE(wc.size() == 3);
  CHECK(wc[1].is_zero());
  CHECK(std::abs(wc[2].c[0] - 1.0) < 1e-7);
  REQUIRE(wc[0].degree() == 3);
  CHECK(std::abs(wc[0].c[3] + 1.0) < 1e-7);
  CHECK(std::abs(wc[0].c[0]) < 1e-7);
}

TEST_CASE("pushforward of the square map") {
  // P = x^2, Q = x^3, Gamma = [1,2] -> gamma = [1,4], g = z^{3/2}, sqrt(1) = 1
  auto Gamma = PiecewisePath::make({Segment::line({1, 0}, {2, 0})}, false);
  auto push = pushforward_assignment(CPoly({0, 0, 1}), CPoly({0, 0, 0, 1}), Gamma, 64);
  CHECK(!push.closes);
  CHECK(std::abs(push.gamma.start() - cplx{1, 0}) < 1e-9);
  CHECK(std::abs(push.gamma.end() - cplx{4, 0}) < 1e-9);
  REQUIRE(push.seed_anchor.size() == 1);
  // the branch at the segment midpoint tracks Gamma: anchor = 1.5, value 1.5^3
  CHECK(std::abs(push.seed_anchor[0] - cplx{1.5, 0}) < 1e-9);

  // interior critical point rejected
  auto bad = PiecewisePath::make({Segment::line({-1, 0}, {1, 0})}, false);
  CHECK_THROWS_AS(pushforward_assignment(CPoly({0, 0, 1}), CPoly::x(), bad, 64),
                  CriticalPointOnPath);
}

TEST_CASE("tracking rejects paths through discriminant points") {
  auto f = sqrt_z();
  BranchGerm g = germ_at(f, {4, 0}, {2, 0});
  auto through_zero = PiecewisePath::make_raw({Segment::line({4, 0}, {-4, 0})}, false);
  CHECK_THROWS_AS(continue_branch(f, g, through_zero), TrackingAmbiguity);
}
