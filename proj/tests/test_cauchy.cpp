// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "branchcut/cauchy.hpp"

using namespace branchcut;

namespace {

// single-component assignment with one seeded segment list
IntegrandAssignment simple_assignment(AlgebraicFunctionDef f, PiecewisePath path,
                                      const std::vector<cplx>& anchors,
                                      const Tolerances& tol = {}) {
  std::vector<SegmentAssignment> seg;
  for (size_t k = 0; k < path.segments.size(); ++k) {
    SegmentAssignment sa;
    sa.anchor_t = 0.5;
    // anchor point at mid-segment
    int pb = path.piece_of_segment_begin[k];
    int pe = k + 1 < path.segments.size() ? path.piece_of_segment_begin[k + 1]
                                          : static_cast<int>(path.pieces.size());
    int npieces = pe - pb;
    double scaled = 0.5 * npieces;
    int pidx = std::min(static_cast<int>(scaled), npieces - 1);
    cplx zmid = path.pieces[static_cast<size_t>(pb + pidx)].point(scaled - pidx);
    sa.seed = germ_at(f, zmid, anchors[k], tol);
    seg.push_back(std::move(sa));
  }
  return IntegrandAssignment::make(std::move(f), {std::move(path)}, {std::move(seg)}, tol);
}

AlgebraicFunctionDef poly_integrand(const CPoly& p) {
  // A(z, w) = w - p(z): single branch w = p(z)
  return AlgebraicFunctionDef::from_wpoly({p * cplx{-1.0}, CPoly({1.0})});
}

}  // namespace

TEST_CASE("Cauchy integral of a polynomial integrand (residue oracle)") {
  // g = z^2 on the CCW unit circle: I(t) = mu(t) g(t)
  auto f = poly_integrand(CPoly({0, 0, 1}));
  auto circ = PiecewisePath::make({Segment::circle({0, 0}, 1.0, true)}, true);
  auto a = simple_assignment(f, circ, {cplx{0.25, 0.0}});  // anchor value near g(-1)=1? value at -1 is 1
  cplx inside = eval_cauchy(a, {0.3, 0.0});
  CHECK(std::abs(inside - cplx{0.09, 0.0}) < 1e-10);
  cplx outside = eval_cauchy(a, {2.5, 1.0});
  CHECK(std::abs(outside) < 1e-10);
  CHECK_THROWS_AS(eval_cauchy(a, {1.0, 0.0}), PointOnCurve);
}

TEST_CASE("square-root integrand on [0,1] matches the elementary antiderivative") {
  auto f = AlgebraicFunctionDef::from_wpoly({CPoly({0, -1}), CPoly({0.0}), CPoly({1.0})});
  auto seg = PiecewisePath::make({Segment::line({0, 0}, {1, 0})}, false);
  auto a = simple_assignment(f, seg, {std::sqrt(cplx{0.5, 0.0})});

  // endpoint 0 carries ramification order 2
  bool found = false;
  for (auto& sp : a.sigma)
    if (std::abs(sp.z) < 1e-9 && sp.kind == SigmaPoint::Endpoint) {
      found = true;
      CHECK(sp.ram_order == 2);
    }
  CHECK(found);

  cplx t{-4.0, 0.0};
  cplx raw = TWO_PI_I * eval_cauchy(a, t);  // the un-normalized integral
  double expected = 2.0 - 4.0 * std::atan(0.5);
  CHECK(std::abs(raw - expected) < 1e-9);

  // closed form 2 - pi i sqrt(t) + sqrt(t) log((1-sqrt t)/(1+sqrt t)), sqrt t = -2i
  cplx st{0.0, -2.0};
  cplx closed = 2.0 - cplx{0.0, PI} * st + st * std::log((1.0 - st) / (1.0 + st));
  CHECK(std::abs(raw - closed) < 1e-9);
}

TEST_CASE("moment sequences") {
  // g = 1/z on the unit circle: m_0 = 2 pi i, higher moments vanish
  auto f = AlgebraicFunctionDef::from_wpoly({CPoly({-1.0}), CPoly::x()});
  auto circ = PiecewisePath::make({Segment::circle({0, 0}, 1.0, true)}, true);
  auto a = simple_assignment(f, circ, {cplx{-1.0, 0.0}});  // w = 1/z at z=-1
  auto table = moment_sequence(a, 6);
  CHECK(std::abs(table.values[0] - TWO_PI_I) < 1e-9);
  for (int k = 1; k <= 6; ++k) CHECK(std::abs(table.values[static_cast<size_t>(k)]) < 1e-9);

  // g = 1 on [0,1]: m_k = 1/(k+1)
  auto fone = poly_integrand(CPoly({1.0}));
  auto seg = PiecewisePath::make({Segment::line({0, 0}, {1, 0})}, false);
  auto b = simple_assignment(fone, seg, {cplx{1.0, 0.0}});
  auto tb = moment_sequence(b, 8);
  for (int k = 0; k <= 8; ++k)
    CHECK(std::abs(tb.values[static_cast<size_t>(k)] - 1.0 / (k + 1)) < 1e-10);
}

TEST_CASE("rational closed forms") {
  auto circ = PiecewisePath::make({Segment::circle({0, 0}, 1.0, true)}, true);
  auto part = build_partition(circ);
  std::vector<PiecewisePath> gam{circ};

  // polynomial: I = mu g
  RationalFn gp{CPoly({0.5, 1.0, 2.0}), CPoly({1.0})};
  auto cf = closed_form_rational(gp, part, gam);
  CHECK(cf.vanishes_on_D0);
  CHECK(std::abs(cf.eval(1, {0.3, 0.1}) - gp.eval({0.3, 0.1})) < 1e-12);
  CHECK(std::abs(cf.eval(0, {3.0, 0.0})) < 1e-12);

  // g = 1/(z-2): pole outside, residue oracle at t=0 in the mu=1 region
  RationalFn g2{CPoly({1.0}), CPoly({-2.0, 1.0})};
  auto cf2 = closed_form_rational(g2, part, gam);
  CHECK(cf2.vanishes_on_D0);
  CHECK(std::abs(cf2.eval(1, {0, 0}) - cplx{-0.5, 0.0}) < 1e-12);

  // g = 1/z: I on D0 equals -1/t
  RationalFn g3{CPoly({1.0}), CPoly::x()};
  auto cf3 = closed_form_rational(g3, part, gam);
  CHECK(!cf3.vanishes_on_D0);
  for (cplx t : {cplx{3, 1}, cplx{-2, 2}, cplx{5, -4}})
    CHECK(std::abs(cf3.eval(0, t) - (-1.0 / t)) < 1e-12);

  RationalFn onγ{CPoly({1.0}), CPoly({-1.0, 1.0})};
  CHECK_THROWS_AS(closed_form_rational(onγ, part, gam), PoleOnCurve);
}

TEST_CASE("quadrature agrees with the rational closed form") {
  // g with poles inside and outside the curve
  // g(z) = (z^2 + 1) / ((z - 0.3) (z - 3))
  CPoly den = CPoly({-0.3, 1.0}) * CPoly({-3.0, 1.0});
  RationalFn g{CPoly({1.0, 0.0, 1.0}), den};
  auto circ = PiecewisePath::make({Segment::circle({0, 0}, 1.0, true)}, true);
  auto part = build_partition(circ);
  std::vector<PiecewisePath> gam{circ};
  auto cf = closed_form_rational(g, part, gam);

  // as a tracked algebraic integrand: A(z,w) = den(z) w - num(z)
  auto f = AlgebraicFunctionDef::from_wpoly({g.num * cplx{-1.0}, den});
  auto a = simple_assignment(f, circ, {g.eval({-1.0, 0.0})});
  for (cplx t : {cplx{0.2, 0.4}, cplx{-0.5, 0.1}, cplx{2.0, 1.0}, cplx{-4.0, 0.5}}) {
    int mu = std::abs(t) < 1 ? 1 : 0;
    CHECK(std::abs(eval_cauchy(a, t) - cf.eval(mu, t)) < 1e-8);
  }
}

TEST_CASE("side-jump law I+ = I- + g across a simple point") {
  auto f = poly_integrand(CPoly({0, 0, 1}));
  auto circ = PiecewisePath::make({Segment::circle({0, 0}, 1.0, true)}, true);
  auto a = simple_assignment(f, circ, {cplx{1.0, 0.0}});
  for (double th : {0.7, 2.4}) {
    cplx z0 = std::polar(1.0, th);
    auto jump = [&](double h) {
      // left of the CCW tangent is the inside
      return eval_cauchy(a, z0 * (1.0 - h)) - eval_cauchy(a, z0 * (1.0 + h));
    };
    cplx v1 = jump(1e-3), v2 = jump(5e-4);
    cplx richardson = 2.0 * v2 - v1;
    CHECK(std::abs(richardson - z0 * z0) < 1e-6);
  }
}

TEST_CASE("endpoint local models") {
  auto f = AlgebraicFunctionDef::from_wpoly({CPoly({0, -1}), CPoly({0.0}), CPoly({1.0})});
  auto seg = PiecewisePath::make({Segment::line({0, 0}, {1, 0})}, false);
  auto a = simple_assignment(f, seg, {std::sqrt(cplx{0.5, 0.0})});

  // sqrt(z) at 0: regular part zero, ramification order 2, no log term
  auto m0 = endpoint_local_model(a, {0, 0}, 8);
  CHECK(m0.ram_order == 2);
  CHECK(m0.finite_ramification);
  CHECK(m0.log_coefficient.max_abs() < 1e-7);

  // at 1 the branch is regular and nonzero: the log term must appear
  auto m1 = endpoint_local_model(a, {1, 0}, 8);
  CHECK(m1.ram_order == 1);
  CHECK(!m1.finite_ramification);
  CHECK(std::abs(m1.log_coefficient.value() - cplx{1.0, 0.0} / TWO_PI_I) < 1e-6);
}

TEST_CASE("cube-root endpoint model") {
  // (1 - z^2)^{1/3} on [-1, 1]: at the endpoint 1 the cycle sum vanishes
  auto f = AlgebraicFunctionDef::from_wpoly(
      {CPoly({-1, 0, 1}), CPoly({0.0}), CPoly({0.0}), CPoly({1.0})});
  auto seg = PiecewisePath::make({Segment::line({-1, 0}, {1, 0})}, false);
  auto a = simple_assignment(f, seg, {cplx{1.0, 0.0}});
  auto m = endpoint_local_model(a, {1, 0}, 6);
  CHECK(m.ram_order == 3);
  CHECK(m.finite_ramification);
}

TEST_CASE("jump local model flags the square root jump on the circle") {
  // g = sqrt(z) continued CCW around the unit circle from 1: jump at 1
  auto f = AlgebraicFunctionDef::from_wpoly({CPoly({0, -1}), CPoly({0.0}), CPoly({1.0})});
  auto circ = PiecewisePath::make({Segment::circle({0, 0}, 1.0, true)}, true);
  // seed at z = -1 (segment midpoint): continued from +1 CCW gives w = +i
  auto a = simple_assignment(f, circ, {cplx{0.0, 1.0}});
  REQUIRE(a.sigma.size() == 1);
  CHECK(a.sigma[0].kind == SigmaPoint::Jump);
  auto m = jump_local_model(a, {1, 0});
  CHECK(!m.finite_ramification);
  CHECK(!m.regular_sums_equal);
  // coefficient (g_r0 - g_r1)/(2 pi i) = (-1 - 1)/(2 pi i) at z = 1
  CHECK(std::abs(m.log_coefficient.value() - cplx{-2.0, 0.0} / TWO_PI_I) < 1e-6);
}

TEST_CASE("no jump at a smooth junction") {
  // polynomial branch split into two segments: the junction is not in Sigma
  auto f = poly_integrand(CPoly({0, 1}));
  auto path = PiecewisePath::make(
      {Segment::line({0, 0}, {1, 1}), Segment::line({1, 1}, {2, 0})}, false);
  auto a = simple_assignment(f, path, {cplx{0.5, 0.5}, cplx{1.5, 0.5}});
  for (auto& sp : a.sigma) CHECK(sp.kind == SigmaPoint::Endpoint);
}
