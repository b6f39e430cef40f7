// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "branchcut/catalog.hpp"

using namespace branchcut;

TEST_CASE("sum of branches vanishes for a disjoint auxiliary curve") {
  auto a = catalog_circle_sqrt();
  auto aux = PiecewisePath::make_raw({Segment::line({3, 0.5}, {4, 2})}, false);
  auto s = sum_of_branches(a, aux);
  CHECK(s.evaluated.max_abs() < 1e-12);
}

TEST_CASE("doubled loop branch sums reproduce the ring values") {
  auto a = catalog_doubled_loop_sqrt();
  cplx base = default_base_point(a);
  auto mid = PiecewisePath::make_raw({Segment::polyline({base, {2.0, 1.4}, {1.0, 0.05}})}, false);
  auto F = sum_of_branches(a, mid);
  // + sqrt(z) in the middle ring
  BranchGerm plus = germ_at(a.f, {1.0, 0.05}, std::sqrt(cplx{1.0, 0.05}));
  CHECK(jets_equal(F.evaluated, plus.jet, 1e-6));

  auto core = PiecewisePath::make_raw(
      {Segment::polyline({base, {2.0, 1.4}, {1.0, 0.05}, {0.03, 0.02}})}, false);
  auto F2 = sum_of_branches(a, core);
  CHECK(F2.evaluated.max_abs() < 1e-7);
}

TEST_CASE("word calculus on the interval root") {
  auto a = catalog_interval_root(2);
  CombContext ctx = build_comb_context(a, default_base_point(a));
  REQUIRE(ctx.generators.size() == 2);

  // empty word acts as the identity
  FormalBranchSum x = ctx.make_sum({1, 0});
  auto y = word_action(ctx, LoopWord{}, x);
  CHECK(jets_equal(x.evaluated, y.evaluated, 1e-12));

  // both generators shift by -a (r = 2), so S^{-1} S' kills the sum
  LoopWord w;
  w.letters = {{0, -1}, {1, 1}};
  auto v = word_value(ctx, w);
  CHECK(v.evaluated.max_abs() < 1e-8);

  // each generator alone produces the same nonzero germ
  auto v0 = word_value(ctx, LoopWord{{{0, 1}}});
  auto v1 = word_value(ctx, LoopWord{{{1, 1}}});
  CHECK(v0.evaluated.max_abs() > 0.1);
  CHECK(jets_equal(v0.evaluated, v1.evaluated, 1e-7));
}

TEST_CASE("composition law for words") {
  auto a = catalog_interval_root(3);
  CombContext ctx = build_comb_context(a, default_base_point(a));
  // value(w1 w2) = w2*(value(w1)) + value(w2)
  LoopWord w1{{{0, 1}, {1, -1}}};
  LoopWord w2{{{1, 1}, {0, 1}}};
  LoopWord joined;
  joined.letters = w1.letters;
  for (auto l : w2.letters) joined.letters.push_back(l);
  auto lhs = word_value(ctx, joined);
  auto rhs = word_action(ctx, w2, word_value(ctx, w1));
  CHECK(jets_equal(lhs.evaluated, rhs.evaluated, 1e-9));
}

TEST_CASE("classification of the catalog curves") {
  SUBCASE("rational is trivial") {
    auto a = catalog_rational_circle(true);
    auto v = classify_monodromy(a, default_base_point(a), 8);
    CHECK(v.kind == MonodromyVerdict::Trivial);
  }
  SUBCASE("figure-eight has order 2") {
    auto a = catalog_figure_eight();
    auto v = classify_monodromy(a, default_base_point(a), 8);
    CHECK(v.kind == MonodromyVerdict::Finite);
    CHECK(v.orbit_size == 2);
  }
  SUBCASE("interval root r=2 has order 2") {
    auto a = catalog_interval_root(2);
    auto v = classify_monodromy(a, default_base_point(a), 8);
    CHECK(v.kind == MonodromyVerdict::Finite);
    CHECK(v.orbit_size == 2);
  }
  SUBCASE("interval root r=3 is infinite") {
    auto a = catalog_interval_root(3);
    auto v = classify_monodromy(a, default_base_point(a), 8);
    CHECK(v.kind == MonodromyVerdict::Infinite);
    CHECK(!v.witness.letters.empty());
  }
}

TEST_CASE("homotopy invariance of branch sums") {
  auto a = catalog_figure_eight();
  cplx base = default_base_point(a);
  cplx target{0.45, 0.1};  // inside the left lobe
  auto p1 = PiecewisePath::make_raw(
      {Segment::polyline({base, {0.0, 1.2}, {-0.1, 0.35}, target})}, false);
  auto p2 = PiecewisePath::make_raw(
      {Segment::polyline({base, {0.1, 1.1}, {-0.15, 0.4}, target})}, false);
  auto F1 = sum_of_branches(a, p1);
  auto F2 = sum_of_branches(a, p2);
  CHECK(jets_equal(F1.evaluated, F2.evaluated, 1e-7));

  // a transversality-breaking deformation adds a canceling crossing pair
  auto p3 = PiecewisePath::make_raw(
      {Segment::polyline({base, {0.0, 1.2}, {-0.1, 0.35}, {-0.05, -0.02}, {-0.3, 0.3}, target})},
      false);
  auto F3 = sum_of_branches(a, p3);
  CHECK(jets_equal(F1.evaluated, F3.evaluated, 1e-7));
}

TEST_CASE("local condition report per puncture") {
  // figure-eight: conditions hold at the node, fail at the off-curve branch
  // points 0 and 1
  auto a = catalog_figure_eight();
  CombContext ctx = build_comb_context(a, default_base_point(a));
  auto rep = local_condition_report(ctx);
  CHECK(!rep.all_pass);
  for (const auto& e : rep.entries) {
    if (e.kind == "crossing") CHECK(e.holds);
    if (e.kind == "off-curve") CHECK(!e.holds);
  }

  // rational integrand: everything passes
  auto b = catalog_rational_circle(true);
  CombContext ctxb = build_comb_context(b, default_base_point(b));
  auto repb = local_condition_report(ctxb);
  CHECK(repb.all_pass);
}

TEST_CASE("vanishing tests") {
  CHECK(vanishing_test(catalog_doubled_loop_sqrt()).vanishes_on_D0);
  CHECK(vanishing_test(catalog_rational_circle(false)).vanishes_on_D0);
  CHECK(!vanishing_test(catalog_rational_circle(true)).vanishes_on_D0);
  CHECK(!vanishing_test(catalog_figure_eight()).vanishes_on_D0);
}

TEST_CASE("continuation of the integral along an auxiliary curve") {
  // rational case with closed forms: I_inside - I_outside = 1/t
  auto a = catalog_rational_circle(true);  // g = 1/(z - 0.3)
  // S within one region: continuation equals I_i
  {
    auto S = PiecewisePath::make_raw({Segment::line({2.5, 0.6}, {1.9, -0.8})}, false);
    auto chk = continue_integral(a, S);
    CHECK(chk.max_deviation < 1e-7);
  }
  // S entering the circle, routed clear of the pole at 0.3
  {
    auto S = PiecewisePath::make_raw(
        {Segment::polyline({{2.5, 0.6}, {0.1, 1.2}, {-0.4, -0.3}})}, false);
    auto chk = continue_integral(a, S);
    CHECK(chk.max_deviation < 1e-7);
    // closed-form consistency: the continuation of I_0 = -1/(t - 0.3) is itself,
    // and it must equal I_1 - g at the end of S
    cplx t = S.end();
    cplx i0_cont = -1.0 / (t - 0.3);
    cplx i1 = eval_cauchy(a, t);
    cplx g = 1.0 / (t - 0.3);
    CHECK(std::abs(chk.continued - i0_cont) < 1e-7);
    CHECK(std::abs(chk.continued - (i1 - g)) < 1e-7);
  }
}
