// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#include "branchcut/catalog.hpp"

#include <algorithm>

namespace branchcut {

namespace {

AlgebraicFunctionDef sqrt_z() {
  return AlgebraicFunctionDef::from_wpoly({CPoly({0, -1}), CPoly({0.0}), CPoly({1.0})});
}

cplx segment_midpoint(const PiecewisePath& path, size_t seg) {
  int pb = path.piece_of_segment_begin[seg];
  int pe = seg + 1 < path.segments.size() ? path.piece_of_segment_begin[seg + 1]
                                          : static_cast<int>(path.pieces.size());
  int n = pe - pb;
  double scaled = 0.5 * n;
  int pidx = std::min(static_cast<int>(scaled), n - 1);
  return path.pieces[static_cast<size_t>(pb + pidx)].point(scaled - pidx);
}

IntegrandAssignment seeded(AlgebraicFunctionDef f, PiecewisePath path,
                           const std::vector<cplx>& anchors, const Tolerances& tol) {
  std::vector<SegmentAssignment> seg;
  for (size_t k = 0; k < path.segments.size(); ++k) {
    SegmentAssignment sa;
    sa.anchor_t = 0.5;
    sa.seed = germ_at(f, segment_midpoint(path, k), anchors[k], tol);
    seg.push_back(std::move(sa));
  }
  return IntegrandAssignment::make(std::move(f), {std::move(path)}, {std::move(seg)}, tol);
}

}  // namespace

CPoly chebyshev_cpoly(int n) {
  CPoly t0({1.0}), t1({0.0, 1.0});
  if (n == 0) return t0;
  for (int k = 1; k < n; ++k) {
    CPoly t2 = CPoly({0.0, 2.0}) * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

IntegrandAssignment catalog_interval_sqrt(const Tolerances& tol) {
  auto seg = PiecewisePath::make({Segment::line({0, 0}, {1, 0})}, false, tol);
  return seeded(sqrt_z(), std::move(seg), {std::sqrt(cplx{0.5, 0.0})}, tol);
}

IntegrandAssignment catalog_circle_sqrt(const Tolerances& tol) {
  auto circ = PiecewisePath::make({Segment::circle({0, 0}, 1.0, true)}, true, tol);
  // continued CCW from +1: at the midpoint z = -1 the branch value is +i
  return seeded(sqrt_z(), std::move(circ), {cplx{0.0, 1.0}}, tol);
}

IntegrandAssignment catalog_doubled_loop_sqrt(const Tolerances& tol) {
  int n = 480;
  std::vector<cplx> pts;
  for (int k = 0; k <= n; ++k) {
    double th = 4.0 * PI * k / n;
    pts.push_back(std::polar(1.0 + 0.3 * std::cos(0.5 * th), th));
  }
  pts.back() = pts.front();
  auto path = PiecewisePath::make({Segment::polyline(pts)}, true, tol);
  // one full turn from the start flips the root: at theta = 2 pi the value is
  // -sqrt(0.7)
  return seeded(sqrt_z(), std::move(path), {-std::sqrt(cplx{0.7, 0.0})}, tol);
}

IntegrandAssignment catalog_figure_eight(const Tolerances& tol) {
  std::vector<cplx> pts = {
      {0.5, 0}, {0.3, 0.45}, {-0.6, 0.5}, {-0.75, 0}, {-0.6, -0.5}, {0.3, -0.45},
      {0.5, 0}, {0.7, 0.45}, {1.6, 0.5},  {1.75, 0},  {1.6, -0.5},  {0.7, -0.45},
      {0.5, 0}};
  auto path = PiecewisePath::make({Segment::polyline(pts)}, true, tol);
  // A(z,w) = w^2 - (z^2 - z)
  auto f = AlgebraicFunctionDef::from_wpoly({CPoly({0, 1, -1}), CPoly({0.0}), CPoly({1.0})});
  // segment midpoint is the node z = 0.5: fiber +- i/2, take +i/2
  return seeded(std::move(f), std::move(path), {cplx{0.0, 0.5}}, tol);
}

IntegrandAssignment catalog_interval_root(int r, const Tolerances& tol) {
  std::vector<CPoly> wc(static_cast<size_t>(r) + 1, CPoly({0.0}));
  wc[0] = CPoly({-1, 0, 1});  // -(1 - z^2)
  wc[static_cast<size_t>(r)] = CPoly({1.0});
  auto f = AlgebraicFunctionDef::from_wpoly(std::move(wc));
  auto seg = PiecewisePath::make({Segment::line({-1, 0}, {1, 0})}, false, tol);
  return seeded(std::move(f), std::move(seg), {cplx{1.0, 0.0}}, tol);
}

IntegrandAssignment catalog_rational_circle(bool pole_inside, const Tolerances& tol) {
  cplx pole = pole_inside ? cplx{0.3, 0.0} : cplx{2.5, 0.0};
  // A(z, w) = (z - pole) w - 1, i.e. g = 1/(z - pole)
  auto f = AlgebraicFunctionDef::from_wpoly({CPoly({-1.0}), CPoly({-pole, 1.0})});
  auto circ = PiecewisePath::make({Segment::circle({0, 0}, 1.0, true)}, true, tol);
  return seeded(std::move(f), std::move(circ), {1.0 / (cplx{-1.0, 0.0} - pole)}, tol);
}

namespace {

// branches {sqrt(1-z^2), (1/2) sqrt(1-z^2)} of one quartic:
// (w^2 - (1-z^2)) (4 w^2 - (1-z^2)) = 4 w^4 - 5 (1-z^2) w^2 + (1-z^2)^2
AlgebraicFunctionDef two_scale_root() {
  CPoly s({1, 0, -1});  // 1 - z^2
  CPoly s2 = s * s;
  return AlgebraicFunctionDef::from_wpoly(
      {s2, CPoly({0.0}), s * cplx{-5.0}, CPoly({0.0}), CPoly({4.0})});
}

cplx half_sqrt_upper(cplx z) {  // Phi(z) = (1/2) sqrt(1-z^2), principal on the upper half plane
  return 0.5 * std::sqrt(cplx{1.0, 0.0} - z * z);
}

}  // namespace

IntegrandAssignment catalog_two_component(const Tolerances& tol) {
  auto f = two_scale_root();
  auto interval = PiecewisePath::make({Segment::line({-1, 0}, {1, 0})}, false, tol);
  auto circle = PiecewisePath::make({Segment::circle({0, 0}, 2.0, true, PI / 2)}, true, tol);

  std::vector<SegmentAssignment> si, sc;
  {
    SegmentAssignment sa;
    sa.anchor_t = 0.5;
    sa.seed = germ_at(f, {0, 0}, {1.0, 0.0}, tol);  // + sqrt(1 - z^2)
    si.push_back(sa);
  }
  {
    SegmentAssignment sa;
    sa.anchor_t = 0.5;
    // circle from pi/2 CCW: midpoint at angle 3pi/2 -> z = -2i
    sa.seed = germ_at(f, {0, -2}, 0.5 * std::sqrt(cplx{5.0, 0.0}), tol);
    sc.push_back(sa);
  }
  return IntegrandAssignment::make(f, {interval, circle}, {si, sc}, tol);
}

IntegrandAssignment catalog_connected_variant(const Tolerances& tol) {
  auto f = two_scale_root();
  cplx top{0.0, 2.4};
  std::vector<Segment> segs;
  segs.push_back(Segment::line({-1, 0}, {0, 0}));                    // + sqrt branch
  segs.push_back(Segment::line({0, 0}, top));                        // bridge up, half branch
  segs.push_back(Segment::circle({0, 0}, 2.4, true, PI / 2));        // full CCW loop
  segs.push_back(Segment::polyline({top, {-0.4, 1.9}, {0, 0}}));     // bowed return bridge
  segs.push_back(Segment::line({0, 0}, {1, 0}));                     // + sqrt branch
  auto path = PiecewisePath::make(std::move(segs), false, tol);

  std::vector<SegmentAssignment> sa(5);
  for (auto& s : sa) s.anchor_t = 0.5;
  sa[0].seed = germ_at(f, {-0.5, 0.0}, std::sqrt(cplx{0.75, 0.0}), tol);
  sa[1].seed = germ_at(f, {0.0, 1.2}, half_sqrt_upper({0.0, 1.2}), tol);
  sa[2].seed = germ_at(f, {0.0, -2.4}, 0.5 * std::sqrt(cplx{1.0 + 5.76, 0.0}), tol);
  // bow midpoint: start of its second piece
  sa[3].seed = germ_at(f, {-0.4, 1.9}, half_sqrt_upper({-0.4, 1.9}), tol);
  sa[4].seed = germ_at(f, {0.5, 0.0}, std::sqrt(cplx{0.75, 0.0}), tol);
  return IntegrandAssignment::make(f, {std::move(path)}, {std::move(sa)}, tol);
}

ChebyshevSetup catalog_chebyshev(double bow, int samples, const Tolerances& tol) {
  ChebyshevSetup setup;
  setup.P = chebyshev_cpoly(6);
  setup.Q = chebyshev_cpoly(2) + chebyshev_cpoly(3);
  double a = -std::sqrt(3.0) / 2.0, b = std::sqrt(3.0) / 2.0;
  std::vector<cplx> pts;
  for (int k = 0; k <= samples; ++k) {
    double s = a + (b - a) * k / samples;
    pts.push_back(cplx{s, bow * (0.75 - s * s)});
  }
  auto Gamma = PiecewisePath::make({Segment::polyline(pts)}, false, tol);
  setup.push = pushforward_assignment(setup.P, setup.Q, Gamma, 2, tol);
  setup.assignment = IntegrandAssignment::from_pushforward(setup.push, tol);
  setup.closure_point = setup.push.closure_point;
  return setup;
}

cplx default_base_point(const IntegrandAssignment& a) {
  cplx best{};
  double score = -1.0;
  for (int k = 0; k < 24; ++k) {
    cplx cand = a.center + std::polar(2.4 * std::max(a.radius, 1.0), 2.0 * PI * k / 24 + 0.21);
    double d = std::numeric_limits<double>::infinity();
    for (cplx p : a.forbidden_points()) d = std::min(d, std::abs(cand - p));
    for (cplx p : a.f.discriminant_points) d = std::min(d, std::abs(cand - p));
    if (d > score) {
      score = d;
      best = cand;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

namespace {

void check(ExampleReport& rep, const std::string& label, double measured, double bound) {
  rep.checks.push_back({label, measured <= bound, measured, bound});
}
void check_true(ExampleReport& rep, const std::string& label, bool ok) {
  rep.checks.push_back({label, ok, ok ? 0.0 : 1.0, 0.5});
}

double far_field_norm(const IntegrandAssignment& a, int npts = 20) {
  double worst = 0.0;
  double R = 10.0 * std::max(a.radius, 1.0);
  for (int k = 0; k < npts; ++k) {
    cplx t = a.center + std::polar(R, 2.0 * PI * k / npts + 0.13);
    worst = std::max(worst, std::abs(eval_cauchy(a, t)));
  }
  return worst;
}

}  // namespace

ExampleReport run_example(int id, const Tolerances& tol) {
  ExampleReport rep;
  rep.id = id;
  switch (id) {
    case 1: {
      rep.title = "square root on the interval: closed form and endpoint models";
      auto a = catalog_interval_sqrt(tol);
      cplx raw = TWO_PI_I * eval_cauchy(a, {-4.0, 0.0});
      double expected = 2.0 - 4.0 * std::atan(0.5);
      check(rep, "quadrature matches 2 - 4 atan(1/2) at t = -4", std::abs(raw - expected), 1e-8);
      cplx st{0.0, -2.0};
      cplx closed = 2.0 - cplx{0.0, PI} * st + st * std::log((1.0 - st) / (1.0 + st));
      check(rep, "closed form with sqrt(t) = -2i", std::abs(raw - closed), 1e-8);
      auto m0 = endpoint_local_model(a, {0, 0}, 8);
      check(rep, "no log term at the ramified endpoint 0", m0.log_coefficient.max_abs(), 1e-6);
      check_true(rep, "ramification order 2 at 0", m0.ram_order == 2);
      auto m1 = endpoint_local_model(a, {1, 0}, 8);
      check_true(rep, "log term present at the regular endpoint 1", !m1.finite_ramification);
      break;
    }
    case 2: {
      rep.title = "square root on the circle: jump at 1, infinite monodromy";
      auto a = catalog_circle_sqrt(tol);
      auto m = jump_local_model(a, {1, 0});
      check_true(rep, "nonzero log coefficient at the jump", !m.finite_ramification);
      check(rep, "log coefficient equals (g0 - g1)/(2 pi i)",
            std::abs(m.log_coefficient.value() - cplx{-2.0, 0.0} / TWO_PI_I), 1e-6);
      auto verdict = classify_monodromy(a, default_base_point(a), tol.word_bound);
      check_true(rep, "combinatorial monodromy infinite",
                 verdict.kind == MonodromyVerdict::Infinite);
      break;
    }
    case 3: {
      rep.title = "doubled loop: trivial monodromy and vanishing at infinity";
      auto a = catalog_doubled_loop_sqrt(tol);
      auto verdict = classify_monodromy(a, default_base_point(a), tol.word_bound);
      check_true(rep, "combinatorial monodromy trivial", verdict.kind == MonodromyVerdict::Trivial);
      auto van = vanishing_test(a);
      check_true(rep, "vanishes on the unbounded region", van.vanishes_on_D0);
      check(rep, "far-field integral magnitude", far_field_norm(a), 1e-8);
      // branch sums: + sqrt(z) in the middle ring, zero in the core
      cplx base = default_base_point(a);
      auto mid = PiecewisePath::make_raw(
          {Segment::polyline({base, {2.02, 1.41}, {1.0, 0.05}})}, false, tol);
      auto Fmid = sum_of_branches(a, mid);
      BranchGerm plus = germ_at(a.f, {1.0, 0.05}, std::sqrt(cplx{1.0, 0.05}), tol);
      Jet diff = Fmid.evaluated - plus.jet;
      check(rep, "sum of branches is +sqrt(z) in the middle ring", diff.max_abs(),
            1e-6 * (1.0 + plus.jet.max_abs()));
      auto core = PiecewisePath::make_raw(
          {Segment::polyline({base, {2.02, 1.41}, {1.0, 0.05}, {0.03, 0.02}})}, false, tol);
      auto Fcore = sum_of_branches(a, core);
      check(rep, "sum of branches vanishes in the core", Fcore.evaluated.max_abs(), 1e-7);
      break;
    }
    case 4: {
      rep.title = "figure-eight: algebraic but not rational, order 2";
      auto a = catalog_figure_eight(tol);
      auto verdict = classify_monodromy(a, default_base_point(a), tol.word_bound);
      check_true(rep, "combinatorial monodromy finite", verdict.kind == MonodromyVerdict::Finite);
      check_true(rep, "orbit has order 2", verdict.orbit_size == 2);
      CombContext ctx = build_comb_context(a, default_base_point(a));
      auto rc = local_condition_report(ctx);
      bool off_curve_fails = false;
      for (const auto& e : rc.entries)
        if (e.kind == "off-curve" && !e.holds) off_curve_fails = true;
      check_true(rep, "off-curve branching obstruction detected", off_curve_fails);
      break;
    }
    case 5: {
      rep.title = "interval roots: order 2 for r = 2, infinite for r >= 3";
      for (int r : {2, 3, 4}) {
        auto a = catalog_interval_root(r, tol);
        auto verdict = classify_monodromy(a, default_base_point(a), tol.word_bound);
        if (r == 2) {
          check_true(rep, "r = 2 gives a finite orbit of order 2",
                     verdict.kind == MonodromyVerdict::Finite && verdict.orbit_size == 2);
        } else {
          bool inf = verdict.kind == MonodromyVerdict::Infinite;
          check_true(rep, "r = " + std::to_string(r) + " is infinite with a growth witness", inf);
          if (inf) {
            // witness validation: value(nV) = n value(V) for n = 2,3,4
            CombContext ctx = build_comb_context(a, default_base_point(a));
            auto v1 = word_value(ctx, verdict.witness);
            LoopWord nw;
            double worst = 0.0;
            for (int n = 2; n <= 4; ++n) {
              for (int k = 0; k < n; ++k)
                for (auto l : verdict.witness.letters) nw.letters.push_back(l);
              auto vn = word_value(ctx, nw);
              Jet expect = v1.evaluated * cplx(static_cast<double>(n));
              worst = std::max(worst, (vn.evaluated - expect).max_abs());
              nw.letters.clear();
            }
            check(rep, "linear growth of the witness word (r = " + std::to_string(r) + ")",
                  worst, 1e-7 * (1.0 + v1.evaluated.max_abs()));
          }
        }
      }
      break;
    }
    case 6: {
      rep.title = "rational integrand: always trivial, vanishing iff poles outside";
      for (bool inside : {false, true}) {
        auto a = catalog_rational_circle(inside, tol);
        auto verdict = classify_monodromy(a, default_base_point(a), tol.word_bound);
        check_true(rep, std::string("trivial monodromy (pole ") + (inside ? "inside)" : "outside)"),
                   verdict.kind == MonodromyVerdict::Trivial);
        auto van = vanishing_test(a);
        check_true(rep, inside ? "pole inside blocks vanishing" : "pole outside gives vanishing",
                   van.vanishes_on_D0 == !inside);
      }
      break;
    }
    case 7: {
      rep.title = "interval plus circle: vanishing with nonzero integrand";
      auto a = catalog_two_component(tol);
      auto van = vanishing_test(a);
      check_true(rep, "two-component curve vanishes on D0", van.vanishes_on_D0);
      check(rep, "far-field integral magnitude", far_field_norm(a), 1e-8);
      auto b = catalog_connected_variant(tol);
      auto vanb = vanishing_test(b);
      check_true(rep, "connected open variant vanishes on D0", vanb.vanishes_on_D0);
      check(rep, "far-field magnitude of the connected variant", far_field_norm(b), 1e-8);
      break;
    }
    case 8: {
      rep.title = "Chebyshev image curve: vanishing with a genuine jump";
      auto setup = catalog_chebyshev(0.12, 600, tol);
      auto& a = setup.assignment;
      auto verdict = classify_monodromy(a, default_base_point(a), tol.word_bound);
      check_true(rep, "combinatorial monodromy trivial", verdict.kind == MonodromyVerdict::Trivial);
      auto van = vanishing_test(a);
      check_true(rep, "vanishes on the unbounded region", van.vanishes_on_D0);
      check(rep, "far-field integral magnitude", far_field_norm(a), 1e-8);
      auto m = jump_local_model(a, setup.closure_point);
      check(rep, "zero log coefficient at the closure point", m.log_coefficient.max_abs(),
            1e-6);
      check_true(rep, "normalized branch sums agree across the jump", m.regular_sums_equal);
      auto part = build_partition(std::span<const PiecewisePath>(a.components.data(),
                                                                 a.components.size()),
                                  tol);
      auto depth = point_depth(part, setup.closure_point);
      check_true(rep, "closure point has depth 1", depth.boundary && depth.depth == 1);
      break;
    }
    default:
      throw InputError("example id must be 1..8");
  }
  return rep;
}

}  // namespace branchcut
