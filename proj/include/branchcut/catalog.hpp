// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef BRANCHCUT_CATALOG_HPP
#define BRANCHCUT_CATALOG_HPP

#include "branchcut/comb.hpp"

namespace branchcut {

// Ready-made integrand assignments exercised throughout the test suites and
// the command line `example` subcommand.

// sqrt(z) on [0,1], positive branch
IntegrandAssignment catalog_interval_sqrt(const Tolerances& tol = {});
// sqrt(z) on the CCW unit circle, continued from +1 (jump at z = 1)
IntegrandAssignment catalog_circle_sqrt(const Tolerances& tol = {});
// sqrt(z) on a doubled CCW loop around the origin
IntegrandAssignment catalog_doubled_loop_sqrt(const Tolerances& tol = {});
// sqrt(z(z-1)) on a figure-eight around 0 and 1
IntegrandAssignment catalog_figure_eight(const Tolerances& tol = {});
// (1-z^2)^{1/r} on [-1,1], positive branch
IntegrandAssignment catalog_interval_root(int r, const Tolerances& tol = {});
// rational integrand on the unit circle; pole at 0.3 (inside) or 2.5 (outside)
IntegrandAssignment catalog_rational_circle(bool pole_inside, const Tolerances& tol = {});
// sqrt(1-z^2) on [-1,1] together with (1/2) sqrt(1-z^2) on the CCW circle |z| = 2
IntegrandAssignment catalog_two_component(const Tolerances& tol = {});
// connected open variant: interval, bridge, CCW loop, bowed return bridge
IntegrandAssignment catalog_connected_variant(const Tolerances& tol = {});

struct ChebyshevSetup {
  CPoly P, Q;
  PushforwardResult push;
  IntegrandAssignment assignment;
  cplx closure_point{};
};
// gamma = T6(Gamma) with Q = T2 + T3, Gamma the interval [-sqrt3/2, sqrt3/2]
// bowed into the upper half plane
ChebyshevSetup catalog_chebyshev(double bow = 0.12, int samples = 600,
                                 const Tolerances& tol = {});

CPoly chebyshev_cpoly(int n);

// a base point in the unbounded region, clear of all marked points
cplx default_base_point(const IntegrandAssignment& a);

// ---- per-example verdict reports ----

struct CheckLine {
  std::string label;
  bool pass = false;
  double measured = 0.0;
  double bound = 0.0;
};

struct ExampleReport {
  int id = 0;
  std::string title;
  std::vector<CheckLine> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

ExampleReport run_example(int id, const Tolerances& tol = {});

}  // namespace branchcut

#endif
