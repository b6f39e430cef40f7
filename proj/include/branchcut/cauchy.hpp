// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef BRANCHCUT_CAUCHY_HPP
#define BRANCHCUT_CAUCHY_HPP

#include "branchcut/algebraic.hpp"
#include "branchcut/partition.hpp"

namespace branchcut {

// Integrand on one segment of the curve: the tracked branch seeded at an
// anchor parameter, or an explicit parametric pullback (z(s), g(s)) used for
// image curves where the pullback is analytic.
struct SegmentAssignment {
  BranchGerm seed;         // germ at the anchor point (tracked mode)
  double anchor_t = 0.5;   // local parameter of the seed within the segment
  bool parametric = false;
  Piece upstairs{};        // parameter curve for the pullback mode
  CPoly map_P, map_Q;      // z = P(up(s)), g = Q(up(s))
};

struct SigmaPoint {
  enum Kind { Endpoint, CrossingPoint, Jump, Ramification };
  cplx z{};
  Kind kind = Endpoint;
  int component = -1;
  int ram_order = 1;       // local cycle length of the assigned branch, if ramified
};

// The curve, the branch choice on each segment, and the marked point sets.
// gamma may have several connected components.
struct IntegrandAssignment {
  AlgebraicFunctionDef f;
  std::vector<PiecewisePath> components;
  std::vector<std::vector<SegmentAssignment>> assignments;  // per component, per segment
  std::vector<SigmaPoint> sigma;   // marked points on gamma
  std::vector<cplx> sigma1;        // singularities of g off gamma
  Tolerances tol;
  cplx center{};
  double radius = 0.0;             // curve bounding radius around `center`
  double total_length = 0.0;

  static IntegrandAssignment make(AlgebraicFunctionDef f,
                                  std::vector<PiecewisePath> components,
                                  std::vector<std::vector<SegmentAssignment>> assignments,
                                  const Tolerances& tol = {});
  static IntegrandAssignment from_pushforward(const PushforwardResult& push,
                                              const Tolerances& tol = {});

  std::vector<cplx> forbidden_points() const;  // sigma plus sigma1
  double distance(cplx t) const;
  // Branch germ of the assignment at an interior point of a segment.
  BranchGerm germ_on_segment(int component, int segment, double local_t) const;
};

cplx eval_cauchy(const IntegrandAssignment& a, cplx t);

// Taylor coefficients of I at t0: c_m = (1/2 pi i) int g(z) (z - t0)^{-m-1} dz
std::vector<cplx> cauchy_taylor_coeffs(const IntegrandAssignment& a, cplx t0, int M);

struct MomentTable {
  std::vector<cplx> values;
  std::vector<double> errors;
  std::string method;                    // "quadrature" or "exact"
  std::vector<std::string> exact_repr;   // set for exact tables
  double tail_check_error = 0.0;
};

MomentTable moment_sequence(const IntegrandAssignment& a, int K);

// ---- rational closed forms (direct partial-fraction calculus) ----

struct RationalFn {
  CPoly num, den;

  cplx eval(cplx z) const { return num.eval(z) / den.eval(z); }
  bool is_polynomial() const { return den.degree() == 0; }

  struct Pole {
    cplx z{};
    int order = 0;
    std::vector<cplx> principal;  // principal[j] multiplies (z - pole)^{-(j+1)}
  };
  std::vector<Pole> poles() const;
};

struct ClosedFormRational {
  struct PerRegion {
    int region = 0;
    int mu = 0;
    cplx eval(cplx t) const;
    const ClosedFormRational* owner = nullptr;
  };
  RationalFn g;
  std::vector<RationalFn::Pole> poles;
  std::vector<int> pole_mu;        // winding of gamma around each pole
  std::vector<PerRegion> regions;
  bool vanishes_on_D0 = false;     // all poles carry mu = 0

  cplx eval(int region_mu, cplx t) const;
};

ClosedFormRational closed_form_rational(const RationalFn& g, const DomainPartition& partition,
                                        std::span<const PiecewisePath> gamma,
                                        const Tolerances& tol = {});

// ---- local models at marked points ----

struct LocalModel {
  cplx center{};
  int ram_order = 1;        // cycle length n at the point (max of both sides at jumps)
  Jet log_coefficient;      // jet multiplying log(t - center) in the validated model
  bool finite_ramification = false;
  double fit_residual = 0.0;
  bool regular_sums_equal = false;  // jump points: normalized branch sums coincide
};

LocalModel endpoint_local_model(const IntegrandAssignment& a, cplx z0, int jet_order);
LocalModel jump_local_model(const IntegrandAssignment& a, cplx z0, int jet_order = -1);

}  // namespace branchcut

#endif
