// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef BRANCHCUT_ALGEBRAIC_HPP
#define BRANCHCUT_ALGEBRAIC_HPP

#include "branchcut/numeric.hpp"
#include "branchcut/path.hpp"

namespace branchcut {

// A multivalued algebraic integrand.  Either an explicit defining polynomial
// A(z,w) = sum_k wcoef[k](z) w^k, or the composite form g = Q(P^{-1}) whose
// sheets are tracked through the x-fiber {x : P(x) = z}.
struct AlgebraicFunctionDef {
  std::vector<CPoly> wcoef;  // explicit form; empty when composite
  CPoly P, Q;                // composite form
  bool composite = false;
  int n = 0;                                // number of sheets
  std::vector<cplx> discriminant_points;    // branch-point candidates
  double scale = 1.0;                       // size of the singular point cloud

  static AlgebraicFunctionDef from_wpoly(std::vector<CPoly> wcoef);
  static AlgebraicFunctionDef from_composite(CPoly P, CPoly Q);

  // Defining polynomial; for composite form computed as
  // Res_x(P(x) - z, w - Q(x)) on demand (may fail to be square-free when the
  // composite collapses sheets).
  std::vector<CPoly> defining_polynomial() const;

  // The tracked fiber over z: roots of A(z,.) for explicit form, roots of
  // P(x) = z for composite form.
  std::vector<cplx> fiber(cplx z, const std::vector<cplx>* warm = nullptr) const;
  cplx value_of(cplx fiber_pt) const { return composite ? Q.eval(fiber_pt) : fiber_pt; }
  cplx fiber_derivative(cplx z, cplx fiber_pt) const;  // d(fiber)/dz along a sheet

  double min_disc_distance(cplx z) const;
};

struct BranchGerm {
  cplx base{};
  cplx anchor{};  // fiber coordinate of the sheet at base
  Jet jet;        // Taylor jet of the branch value
  int slot = -1;  // position in branches_at(base) ordering, when known
};

std::vector<BranchGerm> branches_at(const AlgebraicFunctionDef& f, cplx z,
                                    const Tolerances& tol = {});
BranchGerm germ_at(const AlgebraicFunctionDef& f, cplx z, cplx anchor_hint,
                   const Tolerances& tol = {});

// Fiber transport along a path; returns the full fiber at the end, with the
// index correspondence to the starting fiber preserved.
std::vector<cplx> track_fiber(const AlgebraicFunctionDef& f, const PiecewisePath& path,
                              const std::vector<cplx>& start_fiber, const Tolerances& tol = {});
// Same, along a straight segment.
std::vector<cplx> track_fiber_segment(const AlgebraicFunctionDef& f, cplx z0, cplx z1,
                                      const std::vector<cplx>& start_fiber,
                                      const Tolerances& tol = {});

BranchGerm continue_branch(const AlgebraicFunctionDef& f, const BranchGerm& germ,
                           const PiecewisePath& path, const Tolerances& tol = {});

struct MonodromyGenerator {
  cplx puncture{};
  PiecewisePath loop;        // tail + circle + reversed tail, based at the basepoint
  std::vector<int> perm;     // sheet i at the basepoint continues to sheet perm[i]
};

struct MonodromyReport {
  cplx basepoint{};
  std::vector<MonodromyGenerator> generators;
  std::vector<int> infinity_perm;   // monodromy along a large circle
  bool transitive = false;
  bool doubly_transitive = false;
  long long order = 0;              // group order if fully enumerated, else a lower bound
  bool order_exact = false;
};

MonodromyReport monodromy_generators(const AlgebraicFunctionDef& f, cplx basepoint,
                                     const Tolerances& tol = {});

// Permutation group utilities (exposed for tests).
struct PermGroupInfo {
  long long order = 0;
  bool order_exact = false;
  bool transitive = false;
  bool doubly_transitive = false;
};
PermGroupInfo analyze_permutation_group(const std::vector<std::vector<int>>& gens, int n,
                                        long long cap = 10080);

struct RamificationProfile {
  cplx point{};
  struct Cycle {
    std::vector<int> sheets;  // fiber indices of the starting fiber, in cycle order
    Jet regular_part;         // integer-power part, a jet in (z - point)
    double fit_residual = 0.0;
  };
  std::vector<Cycle> cycles;
  double circle_radius = 0.0;
  std::vector<cplx> base_fiber;  // fiber at point + circle_radius
};

RamificationProfile ramification_profile(const AlgebraicFunctionDef& f, cplx z0, int jet_order,
                                         const Tolerances& tol = {});

// Image curve gamma = P(Gamma) with the branch assignment g = Q(P^{-1}).
struct PushforwardResult {
  PiecewisePath gamma;                // sampled polyline image
  AlgebraicFunctionDef f;             // composite (P, Q)
  std::vector<Piece> upstairs;        // Gamma pieces, one per gamma segment
  std::vector<cplx> seed_anchor;      // Gamma midpoint per segment (fiber coordinate)
  std::vector<cplx> sigma_points;     // marked points on gamma
  cplx closure_point{};               // P(a) (= P(b) when the image closes up)
  bool closes = false;
};

PushforwardResult pushforward_assignment(const CPoly& P, const CPoly& Q,
                                         const PiecewisePath& Gamma,
                                         int samples_per_piece = 720,
                                         const Tolerances& tol = {});

}  // namespace branchcut

#endif
