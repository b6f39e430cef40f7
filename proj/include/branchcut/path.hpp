// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef BRANCHCUT_PATH_HPP
#define BRANCHCUT_PATH_HPP

#include <optional>
#include <span>

#include "branchcut/common.hpp"

namespace branchcut {

enum class SegKind { Line, Arc, Polyline };

// One user-level segment of a piecewise curve.  Arcs are circular, traversed
// from points[0] to points[1] around `center`; start == end means a full turn.
struct Segment {
  SegKind kind = SegKind::Line;
  std::vector<cplx> points;
  cplx center{};
  bool ccw = true;

  static Segment line(cplx a, cplx b) { return {SegKind::Line, {a, b}, {}, true}; }
  static Segment polyline(std::vector<cplx> pts) { return {SegKind::Polyline, std::move(pts), {}, true}; }
  static Segment arc(cplx a, cplx b, cplx center, bool ccw) { return {SegKind::Arc, {a, b}, center, ccw}; }
  static Segment circle(cplx center, double r, bool ccw, double start_angle = 0.0);
};

// Primitive piece: a line or a circular arc, with its place in the parent path.
struct Piece {
  bool is_arc = false;
  cplx a, b;            // endpoints in traversal order
  cplx center{};        // arc only
  double r = 0.0, ang0 = 0.0, sweep = 0.0;  // arc only; sweep signed (ccw > 0)
  int seg_index = 0;
  double len = 0.0, len_before = 0.0;  // arc length, cumulative length at start

  cplx point(double t) const;     // t in [0,1]
  cplx tangent(double t) const;   // unit tangent
  double length() const { return len; }
};

struct Crossing {
  cplx point{};
  double param_a = 0.0, param_b = 0.0;  // arc-length parameters on the two curves
  int piece_a = -1, piece_b = -1;
  double ta = 0.0, tb = 0.0;            // local piece parameters
  int sign = 0;
};

// Oriented piecewise curve, one connected component.  Immutable after make().
struct PiecewisePath {
  std::vector<Segment> segments;
  bool closed = false;

  std::vector<Piece> pieces;
  std::vector<int> piece_of_segment_begin;  // first piece index per segment
  double diameter = 0.0;
  double eps = 0.0;        // absolute geometric tolerance
  double total_length = 0.0;
  std::vector<Crossing> crossings;  // transversal self-intersections, cached

  // Validates connectivity, closure, and self-intersection transversality.
  static PiecewisePath make(std::vector<Segment> segs, bool closed, const Tolerances& tol = {});

  // Raw variant: builds geometry but skips the self-intersection validation.
  // Used for auxiliary curves, whose self-overlaps are irrelevant.
  static PiecewisePath make_raw(std::vector<Segment> segs, bool closed, const Tolerances& tol = {});

  cplx start() const { return pieces.front().a; }
  cplx end() const { return pieces.back().b; }
  cplx point_at_length(double s) const;
  int piece_at_length(double s, double* t_local) const;
  double distance(cplx z) const;

  PiecewisePath reversed() const;
};

std::vector<Crossing> self_intersections(const PiecewisePath& path);

int winding_number(const PiecewisePath& path, cplx z);
int winding_number(std::span<const PiecewisePath> paths, cplx z);  // closed components only

// Signed crossing sequence of an auxiliary curve against gamma (possibly
// several components), ordered along aux.  sign = +1 when aux passes to the
// left side of gamma.  `forbidden` points must stay clear of aux.
std::vector<Crossing> crossing_sequence(const PiecewisePath& aux,
                                        std::span<const PiecewisePath> gamma,
                                        std::span<const cplx> forbidden,
                                        const Tolerances& tol = {});
std::vector<Crossing> crossing_sequence(const PiecewisePath& aux, const PiecewisePath& gamma,
                                        std::span<const cplx> forbidden,
                                        const Tolerances& tol = {});

double distance_point_piece(cplx z, const Piece& p);

struct PrimitiveHit {
  double ta = 0, tb = 0;
  cplx point{};
};
// Intersections of two primitive pieces; throws OverlapDetected on coincident
// sub-arcs.  Parameters may fall slightly outside [0,1] within eps slack.
std::vector<PrimitiveHit> intersect_primitives(const Piece& A, const Piece& B, double eps);

}  // namespace branchcut

#endif
