// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#include "branchcut/path.hpp"

#include <algorithm>
#include <map>

namespace branchcut {

namespace {

double norm_angle(double a) {
  while (a <= -PI) a += 2.0 * PI;
  while (a > PI) a -= 2.0 * PI;
  return a;
}

}  // namespace

Segment Segment::circle(cplx center, double r, bool ccw, double start_angle) {
  cplx p = center + std::polar(r, start_angle);
  return arc(p, p, center, ccw);
}

cplx Piece::point(double t) const {
  if (!is_arc) return a + t * (b - a);
  return center + std::polar(r, ang0 + t * sweep);
}

cplx Piece::tangent(double t) const {
  if (!is_arc) {
    cplx d = b - a;
    double n = std::abs(d);
    return n > 0 ? d / n : cplx{1.0, 0.0};
  }
  double ang = ang0 + t * sweep;
  cplx radial = std::polar(1.0, ang);
  cplx tan = I_UNIT * radial;
  return sweep >= 0 ? tan : -tan;
}

namespace {

std::vector<Piece> build_pieces(const std::vector<Segment>& segs, std::vector<int>& seg_begin) {
  std::vector<Piece> out;
  seg_begin.clear();
  for (size_t si = 0; si < segs.size(); ++si) {
    const Segment& s = segs[si];
    seg_begin.push_back(static_cast<int>(out.size()));
    if (s.kind == SegKind::Line) {
      if (s.points.size() != 2) throw InputError("line segment needs 2 points");
      Piece p;
      p.a = s.points[0];
      p.b = s.points[1];
      p.seg_index = static_cast<int>(si);
      p.len = std::abs(p.b - p.a);
      out.push_back(p);
    } else if (s.kind == SegKind::Polyline) {
      if (s.points.size() < 2) throw InputError("polyline needs >= 2 points");
      for (size_t i = 0; i + 1 < s.points.size(); ++i) {
        Piece p;
        p.a = s.points[i];
        p.b = s.points[i + 1];
        p.seg_index = static_cast<int>(si);
        p.len = std::abs(p.b - p.a);
        if (p.len == 0.0) continue;
        out.push_back(p);
      }
    } else {
      if (s.points.size() != 2) throw InputError("arc needs start and end points");
      Piece p;
      p.is_arc = true;
      p.a = s.points[0];
      p.b = s.points[1];
      p.center = s.center;
      p.r = std::abs(p.a - s.center);
      double rb = std::abs(p.b - s.center);
      if (p.r <= 0.0 || std::abs(p.r - rb) > 1e-9 * (1.0 + p.r))
        throw InputError("arc endpoints not equidistant from center");
      p.ang0 = std::arg(p.a - s.center);
      double ang1 = std::arg(p.b - s.center);
      double sweep = ang1 - p.ang0;
      if (s.ccw) {
        while (sweep <= 1e-12) sweep += 2.0 * PI;
      } else {
        while (sweep >= -1e-12) sweep -= 2.0 * PI;
      }
      p.sweep = sweep;
      p.seg_index = static_cast<int>(si);
      p.len = p.r * std::abs(p.sweep);
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace

// All intersections of two primitive pieces, parameters unclamped.
std::vector<PrimitiveHit> intersect_primitives(const Piece& A, const Piece& B, double eps) {
  std::vector<PrimitiveHit> hits;
  auto in01 = [&](double t, double slack) { return t >= -slack && t <= 1.0 + slack; };

  if (!A.is_arc && !B.is_arc) {
    cplx d1 = A.b - A.a, d2 = B.b - B.a;
    double den = cross(d1, d2);
    double scale = std::abs(d1) * std::abs(d2);
    if (std::abs(den) < 1e-14 * (scale + 1.0)) {
      // parallel; collinear overlap check
      double off = cross(d2, A.a - B.a) / (std::abs(d2) + 1e-300);
      if (std::abs(off) < eps) {
        // project A endpoints on B
        double L2 = dot(d2, d2);
        double u0 = dot(A.a - B.a, d2) / L2, u1 = dot(A.b - B.a, d2) / L2;
        double lo = std::max(std::min(u0, u1), 0.0), hi = std::min(std::max(u0, u1), 1.0);
        if (hi - lo > eps / (std::abs(d2) + 1e-300))
          throw OverlapDetected("collinear overlapping segments");
      }
      return hits;
    }
    double ta = cross(B.a - A.a, d2) / den;
    double tb = cross(B.a - A.a, d1) / den;
    double slack_a = eps / (std::abs(d1) + 1e-300), slack_b = eps / (std::abs(d2) + 1e-300);
    if (in01(ta, slack_a) && in01(tb, slack_b)) hits.push_back({ta, tb, A.point(ta)});
    return hits;
  }

  if (A.is_arc && B.is_arc) {
    cplx d = B.center - A.center;
    double D = std::abs(d);
    if (D < eps && std::abs(A.r - B.r) < eps) {
      // same circle: overlap iff the angular ranges intersect on more than a point
      auto covers = [&](const Piece& P, double ang) {
        double rel = P.sweep >= 0 ? norm_angle(ang - P.ang0) : norm_angle(P.ang0 - ang);
        if (rel < 0) rel += 2.0 * PI;
        return rel <= std::abs(P.sweep) + 1e-12;
      };
      double probe = A.ang0 + 0.5 * A.sweep;
      if (covers(B, probe) || covers(A, B.ang0 + 0.5 * B.sweep))
        throw OverlapDetected("coincident arcs");
      return hits;
    }
    if (D < 1e-300) return hits;
    double a = (A.r * A.r - B.r * B.r + D * D) / (2.0 * D);
    double h2 = A.r * A.r - a * a;
    if (h2 < -eps * (A.r + 1.0)) return hits;
    double h = h2 > 0 ? std::sqrt(h2) : 0.0;
    cplx base = A.center + a * d / D;
    cplx off = I_UNIT * d / D * h;
    for (cplx p : {base + off, base - off}) {
      double angA = std::arg(p - A.center), angB = std::arg(p - B.center);
      double ta = norm_angle(angA - A.ang0) / A.sweep;
      if (ta < 0) ta += 2.0 * PI / std::abs(A.sweep);
      double tb = norm_angle(angB - B.ang0) / B.sweep;
      if (tb < 0) tb += 2.0 * PI / std::abs(B.sweep);
      double slack_a = eps / (A.len + 1e-300), slack_b = eps / (B.len + 1e-300);
      if (in01(ta, slack_a) && in01(tb, slack_b)) hits.push_back({ta, tb, p});
      if (h == 0.0) break;
    }
    return hits;
  }

  // line-arc (order so that A is the line)
  bool flipped = A.is_arc;
  const Piece& L = flipped ? B : A;
  const Piece& C = flipped ? A : B;
  cplx d = L.b - L.a, m = L.a - C.center;
  double qa = dot(d, d), qb = 2.0 * dot(m, d), qc = dot(m, m) - C.r * C.r;
  double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0) return hits;
  double sq = std::sqrt(disc);
  for (double tl : {(-qb - sq) / (2 * qa), (-qb + sq) / (2 * qa)}) {
    cplx p = L.a + tl * d;
    double ang = std::arg(p - C.center);
    double tc = norm_angle(ang - C.ang0) / C.sweep;
    if (tc < 0) tc += 2.0 * PI / std::abs(C.sweep);
    double slack_l = eps / (L.len + 1e-300), slack_c = eps / (C.len + 1e-300);
    if (in01(tl, slack_l) && in01(tc, slack_c)) {
      if (flipped)
        hits.push_back({tc, tl, p});
      else
        hits.push_back({tl, tc, p});
    }
    if (sq == 0.0) break;
  }
  return hits;
}

double distance_point_piece(cplx z, const Piece& p) {
  if (!p.is_arc) {
    cplx d = p.b - p.a;
    double L2 = dot(d, d);
    if (L2 == 0.0) return std::abs(z - p.a);
    double t = std::clamp(dot(z - p.a, d) / L2, 0.0, 1.0);
    return std::abs(z - (p.a + t * d));
  }
  double ang = std::arg(z - p.center);
  double rel = p.sweep >= 0 ? norm_angle(ang - p.ang0) : norm_angle(p.ang0 - ang);
  if (rel < 0) rel += 2.0 * PI;
  if (rel <= std::abs(p.sweep))
    return std::abs(std::abs(z - p.center) - p.r);
  return std::min(std::abs(z - p.a), std::abs(z - p.b));
}

double PiecewisePath::distance(cplx z) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& p : pieces) d = std::min(d, distance_point_piece(z, p));
  return d;
}

cplx PiecewisePath::point_at_length(double s) const {
  double t;
  int pi = piece_at_length(s, &t);
  return pieces[static_cast<size_t>(pi)].point(t);
}

int PiecewisePath::piece_at_length(double s, double* t_local) const {
  s = std::clamp(s, 0.0, total_length);
  for (size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    if (s <= p.len_before + p.len || i + 1 == pieces.size()) {
      *t_local = p.len > 0 ? std::clamp((s - p.len_before) / p.len, 0.0, 1.0) : 0.0;
      return static_cast<int>(i);
    }
  }
  *t_local = 0.0;
  return 0;
}

namespace {

struct PathBuildResult {
  PiecewisePath path;
};

PiecewisePath build_common(std::vector<Segment> segs, bool closed, const Tolerances& tol) {
  PiecewisePath p;
  p.segments = std::move(segs);
  p.closed = closed;
  p.pieces = build_pieces(p.segments, p.piece_of_segment_begin);
  if (p.pieces.empty()) throw InputError("empty path");

  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (const auto& pc : p.pieces) {
    for (cplx q : {pc.a, pc.b}) {
      lo_x = std::min(lo_x, q.real());
      hi_x = std::max(hi_x, q.real());
      lo_y = std::min(lo_y, q.imag());
      hi_y = std::max(hi_y, q.imag());
    }
    if (pc.is_arc) {
      lo_x = std::min(lo_x, pc.center.real() - pc.r);
      hi_x = std::max(hi_x, pc.center.real() + pc.r);
      lo_y = std::min(lo_y, pc.center.imag() - pc.r);
      hi_y = std::max(hi_y, pc.center.imag() + pc.r);
    }
  }
  p.diameter = std::hypot(hi_x - lo_x, hi_y - lo_y);
  if (p.diameter == 0.0) throw InputError("degenerate path of zero extent");
  p.eps = tol.eps_geom_rel * p.diameter;

  double acc = 0.0;
  for (auto& pc : p.pieces) {
    pc.len_before = acc;
    acc += pc.len;
  }
  p.total_length = acc;

  for (size_t i = 0; i + 1 < p.pieces.size(); ++i)
    if (std::abs(p.pieces[i].b - p.pieces[i + 1].a) > p.eps)
      throw InputError("consecutive segment endpoints do not coincide");
  if (closed && std::abs(p.pieces.back().b - p.pieces.front().a) > p.eps)
    throw NotClosed("closed path does not return to its start");
  return p;
}

// Self-intersection detection with support for multi-visit vertices: a point
// where the path passes through twice counts as one transversal crossing,
// provided the four local directions alternate between the two visits.
std::vector<Crossing> detect_self_intersections(const PiecewisePath& p, const Tolerances& tol) {
  const double eps = p.eps;
  size_t n = p.pieces.size();

  auto adjacent = [&](size_t i, size_t j) {
    if (i == j) return true;
    size_t lo = std::min(i, j), hi = std::max(i, j);
    if (hi == lo + 1) return true;
    if (p.closed && lo == 0 && hi == n - 1) return true;
    return false;
  };

  struct VertexEnd {  // one local arm at a shared point
    size_t piece;
    bool outgoing;    // arm points along traversal
    double angle;
    int visit;        // index of the path passage this arm belongs to
  };

  std::vector<Crossing> out;
  // Ends of pieces, grouped by location, to recognize repeated path vertices.
  struct VisitPoint {
    cplx pos;
    std::vector<std::pair<size_t, bool>> ends;  // (piece, is_end_of_piece)
  };
  std::vector<VisitPoint> clusters;
  auto add_end = [&](cplx q, size_t piece, bool is_end) {
    for (auto& c : clusters)
      if (std::abs(c.pos - q) <= eps) {
        c.ends.push_back({piece, is_end});
        return;
      }
    clusters.push_back({q, {{piece, is_end}}});
  };
  for (size_t i = 0; i < n; ++i) {
    add_end(p.pieces[i].a, i, false);
    add_end(p.pieces[i].b, i, true);
  }

  // interior-interior crossings; adjacency only excuses the shared endpoint
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      bool adj = adjacent(i, j);
      const Piece& A = p.pieces[i];
      const Piece& B = p.pieces[j];
      // bbox filter
      auto bbox = [&](const Piece& q, double& x0, double& x1, double& y0, double& y1) {
        x0 = std::min(q.a.real(), q.b.real());
        x1 = std::max(q.a.real(), q.b.real());
        y0 = std::min(q.a.imag(), q.b.imag());
        y1 = std::max(q.a.imag(), q.b.imag());
        if (q.is_arc) {
          x0 = std::min(x0, q.center.real() - q.r);
          x1 = std::max(x1, q.center.real() + q.r);
          y0 = std::min(y0, q.center.imag() - q.r);
          y1 = std::max(y1, q.center.imag() + q.r);
        }
      };
      double ax0, ax1, ay0, ay1, bx0, bx1, by0, by1;
      bbox(A, ax0, ax1, ay0, ay1);
      bbox(B, bx0, bx1, by0, by1);
      if (ax1 + eps < bx0 || bx1 + eps < ax0 || ay1 + eps < by0 || by1 + eps < ay0) continue;

      for (const auto& h : intersect_primitives(A, B, eps)) {
        double da = std::min(h.ta, 1.0 - h.ta) * A.len;
        double db = std::min(h.tb, 1.0 - h.tb) * B.len;
        bool a_interior = da > eps, b_interior = db > eps;
        if (a_interior && b_interior) {
          cplx u = A.tangent(h.ta), v = B.tangent(h.tb);
          double ang = std::abs(cross(u, v));
          if (ang < std::sin(tol.theta_min))
            throw TangentialIntersection("tangential self-intersection near (" +
                                         std::to_string(h.point.real()) + "," +
                                         std::to_string(h.point.imag()) + ")");
          Crossing c;
          c.point = h.point;
          c.piece_a = static_cast<int>(i);
          c.piece_b = static_cast<int>(j);
          c.ta = h.ta;
          c.tb = h.tb;
          c.param_a = A.len_before + h.ta * A.len;
          c.param_b = B.len_before + h.tb * B.len;
          c.sign = cross(u, v) > 0 ? 1 : -1;
          out.push_back(c);
        } else if (!adj && a_interior != b_interior) {
          // endpoint of one piece in the interior of a non-adjacent piece:
          // legal only if that endpoint is a repeated path vertex handled
          // below -- i.e. another piece continues from the same point and the
          // joint passage crosses.  A bare T-contact is rejected.
          cplx endpoint = a_interior ? (h.tb < 0.5 ? B.a : B.b) : (h.ta < 0.5 ? A.a : A.b);
          bool repeated = false;
          for (const auto& cl : clusters)
            if (std::abs(cl.pos - endpoint) <= eps && cl.ends.size() >= 4) repeated = true;
          if (!repeated)
            throw DegenerateContact("segment endpoint touches the interior of another segment");
        }
      }
    }
  }

  // repeated path vertices: clusters visited more than once
  for (const auto& cl : clusters) {
    // assemble arms with visit identity; a visit is a maximal (in,out) pair of
    // consecutive pieces at this point (wrap-around for closed paths)
    std::vector<VertexEnd> arms;
    std::vector<std::pair<int, int>> visits;  // (piece-in or -1, piece-out or -1)
    std::vector<std::pair<size_t, bool>> ends = cl.ends;
    std::sort(ends.begin(), ends.end());
    std::vector<bool> used(ends.size(), false);
    for (size_t k = 0; k < ends.size(); ++k) {
      if (used[k]) continue;
      auto [piece, is_end] = ends[k];
      int vin = -1, vout = -1;
      if (is_end) {
        vin = static_cast<int>(piece);
        size_t nxt = piece + 1;
        if (p.closed && nxt == n) nxt = 0;
        for (size_t m = 0; m < ends.size(); ++m)
          if (!used[m] && m != k && ends[m].first == nxt && !ends[m].second) {
            vout = static_cast<int>(nxt);
            used[m] = true;
            break;
          }
      } else {
        vout = static_cast<int>(piece);
        if (piece > 0 || p.closed) {
          size_t prv = piece == 0 ? n - 1 : piece - 1;
          for (size_t m = 0; m < ends.size(); ++m)
            if (!used[m] && m != k && ends[m].first == prv && ends[m].second) {
              vin = static_cast<int>(prv);
              used[m] = true;
              break;
            }
        }
      }
      used[k] = true;
      visits.push_back({vin, vout});
    }
    if (visits.size() < 2) continue;  // ordinary corner or open endpoint
    if (visits.size() > 2)
      throw DegenerateContact("more than two path passages through one point");

    for (size_t v = 0; v < visits.size(); ++v) {
      auto [vin, vout] = visits[v];
      if (vin >= 0) {
        const Piece& q = p.pieces[static_cast<size_t>(vin)];
        arms.push_back({static_cast<size_t>(vin), false, std::arg(-q.tangent(1.0)), static_cast<int>(v)});
      }
      if (vout >= 0) {
        const Piece& q = p.pieces[static_cast<size_t>(vout)];
        arms.push_back({static_cast<size_t>(vout), true, std::arg(q.tangent(0.0)), static_cast<int>(v)});
      }
    }
    if (arms.size() != 4)
      throw DegenerateContact("open endpoint meets the curve at a repeated vertex");

    std::sort(arms.begin(), arms.end(), [](const VertexEnd& x, const VertexEnd& y) {
      return x.angle < y.angle;
    });
    for (size_t k = 0; k < 4; ++k) {
      double gap = std::abs(norm_angle(arms[(k + 1) % 4].angle - arms[k].angle));
      if (arms[(k + 1) % 4].visit != arms[k].visit && gap < tol.theta_min)
        throw TangentialIntersection("tangential contact at repeated vertex");
    }
    bool alternating = arms[0].visit != arms[1].visit && arms[1].visit != arms[2].visit &&
                       arms[2].visit != arms[3].visit;
    if (!alternating)
      throw DegenerateContact("path touches itself without crossing at a repeated vertex");

    // record one crossing, outgoing arm directions standing in for tangents
    cplx dir0{}, dir1{};
    for (auto [vin, vout] : visits) {
      cplx d = vout >= 0 ? p.pieces[static_cast<size_t>(vout)].tangent(0.0)
                         : -p.pieces[static_cast<size_t>(vin)].tangent(1.0);
      if (dir0 == cplx{}) dir0 = d; else dir1 = d;
    }
    Crossing c;
    c.point = cl.pos;
    auto arc_param = [&](int vin, int vout) {
      if (vin >= 0) {
        const Piece& q = p.pieces[static_cast<size_t>(vin)];
        return q.len_before + q.len;
      }
      return p.pieces[static_cast<size_t>(vout)].len_before;
    };
    c.param_a = arc_param(visits[0].first, visits[0].second);
    c.param_b = arc_param(visits[1].first, visits[1].second);
    c.piece_a = visits[0].second >= 0 ? visits[0].second : visits[0].first;
    c.piece_b = visits[1].second >= 0 ? visits[1].second : visits[1].first;
    c.ta = visits[0].second >= 0 ? 0.0 : 1.0;
    c.tb = visits[1].second >= 0 ? 0.0 : 1.0;
    c.sign = cross(dir0, dir1) > 0 ? 1 : -1;
    out.push_back(c);
  }

  std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
    return x.param_a < y.param_a;
  });
  return out;
}

}  // namespace

PiecewisePath PiecewisePath::make(std::vector<Segment> segs, bool closed, const Tolerances& tol) {
  PiecewisePath p = build_common(std::move(segs), closed, tol);
  p.crossings = detect_self_intersections(p, tol);
  return p;
}

PiecewisePath PiecewisePath::make_raw(std::vector<Segment> segs, bool closed, const Tolerances& tol) {
  return build_common(std::move(segs), closed, tol);
}

PiecewisePath PiecewisePath::reversed() const {
  std::vector<Segment> segs;
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    Segment s = *it;
    std::reverse(s.points.begin(), s.points.end());
    if (s.kind == SegKind::Arc) s.ccw = !s.ccw;
    segs.push_back(std::move(s));
  }
  Tolerances t;
  t.eps_geom_rel = eps / diameter;
  return make_raw(std::move(segs), closed, t);
}

std::vector<Crossing> self_intersections(const PiecewisePath& path) { return path.crossings; }

namespace {

// total turning of arg(w - z) along one piece
double darg_piece(const Piece& p, cplx z, double eps) {
  if (!p.is_arc) {
    if (distance_point_piece(z, p) <= eps) throw PointOnCurve("query point on the curve");
    return std::arg((p.b - z) / (p.a - z));
  }
  double d = distance_point_piece(z, p);
  if (d <= eps) throw PointOnCurve("query point on the curve");
  int steps = std::max(4, static_cast<int>(std::ceil(p.len / std::max(d, 1e-12))));
  steps = std::min(steps, 1 << 20);
  double acc = 0.0;
  cplx prev = p.a;
  for (int k = 1; k <= steps; ++k) {
    cplx cur = p.point(static_cast<double>(k) / steps);
    acc += std::arg((cur - z) / (prev - z));
    prev = cur;
  }
  return acc;
}

}  // namespace

int winding_number(const PiecewisePath& path, cplx z) {
  if (!path.closed) throw NotClosed("winding number needs a closed path");
  double acc = 0.0;
  for (const auto& p : path.pieces) acc += darg_piece(p, z, path.eps);
  double turns = acc / (2.0 * PI);
  double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.25)
    throw Error("winding number residual too large: " + std::to_string(turns));
  return static_cast<int>(rounded);
}

int winding_number(std::span<const PiecewisePath> paths, cplx z) {
  int mu = 0;
  for (const auto& p : paths)
    if (p.closed) mu += winding_number(p, z);
  return mu;
}

std::vector<Crossing> crossing_sequence(const PiecewisePath& aux,
                                        std::span<const PiecewisePath> gamma,
                                        std::span<const cplx> forbidden,
                                        const Tolerances& tol) {
  double margin = 0.0;
  for (const auto& g : gamma) margin = std::max(margin, 10.0 * g.eps);
  margin = std::max(margin, 10.0 * aux.eps);
  for (cplx f : forbidden)
    if (aux.distance(f) < margin)
      throw NotAdmissible("auxiliary curve passes through a forbidden point near (" +
                          std::to_string(f.real()) + "," + std::to_string(f.imag()) + ")");

  std::vector<Crossing> out;
  for (const auto& g : gamma) {
    double eps = std::max(aux.eps, g.eps);
    for (size_t i = 0; i < aux.pieces.size(); ++i) {
      const Piece& A = aux.pieces[i];
      for (size_t j = 0; j < g.pieces.size(); ++j) {
        const Piece& B = g.pieces[j];
        for (const auto& h : intersect_primitives(A, B, eps)) {
          double da = std::min(h.ta, 1.0 - h.ta) * A.len;
          double db = std::min(h.tb, 1.0 - h.tb) * B.len;
          if (da <= eps) {
            bool at_start = h.ta < 0.5;
            if ((at_start && i == 0) || (!at_start && i + 1 == aux.pieces.size()))
              throw NotAdmissible("auxiliary curve endpoint lies on gamma");
            if (at_start) continue;  // counted as the previous piece's end hit
          }
          if (db <= eps) {
            // crossing at a gamma vertex: admissible curves must avoid these
            bool smooth_junction = false;
            size_t other = h.tb > 0.5 ? j + 1 : (j == 0 ? g.pieces.size() - 1 : j - 1);
            if (other < g.pieces.size()) {
              const Piece& B2 = g.pieces[other];
              cplx t1 = B.tangent(h.tb), t2 = B2.tangent(h.tb > 0.5 ? 0.0 : 1.0);
              smooth_junction = std::abs(cross(t1, t2)) < std::sin(tol.theta_min) && dot(t1, t2) > 0;
            }
            if (!smooth_junction)
              throw NotAdmissible("auxiliary curve crosses gamma at a non-interior point");
            if (h.tb > 0.5) continue;  // count the junction once, on the incoming piece
          }
          cplx u = A.tangent(h.ta), v = B.tangent(h.tb);
          double s = cross(v, u);
          if (std::abs(s) < std::sin(tol.theta_min))
            throw NotAdmissible("non-transversal crossing of auxiliary curve with gamma");
          Crossing c;
          c.point = h.point;
          c.piece_a = static_cast<int>(i);
          c.piece_b = static_cast<int>(j);
          c.ta = h.ta;
          c.tb = h.tb;
          c.param_a = A.len_before + h.ta * A.len;
          c.param_b = B.len_before + h.tb * B.len;
          c.sign = s > 0 ? 1 : -1;
          out.push_back(c);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
    return x.param_a < y.param_a;
  });
  // drop duplicates from seam double-counting
  out.erase(std::unique(out.begin(), out.end(), [&](const Crossing& x, const Crossing& y) {
              return std::abs(x.point - y.point) < 1e-12 &&
                     std::abs(x.param_a - y.param_a) < 1e-9;
            }),
            out.end());
  return out;
}

std::vector<Crossing> crossing_sequence(const PiecewisePath& aux, const PiecewisePath& gamma,
                                        std::span<const cplx> forbidden, const Tolerances& tol) {
  return crossing_sequence(aux, std::span<const PiecewisePath>(&gamma, 1), forbidden, tol);
}

}  // namespace branchcut
