// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#include "branchcut/cauchy.hpp"

#include <algorithm>
#include <numeric>

namespace branchcut {

namespace {

cplx piece_velocity(const Piece& p, double t) {
  if (!p.is_arc) return p.b - p.a;
  return I_UNIT * p.sweep * p.r * std::polar(1.0, p.ang0 + t * p.sweep);
}

struct FiberState {
  std::vector<cplx> fib;  // marked sheet at index 0
  cplx z{};
};

void advance(const AlgebraicFunctionDef& f, FiberState& st, cplx znew, const Tolerances& tol) {
  if (std::abs(znew - st.z) == 0.0) return;
  std::vector<cplx> fib = st.fib;
  cplx z0 = st.z;
  // straight-chord adaptive tracking
  int parts = 1;
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<cplx> cur = fib;
    bool ok = true;
    for (int k = 0; k < parts && ok; ++k) {
      cplx za = z0 + (znew - z0) * (static_cast<double>(k) / parts);
      cplx zb = z0 + (znew - z0) * (static_cast<double>(k + 1) / parts);
      std::vector<cplx> pred = cur;
      for (size_t i = 0; i < cur.size() && ok; ++i) {
        cplx d;
        try {
          d = f.fiber_derivative(za, cur[i]);
          pred[i] = cur[i] + d * (zb - za);
        } catch (const NearDiscriminant&) {
          ok = false;
        }
      }
      if (!ok) break;
      std::vector<cplx> corrected;
      try {
        corrected = f.fiber(zb, &pred);
      } catch (const LeadingCoefficientVanishes&) {
        ok = false;
        break;
      }
      double sep = std::numeric_limits<double>::infinity();
      for (size_t i = 0; i < corrected.size(); ++i)
        for (size_t j = i + 1; j < corrected.size(); ++j)
          sep = std::min(sep, std::abs(corrected[i] - corrected[j]));
      for (size_t i = 0; i < corrected.size(); ++i)
        if (std::abs(corrected[i] - pred[i]) > 0.5 * sep) ok = false;
      if (ok) cur = std::move(corrected);
    }
    if (ok) {
      st.fib = std::move(cur);
      st.z = znew;
      return;
    }
    parts *= 2;
  }
  (void)tol;
  throw TrackingAmbiguity("fiber tracking failed inside quadrature");
}

// One integration leg: a run over a single geometric piece, possibly with the
// (1-sigma)^n clustering substitution at the far end.
struct Leg {
  const Piece* geo = nullptr;
  double tau0 = 0.0, tau1 = 1.0;   // traversal from tau0 to tau1 (either order)
  int ram_n = 1;                   // far-end ramification order (line pieces only)
  bool parametric = false;
  const CPoly* P = nullptr;
  const CPoly* Q = nullptr;
  CPoly dP;  // derivative of P, precomputed
  const AlgebraicFunctionDef* f = nullptr;

  double tau(double s) const {
    if (ram_n == 1) return tau0 + (tau1 - tau0) * s;
    return tau1 - (tau1 - tau0) * std::pow(1.0 - s, ram_n);
  }
  double dtau(double s) const {
    if (ram_n == 1) return tau1 - tau0;
    return static_cast<double>(ram_n) * (tau1 - tau0) * std::pow(1.0 - s, ram_n - 1);
  }
  void eval(double s, FiberState* st, const Tolerances& tol, cplx& z, cplx& g, cplx& dz) const {
    double t = tau(s);
    if (parametric) {
      cplx x = geo->point(t);
      z = P->eval(x);
      g = Q->eval(x);
      dz = dP.eval(x) * piece_velocity(*geo, t) * dtau(s);
      return;
    }
    z = geo->point(t);
    advance(*f, *st, z, tol);
    g = f->value_of(st->fib[0]);
    dz = piece_velocity(*geo, t) * dtau(s);
  }
};

using VecIntegrand = std::function<void(cplx z, cplx g, cplx dz, std::span<cplx> out)>;

struct QuadParams {
  double tol_abs = 1e-10;
  bool has_target = false;
  cplx target{};
  int max_depth = 44;
};

void integrate_leg_rec(const Leg& leg, const VecIntegrand& fn, int K, std::span<cplx> out,
                       double* err_accum, double s0, double s1, FiberState* st,
                       const QuadParams& qp, const Tolerances& tol, int depth) {
  const GaussRule& gr = gauss_legendre_16();
  auto gl_on = [&](double a, double b, FiberState* state, std::vector<cplx>& acc) {
    std::vector<cplx> vals(static_cast<size_t>(K));
    for (size_t q = 0; q < gr.x.size(); ++q) {
      double s = 0.5 * (a + b) + 0.5 * (b - a) * gr.x[q];
      cplx z, g, dz;
      leg.eval(s, state, tol, z, g, dz);
      fn(z, g, dz, vals);
      for (int k = 0; k < K; ++k) acc[static_cast<size_t>(k)] += vals[static_cast<size_t>(k)] * (0.5 * (b - a) * gr.w[q]);
    }
  };

  // coarse pass on a copy of the fiber state
  std::vector<cplx> coarse(static_cast<size_t>(K), 0.0);
  {
    FiberState tmp = st ? *st : FiberState{};
    gl_on(s0, s1, st ? &tmp : nullptr, coarse);
  }
  // fine pass: two halves, committing the fiber state
  std::vector<cplx> fine(static_cast<size_t>(K), 0.0);
  FiberState mid_state = st ? *st : FiberState{};
  {
    FiberState* ms = st ? &mid_state : nullptr;
    gl_on(s0, 0.5 * (s0 + s1), ms, fine);
  }
  std::vector<cplx> fine2(static_cast<size_t>(K), 0.0);
  FiberState end_state = mid_state;
  {
    FiberState* es = st ? &end_state : nullptr;
    gl_on(0.5 * (s0 + s1), s1, es, fine2);
  }

  double err = 0.0;
  for (int k = 0; k < K; ++k)
    err = std::max(err, std::abs(coarse[static_cast<size_t>(k)] -
                                 fine[static_cast<size_t>(k)] - fine2[static_cast<size_t>(k)]));

  bool geom_ok = true;
  if (qp.has_target) {
    cplx za = leg.geo->point(leg.tau(s0)), zb = leg.geo->point(leg.tau(s1));
    if (leg.parametric) {
      za = leg.P->eval(za);
      zb = leg.P->eval(zb);
    }
    double chord = std::abs(zb - za);
    Piece seg;
    seg.a = za;
    seg.b = zb;
    seg.len = chord;
    double dist = distance_point_piece(qp.target, seg);
    geom_ok = chord <= 0.5 * dist || chord < 1e-14;
  }

  if ((err < qp.tol_abs && geom_ok) || depth >= qp.max_depth) {
    if (depth >= qp.max_depth && (err > 1e3 * qp.tol_abs || !geom_ok))
      throw QuadratureNotConverged("adaptive quadrature hit the depth limit");
    for (int k = 0; k < K; ++k)
      out[static_cast<size_t>(k)] += fine[static_cast<size_t>(k)] + fine2[static_cast<size_t>(k)];
    if (err_accum) *err_accum += err;
    if (st) *st = end_state;
    return;
  }
  integrate_leg_rec(leg, fn, K, out, err_accum, s0, 0.5 * (s0 + s1), st, qp, tol, depth + 1);
  integrate_leg_rec(leg, fn, K, out, err_accum, 0.5 * (s0 + s1), s1, st, qp, tol, depth + 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// assignment construction

namespace {

// cycle data of the assigned branch approaching a ramification candidate z0
struct LocalCycle {
  int length = 1;
  Jet regular_part;
  double residual = 0.0;
};

LocalCycle branch_cycle_near(const AlgebraicFunctionDef& f, cplx z0, cplx probe_z,
                             cplx probe_anchor, int jet_order, const Tolerances& tol) {
  LocalCycle out;
  if (f.min_disc_distance(z0) > tol.eps_disc * f.scale) {
    // regular point: the cycle is the branch itself
    BranchGerm g = germ_at(f, z0, probe_anchor, tol);
    out.length = 1;
    out.regular_part = g.jet;
    return out;
  }
  RamificationProfile prof = ramification_profile(f, z0, jet_order, tol);
  double rho = prof.circle_radius;
  // carry the probe anchor to the profile's base point z0 + rho without ever
  // pointing at z0: radially out to the circle, then along the circle
  std::vector<cplx> fib = f.fiber(probe_z);
  size_t mark = 0;
  for (size_t i = 1; i < fib.size(); ++i)
    if (std::abs(fib[i] - probe_anchor) < std::abs(fib[mark] - probe_anchor)) mark = i;
  std::swap(fib[0], fib[mark]);
  cplx offset = probe_z - z0;
  if (std::abs(offset) < 1e-12 * (1.0 + std::abs(z0)))
    throw Error("probe point coincides with the marked point");
  cplx on_circle = z0 + rho * offset / std::abs(offset);
  std::vector<cplx> moved = track_fiber_segment(f, probe_z, on_circle, fib, tol);
  double th = std::arg(offset);
  int steps = std::max(8, static_cast<int>(std::ceil(std::abs(th) / 0.2)));
  for (int k = 1; k <= steps; ++k) {
    cplx za = z0 + std::polar(rho, th * (1.0 - static_cast<double>(k - 1) / steps));
    cplx zb = z0 + std::polar(rho, th * (1.0 - static_cast<double>(k) / steps));
    moved = track_fiber_segment(f, za, zb, moved, tol);
  }
  // identify within the profile's base fiber at z0 + rho
  size_t slot = 0;
  for (size_t i = 1; i < prof.base_fiber.size(); ++i)
    if (std::abs(prof.base_fiber[i] - moved[0]) < std::abs(prof.base_fiber[slot] - moved[0]))
      slot = i;
  for (const auto& cyc : prof.cycles) {
    if (std::find(cyc.sheets.begin(), cyc.sheets.end(), static_cast<int>(slot)) !=
        cyc.sheets.end()) {
      out.length = static_cast<int>(cyc.sheets.size());
      out.regular_part = cyc.regular_part;
      out.residual = cyc.fit_residual;
      return out;
    }
  }
  throw Error("branch cycle identification failed");
}

// distance-controlled probe: a point of the segment within the profile circle
double probe_parameter(const IntegrandAssignment& a, int ci, int si, bool segment_ends_at_z0,
                       cplx z0, double rho);

}  // namespace

IntegrandAssignment IntegrandAssignment::make(AlgebraicFunctionDef f,
                                              std::vector<PiecewisePath> components,
                                              std::vector<std::vector<SegmentAssignment>> assignments,
                                              const Tolerances& tol) {
  IntegrandAssignment a;
  a.f = std::move(f);
  a.components = std::move(components);
  a.assignments = std::move(assignments);
  a.tol = tol;
  if (a.components.size() != a.assignments.size())
    throw InputError("one assignment list per component required");

  double lox = 1e300, hix = -1e300, loy = 1e300, hiy = -1e300;
  for (const auto& c : a.components) {
    a.total_length += c.total_length;
    for (const auto& p : c.pieces) {
      for (cplx q : {p.a, p.b}) {
        lox = std::min(lox, q.real());
        hix = std::max(hix, q.real());
        loy = std::min(loy, q.imag());
        hiy = std::max(hiy, q.imag());
      }
      if (p.is_arc) {
        lox = std::min(lox, p.center.real() - p.r);
        hix = std::max(hix, p.center.real() + p.r);
        loy = std::min(loy, p.center.imag() - p.r);
        hiy = std::max(hiy, p.center.imag() + p.r);
      }
    }
  }
  a.center = 0.5 * cplx{lox + hix, loy + hiy};
  a.radius = 0.5 * std::hypot(hix - lox, hiy - loy);

  for (size_t c = 0; c < a.components.size(); ++c)
    if (a.assignments[c].size() != a.components[c].segments.size())
      throw InputError("one segment assignment per segment required");

  double geps = 0.0;
  for (const auto& c : a.components) geps = std::max(geps, c.eps);

  // sigma: endpoints, crossings, junction jumps / ramification points
  auto disc_on_curve = [&](cplx z) { return a.f.min_disc_distance(z) < tol.eps_disc * a.f.scale; };

  for (size_t ci = 0; ci < a.components.size(); ++ci) {
    const auto& path = a.components[ci];
    if (!path.closed) {
      for (cplx e : {path.start(), path.end()}) {
        SigmaPoint sp;
        sp.z = e;
        sp.kind = SigmaPoint::Endpoint;
        sp.component = static_cast<int>(ci);
        sp.ram_order = 1;
        a.sigma.push_back(sp);
      }
    }
    for (const auto& cr : path.crossings) {
      SigmaPoint sp;
      sp.z = cr.point;
      sp.kind = SigmaPoint::CrossingPoint;
      sp.component = static_cast<int>(ci);
      a.sigma.push_back(sp);
    }
    // junctions between consecutive segments (plus the seam of closed paths)
    size_t nseg = path.segments.size();
    for (size_t s = 0; s + 1 < nseg || (path.closed && s < nseg); ++s) {
      size_t s2 = (s + 1) % nseg;
      if (!path.closed && s + 1 >= nseg) break;
      int pc_end = s2 == 0 ? static_cast<int>(path.pieces.size()) - 1
                           : path.piece_of_segment_begin[s2] - 1;
      cplx zj = path.pieces[static_cast<size_t>(pc_end)].b;
      const auto& sa = a.assignments[ci][s];
      const auto& sb = a.assignments[ci][s2];
      if (disc_on_curve(zj)) {
        SigmaPoint sp;
        sp.z = zj;
        sp.kind = SigmaPoint::Ramification;
        sp.component = static_cast<int>(ci);
        a.sigma.push_back(sp);
        continue;
      }
      // smooth continuation when both sides carry the same germ
      bool smooth = false;
      if (sa.parametric && sb.parametric &&
          std::abs(sa.upstairs.b - sb.upstairs.a) < 1e-9 * (1.0 + std::abs(sa.upstairs.b))) {
        smooth = true;
      } else {
        BranchGerm gin = a.germ_on_segment(static_cast<int>(ci), static_cast<int>(s), 1.0);
        BranchGerm gout = a.germ_on_segment(static_cast<int>(ci), static_cast<int>(s2), 0.0);
        smooth = jets_equal(gin.jet, gout.jet, tol.eps_jet);
      }
      if (!smooth) {
        SigmaPoint sp;
        sp.z = zj;
        sp.kind = SigmaPoint::Jump;
        sp.component = static_cast<int>(ci);
        a.sigma.push_back(sp);
      }
    }
  }
  // crossings between different components
  for (size_t ci = 0; ci < a.components.size(); ++ci)
    for (size_t cj = ci + 1; cj < a.components.size(); ++cj)
      for (const auto& A : a.components[ci].pieces)
        for (const auto& B : a.components[cj].pieces)
          for (const auto& h : intersect_primitives(A, B, geps)) {
            double da = std::min(h.ta, 1.0 - h.ta) * A.len;
            double db = std::min(h.tb, 1.0 - h.tb) * B.len;
            if (da <= geps || db <= geps)
              throw DegenerateContact("component endpoint touches another component");
            if (std::abs(cross(A.tangent(h.ta), B.tangent(h.tb))) < std::sin(tol.theta_min))
              throw TangentialIntersection("tangential contact between components");
            SigmaPoint sp;
            sp.z = h.point;
            sp.kind = SigmaPoint::CrossingPoint;
            sp.component = static_cast<int>(ci);
            a.sigma.push_back(sp);
          }

  // endpoint and ramification cycle orders
  for (auto& sp : a.sigma) {
    if (sp.kind != SigmaPoint::Endpoint && sp.kind != SigmaPoint::Ramification) continue;
    if (!disc_on_curve(sp.z)) continue;
    const auto& path = a.components[static_cast<size_t>(sp.component)];
    bool at_start = std::abs(sp.z - path.start()) < 1e-7 * (1.0 + std::abs(sp.z));
    int seg = at_start ? 0 : static_cast<int>(path.segments.size()) - 1;
    double dist = std::numeric_limits<double>::infinity();
    for (cplx p : a.f.discriminant_points)
      if (std::abs(p - sp.z) > 1e-9 * (1.0 + a.f.scale)) dist = std::min(dist, std::abs(p - sp.z));
    if (!std::isfinite(dist)) dist = 1.0 + a.f.scale;
    double t = probe_parameter(a, sp.component, seg, !at_start, sp.z, 0.1 * dist);
    BranchGerm probe = a.germ_on_segment(sp.component, seg, t);
    LocalCycle cyc = branch_cycle_near(a.f, sp.z, probe.base, probe.anchor, tol.jet_order, tol);
    sp.ram_order = cyc.length;
  }

  // sigma1: singular points of g off the curve
  for (cplx p : a.f.discriminant_points) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& c : a.components) d = std::min(d, c.distance(p));
    if (d > 20.0 * geps) a.sigma1.push_back(p);
  }

  return a;
}

IntegrandAssignment IntegrandAssignment::from_pushforward(const PushforwardResult& push,
                                                          const Tolerances& tol) {
  std::vector<SegmentAssignment> segs;
  for (size_t k = 0; k < push.upstairs.size(); ++k) {
    SegmentAssignment sa;
    sa.parametric = true;
    sa.upstairs = push.upstairs[k];
    sa.map_P = push.f.P;
    sa.map_Q = push.f.Q;
    sa.anchor_t = 0.5;
    cplx x = push.seed_anchor[k];
    sa.seed = germ_at(push.f, push.f.P.eval(x), x, tol);
    segs.push_back(std::move(sa));
  }
  return make(push.f, {push.gamma}, {std::move(segs)}, tol);
}

std::vector<cplx> IntegrandAssignment::forbidden_points() const {
  std::vector<cplx> out;
  for (const auto& s : sigma) out.push_back(s.z);
  for (cplx p : sigma1) out.push_back(p);
  return out;
}

double IntegrandAssignment::distance(cplx t) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& c : components) d = std::min(d, c.distance(t));
  return d;
}

BranchGerm IntegrandAssignment::germ_on_segment(int component, int segment, double local_t) const {
  const auto& path = components[static_cast<size_t>(component)];
  const auto& sa = assignments[static_cast<size_t>(component)][static_cast<size_t>(segment)];
  int pb = path.piece_of_segment_begin[static_cast<size_t>(segment)];
  int pe = segment + 1 < static_cast<int>(path.segments.size())
               ? path.piece_of_segment_begin[static_cast<size_t>(segment) + 1]
               : static_cast<int>(path.pieces.size());
  int npieces = pe - pb;
  // map the segment-level parameter to (piece, t)
  double scaled = std::clamp(local_t, 0.0, 1.0) * npieces;
  int pidx = std::min(static_cast<int>(scaled), npieces - 1);
  double t = scaled - pidx;

  if (sa.parametric) {
    // exact: anchor is the upstairs point
    cplx x = sa.upstairs.point(std::clamp(local_t, 0.0, 1.0));
    return germ_at(f, sa.map_P.eval(x), x, tol);
  }

  // track from the anchor to the requested point
  double anchor_scaled = sa.anchor_t * npieces;
  int apidx = std::min(static_cast<int>(anchor_scaled), npieces - 1);
  double at = anchor_scaled - apidx;
  FiberState st;
  st.z = path.pieces[static_cast<size_t>(pb + apidx)].point(at);
  st.fib = f.fiber(st.z);
  size_t mark = 0;
  for (size_t i = 1; i < st.fib.size(); ++i)
    if (std::abs(st.fib[i] - sa.seed.anchor) < std::abs(st.fib[mark] - sa.seed.anchor)) mark = i;
  std::swap(st.fib[0], st.fib[mark]);

  int dir = (pidx > apidx || (pidx == apidx && t >= at)) ? 1 : -1;
  int cp = apidx;
  double ct = at;
  while (cp != pidx || std::abs(ct - t) > 1e-15) {
    const Piece& piece = path.pieces[static_cast<size_t>(pb + cp)];
    double target_t = (cp == pidx) ? t : (dir > 0 ? 1.0 : 0.0);
    int steps = std::max(2, static_cast<int>(std::ceil(std::abs(target_t - ct) * 8)));
    for (int k = 1; k <= steps; ++k)
      advance(f, st, piece.point(ct + (target_t - ct) * k / steps), tol);
    ct = target_t;
    if (cp == pidx) break;
    cp += dir;
    ct = dir > 0 ? 0.0 : 1.0;
  }
  return germ_at(f, st.z, st.fib[0], tol);
}

// ---------------------------------------------------------------------------
// quadrature drivers

namespace {

// integrate a vector integrand over the whole assignment
void integrate_assignment(const IntegrandAssignment& a, const VecIntegrand& fn, int K,
                          std::span<cplx> out, std::span<double> err, const QuadParams& qp) {
  for (size_t ci = 0; ci < a.components.size(); ++ci) {
    const auto& path = a.components[ci];
    for (size_t si = 0; si < a.assignments[ci].size(); ++si) {
      const auto& sa = a.assignments[ci][si];
      int pb = path.piece_of_segment_begin[si];
      int pe = si + 1 < path.segments.size()
                   ? path.piece_of_segment_begin[si + 1]
                   : static_cast<int>(path.pieces.size());

      double err_here = 0.0;
      if (sa.parametric) {
        Leg leg;
        leg.geo = &sa.upstairs;
        leg.parametric = true;
        leg.P = &sa.map_P;
        leg.Q = &sa.map_Q;
        leg.dP = sa.map_P.derivative();
        integrate_leg_rec(leg, fn, K, out, &err_here, 0.0, 1.0, nullptr, qp, a.tol, 0);
      } else {
        // ramification flags at the two segment ends
        auto ram_order_at = [&](cplx z) {
          for (const auto& sp : a.sigma)
            if (std::abs(sp.z - z) < 1e-7 * (1.0 + std::abs(z)) && sp.ram_order > 1)
              return sp.ram_order;
          return 1;
        };
        const Piece& first = path.pieces[static_cast<size_t>(pb)];
        const Piece& last = path.pieces[static_cast<size_t>(pe - 1)];
        int ram_start = a.f.min_disc_distance(first.a) < a.tol.eps_disc * a.f.scale
                            ? ram_order_at(first.a)
                            : 1;
        int ram_end = a.f.min_disc_distance(last.b) < a.tol.eps_disc * a.f.scale
                          ? ram_order_at(last.b)
                          : 1;

        // anchor fiber
        int npieces = pe - pb;
        double anchor_scaled = sa.anchor_t * npieces;
        int apidx = std::min(static_cast<int>(anchor_scaled), npieces - 1);
        double at = anchor_scaled - apidx;
        FiberState anchor_state;
        anchor_state.z = path.pieces[static_cast<size_t>(pb + apidx)].point(at);
        anchor_state.fib = a.f.fiber(anchor_state.z);
        size_t mark = 0;
        for (size_t i = 1; i < anchor_state.fib.size(); ++i)
          if (std::abs(anchor_state.fib[i] - sa.seed.anchor) <
              std::abs(anchor_state.fib[mark] - sa.seed.anchor))
            mark = i;
        std::swap(anchor_state.fib[0], anchor_state.fib[mark]);

        // walk right: anchor -> segment end
        {
          FiberState st = anchor_state;
          for (int pc = apidx; pc < npieces; ++pc) {
            Leg leg;
            leg.geo = &path.pieces[static_cast<size_t>(pb + pc)];
            leg.f = &a.f;
            leg.tau0 = (pc == apidx) ? at : 0.0;
            leg.tau1 = 1.0;
            if (pc == npieces - 1 && ram_end > 1 && !leg.geo->is_arc) leg.ram_n = ram_end;
            integrate_leg_rec(leg, fn, K, out, &err_here, 0.0, 1.0, &st, qp, a.tol, 0);
          }
        }
        // walk left: anchor -> segment start, accumulated negatively
        {
          std::vector<cplx> neg(static_cast<size_t>(K), 0.0);
          FiberState st = anchor_state;
          for (int pc = apidx; pc >= 0; --pc) {
            Leg leg;
            leg.geo = &path.pieces[static_cast<size_t>(pb + pc)];
            leg.f = &a.f;
            leg.tau0 = (pc == apidx) ? at : 1.0;
            leg.tau1 = 0.0;
            if (pc == 0 && ram_start > 1 && !leg.geo->is_arc) leg.ram_n = ram_start;
            integrate_leg_rec(leg, fn, K, std::span<cplx>(neg), &err_here, 0.0, 1.0, &st, qp,
                              a.tol, 0);
          }
          for (int k = 0; k < K; ++k) out[static_cast<size_t>(k)] -= neg[static_cast<size_t>(k)];
        }
      }
      if (!err.empty())
        for (int k = 0; k < K; ++k) err[static_cast<size_t>(k)] += err_here;
    }
  }
}

}  // namespace

cplx eval_cauchy(const IntegrandAssignment& a, cplx t) {
  double eps = 0.0;
  for (const auto& c : a.components) eps = std::max(eps, c.eps);
  if (a.distance(t) <= 2.0 * eps) throw PointOnCurve("evaluation point on the curve");

  QuadParams qp;
  qp.tol_abs = a.tol.eps_quad * std::max(1.0, a.total_length);
  qp.has_target = true;
  qp.target = t;

  cplx acc = 0.0;
  std::span<cplx> out(&acc, 1);
  integrate_assignment(a,
                       [&](cplx z, cplx g, cplx dz, std::span<cplx> o) {
                         o[0] = g / (z - t) * dz;
                       },
                       1, out, {}, qp);
  return acc / TWO_PI_I;
}

std::vector<cplx> cauchy_taylor_coeffs(const IntegrandAssignment& a, cplx t0, int M) {
  double eps = 0.0;
  for (const auto& c : a.components) eps = std::max(eps, c.eps);
  if (a.distance(t0) <= 2.0 * eps) throw PointOnCurve("expansion point on the curve");
  QuadParams qp;
  qp.tol_abs = a.tol.eps_quad * std::max(1.0, a.total_length);
  qp.has_target = true;
  qp.target = t0;
  std::vector<cplx> out(static_cast<size_t>(M) + 1, 0.0);
  integrate_assignment(a,
                       [&](cplx z, cplx g, cplx dz, std::span<cplx> o) {
                         cplx inv = 1.0 / (z - t0);
                         cplx p = inv;
                         for (int m = 0; m <= M; ++m) {
                           o[static_cast<size_t>(m)] = g * p * dz;
                           p *= inv;
                         }
                       },
                       M + 1, std::span<cplx>(out), {}, qp);
  for (auto& c : out) c /= TWO_PI_I;
  return out;
}

MomentTable moment_sequence(const IntegrandAssignment& a, int K) {
  if (K < 0) throw InputError("K must be nonnegative");
  QuadParams qp;
  qp.tol_abs = a.tol.eps_quad * std::max(1.0, a.total_length);

  MomentTable table;
  table.method = "quadrature";
  table.values.assign(static_cast<size_t>(K) + 1, 0.0);
  table.errors.assign(static_cast<size_t>(K) + 1, 0.0);
  integrate_assignment(a,
                       [&](cplx z, cplx g, cplx dz, std::span<cplx> o) {
                         cplx zk = 1.0;
                         for (int k = 0; k <= K; ++k) {
                           o[static_cast<size_t>(k)] = zk * g * dz;
                           zk *= z;
                         }
                       },
                       K + 1, std::span<cplx>(table.values), std::span<double>(table.errors), qp);

  // tail identity at |t - center| = 10 * radius
  double R = 10.0 * std::max(a.radius, 1e-6);
  double worst = 0.0;
  for (int j = 0; j < 4; ++j) {
    cplx t = a.center + std::polar(R, 0.37 + j * PI / 2);
    cplx direct = eval_cauchy(a, t);
    cplx fromtail = 0.0;
    // I(t) = -(1/2pi i) sum m_k^(c) (t-c)^{-k-1} with moments about the center
    // here: re-expand the plain moments about `center` via binomials is
    // overkill; instead compare against the truncated series in 1/t only if
    // the center is near 0, else use the generic bound via direct moments.
    cplx tp = t;
    for (int k = 0; k <= K; ++k) {
      fromtail += table.values[static_cast<size_t>(k)] / tp;
      tp *= t;
    }
    fromtail /= -TWO_PI_I;
    double tail_bound = std::pow(std::abs(a.center) + a.radius, K + 1) /
                        (std::abs(t) - (std::abs(a.center) + a.radius)) /
                        std::pow(std::abs(t), K + 1);
    double allowed = a.tol.eps_tail + 2.0 * tail_bound *
                                           (1.0 + std::abs(table.values.back()));
    worst = std::max(worst, std::abs(direct - fromtail) - allowed);
    table.tail_check_error = std::max(table.tail_check_error, std::abs(direct - fromtail));
  }
  if (worst > 0)
    throw Error("moment tail identity failed by " + std::to_string(worst));
  return table;
}

// ---------------------------------------------------------------------------
// rational closed forms

std::vector<RationalFn::Pole> RationalFn::poles() const {
  std::vector<Pole> out;
  if (den.degree() < 1) return out;
  std::vector<cplx> roots = poly_roots(den);
  // cluster multiple roots
  std::vector<bool> used(roots.size(), false);
  double scale = 1.0;
  for (cplx r : roots) scale = std::max(scale, std::abs(r));
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::vector<cplx> cl{roots[i]};
    used[i] = true;
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (!used[j] && std::abs(roots[j] - roots[i]) < 1e-6 * scale) {
        cl.push_back(roots[j]);
        used[j] = true;
      }
    Pole p;
    p.z = 0.0;
    for (cplx q : cl) p.z += q;
    p.z /= static_cast<double>(cl.size());
    p.order = static_cast<int>(cl.size());
    out.push_back(p);
  }
  // principal parts by contour extraction
  for (auto& p : out) {
    double r = std::numeric_limits<double>::infinity();
    for (const auto& q : out)
      if (std::abs(q.z - p.z) > 1e-9) r = std::min(r, 0.5 * std::abs(q.z - p.z));
    if (!std::isfinite(r)) r = 1.0;
    r = std::min(r, 1.0);
    auto f = [&](cplx z) { return eval(z); };
    auto coef = laurent_coeffs(f, p.z, r, -p.order, -1, 256);
    p.principal.assign(static_cast<size_t>(p.order), 0.0);
    for (int j = 1; j <= p.order; ++j)
      p.principal[static_cast<size_t>(j - 1)] = coef[static_cast<size_t>(p.order - j)];
    while (!p.principal.empty() && std::abs(p.principal.back()) < 1e-10) {
      p.principal.pop_back();
      --p.order;
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Pole& p) { return p.order == 0; }),
            out.end());
  return out;
}

cplx ClosedFormRational::eval(int region_mu, cplx t) const {
  cplx v = static_cast<double>(region_mu) * g.eval(t);
  for (size_t i = 0; i < poles.size(); ++i) {
    if (pole_mu[i] == 0) continue;
    cplx pp = 0.0, d = t - poles[i].z, dp = d;
    for (size_t j = 0; j < poles[i].principal.size(); ++j) {
      pp += poles[i].principal[j] / dp;
      dp *= d;
    }
    v -= static_cast<double>(pole_mu[i]) * pp;
  }
  return v;
}

cplx ClosedFormRational::PerRegion::eval(cplx t) const { return owner->eval(mu, t); }

ClosedFormRational closed_form_rational(const RationalFn& g, const DomainPartition& partition,
                                        std::span<const PiecewisePath> gamma,
                                        const Tolerances& tol) {
  (void)tol;
  ClosedFormRational out;
  out.g = g;
  out.poles = g.poles();
  for (const auto& p : out.poles) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& path : gamma) d = std::min(d, path.distance(p.z));
    if (d <= 4.0 * partition.eps) throw PoleOnCurve("pole of g lies on the curve");
    out.pole_mu.push_back(winding_number(gamma, p.z));
  }
  out.vanishes_on_D0 = true;
  for (int m : out.pole_mu)
    if (m != 0) out.vanishes_on_D0 = false;
  for (const auto& r : partition.regions) {
    ClosedFormRational::PerRegion pr;
    pr.region = r.id;
    pr.mu = r.mu;
    out.regions.push_back(pr);
  }
  for (auto& r : out.regions) r.owner = &out;
  return out;
}

// ---------------------------------------------------------------------------
// local models

namespace {

struct SideData {
  bool present = false;
  LocalCycle cycle;
};

// the assigned branch cycles on the two sides of a marked point z0
void sides_at(const IntegrandAssignment& a, cplx z0, SideData& before, SideData& after,
              int jet_order) {
  double tolz = 1e-7 * (1.0 + std::abs(z0));
  double dist = std::numeric_limits<double>::infinity();
  for (cplx p : a.f.discriminant_points)
    if (std::abs(p - z0) > 1e-9 * (1.0 + a.f.scale)) dist = std::min(dist, std::abs(p - z0));
  for (const auto& sp : a.sigma)
    if (std::abs(sp.z - z0) > tolz) dist = std::min(dist, std::abs(sp.z - z0));
  if (!std::isfinite(dist)) dist = 1.0 + a.f.scale;
  double rho = 0.1 * dist;
  for (size_t ci = 0; ci < a.components.size(); ++ci) {
    const auto& path = a.components[ci];
    size_t nseg = path.segments.size();
    for (size_t si = 0; si < nseg; ++si) {
      int pb = path.piece_of_segment_begin[si];
      int pe = si + 1 < nseg ? path.piece_of_segment_begin[si + 1]
                             : static_cast<int>(path.pieces.size());
      cplx zs = path.pieces[static_cast<size_t>(pb)].a;
      cplx ze = path.pieces[static_cast<size_t>(pe - 1)].b;
      if (std::abs(ze - z0) < tolz && !before.present) {
        double t = probe_parameter(a, static_cast<int>(ci), static_cast<int>(si), true, z0, rho);
        BranchGerm probe = a.germ_on_segment(static_cast<int>(ci), static_cast<int>(si), t);
        before.present = true;
        before.cycle = branch_cycle_near(a.f, z0, probe.base, probe.anchor, jet_order, a.tol);
      }
      if (std::abs(zs - z0) < tolz && !after.present) {
        double t = probe_parameter(a, static_cast<int>(ci), static_cast<int>(si), false, z0, rho);
        BranchGerm probe = a.germ_on_segment(static_cast<int>(ci), static_cast<int>(si), t);
        after.present = true;
        after.cycle = branch_cycle_near(a.f, z0, probe.base, probe.anchor, jet_order, a.tol);
      }
    }
  }
}

double probe_parameter(const IntegrandAssignment& a, int ci, int si, bool segment_ends_at_z0,
                       cplx z0, double rho) {
  const auto& path = a.components[static_cast<size_t>(ci)];
  int pb = path.piece_of_segment_begin[static_cast<size_t>(si)];
  int pe = si + 1 < static_cast<int>(path.segments.size())
               ? path.piece_of_segment_begin[static_cast<size_t>(si) + 1]
               : static_cast<int>(path.pieces.size());
  int npieces = pe - pb;
  auto point_at = [&](double t) {
    double scaled = std::clamp(t, 0.0, 1.0) * npieces;
    int pidx = std::min(static_cast<int>(scaled), npieces - 1);
    return path.pieces[static_cast<size_t>(pb + pidx)].point(scaled - pidx);
  };
  double delta = 0.45;
  double best = segment_ends_at_z0 ? 1.0 - delta : delta;
  for (int it = 0; it < 60; ++it) {
    double t = segment_ends_at_z0 ? 1.0 - delta : delta;
    double d = std::abs(point_at(t) - z0);
    if (d <= 0.8 * rho && d >= 0.1 * rho) return t;
    best = t;
    if (d > 0.8 * rho)
      delta *= 0.6;
    else
      delta *= 1.4;
    if (delta < 1e-9 || delta > 0.49) break;
  }
  return best;
}

// numeric validation of a local model: least-squares fit of eval_cauchy on an
// arc around z0 against {(t-z0)^{m/n}} plus the fixed log coefficient
double validate_local_model(const IntegrandAssignment& a, cplx z0, const Jet& logcoef, int n) {
  // free directions: stay away from the curve arms at z0
  double dist = std::numeric_limits<double>::infinity();
  for (const auto& sp : a.sigma)
    if (std::abs(sp.z - z0) > 1e-9) dist = std::min(dist, std::abs(sp.z - z0));
  for (cplx p : a.sigma1) dist = std::min(dist, std::abs(p - z0));
  if (!std::isfinite(dist)) dist = std::max(1.0, a.radius);
  double rho = 0.02 * dist;

  // collect arm angles of the curve at z0
  std::vector<double> arms;
  for (const auto& c : a.components)
    for (const auto& p : c.pieces) {
      if (std::abs(p.a - z0) < 1e-7 * (1.0 + std::abs(z0))) arms.push_back(std::arg(p.tangent(0.0)));
      if (std::abs(p.b - z0) < 1e-7 * (1.0 + std::abs(z0))) arms.push_back(std::arg(-p.tangent(1.0)));
    }
  if (arms.empty()) arms.push_back(0.0);
  std::sort(arms.begin(), arms.end());
  // largest angular gap
  double best_lo = arms.back(), best_gap = arms.front() + 2.0 * PI - arms.back();
  for (size_t k = 0; k + 1 < arms.size(); ++k)
    if (arms[k + 1] - arms[k] > best_gap) {
      best_gap = arms[k + 1] - arms[k];
      best_lo = arms[k];
    }

  int M = 28;
  int basis_n = 13;
  std::vector<std::vector<cplx>> A(static_cast<size_t>(M));
  std::vector<cplx> b(static_cast<size_t>(M));
  double margin = 0.15 * best_gap;
  for (int j = 0; j < M; ++j) {
    double th = best_lo + margin + (best_gap - 2 * margin) * (j + 0.5) / M;
    cplx t = z0 + std::polar(rho, th);
    cplx val = eval_cauchy(a, t);
    // subtract the fixed logarithmic part; continuous branch over the arc
    cplx logv = std::log(rho) + cplx{0.0, th};
    val -= logcoef.eval(t - z0) * logv;
    b[static_cast<size_t>(j)] = val;
    auto& row = A[static_cast<size_t>(j)];
    row.resize(static_cast<size_t>(basis_n));
    for (int m = 0; m < basis_n; ++m)
      row[static_cast<size_t>(m)] = std::polar(std::pow(rho, static_cast<double>(m) / n),
                                               th * static_cast<double>(m) / n);
  }
  std::vector<cplx> coef = lstsq(A, b);
  double resid = 0.0, scale = 1.0;
  for (int j = 0; j < M; ++j) {
    cplx fit = 0.0;
    for (int m = 0; m < basis_n; ++m) fit += coef[static_cast<size_t>(m)] * A[static_cast<size_t>(j)][static_cast<size_t>(m)];
    resid = std::max(resid, std::abs(fit - b[static_cast<size_t>(j)]));
    scale = std::max(scale, std::abs(b[static_cast<size_t>(j)]));
  }
  return resid / scale;
}

}  // namespace

LocalModel endpoint_local_model(const IntegrandAssignment& a, cplx z0, int jet_order) {
  SideData before, after;
  sides_at(a, z0, before, after, jet_order);
  if (before.present == after.present)
    throw InputError("point is not an endpoint of the assignment's curve");

  LocalModel m;
  m.center = z0;
  const LocalCycle& cyc = before.present ? before.cycle : after.cycle;
  m.ram_order = cyc.length;
  // curve starting at z0 contributes -g_r/(2 pi i) log(t - z0); a curve ending
  // there contributes with the opposite sign
  Jet L = cyc.regular_part * (1.0 / TWO_PI_I);
  if (after.present) L *= -1.0;  // z0 is the initial point
  m.log_coefficient = L;
  m.finite_ramification = L.is_zero(a.tol.eps_jet * (1.0 + cyc.regular_part.max_abs()));
  m.fit_residual = validate_local_model(a, z0, L, m.ram_order);
  double bound = std::max(1e-6, 1e3 * a.tol.eps_quad * std::max(1.0, a.total_length));
  if (m.fit_residual > bound)
    throw ModelMismatch("endpoint model residual " + std::to_string(m.fit_residual));
  return m;
}

LocalModel jump_local_model(const IntegrandAssignment& a, cplx z0, int jet_order) {
  if (jet_order < 0) jet_order = a.tol.jet_order;
  SideData before, after;
  sides_at(a, z0, before, after, jet_order);
  if (!before.present || !after.present)
    throw InputError("point is not an interior junction of the curve");

  LocalModel m;
  m.center = z0;
  m.ram_order = std::max(before.cycle.length, after.cycle.length);
  // incoming sub-curve ends at z0 (+g_r0), outgoing starts there (-g_r1)
  Jet L = (before.cycle.regular_part - after.cycle.regular_part) * (1.0 / TWO_PI_I);
  m.log_coefficient = L;
  double scale = 1.0 + std::max(before.cycle.regular_part.max_abs(),
                                after.cycle.regular_part.max_abs());
  m.finite_ramification = L.is_zero(a.tol.eps_jet * scale);
  m.regular_sums_equal = m.finite_ramification;
  m.fit_residual = validate_local_model(a, z0, L, m.ram_order);
  double bound = std::max(1e-6, 1e3 * a.tol.eps_quad * std::max(1.0, a.total_length));
  if (m.fit_residual > bound)
    throw ModelMismatch("jump model residual " + std::to_string(m.fit_residual));
  return m;
}

}  // namespace branchcut
