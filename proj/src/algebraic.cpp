// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#include "branchcut/algebraic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace branchcut {

namespace {

// determinant of a dense complex matrix by partial-pivot LU
cplx det(std::vector<std::vector<cplx>> m) {
  size_t n = m.size();
  cplx d = 1.0;
  for (size_t i = 0; i < n; ++i) {
    size_t piv = i;
    for (size_t r = i + 1; r < n; ++r)
      if (std::abs(m[r][i]) > std::abs(m[piv][i])) piv = r;
    if (piv != i) {
      std::swap(m[i], m[piv]);
      d = -d;
    }
    if (std::abs(m[i][i]) == 0.0) return 0.0;
    d *= m[i][i];
    for (size_t r = i + 1; r < n; ++r) {
      cplx f = m[r][i] / m[i][i];
      for (size_t c = i; c < n; ++c) m[r][c] -= f * m[i][c];
    }
  }
  return d;
}

// resultant of two w-polynomials with complex coefficients
cplx resultant_scalar(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  if (da < 0 || db < 0) return 0.0;
  int n = da + db;
  if (n == 0) return 1.0;
  std::vector<std::vector<cplx>> m(static_cast<size_t>(n), std::vector<cplx>(static_cast<size_t>(n), 0.0));
  for (int r = 0; r < db; ++r)
    for (int k = 0; k <= da; ++k) m[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = a[static_cast<size_t>(da - k)];
  for (int r = 0; r < da; ++r)
    for (int k = 0; k <= db; ++k) m[static_cast<size_t>(db + r)][static_cast<size_t>(r + k)] = b[static_cast<size_t>(db - k)];
  return det(std::move(m));
}

// Multiple roots split numerically into small clusters; merge them and keep
// cluster centroids.  The radius follows the m-fold splitting law eps^(1/m).
std::vector<cplx> cluster_points(std::vector<cplx> pts) {
  double scale = 1.0;
  for (cplx p : pts) scale = std::max(scale, std::abs(p));
  double radius = 0.02 * scale;
  std::vector<std::vector<cplx>> clusters;
  for (cplx p : pts) {
    bool placed = false;
    for (auto& cl : clusters)
      for (cplx q : cl)
        if (!placed && std::abs(p - q) < radius) {
          cl.push_back(p);
          placed = true;
          break;
        }
    if (!placed) clusters.push_back({p});
  }
  std::vector<cplx> out;
  for (auto& cl : clusters) {
    cplx c = 0.0;
    for (cplx q : cl) c += q;
    out.push_back(c / static_cast<double>(cl.size()));
  }
  return out;
}

// roots of the z-resultant of A and dA/dw plus roots of the leading coefficient
std::vector<cplx> discriminant_of_wpoly(const std::vector<CPoly>& wcoef) {
  int n = static_cast<int>(wcoef.size()) - 1;
  int dz = 0;
  for (const auto& c : wcoef) dz = std::max(dz, c.degree());
  int bound = dz * (2 * n - 1) + 1;
  // interpolate Res_w(A, A_w)(z) on a circle of radius R
  double R = 1.0;
  for (const auto& c : wcoef)
    for (auto& x : c.c) R = std::max(R, std::abs(x));
  R = 1.37 + 0.21 * R;  // avoid hitting roots by accident
  int M = bound + 1;
  std::vector<cplx> vals(static_cast<size_t>(M));
  for (int j = 0; j < M; ++j) {
    cplx z = std::polar(R, 2.0 * PI * j / M);
    std::vector<cplx> a(static_cast<size_t>(n) + 1), b(static_cast<size_t>(n));
    for (int k = 0; k <= n; ++k) a[static_cast<size_t>(k)] = wcoef[static_cast<size_t>(k)].eval(z);
    for (int k = 1; k <= n; ++k) b[static_cast<size_t>(k - 1)] = wcoef[static_cast<size_t>(k)].eval(z) * static_cast<double>(k);
    while (a.size() > 1 && std::abs(a.back()) < 1e-300) a.pop_back();
    while (b.size() > 1 && std::abs(b.back()) < 1e-300) b.pop_back();
    vals[static_cast<size_t>(j)] = resultant_scalar(a, b);
  }
  // inverse DFT for coefficients
  std::vector<cplx> coef(static_cast<size_t>(M));
  for (int k = 0; k < M; ++k) {
    cplx s = 0.0;
    for (int j = 0; j < M; ++j) s += vals[static_cast<size_t>(j)] * std::polar(1.0, -2.0 * PI * j * k / M);
    coef[static_cast<size_t>(k)] = s / (static_cast<double>(M) * std::pow(R, k));
  }
  // drop numerically-zero tail
  double mx = 0.0;
  for (auto& c : coef) mx = std::max(mx, std::abs(c));
  if (mx == 0.0) return {};
  while (coef.size() > 1 && std::abs(coef.back()) < 1e-10 * mx) coef.pop_back();
  std::vector<cplx> pts = poly_roots(CPoly(coef));
  // roots of the leading w-coefficient are singular too
  if (wcoef.back().degree() >= 1)
    for (cplx r : poly_roots(wcoef.back())) pts.push_back(r);
  return cluster_points(pts);
}

}  // namespace

AlgebraicFunctionDef AlgebraicFunctionDef::from_wpoly(std::vector<CPoly> wc) {
  AlgebraicFunctionDef f;
  while (wc.size() > 1 && wc.back().is_zero()) wc.pop_back();
  if (wc.size() < 2) throw InputError("defining polynomial must have positive w-degree");
  f.wcoef = std::move(wc);
  f.n = static_cast<int>(f.wcoef.size()) - 1;
  f.discriminant_points = discriminant_of_wpoly(f.wcoef);
  f.scale = 1.0;
  for (cplx p : f.discriminant_points) f.scale = std::max(f.scale, std::abs(p));
  return f;
}

AlgebraicFunctionDef AlgebraicFunctionDef::from_composite(CPoly P, CPoly Q) {
  AlgebraicFunctionDef f;
  if (P.degree() < 1) throw InputError("P must be non-constant");
  f.composite = true;
  f.P = std::move(P);
  f.Q = std::move(Q);
  f.n = f.P.degree();
  CPoly dP = f.P.derivative();
  for (cplx c : poly_roots(dP)) f.discriminant_points.push_back(f.P.eval(c));
  f.discriminant_points = cluster_points(f.discriminant_points);
  f.scale = 1.0;
  for (cplx p : f.discriminant_points) f.scale = std::max(f.scale, std::abs(p));
  return f;
}

std::vector<CPoly> AlgebraicFunctionDef::defining_polynomial() const {
  if (!composite) return wcoef;
  // Res_x(P(x) - z, w - Q(x)) as a polynomial in w with z-poly coefficients,
  // computed by double interpolation in (z, w).
  int dz = n;                      // degree in z is deg P ... each coef has deg <= n in z? deg_z = deg_w-dependent
  int dw = n;                      // degree in w is deg P
  int dq = std::max(Q.degree(), 1);
  int zbound = dw * 1 + 0;         // Res has degree exactly deg Q in z per w... use generous bounds
  (void)dz; (void)zbound;
  int MZ = n * dq + n + 2, MW = n + 1;
  double RZ = 1.9 + scale, RW = 2.3;
  std::vector<std::vector<cplx>> grid(static_cast<size_t>(MW), std::vector<cplx>(static_cast<size_t>(MZ)));
  for (int iw = 0; iw < MW; ++iw) {
    cplx w = std::polar(RW, 2.0 * PI * iw / MW + 0.3);
    for (int iz = 0; iz < MZ; ++iz) {
      cplx z = std::polar(RZ, 2.0 * PI * iz / MZ + 0.1);
      // Res_x(P - z, w - Q) = lc(P)^{deg Q? } prod over roots x_i of (w - Q(x_i))
      std::vector<cplx> shifted = P.c;
      shifted[0] -= z;
      cplx prod = 1.0;
      for (cplx x : poly_roots(CPoly(shifted))) prod *= (w - Q.eval(x));
      cplx lead = P.c.back();
      grid[static_cast<size_t>(iw)][static_cast<size_t>(iz)] = prod * std::pow(lead, Q.degree());
    }
  }
  // interpolate in z per w-sample, then in w per z-coefficient
  std::vector<std::vector<cplx>> zcoef(static_cast<size_t>(MW), std::vector<cplx>(static_cast<size_t>(MZ)));
  for (int iw = 0; iw < MW; ++iw)
    for (int k = 0; k < MZ; ++k) {
      cplx s = 0.0;
      for (int j = 0; j < MZ; ++j)
        s += grid[static_cast<size_t>(iw)][static_cast<size_t>(j)] * std::polar(1.0, -2.0 * PI * j * k / MZ - 0.1 * k);
      zcoef[static_cast<size_t>(iw)][static_cast<size_t>(k)] = s / (static_cast<double>(MZ) * std::pow(RZ, k));
    }
  std::vector<CPoly> out(static_cast<size_t>(MW));
  for (int m = 0; m < MW; ++m) {
    std::vector<cplx> ck(static_cast<size_t>(MZ));
    for (int k = 0; k < MZ; ++k) {
      cplx s = 0.0;
      for (int j = 0; j < MW; ++j)
        s += zcoef[static_cast<size_t>(j)][static_cast<size_t>(k)] * std::polar(1.0, -2.0 * PI * j * m / MW - 0.3 * m);
      ck[static_cast<size_t>(k)] = s / (static_cast<double>(MW) * std::pow(RW, m));
    }
    // clean tiny values
    double mx = 0.0;
    for (auto& v : ck) mx = std::max(mx, std::abs(v));
    for (auto& v : ck)
      if (std::abs(v) < 1e-9 * (mx + 1.0)) v = 0.0;
    out[static_cast<size_t>(m)] = CPoly(std::move(ck));
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

std::vector<cplx> AlgebraicFunctionDef::fiber(cplx z, const std::vector<cplx>* warm) const {
  if (composite) {
    std::vector<cplx> shifted = P.c;
    shifted[0] -= z;
    return poly_roots(CPoly(shifted), warm);
  }
  std::vector<cplx> a(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) a[static_cast<size_t>(k)] = wcoef[static_cast<size_t>(k)].eval(z);
  if (std::abs(a.back()) < 1e-12 * (1.0 + std::abs(a[0])))
    throw LeadingCoefficientVanishes("leading w-coefficient vanishes near z=" +
                                     std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i");
  return poly_roots(CPoly(a), warm);
}

cplx AlgebraicFunctionDef::fiber_derivative(cplx z, cplx fiber_pt) const {
  if (composite) {
    cplx dp = P.derivative().eval(fiber_pt);
    if (std::abs(dp) < 1e-300) throw NearDiscriminant("derivative vanishes on fiber");
    return 1.0 / dp;
  }
  // dw/dz = -A_z / A_w
  cplx az = 0.0, aw = 0.0, wp = 1.0;
  for (int k = 0; k <= n; ++k) {
    az += wcoef[static_cast<size_t>(k)].derivative().eval(z) * wp;
    if (k >= 1) aw += wcoef[static_cast<size_t>(k)].eval(z) * static_cast<double>(k) * std::pow(fiber_pt, k - 1);
    wp *= fiber_pt;
  }
  if (std::abs(aw) < 1e-300) throw NearDiscriminant("dA/dw vanishes on fiber");
  return -az / aw;
}

double AlgebraicFunctionDef::min_disc_distance(cplx z) const {
  double d = std::numeric_limits<double>::infinity();
  for (cplx p : discriminant_points) d = std::min(d, std::abs(z - p));
  return d;
}

namespace {

double min_separation(const std::vector<cplx>& v) {
  double s = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) s = std::min(s, std::abs(v[i] - v[j]));
  return s;
}

// jet of the sheet through `anchor` by Newton iteration in series arithmetic
Jet sheet_jet(const AlgebraicFunctionDef& f, cplx z, cplx anchor, int order) {
  Jet x(order, anchor);
  Jet zj(order, z);
  if (order >= 1) zj[1] = 1.0;
  for (int it = 0; it < order + 4; ++it) {
    // F(x) = P(x) - z  (composite)   or   A(z, x) (explicit)
    Jet F(order), dF(order);
    if (f.composite) {
      F = f.P.eval(x) - zj;
      dF = f.P.derivative().eval(x);
    } else {
      Jet wp(order, 1.0);
      F = Jet(order);
      dF = Jet(order);
      for (int k = 0; k <= f.n; ++k) {
        Jet ck = f.wcoef[static_cast<size_t>(k)].eval(zj);
        F += ck * wp;
        if (k + 1 <= f.n) {
          Jet dk = f.wcoef[static_cast<size_t>(k + 1)].eval(zj);
          dF += dk * wp * cplx(static_cast<double>(k + 1));
        }
        wp = wp * x;
      }
    }
    // x <- x - F / dF  in truncated arithmetic (dF invertible: regular sheet)
    if (std::abs(dF.value()) < 1e-14 * (1.0 + F.max_abs()))
      throw NearDiscriminant("jet construction too close to a branch point");
    // series division F/dF
    Jet q(order);
    Jet rem = F;
    Jet dinv(order);
    // invert dF: dinv = 1/dF by Newton on series
    dinv[0] = 1.0 / dF.value();
    for (int m = 1; m <= order; ++m) {
      cplx s = 0.0;
      for (int k = 1; k <= m; ++k) s += dF[k] * dinv[m - k];
      dinv[m] = -s / dF.value();
    }
    q = rem * dinv;
    x -= q;
    if (q.max_abs() < 1e-15 * (1.0 + x.max_abs())) break;
  }
  if (f.composite) return f.Q.eval(x);
  return x;
}

}  // namespace

std::vector<BranchGerm> branches_at(const AlgebraicFunctionDef& f, cplx z, const Tolerances& tol) {
  double safe = tol.eps_disc * f.scale;
  if (f.min_disc_distance(z) < safe)
    throw NearDiscriminant("query point too close to a discriminant point");
  std::vector<cplx> fib = f.fiber(z);
  std::vector<size_t> idx(fib.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (fib[a].real() != fib[b].real()) return fib[a].real() < fib[b].real();
    return fib[a].imag() < fib[b].imag();
  });
  std::vector<BranchGerm> out;
  for (size_t k = 0; k < idx.size(); ++k) {
    BranchGerm g;
    g.base = z;
    g.anchor = fib[idx[k]];
    g.jet = sheet_jet(f, z, g.anchor, tol.jet_order);
    g.slot = static_cast<int>(k);
    out.push_back(std::move(g));
  }
  return out;
}

BranchGerm germ_at(const AlgebraicFunctionDef& f, cplx z, cplx anchor_hint, const Tolerances& tol) {
  std::vector<cplx> fib = f.fiber(z);
  size_t best = 0;
  for (size_t i = 1; i < fib.size(); ++i)
    if (std::abs(fib[i] - anchor_hint) < std::abs(fib[best] - anchor_hint)) best = i;
  double sep = min_separation(fib);
  if (std::abs(fib[best] - anchor_hint) > 0.5 * sep)
    throw TrackingAmbiguity("anchor hint does not identify a sheet");
  BranchGerm g;
  g.base = z;
  g.anchor = fib[best];
  g.jet = sheet_jet(f, z, g.anchor, tol.jet_order);
  return g;
}

namespace {

// One adaptive tracking step of the whole fiber from (z0, fib) to z1.
// Returns false if the step must be halved.
bool fiber_step(const AlgebraicFunctionDef& f, cplx z0, cplx z1,
                std::vector<cplx>& fib) {
  std::vector<cplx> pred = fib;
  cplx dz = z1 - z0;
  for (size_t i = 0; i < fib.size(); ++i) {
    cplx d;
    try {
      d = f.fiber_derivative(z0, fib[i]);
    } catch (const NearDiscriminant&) {
      return false;
    }
    pred[i] = fib[i] + d * dz;
  }
  std::vector<cplx> corrected;
  try {
    corrected = f.fiber(z1, &pred);
  } catch (const LeadingCoefficientVanishes&) {
    return false;
  }
  double sep = min_separation(corrected);
  // each corrected root must stay close to its prediction, and the
  // assignment prediction -> corrected must be a bijection
  for (size_t i = 0; i < corrected.size(); ++i)
    if (std::abs(corrected[i] - pred[i]) > 0.5 * sep) return false;
  fib = std::move(corrected);
  return true;
}

void track_along(const AlgebraicFunctionDef& f, const std::function<cplx(double)>& zfun,
                 double s0, double s1, std::vector<cplx>& fib, const Tolerances&) {
  double floor_step = 1e-12;
  double s = s0;
  cplx z = zfun(s0);
  double dznorm = std::abs(zfun(s1) - zfun(s0)) + 1e-300;
  double initial = 0.1 * f.min_disc_distance(z) / dznorm;
  double h = std::clamp(initial, 1e-6, 0.25) * (s1 - s0);
  if (h <= 0) h = (s1 - s0) * 0.1;
  while (s < s1) {
    double step = std::min(h, s1 - s);
    bool ok = false;
    for (; step > floor_step * (s1 - s0 + 1.0); step *= 0.5) {
      cplx znext = zfun(s + step);
      std::vector<cplx> trial = fib;
      if (fiber_step(f, z, znext, trial)) {
        fib = std::move(trial);
        z = znext;
        s += step;
        ok = true;
        break;
      }
    }
    if (!ok)
      throw TrackingAmbiguity("fiber tracking failed to converge (path too close to a "
                              "discriminant point?)");
    h = std::min(step * 2.0, 0.25 * (s1 - s0));
  }
}

}  // namespace

std::vector<cplx> track_fiber_segment(const AlgebraicFunctionDef& f, cplx z0, cplx z1,
                                      const std::vector<cplx>& start_fiber, const Tolerances& tol) {
  std::vector<cplx> fib = start_fiber;
  track_along(f, [&](double s) { return z0 + s * (z1 - z0); }, 0.0, 1.0, fib, tol);
  return fib;
}

std::vector<cplx> track_fiber(const AlgebraicFunctionDef& f, const PiecewisePath& path,
                              const std::vector<cplx>& start_fiber, const Tolerances& tol) {
  std::vector<cplx> fib = start_fiber;
  for (const auto& p : path.pieces)
    track_along(f, [&](double s) { return p.point(s); }, 0.0, 1.0, fib, tol);
  return fib;
}

BranchGerm continue_branch(const AlgebraicFunctionDef& f, const BranchGerm& germ,
                           const PiecewisePath& path, const Tolerances& tol) {
  if (std::abs(path.start() - germ.base) > 1e-6 * (1.0 + std::abs(germ.base)))
    throw InputError("path does not start at the germ's base point");
  std::vector<cplx> fib = f.fiber(germ.base);
  size_t mark = 0;
  for (size_t i = 1; i < fib.size(); ++i)
    if (std::abs(fib[i] - germ.anchor) < std::abs(fib[mark] - germ.anchor)) mark = i;
  if (std::abs(fib[mark] - germ.anchor) > 0.5 * min_separation(fib))
    throw TrackingAmbiguity("germ anchor does not match the fiber");
  // keep the marked index: permute so the mark is slot 0, track, read off
  std::swap(fib[0], fib[mark]);
  std::vector<cplx> end_fib = track_fiber(f, path, fib, tol);
  return germ_at(f, path.end(), end_fib[0], tol);
}

MonodromyReport monodromy_generators(const AlgebraicFunctionDef& f, cplx basepoint,
                                     const Tolerances& tol) {
  MonodromyReport rep;
  rep.basepoint = basepoint;
  std::vector<cplx> punctures = f.discriminant_points;
  // angular order of tails around the basepoint
  std::sort(punctures.begin(), punctures.end(), [&](cplx a, cplx b) {
    return std::arg(a - basepoint) < std::arg(b - basepoint);
  });

  std::vector<cplx> base_fiber = f.fiber(basepoint);
  std::vector<BranchGerm> base = branches_at(f, basepoint, tol);
  // base[k].anchor is the sorted order; build fiber in slot order
  std::vector<cplx> slot_fiber(base.size());
  for (size_t k = 0; k < base.size(); ++k) slot_fiber[k] = base[k].anchor;

  auto perm_of_loop = [&](const PiecewisePath& loop) {
    std::vector<cplx> end = track_fiber(f, loop, slot_fiber, tol);
    std::vector<int> perm(end.size(), -1);
    double sep = min_separation(slot_fiber);
    for (size_t i = 0; i < end.size(); ++i) {
      size_t best = 0;
      for (size_t j = 1; j < slot_fiber.size(); ++j)
        if (std::abs(end[i] - slot_fiber[j]) < std::abs(end[i] - slot_fiber[best])) best = j;
      if (std::abs(end[i] - slot_fiber[best]) > 0.45 * sep)
        throw TrackingAmbiguity("loop continuation does not land on the starting fiber");
      perm[i] = static_cast<int>(best);
    }
    // bijectivity
    std::vector<int> seen(perm.size(), 0);
    for (int p : perm)
      if (p < 0 || seen[static_cast<size_t>(p)]++)
        throw TrackingAmbiguity("loop permutation not a bijection");
    return perm;
  };

  for (cplx p : punctures) {
    double rp = std::abs(p - basepoint);
    for (cplx q : punctures)
      if (std::abs(q - p) > 1e-12) rp = std::min(rp, std::abs(q - p));
    rp *= 0.25;
    cplx dir = (p - basepoint) / std::abs(p - basepoint);
    cplx touch = p - rp * dir;
    std::vector<Segment> segs;
    segs.push_back(Segment::line(basepoint, touch));
    segs.push_back(Segment::circle(p, rp, true, std::arg(touch - p)));
    segs.push_back(Segment::line(touch, basepoint));
    PiecewisePath loop = PiecewisePath::make_raw(std::move(segs), false, tol);
    MonodromyGenerator gen;
    gen.puncture = p;
    gen.perm = perm_of_loop(loop);
    gen.loop = std::move(loop);
    rep.generators.push_back(std::move(gen));
  }

  // monodromy at infinity: the big circle oriented so that it is a positive
  // loop around the point at infinity (clockwise in the finite plane)
  {
    double R = std::abs(basepoint) + 1.0;
    for (cplx p : punctures) R = std::max(R, 2.0 * std::abs(p) + 1.0);
    cplx dir = basepoint == cplx{0.0} ? cplx{1.0} : basepoint / std::abs(basepoint);
    cplx far = R * dir;
    std::vector<Segment> segs;
    segs.push_back(Segment::line(basepoint, far));
    segs.push_back(Segment::circle(cplx{0.0}, R, false, std::arg(far)));
    segs.push_back(Segment::line(far, basepoint));
    PiecewisePath loop = PiecewisePath::make_raw(std::move(segs), false, tol);
    rep.infinity_perm = perm_of_loop(loop);
  }

  // product of generators (tail angular order) followed by the infinity loop
  // must be the identity
  {
    std::vector<int> prod(static_cast<size_t>(f.n));
    std::iota(prod.begin(), prod.end(), 0);
    for (const auto& g : rep.generators) {
      std::vector<int> next(prod.size());
      for (size_t i = 0; i < prod.size(); ++i) next[i] = g.perm[static_cast<size_t>(prod[i])];
      prod = std::move(next);
    }
    for (size_t i = 0; i < prod.size(); ++i)
      if (rep.infinity_perm[static_cast<size_t>(prod[i])] != static_cast<int>(i))
        throw TrackingAmbiguity("product of monodromy generators does not match infinity");
  }

  std::vector<std::vector<int>> gens;
  for (const auto& g : rep.generators) gens.push_back(g.perm);
  PermGroupInfo info = analyze_permutation_group(gens, f.n);
  rep.transitive = info.transitive;
  rep.doubly_transitive = info.doubly_transitive;
  rep.order = info.order;
  rep.order_exact = info.order_exact;
  return rep;
}

PermGroupInfo analyze_permutation_group(const std::vector<std::vector<int>>& gens, int n,
                                        long long cap) {
  PermGroupInfo info;
  // orbit of 0
  {
    std::vector<int> orbit{0};
    std::vector<bool> in(static_cast<size_t>(n), false);
    in[0] = true;
    for (size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : gens) {
        int y = g[static_cast<size_t>(orbit[i])];
        if (!in[static_cast<size_t>(y)]) {
          in[static_cast<size_t>(y)] = true;
          orbit.push_back(y);
        }
      }
    info.transitive = static_cast<int>(orbit.size()) == n;
  }
  // group enumeration with a cap
  std::set<std::vector<int>> elems;
  std::vector<int> id(static_cast<size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  elems.insert(id);
  std::vector<std::vector<int>> frontier{id};
  bool capped = false;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        std::vector<int> h(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) h[static_cast<size_t>(i)] = g[static_cast<size_t>(e[static_cast<size_t>(i)])];
        if (elems.insert(h).second) next.push_back(std::move(h));
        if (static_cast<long long>(elems.size()) > cap) {
          capped = true;
          break;
        }
      }
    if (capped) break;
    frontier = std::move(next);
  }
  info.order = static_cast<long long>(elems.size());
  info.order_exact = !capped;

  if (n < 2) {
    info.doubly_transitive = n == 1 ? false : false;
    return info;
  }
  if (n == 2) {
    // S2 acting on 2 points is vacuously 2-transitive when transitive
    info.doubly_transitive = info.transitive;
    return info;
  }
  // orbit of the ordered pair (0,1) under the generated group action
  std::set<std::pair<int, int>> porbit;
  std::vector<std::pair<int, int>> stack{{0, 1}};
  porbit.insert({0, 1});
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      std::pair<int, int> y{g[static_cast<size_t>(a)], g[static_cast<size_t>(b)]};
      if (porbit.insert(y).second) stack.push_back(y);
    }
  }
  info.doubly_transitive = static_cast<long long>(porbit.size()) ==
                           static_cast<long long>(n) * (n - 1);
  return info;
}

RamificationProfile ramification_profile(const AlgebraicFunctionDef& f, cplx z0, int jet_order,
                                         const Tolerances& tol) {
  RamificationProfile prof;
  prof.point = z0;
  double dist = std::numeric_limits<double>::infinity();
  for (cplx p : f.discriminant_points)
    if (std::abs(p - z0) > 1e-9 * (1.0 + f.scale)) dist = std::min(dist, std::abs(p - z0));
  if (!std::isfinite(dist)) dist = 1.0 + f.scale;
  double rho = 0.1 * dist;
  prof.circle_radius = rho;

  cplx zstart = z0 + rho;
  std::vector<cplx> fib = f.fiber(zstart);
  prof.base_fiber = fib;
  int n = static_cast<int>(fib.size());

  // local monodromy permutation around z0
  int M = std::max(64, 16 * (jet_order + 1));
  std::vector<std::vector<cplx>> samples(static_cast<size_t>(M + 1));
  std::vector<cplx> cur = fib;
  samples[0] = cur;
  for (int j = 1; j <= M; ++j) {
    cplx za = z0 + std::polar(rho, 2.0 * PI * (j - 1) / M);
    cplx zb = z0 + std::polar(rho, 2.0 * PI * j / M);
    track_along(f, [&](double s) { return za + s * (zb - za); }, 0.0, 1.0, cur, tol);
    samples[static_cast<size_t>(j)] = cur;
  }
  std::vector<int> perm(static_cast<size_t>(n), -1);
  double sep = min_separation(fib);
  for (int i = 0; i < n; ++i) {
    int best = 0;
    for (int j = 1; j < n; ++j)
      if (std::abs(samples.back()[static_cast<size_t>(i)] - fib[static_cast<size_t>(j)]) <
          std::abs(samples.back()[static_cast<size_t>(i)] - fib[static_cast<size_t>(best)]))
        best = j;
    if (std::abs(samples.back()[static_cast<size_t>(i)] - fib[static_cast<size_t>(best)]) > 0.45 * sep)
      throw TrackingAmbiguity("local monodromy did not return to the fiber");
    perm[static_cast<size_t>(i)] = best;
  }

  // cycles of the local monodromy
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<size_t>(i)]) continue;
    RamificationProfile::Cycle cyc;
    int cursor = i;
    do {
      used[static_cast<size_t>(cursor)] = true;
      cyc.sheets.push_back(cursor);
      cursor = perm[static_cast<size_t>(cursor)];
    } while (cursor != i);

    // normalized branch sum over the cycle sampled along the circle, fitted
    // to integer powers of (z - z0)
    std::vector<cplx> havg(static_cast<size_t>(M));
    for (int j = 0; j < M; ++j) {
      cplx s = 0.0;
      for (int sheet : cyc.sheets) s += f.value_of(samples[static_cast<size_t>(j)][static_cast<size_t>(sheet)]);
      havg[static_cast<size_t>(j)] = s / static_cast<double>(cyc.sheets.size());
    }
    Jet gr(jet_order);
    for (int m = 0; m <= jet_order; ++m) {
      cplx s = 0.0;
      for (int j = 0; j < M; ++j)
        s += havg[static_cast<size_t>(j)] * std::polar(std::pow(rho, -m), -2.0 * PI * j * m / M);
      gr[m] = s / static_cast<double>(M);
    }
    // residual: reconstruction error on the samples
    double resid = 0.0, scale = 1.0;
    for (int j = 0; j < M; ++j) {
      cplx h = z0 + std::polar(rho, 2.0 * PI * j / M) - z0;
      resid = std::max(resid, std::abs(gr.eval(h) - havg[static_cast<size_t>(j)]));
      scale = std::max(scale, std::abs(havg[static_cast<size_t>(j)]));
    }
    cyc.fit_residual = resid / scale;
    cyc.regular_part = std::move(gr);
    prof.cycles.push_back(std::move(cyc));
  }
  return prof;
}

PushforwardResult pushforward_assignment(const CPoly& P, const CPoly& Q,
                                         const PiecewisePath& Gamma, int samples_per_piece,
                                         const Tolerances& tol) {
  PushforwardResult res;
  res.f = AlgebraicFunctionDef::from_composite(P, Q);

  CPoly dP = P.derivative();
  std::vector<cplx> crit = poly_roots(dP);
  // interior critical points are not allowed on Gamma
  for (cplx c : crit) {
    double d = Gamma.distance(c);
    double dend = std::min(std::abs(c - Gamma.start()), std::abs(c - Gamma.end()));
    if (d < 1e-9 * (1.0 + std::abs(c)) && dend > 1e-9 * (1.0 + std::abs(c)))
      throw CriticalPointOnPath("interior critical point of P on Gamma");
  }

  std::vector<Segment> gamma_segs;
  for (const auto& piece : Gamma.pieces) {
    std::vector<cplx> pts;
    pts.reserve(static_cast<size_t>(samples_per_piece) + 1);
    for (int k = 0; k <= samples_per_piece; ++k)
      pts.push_back(P.eval(piece.point(static_cast<double>(k) / samples_per_piece)));
    gamma_segs.push_back(Segment::polyline(std::move(pts)));
    res.upstairs.push_back(piece);
    res.seed_anchor.push_back(piece.point(0.5));
  }
  cplx za = P.eval(Gamma.start()), zb = P.eval(Gamma.end());
  res.closure_point = za;
  res.closes = std::abs(za - zb) < 1e-9 * (1.0 + std::abs(za));
  res.gamma = PiecewisePath::make(std::move(gamma_segs), res.closes, tol);

  res.sigma_points.push_back(za);
  if (!res.closes) res.sigma_points.push_back(zb);
  for (const auto& c : res.gamma.crossings) res.sigma_points.push_back(c.point);
  return res;
}

}  // namespace branchcut
