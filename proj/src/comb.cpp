// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#include "branchcut/comb.hpp"

#include <algorithm>
#include <numeric>

namespace branchcut {

std::string LoopWord::str() const {
  std::string s;
  for (auto [g, e] : letters) {
    if (!s.empty()) s += ' ';
    s += 'g' + std::to_string(g);
    if (e < 0) s += "^-1";
  }
  return s.empty() ? "1" : s;
}

namespace {

// path suffix of S from a point on piece `pidx` at local parameter t
PiecewisePath path_suffix(const PiecewisePath& S, int pidx, double t, const Tolerances& tol) {
  std::vector<Segment> segs;
  const Piece& p = S.pieces[static_cast<size_t>(pidx)];
  if (t < 1.0 - 1e-12) {
    if (!p.is_arc) {
      segs.push_back(Segment::line(p.point(t), p.b));
    } else {
      segs.push_back(Segment::arc(p.point(t), p.b, p.center, p.sweep >= 0));
    }
  }
  for (size_t k = static_cast<size_t>(pidx) + 1; k < S.pieces.size(); ++k) {
    const Piece& q = S.pieces[k];
    if (!q.is_arc)
      segs.push_back(Segment::line(q.a, q.b));
    else
      segs.push_back(Segment::arc(q.a, q.b, q.center, q.sweep >= 0));
  }
  if (segs.empty()) segs.push_back(Segment::line(S.end(), S.end() + cplx{1e-14, 0}));
  return PiecewisePath::make_raw(std::move(segs), false, tol);
}

int slot_of_anchor(const std::vector<BranchGerm>& slots, cplx anchor) {
  int best = 0;
  for (size_t i = 1; i < slots.size(); ++i)
    if (std::abs(slots[i].anchor - anchor) < std::abs(slots[static_cast<size_t>(best)].anchor - anchor))
      best = static_cast<int>(i);
  double sep = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < slots.size(); ++i)
    for (size_t j = i + 1; j < slots.size(); ++j)
      sep = std::min(sep, std::abs(slots[i].anchor - slots[j].anchor));
  if (slots.size() > 1 && std::abs(slots[static_cast<size_t>(best)].anchor - anchor) > 0.45 * sep)
    throw TrackingAmbiguity("cannot resolve the branch slot at the base point");
  return best;
}

// (component, segment, local segment parameter) of a crossing against the
// concatenated component pieces
struct GammaSpot {
  int component = 0, segment = 0;
  double seg_t = 0.0;
};

GammaSpot decode_crossing(const IntegrandAssignment& a, int global_piece, double tb) {
  GammaSpot spot;
  int offset = 0;
  for (size_t ci = 0; ci < a.components.size(); ++ci) {
    int n = static_cast<int>(a.components[ci].pieces.size());
    if (global_piece < offset + n) {
      int local = global_piece - offset;
      const auto& path = a.components[ci];
      spot.component = static_cast<int>(ci);
      spot.segment = path.pieces[static_cast<size_t>(local)].seg_index;
      int pb = path.piece_of_segment_begin[static_cast<size_t>(spot.segment)];
      int pe = spot.segment + 1 < static_cast<int>(path.segments.size())
                   ? path.piece_of_segment_begin[static_cast<size_t>(spot.segment) + 1]
                   : static_cast<int>(path.pieces.size());
      spot.seg_t = (static_cast<double>(local - pb) + tb) / (pe - pb);
      return spot;
    }
    offset += n;
  }
  throw Error("crossing decode out of range");
}

}  // namespace

Jet CombContext::jet_of(const std::vector<long long>& coef) const {
  Jet out(slots.empty() ? 0 : slots[0].jet.order());
  for (size_t i = 0; i < coef.size(); ++i)
    if (coef[i] != 0) out += slots[i].jet * cplx(static_cast<double>(coef[i]));
  return out;
}

FormalBranchSum CombContext::make_sum(std::vector<long long> coef) const {
  FormalBranchSum s;
  s.base = base;
  s.evaluated = jet_of(coef);
  s.coef = std::move(coef);
  return s;
}

FormalBranchSum sum_of_branches(const IntegrandAssignment& a, const PiecewisePath& S) {
  std::vector<cplx> forbidden = a.forbidden_points();
  auto crossings = crossing_sequence(S, std::span<const PiecewisePath>(a.components.data(),
                                                                       a.components.size()),
                                     forbidden, a.tol);
  std::vector<BranchGerm> end_slots = branches_at(a.f, S.end(), a.tol);
  std::vector<long long> coef(end_slots.size(), 0);
  for (const auto& cr : crossings) {
    GammaSpot spot = decode_crossing(a, cr.piece_b, cr.tb);
    BranchGerm g = a.germ_on_segment(spot.component, spot.segment, spot.seg_t);
    PiecewisePath rest = path_suffix(S, cr.piece_a, cr.ta, a.tol);
    BranchGerm moved = continue_branch(a.f, g, rest, a.tol);
    int slot = slot_of_anchor(end_slots, moved.anchor);
    coef[static_cast<size_t>(slot)] += cr.sign;
  }
  FormalBranchSum out;
  out.base = S.end();
  out.coef = std::move(coef);
  Jet j(end_slots.empty() ? 0 : end_slots[0].jet.order());
  for (size_t i = 0; i < out.coef.size(); ++i)
    if (out.coef[i] != 0) j += end_slots[i].jet * cplx(static_cast<double>(out.coef[i]));
  out.evaluated = j;
  return out;
}

CombContext build_comb_context(const IntegrandAssignment& a, cplx base) {
  CombContext ctx;
  ctx.base = base;
  ctx.assignment = &a;
  ctx.slots = branches_at(a.f, base, a.tol);

  struct Puncture {
    cplx z;
    std::string kind;
  };
  std::vector<Puncture> punct;
  for (const auto& sp : a.sigma) {
    std::string kind = sp.kind == SigmaPoint::Endpoint        ? "endpoint"
                       : sp.kind == SigmaPoint::CrossingPoint ? "crossing"
                       : sp.kind == SigmaPoint::Jump          ? "jump"
                                                              : "ramification";
    punct.push_back({sp.z, kind});
  }
  for (cplx p : a.sigma1) punct.push_back({p, "off-curve"});
  // dedupe coincident punctures
  {
    std::vector<Puncture> uniq;
    for (const auto& p : punct) {
      bool dup = false;
      for (const auto& q : uniq)
        if (std::abs(p.z - q.z) < 1e-7 * (1.0 + std::abs(q.z))) dup = true;
      if (!dup) uniq.push_back(p);
    }
    punct = std::move(uniq);
  }
  std::sort(punct.begin(), punct.end(), [&](const Puncture& x, const Puncture& y) {
    return std::arg(x.z - base) < std::arg(y.z - base);
  });

  std::vector<cplx> forbidden = a.forbidden_points();

  for (const auto& p : punct) {
    double rp = std::abs(p.z - base);
    for (const auto& q : punct)
      if (std::abs(q.z - p.z) > 1e-12) rp = std::min(rp, std::abs(q.z - p.z));
    rp *= 0.25;

    CombGenerator gen;
    gen.puncture = p.z;
    gen.kind = p.kind;

    bool built = false;
    for (int attempt = 0; attempt < 24 && !built; ++attempt) {
      double jitter = attempt == 0 ? 0.0 : 0.23 * attempt * (attempt % 2 ? 1 : -1);
      double shrink = std::pow(0.82, attempt / 2);
      double r = rp * shrink;
      cplx dir = (p.z - base) / std::abs(p.z - base);
      // bent tail through a jittered waypoint
      cplx waypoint = base + 0.5 * (p.z - base) * std::polar(1.0, jitter * 0.3);
      cplx touch = p.z - r * dir * std::polar(1.0, jitter);
      std::vector<Segment> segs;
      if (attempt == 0)
        segs.push_back(Segment::line(base, touch));
      else
        segs.push_back(Segment::polyline({base, waypoint, touch}));
      segs.push_back(Segment::circle(p.z, r, true, std::arg(touch - p.z)));
      if (attempt == 0)
        segs.push_back(Segment::line(touch, base));
      else
        segs.push_back(Segment::polyline({touch, waypoint, base}));
      try {
        PiecewisePath loop = PiecewisePath::make_raw(segs, false, a.tol);
        FormalBranchSum s = sum_of_branches(a, loop);
        // permutation: continue each slot around the loop
        std::vector<cplx> fib(ctx.slots.size());
        for (size_t i = 0; i < ctx.slots.size(); ++i) fib[i] = ctx.slots[i].anchor;
        std::vector<cplx> end = track_fiber(a.f, loop, fib, a.tol);
        std::vector<int> perm(ctx.slots.size(), -1);
        std::vector<int> seen(ctx.slots.size(), 0);
        for (size_t i = 0; i < end.size(); ++i) {
          int s2 = slot_of_anchor(ctx.slots, end[i]);
          perm[i] = s2;
          if (seen[static_cast<size_t>(s2)]++) throw TrackingAmbiguity("loop permutation collision");
        }
        gen.loop = std::move(loop);
        gen.perm = std::move(perm);
        gen.bvec = s.coef;
        gen.bjet = s.evaluated;
        built = true;
      } catch (const NotAdmissible&) {
      } catch (const TrackingAmbiguity&) {
      }
    }
    if (!built)
      throw NotAdmissible("could not realize an admissible loop around puncture (" +
                          std::to_string(p.z.real()) + "," + std::to_string(p.z.imag()) + ")");
    ctx.generators.push_back(std::move(gen));
  }
  return ctx;
}

namespace {

std::vector<long long> act(const std::vector<int>& perm, const std::vector<long long>& x) {
  std::vector<long long> y(x.size(), 0);
  for (size_t i = 0; i < x.size(); ++i) y[static_cast<size_t>(perm[i])] = x[i];
  return y;
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return q;
}

void apply_letter(const CombContext& ctx, int gen, int expo, std::vector<long long>& x,
                  std::vector<int>& perm_accum) {
  const auto& g = ctx.generators[static_cast<size_t>(gen)];
  std::vector<int> perm = expo > 0 ? g.perm : inverse_perm(g.perm);
  std::vector<long long> b = g.bvec;
  if (expo < 0) {
    // value(e^{-1}) = -(e^{-1})^* value(e)
    b = act(perm, b);
    for (auto& v : b) v = -v;
  }
  x = act(perm, x);
  for (size_t i = 0; i < b.size(); ++i) x[i] += b[i];
  std::vector<int> next(perm_accum.size());
  for (size_t i = 0; i < perm_accum.size(); ++i)
    next[i] = perm[static_cast<size_t>(perm_accum[i])];
  perm_accum = std::move(next);
}

}  // namespace

FormalBranchSum word_action(const CombContext& ctx, const LoopWord& word,
                            const FormalBranchSum& x) {
  std::vector<long long> v = x.coef;
  if (v.empty()) v.assign(ctx.slots.size(), 0);
  std::vector<int> perm(ctx.slots.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (auto [g, e] : word.letters) apply_letter(ctx, g, e, v, perm);
  return ctx.make_sum(std::move(v));
}

FormalBranchSum word_value(const CombContext& ctx, const LoopWord& word) {
  FormalBranchSum zero;
  zero.base = ctx.base;
  zero.coef.assign(ctx.slots.size(), 0);
  zero.evaluated = Jet(ctx.slots.empty() ? 0 : ctx.slots[0].jet.order());
  return word_action(ctx, word, zero);
}

MonodromyVerdict classify_monodromy(const IntegrandAssignment& a, cplx base, int word_bound) {
  CombContext ctx = build_comb_context(a, base);
  return classify_monodromy(ctx, word_bound);
}

MonodromyVerdict classify_monodromy(const CombContext& ctx, int word_bound) {
  MonodromyVerdict verdict;
  verdict.word_bound = word_bound;
  const Tolerances& tol = ctx.assignment->tol;
  verdict.eps_jet = tol.eps_jet;

  struct State {
    std::vector<long long> vec;
    Jet jet;
    LoopWord word;
    std::vector<int> perm;
  };
  std::vector<State> states;
  auto find_state = [&](const Jet& j) {
    for (size_t i = 0; i < states.size(); ++i)
      if (jets_equal(states[i].jet, j, tol.eps_jet)) return static_cast<int>(i);
    return -1;
  };

  State zero;
  zero.vec.assign(ctx.slots.size(), 0);
  zero.jet = Jet(ctx.slots.empty() ? 0 : ctx.slots[0].jet.order());
  zero.perm.resize(ctx.slots.size());
  std::iota(zero.perm.begin(), zero.perm.end(), 0);
  states.push_back(zero);

  const long long orbit_cap = 512;
  std::vector<int> id(ctx.slots.size());
  std::iota(id.begin(), id.end(), 0);

  std::vector<size_t> frontier{0};
  bool closed = true;
  for (int depth = 0; depth < word_bound && !frontier.empty(); ++depth) {
    std::vector<size_t> next;
    for (size_t si : frontier) {
      for (size_t gi = 0; gi < ctx.generators.size(); ++gi) {
        for (int expo : {1, -1}) {
          State cand = states[si];
          apply_letter(ctx, static_cast<int>(gi), expo, cand.vec, cand.perm);
          cand.word.letters.push_back({static_cast<int>(gi), expo});
          cand.jet = ctx.jet_of(cand.vec);

          // growth witness: identity sheet permutation with a nonzero sum
          if (cand.perm == id && !cand.jet.is_zero(tol.eps_jet * (1.0 + cand.jet.max_abs()))) {
            bool grows = true;
            std::vector<long long> v = cand.vec;
            std::vector<int> pm = cand.perm;
            for (int n = 2; n <= 4 && grows; ++n) {
              for (auto [g, e] : cand.word.letters) apply_letter(ctx, g, e, v, pm);
              Jet jn = ctx.jet_of(v);
              Jet expect = cand.jet * cplx(static_cast<double>(n));
              if (!jets_equal(jn, expect, 10.0 * tol.eps_jet)) grows = false;
            }
            if (grows) {
              verdict.kind = MonodromyVerdict::Infinite;
              verdict.witness = cand.word;
              for (const auto& st : states) verdict.orbit.push_back(st.jet);
              return verdict;
            }
          }

          if (find_state(cand.jet) >= 0) continue;
          if (static_cast<long long>(states.size()) >= orbit_cap) {
            closed = false;
            continue;
          }
          states.push_back(cand);
          next.push_back(states.size() - 1);
        }
      }
    }
    if (!next.empty() && depth + 1 == word_bound) closed = false;
    frontier = std::move(next);
  }
  if (!frontier.empty()) closed = false;

  for (const auto& st : states) verdict.orbit.push_back(st.jet);
  verdict.orbit_size = static_cast<long long>(states.size());
  if (closed) {
    verdict.kind = states.size() == 1 ? MonodromyVerdict::Trivial : MonodromyVerdict::Finite;
  } else {
    verdict.kind = MonodromyVerdict::Inconclusive;
  }
  return verdict;
}

LocalConditionReport local_condition_report(const CombContext& ctx) {
  LocalConditionReport rep;
  rep.all_pass = true;
  const Tolerances& tol = ctx.assignment->tol;
  for (const auto& g : ctx.generators) {
    LocalConditionEntry e;
    e.point = g.puncture;
    e.kind = g.kind;
    e.residual = g.bjet.max_abs();
    e.holds = g.bjet.is_zero(tol.eps_jet * (1.0 + e.residual));
    rep.all_pass = rep.all_pass && e.holds;
    rep.entries.push_back(e);
  }
  return rep;
}

namespace {

// poles of the integrand branches in the finite plane: zeros of the leading
// w-coefficient (none for polynomial composites)
std::vector<cplx> poles_of_g(const AlgebraicFunctionDef& f) {
  if (f.composite) return {};
  if (f.wcoef.back().degree() < 1) return {};
  return poly_roots(f.wcoef.back());
}

// an admissible path from `from` to `to` dodging gamma when required
PiecewisePath straight_or_detour(const IntegrandAssignment& a, cplx from, cplx to,
                                 const std::function<bool(const PiecewisePath&)>& ok) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Segment> segs;
    if (attempt == 0) {
      segs.push_back(Segment::line(from, to));
    } else {
      double ang = 0.7 * attempt * (attempt % 2 ? 1.0 : -1.0);
      cplx mid = 0.5 * (from + to) +
                 std::polar(0.12 * attempt * std::abs(to - from), ang);
      segs.push_back(Segment::polyline({from, mid, to}));
    }
    try {
      PiecewisePath p = PiecewisePath::make_raw(std::move(segs), false, a.tol);
      if (ok(p)) return p;
    } catch (const Error&) {
    }
  }
  throw NotAdmissible("no admissible auxiliary path found");
}

}  // namespace

VanishingVerdict vanishing_test(const IntegrandAssignment& a) {
  VanishingVerdict v;

  // base point in the unbounded region
  cplx base;
  {
    double best = -1.0;
    for (int k = 0; k < 16; ++k) {
      cplx cand = a.center + std::polar(2.4 * std::max(a.radius, 1.0), 2.0 * PI * k / 16 + 0.21);
      double d = std::numeric_limits<double>::infinity();
      for (cplx p : a.forbidden_points()) d = std::min(d, std::abs(cand - p));
      for (cplx p : a.f.discriminant_points) d = std::min(d, std::abs(cand - p));
      if (d > best) {
        best = d;
        base = cand;
      }
    }
  }

  CombContext ctx = build_comb_context(a, base);
  MonodromyVerdict mv = classify_monodromy(ctx, a.tol.word_bound);
  v.monodromy_trivial = mv.kind == MonodromyVerdict::Trivial;
  if (!v.monodromy_trivial) {
    v.vanishes_on_D0 = false;
    return v;
  }

  std::vector<cplx> poles = poles_of_g(a.f);
  if (poles.empty()) {
    // no poles anywhere: every branch sum is regular
    v.pole_shortcut = true;
    v.vanishes_on_D0 = true;
    return v;
  }

  std::vector<PiecewisePath> gamma = a.components;
  bool all_outside = true;
  for (cplx p : poles)
    if (winding_number(std::span<const PiecewisePath>(gamma.data(), gamma.size()), p) != 0)
      all_outside = false;
  if (all_outside) {
    v.pole_shortcut = true;
    v.vanishes_on_D0 = true;
    return v;
  }

  // regularity of the branch sums at each pole inside the curve
  DomainPartition part = build_partition(std::span<const PiecewisePath>(gamma.data(), gamma.size()),
                                         a.tol);
  v.vanishes_on_D0 = true;
  for (cplx p : poles) {
    int region = part.locate(p);
    if (region <= 0) continue;  // in the unbounded region: cannot break regularity
    VanishingVerdict::PoleCheck chk;
    chk.pole = p;
    chk.region = region;

    // branch sum F_j carried from the base into the pole's region
    cplx rep = part.regions[static_cast<size_t>(region)].rep;
    std::vector<cplx> forbidden = a.forbidden_points();
    PiecewisePath S = straight_or_detour(a, base, rep, [&](const PiecewisePath& path) {
      try {
        crossing_sequence(path, std::span<const PiecewisePath>(gamma.data(), gamma.size()),
                          forbidden, a.tol);
        return true;
      } catch (const NotAdmissible&) {
        return false;
      }
    });
    FormalBranchSum F = sum_of_branches(a, S);

    // continue the end fiber to a ring around the pole, inside the region
    double ring = std::numeric_limits<double>::infinity();
    for (const auto& c : gamma) ring = std::min(ring, c.distance(p));
    for (cplx q : poles)
      if (std::abs(q - p) > 1e-12) ring = std::min(ring, std::abs(q - p));
    ring *= 0.45;

    PiecewisePath to_ring =
        straight_or_detour(a, rep, p + cplx{ring, 0.0}, [&](const PiecewisePath& path) {
          try {
            return crossing_sequence(path,
                                     std::span<const PiecewisePath>(gamma.data(), gamma.size()),
                                     forbidden, a.tol)
                .empty();
          } catch (const NotAdmissible&) {
            return false;
          }
        });

    std::vector<BranchGerm> rep_slots = branches_at(a.f, rep, a.tol);
    std::vector<cplx> fib(rep_slots.size());
    for (size_t i = 0; i < rep_slots.size(); ++i) fib[i] = rep_slots[i].anchor;
    std::vector<cplx> ring_fib = track_fiber(a.f, to_ring, fib, a.tol);

    // negative Laurent content of F on the ring by discrete Fourier sums
    int M = 96;
    int neg_orders = 6;
    std::vector<cplx> sums(static_cast<size_t>(M));
    std::vector<cplx> cur = ring_fib;
    double scale = 1.0;
    for (int j = 0; j < M; ++j) {
      if (j > 0) {
        cplx za = p + std::polar(ring, 2.0 * PI * (j - 1) / M);
        cplx zb = p + std::polar(ring, 2.0 * PI * j / M);
        cur = track_fiber_segment(a.f, za, zb, cur, a.tol);
      }
      cplx s = 0.0;
      for (size_t i = 0; i < cur.size(); ++i)
        s += static_cast<double>(F.coef[i]) * a.f.value_of(cur[i]);
      sums[static_cast<size_t>(j)] = s;
      scale = std::max(scale, std::abs(s));
    }
    double worst = 0.0;
    for (int m = 1; m <= neg_orders; ++m) {
      cplx c = 0.0;
      for (int j = 0; j < M; ++j)
        c += sums[static_cast<size_t>(j)] * std::polar(std::pow(ring, m), 2.0 * PI * j * m / M);
      worst = std::max(worst, std::abs(c) / static_cast<double>(M) / scale);
    }
    chk.laurent_norm = worst;
    chk.regular = worst < a.tol.eps_laurent;
    if (!chk.regular) v.vanishes_on_D0 = false;
    v.checks.push_back(chk);
  }
  return v;
}

ContinuationCheck continue_integral(const IntegrandAssignment& a, const PiecewisePath& S,
                                    int extra_samples) {
  ContinuationCheck out;
  const int M = 16;
  cplx t0 = S.start();

  // distance of the starting point to everything singular, used to scale the
  // expansion variable so the quadrature error stays relative
  double d0 = a.distance(t0);
  for (cplx p : a.f.discriminant_points) d0 = std::min(d0, std::abs(p - t0));
  double sigma = 0.6 * d0;

  // Taylor coefficients of I(t0 + sigma u) in u
  std::vector<cplx> coeffs = cauchy_taylor_coeffs(a, t0, M);
  Jet series(M);
  double sp = 1.0;
  for (int m = 0; m <= M; ++m) {
    series[m] = coeffs[static_cast<size_t>(m)] * sp;
    sp *= sigma;
  }

  // walk along S, recentering the series in the scaled variable
  double total = S.total_length;
  double s = 0.0;
  int steps = 0;
  cplx cur = t0;
  while (s < total) {
    double r_est = std::numeric_limits<double>::infinity();
    double head = std::max({std::abs(series[0]), std::abs(series[1]), 1e-8});
    for (int m = M / 2; m <= M; ++m) {
      double am = std::abs(series[m]);
      if (am > 1e-280) r_est = std::min(r_est, std::pow(head / am, 1.0 / m));
    }
    if (!std::isfinite(r_est) || r_est <= 0) r_est = 1.0;
    r_est = std::min(r_est, 1.0);  // scaled units; never trust more than sigma
    // truncated recentering is stable only for steps below radius/(M+1)
    double frac = 0.6 / (M + 1);
    double h = std::min(frac * r_est * sigma, total - s);
    h = std::max(h, 1e-7 * total);
    cplx nxt = S.point_at_length(s + h);
    if (std::abs(nxt - cur) > 1.4 * frac * r_est * sigma) {
      double lo = s, hi = s + h;
      for (int it = 0;
           it < 48 && std::abs(S.point_at_length(hi) - cur) > 1.4 * frac * r_est * sigma; ++it)
        hi = 0.5 * (lo + hi);
      h = hi - s;
      nxt = S.point_at_length(s + h);
    }
    series = series.recenter((nxt - cur) / sigma);
    cur = nxt;
    s += h;
    ++steps;
    if (steps > 20000) throw QuadratureNotConverged("series continuation stalled");
  }
  out.steps = steps;
  out.continued = series.value();

  // expected: I_j - g(S, gamma) at the end of S
  FormalBranchSum F = sum_of_branches(a, S);
  cplx ij = eval_cauchy(a, S.end());
  out.expected = ij - F.evaluated.value();
  out.max_deviation = std::abs(out.continued - out.expected);

  // a few nearby samples via the local jets
  double dist = a.distance(S.end());
  for (int k = 0; k < extra_samples; ++k) {
    cplx dt = std::polar(0.1 * dist, 2.0 * PI * k / extra_samples + 0.31);
    cplx lhs = series.eval(dt / sigma);
    cplx rhs = eval_cauchy(a, S.end() + dt) - F.evaluated.eval(dt);
    out.max_deviation = std::max(out.max_deviation, std::abs(lhs - rhs));
  }
  return out;
}

}  // namespace branchcut
