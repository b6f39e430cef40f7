// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#include "branchcut/partition.hpp"

#include <algorithm>
#include <map>

namespace branchcut {

namespace {

struct SubPiece {
  Piece geo;       // full piece geometry
  int path = 0;
  int seg_global = 0;
  int idx_in_path = 0;
  bool closed_path = false;
};

cplx sub_tangent(const Piece& p, double t, bool forward) {
  cplx d = p.tangent(t);
  return forward ? d : -d;
}

// signed area contribution of the sub-piece traversed t0 -> t1
double area_term(const Piece& p, double t0, double t1) {
  if (!p.is_arc) {
    cplx a = p.point(t0), b = p.point(t1);
    return 0.5 * cross(a, b);
  }
  double al = p.ang0 + t0 * p.sweep, be = p.ang0 + t1 * p.sweep;
  double s = be - al;
  double cx = p.center.real(), cy = p.center.imag();
  return 0.5 * (p.r * p.r * s + p.r * (cx * (std::sin(be) - std::sin(al)) -
                                       cy * (std::cos(be) - std::cos(al))));
}

double darg_sub(const Piece& p, double t0, double t1, cplx z) {
  // total turning of arg(w - z) along the sub-piece
  int steps = 1;
  if (p.is_arc) {
    double d = distance_point_piece(z, p);
    double len = p.len * std::abs(t1 - t0);
    steps = std::max(4, static_cast<int>(std::ceil(len / std::max(d, 1e-12))));
    steps = std::min(steps, 1 << 18);
  } else {
    // straight: one shot is fine unless z is very close
    double d = distance_point_piece(z, p);
    double len = p.len * std::abs(t1 - t0);
    steps = std::max(1, static_cast<int>(std::ceil(len / std::max(4.0 * d, 1e-12))));
    steps = std::min(steps, 1 << 18);
  }
  double acc = 0.0;
  cplx prev = p.point(t0);
  for (int k = 1; k <= steps; ++k) {
    cplx cur = p.point(t0 + (t1 - t0) * k / steps);
    acc += std::arg((cur - z) / (prev - z));
    prev = cur;
  }
  return acc;
}

}  // namespace

bool DomainPartition::point_in_region(int region, cplx z) const {
  if (region == 0) {
    for (int r = 1; r < static_cast<int>(regions.size()); ++r)
      if (point_in_region(r, z)) return false;
    return true;
  }
  // winding of the region's boundary around z: +1 inside
  double acc = 0.0;
  for (const auto& e : edges) {
    const Piece& p = pieces[static_cast<size_t>(e.piece)];
    if (e.face_left == region && e.face_right == region) continue;  // slit inside the region
    if (e.face_left == region) acc += darg_sub(p, e.t0, e.t1, z);
    if (e.face_right == region) acc += darg_sub(p, e.t1, e.t0, z);
  }
  return std::lround(acc / (2.0 * PI)) == 1;
}

int DomainPartition::locate(cplx z) const {
  for (const auto& e : edges) {
    const Piece& p = pieces[static_cast<size_t>(e.piece)];
    // sub-piece proximity: cheap check against the whole piece first
    if (distance_point_piece(z, p) <= eps) {
      // refine against the sub-piece by sampling
      for (int k = 0; k <= 8; ++k) {
        cplx q = p.point(e.t0 + (e.t1 - e.t0) * k / 8.0);
        if (std::abs(q - z) <= 4.0 * eps) return -1;
      }
    }
  }
  for (int r = 1; r < static_cast<int>(regions.size()); ++r)
    if (point_in_region(r, z)) return r;
  return 0;
}

DepthResult point_depth(const DomainPartition& partition, cplx z) {
  int r = partition.locate(z);
  if (r >= 0) return {partition.regions[static_cast<size_t>(r)].depth, false, r};
  // boundary point: shallowest adjacent region
  double best = std::numeric_limits<double>::infinity();
  int depth = 0, region = 0;
  for (const auto& e : partition.edges) {
    const Piece& p = partition.pieces[static_cast<size_t>(e.piece)];
    double d = distance_point_piece(z, p);
    if (d < best) {
      best = d;
      int dl = partition.regions[static_cast<size_t>(e.face_left)].depth;
      int dr = partition.regions[static_cast<size_t>(e.face_right)].depth;
      depth = std::min(dl, dr);
      region = dl <= dr ? e.face_left : e.face_right;
    } else if (d < best + partition.eps) {
      // several edges meet here (vertex); keep the shallowest
      int dl = partition.regions[static_cast<size_t>(e.face_left)].depth;
      int dr = partition.regions[static_cast<size_t>(e.face_right)].depth;
      if (std::min(dl, dr) < depth) {
        depth = std::min(dl, dr);
        region = dl <= dr ? e.face_left : e.face_right;
      }
    }
  }
  return {depth, true, region};
}

DomainPartition build_partition(const PiecewisePath& path, const Tolerances& tol) {
  return build_partition(std::span<const PiecewisePath>(&path, 1), tol);
}

DomainPartition build_partition(std::span<const PiecewisePath> paths, const Tolerances& tol) {
  DomainPartition part;
  if (paths.empty()) throw InputError("no curves given");

  double eps = 0.0;
  std::vector<SubPiece> sub;
  int seg_global = 0;
  std::vector<int> path_of_piece, idx_path_start;
  for (size_t pi = 0; pi < paths.size(); ++pi) {
    const auto& path = paths[pi];
    eps = std::max(eps, path.eps);
    if (!path.closed) part.has_open_components = true;
    int seg_base = seg_global;
    for (size_t k = 0; k < path.pieces.size(); ++k) {
      SubPiece s;
      s.geo = path.pieces[k];
      s.path = static_cast<int>(pi);
      s.idx_in_path = static_cast<int>(k);
      s.seg_global = seg_base + path.pieces[k].seg_index;
      s.closed_path = path.closed;
      sub.push_back(s);
    }
    seg_global += static_cast<int>(path.segments.size());
  }
  part.eps = eps;

  size_t n = sub.size();
  std::vector<int> path_piece_count(paths.size(), 0);
  for (const auto& s : sub) ++path_piece_count[static_cast<size_t>(s.path)];
  auto adjacent = [&](size_t i, size_t j) {
    if (sub[i].path != sub[j].path) return false;
    if (i == j) return true;
    int a = sub[i].idx_in_path, b = sub[j].idx_in_path;
    int cnt = path_piece_count[static_cast<size_t>(sub[i].path)];
    if (std::abs(a - b) == 1) return true;
    if (sub[i].closed_path && ((a == 0 && b == cnt - 1) || (b == 0 && a == cnt - 1))) return true;
    return false;
  };

  // events: (piece, t, position)
  struct Event {
    double t;
    cplx pos;
  };
  std::vector<std::vector<Event>> events(n);
  for (size_t i = 0; i < n; ++i) {
    events[i].push_back({0.0, sub[i].geo.a});
    events[i].push_back({1.0, sub[i].geo.b});
  }

  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (adjacent(i, j)) continue;
      const Piece& A = sub[i].geo;
      const Piece& B = sub[j].geo;
      double ax0 = std::min(A.a.real(), A.b.real()) - (A.is_arc ? 2 * A.r : 0);
      double ax1 = std::max(A.a.real(), A.b.real()) + (A.is_arc ? 2 * A.r : 0);
      double bx0 = std::min(B.a.real(), B.b.real()) - (B.is_arc ? 2 * B.r : 0);
      double bx1 = std::max(B.a.real(), B.b.real()) + (B.is_arc ? 2 * B.r : 0);
      if (ax1 + eps < bx0 || bx1 + eps < ax0) continue;
      double ay0 = std::min(A.a.imag(), A.b.imag()) - (A.is_arc ? 2 * A.r : 0);
      double ay1 = std::max(A.a.imag(), A.b.imag()) + (A.is_arc ? 2 * A.r : 0);
      double by0 = std::min(B.a.imag(), B.b.imag()) - (B.is_arc ? 2 * B.r : 0);
      double by1 = std::max(B.a.imag(), B.b.imag()) + (B.is_arc ? 2 * B.r : 0);
      if (ay1 + eps < by0 || by1 + eps < ay0) continue;

      for (const auto& h : intersect_primitives(A, B, eps)) {
        double ta = h.ta, tb = h.tb;
        cplx pnt = h.point;
        double da = std::min(ta, 1.0 - ta) * A.len;
        double db = std::min(tb, 1.0 - tb) * B.len;
        bool ia = da > eps, ib = db > eps;
        if (ia && ib) {
          cplx u = A.tangent(ta), v = B.tangent(tb);
          if (std::abs(cross(u, v)) < std::sin(tol.theta_min))
            throw TangentialIntersection("tangential contact between curves");
          events[i].push_back({ta, pnt});
          events[j].push_back({tb, pnt});
        } else if (ia != ib) {
          // endpoint-on-interior is only allowed at repeated path vertices,
          // which were validated when the owning path was built
          if (sub[i].path != sub[j].path)
            throw DegenerateContact("curve endpoint touches another curve");
        }
      }
    }
  }

  // node clustering
  std::vector<cplx>& nodes = part.nodes;
  auto node_of = [&](cplx q) {
    for (size_t k = 0; k < nodes.size(); ++k)
      if (std::abs(nodes[k] - q) <= 2.0 * eps) return static_cast<int>(k);
    nodes.push_back(q);
    return static_cast<int>(nodes.size() - 1);
  };

  struct HalfEdge {
    int edge;
    bool fwd;
    int tail, head;
    double angle;
    int next = -1;
    int face = -1;
  };
  std::vector<DomainPartition::Edge>& edges = part.edges;
  std::vector<HalfEdge> halves;

  for (size_t i = 0; i < n; ++i) {
    auto& ev = events[i];
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
    ev.erase(std::unique(ev.begin(), ev.end(),
                         [&](const Event& a, const Event& b) {
                           return std::abs(a.pos - b.pos) <= 2.0 * eps &&
                                  (b.t - a.t) * sub[i].geo.len <= 4.0 * eps;
                         }),
             ev.end());
    for (size_t k = 0; k + 1 < ev.size(); ++k) {
      DomainPartition::Edge e;
      e.piece = static_cast<int>(i);
      e.t0 = ev[k].t;
      e.t1 = ev[k + 1].t;
      e.node0 = node_of(ev[k].pos);
      e.node1 = node_of(ev[k + 1].pos);
      e.segment_id = sub[i].seg_global;
      e.closed_path = sub[i].closed_path;
      e.midpoint = sub[i].geo.point(0.5 * (e.t0 + e.t1));
      if (e.node0 == e.node1 && (e.t1 - e.t0) * sub[i].geo.len <= 4.0 * eps) continue;
      edges.push_back(e);
    }
  }
  for (size_t i = 0; i < n; ++i) part.pieces.push_back(sub[i].geo);

  for (size_t e = 0; e < edges.size(); ++e) {
    const Piece& p = part.pieces[static_cast<size_t>(edges[e].piece)];
    HalfEdge f, b;
    f.edge = static_cast<int>(e);
    f.fwd = true;
    f.tail = edges[e].node0;
    f.head = edges[e].node1;
    f.angle = std::arg(sub_tangent(p, edges[e].t0, true));
    b.edge = static_cast<int>(e);
    b.fwd = false;
    b.tail = edges[e].node1;
    b.head = edges[e].node0;
    b.angle = std::arg(sub_tangent(p, edges[e].t1, false));
    halves.push_back(f);
    halves.push_back(b);
  }

  // outgoing half-edges per node, sorted by angle
  std::vector<std::vector<int>> out(nodes.size());
  for (size_t h = 0; h < halves.size(); ++h) out[static_cast<size_t>(halves[h].tail)].push_back(static_cast<int>(h));
  for (auto& v : out)
    std::sort(v.begin(), v.end(), [&](int a, int b) { return halves[static_cast<size_t>(a)].angle < halves[static_cast<size_t>(b)].angle; });

  auto twin = [&](int h) { return h ^ 1; };

  for (size_t h = 0; h < halves.size(); ++h) {
    int t = twin(static_cast<int>(h));
    const auto& ring = out[static_cast<size_t>(halves[h].head)];
    auto it = std::find(ring.begin(), ring.end(), t);
    if (it == ring.end()) throw Error("half-edge structure inconsistent");
    size_t idx = static_cast<size_t>(it - ring.begin());
    size_t prev = (idx + ring.size() - 1) % ring.size();
    halves[h].next = ring[prev];
  }

  // face cycles
  struct Cycle {
    std::vector<int> hs;
    double area = 0.0;
  };
  std::vector<Cycle> cycles;
  std::vector<int> cycle_of(halves.size(), -1);
  for (size_t h0 = 0; h0 < halves.size(); ++h0) {
    if (cycle_of[h0] >= 0) continue;
    Cycle cyc;
    int h = static_cast<int>(h0);
    do {
      cycle_of[static_cast<size_t>(h)] = static_cast<int>(cycles.size());
      cyc.hs.push_back(h);
      const auto& e = edges[static_cast<size_t>(halves[static_cast<size_t>(h)].edge)];
      const Piece& p = part.pieces[static_cast<size_t>(e.piece)];
      cyc.area += halves[static_cast<size_t>(h)].fwd ? area_term(p, e.t0, e.t1)
                                                     : area_term(p, e.t1, e.t0);
      h = halves[static_cast<size_t>(h)].next;
    } while (h != static_cast<int>(h0));
    cycles.push_back(std::move(cyc));
  }

  double area_tol = 1e-12 * (part.eps / tol.eps_geom_rel) * (part.eps / tol.eps_geom_rel);
  // positive cycles found faces; assign other cycles by containment
  std::vector<int> face_of_cycle(cycles.size(), -1);
  std::vector<size_t> positive;
  for (size_t c = 0; c < cycles.size(); ++c)
    if (cycles[c].area > area_tol) positive.push_back(c);

  auto cycle_winding_around = [&](size_t c, cplx z) {
    double acc = 0.0;
    for (int h : cycles[c].hs) {
      const auto& e = edges[static_cast<size_t>(halves[static_cast<size_t>(h)].edge)];
      const Piece& p = part.pieces[static_cast<size_t>(e.piece)];
      acc += halves[static_cast<size_t>(h)].fwd ? darg_sub(p, e.t0, e.t1, z)
                                                : darg_sub(p, e.t1, e.t0, z);
    }
    return static_cast<int>(std::lround(acc / (2.0 * PI)));
  };
  auto cycles_share_edge = [&](size_t a, size_t b) {
    for (int ha : cycles[a].hs)
      for (int hb : cycles[b].hs)
        if (halves[static_cast<size_t>(ha)].edge == halves[static_cast<size_t>(hb)].edge) return true;
    return false;
  };

  // faces: region 0 = unbounded placeholder first
  int nfaces = 1;
  std::vector<int> face_of_positive(cycles.size(), -1);
  for (size_t c : positive) {
    face_of_cycle[c] = nfaces;
    face_of_positive[c] = nfaces;
    ++nfaces;
  }
  for (size_t c = 0; c < cycles.size(); ++c) {
    if (face_of_cycle[c] >= 0) continue;
    // test point: midpoint of first edge of the cycle
    const auto& e0 = edges[static_cast<size_t>(halves[static_cast<size_t>(cycles[c].hs[0])].edge)];
    cplx probe = e0.midpoint;
    double best_area = std::numeric_limits<double>::infinity();
    int best_face = 0;
    for (size_t pc : positive) {
      if (cycles_share_edge(c, pc)) continue;
      if (cycles[pc].area < best_area && cycle_winding_around(pc, probe) == 1) {
        best_area = cycles[pc].area;
        best_face = face_of_positive[pc];
      }
    }
    face_of_cycle[c] = best_face;
  }

  for (size_t h = 0; h < halves.size(); ++h)
    halves[h].face = face_of_cycle[static_cast<size_t>(cycle_of[h])];
  for (size_t e = 0; e < edges.size(); ++e) {
    edges[e].face_left = halves[2 * e].face;
    edges[e].face_right = halves[2 * e + 1].face;
  }

  // representative points
  part.regions.resize(static_cast<size_t>(nfaces));
  for (int r = 0; r < nfaces; ++r) part.regions[static_cast<size_t>(r)].id = r;

  double far_scale = part.eps / tol.eps_geom_rel;  // ~ curve diameter
  cplx far_point;
  {
    double hix = -1e300, hiy = -1e300;
    for (const auto& q : nodes) {
      hix = std::max(hix, q.real());
      hiy = std::max(hiy, q.imag());
    }
    far_point = cplx{hix + 3.0 * far_scale + 1.0, hiy + 2.0 * far_scale + 1.0};
  }
  part.regions[0].rep = far_point;

  auto region_probe = [&](int face) -> cplx {
    for (const auto& e : edges) {
      if (e.face_left != face && e.face_right != face) continue;
      if (e.face_left == e.face_right) continue;
      const Piece& p = part.pieces[static_cast<size_t>(e.piece)];
      double tm = 0.5 * (e.t0 + e.t1);
      cplx m = p.point(tm);
      cplx dir = p.tangent(tm);
      cplx nrm = I_UNIT * dir;  // left normal
      double side = e.face_left == face ? 1.0 : -1.0;
      double len = p.len * (e.t1 - e.t0);
      for (double d = 0.25 * len; d > 8.0 * part.eps; d *= 0.5) {
        cplx cand = m + side * d * nrm;
        if (part.point_in_region(face, cand)) return cand;
      }
    }
    throw Error("could not place a representative point in region " + std::to_string(face));
  };
  for (int r = 1; r < nfaces; ++r) part.regions[static_cast<size_t>(r)].rep = region_probe(r);

  // winding labels, double-checked against the edge propagation rule
  for (int r = 0; r < nfaces; ++r)
    part.regions[static_cast<size_t>(r)].mu = winding_number(paths, part.regions[static_cast<size_t>(r)].rep);
  if (part.regions[0].mu != 0) throw Error("unbounded region has nonzero winding");
  for (const auto& e : edges) {
    if (!e.closed_path || e.face_left == e.face_right) continue;
    int ml = part.regions[static_cast<size_t>(e.face_left)].mu;
    int mr = part.regions[static_cast<size_t>(e.face_right)].mu;
    if (ml != mr + 1)
      throw Error("winding labels inconsistent across an edge (got " + std::to_string(ml) +
                  " left vs " + std::to_string(mr) + " right)");
  }

  // adjacency and depth
  for (const auto& e : edges) {
    if (e.face_left == e.face_right) continue;
    auto& L = part.regions[static_cast<size_t>(e.face_left)];
    auto& R = part.regions[static_cast<size_t>(e.face_right)];
    auto addadj = [&](DomainPartition::Region& a, int b) {
      for (auto& pr : a.adjacency)
        if (pr.first == b && pr.second == e.segment_id) return;
      a.adjacency.push_back({b, e.segment_id});
    };
    addadj(L, R.id);
    addadj(R, L.id);
  }
  {
    std::vector<int> depth(static_cast<size_t>(nfaces), -1);
    std::vector<int> queue{0};
    depth[0] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int r = queue[qi];
      for (auto [nb, seg] : part.regions[static_cast<size_t>(r)].adjacency)
        if (depth[static_cast<size_t>(nb)] < 0) {
          depth[static_cast<size_t>(nb)] = depth[static_cast<size_t>(r)] + 1;
          queue.push_back(nb);
        }
    }
    for (int r = 0; r < nfaces; ++r) {
      if (depth[static_cast<size_t>(r)] < 0) throw Error("region unreachable from infinity");
      part.regions[static_cast<size_t>(r)].depth = depth[static_cast<size_t>(r)];
    }
  }

  return part;
}

}  // namespace branchcut
