// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef BRANCHCUT_PARTITION_HPP
#define BRANCHCUT_PARTITION_HPP

#include "branchcut/path.hpp"

namespace branchcut {

// Partition of the plane by a union of curves.  Region 0 is unbounded.
// Winding labels come from the closed components; open components act as
// slits (both sides may belong to one region).
struct DomainPartition {
  struct Region {
    int id = 0;
    int mu = 0;
    cplx rep{};
    int depth = 0;
    std::vector<std::pair<int, int>> adjacency;  // (neighbor region, separating segment id)
  };

  struct Edge {
    int piece = 0;          // index into `pieces`
    double t0 = 0, t1 = 0;  // parameter range of the sub-piece
    int node0 = 0, node1 = 0;
    int face_left = -1, face_right = -1;
    int segment_id = 0;     // global segment counter across input paths
    bool closed_path = false;
    cplx midpoint{};
  };

  std::vector<Region> regions;
  std::vector<Piece> pieces;   // flattened union geometry
  std::vector<Edge> edges;
  std::vector<cplx> nodes;
  bool has_open_components = false;
  double eps = 0.0;

  int locate(cplx z) const;                    // region id, or -1 when on the boundary
  bool point_in_region(int region, cplx z) const;
};

DomainPartition build_partition(std::span<const PiecewisePath> paths, const Tolerances& tol = {});
DomainPartition build_partition(const PiecewisePath& path, const Tolerances& tol = {});

struct DepthResult {
  int depth = 0;
  bool boundary = false;
  int region = 0;
};
DepthResult point_depth(const DomainPartition& partition, cplx z);

}  // namespace branchcut

#endif
