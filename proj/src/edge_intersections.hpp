#pragma once

// Shared sweep over non-adjacent edge pairs of a planar polyline. Both the
// regularity screen and diagram construction consume the same hit list so
// they can never disagree about what counts as a crossing.

#include "jones/geometry.hpp"

#include <string>
#include <vector>

namespace jones::detail {

struct EdgeHit {
    int e1 = 0, e2 = 0;    // edge indices, e1 < e2
    double t1 = 0, t2 = 0; // intersection parameter along each edge
    double h1 = 0, h2 = 0; // interpolated heights at the intersection
    double det = 0;        // 2D cross product of the edge directions (e1 x e2)
};

struct SweepResult {
    bool ok = false;
    std::string reason;
    std::vector<EdgeHit> hits;
};

SweepResult scan_intersections(const PlanarPolyline& p, double eps);

}  // namespace jones::detail
