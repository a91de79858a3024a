#pragma once

#include "jones/geometry.hpp"

#include <array>
#include <random>

namespace jones::fixtures {

// Closed regular 10-gon in the z = 0 plane: an unknot from every direction.
Curve3D planar_decagon();

// Closed parametric trefoil sampled at n points; the (0,0,1) projection of
// the default sampling is the standard 3-crossing alternating diagram.
Curve3D trefoil(int n = 12);

// Closed parametric figure-eight knot sampled at n points; the default
// sampling projects along (0,0,1) to the standard 4-crossing diagram.
Curve3D figure_eight(int n = 20);

// The trefoil with the closure left open; gap_param shrinks the endpoint
// gap (the default leaves it below 1% of the bounding-box diagonal).
Curve3D open_trefoil(int n = 40, double gap_param = 0.012);

// Open straight-ish polyline with no crossings in any projection.
Curve3D straight_line(int n = 5);

// Closed pentagon with exactly one crossing (a positive kink).
Curve3D kink_pentagon();

// Closed hexagon where one strand pokes over another: two crossings,
// removable by RM2.
Curve3D poke_hexagon();

// The poke hexagon with an extra kink spliced into its return path:
// three crossings, an unknot.
Curve3D kink_poke_octagon();

// Closed octagon realizing a Reidemeister-3 site: a strand passing over two
// others that cross each other, the triangle between them empty. Carries
// three auxiliary crossings on its return path (six crossings total).
Curve3D rm3_octagon();

// Open curve coiling over itself like a loose spring: successive turns
// overlap in the (0,0,1) projection, each later turn passing over earlier
// ones. Prefixes of 15/20/25 points carry 6/12/20 crossings, and every
// crossing is removable, which mirrors the benchmark behavior of protein
// backbone prefixes.
Curve3D overlapping_coil(int n_points);

Curve3D random_polygon(std::mt19937_64& rng, int n_vertices, bool closed = true);

Curve3D mirror_z(Curve3D c);
Curve3D reversed(Curve3D c);

// Rotation by angle about the (normalized) axis.
std::array<double, 9> rotation_matrix(const Vec3& axis, double angle);
Vec3 rotate(const Vec3& v, const std::array<double, 9>& m);
Curve3D rotated(const Curve3D& c, const std::array<double, 9>& m);

}  // namespace jones::fixtures
