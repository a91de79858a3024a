#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace jones {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
};

struct Vec2 {
    double u = 0, v = 0;
};

// Unit projection direction; the constructor normalizes and rejects zero
// vectors, so the unit-norm invariant holds by construction.
class Direction {
public:
    explicit Direction(Vec3 v) {
        double n = v.norm();
        if (!(n > 0)) throw std::invalid_argument("Direction: zero vector");
        v_ = v * (1.0 / n);
    }
    const Vec3& vec() const { return v_; }

private:
    Vec3 v_;
};

// An open or closed polygonal curve in R^3. For closed curves the closing
// edge from the last point back to the first is implicit.
struct Curve3D {
    std::vector<Vec3> points;
    bool closed = false;

    // Throws std::invalid_argument when fewer than 3 points, when two
    // consecutive points coincide, or when a closed curve repeats its
    // first point at the end.
    void validate() const;

    double bounding_box_diagonal() const;
};

// The curve seen along a projection direction: in-plane coordinates plus the
// signed distance of every point along the direction.
struct PlanarPolyline {
    std::vector<Vec2> points2d;
    std::vector<double> heights;
    bool closed = false;

    int edge_count() const {
        int n = static_cast<int>(points2d.size());
        return closed ? n : n - 1;
    }
};

// n points of the deterministic golden-angle lattice on the unit sphere.
// n = 1 returns the single direction (0, 0, 1).
std::vector<Direction> fibonacci_sphere(int n);

// Orthographic projection onto the plane normal to dir. The in-plane basis is
// built deterministically from dir (Gram-Schmidt against the least-aligned
// coordinate axis, right-handed), so repeated calls agree exactly.
PlanarPolyline project(const Curve3D& curve, const Direction& dir);

struct Regularity {
    bool ok = false;
    std::string reason;  // empty when ok
};

// Screens a projection for the measure-zero degeneracies that make crossing
// combinatorics ambiguous: crossings too close to edge endpoints, near-triple
// points, near-parallel intersecting edges, and 3D tangencies (height gap
// too small). eps is relative to the polyline's bounding-box diagonal.
Regularity check_regular(const PlanarPolyline& p, double eps = 1e-9);

inline constexpr double kDefaultRegularityEps = 1e-9;

}  // namespace jones
