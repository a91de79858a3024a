#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jones::fixtures {

namespace {
constexpr double tau = 2.0 * std::numbers::pi;

Vec3 trefoil_point(double t) {
    return {std::sin(t) + 2.0 * std::sin(2.0 * t), std::cos(t) - 2.0 * std::cos(2.0 * t),
            -std::sin(3.0 * t)};
}
}  // namespace

Curve3D planar_decagon() {
    Curve3D c;
    c.closed = true;
    for (int k = 0; k < 10; ++k) {
        double a = tau * k / 10.0;
        c.points.push_back({std::cos(a), std::sin(a), 0.0});
    }
    return c;
}

Curve3D trefoil(int n) {
    Curve3D c;
    c.closed = true;
    for (int k = 0; k < n; ++k) c.points.push_back(trefoil_point(tau * k / n));
    return c;
}

Curve3D figure_eight(int n) {
    Curve3D c;
    c.closed = true;
    for (int k = 0; k < n; ++k) {
        double t = tau * k / n;
        c.points.push_back({(2.0 + std::cos(2.0 * t)) * std::cos(3.0 * t),
                            (2.0 + std::cos(2.0 * t)) * std::sin(3.0 * t), std::sin(4.0 * t)});
    }
    return c;
}

Curve3D open_trefoil(int n, double gap_param) {
    Curve3D c;
    c.closed = false;
    double span = tau - gap_param;
    for (int k = 0; k < n; ++k) c.points.push_back(trefoil_point(span * k / (n - 1)));
    return c;
}

Curve3D straight_line(int n) {
    Curve3D c;
    c.closed = false;
    for (int k = 0; k < n; ++k)
        c.points.push_back({static_cast<double>(k), 0.1 * k, 0.05 * k});
    return c;
}

Curve3D kink_pentagon() {
    return Curve3D{{{0, 0, 0}, {4, 0, 0}, {4, 3, 1}, {2, -2, 1}, {0, -2, 0}}, true};
}

Curve3D poke_hexagon() {
    return Curve3D{{{0, 2, 1}, {2, -1, 1}, {4, 2, 1}, {7, 0, 0}, {-2, 0, 0}, {-2, 2, 0}}, true};
}

Curve3D kink_poke_octagon() {
    return Curve3D{{{0, 2, 1},
                    {2, -1, 1},
                    {4, 2, 1},
                    {7, 0, 0},
                    {-2, 0, 0},
                    {-2, 2, 0},
                    {0, 3, 0},
                    {-2, 4, 0}},
                   true};
}

Curve3D rm3_octagon() {
    return Curve3D{{{0, 0, 0},
                    {10, 0, 0},
                    {7, 6, 1},
                    {3, -5, 1},
                    {2, -2, 2},
                    {4, 2, 2},
                    {6.5, 3.2, 2},
                    {6.5, -1, 2}},
                   true};
}

Curve3D overlapping_coil(int n_points) {
    Curve3D c;
    c.closed = false;
    for (int k = 0; k < n_points; ++k) {
        double t = k / 5.0;
        c.points.push_back({0.3 * t + std::cos(tau * t), std::sin(tau * t), 0.1 * t});
    }
    return c;
}

Curve3D random_polygon(std::mt19937_64& rng, int n_vertices, bool closed) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Curve3D c;
    c.closed = closed;
    for (int k = 0; k < n_vertices; ++k) c.points.push_back({u(rng), u(rng), u(rng)});
    return c;
}

Curve3D mirror_z(Curve3D c) {
    for (auto& p : c.points) p.z = -p.z;
    return c;
}

Curve3D reversed(Curve3D c) {
    std::reverse(c.points.begin(), c.points.end());
    return c;
}

std::array<double, 9> rotation_matrix(const Vec3& axis, double angle) {
    Vec3 a = axis * (1.0 / axis.norm());
    double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    return {t * a.x * a.x + c,       t * a.x * a.y - s * a.z, t * a.x * a.z + s * a.y,
            t * a.x * a.y + s * a.z, t * a.y * a.y + c,       t * a.y * a.z - s * a.x,
            t * a.x * a.z - s * a.y, t * a.y * a.z + s * a.x, t * a.z * a.z + c};
}

Vec3 rotate(const Vec3& v, const std::array<double, 9>& m) {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

Curve3D rotated(const Curve3D& c, const std::array<double, 9>& m) {
    Curve3D out = c;
    for (auto& p : out.points) p = rotate(p, m);
    return out;
}

}  // namespace jones::fixtures
