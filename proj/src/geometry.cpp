#include "jones/geometry.hpp"

#include "edge_intersections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace jones {

void Curve3D::validate() const {
    if (points.size() < 3) throw std::invalid_argument("Curve3D: fewer than 3 points");
    double tol = 1e-12 * std::max(1.0, bounding_box_diagonal());
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if ((points[i + 1] - points[i]).norm() <= tol)
            throw std::invalid_argument("Curve3D: consecutive points coincide at index " +
                                        std::to_string(i));
    }
    if (closed && (points.back() - points.front()).norm() <= tol)
        throw std::invalid_argument(
            "Curve3D: closed curve must not repeat its first point (closure edge is implicit)");
}

double Curve3D::bounding_box_diagonal() const {
    if (points.empty()) return 0;
    Vec3 lo = points.front(), hi = points.front();
    for (const Vec3& p : points) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    return (hi - lo).norm();
}

std::vector<Direction> fibonacci_sphere(int n) {
    if (n < 1) throw std::invalid_argument("fibonacci_sphere: n must be positive");
    std::vector<Direction> dirs;
    dirs.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        dirs.emplace_back(Vec3{0, 0, 1});
        return dirs;
    }
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        double z = 1.0 - 2.0 * (i + 0.5) / n;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double theta = golden_angle * i;
        dirs.emplace_back(Vec3{r * std::cos(theta), r * std::sin(theta), z});
    }
    return dirs;
}

PlanarPolyline project(const Curve3D& curve, const Direction& dir) {
    curve.validate();
    const Vec3& d = dir.vec();

    // Least-aligned coordinate axis, ties broken x, y, z.
    double ax = std::abs(d.x), ay = std::abs(d.y), az = std::abs(d.z);
    Vec3 axis{1, 0, 0};
    if (ay < ax && ay <= az)
        axis = {0, 1, 0};
    else if (az < ax && az < ay)
        axis = {0, 0, 1};

    Vec3 e1 = axis - d * axis.dot(d);
    e1 = e1 * (1.0 / e1.norm());
    Vec3 e2 = d.cross(e1);  // (e1, e2, d) right-handed

    PlanarPolyline out;
    out.closed = curve.closed;
    out.points2d.reserve(curve.points.size());
    out.heights.reserve(curve.points.size());
    for (const Vec3& p : curve.points) {
        out.points2d.push_back({p.dot(e1), p.dot(e2)});
        out.heights.push_back(p.dot(d));
    }
    return out;
}

namespace {
double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }
}  // namespace

namespace detail {

SweepResult scan_intersections(const PlanarPolyline& p, double eps) {
    SweepResult res;
    if (p.points2d.size() != p.heights.size())
        throw std::invalid_argument("PlanarPolyline: points2d and heights sizes differ");
    const int m = p.edge_count();
    const int npts = static_cast<int>(p.points2d.size());
    if (m < 3) {
        res.reason = "fewer than 3 edges";
        return res;
    }

    // Scale-relative tolerance: bounding-box diagonal of the projected curve
    // including the height axis (the curve's own diagonal, just rotated).
    double lo_u = p.points2d[0].u, hi_u = lo_u;
    double lo_v = p.points2d[0].v, hi_v = lo_v;
    double lo_h = p.heights[0], hi_h = lo_h;
    for (int i = 0; i < npts; ++i) {
        lo_u = std::min(lo_u, p.points2d[i].u);
        hi_u = std::max(hi_u, p.points2d[i].u);
        lo_v = std::min(lo_v, p.points2d[i].v);
        hi_v = std::max(hi_v, p.points2d[i].v);
        lo_h = std::min(lo_h, p.heights[i]);
        hi_h = std::max(hi_h, p.heights[i]);
    }
    double du = hi_u - lo_u, dv = hi_v - lo_v, dh = hi_h - lo_h;
    double scale = std::sqrt(du * du + dv * dv + dh * dh);
    if (!(scale > 0)) {
        res.reason = "degenerate projection: zero spatial extent";
        return res;
    }
    const double tol = eps * scale;

    auto vertex = [&](int e) { return e; };
    auto vertex_next = [&](int e) { return (e + 1) % npts; };
    auto adjacent = [&](int i, int j) {
        if (std::abs(i - j) == 1) return true;
        return p.closed && ((i == 0 && j == m - 1) || (j == 0 && i == m - 1));
    };

    for (int i = 0; i < m; ++i) {
        const Vec2& a0 = p.points2d[vertex(i)];
        const Vec2& a1 = p.points2d[vertex_next(i)];
        double d1x = a1.u - a0.u, d1y = a1.v - a0.v;
        double len1 = std::hypot(d1x, d1y);
        for (int j = i + 1; j < m; ++j) {
            if (adjacent(i, j)) continue;
            const Vec2& b0 = p.points2d[vertex(j)];
            const Vec2& b1 = p.points2d[vertex_next(j)];
            double d2x = b1.u - b0.u, d2y = b1.v - b0.v;
            double len2 = std::hypot(d2x, d2y);

            double den = cross2(d1x, d1y, d2x, d2y);
            double rx = b0.u - a0.u, ry = b0.v - a0.v;
            if (std::abs(den) <= eps * len1 * len2) {
                // Near-parallel: hazardous only if the segments nearly touch.
                double gap = std::abs(cross2(rx, ry, d1x, d1y)) / std::max(len1, 1e-300);
                bool overlap_u =
                    std::max(std::min(a0.u, a1.u), std::min(b0.u, b1.u)) - tol <=
                    std::min(std::max(a0.u, a1.u), std::max(b0.u, b1.u)) + tol;
                bool overlap_v =
                    std::max(std::min(a0.v, a1.v), std::min(b0.v, b1.v)) - tol <=
                    std::min(std::max(a0.v, a1.v), std::max(b0.v, b1.v)) + tol;
                if (gap < tol && overlap_u && overlap_v) {
                    res.reason = "near-parallel intersecting edges " + std::to_string(i) + "," +
                                 std::to_string(j);
                    return res;
                }
                continue;
            }

            double t = cross2(rx, ry, d2x, d2y) / den;
            double u = cross2(rx, ry, d1x, d1y) / den;
            double end_tol1 = tol / std::max(len1, 1e-300);
            double end_tol2 = tol / std::max(len2, 1e-300);
            bool inner = t >= end_tol1 && t <= 1 - end_tol1 && u >= end_tol2 && u <= 1 - end_tol2;
            bool near = t >= -end_tol1 && t <= 1 + end_tol1 && u >= -end_tol2 && u <= 1 + end_tol2;
            if (!near) continue;
            if (!inner) {
                res.reason = "crossing of edges " + std::to_string(i) + "," + std::to_string(j) +
                             " within eps of an edge endpoint";
                return res;
            }

            detail::EdgeHit hit;
            hit.e1 = i;
            hit.e2 = j;
            hit.t1 = t;
            hit.t2 = u;
            hit.h1 = p.heights[vertex(i)] + t * (p.heights[vertex_next(i)] - p.heights[vertex(i)]);
            hit.h2 = p.heights[vertex(j)] + u * (p.heights[vertex_next(j)] - p.heights[vertex(j)]);
            hit.det = den;
            if (std::abs(hit.h1 - hit.h2) < tol) {
                res.reason = "tangency: heights at crossing of edges " + std::to_string(i) + "," +
                             std::to_string(j) + " differ by less than eps";
                return res;
            }
            res.hits.push_back(hit);
        }
    }

    // Near-triple points: two crossings too close together on one edge.
    std::vector<std::vector<double>> per_edge(static_cast<std::size_t>(m));
    for (const auto& h : res.hits) {
        per_edge[static_cast<std::size_t>(h.e1)].push_back(h.t1);
        per_edge[static_cast<std::size_t>(h.e2)].push_back(h.t2);
    }
    for (int e = 0; e < m; ++e) {
        auto& ts = per_edge[static_cast<std::size_t>(e)];
        if (ts.size() < 2) continue;
        std::sort(ts.begin(), ts.end());
        const Vec2& a0 = p.points2d[vertex(e)];
        const Vec2& a1 = p.points2d[vertex_next(e)];
        double len = std::hypot(a1.u - a0.u, a1.v - a0.v);
        for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
            if ((ts[k + 1] - ts[k]) * len < tol) {
                res.reason = "near-triple point: two crossings within eps on edge " +
                             std::to_string(e);
                return res;
            }
        }
    }

    res.ok = true;
    return res;
}

}  // namespace detail

Regularity check_regular(const PlanarPolyline& p, double eps) {
    if (!(eps > 0)) throw std::invalid_argument("check_regular: eps must be positive");
    auto sweep = detail::scan_intersections(p, eps);
    return {sweep.ok, sweep.reason};
}

}  // namespace jones
