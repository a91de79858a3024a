#pragma once

#include "fixtures.hpp"
#include "jones/bracket.hpp"
#include "jones/diagram.hpp"
#include "jones/laurent.hpp"

#include <initializer_list>
#include <optional>
#include <random>
#include <utility>

namespace jones::test {

inline LaurentPoly poly_a(std::initializer_list<std::pair<int, Rational>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

inline QuarterPoly poly_t(std::initializer_list<std::pair<int, Rational>> quarter_terms) {
    QuarterPoly p;
    for (const auto& [q, c] : quarter_terms) p.add_term(q, c);
    return p;
}

// Quarter-exponent keys for whole powers of t.
inline QuarterPoly poly_t_whole(std::initializer_list<std::pair<int, Rational>> terms) {
    QuarterPoly p;
    for (const auto& [e, c] : terms) p.add_term(4 * e, c);
    return p;
}

inline Diagram diagram_of(const Curve3D& curve, Vec3 dir = {0, 0, 1}) {
    return build_diagram(project(curve, Direction(dir)));
}

// A random curve whose (0,0,1) projection is regular and carries at most
// max_crossings crossings; regenerates until one is found.
inline std::pair<Curve3D, Diagram> accepted_random_diagram(std::mt19937_64& rng, int min_vertices,
                                                           int max_vertices, int max_crossings,
                                                           bool closed) {
    for (;;) {
        int nv = min_vertices +
                 static_cast<int>(rng() % static_cast<unsigned>(max_vertices - min_vertices + 1));
        Curve3D curve = fixtures::random_polygon(rng, nv, closed);
        PlanarPolyline p = project(curve, Direction({0, 0, 1}));
        if (!check_regular(p).ok) continue;
        Diagram d = build_diagram(p);
        if (d.crossing_count() > max_crossings) continue;
        return {std::move(curve), std::move(d)};
    }
}

}  // namespace jones::test
