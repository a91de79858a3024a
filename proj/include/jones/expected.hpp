#pragma once

#include "jones/bracket.hpp"
#include "jones/geometry.hpp"
#include "jones/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jones {

struct DirectionReport {
    Vec3 direction;
    bool accepted = false;
    std::string reason;   // rejection reason, empty when accepted
    int crossings = -1;   // diagram crossing count, -1 when rejected
};

// The projection-averaged Jones polynomial of a curve with per-direction
// diagnostics. The averaging divisor is n_accepted, so coefficients are
// exact rationals.
struct ExpectedJonesResult {
    LaurentPoly poly_a;
    QuarterPoly poly_t;
    int n_requested = 0;
    int n_accepted = 0;
    std::vector<DirectionReport> reports;
    double elapsed_seconds = 0;
};

// How projection directions are chosen. By default a single projection uses
// (0, 0, 1) and multiple projections use the deterministic Fibonacci
// lattice; either an explicit direction (n = 1 only) or a seeded random set
// can override that.
struct ProjectionChoice {
    std::optional<Vec3> explicit_direction;
    std::optional<unsigned long long> seed;
};

ExpectedJonesResult expected_jones(const Curve3D& curve, int n, Engine engine,
                                   const ProjectionChoice& choice = {},
                                   const JonesOptions& opts = {});

// Same computation over a caller-supplied direction set.
ExpectedJonesResult expected_jones_over(const Curve3D& curve,
                                        const std::vector<Direction>& directions, Engine engine,
                                        const JonesOptions& opts = {});

}  // namespace jones
