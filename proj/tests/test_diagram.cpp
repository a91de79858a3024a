#include "jones/diagram.hpp"

#include "helpers.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <random>

using namespace jones;
using jones::test::accepted_random_diagram;
using jones::test::diagram_of;

TEST_CASE("build_diagram: 4-point curve crossing structure") {
    Curve3D curve{{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, true};
    Diagram d = diagram_of(curve);
    CHECK(d.n_edges() == 4);
    CHECK(d.crossing_count() == 1);
    CHECK(d.cross(0, 2));
    CHECK(d.cross(2, 0));
    CHECK_FALSE(d.cross(0, 1));
    // Edge 2 is higher along the projection direction, so it passes over.
    CHECK(d.over(2, 0));
    CHECK_FALSE(d.over(0, 2));
    CHECK(d.sign(0, 2) == d.sign(2, 0));
    CHECK(d.sign(0, 2) == -1);
    CHECK(d.sign(0, 1) == 0);
}

TEST_CASE("build_diagram: convex polygon has no crossings") {
    Curve3D hexagon;
    hexagon.closed = true;
    for (int k = 0; k < 6; ++k) {
        double a = 2.0 * 3.14159265358979 * k / 6.0;
        hexagon.points.push_back({std::cos(a), std::sin(a), 0.0});
    }
    Diagram d = diagram_of(hexagon);
    CHECK(d.crossing_count() == 0);
    CHECK(writhe(d) == 0);
}

TEST_CASE("build_diagram: rejects irregular projections") {
    Curve3D flat = fixtures::kink_pentagon();
    for (auto& pt : flat.points) pt.z = 0;
    PlanarPolyline p = project(flat, Direction({0, 0, 1}));
    CHECK_THROWS_AS(build_diagram(p), std::invalid_argument);
}

TEST_CASE("writhe: examples") {
    CHECK(writhe(diagram_of(fixtures::planar_decagon())) == 0);
    // Single positive crossing, as in the +1 writhe picture.
    CHECK(writhe(diagram_of(fixtures::kink_pentagon())) == 1);

    Diagram trefoil = diagram_of(fixtures::trefoil());
    CHECK(trefoil.crossing_count() == 3);
    CHECK(writhe(trefoil) == -3);  // this sampling is the left-handed one
    for (const auto& c : trefoil.crossings()) CHECK(c.sign == -1);
}

TEST_CASE("crossing_count: kink plus poke") {
    CHECK(diagram_of(fixtures::kink_poke_octagon()).crossing_count() == 3);
    CHECK(diagram_of(fixtures::poke_hexagon()).crossing_count() == 2);
}

TEST_CASE("mirroring flips over/under and negates writhe") {
    std::mt19937_64 rng(23);
    auto check_mirror = [](const Curve3D& curve) {
        Diagram d = diagram_of(curve);
        Diagram m = diagram_of(fixtures::mirror_z(curve));
        REQUIRE(m.crossing_count() == d.crossing_count());
        CHECK(writhe(m) == -writhe(d));
        for (int i = 0; i < d.n_edges(); ++i)
            for (int j = 0; j < d.n_edges(); ++j) {
                CHECK(d.cross(i, j) == m.cross(i, j));
                if (d.cross(i, j)) CHECK(d.over(i, j) == m.over(j, i));
            }
    };
    check_mirror(fixtures::trefoil());
    for (int it = 0; it < 10; ++it)
        check_mirror(accepted_random_diagram(rng, 8, 12, 10, true).first);
}

TEST_CASE("orientation reversal keeps the writhe") {
    std::mt19937_64 rng(29);
    CHECK(writhe(diagram_of(fixtures::reversed(fixtures::trefoil()))) ==
          writhe(diagram_of(fixtures::trefoil())));
    for (int it = 0; it < 10; ++it) {
        Curve3D curve = accepted_random_diagram(rng, 8, 12, 10, true).first;
        CHECK(writhe(diagram_of(fixtures::reversed(curve))) == writhe(diagram_of(curve)));
    }
}

TEST_CASE("succ: total cycle for closed curves, partial for open") {
    Diagram closed = diagram_of(fixtures::trefoil());
    int visited = 0;
    int e = 0;
    do {
        REQUIRE(closed.succ(e).has_value());
        e = *closed.succ(e);
        ++visited;
    } while (e != 0);
    CHECK(visited == closed.n_edges());

    Diagram open = diagram_of(fixtures::straight_line());
    CHECK(open.succ(open.n_edges() - 1) == std::nullopt);
    CHECK(open.succ(0) == 1);
}

TEST_CASE("debug_json: matrices for the kink pentagon") {
    Diagram d = diagram_of(fixtures::kink_pentagon());
    auto j = nlohmann::json::parse(d.debug_json());
    CHECK(j["n_edges"] == 5);
    CHECK(j["closed"] == true);
    CHECK(j["cross"][0][2] == true);
    CHECK(j["cross"][2][0] == true);
    CHECK(j["cross"][0][1] == false);
    CHECK(j["over"][2][0] == true);
    CHECK(j["over"][0][2] == false);
    CHECK(j["sign"][0][2] == 1);
    CHECK(j["sign"][2][0] == 1);
    CHECK(j["sign"][1][3] == 0);
}

TEST_CASE("from_crossings: structural invariants enforced") {
    // Adjacent edges must not cross.
    CHECK_THROWS_AS(Diagram::from_crossings(5, true, {{0, 1, 1}}, {{0}, {0}, {}, {}, {}}),
                    std::invalid_argument);
    // One crossing per edge pair.
    CHECK_THROWS_AS(
        Diagram::from_crossings(5, true, {{0, 2, 1}, {2, 0, -1}}, {{0, 1}, {}, {0, 1}, {}, {}}),
        std::invalid_argument);
    // Slots must list each crossing exactly once per involved edge.
    CHECK_THROWS_AS(Diagram::from_crossings(5, true, {{0, 2, 1}}, {{0}, {}, {}, {}, {}}),
                    std::invalid_argument);
    // Sign must be +1 or -1.
    CHECK_THROWS_AS(Diagram::from_crossings(5, true, {{0, 2, 0}}, {{0}, {}, {0}, {}, {}}),
                    std::invalid_argument);
}

TEST_CASE("without_crossings: removal keeps the rest intact") {
    Diagram d = diagram_of(fixtures::kink_poke_octagon());
    REQUIRE(d.crossing_count() == 3);
    int kink = d.find_crossing(5, 7);
    REQUIRE(kink >= 0);
    Diagram rest = d.without_crossings({kink});
    CHECK(rest.crossing_count() == 2);
    CHECK(rest.cross(0, 3));
    CHECK(rest.cross(1, 3));
    CHECK_FALSE(rest.cross(5, 7));
}
