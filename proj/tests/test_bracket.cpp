#include "jones/bracket.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace jones;
using jones::test::accepted_random_diagram;
using jones::test::diagram_of;
using jones::test::poly_a;
using jones::test::poly_t_whole;

TEST_CASE("bracket_oracle: axioms on the smallest diagrams") {
    CHECK(bracket_oracle(diagram_of(fixtures::planar_decagon())) == LaurentPoly::one());
    // Positive kink: A*d + A^-1 collapses to -A^3.
    CHECK(bracket_oracle(diagram_of(fixtures::kink_pentagon())) == poly_a({{3, -1}}));
}

TEST_CASE("bracket_oracle: crossing cap refusal names the count") {
    Diagram trefoil = diagram_of(fixtures::trefoil());
    CHECK_THROWS_AS(bracket_oracle(trefoil, 2), CrossingCapExceeded);
    try {
        bracket_oracle(trefoil, 2);
    } catch (const CrossingCapExceeded& e) {
        CHECK(e.count() == 3);
        CHECK(std::string(e.what()).find("3 crossings") != std::string::npos);
    }
}

TEST_CASE("jones_of_diagram: golden knot values") {
    for (Engine engine : {Engine::oracle, Engine::split, Engine::split_rm}) {
        CHECK(jones_of_diagram(diagram_of(fixtures::planar_decagon()), engine) ==
              LaurentPoly::one());
    }

    Diagram trefoil = diagram_of(fixtures::trefoil());
    LaurentPoly bracket = bracket_oracle(trefoil);
    CHECK(bracket.terms().size() == 3);
    LaurentPoly jones = jones_of_diagram(trefoil, Engine::oracle);
    CHECK(jones == poly_a({{4, 1}, {12, 1}, {16, -1}}));
    CHECK(to_t(jones) == poly_t_whole({{-4, -1}, {-3, 1}, {-1, 1}}));
    CHECK(render_t(to_t(jones)) == "-t^-4 + t^-3 + t^-1");

    LaurentPoly fig8 = jones_of_diagram(diagram_of(fixtures::figure_eight()), Engine::oracle);
    CHECK(to_t(fig8) == poly_t_whole({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}));
}

TEST_CASE("split: balance examples") {
    auto interiors = [](const Curve3D& curve) {
        auto [l1, l2] = split(diagram_of(curve));
        std::multiset<int> counts{l1.crossing_count(), l2.crossing_count()};
        return counts;
    };
    CHECK(interiors(fixtures::trefoil()) == std::multiset<int>{1, 2});
    CHECK(interiors(fixtures::kink_pentagon()) == std::multiset<int>{0, 1});
    CHECK(interiors(fixtures::figure_eight()) == std::multiset<int>{2, 2});

    CHECK_THROWS_AS(split(diagram_of(fixtures::planar_decagon())), std::invalid_argument);
}

TEST_CASE("partial_poly: smoothing exponents in state order") {
    // One crossing: the two skein choices.
    auto [k1, k2] = split(diagram_of(fixtures::kink_pentagon()));
    const SubTangle& one = k1.crossing_count() == 1 ? k1 : k2;
    const SubTangle& none = k1.crossing_count() == 1 ? k2 : k1;
    auto one_states = partial_poly(one);
    REQUIRE(one_states.size() == 2);
    CHECK(one_states[0].a_exp == 1);
    CHECK(one_states[1].a_exp == -1);

    // Crossing-free part: a single state whose pairing chains its arcs.
    auto none_states = partial_poly(none);
    REQUIRE(none_states.size() == 1);
    CHECK(none_states[0].a_exp == 0);
    for (const auto& set : none_states[0].pairing) CHECK_FALSE(set.empty());

    // Two crossings: exponents +2, 0, 0, -2.
    auto [f1, f2] = split(diagram_of(fixtures::figure_eight()));
    auto two_states = partial_poly(f1);
    REQUIRE(two_states.size() == 4);
    CHECK(two_states[0].a_exp == 2);
    CHECK(two_states[1].a_exp == 0);
    CHECK(two_states[2].a_exp == 0);
    CHECK(two_states[3].a_exp == -2);
}

TEST_CASE("partial_poly: pairings partition the part's endpoints") {
    auto [l1, l2] = split(diagram_of(fixtures::figure_eight()));
    for (const SubTangle* part : {&l1, &l2}) {
        auto states = partial_poly(*part);
        CHECK(states.size() == std::size_t(1) << part->crossing_count());
        std::vector<int> universe;
        for (const auto& set : states.front().pairing)
            universe.insert(universe.end(), set.begin(), set.end());
        std::sort(universe.begin(), universe.end());
        CHECK(std::adjacent_find(universe.begin(), universe.end()) == universe.end());
        for (const auto& st : states) {
            std::vector<int> labels;
            for (const auto& set : st.pairing) labels.insert(labels.end(), set.begin(), set.end());
            std::sort(labels.begin(), labels.end());
            CHECK(labels == universe);  // every endpoint in exactly one set
        }
    }
}

TEST_CASE("glue: reassembles the bracket exactly") {
    // Crossing-free complement: gluing equals closing the states directly.
    Diagram kink = diagram_of(fixtures::kink_pentagon());
    auto [k1, k2] = split(kink);
    CHECK(glue(partial_poly(k1), partial_poly(k2)) == bracket_oracle(kink));

    Diagram trefoil = diagram_of(fixtures::trefoil());
    auto [t1, t2] = split(trefoil);
    GlueStats stats;
    CHECK(glue(partial_poly(t1), partial_poly(t2), &stats) == bracket_oracle(trefoil));
    CHECK(stats.pairs_examined == std::size_t(1) << trefoil.crossing_count());

    std::mt19937_64 rng(37);
    for (int it = 0; it < 10; ++it) {
        auto [curve, d] = accepted_random_diagram(rng, 10, 14, 8, true);
        if (d.crossing_count() == 0) continue;
        auto [l1, l2] = split(d);
        auto s1 = partial_poly(l1);
        auto s2 = partial_poly(l2);
        GlueStats st;
        CHECK(glue(s1, s2, &st) == bracket_oracle(d));
        CHECK(st.pairs_examined == s1.size() * s2.size());
    }
}

TEST_CASE("glue: contract violations are rejected") {
    CHECK_THROWS_AS(glue({}, {}), std::invalid_argument);

    auto [l1, l2] = split(diagram_of(fixtures::figure_eight()));
    auto s1 = partial_poly(l1);
    auto s2 = partial_poly(l2);
    REQUIRE(s1.size() > 1);
    s1[1].pairing.pop_back();  // one state no longer covers the part's endpoints
    CHECK_THROWS_AS(glue(s1, s2), std::invalid_argument);
}

TEST_CASE("engines agree everywhere") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 60; ++it) {
        bool closed = it % 3 != 2;
        auto [curve, d] = accepted_random_diagram(rng, 8, 14, 10, closed);
        LaurentPoly a = jones_of_diagram(d, Engine::oracle);
        CHECK(jones_of_diagram(d, Engine::split) == a);
        CHECK(jones_of_diagram(d, Engine::split_rm) == a);
    }
}

TEST_CASE("mirror curves invert the variable") {
    auto mirrored_terms = [](const LaurentPoly& p) {
        LaurentPoly out;
        for (const auto& [e, c] : p.terms()) out.add_term(-e, c);
        return out;
    };
    CHECK(jones_of_diagram(diagram_of(fixtures::mirror_z(fixtures::trefoil())), Engine::oracle) ==
          mirrored_terms(jones_of_diagram(diagram_of(fixtures::trefoil()), Engine::oracle)));

    std::mt19937_64 rng(43);
    for (int it = 0; it < 8; ++it) {
        auto [curve, d] = accepted_random_diagram(rng, 8, 12, 8, true);
        CHECK(jones_of_diagram(diagram_of(fixtures::mirror_z(curve)), Engine::oracle) ==
              mirrored_terms(jones_of_diagram(d, Engine::oracle)));
    }
}

TEST_CASE("split_rm falls back to direct closure at zero crossings") {
    // The kink-plus-poke unknot simplifies all the way down.
    Diagram d = diagram_of(fixtures::kink_poke_octagon());
    CHECK(jones_of_diagram(d, Engine::split_rm) == LaurentPoly::one());
}
