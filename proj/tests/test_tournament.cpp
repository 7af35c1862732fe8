#include "hyperbolike/ball.hpp"
#include "hyperbolike/explicit_graph.hpp"
#include "hyperbolike/free_product.hpp"
#include "hyperbolike/quasi_tree.hpp"
#include "hyperbolike/tournament.hpp"
#include "hyperbolike/tournament_check.hpp"
#include "hyperbolike/triangle.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace hyperbolike;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("free group automaton is the three-state unit chain") {
    FreeProductOracle f2({0, 0});
    auto res = build_automaton_auto(f2, 11);
    CHECK(res.delta_used == 0);
    const TournamentAutomaton& A = res.automaton;
    REQUIRE(A.states.size() == 3);
    CHECK(A.closure == Closure::Closed);
    CHECK(A.radius == 2);
    CHECK(A.states[0].level == 0);
    CHECK(A.states[1].level == 1);
    CHECK(A.states[2].level == 2);

    // base fans out to 4 fresh letters, every later vertex to 3
    REQUIRE(A.edges.size() == 3);
    CHECK(A.edges[0].from == 0);
    CHECK(A.edges[0].to == 1);
    CHECK(A.edges[0].weight == 1);
    CHECK(A.edges[0].multiplicity == 4);
    CHECK(A.edges[1].from == 1);
    CHECK(A.edges[1].to == 2);
    CHECK(A.edges[1].weight == 1);
    CHECK(A.edges[1].multiplicity == 3);
    CHECK(A.edges[2].from == 2);
    CHECK(A.edges[2].to == 2);
    CHECK(A.edges[2].weight == 1);
    CHECK(A.edges[2].multiplicity == 3);

    auto predicted = predict_sphere_counts(A, 8);
    auto counted = bfs_sphere_sizes(f2, 8);
    Int ball(0);
    for (long n = 0; n <= 8; ++n) {
        CHECK(predicted[size_t(n)] == counted[size_t(n)]);
        if (n > 0) CHECK(predicted[size_t(n)] == 4 * pow(Int(3), unsigned(n - 1)));
        ball += predicted[size_t(n)];
        CHECK(ball == 2 * pow(Int(3), unsigned(n)) - 1);
    }
}

TEST_CASE("relative and direct engines build identical automata") {
    auto both = [](const GraphOracle& o, AutomatonParams p) {
        RelEngine rel(o, p);
        TournamentAutomaton A = detail::build_with_engine(o, p, rel);
        DirectEngine dir(o, p);
        TournamentAutomaton B = detail::build_with_engine(o, p, dir);
        REQUIRE(A.states.size() == B.states.size());
        for (size_t i = 0; i < A.states.size(); ++i) {
            CHECK(A.states[i].cert == B.states[i].cert);
            CHECK(A.states[i].level == B.states[i].level);
            CHECK(A.states[i].rep == B.states[i].rep);
            CHECK(A.states[i].expanded == B.states[i].expanded);
        }
        REQUIRE(A.edges.size() == B.edges.size());
        for (size_t i = 0; i < A.edges.size(); ++i) {
            CHECK(A.edges[i].from == B.edges[i].from);
            CHECK(A.edges[i].to == B.edges[i].to);
            CHECK(A.edges[i].weight == B.edges[i].weight);
            CHECK(A.edges[i].multiplicity == B.edges[i].multiplicity);
        }
        CHECK(A.matrix == B.matrix);
        CHECK(A.closure == B.closure);
    };
    both(FreeProductOracle({2, 3}), {0, 12});
    both(TriangleOracle(2, 3, 7), {0, 10});
}

TEST_CASE("replay and cone checks pass on free products") {
    FreeProductOracle f2({0, 0});
    auto rf = build_automaton_auto(f2, 11);
    auto rep = validate_automaton(f2, rf.automaton, 6);
    CHECK(rep.vertices == 1457);      // all of B_6
    CHECK(rep.transitions == 4372);   // one per vertex of B_7 minus the base
    CHECK(validate_cone_types(f2, rf.automaton, 6) == 1457);

    FreeProductOracle c23({2, 3});
    auto rc = build_automaton_auto(c23, 12);
    CHECK(rc.delta_used == 0);
    CHECK(rc.automaton.states.size() == 5);
    CHECK(validate_automaton(c23, rc.automaton, 8).vertices > 100);
    CHECK(validate_cone_types(c23, rc.automaton, 8) > 100);
}

TEST_CASE("quasi-tree needs lookback three") {
    QuasiTreeOracle qt(3);

    // with no lookback the automaton still closes and even reproduces the
    // sphere counts, but its transitions do not match exact distances
    TournamentAutomaton naive = build_automaton(qt, {0, 12});
    CHECK(naive.closure == Closure::Closed);
    CHECK(naive.states.size() == 17);
    auto predicted = predict_sphere_counts(naive, 7);
    auto counted = bfs_sphere_sizes(qt, 7);
    for (long n = 0; n <= 7; ++n) CHECK(predicted[size_t(n)] == counted[size_t(n)]);
    CHECK_THROWS_AS(validate_automaton(qt, naive, 3), TypeCollision);

    auto res = build_automaton_auto(qt, 12, -1, 3, 3);
    CHECK(res.delta_used == 1);
    const TournamentAutomaton& A = res.automaton;
    CHECK(A.states.size() == 31);
    CHECK(validate_automaton(qt, A, 3).vertices == 169);

    // a vertex at odd tree depth has two parents: its tree parent's parent
    // and the shortcut grandparent, so those transitions carry weight 1/2
    bool has_half = false;
    for (const auto& e : A.edges)
        if (e.weight == Rat(1) / 2) has_half = true;
    CHECK(has_half);

    auto deep = predict_sphere_counts(A, 7);
    for (long n = 0; n <= 7; ++n) CHECK(deep[size_t(n)] == counted[size_t(n)]);
}

TEST_CASE("triangle group needs lookback seven") {
    TriangleOracle tri(2, 3, 7);
    auto counted = bfs_sphere_sizes(tri, 7);
    CHECK(counted == std::vector<long>{1, 3, 4, 6, 8, 12, 16, 22});

    // lookback 3 closes but folds the relator one level late: the automaton
    // keeps treating the two spellings of abababa as distinct vertices
    TournamentAutomaton low = build_automaton(tri, {1, 14});
    CHECK(low.closure == Closure::Closed);
    CHECK(low.states.size() == 14);
    auto predicted = predict_sphere_counts(low, 7);
    for (long n = 0; n <= 6; ++n) CHECK(predicted[size_t(n)] == counted[size_t(n)]);
    CHECK(predicted[7] == 24);  // counts the fold vertex twice

    // the workable lookback does not close within this horizon; the
    // truncated automaton predicts up to the horizon and no further
    TournamentAutomaton mid = build_automaton(tri, {2, 14});
    CHECK(mid.closure == Closure::Truncated);
    CHECK(mid.states.size() == 118);
    CHECK(predict_sphere_counts(mid, 7).back() == 22);
    CHECK_THROWS_AS(predict_sphere_counts(mid, 15), input_error);
}

TEST_CASE("explicit graphs close or truncate as the geometry dictates") {
    // a 6-cycle is not 0-hyperbolic: without lookback the transition
    // overshoots beyond the antipode and the aliased state produces a
    // non-integer path count, which the prediction refuses to return
    ExplicitOracle c6(testutil::cycle_graph(6));
    TournamentAutomaton bad = build_automaton(c6, {0, 8});
    CHECK(bad.closure == Closure::Closed);
    CHECK(bad.states.size() == 3);
    CHECK_THROWS_AS(predict_sphere_counts(bad, 6), invariant_violation);
    CHECK_THROWS_AS(validate_automaton(c6, bad, 2), TypeCollision);

    auto rc6 = build_automaton_auto(c6, 8);
    CHECK(rc6.delta_used == 1);
    const TournamentAutomaton& A = rc6.automaton;
    CHECK(A.closure == Closure::Closed);
    CHECK(A.states.size() == 4);
    auto p = predict_sphere_counts(A, 6);
    CHECK(p == std::vector<Int>{1, 2, 2, 1, 0, 0, 0});
    CHECK(validate_automaton(c6, A, 2).vertices == 5);
    CHECK(validate_cone_types(c6, A, 2) == 5);

    ExplicitOracle pet(testutil::petersen_graph());
    TournamentAutomaton B = build_automaton(pet, {0, 8});
    CHECK(B.closure == Closure::Closed);
    CHECK(predict_sphere_counts(B, 4) == std::vector<Int>{1, 3, 6, 0, 0});

    ExplicitOracle star(testutil::star_graph(3));
    TournamentAutomaton C = build_automaton(star, {0, 8});
    CHECK(C.states.size() == 2);
    CHECK(predict_sphere_counts(C, 3) == std::vector<Int>{1, 3, 0, 0});

    // a long path ending in a triangle is not homogeneous: the interior
    // type aliases before the representative chain reaches the triangle,
    // so the automaton closes around a graph that is not there, and the
    // replay detects the undiscovered type
    FiniteGraph lolli = testutil::path_graph(6);
    lolli.add_edge("p5", "q1");
    lolli.add_edge("q1", "q2");
    lolli.add_edge("q2", "p5");
    ExplicitOracle lo(lolli);
    TournamentAutomaton D = build_automaton(lo, {0, 4});
    CHECK(D.closure == Closure::Closed);
    CHECK(D.states.size() == 3);
    CHECK_THROWS_AS(validate_automaton(lo, D, 3), TypeCollision);
}

TEST_CASE("serialized automata round-trip exactly") {
    FreeProductOracle f2({0, 0});
    TournamentAutomaton A = build_automaton(f2, {0, 11});
    std::string text = dump_automaton(A);
    std::istringstream in(text);
    TournamentAutomaton B = load_automaton(in, "f2.aut");
    CHECK(dump_automaton(B) == text);
    CHECK(B.matrix == A.matrix);
    CHECK(predict_sphere_counts(B, 12) == predict_sphere_counts(A, 12));

    std::string dot = automaton_dot(A);
    CHECK_THAT(dot, ContainsSubstring("digraph tournament"));
    CHECK_THAT(dot, ContainsSubstring("doublecircle"));
    CHECK_THAT(dot, ContainsSubstring("1 x4"));
}

TEST_CASE("loader rejects malformed automaton files") {
    auto loads = [](const std::string& text) {
        std::istringstream in(text);
        return load_automaton(in, "bad.aut");
    };
    CHECK_THROWS_WITH(loads("format aut v2\n"), ContainsSubstring("bad.aut:1"));
    CHECK_THROWS_WITH(loads("format aut v1\nstates 1\nstate 1 0 1 c\n"),
                      ContainsSubstring("consecutive"));
    CHECK_THROWS_WITH(loads("format aut v1\nstates 1\nstate 0 0 1 c\nedge 0 3 1 1\n"),
                      ContainsSubstring("out of range"));
    CHECK_THROWS_WITH(loads("format aut v1\nstates 1\nstate 0 0 1 c\nedge 0 0 1 0\n"),
                      ContainsSubstring("positive"));
    CHECK_THROWS_WITH(loads("format aut v1\nclosure sideways\n"),
                      ContainsSubstring("closed or truncated"));
    CHECK_THROWS_WITH(loads("format aut v1\nstates 2\nstate 0 0 1 c\n"),
                      ContainsSubstring("state count mismatch"));
    CHECK_THROWS_WITH(loads("format aut v1\nstates 1\nedges 2\nstate 0 0 1 c\n"),
                      ContainsSubstring("edge count mismatch"));
    CHECK_THROWS_WITH(loads("format aut v1\nbogus 3\n"), ContainsSubstring("unknown directive"));
}

TEST_CASE("validation detects corrupted automata") {
    FreeProductOracle f2({0, 0});
    TournamentAutomaton A = build_automaton(f2, {0, 11});

    TournamentAutomaton swapped = A;
    std::swap(swapped.states[1].cert, swapped.states[2].cert);
    CHECK_THROWS_AS(validate_automaton(f2, swapped, 3), TypeCollision);

    TournamentAutomaton reweighted = A;
    reweighted.edges[0].weight = Rat(2);
    CHECK_THROWS_AS(validate_automaton(f2, reweighted, 3), TypeCollision);
}

TEST_CASE("automaton parameters are validated") {
    FreeProductOracle f2({0, 0});
    CHECK_THROWS_AS(build_automaton(f2, {-1, 8}), input_error);
    CHECK_THROWS_AS(build_automaton(f2, {0, 3}), input_error);

    TournamentAutomaton A = build_automaton(f2, {0, 8});
    CHECK_THROWS_AS(predict_sphere_counts(A, -1), input_error);
    CHECK_THROWS_AS(validate_automaton(f2, A, -1), input_error);
    CHECK_THROWS_AS(validate_automaton(f2, A, 8), input_error);
    CHECK_THROWS_AS(validate_cone_types(f2, A, -1), input_error);

    // a pinned delta whose score ball exceeds the horizon cannot be built
    ExplicitOracle c6(testutil::cycle_graph(6));
    CHECK_THROWS_WITH(build_automaton_auto(c6, 8, 5),
                      ContainsSubstring("explore_radius below r + 2"));
}
