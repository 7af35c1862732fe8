#include "hyperbolike/ball.hpp"
#include "hyperbolike/explicit_graph.hpp"
#include "hyperbolike/free_product.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace hyperbolike;

namespace {

// all-pairs distances of a finite graph by repeated BFS
std::map<std::string, std::map<std::string, long>> all_distances(const FiniteGraph& g) {
    std::map<std::string, std::map<std::string, long>> d;
    for (const auto& [s, ignored] : g.adj) {
        auto& row = d[s];
        row[s] = 0;
        std::vector<std::string> frontier{s};
        while (!frontier.empty()) {
            std::vector<std::string> next;
            for (const auto& v : frontier)
                for (const auto& u : g.adj.at(v))
                    if (!row.count(u)) {
                        row[u] = row[v] + 1;
                        next.push_back(u);
                    }
            frontier = std::move(next);
        }
    }
    return d;
}

// dead ends straight from the definition: y is a dead end iff no z != y
// satisfies d(x,z) = d(x,y) + d(y,z)
std::map<long, long> brute_force_dead_ends(const FiniteGraph& g) {
    auto d = all_distances(g);
    std::map<long, long> per_level;
    for (const auto& [y, ignored] : g.adj) {
        long dy = d.at(g.base).at(y);
        bool dead = true;
        for (const auto& [z, ignored2] : g.adj)
            if (z != y && d.at(g.base).at(z) == dy + d.at(y).at(z)) {
                dead = false;
                break;
            }
        if (dead) ++per_level[dy];
    }
    return per_level;
}

long eccentricity_of_base(const FiniteGraph& g) {
    auto d = all_distances(g);
    long e = 0;
    for (const auto& [v, dist] : d.at(g.base)) e = std::max(e, dist);
    return e;
}

}  // namespace

TEST_CASE("ball of the free group matches tree sphere sizes") {
    FreeProductOracle f2({0, 0});
    auto ball = build_ball(f2, 2);
    CHECK(ball.level_sizes() == std::vector<long>{1, 4, 12});
    CHECK(ball.base == "");
    CHECK(ball.keys[0] == "");
    // every vertex of a tree ball has exactly one parent
    for (int v = 1; v < ball.size(); ++v) CHECK(ball.parents[size_t(v)].size() == 1);
    // oracle degree is 4 everywhere, including the boundary
    for (int v = 0; v < ball.size(); ++v) CHECK(ball.full_degree[size_t(v)] == 4);
    CHECK_FALSE(ball.degree_warning);
}

TEST_CASE("ball of an explicit cycle") {
    ExplicitOracle o(testutil::cycle_graph(6));
    auto ball = build_ball(o, 3);
    CHECK(ball.level_sizes() == std::vector<long>{1, 2, 2, 1});
    // the antipode has two parents and no children
    long antipode = ball.index_of("v3");
    REQUIRE(antipode >= 0);
    CHECK(ball.parents[size_t(antipode)].size() == 2);
    CHECK(ball.children[size_t(antipode)].empty());
    // larger radius than the graph: trailing empty levels
    auto big = build_ball(o, 5);
    CHECK(big.level_sizes() == std::vector<long>{1, 2, 2, 1, 0, 0});
}

TEST_CASE("ball construction is deterministic and radius-stable") {
    FreeProductOracle f2({0, 0});
    auto b3 = build_ball(f2, 3);
    auto b5 = build_ball(f2, 5);
    REQUIRE(b3.size() <= b5.size());
    for (int v = 0; v < b3.size(); ++v) {
        CHECK(b3.keys[size_t(v)] == b5.keys[size_t(v)]);
        CHECK(b3.level[size_t(v)] == b5.level[size_t(v)]);
    }
    auto again = build_ball(f2, 3);
    CHECK(again.keys == b3.keys);
    CHECK_THROWS_AS(build_ball(f2, -1), input_error);
}

TEST_CASE("ball adjacency levels and parent lists are consistent") {
    ExplicitOracle o(testutil::petersen_graph());
    auto ball = build_ball(o, 2);
    CHECK(ball.size() == 10);  // diameter 2
    for (int v = 0; v < ball.size(); ++v) {
        for (int u : ball.adj[size_t(v)]) {
            long dl = ball.level[size_t(u)] - ball.level[size_t(v)];
            CHECK(dl >= -1);
            CHECK(dl <= 1);
            bool as_parent = std::count(ball.parents[size_t(v)].begin(),
                                        ball.parents[size_t(v)].end(), u) > 0;
            bool as_child = std::count(ball.children[size_t(v)].begin(),
                                       ball.children[size_t(v)].end(), u) > 0;
            CHECK(as_parent == (dl == -1));
            CHECK(as_child == (dl == 1));
        }
        if (ball.level[size_t(v)] > 0) CHECK_FALSE(ball.parents[size_t(v)].empty());
    }
}

namespace {

// an oracle that wrongly claims transitivity over a path graph
class LyingOracle : public GraphOracle {
  public:
    LyingOracle() : g_(testutil::path_graph(4)) {}
    std::string base() const override { return g_.base; }
    std::vector<std::string> neighbors(const std::string& v) const override {
        auto it = g_.adj.find(v);
        if (it == g_.adj.end()) throw input_error("foreign vertex key: " + v);
        return it->second;
    }
    std::string canonical_decorated_ball(const std::string& center, long radius,
                                         const std::map<std::string, long>& dec) const override {
        return detail::decorated_ball_certificate(*this, center, radius, dec);
    }
    std::string name() const override { return "lying"; }

  private:
    FiniteGraph g_;
};

}  // namespace

TEST_CASE("interior degree mismatches: warning for files, error for transitive claims") {
    ExplicitOracle honest(testutil::path_graph(4));
    auto ball = build_ball(honest, 3);
    CHECK(ball.degree_warning);

    LyingOracle liar;
    CHECK_THROWS_AS(build_ball(liar, 3), invariant_violation);
}

TEST_CASE("dead-end census on trees and cycles") {
    FreeProductOracle f2({0, 0});
    auto tree = build_ball(f2, 10);
    auto report = dead_end_census(tree);
    REQUIRE(report.rows.size() == 11);
    CHECK(report.max_reliable_level == 9);
    for (const auto& row : report.rows) {
        CHECK(row.dead_ends == 0);
        CHECK(row.density == Rat(0));
    }

    ExplicitOracle o(testutil::cycle_graph(6));
    auto c6 = build_ball(o, 3);
    auto r6 = dead_end_census(c6);
    REQUIRE(r6.rows.size() == 4);
    CHECK(r6.rows[3].sphere == 1);
    CHECK(r6.rows[3].dead_ends == 1);
    CHECK(r6.rows[3].density == Rat(1));
    CHECK(r6.rows[2].dead_ends == 0);

    CHECK_THROWS_AS(dead_end_census(c6, 4), input_error);
}

TEST_CASE("local dead-end criterion equals the global definition") {
    std::vector<FiniteGraph> graphs;
    graphs.push_back(testutil::cycle_graph(6));
    graphs.push_back(testutil::cycle_graph(9));
    graphs.push_back(testutil::path_graph(7));
    graphs.push_back(testutil::star_graph(5));
    graphs.push_back(testutil::petersen_graph());
    graphs.push_back(testutil::scrambled_graph(25, 7));
    graphs.push_back(testutil::scrambled_graph(40, 11));
    graphs.push_back(testutil::scrambled_graph(60, 13));
    for (const auto& g : graphs) {
        ExplicitOracle o(g);
        long ecc = eccentricity_of_base(g);
        auto ball = build_ball(o, ecc);
        REQUIRE(ball.size() == long(g.adj.size()));  // connected: ball covers the graph
        auto report = dead_end_census(ball);
        auto brute = brute_force_dead_ends(g);
        for (const auto& row : report.rows) {
            long expected = brute.count(row.level) ? brute.at(row.level) : 0;
            INFO("graph base " << g.base << " level " << row.level);
            CHECK(row.dead_ends == expected);
        }
    }
}

TEST_CASE("hyperbolicity estimate: trees are zero, cycles are not") {
    FreeProductOracle f2({0, 0});
    auto tree = build_ball(f2, 3);
    CHECK(estimate_delta(tree, 1000000) == Rat(0));

    ExplicitOracle o(testutil::cycle_graph(6));
    auto c6 = build_ball(o, 3);
    auto exhaustive = estimate_delta(c6, 1000000);
    CHECK(exhaustive > 0);

    // independent check: brute force over all triples with true distances
    auto d = all_distances(testutil::cycle_graph(6));
    long best = 0;
    std::vector<std::string> vs;
    for (const auto& [v, ignored] : d) vs.push_back(v);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            for (size_t k = j + 1; k < vs.size(); ++k) {
                long s1 = d.at(vs[i]).at(vs[j]) + d.at("v0").at(vs[k]);
                long s2 = d.at(vs[i]).at(vs[k]) + d.at("v0").at(vs[j]);
                long s3 = d.at("v0").at(vs[i]) + d.at(vs[j]).at(vs[k]);
                long hi = std::max({s1, s2, s3});
                long mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
                best = std::max(best, hi - mid);
            }
    CHECK(exhaustive == Rat(best, 2));
}

TEST_CASE("hyperbolicity estimate is monotone in the budget") {
    ExplicitOracle o(testutil::petersen_graph());
    auto ball = build_ball(o, 2);
    CHECK(estimate_delta(ball, 0) == Rat(0));
    Rat prev = 0;
    for (long long budget : {5, 20, 50, 120, 100000}) {
        Rat cur = estimate_delta(ball, budget);
        CHECK(cur >= prev);
        prev = cur;
    }
    ExplicitOracle c6(testutil::cycle_graph(6));
    auto small = build_ball(c6, 1);
    CHECK_THROWS_AS(estimate_delta(small, 10), input_error);
}

TEST_CASE("triple unranking hits each combination once") {
    std::set<std::array<int, 3>> seen;
    for (long long m = 0; m < 20; ++m) {
        auto t = detail::unrank_triple(m, 6);
        CHECK(t[0] < t[1]);
        CHECK(t[1] < t[2]);
        CHECK(t[2] < 6);
        seen.insert(t);
    }
    CHECK(seen.size() == 20);
}

TEST_CASE("ball automorphism counts") {
    FreeProductOracle f2({0, 0});
    CHECK(ball_automorphism_count(build_ball(f2, 1)) == 24);
    CHECK(ball_automorphism_count(build_ball(f2, 2)) == 31104);

    ExplicitOracle o(testutil::cycle_graph(6));
    CHECK(ball_automorphism_count(build_ball(o, 3)) == 12);

    ExplicitOracle p(testutil::petersen_graph());
    CHECK(ball_automorphism_count(build_ball(p, 2)) == 120);

    CHECK_THROWS_AS(ball_automorphism_count(build_ball(f2, 2), 10), input_error);
}
