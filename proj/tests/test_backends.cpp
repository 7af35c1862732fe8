#include "hyperbolike/ball.hpp"
#include "hyperbolike/cayley.hpp"
#include "hyperbolike/explicit_graph.hpp"
#include "hyperbolike/free_product.hpp"
#include "hyperbolike/oracle.hpp"
#include "hyperbolike/quasi_tree.hpp"
#include "hyperbolike/rewrite.hpp"
#include "hyperbolike/triangle.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hyperbolike;

TEST_CASE("free group F2 neighbor lists") {
    FreeProductOracle f2({0, 0});
    CHECK(f2.base() == "");
    CHECK(f2.neighbors("") == std::vector<std::string>{"A", "B", "a", "b"});
    CHECK(f2.neighbors("a") == std::vector<std::string>{"", "aB", "aa", "ab"});
}

TEST_CASE("free product key normalization and neighbors") {
    FreeProductOracle f2({0, 0});
    // right multiplication cancels into the last syllable
    CHECK(f2.neighbors("ab") == std::vector<std::string>{"a", "abA", "aba", "abb"});
    CHECK(f2.neighbors("aB") == std::vector<std::string>{"a", "aBA", "aBB", "aBa"});

    // infinite cyclic: a line
    FreeProductOracle z({0});
    CHECK(z.neighbors("") == std::vector<std::string>{"A", "a"});
    CHECK(z.neighbors("aa") == std::vector<std::string>{"a", "aaa"});
    CHECK(z.neighbors("A") == std::vector<std::string>{"", "AA"});

    // cyclic of order 3: a triangle; a^2 renders as A
    FreeProductOracle c3({3});
    CHECK(c3.neighbors("") == std::vector<std::string>{"A", "a"});
    CHECK(c3.neighbors("a") == std::vector<std::string>{"", "A"});
    CHECK(c3.neighbors("A") == std::vector<std::string>{"", "a"});

    // cyclic of order 2: a single edge, the two directions coincide
    FreeProductOracle c2({2});
    CHECK(c2.neighbors("") == std::vector<std::string>{"a"});
    CHECK(c2.neighbors("a") == std::vector<std::string>{""});

    // order 4: a^2 keeps the lowercase spelling (tie goes to lowercase)
    FreeProductOracle c4({4});
    CHECK(c4.neighbors("a") == std::vector<std::string>{"", "aa"});
    CHECK(c4.neighbors("aa") == std::vector<std::string>{"A", "a"});

    // modular-group shape: C2 * C3 is 3-regular
    FreeProductOracle m({2, 3});
    CHECK(m.neighbors("") == std::vector<std::string>{"B", "a", "b"});
    CHECK(m.neighbors("a") == std::vector<std::string>{"", "aB", "ab"});
    CHECK(m.neighbors("ab") == std::vector<std::string>{"a", "aB", "aba"});
}

TEST_CASE("free product foreign keys are rejected") {
    FreeProductOracle f2({0, 0});
    CHECK_THROWS_AS(f2.neighbors("aA"), input_error);   // non-reduced
    CHECK_THROWS_AS(f2.neighbors("c"), input_error);    // unknown letter
    CHECK_THROWS_AS(f2.neighbors("a b"), input_error);  // not a word
    FreeProductOracle c3({3});
    CHECK_THROWS_AS(c3.neighbors("aa"), input_error);  // canonical spelling is A
    CHECK_THROWS_AS(c3.neighbors("b"), input_error);
    FreeProductOracle c4({4});
    CHECK_THROWS_AS(c4.neighbors("AA"), input_error);  // a^2 spells aa, not AA
    CHECK_THROWS_AS(FreeProductOracle({1}), input_error);
    CHECK_THROWS_AS(FreeProductOracle({-2}), input_error);
    CHECK_THROWS_AS(FreeProductOracle({}), input_error);
}

namespace {

// decoration by exact distance from the center, the translation image of
// the same decoration at any other center
std::map<std::string, long> distance_decoration(const GraphOracle& o, const std::string& center,
                                                long r) {
    std::map<std::string, long> dec;
    for (const auto& [k, lv] : detail::ball_levels(o, center, r)) dec[k] = lv;
    return dec;
}

}  // namespace

TEST_CASE("free product decorated balls are translation-invariant") {
    FreeProductOracle f2({0, 0});
    auto ca = f2.canonical_decorated_ball("ab", 2, distance_decoration(f2, "ab", 2));
    auto cb = f2.canonical_decorated_ball("ba", 2, distance_decoration(f2, "ba", 2));
    auto cc = f2.canonical_decorated_ball("", 2, distance_decoration(f2, "", 2));
    CHECK(ca == cb);
    CHECK(ca == cc);

    // perturbing one vertex at a fixed center must change the byte-string
    auto dec = distance_decoration(f2, "ab", 2);
    dec["abb"] += 7;
    CHECK(f2.canonical_decorated_ball("ab", 2, dec) != ca);
}

TEST_CASE("decorated ball rejects wrong domains") {
    FreeProductOracle f2({0, 0});
    auto dec = distance_decoration(f2, "a", 2);
    dec.erase("ab");
    CHECK_THROWS_AS(f2.canonical_decorated_ball("a", 2, dec), input_error);
    dec["ab"] = 2;
    dec["zz"] = 0;  // extra key outside the ball
    CHECK_THROWS_AS(f2.canonical_decorated_ball("a", 2, dec), input_error);
    CHECK_THROWS_AS(f2.canonical_decorated_ball("a", -1, dec), input_error);
}

TEST_CASE("graph file parsing and round trip") {
    std::istringstream in(
        "format graph v1\n"
        "# a 4-cycle\n"
        "base n0\n"
        "edge n0 n1\n"
        "edge n1 n2\n"
        "edge n2 n3\n"
        "edge n3 n0\n"
        "edge n0 n1\n");  // duplicate ignored
    auto g = parse_graph(in, "square.graph");
    CHECK(g.base == "n0");
    CHECK(g.adj.size() == 4);
    CHECK(g.adj.at("n0") == std::vector<std::string>{"n1", "n3"});

    std::ostringstream out;
    dump_graph(g, out);
    std::istringstream back(out.str());
    auto g2 = parse_graph(back, "roundtrip");
    CHECK(g2.base == g.base);
    CHECK(g2.adj == g.adj);
}

TEST_CASE("graph file errors carry line numbers") {
    auto expect_error = [](const std::string& text, const std::string& fragment) {
        std::istringstream in(text);
        try {
            parse_graph(in, "bad.graph");
            FAIL("expected input_error");
        } catch (const input_error& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_error("base a\nedge a\n", "bad.graph:2");
    expect_error("edge a b\n", "bad.graph:1");             // edge before base
    expect_error("base a\nbase b\n", "duplicate base");
    expect_error("base a\nedge a a\n", "self-loop");
    expect_error("base a\nvertex b\n", "unknown directive");
    expect_error("base a b\n", "trailing");
    expect_error("", "missing base");
    expect_error("base a\nformat graph v1\n", "format line must come first");
    expect_error("format graph v2\nbase a\n", "expected 'format graph v1'");
}

TEST_CASE("explicit oracle serves the file graph") {
    auto g = testutil::cycle_graph(6);
    ExplicitOracle o(g);
    CHECK(o.base() == "v0");
    CHECK(o.neighbors("v0") == std::vector<std::string>{"v1", "v5"});
    CHECK_THROWS_AS(o.neighbors("zz"), input_error);
    CHECK_FALSE(o.claims_transitive());
}

TEST_CASE("explicit decorated balls respect cyclic symmetry") {
    ExplicitOracle o(testutil::cycle_graph(6));
    // rotation-matched decorations at two centers
    auto ca = o.canonical_decorated_ball("v0", 2, distance_decoration(o, "v0", 2));
    auto cb = o.canonical_decorated_ball("v2", 2, distance_decoration(o, "v2", 2));
    CHECK(ca == cb);

    auto dec = distance_decoration(o, "v0", 2);
    dec["v1"] = 9;
    CHECK(o.canonical_decorated_ball("v0", 2, dec) != ca);

    // center marking matters: the special value on the center matches the
    // special value on another center, but not a special value off-center
    std::map<std::string, long> on_center{{"v5", 0}, {"v0", 7}, {"v1", 0}};
    std::map<std::string, long> on_other_center{{"v0", 0}, {"v1", 7}, {"v2", 0}};
    std::map<std::string, long> off_center{{"v5", 0}, {"v0", 0}, {"v1", 7}};
    CHECK(o.canonical_decorated_ball("v0", 1, on_center) ==
          o.canonical_decorated_ball("v1", 1, on_other_center));
    CHECK(o.canonical_decorated_ball("v0", 1, on_center) !=
          o.canonical_decorated_ball("v0", 1, off_center));
}

TEST_CASE("quasi-tree neighbors at the base") {
    QuasiTreeOracle qt(3);
    CHECK(qt.base() == "0:");
    // 3 tree edges (parent r_1, two children), the up-shortcut to the
    // grandparent r_2, and 4 down-shortcuts to grandchildren
    CHECK(qt.neighbors("0:") ==
          std::vector<std::string>{"0:0", "0:00", "0:01", "0:1", "0:10", "0:11", "1:", "2:"});
}

TEST_CASE("quasi-tree degree is k+1+(k-1)^2 everywhere") {
    QuasiTreeOracle qt(3);
    // deterministic pseudo-random sample of addresses
    unsigned long s = 12345;
    auto rng = [&s]() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; };
    int checked = 0;
    while (checked < 100) {
        long j = long(rng() % 4);
        std::string w;
        long len = long(rng() % 6);
        for (long i = 0; i < len; ++i) w += char('0' + rng() % 2);
        if (j >= 1 && !w.empty() && w[0] == '0') continue;
        std::string key = std::to_string(j) + ":" + w;
        auto nb = qt.neighbors(key);
        CHECK(nb.size() == 8);
        CHECK(std::set<std::string>(nb.begin(), nb.end()).size() == 8);
        for (const auto& u : nb) {
            auto back = qt.neighbors(u);
            CHECK(std::find(back.begin(), back.end(), key) != back.end());
        }
        ++checked;
    }

    QuasiTreeOracle qt4(4);
    CHECK(qt4.neighbors(qt4.base()).size() == 14);  // 4+1+9
}

TEST_CASE("quasi-tree ball levels match the closed-form distance") {
    QuasiTreeOracle qt(3);
    Ball b = build_ball(qt, 3);
    auto sizes = b.level_sizes();
    CHECK(sizes[0] == 1);
    CHECK(sizes[1] == 8);
    CHECK(sizes[2] == 32);
    for (size_t i = 0; i < b.keys.size(); ++i) {
        CHECK(qt.distance("0:", b.keys[i]) == b.level[i]);
        CHECK(qt.distance(b.keys[i], "0:") == b.level[i]);
    }

    // independent count: enumerate every address near the base and bucket it
    // by the closed-form distance (an X-step moves at most 2 tree steps, so
    // distance <= 3 implies ray index and descent length <= 6)
    std::vector<long> counted(4, 0);
    for (long j = 0; j <= 7; ++j)
        for (long len = 0; len <= 7; ++len)
            for (long bits = 0; bits < (1L << len); ++bits) {
                std::string w;
                for (long i = len; i-- > 0;) w += char('0' + ((bits >> i) & 1));
                if (j >= 1 && !w.empty() && w[0] == '0') continue;
                long d = qt.distance("0:", std::to_string(j) + ":" + w);
                if (d <= 3) ++counted[size_t(d)];
            }
    CHECK(counted == sizes);
    // distances between non-base pairs: symmetry and the triangle inequality
    // against a vertex known to lie between them on the ray
    CHECK(qt.distance("4:", "0:") == 2);
    CHECK(qt.distance("1:1", "1:") == 1);
    CHECK(qt.distance("0:00", "0:11") == 2);  // depth 2 each below the fold at 0:
    CHECK(qt.distance("0:0", "0:1") == 2);    // sibling leaves: up one fold, down
}

TEST_CASE("quasi-tree decorated balls are center independent") {
    QuasiTreeOracle qt(3);
    auto ca = qt.canonical_decorated_ball("0:", 2, distance_decoration(qt, "0:", 2));
    auto cb = qt.canonical_decorated_ball("5:", 2, distance_decoration(qt, "5:", 2));
    auto cc = qt.canonical_decorated_ball("0:01", 2, distance_decoration(qt, "0:01", 2));
    CHECK(ca == cb);
    CHECK(ca == cc);

    auto dec = distance_decoration(qt, "0:", 2);
    dec["2:"] = 9;
    CHECK(qt.canonical_decorated_ball("0:", 2, dec) != ca);
}

TEST_CASE("quasi-tree decorations distinguish directions but not siblings") {
    QuasiTreeOracle qt(3);
    auto flat = [&](const std::string& center, const std::string& marked) {
        auto dec = distance_decoration(qt, center, 1);
        for (auto& [k, v] : dec) v = 0;
        dec.at(marked) = 5;
        return qt.canonical_decorated_ball(center, 1, dec);
    };
    // the two child subtrees are swappable by an end-fixing symmetry
    CHECK(flat("0:", "0:0") == flat("0:", "0:1"));
    CHECK(flat("0:", "0:00") == flat("0:", "0:11"));
    // parent and child are not: the end direction is structural
    CHECK(flat("0:", "1:") != flat("0:", "0:0"));
    // grandparent (shortcut up) and grandchild (shortcut down) differ too
    CHECK(flat("0:", "2:") != flat("0:", "0:00"));
}

TEST_CASE("quasi-tree rejects malformed addresses") {
    QuasiTreeOracle qt(3);
    CHECK_THROWS_AS(qt.neighbors("1:0"), input_error);   // descent re-enters the ray
    CHECK_THROWS_AS(qt.neighbors("0"), input_error);     // missing colon
    CHECK_THROWS_AS(qt.neighbors("0:2"), input_error);   // digit out of range for k=3
    CHECK_THROWS_AS(qt.neighbors("01:"), input_error);   // non-canonical ray index
    CHECK_THROWS_AS(qt.neighbors("-1:"), input_error);
    CHECK_THROWS_AS(qt.neighbors("0:x"), input_error);
    CHECK_THROWS_AS(QuasiTreeOracle(2), input_error);
    CHECK_THROWS_AS(QuasiTreeOracle(12), input_error);
}

TEST_CASE("cayley oracle over the free group matches the free product backend") {
    auto rs = kb_complete(load_presentation("configs/f2.pres"));
    REQUIRE(rs.confluent());
    CayleyOracle cay(rs);
    FreeProductOracle fp({0, 0});
    CHECK(cay.base() == "");
    for (const std::string& v : {"", "a", "ab", "aB", "Abba"}) {
        auto key = v;
        CHECK(cay.neighbors(key) == fp.neighbors(key));
    }
}

TEST_CASE("cayley oracle on the genus-2 surface group") {
    auto rs = kb_complete(load_presentation("configs/genus2.pres"));
    REQUIRE(rs.confluent());
    CayleyOracle cay(rs);
    auto nb = cay.neighbors("");
    CHECK(nb == std::vector<std::string>{"A", "B", "C", "D", "a", "b", "c", "d"});

    // canonical naming: words equal in the group map to equal keys; equal
    // elements are manufactured by splicing a relator or an inverse pair
    const std::string relator = "abABcdCD";
    unsigned long s = 99;
    auto rng = [&s]() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; };
    const auto& alpha = rs.alphabet();
    for (int trial = 0; trial < 1000; ++trial) {
        std::string w;
        long len = long(rng() % 9);
        for (long i = 0; i < len; ++i) w += alpha[rng() % alpha.size()];
        std::string ins;
        if (rng() % 2) {
            // a cyclic rotation of the relator, or its inverse
            std::string rel = relator;
            if (rng() % 2) rel = rs.word_inverse(rel);
            size_t rot = rng() % rel.size();
            ins = rel.substr(rot) + rel.substr(0, rot);
        } else {
            char g = alpha[rng() % alpha.size()];
            ins = std::string{g, rs.inverse_pairing().at(g)};
        }
        size_t at = rng() % (w.size() + 1);
        std::string spliced = w.substr(0, at) + ins + w.substr(at);
        CHECK(rs.normalize(w) == rs.normalize(spliced));
    }
}

TEST_CASE("cayley decorated balls are invariant under left translation") {
    auto rs = kb_complete(load_presentation("configs/genus2.pres"));
    CayleyOracle cay(rs);
    auto base_cert = cay.canonical_decorated_ball("", 2, distance_decoration(cay, "", 2));
    for (const std::string& g : {"a", "cD", "bAd"}) {
        // push the base decoration forward through the translation
        auto dec = distance_decoration(cay, "", 2);
        std::map<std::string, long> moved;
        for (const auto& [k, v] : dec) moved[cay.translate(g, k)] = v;
        CHECK(cay.canonical_decorated_ball(cay.translate(g, ""), 2, moved) == base_cert);
    }

    auto dec = distance_decoration(cay, "", 2);
    dec["a"] = 9;
    CHECK(cay.canonical_decorated_ball("", 2, dec) != base_cert);
    CHECK_THROWS_AS(cay.neighbors("aA"), input_error);
}

TEST_CASE("cayley backend refuses unfinished rewriting systems") {
    auto rs = kb_complete(load_presentation("configs/t237.pres"), 200, 40);
    REQUIRE_FALSE(rs.confluent());
    CHECK_THROWS_AS(CayleyOracle(rs), input_error);
}

TEST_CASE("triangle group field modulus is the real cyclotomic polynomial") {
    TriangleOracle tri(2, 3, 7);
    // minimal polynomial of 2cos(pi/7): x^3 - x^2 - 2x + 1
    CHECK(tri.field_modulus() == std::vector<Rat>{1, -2, -1, 1});
    CHECK_THROWS_AS(TriangleOracle(2, 3, 6), input_error);
    CHECK_THROWS_AS(TriangleOracle(3, 3, 7), input_error);
    CHECK_THROWS_AS(TriangleOracle(2, 4, 7), input_error);
}

TEST_CASE("triangle group neighbors and small spheres") {
    TriangleOracle tri(2, 3, 7);
    CHECK(tri.base() == "");
    CHECK(tri.neighbors("") == std::vector<std::string>{"B", "a", "b"});
    CHECK(tri.neighbors("a") == std::vector<std::string>{"", "aB", "ab"});
    CHECK(tri.neighbors("b") == std::vector<std::string>{"", "B", "ba"});

    // sphere sizes: the free product pattern 1,3,4,6,8,12,16 holds until the
    // relator (ab)^7 folds the first pair of length-7 geodesics together
    Ball b = build_ball(tri, 7);
    CHECK(b.level_sizes() == std::vector<long>{1, 3, 4, 6, 8, 12, 16, 22});
}

TEST_CASE("triangle group keys are alternating geodesic words") {
    TriangleOracle tri(2, 3, 7);
    Ball b = build_ball(tri, 10);
    for (size_t i = 0; i < b.keys.size(); ++i) {
        const std::string& w = b.keys[i];
        CHECK(long(w.size()) == b.level[i]);
        for (size_t j = 0; j + 1 < w.size(); ++j) {
            bool first_a = w[j] == 'a';
            bool second_a = w[j + 1] == 'a';
            CHECK(first_a != second_a);
            CHECK((w[j] != 'b' || w[j + 1] != 'B'));
            CHECK((w[j] != 'B' || w[j + 1] != 'b'));
        }
    }
}

TEST_CASE("triangle decorated balls are invariant under left translation") {
    TriangleOracle tri(2, 3, 7);
    auto base_cert = tri.canonical_decorated_ball("", 2, distance_decoration(tri, "", 2));
    for (const std::string& g : {"a", "ab", "Ba", "abab"}) {
        auto cert = tri.canonical_decorated_ball(g, 2, distance_decoration(tri, g, 2));
        CHECK(cert == base_cert);
    }
    auto dec = distance_decoration(tri, "", 2);
    dec["ab"] = 9;
    CHECK(tri.canonical_decorated_ball("", 2, dec) != base_cert);
}

TEST_CASE("triangle oracle rejects non-canonical words") {
    TriangleOracle tri(2, 3, 7);
    CHECK_THROWS_AS(tri.neighbors("aa"), input_error);
    CHECK_THROWS_AS(tri.neighbors("bb"), input_error);
    CHECK_THROWS_AS(tri.neighbors("x"), input_error);
    CHECK_THROWS_AS(tri.neighbors("Ab"), input_error);
}

namespace {

// reference distance by plain breadth-first search over neighbor lists
long bfs_distance(const GraphOracle& o, const std::string& u, const std::string& v, long limit) {
    if (u == v) return 0;
    std::set<std::string> seen{u};
    std::vector<std::string> frontier{u};
    for (long d = 1; d <= limit; ++d) {
        std::vector<std::string> next;
        for (const auto& w : frontier)
            for (const auto& n : o.neighbors(w)) {
                if (n == v) return d;
                if (seen.insert(n).second) next.push_back(n);
            }
        frontier = std::move(next);
    }
    return limit + 1;
}

// every backend paired with a ball radius the sampling tests stay cheap at
std::vector<std::pair<std::unique_ptr<GraphOracle>, long>> sample_backends() {
    std::vector<std::pair<std::unique_ptr<GraphOracle>, long>> out;
    out.emplace_back(std::make_unique<FreeProductOracle>(std::vector<long>{0, 0}), 4);
    out.emplace_back(std::make_unique<FreeProductOracle>(std::vector<long>{2, 3}), 6);
    out.emplace_back(std::make_unique<FreeProductOracle>(std::vector<long>{4, 0, 5}), 3);
    out.emplace_back(std::make_unique<CayleyOracle>(kb_complete(load_presentation("configs/genus2.pres"))), 3);
    out.emplace_back(std::make_unique<TriangleOracle>(2, 3, 7), 6);
    out.emplace_back(std::make_unique<QuasiTreeOracle>(3), 3);
    out.emplace_back(std::make_unique<ExplicitOracle>(testutil::petersen_graph()), 2);
    return out;
}

}  // namespace

TEST_CASE("capped distances agree with breadth-first search") {
    for (const auto& [op, radius] : sample_backends()) {
        const GraphOracle& o = *op;
        INFO(o.name());
        Ball ball = build_ball(o, radius);

        // base distances are the BFS levels
        for (long i = 0; i < ball.size(); ++i)
            CHECK(o.distance_capped(o.base(), ball.keys[size_t(i)], radius) == ball.level[size_t(i)]);

        // sampled pairs: exact agreement under a generous cap, and the cap
        // contract d > cap => cap + 1
        unsigned long long seed = 0x9e3779b97f4a7c15ULL;
        auto pick = [&]() {
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            return size_t(seed >> 33) % size_t(ball.size());
        };
        for (int t = 0; t < 40; ++t) {
            const std::string& u = ball.keys[pick()];
            const std::string& v = ball.keys[pick()];
            long d = bfs_distance(o, u, v, 2 * radius);
            REQUIRE(d <= 2 * radius);
            CHECK(o.distance_capped(u, v, 2 * radius + 1) == d);
            if (d >= 1) CHECK(o.distance_capped(u, v, d - 1) == d);
            CHECK(o.distance_capped(u, v, 0) == (u == v ? 0 : 1));
        }
        CHECK_THROWS_AS(o.distance_capped(o.base(), o.base(), -1), input_error);
    }
}

TEST_CASE("translations act by graph automorphisms") {
    for (const auto& [op, radius] : sample_backends()) {
        const GraphOracle& o = *op;
        INFO(o.name());
        if (!o.has_translations()) {
            CHECK_THROWS_AS(o.translate(o.base(), o.base()), invariant_violation);
            CHECK_THROWS_AS(o.invert(o.base()), invariant_violation);
            continue;
        }
        Ball ball = build_ball(o, radius);
        unsigned long long seed = 0xd1b54a32d192ed03ULL;
        auto pick = [&]() {
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            return size_t(seed >> 33) % size_t(ball.size());
        };
        for (int t = 0; t < 25; ++t) {
            const std::string& g = ball.keys[pick()];
            const std::string& v = ball.keys[pick()];
            const std::string& u = ball.keys[pick()];

            // group laws on keys
            CHECK(o.translate(g, o.base()) == g);
            CHECK(o.translate(o.base(), v) == v);
            CHECK(o.invert(o.invert(g)) == g);
            CHECK(o.translate(o.invert(g), o.translate(g, v)) == v);
            CHECK(o.translate(g, o.translate(u, v)) == o.translate(o.translate(g, u), v));

            // image of a neighbor list is the neighbor list of the image
            std::vector<std::string> mapped;
            for (const auto& n : o.neighbors(v)) mapped.push_back(o.translate(g, n));
            std::sort(mapped.begin(), mapped.end());
            CHECK(mapped == o.neighbors(o.translate(g, v)));

            // translations are isometries
            CHECK(o.distance_capped(o.translate(g, u), o.translate(g, v), 2 * radius + 1) ==
                  o.distance_capped(u, v, 2 * radius + 1));
        }
    }
}
