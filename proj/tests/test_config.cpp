#include "hyperbolike/config.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace hyperbolike;
using Catch::Matchers::ContainsSubstring;

namespace {

RunConfig parse_text(const std::string& text, const std::string& name = "<config>") {
    std::istringstream in(text);
    return parse_run_config(in, name);
}

}  // namespace

TEST_CASE("run config parses sections, comments, and defaults") {
    RunConfig cfg = parse_text(
        "format runcfg v1\n"
        "# a comment line\n"
        "[backend]\n"
        "kind = triangle\n"
        "signature = 2 3 7  # trailing comment\n"
        "[params]\n"
        "delta = auto\n"
        "explore_radius = 12\n"
        "tol = 2.5e-8\n"
        "[output]\n"
        "json = out.json\n");
    CHECK(cfg.kind == "triangle");
    CHECK(cfg.signature == std::array<long, 3>{2, 3, 7});
    CHECK(cfg.delta == -1);
    CHECK(cfg.explore_radius == 12);
    CHECK(cfg.tol == Catch::Approx(2.5e-8));
    CHECK(cfg.tol_text == "2.5e-8");
    CHECK(cfg.json == "out.json");
    CHECK(cfg.csv.empty());

    // untouched keys keep their defaults
    CHECK(cfg.K == 20);
    CHECK(cfg.sample_budget == 4000);
    CHECK(cfg.threads == 1);
}

TEST_CASE("run config reads factor orders with inf") {
    RunConfig cfg = parse_text(
        "format runcfg v1\n"
        "[backend]\n"
        "kind = free_product\n"
        "orders = 2 inf 5\n");
    CHECK(cfg.orders == std::vector<long>{2, 0, 5});
}

TEST_CASE("run config round-trips through its canonical text") {
    std::vector<std::string> sources = {
        "format runcfg v1\n[backend]\nkind = free_product\norders = inf inf\n",
        "format runcfg v1\n[backend]\nkind = cayley\npresentation = configs/genus2.pres\n"
        "[params]\nmax_rules = 500\n",
        "format runcfg v1\n[backend]\nkind = triangle\nsignature = 2 3 7\n"
        "[params]\ndelta = 2\nK = 40\n[output]\ncsv = a.csv\ndump = a.aut\n",
        "format runcfg v1\n[backend]\nkind = quasi_tree\nk = 4\n",
        "format runcfg v1\n[backend]\nkind = explicit\ngraph = configs/c6.graph\n",
    };
    for (const auto& src : sources) {
        std::string canon = config_text(parse_text(src));
        CHECK(config_text(parse_text(canon)) == canon);
    }
}

TEST_CASE("run config rejects malformed input with line numbers") {
    CHECK_THROWS_WITH(parse_text("kind = x\n", "bad.cfg"),
                      ContainsSubstring("bad.cfg:1") && ContainsSubstring("format runcfg v1"));
    CHECK_THROWS_WITH(parse_text("format runcfg v1\n[misc]\n", "bad.cfg"),
                      ContainsSubstring("bad.cfg:2") && ContainsSubstring("unknown section"));
    CHECK_THROWS_WITH(parse_text("format runcfg v1\n[backend]\nkind = free_product\nfoo = 1\n"),
                      ContainsSubstring("unknown key 'foo'"));
    CHECK_THROWS_WITH(parse_text("format runcfg v1\nkind = free_product\n"),
                      ContainsSubstring("outside any section"));
    CHECK_THROWS_WITH(parse_text("format runcfg v1\n[backend]\nkind = nowhere\n"),
                      ContainsSubstring("unknown backend kind"));
    CHECK_THROWS_WITH(parse_text("format runcfg v1\n[backend]\nkind = triangle\nsignature = 2 3\n"),
                      ContainsSubstring("exactly three"));
    CHECK_THROWS_WITH(parse_text("format runcfg v1\n[backend]\nkind = free_product\norders = two\n"),
                      ContainsSubstring("expected an integer"));
    CHECK_THROWS_WITH(
        parse_text("format runcfg v1\n[backend]\nkind = free_product\n[params]\ntol = -1\n"),
        ContainsSubstring("positive"));
    CHECK_THROWS_WITH(
        parse_text("format runcfg v1\n[backend]\nkind = free_product\n[params]\nK = 0\n"),
        ContainsSubstring("K must be positive"));
    CHECK_THROWS_WITH(parse_text("format runcfg v1\n[backend]\n[params]\n"),
                      ContainsSubstring("must set kind"));
    CHECK_THROWS_WITH(parse_text(""), ContainsSubstring("empty config"));
    CHECK_THROWS_WITH(parse_text("format runcfg v1\n[backend]\nkind = free_product\nkind\n"),
                      ContainsSubstring("key = value"));
}

TEST_CASE("make_oracle builds every backend kind") {
    CHECK(make_oracle(parse_text("format runcfg v1\n[backend]\nkind = free_product\n"
                                 "orders = inf inf\n"))
              ->name() == "free_product[inf,inf]");
    CHECK(make_oracle(parse_text("format runcfg v1\n[backend]\nkind = quasi_tree\nk = 4\n"))
              ->name() == "quasi_tree(4)");
    CHECK(make_oracle(parse_text("format runcfg v1\n[backend]\nkind = triangle\n"
                                 "signature = 2 3 7\n"))
              ->name() == "triangle(2,3,7)");
    CHECK(make_oracle(parse_text("format runcfg v1\n[backend]\nkind = cayley\n"
                                 "presentation = configs/f2.pres\n"))
              ->name() == "cayley");

    auto hexagon = make_oracle(
        parse_text("format runcfg v1\n[backend]\nkind = explicit\ngraph = configs/c6.graph\n"));
    CHECK(hexagon->base() == "v0");
    CHECK(hexagon->neighbors("v0") == std::vector<std::string>{"v1", "v5"});

    CHECK_THROWS_AS(make_oracle(parse_text("format runcfg v1\n[backend]\nkind = cayley\n")),
                    input_error);
    CHECK_THROWS_AS(make_oracle(parse_text("format runcfg v1\n[backend]\nkind = explicit\n")),
                    input_error);
}
