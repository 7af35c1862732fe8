// Command-line surface. Every subcommand reads a run config, builds the
// configured backend, and emits deterministic artifacts: identical configs
// and inputs produce byte-identical outputs. Exit codes: 0 success,
// 2 invariant violation, 3 budget or cap exhaustion, 4 input error.

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperbolike/ball.hpp"
#include "hyperbolike/config.hpp"
#include "hyperbolike/omega.hpp"
#include "hyperbolike/rewrite.hpp"
#include "hyperbolike/series.hpp"
#include "hyperbolike/subgraph.hpp"
#include "hyperbolike/tournament.hpp"
#include "hyperbolike/tournament_check.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using njson = nlohmann::ordered_json;
using namespace hyperbolike;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
    if (!out) throw input_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

njson ratfun_json(const RatFun& f) {
    njson num = njson::array(), den = njson::array();
    for (long i = 0; i <= std::max(0L, f.num().degree()); ++i)
        num.push_back(to_string(f.num().coeff(size_t(i))));
    for (long i = 0; i <= std::max(0L, f.den().degree()); ++i)
        den.push_back(to_string(f.den().coeff(size_t(i))));
    return njson{{"num", num}, {"den", den}};
}

njson omega_json(const OmegaResult& om) {
    njson limits = njson::array();
    if (om.exact || !om.limits.empty()) {
        for (const auto& series : om.limits) {
            njson row = njson::array();
            for (const auto& c : series) row.push_back(to_string(c));
            limits.push_back(row);
        }
    } else {
        for (const auto& series : om.limits_approx) {
            njson row = njson::array();
            for (double c : series) row.push_back(fmt_double(c));
            limits.push_back(row);
        }
    }
    return njson{{"N", om.period},
                 {"limits", limits},
                 {"method", om.analytic ? "analytic" : "empirical"},
                 {"distinct", om.distinct},
                 {"exact", om.exact},
                 {"converged", om.converged},
                 {"note", om.note}};
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        write_file(path, content);
}

// shared context: config, oracle, and the automaton built per the config
struct Session {
    RunConfig cfg;
    std::unique_ptr<GraphOracle> oracle;

    explicit Session(const std::string& config_path) {
        if (config_path.empty()) throw input_error("this command needs --config <file>");
        cfg = load_run_config(config_path);
        oracle = make_oracle(cfg);
    }

    TournamentAutomaton automaton(std::string* log = nullptr) const {
        if (cfg.delta >= 0) {
            AutomatonParams p;
            p.delta = cfg.delta;
            p.explore_radius = cfg.explore_radius;
            return build_automaton(*oracle, p);
        }
        AutoBuild ab = build_automaton_auto(*oracle, cfg.explore_radius);
        if (log)
            for (const auto& line : ab.attempts) *log += line + "\n";
        return std::move(ab.automaton);
    }
};

int cmd_ball(const Session& s, long depth) {
    long R = depth >= 0 ? depth : s.cfg.explore_radius;
    Ball b = build_ball(*s.oracle, R);
    DeadEndReport census = dead_end_census(b);
    std::ostringstream out;
    out << "format ball v1\n";
    out << "backend " << s.cfg.kind << "\n";
    out << "radius " << b.radius << "\n";
    out << "vertices " << b.size() << "\n";
    out << "delta_estimate " << to_string(estimate_delta(b, s.cfg.sample_budget)) << "\n";
    out << "level,sphere,ball,dead_ends\n";
    std::vector<long> sizes = b.level_sizes();
    long running = 0;
    for (long lv = 0; lv <= b.radius; ++lv) {
        running += sizes[size_t(lv)];
        out << lv << "," << sizes[size_t(lv)] << "," << running << ","
            << census.rows[size_t(lv)].dead_ends << "\n";
    }
    emit(s.cfg.csv, out.str());
    if (!s.cfg.csv.empty()) std::cout << "wrote " << s.cfg.csv << "\n";
    return 0;
}

int cmd_deadends(const Session& s, long depth) {
    long R = depth >= 0 ? depth : s.cfg.explore_radius;
    Ball b = build_ball(*s.oracle, R);
    DeadEndReport census = dead_end_census(b);
    std::ostringstream out;
    out << "format deadends v1\n";
    out << "level,sphere,dead_ends,density\n";
    for (const auto& row : census.rows)
        out << row.level << "," << row.sphere << "," << row.dead_ends << ","
            << to_string(row.density) << "\n";
    emit(s.cfg.csv, out.str());
    if (!s.cfg.csv.empty()) std::cout << "wrote " << s.cfg.csv << "\n";
    return 0;
}

int cmd_automaton(const Session& s) {
    std::string log;
    TournamentAutomaton A = s.automaton(&log);
    if (!s.cfg.dot.empty()) write_file(s.cfg.dot, automaton_dot(A));
    std::string dump = dump_automaton(A);
    if (!s.cfg.dump.empty()) {
        write_file(s.cfg.dump, dump);
        std::cout << "backend " << s.cfg.kind << "\n";
        std::cout << "delta " << A.delta << "\n";
        std::cout << "radius " << A.radius << "\n";
        std::cout << "explore_radius " << A.explore_radius << "\n";
        std::cout << "closure " << (A.closure == Closure::Closed ? "closed" : "truncated") << "\n";
        std::cout << "states " << A.states.size() << "\n";
        std::cout << "edges " << A.edges.size() << "\n";
        if (!log.empty()) std::cout << log;
        std::cout << "wrote " << s.cfg.dump << "\n";
        if (!s.cfg.dot.empty()) std::cout << "wrote " << s.cfg.dot << "\n";
    } else {
        std::cout << dump;
    }
    return 0;
}

int cmd_series(const Session& s, long depth) {
    long R = depth >= 0 ? depth : std::min(s.cfg.explore_radius, 8L);
    std::string log;
    TournamentAutomaton A = s.automaton(&log);
    SeriesPair pair = sphere_and_ball_series(A, s.oracle.get(), R);

    Ball b = build_ball(*s.oracle, R);
    DeadEndReport census = dead_end_census(b);
    std::vector<long> sizes = b.level_sizes();
    std::vector<Int> ball_counts;
    Int running(0);
    for (long lv = 0; lv <= R; ++lv) {
        running += Int(sizes[size_t(lv)]);
        ball_counts.push_back(running);
    }
    GrowthReport rep = growth_rate_check(pair.sphere, ball_counts);
    OmegaResult om = omega_analytic(pair.ball, s.cfg.K, s.cfg.tol);

    njson lambda{{"value", rep.lambda_exact ? to_double(*rep.lambda_exact) : rep.root.approx},
                 {"minimal_poly_factor", njson::array()}};
    for (long i = 0; i <= std::max(0L, rep.root.minimal_factor.degree()); ++i)
        lambda["minimal_poly_factor"].push_back(to_string(rep.root.minimal_factor.coeff(size_t(i))));
    if (rep.lambda_exact) lambda["exact"] = to_string(*rep.lambda_exact);

    njson doc{{"sphere", ratfun_json(pair.sphere)},
              {"ball", ratfun_json(pair.ball)},
              {"lambda", lambda},
              {"ratio_window", njson::array({to_string(rep.ratio_lo), to_string(rep.ratio_hi)})},
              {"omega", omega_json(om)},
              {"metadata",
               njson{{"relation", "ball series = sphere series / (1 - t); both count the same balls"},
                     {"sphere_text", ratfun_text(pair.sphere)},
                     {"ball_text", ratfun_text(pair.ball)},
                     {"simple", rep.simple},
                     {"degenerate", rep.degenerate},
                     {"growth_degree", rep.growth_degree},
                     {"early_window", njson::array({to_string(rep.early_lo), to_string(rep.early_hi)})},
                     {"window_levels", njson::array({rep.window_lo, rep.window_mid, rep.window_hi})},
                     {"omega_source", "ball"},
                     {"K", s.cfg.K},
                     {"tol", s.cfg.tol_text},
                     {"depth", R},
                     {"note", rep.note}}}};
    emit(s.cfg.json, doc.dump(2) + "\n");
    if (!s.cfg.json.empty()) std::cout << "wrote " << s.cfg.json << "\n";

    if (!s.cfg.csv.empty()) {
        std::ostringstream csv;
        csv << "format series v1\n";
        csv << "n,sphere,ball,dead_end_density\n";
        for (long lv = 0; lv <= R; ++lv)
            csv << lv << "," << sizes[size_t(lv)] << "," << ball_counts[size_t(lv)] << ","
                << to_string(census.rows[size_t(lv)].density) << "\n";
        write_file(s.cfg.csv, csv.str());
        std::cout << "wrote " << s.cfg.csv << "\n";
    }
    return 0;
}

int cmd_subcount(const Session& s, const std::string& pattern_path, long depth, long guard,
                 bool images) {
    if (pattern_path.empty()) throw input_error("subcount needs --pattern <file.graph>");
    FiniteGraph y = load_graph(pattern_path);
    long R = depth >= 0 ? depth : std::min(s.cfg.explore_radius, 8L);
    TournamentAutomaton A = s.automaton();
    SubgraphSeries out = subgraph_series(y, *s.oracle, A, R, guard);
    Int aut = graph_automorphism_order(y);

    njson counts = njson::array();
    for (const auto& c : out.counts) counts.push_back(c.str());
    njson doc{{"pattern", pattern_path},
              {"aut", aut.str()},
              {"counts", counts},
              {"fit", out.fit ? ratfun_json(out.fit->fun) : njson()},
              {"fit_text", out.fit ? njson(ratfun_text(out.fit->fun)) : njson()}};
    if (images) {
        njson up = njson::array();
        for (const auto& c : out.counts) up.push_back(to_string(Rat(c) / Rat(aut)));
        doc["images"] = up;
    }
    emit(s.cfg.json, doc.dump(2) + "\n");
    if (!s.cfg.json.empty()) std::cout << "wrote " << s.cfg.json << "\n";
    return 0;
}

int cmd_omega(const std::string& config_path, const std::string& ratfun_path,
              const std::string& coeffs_path, const std::string& source, long K_flag,
              double tol_flag, long n_max) {
    long K = K_flag > 0 ? K_flag : 20;
    double tol = tol_flag > 0 ? tol_flag : 1e-9;
    std::string json_path;

    OmegaResult om;
    if (!coeffs_path.empty()) {
        std::istringstream in(read_file(coeffs_path));
        std::vector<Rat> coeffs;
        std::string line;
        while (std::getline(in, line)) {
            if (coeffs.empty() && line.rfind("format ", 0) == 0) continue;
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) coeffs.push_back(rat_from_string(tok));
        }
        om = omega_empirical(coeffs, K, tol, n_max);
    } else if (!ratfun_path.empty()) {
        std::istringstream in(read_file(ratfun_path));
        std::string line, content;
        while (std::getline(in, line)) {
            if (line.rfind("format ", 0) == 0 || line.empty() || line[0] == '#') continue;
            content = line;
            break;
        }
        om = omega_analytic(ratfun_from_text(content), K, tol);
    } else {
        Session s(config_path);
        K = K_flag > 0 ? K_flag : s.cfg.K;
        tol = tol_flag > 0 ? tol_flag : s.cfg.tol;
        json_path = s.cfg.json;
        TournamentAutomaton A = s.automaton();
        SeriesPair pair = sphere_and_ball_series(A, s.oracle.get());
        om = omega_analytic(source == "sphere" ? pair.sphere : pair.ball, K, tol);
    }
    emit(json_path, omega_json(om).dump(2) + "\n");
    if (!json_path.empty()) std::cout << "wrote " << json_path << "\n";
    return 0;
}

int cmd_kb(const std::string& config_path, std::string pres_path, long max_rules, long max_len,
           std::string dump_path) {
    if (pres_path.empty() || max_rules <= 0 || max_len <= 0 || dump_path.empty()) {
        if (config_path.empty() && pres_path.empty())
            throw input_error("kb needs --presentation <file.pres> or a cayley config");
        if (!config_path.empty()) {
            RunConfig cfg = load_run_config(config_path);
            if (pres_path.empty()) {
                if (cfg.presentation.empty())
                    throw input_error("kb needs --presentation <file.pres> or a cayley config");
                pres_path = cfg.presentation;
            }
            if (max_rules <= 0) max_rules = cfg.max_rules;
            if (max_len <= 0) max_len = cfg.max_len;
            if (dump_path.empty()) dump_path = cfg.dump;
        }
        if (max_rules <= 0) max_rules = 4000;
        if (max_len <= 0) max_len = 64;
    }
    RewriteSystem rs = kb_complete(load_presentation(pres_path), max_rules, max_len);
    std::cout << "status " << to_string(rs.status()) << "\n";
    std::cout << "rules " << rs.rules().size() << "\n";
    std::ostringstream dump;
    dump_rws(rs, dump);
    if (!dump_path.empty()) {
        write_file(dump_path, dump.str());
        std::cout << "wrote " << dump_path << "\n";
    } else {
        std::cout << dump.str();
    }
    return rs.confluent() ? 0 : 3;
}

int cmd_check(const Session& s, long depth) {
    std::string log;
    TournamentAutomaton A = s.automaton(&log);
    if (!log.empty()) std::cout << log;
    std::cout << "check closure: " << (A.closure == Closure::Closed ? "closed" : "truncated")
              << ", " << A.states.size() << " states, delta " << A.delta << "\n";

    long horizon = A.explore_radius - A.radius - 1;
    long V = depth >= 0 ? depth
                        : std::min(horizon, s.oracle->has_translations() ? 6L : 4L);
    if (V < 0) V = 0;

    long sphere_to = std::min(A.explore_radius, std::max(V + A.radius + 1, 8L));
    if (A.closure != Closure::Closed) sphere_to = std::min(sphere_to, A.explore_radius);
    std::vector<Int> predicted = predict_sphere_counts(A, sphere_to);
    std::vector<long> actual = bfs_sphere_sizes(*s.oracle, sphere_to);
    for (long n = 0; n <= sphere_to; ++n)
        if (predicted[size_t(n)] != Int(actual[size_t(n)]))
            throw invariant_violation("sphere count mismatch at level " + std::to_string(n));
    std::cout << "check spheres: match breadth-first counts to level " << sphere_to << "\n";

    SweepReport sweep = validate_automaton(*s.oracle, A, V);
    std::cout << "check replay: " << sweep.vertices << " vertices, " << sweep.transitions
              << " transitions to level " << V << "\n";

    long cones = validate_cone_types(*s.oracle, A, V);
    std::cout << "check cones: " << cones << " vertices share truncated cones per type to level "
              << V << "\n";

    if (A.closure == Closure::Closed) {
        SeriesPair pair = sphere_and_ball_series(A, s.oracle.get(), std::min(sphere_to, 8L));
        std::vector<Int> ball_counts;
        Int running(0);
        for (long n = 0; n <= sphere_to; ++n) {
            running += Int(actual[size_t(n)]);
            ball_counts.push_back(running);
        }
        GrowthReport rep = growth_rate_check(pair.sphere, ball_counts);
        std::cout << "check series: sphere " << ratfun_text(pair.sphere) << "\n";
        std::cout << "check growth: lambda "
                  << (rep.lambda_exact ? to_string(*rep.lambda_exact) : fmt_double(rep.root.approx))
                  << (rep.simple ? ", simple" : ", NOT SIMPLE") << (rep.degenerate ? ", degenerate" : "")
                  << "\n";
    } else {
        std::cout << "check series: skipped (truncated automaton)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact growth, series, and accumulation-set toolkit for hyperbolike graphs"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    argv = app.ensure_utf8(argv);

    std::string config_path;
    bool print_config = false;
    bool json_errors = false;
    app.add_option("--config", config_path, "run configuration file (format runcfg v1)");
    app.add_flag("--print-config", print_config, "print the effective configuration and exit");
    app.add_flag("--json-errors", json_errors, "report errors as JSON on standard error");

    long depth = -1;
    std::string pattern_path, ratfun_path, coeffs_path, pres_path, dump_path;
    std::string omega_source = "ball";
    long guard = 4, K_flag = -1, n_max = 32, max_rules = -1, max_len = -1;
    double tol_flag = -1;
    bool images = false;

    CLI::App* c_ball = app.add_subcommand("ball", "build a ball and report level sizes");
    c_ball->add_option("--depth", depth, "ball radius (default: explore_radius)");
    CLI::App* c_dead = app.add_subcommand("deadends", "dead-end census as CSV");
    c_dead->add_option("--depth", depth, "ball radius (default: explore_radius)");
    CLI::App* c_auto = app.add_subcommand("automaton", "build the automaton; dump and DOT");
    CLI::App* c_series = app.add_subcommand("series", "sphere/ball series and growth report");
    c_series->add_option("--depth", depth, "verification and census radius (default: min(explore_radius, 8))");
    CLI::App* c_sub = app.add_subcommand("subcount", "count copies of a pattern graph in every ball");
    c_sub->add_option("--pattern", pattern_path, "pattern graph file (.graph)")->required();
    c_sub->add_option("--depth", depth, "largest ball radius (default: min(explore_radius, 8))");
    c_sub->add_option("--guard", guard, "withheld terms guarding the fit (default 4)");
    c_sub->add_flag("--images", images, "also report counts divided by the pattern automorphisms");
    CLI::App* c_omega = app.add_subcommand("omega", "accumulation set of the opposite series");
    c_omega->add_option("--ratfun", ratfun_path, "rational function file (num: ... / den: ...)");
    c_omega->add_option("--coeffs", coeffs_path, "coefficient list file");
    c_omega->add_option("--series", omega_source, "backend series to use: ball or sphere")
        ->check(CLI::IsMember({"ball", "sphere"}));
    c_omega->add_option("--K", K_flag, "opposite-series coefficient count");
    c_omega->add_option("--tol", tol_flag, "convergence tolerance");
    c_omega->add_option("--N-max", n_max, "largest period tried by the empirical search");
    CLI::App* c_kb = app.add_subcommand("kb", "complete a presentation into a rewriting system");
    c_kb->add_option("--presentation", pres_path, "presentation file (.pres)");
    c_kb->add_option("--max-rules", max_rules, "completion rule cap");
    c_kb->add_option("--max-len", max_len, "completion length cap");
    c_kb->add_option("--dump", dump_path, "write the rewriting system here");
    CLI::App* c_check = app.add_subcommand("check", "run the invariant suite on the backend");
    c_check->add_option("--depth", depth, "replay and cone depth (default: geometry-dependent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    try {
        if (print_config) {
            RunConfig cfg = config_path.empty() ? RunConfig{} : load_run_config(config_path);
            std::cout << config_text(cfg);
            return 0;
        }
        if (c_ball->parsed()) return cmd_ball(Session(config_path), depth);
        if (c_dead->parsed()) return cmd_deadends(Session(config_path), depth);
        if (c_auto->parsed()) return cmd_automaton(Session(config_path));
        if (c_series->parsed()) return cmd_series(Session(config_path), depth);
        if (c_sub->parsed())
            return cmd_subcount(Session(config_path), pattern_path, depth, guard, images);
        if (c_omega->parsed())
            return cmd_omega(config_path, ratfun_path, coeffs_path, omega_source, K_flag, tol_flag,
                             n_max);
        if (c_kb->parsed()) return cmd_kb(config_path, pres_path, max_rules, max_len, dump_path);
        if (c_check->parsed()) return cmd_check(Session(config_path), depth);
        std::cout << app.help();
        return 4;
    } catch (const input_error& e) {
        if (json_errors)
            std::cerr << njson{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << "input error: " << e.what() << "\n";
        return 4;
    } catch (const budget_exceeded& e) {
        if (json_errors)
            std::cerr << njson{{"error", "budget"}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const invariant_violation& e) {
        if (json_errors)
            std::cerr << njson{{"error", "invariant"}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    }
}
