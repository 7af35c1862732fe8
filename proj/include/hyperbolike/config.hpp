#pragma once

// Run configuration: a sectioned key = value text file selecting a backend
// and fixing every tunable, so identical configs reproduce identical runs.
// Unknown sections or keys are rejected rather than ignored; a config that
// parses is a config whose every line took effect.

#include "hyperbolike/cayley.hpp"
#include "hyperbolike/explicit_graph.hpp"
#include "hyperbolike/free_product.hpp"
#include "hyperbolike/oracle.hpp"
#include "hyperbolike/quasi_tree.hpp"
#include "hyperbolike/rewrite.hpp"
#include "hyperbolike/triangle.hpp"

#include <array>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace hyperbolike {

struct RunConfig {
    // [backend]
    std::string kind = "free_product";  // free_product | cayley | triangle | quasi_tree | explicit
    std::vector<long> orders{0, 0};     // free_product factor orders, 0 = infinite
    std::string presentation;           // cayley: .pres file path
    std::array<long, 3> signature{2, 3, 7};  // triangle
    long branching = 3;                 // quasi_tree
    std::string graph;                  // explicit: .graph file path

    // [params]
    long delta = -1;           // -1 = estimate from the ball (config word: auto)
    long explore_radius = 8;
    long K = 20;               // series/omega coefficient window
    double tol = 1e-9;
    std::string tol_text = "1e-9";
    long sample_budget = 4000;  // triple sampling cap in the delta estimate
    long max_rules = 4000;      // completion caps for cayley presentations
    long max_len = 64;
    long aut_cap = 2000;        // backtracking cap for ball automorphism counts
    long threads = 1;

    // [output]
    std::string json;
    std::string csv;
    std::string dot;
    std::string dump;
};

namespace detail {

inline long config_long(const std::string& value, const std::string& where) {
    try {
        size_t used = 0;
        long v = std::stol(value, &used);
        if (used == value.size()) return v;
    } catch (...) {
    }
    throw input_error(where + ": expected an integer, got '" + value + "'");
}

}  // namespace detail

inline RunConfig parse_run_config(std::istream& in, const std::string& name = "<config>") {
    RunConfig cfg;
    std::string line, section;
    long lineno = 0;
    bool saw_header = false, saw_kind = false;
    auto fail = [&](const std::string& msg) -> input_error {
        return input_error(name + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::string trimmed;
        {
            size_t a = line.find_first_not_of(" \t\r");
            size_t b = line.find_last_not_of(" \t\r");
            if (a != std::string::npos) trimmed = line.substr(a, b - a + 1);
        }
        if (trimmed.empty()) continue;
        if (!saw_header) {
            if (trimmed != "format runcfg v1") throw fail("expected header 'format runcfg v1'");
            saw_header = true;
            continue;
        }
        if (trimmed.front() == '[') {
            if (trimmed.back() != ']') throw fail("unterminated section name");
            section = trimmed.substr(1, trimmed.size() - 2);
            if (section != "backend" && section != "params" && section != "output")
                throw fail("unknown section [" + section + "]");
            continue;
        }
        auto eq = trimmed.find('=');
        if (eq == std::string::npos) throw fail("expected key = value");
        auto rtrim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = rtrim(trimmed.substr(0, eq));
        std::string value = rtrim(trimmed.substr(eq + 1));
        if (key.empty() || value.empty()) throw fail("expected key = value");
        std::string where = name + ":" + std::to_string(lineno);

        if (section == "backend") {
            if (key == "kind") {
                saw_kind = true;
                cfg.kind = value;
                if (value != "free_product" && value != "cayley" && value != "triangle" &&
                    value != "quasi_tree" && value != "explicit")
                    throw fail("unknown backend kind '" + value + "'");
            } else if (key == "orders") {
                cfg.orders.clear();
                std::istringstream os(value);
                std::string tok;
                while (os >> tok)
                    cfg.orders.push_back(tok == "inf" ? 0 : detail::config_long(tok, where));
                if (cfg.orders.empty()) throw fail("orders needs at least one factor");
            } else if (key == "presentation") {
                cfg.presentation = value;
            } else if (key == "signature") {
                std::istringstream os(value);
                std::string a, b, c, extra;
                if (!(os >> a >> b >> c) || (os >> extra))
                    throw fail("signature needs exactly three integers");
                cfg.signature = {detail::config_long(a, where), detail::config_long(b, where),
                                 detail::config_long(c, where)};
            } else if (key == "k") {
                cfg.branching = detail::config_long(value, where);
            } else if (key == "graph") {
                cfg.graph = value;
            } else {
                throw fail("unknown key '" + key + "' in [backend]");
            }
        } else if (section == "params") {
            if (key == "delta")
                cfg.delta = value == "auto" ? -1 : detail::config_long(value, where);
            else if (key == "explore_radius")
                cfg.explore_radius = detail::config_long(value, where);
            else if (key == "K")
                cfg.K = detail::config_long(value, where);
            else if (key == "tol") {
                try {
                    size_t used = 0;
                    cfg.tol = std::stod(value, &used);
                    if (used != value.size() || !(cfg.tol > 0)) throw input_error("");
                } catch (...) {
                    throw fail("tol must be a positive number");
                }
                cfg.tol_text = value;
            } else if (key == "sample_budget")
                cfg.sample_budget = detail::config_long(value, where);
            else if (key == "max_rules")
                cfg.max_rules = detail::config_long(value, where);
            else if (key == "max_len")
                cfg.max_len = detail::config_long(value, where);
            else if (key == "aut_cap")
                cfg.aut_cap = detail::config_long(value, where);
            else if (key == "threads")
                cfg.threads = detail::config_long(value, where);
            else
                throw fail("unknown key '" + key + "' in [params]");
        } else if (section == "output") {
            if (key == "json")
                cfg.json = value;
            else if (key == "csv")
                cfg.csv = value;
            else if (key == "dot")
                cfg.dot = value;
            else if (key == "dump")
                cfg.dump = value;
            else
                throw fail("unknown key '" + key + "' in [output]");
        } else {
            throw fail("key outside any section");
        }
    }
    if (!saw_header) throw input_error(name + ": empty config, expected 'format runcfg v1'");
    if (!saw_kind) throw input_error(name + ": [backend] must set kind");
    if (cfg.explore_radius < 0) throw input_error(name + ": explore_radius must be nonnegative");
    if (cfg.delta < -1) throw input_error(name + ": delta must be 'auto' or nonnegative");
    if (cfg.K < 1) throw input_error(name + ": K must be positive");
    if (cfg.threads < 1) throw input_error(name + ": threads must be positive");
    return cfg;
}

inline RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file: " + path);
    return parse_run_config(in, path);
}

// canonical text form; parsing it back reproduces the same configuration
inline std::string config_text(const RunConfig& cfg) {
    std::ostringstream out;
    out << "format runcfg v1\n";
    out << "[backend]\n";
    out << "kind = " << cfg.kind << "\n";
    if (cfg.kind == "free_product") {
        out << "orders =";
        for (long o : cfg.orders) out << (o == 0 ? std::string(" inf") : " " + std::to_string(o));
        out << "\n";
    } else if (cfg.kind == "cayley") {
        out << "presentation = " << cfg.presentation << "\n";
    } else if (cfg.kind == "triangle") {
        out << "signature = " << cfg.signature[0] << " " << cfg.signature[1] << " "
            << cfg.signature[2] << "\n";
    } else if (cfg.kind == "quasi_tree") {
        out << "k = " << cfg.branching << "\n";
    } else if (cfg.kind == "explicit") {
        out << "graph = " << cfg.graph << "\n";
    }
    out << "[params]\n";
    out << "delta = " << (cfg.delta < 0 ? std::string("auto") : std::to_string(cfg.delta)) << "\n";
    out << "explore_radius = " << cfg.explore_radius << "\n";
    out << "K = " << cfg.K << "\n";
    out << "tol = " << cfg.tol_text << "\n";
    out << "sample_budget = " << cfg.sample_budget << "\n";
    out << "max_rules = " << cfg.max_rules << "\n";
    out << "max_len = " << cfg.max_len << "\n";
    out << "aut_cap = " << cfg.aut_cap << "\n";
    out << "threads = " << cfg.threads << "\n";
    out << "[output]\n";
    if (!cfg.json.empty()) out << "json = " << cfg.json << "\n";
    if (!cfg.csv.empty()) out << "csv = " << cfg.csv << "\n";
    if (!cfg.dot.empty()) out << "dot = " << cfg.dot << "\n";
    if (!cfg.dump.empty()) out << "dump = " << cfg.dump << "\n";
    return out.str();
}

inline std::unique_ptr<GraphOracle> make_oracle(const RunConfig& cfg) {
    if (cfg.kind == "free_product") return std::make_unique<FreeProductOracle>(cfg.orders);
    if (cfg.kind == "cayley") {
        if (cfg.presentation.empty()) throw input_error("cayley backend needs presentation = <path>");
        auto rs = kb_complete(load_presentation(cfg.presentation), cfg.max_rules, cfg.max_len);
        return std::make_unique<CayleyOracle>(std::move(rs));
    }
    if (cfg.kind == "triangle")
        return std::make_unique<TriangleOracle>(cfg.signature[0], cfg.signature[1],
                                                cfg.signature[2]);
    if (cfg.kind == "quasi_tree") return std::make_unique<QuasiTreeOracle>(cfg.branching);
    if (cfg.kind == "explicit") {
        if (cfg.graph.empty()) throw input_error("explicit backend needs graph = <path>");
        return std::make_unique<ExplicitOracle>(load_graph(cfg.graph));
    }
    throw input_error("unknown backend kind '" + cfg.kind + "'");
}

}  // namespace hyperbolike
