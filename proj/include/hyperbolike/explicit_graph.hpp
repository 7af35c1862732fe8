#pragma once

// Finite graphs given explicitly as edge lists, and the oracle view of them.
// Text format: optional "format graph v1" header, one "base <key>" line,
// then "edge <key1> <key2>" lines. Keys are whitespace-free strings.
// Duplicate edges are ignored; self-loops and malformed lines are errors
// reported with line numbers.

#include "hyperbolike/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hyperbolike {

struct FiniteGraph {
    std::string base;
    std::map<std::string, std::vector<std::string>> adj;  // sorted, duplicate-free

    bool has_vertex(const std::string& k) const { return adj.count(k) != 0; }

    void add_vertex(const std::string& k) { adj.emplace(k, std::vector<std::string>{}); }

    void add_edge(const std::string& u, const std::string& v) {
        if (u == v) throw input_error("self-loop at vertex " + u);
        add_vertex(u);
        add_vertex(v);
        auto insert_sorted = [](std::vector<std::string>& list, const std::string& k) {
            auto it = std::lower_bound(list.begin(), list.end(), k);
            if (it == list.end() || *it != k) list.insert(it, k);
        };
        insert_sorted(adj[u], v);
        insert_sorted(adj[v], u);
    }

    void validate() const {
        if (!has_vertex(base)) throw input_error("base vertex " + base + " not in graph");
        for (const auto& [v, list] : adj)
            for (const auto& u : list) {
                auto it = adj.find(u);
                if (it == adj.end() ||
                    !std::binary_search(it->second.begin(), it->second.end(), v))
                    throw invariant_violation("asymmetric adjacency at " + v + " -- " + u);
            }
    }
};

inline FiniteGraph parse_graph(std::istream& in, const std::string& name) {
    FiniteGraph g;
    bool have_base = false;
    std::string line;
    long lineno = 0;
    auto fail = [&](const std::string& msg) -> input_error {
        return input_error(name + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "format") {
            std::string fmt, ver;
            if (!(ls >> fmt >> ver) || fmt != "graph" || ver != "v1")
                throw fail("expected 'format graph v1'");
            if (have_base || !g.adj.empty()) throw fail("format line must come first");
        } else if (word == "base") {
            if (have_base) throw fail("duplicate base line");
            if (!(ls >> g.base)) throw fail("base line needs a key");
            std::string extra;
            if (ls >> extra) throw fail("trailing tokens after base key");
            g.add_vertex(g.base);
            have_base = true;
        } else if (word == "edge") {
            if (!have_base) throw fail("edge before base line");
            std::string u, v;
            if (!(ls >> u >> v)) throw fail("edge line needs two keys");
            std::string extra;
            if (ls >> extra) throw fail("trailing tokens after edge keys");
            if (u == v) throw fail("self-loop at vertex " + u);
            g.add_edge(u, v);
        } else {
            throw fail("unknown directive '" + word + "'");
        }
    }
    ++lineno;
    if (!have_base) throw fail("missing base line");
    g.validate();
    return g;
}

inline FiniteGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file " + path);
    return parse_graph(in, path);
}

inline void dump_graph(const FiniteGraph& g, std::ostream& out) {
    out << "format graph v1\n";
    out << "base " << g.base << "\n";
    for (const auto& [v, list] : g.adj)
        for (const auto& u : list)
            if (v < u) out << "edge " << v << " " << u << "\n";
}

// oracle over a finite explicit graph; symmetry family: all center-fixing
// decorated-ball isomorphisms, with soundness left to downstream validation
class ExplicitOracle : public GraphOracle {
  public:
    explicit ExplicitOracle(FiniteGraph g) : g_(std::move(g)) { g_.validate(); }

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

    bool claims_transitive() const override { return false; }

    std::string name() const override { return "explicit"; }

    const FiniteGraph& graph() const { return g_; }

  private:
    FiniteGraph g_;
};

}  // namespace hyperbolike
