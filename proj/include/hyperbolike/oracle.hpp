#pragma once

// Oracle interface for locally finite vertex-transitive graphs. A backend
// names vertices by canonical byte-strings (equal string iff equal vertex),
// lists neighbors, and canonicalizes decorated balls under its symmetry
// family. Everything downstream (balls, tournaments, series) sees graphs
// only through this interface.

#include "hyperbolike/canonical.hpp"
#include "hyperbolike/numeric.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <vector>

namespace hyperbolike {

class GraphOracle {
  public:
    virtual ~GraphOracle() = default;

    virtual std::string base() const = 0;

    // finite, duplicate-free, sorted; foreign keys rejected with input_error
    virtual std::vector<std::string> neighbors(const std::string& v) const = 0;

    // byte-string equal across (center, dec) pairs exactly when a symmetry in
    // the backend's family carries one decorated ball onto the other
    virtual std::string canonical_decorated_ball(const std::string& center, long radius,
                                                 const std::map<std::string, long>& dec) const = 0;

    // whether equal degrees everywhere may be assumed (explicit files may not)
    virtual bool claims_transitive() const { return true; }

    virtual std::string name() const = 0;

    // exact d(u,v) when it is at most cap, and cap+1 otherwise; the default
    // is a truncated breadth-first search, overridden by backends that can
    // answer from algebra instead
    virtual long distance_capped(const std::string& u, const std::string& v, long cap) const {
        if (cap < 0) throw input_error("distance cap must be nonnegative");
        if (u == v) return 0;
        std::map<std::string, long> dist{{u, 0}};
        std::vector<std::string> frontier{u};
        for (long n = 1; n <= cap && !frontier.empty(); ++n) {
            std::vector<std::string> next;
            for (const auto& w : frontier)
                for (const auto& z : neighbors(w))
                    if (dist.emplace(z, n).second) {
                        if (z == v) return n;
                        next.push_back(z);
                    }
            frontier = std::move(next);
        }
        neighbors(v);  // still reject foreign keys that the search never met
        return cap + 1;
    }

    // left action of the vertex group when the backend has one: translate
    // composes g with v (both canonical keys) and invert gives the key of the
    // inverse element; backends without a group leave these unimplemented
    virtual bool has_translations() const { return false; }
    virtual std::string translate(const std::string&, const std::string&) const {
        throw invariant_violation(name() + " backend has no translation action");
    }
    virtual std::string invert(const std::string&) const {
        throw invariant_violation(name() + " backend has no translation action");
    }
};

namespace detail {

// exact distance-from-center map of the radius-r ball, via oracle BFS
inline std::map<std::string, long> ball_levels(const GraphOracle& o, const std::string& center,
                                               long r) {
    if (r < 0) throw input_error("ball radius must be nonnegative");
    std::map<std::string, long> level{{center, 0}};
    std::vector<std::string> frontier{center};
    for (long n = 1; n <= r && !frontier.empty(); ++n) {
        std::vector<std::string> next;
        for (const auto& v : frontier)
            for (const auto& u : o.neighbors(v))
                if (level.emplace(u, n).second) next.push_back(u);
        frontier = std::move(next);
    }
    return level;
}

// decorated-ball canonical form under all center-fixing ball isomorphisms:
// the induced ball subgraph is colored by (is-center, decoration value) and
// run through the canonical labeling engine
inline std::string decorated_ball_certificate(const GraphOracle& o, const std::string& center,
                                              long r, const std::map<std::string, long>& dec) {
    auto levels = ball_levels(o, center, r);
    if (dec.size() != levels.size()) throw input_error("dec domain mismatch: wrong vertex count");
    for (const auto& [k, value] : dec)
        if (!levels.count(k)) throw input_error("dec domain mismatch: key outside ball: " + k);

    std::vector<std::string> keys;
    keys.reserve(levels.size());
    for (const auto& [k, lv] : levels) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    std::map<std::string, int> index;
    for (int i = 0; i < int(keys.size()); ++i) index.emplace(keys[size_t(i)], i);

    ColoredGraph g;
    g.n = long(keys.size());
    g.adj.resize(keys.size());
    g.color.resize(keys.size());
    for (int i = 0; i < int(keys.size()); ++i) {
        const std::string& k = keys[size_t(i)];
        // parity separates the center flag from the decoration value
        g.color[size_t(i)] = 2 * dec.at(k) + (k == center ? 1 : 0);
        for (const auto& u : o.neighbors(k)) {
            auto it = index.find(u);
            if (it != index.end()) g.adj[size_t(i)].push_back(it->second);
        }
        std::sort(g.adj[size_t(i)].begin(), g.adj[size_t(i)].end());
        g.adj[size_t(i)].erase(std::unique(g.adj[size_t(i)].begin(), g.adj[size_t(i)].end()),
                               g.adj[size_t(i)].end());
    }
    return "r" + std::to_string(r) + "|" + canonical_certificate(g);
}

}  // namespace detail
}  // namespace hyperbolike
