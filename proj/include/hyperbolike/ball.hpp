#pragma once

// Finite balls around the basepoint: BFS construction with deterministic
// indexing, the geodesic parent/child DAG, dead-end census, a four-point
// hyperbolicity estimate, and the ball automorphism count.

#include "hyperbolike/canonical.hpp"
#include "hyperbolike/numeric.hpp"
#include "hyperbolike/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace hyperbolike {

struct Ball {
    std::string base;
    long radius = 0;
    std::vector<std::string> keys;           // index -> key, level-major, sorted per level
    std::vector<long> level;                 // distance from base
    std::vector<std::vector<int>> adj;       // in-ball neighbors, sorted indices
    std::vector<std::vector<int>> parents;   // neighbors one level down
    std::vector<std::vector<int>> children;  // neighbors one level up
    std::vector<long> full_degree;           // oracle degree, outside neighbors included
    bool degree_warning = false;             // interior degrees unequal (explicit backends)

    long size() const { return long(keys.size()); }

    long index_of(const std::string& k) const {
        auto it = index_.find(k);
        return it == index_.end() ? -1 : it->second;
    }

    // sphere sizes for levels 0..radius; trailing zeros when BFS exhausted
    // the graph early
    std::vector<long> level_sizes() const {
        std::vector<long> sizes(size_t(radius) + 1, 0);
        for (long lv : level) ++sizes[size_t(lv)];
        return sizes;
    }

    friend Ball build_ball(const GraphOracle& o, long R);

  private:
    std::map<std::string, int> index_;
};

inline Ball build_ball(const GraphOracle& o, long R) {
    if (R < 0) throw input_error("ball radius must be nonnegative");
    Ball b;
    b.base = o.base();
    b.radius = R;

    // discovery pass: exact levels plus one cached neighbor list per vertex
    std::map<std::string, long> level{{b.base, 0}};
    std::map<std::string, std::vector<std::string>> nbrs;
    std::vector<std::string> frontier{b.base};
    for (long n = 0; n <= R && !frontier.empty(); ++n) {
        std::sort(frontier.begin(), frontier.end());
        std::vector<std::string> next;
        for (const auto& v : frontier) {
            auto list = o.neighbors(v);
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            for (const auto& u : list) {
                if (u == v) throw invariant_violation("oracle reports self-loop at " + v);
                if (n < R && level.emplace(u, n + 1).second) next.push_back(u);
            }
            nbrs.emplace(v, std::move(list));
        }
        frontier = std::move(next);
    }

    // indexing pass: level-major, keys sorted inside each level
    std::vector<std::vector<std::string>> by_level(size_t(R) + 1);
    for (const auto& [k, lv] : level) by_level[size_t(lv)].push_back(k);
    for (auto& keys : by_level) std::sort(keys.begin(), keys.end());
    for (long lv = 0; lv <= R; ++lv)
        for (auto& k : by_level[size_t(lv)]) {
            b.index_.emplace(k, int(b.keys.size()));
            b.keys.push_back(std::move(k));
            b.level.push_back(lv);
        }

    long n = b.size();
    b.adj.resize(size_t(n));
    b.parents.resize(size_t(n));
    b.children.resize(size_t(n));
    b.full_degree.resize(size_t(n));
    for (int v = 0; v < n; ++v) {
        const auto& list = nbrs.at(b.keys[size_t(v)]);
        b.full_degree[size_t(v)] = long(list.size());
        for (const auto& uk : list) {
            long u = b.index_of(uk);
            if (u < 0) {
                if (b.level[size_t(v)] < R)
                    throw invariant_violation("interior vertex " + b.keys[size_t(v)] +
                                              " has an undiscovered neighbor " + uk);
                continue;
            }
            // symmetry of the oracle, checked on the cached lists
            const auto& back = nbrs.at(uk);
            if (!std::binary_search(back.begin(), back.end(), b.keys[size_t(v)]))
                throw invariant_violation("oracle adjacency asymmetric at " + b.keys[size_t(v)] +
                                          " -- " + uk);
            long dl = b.level[size_t(u)] - b.level[size_t(v)];
            if (dl < -1 || dl > 1)
                throw invariant_violation("neighbor levels differ by more than 1 at " +
                                          b.keys[size_t(v)]);
            b.adj[size_t(v)].push_back(int(u));
            if (dl == -1) b.parents[size_t(v)].push_back(int(u));
            if (dl == 1) b.children[size_t(v)].push_back(int(u));
        }
    }
    for (int v = 0; v < n; ++v)
        if (b.level[size_t(v)] > 0 && b.parents[size_t(v)].empty())
            throw invariant_violation("vertex " + b.keys[size_t(v)] + " has no parent");

    // interior vertices see all their neighbors, so full degrees there must
    // agree when the backend claims transitivity
    long interior_degree = -1;
    for (int v = 0; v < n; ++v) {
        if (b.level[size_t(v)] > R - 1) continue;
        if (interior_degree < 0) interior_degree = b.full_degree[size_t(v)];
        if (b.full_degree[size_t(v)] != interior_degree) {
            if (o.claims_transitive())
                throw invariant_violation("interior degree mismatch at " + b.keys[size_t(v)] +
                                          " in a transitive backend");
            b.degree_warning = true;
        }
    }
    return b;
}

// Sphere sizes 0..R without storing the ball: only the last two levels are
// kept, which suffices for dedup because a neighbor of a level-n vertex has
// level at least n - 1. Exhausted graphs report trailing zeros.
inline std::vector<long> bfs_sphere_sizes(const GraphOracle& o, long R) {
    if (R < 0) throw input_error("sphere range must be nonnegative");
    std::vector<long> sizes{1};
    std::vector<std::string> prev, cur{o.base()};
    for (long l = 1; l <= R; ++l) {
        std::vector<std::string> raw;
        for (const auto& v : cur)
            for (auto& n : o.neighbors(v)) raw.push_back(std::move(n));
        std::sort(raw.begin(), raw.end());
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        std::vector<std::string> tmp, next;
        std::set_difference(raw.begin(), raw.end(), cur.begin(), cur.end(),
                            std::back_inserter(tmp));
        std::set_difference(tmp.begin(), tmp.end(), prev.begin(), prev.end(),
                            std::back_inserter(next));
        sizes.push_back(long(next.size()));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return sizes;
}

struct DeadEndRow {
    long level = 0;
    long sphere = 0;
    long dead_ends = 0;
    Rat density = 0;
};

struct DeadEndReport {
    long radius = 0;
    long max_reliable_level = 0;  // radius - 1; the radius row relies on full degrees
    std::vector<DeadEndRow> rows;
};

// A vertex at level n < R is a dead end iff it has no child. At level R the
// in-ball children are never visible, but a missing neighbor of a level-R
// vertex necessarily lies at level R+1, so the vertex is a dead end iff its
// in-ball
// degree equals its full oracle degree. Levels beyond R are undecidable.
inline DeadEndReport dead_end_census(const Ball& b, long max_level = -1) {
    if (max_level < 0) max_level = b.radius;
    if (max_level > b.radius)
        throw input_error("dead-end census level " + std::to_string(max_level) +
                          " exceeds ball radius " + std::to_string(b.radius));
    DeadEndReport report;
    report.radius = b.radius;
    report.max_reliable_level = b.radius - 1;
    report.rows.resize(size_t(max_level) + 1);
    for (long lv = 0; lv <= max_level; ++lv) report.rows[size_t(lv)].level = lv;
    for (int v = 0; v < b.size(); ++v) {
        long lv = b.level[size_t(v)];
        if (lv > max_level) continue;
        auto& row = report.rows[size_t(lv)];
        ++row.sphere;
        bool dead = lv < b.radius ? b.children[size_t(v)].empty()
                                  : long(b.adj[size_t(v)].size()) == b.full_degree[size_t(v)];
        if (dead) ++row.dead_ends;
    }
    for (auto& row : report.rows)
        row.density = row.sphere == 0 ? Rat(0) : Rat(row.dead_ends, row.sphere);
    return report;
}

namespace detail {

// BFS distances inside the ball subgraph from one source
inline std::vector<long> in_ball_distances(const Ball& b, int source) {
    std::vector<long> dist(size_t(b.size()), -1);
    dist[size_t(source)] = 0;
    std::vector<int> frontier{source};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier)
            for (int u : b.adj[size_t(v)])
                if (dist[size_t(u)] < 0) {
                    dist[size_t(u)] = dist[size_t(v)] + 1;
                    next.push_back(u);
                }
        frontier = std::move(next);
    }
    return dist;
}

// m-th triple (i < j < k) of {0..n-1} in lexicographic rank order
inline std::array<int, 3> unrank_triple(long long m, long n) {
    auto pairs = [](long long t) { return t * (t - 1) / 2; };
    int i = 0;
    while (m >= pairs(n - 1 - i)) m -= pairs(n - 1 - i), ++i;
    int j = i + 1;
    while (m >= n - 1 - j) m -= n - 1 - j, ++j;
    return {i, j, int(j + 1 + m)};
}

}  // namespace detail

// Four-point hyperbolicity defect over sampled triples together with the
// basepoint, from exact in-ball distances: half the gap between the largest
// two of the three pairings. Deterministic: triple m of the budget is the
// (m*P mod total)-th lexicographic triple for a fixed multiplier P coprime
// to the total, so larger budgets extend smaller ones and the estimate is
// monotone. Exhaustive when the budget covers all triples.
inline Rat estimate_delta(const Ball& b, long long sample_budget) {
    if (b.radius < 2) throw input_error("delta estimate needs ball radius >= 2");
    if (sample_budget <= 0) return Rat(0);
    long n = b.size();
    if (n < 3) return Rat(0);
    long long total = (long long)(n) * (n - 1) * (n - 2) / 6;
    bool exhaustive = sample_budget >= total;
    long long count = exhaustive ? total : sample_budget;

    long long mult = 2654435761LL % total;
    if (mult <= 0) mult += total;
    while (std::gcd(mult, total) != 1) ++mult;

    std::vector<std::array<int, 3>> triples;
    triples.reserve(size_t(count));
    std::set<int> sources;
    for (long long m = 0; m < count; ++m) {
        long long rank = exhaustive ? m : (m % total) * (mult % total) % total;
        auto t = detail::unrank_triple(rank, n);
        triples.push_back(t);
        sources.insert(t[0]);
        sources.insert(t[1]);
    }
    std::map<int, std::vector<long>> dist;
    for (int s : sources) dist.emplace(s, detail::in_ball_distances(b, s));

    long best = 0;
    for (const auto& [u, v, w] : triples) {
        const auto& du = dist.at(u);
        const auto& dv = dist.at(v);
        long s1 = du[size_t(v)] + b.level[size_t(w)];
        long s2 = du[size_t(w)] + b.level[size_t(v)];
        long s3 = b.level[size_t(u)] + dv[size_t(w)];
        long hi = std::max({s1, s2, s3});
        long mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
        best = std::max(best, hi - mid);
    }
    return Rat(best, 2);
}

inline Int ball_automorphism_count(const Ball& b, long cap = 2000) {
    if (b.size() > cap)
        throw input_error("ball too large for automorphism count: " + std::to_string(b.size()) +
                          " vertices exceed cap " + std::to_string(cap));
    ColoredGraph g;
    g.n = b.size();
    g.adj = b.adj;
    g.color.assign(size_t(b.size()), 0);  // basepoint not fixed
    return automorphism_order(g);
}

}  // namespace hyperbolike
