#pragma once

// Counting embeddings of a pattern graph into a host graph with induced
// semantics: a map is admissible when it is injective and preserves both
// edges and non-edges. Maps are counted individually, so the unanchored
// count of a pattern in itself equals the order of its automorphism group,
// and anchor-free counts are always divisible by that order.

#include "hyperbolike/ball.hpp"
#include "hyperbolike/canonical.hpp"
#include "hyperbolike/explicit_graph.hpp"
#include "hyperbolike/numeric.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperbolike {

namespace detail {

// pattern compiled to a fixed placement order: position 0 is the anchor,
// every later position has as many already-placed neighbors as possible so
// that candidate images are drawn from one adjacency list, not the host
struct CompiledPattern {
    long n = 0;
    std::vector<std::string> key;               // by position
    std::vector<long> degree;                   // by position
    std::vector<std::vector<int>> adj_earlier;  // earlier positions, adjacent
    std::vector<std::vector<int>> nonadj_earlier;
    std::vector<long> anchor_dist;  // graph distance from position 0; -1 unreachable
};

inline CompiledPattern compile_pattern(const FiniteGraph& Y, const std::string& first) {
    Y.validate();
    if (!Y.has_vertex(first)) throw input_error("pattern anchor " + first + " not in graph");
    std::vector<std::string> keys;
    keys.reserve(Y.adj.size());
    for (const auto& [k, list] : Y.adj) keys.push_back(k);
    std::map<std::string, int> idx;
    for (int i = 0; i < int(keys.size()); ++i) idx.emplace(keys[size_t(i)], i);

    int n = int(keys.size());
    std::vector<std::vector<char>> adj(size_t(n), std::vector<char>(size_t(n), 0));
    std::vector<long> degree(size_t(n), 0);
    for (const auto& [k, list] : Y.adj) {
        int u = idx[k];
        degree[size_t(u)] = long(list.size());
        for (const auto& other : list) adj[size_t(u)][size_t(idx[other])] = 1;
    }

    std::vector<long> dist(size_t(n), -1);
    std::deque<int> queue{idx[first]};
    dist[size_t(idx[first])] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u = 0; u < n; ++u)
            if (adj[size_t(v)][size_t(u)] && dist[size_t(u)] < 0) {
                dist[size_t(u)] = dist[size_t(v)] + 1;
                queue.push_back(u);
            }
    }

    std::vector<int> order{idx[first]};
    std::vector<char> placed(size_t(n), 0);
    placed[size_t(idx[first])] = 1;
    while (long(order.size()) < n) {
        int best = -1;
        long best_links = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[size_t(v)]) continue;
            long links = 0;
            for (int u : order) links += adj[size_t(v)][size_t(u)];
            if (links > best_links ||
                (links == best_links && degree[size_t(v)] > degree[size_t(best)]) ||
                (links == best_links && degree[size_t(v)] == degree[size_t(best)] &&
                 keys[size_t(v)] < keys[size_t(best)]))
                best = v, best_links = links;
        }
        placed[size_t(best)] = 1;
        order.push_back(best);
    }

    CompiledPattern p;
    p.n = n;
    p.key.resize(size_t(n));
    p.degree.resize(size_t(n));
    p.anchor_dist.resize(size_t(n));
    p.adj_earlier.resize(size_t(n));
    p.nonadj_earlier.resize(size_t(n));
    for (int pos = 0; pos < n; ++pos) {
        int v = order[size_t(pos)];
        p.key[size_t(pos)] = keys[size_t(v)];
        p.degree[size_t(pos)] = degree[size_t(v)];
        p.anchor_dist[size_t(pos)] = dist[size_t(v)];
        for (int q = 0; q < pos; ++q) {
            int u = order[size_t(q)];
            (adj[size_t(v)][size_t(u)] ? p.adj_earlier : p.nonadj_earlier)[size_t(pos)].push_back(q);
        }
    }
    return p;
}

struct HostGraph {
    long n = 0;
    std::vector<std::vector<int>> adj;  // sorted
    std::vector<long> level;            // distance from the ball base; empty otherwise
    std::vector<std::string> key;

    bool adjacent(int u, int v) const {
        const auto& row = adj[size_t(u)];
        return std::binary_search(row.begin(), row.end(), v);
    }
};

inline HostGraph host_from_finite(const FiniteGraph& Z) {
    Z.validate();
    HostGraph h;
    std::map<std::string, int> idx;
    for (const auto& [k, list] : Z.adj) {
        idx.emplace(k, int(h.key.size()));
        h.key.push_back(k);
    }
    h.n = long(h.key.size());
    h.adj.resize(size_t(h.n));
    for (const auto& [k, list] : Z.adj) {
        auto& row = h.adj[size_t(idx[k])];
        for (const auto& other : list) row.push_back(idx[other]);
        std::sort(row.begin(), row.end());
    }
    return h;
}

// the ball's keys are level-major, so the radius-n sub-ball is an index
// prefix and its induced adjacency is a filter on the stored lists
inline HostGraph host_from_ball(const Ball& b, long n) {
    if (n < 0 || n > b.radius) throw input_error("sub-ball radius outside the built ball");
    long cut = 0;
    while (cut < b.size() && b.level[size_t(cut)] <= n) ++cut;
    HostGraph h;
    h.n = cut;
    h.adj.resize(size_t(cut));
    h.level.assign(b.level.begin(), b.level.begin() + cut);
    h.key.assign(b.keys.begin(), b.keys.begin() + cut);
    for (long v = 0; v < cut; ++v)
        for (int u : b.adj[size_t(v)])
            if (u < cut) h.adj[size_t(v)].push_back(u);
    return h;
}

// distance from one host vertex, capped: everything beyond the cap reports
// cap + 1, which is enough to decide the pruning inequality
inline std::vector<long> host_distances(const HostGraph& h, int from, long cap) {
    std::vector<long> dist(size_t(h.n), cap + 1);
    std::deque<int> queue{from};
    dist[size_t(from)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (dist[size_t(v)] == cap) continue;
        for (int u : h.adj[size_t(v)])
            if (dist[size_t(u)] > cap) {
                dist[size_t(u)] = dist[size_t(v)] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}

// backtracking over placement positions; a candidate must match the exact
// adjacency pattern to all earlier images, have enough host degree, and sit
// no farther from the anchor image than it sits from the anchor in the
// pattern (paths contract under graph maps, so this never excludes a copy)
template <class OnLeaf>
inline void search_embeddings(const CompiledPattern& p, const HostGraph& h, int anchor_image,
                              OnLeaf&& leaf) {
    if (p.n == 0 || h.n == 0) return;
    std::vector<long> anchor_dist;
    if (anchor_image >= 0) {
        // a ball host keyed at its base already stores the needed distances
        if (!h.level.empty() && anchor_image == 0)
            anchor_dist = h.level;
        else {
            long cap = 0;
            for (long d : p.anchor_dist) cap = std::max(cap, d);
            anchor_dist = host_distances(h, anchor_image, cap);
        }
    }

    std::vector<int> img(size_t(p.n), -1);
    std::vector<char> used(size_t(h.n), 0);

    auto admissible = [&](int pos, int c) {
        if (used[size_t(c)]) return false;
        if (long(h.adj[size_t(c)].size()) < p.degree[size_t(pos)]) return false;
        if (anchor_image >= 0 && p.anchor_dist[size_t(pos)] >= 0 &&
            anchor_dist[size_t(c)] > p.anchor_dist[size_t(pos)])
            return false;
        for (int q : p.adj_earlier[size_t(pos)])
            if (!h.adjacent(c, img[size_t(q)])) return false;
        for (int q : p.nonadj_earlier[size_t(pos)])
            if (h.adjacent(c, img[size_t(q)])) return false;
        return true;
    };

    auto place = [&](auto&& self, int pos) -> void {
        if (pos == p.n) {
            leaf(img);
            return;
        }
        auto descend = [&](int c) {
            img[size_t(pos)] = c;
            used[size_t(c)] = 1;
            self(self, pos + 1);
            used[size_t(c)] = 0;
            img[size_t(pos)] = -1;
        };
        if (pos == 0 && anchor_image >= 0) {
            if (admissible(0, anchor_image)) descend(anchor_image);
            return;
        }
        const auto& sources = p.adj_earlier[size_t(pos)];
        if (!sources.empty()) {
            int pivot = sources[0];
            for (int q : sources)
                if (h.adj[size_t(img[size_t(q)])].size() < h.adj[size_t(img[size_t(pivot)])].size())
                    pivot = q;
            for (int c : h.adj[size_t(img[size_t(pivot)])])
                if (admissible(pos, c)) descend(c);
            return;
        }
        for (int c = 0; c < h.n; ++c)
            if (admissible(pos, c)) descend(c);
    };
    place(place, 0);
}

inline long count_in_host(const FiniteGraph& y, const HostGraph& h,
                          const std::optional<std::string>& anchor_image) {
    int anchor = -1;
    if (anchor_image) {
        auto it = std::find(h.key.begin(), h.key.end(), *anchor_image);
        if (it == h.key.end())
            throw input_error("anchor image " + *anchor_image + " not in host graph");
        anchor = int(it - h.key.begin());
    }
    CompiledPattern p = compile_pattern(y, y.base);
    long count = 0;
    search_embeddings(p, h, anchor, [&](const std::vector<int>&) { ++count; });
    return count;
}

}  // namespace detail

// number of injective maps sending pattern edges to edges and non-edges to
// non-edges; with an anchor image, only maps sending the pattern base there
inline long count_induced_embeddings(const FiniteGraph& y, const FiniteGraph& z,
                                     const std::optional<std::string>& anchor_image = std::nullopt) {
    return detail::count_in_host(y, detail::host_from_finite(z), anchor_image);
}

// same count against the radius-n sub-ball of a built ball (n = -1: whole ball)
inline long count_induced_embeddings(const FiniteGraph& y, const Ball& b, long n = -1,
                                     const std::optional<std::string>& anchor_image = std::nullopt) {
    return detail::count_in_host(y, detail::host_from_ball(b, n < 0 ? b.radius : n), anchor_image);
}

// copies anchored at the ball base, classified by the deepest level the
// image touches; entry d counts the copies that fit in the radius-d ball
// and no smaller one, so prefix sums recover anchored counts per radius
inline std::vector<long> enumerate_copies_by_depth(const FiniteGraph& y, const Ball& b) {
    detail::HostGraph h = detail::host_from_ball(b, b.radius);
    detail::CompiledPattern p = detail::compile_pattern(y, y.base);
    std::vector<long> out(size_t(b.radius) + 1, 0);
    detail::search_embeddings(p, h, 0, [&](const std::vector<int>& img) {
        long deep = 0;
        for (int v : img) deep = std::max(deep, h.level[size_t(v)]);
        ++out[size_t(deep)];
    });
    return out;
}

// unanchored variant of the same classification; prefix sums give the
// number of copies of the pattern in each sub-ball
inline std::vector<long> unanchored_copies_by_depth(const FiniteGraph& y, const Ball& b) {
    detail::HostGraph h = detail::host_from_ball(b, b.radius);
    detail::CompiledPattern p = detail::compile_pattern(y, y.base);
    std::vector<long> out(size_t(b.radius) + 1, 0);
    detail::search_embeddings(p, h, -1, [&](const std::vector<int>& img) {
        long deep = 0;
        for (int v : img) deep = std::max(deep, h.level[size_t(v)]);
        ++out[size_t(deep)];
    });
    return out;
}

// the radius-n sub-ball as a standalone graph, base preserved
inline FiniteGraph induced_ball_graph(const Ball& b, long n) {
    detail::HostGraph h = detail::host_from_ball(b, n);
    FiniteGraph g;
    g.base = b.base;
    for (const auto& k : h.key) g.add_vertex(k);
    for (long v = 0; v < h.n; ++v)
        for (int u : h.adj[size_t(v)])
            if (u > v) g.add_edge(h.key[size_t(v)], h.key[size_t(u)]);
    return g;
}

namespace detail {

// order of the automorphism group of a tree: root at the topological center
// and multiply, over every vertex, the factorials of the multiplicities of
// isomorphic child subtrees; a bicentral tree with two isomorphic halves
// gains one extra swap factor
inline Int tree_automorphism_order(const HostGraph& h) {
    long n = h.n;
    if (n == 1) return 1;
    std::vector<long> deg(size_t(n), 0);
    for (long v = 0; v < n; ++v) deg[size_t(v)] = long(h.adj[size_t(v)].size());
    std::vector<char> alive(size_t(n), 1);
    std::deque<int> fringe;
    long remaining = n;
    for (long v = 0; v < n; ++v)
        if (deg[size_t(v)] <= 1) fringe.push_back(int(v));
    while (remaining > 2) {
        std::deque<int> next;
        for (int v : fringe) {
            alive[size_t(v)] = 0;
            --remaining;
            for (int u : h.adj[size_t(v)])
                if (alive[size_t(u)] && --deg[size_t(u)] == 1) next.push_back(u);
        }
        fringe = std::move(next);
    }
    std::vector<int> centers;
    for (long v = 0; v < n; ++v)
        if (alive[size_t(v)]) centers.push_back(int(v));

    Int total = 1;
    // rooted certificate and aut contribution below `root`, never crossing `up`
    auto cert_below = [&](auto&& self, int root, int up) -> std::string {
        std::vector<std::string> parts;
        for (int u : h.adj[size_t(root)]) {
            if (u == up) continue;
            parts.push_back(self(self, u, root));
        }
        std::sort(parts.begin(), parts.end());
        for (size_t i = 0; i < parts.size();) {
            size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            for (size_t m = 2; m <= j - i; ++m) total *= Int(m);
            i = j;
        }
        std::string s = "(";
        for (const auto& q : parts) s += q;
        s += ")";
        return s;
    };
    if (centers.size() == 1) {
        cert_below(cert_below, centers[0], -1);
        return total;
    }
    std::string a = cert_below(cert_below, centers[0], centers[1]);
    std::string b = cert_below(cert_below, centers[1], centers[0]);
    if (a == b) total *= 2;
    return total;
}

inline bool host_is_tree(const HostGraph& h) {
    long edges = 0;
    for (const auto& row : h.adj) edges += long(row.size());
    if (edges != 2 * (h.n - 1)) return false;
    std::vector<long> dist = host_distances(h, 0, h.n);
    for (long d : dist)
        if (d > h.n) return false;
    return true;
}

inline Int host_automorphism_order(const HostGraph& h) {
    if (h.n == 0) return 1;
    if (host_is_tree(h)) return tree_automorphism_order(h);
    ColoredGraph g;
    g.n = h.n;
    g.adj = h.adj;
    g.color.assign(size_t(h.n), 0);
    return automorphism_order(g);
}

}  // namespace detail

inline Int graph_automorphism_order(const FiniteGraph& y) {
    return detail::host_automorphism_order(detail::host_from_finite(y));
}

inline Int ball_automorphism_order(const Ball& b, long n = -1) {
    return detail::host_automorphism_order(detail::host_from_ball(b, n < 0 ? b.radius : n));
}

}  // namespace hyperbolike
