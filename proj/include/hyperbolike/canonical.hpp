#pragma once

// Canonical forms and automorphism groups of small colored graphs via
// individualization-refinement with orbit pruning, plus a Schreier-Sims
// chain to turn the discovered generators into an exact group order.
// Colors are arbitrary long values and take part in the certificate, so
// two graphs compare equal only when an isomorphism matches colors exactly.

#include "hyperbolike/numeric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace hyperbolike {

struct ColoredGraph {
    long n = 0;
    std::vector<std::vector<int>> adj;  // symmetric, irreflexive, no duplicates
    std::vector<long> color;            // one value per vertex

    void validate() const {
        if (long(adj.size()) != n || long(color.size()) != n)
            throw input_error("colored graph arrays disagree with vertex count");
        for (int v = 0; v < n; ++v) {
            std::set<int> seen;
            for (int u : adj[size_t(v)]) {
                if (u < 0 || u >= n) throw input_error("edge endpoint out of range");
                if (u == v) throw invariant_violation("self-loop in colored graph");
                if (!seen.insert(u).second) throw invariant_violation("duplicate edge in adjacency list");
                auto& back = adj[size_t(u)];
                if (std::find(back.begin(), back.end(), v) == back.end())
                    throw invariant_violation("asymmetric adjacency in colored graph");
            }
        }
    }
};

namespace detail {

// union-find over vertices, used for orbit pruning during the search
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(size_t(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[size_t(x)] != x) x = p[size_t(x)] = p[size_t(p[size_t(x)])];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[size_t(std::max(a, b))] = std::min(a, b);
    }
};

// 1-dimensional Weisfeiler-Leman refinement iterated to its fixed point;
// the result is dense with class ids ordered by (old class, neighbor multiset)
inline std::vector<int> refine_colors(const ColoredGraph& g, std::vector<int> colors) {
    const int n = int(g.n);
    while (true) {
        std::map<std::vector<int>, int> order;
        std::vector<std::vector<int>> sig((size_t(n)));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[size_t(v)];
            s.reserve(g.adj[size_t(v)].size() + 1);
            s.push_back(colors[size_t(v)]);
            for (int u : g.adj[size_t(v)]) s.push_back(colors[size_t(u)]);
            std::sort(s.begin() + 1, s.end());
            order.emplace(s, 0);
        }
        int next = 0;
        for (auto& [s, id] : order) id = next++;
        size_t old_classes = std::set<int>(colors.begin(), colors.end()).size();
        for (int v = 0; v < n; ++v) colors[size_t(v)] = order[sig[size_t(v)]];
        // refinement only splits classes, so an unchanged count means stable
        if (size_t(next) == old_classes || next == n) return colors;
    }
}

// permutation helpers; h = f after g throughout
inline std::vector<int> perm_compose(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = f[size_t(g[i])];
    return h;
}
inline std::vector<int> perm_inverse(const std::vector<int>& f) {
    std::vector<int> h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[size_t(f[i])] = int(i);
    return h;
}
inline bool perm_is_identity(const std::vector<int>& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != int(i)) return false;
    return true;
}

// stabilizer chain with full verification of the Schreier condition; exact
// order of the group generated by the permutations fed to add_generator
struct SchreierSims {
    int n;
    std::vector<int> base_pts;
    std::vector<std::vector<std::vector<int>>> placed;      // new gens per level
    std::vector<std::map<int, std::vector<int>>> orbit;     // point -> coset rep

    explicit SchreierSims(int n_) : n(n_) {}

    std::vector<int> identity() const {
        std::vector<int> e((size_t(n)));
        std::iota(e.begin(), e.end(), 0);
        return e;
    }

    // generators valid at level j are those placed at levels >= j: they all
    // fix the first j base points
    void rebuild_orbit(size_t j) {
        orbit[j].clear();
        orbit[j][base_pts[j]] = identity();
        std::vector<int> frontier{base_pts[j]};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier)
                for (size_t l = j; l < placed.size(); ++l)
                    for (const auto& g : placed[l]) {
                        int y = g[size_t(x)];
                        if (!orbit[j].count(y)) {
                            orbit[j][y] = perm_compose(g, orbit[j][x]);
                            next.push_back(y);
                        }
                    }
            frontier = std::move(next);
        }
    }

    std::pair<std::vector<int>, size_t> strip(std::vector<int> p) const {
        for (size_t j = 0; j < base_pts.size(); ++j) {
            int img = p[size_t(base_pts[j])];
            auto it = orbit[j].find(img);
            if (it == orbit[j].end()) return {std::move(p), j};
            p = perm_compose(perm_inverse(it->second), p);
        }
        return {std::move(p), base_pts.size()};
    }

    void place(std::vector<int> residue, size_t level) {
        if (level == base_pts.size()) {
            int moved = -1;
            for (int i = 0; i < n; ++i)
                if (residue[size_t(i)] != i) {
                    moved = i;
                    break;
                }
            base_pts.push_back(moved);
            placed.emplace_back();
            orbit.emplace_back();
        }
        placed[level].push_back(std::move(residue));
        for (size_t j = 0; j <= level; ++j) rebuild_orbit(j);
    }

    void add_generator(const std::vector<int>& gen) {
        auto [res, level] = strip(gen);
        if (perm_is_identity(res)) return;
        place(std::move(res), level);
        close();
    }

    // verify the Schreier condition everywhere, placing residues until clean
    void close() {
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t j = 0; j < base_pts.size() && !dirty; ++j)
                for (const auto& [pt, rep] : orbit[j]) {
                    if (dirty) break;
                    for (size_t l = j; l < placed.size() && !dirty; ++l)
                        for (const auto& g : placed[l]) {
                            auto it = orbit[j].find(g[size_t(pt)]);
                            auto schreier =
                                perm_compose(perm_inverse(it->second), perm_compose(g, rep));
                            auto [res, lv] = strip(schreier);
                            if (!perm_is_identity(res)) {
                                place(std::move(res), lv);
                                dirty = true;
                                break;
                            }
                        }
                }
        }
    }

    Int order() const {
        Int result = 1;
        for (const auto& o : orbit) result *= Int(o.size());
        return result;
    }
};

struct IsoSearch {
    const ColoredGraph& g;
    int n;
    std::vector<int> init_colors;  // dense ids of the input colors
    std::string first_cert, best_cert;
    std::vector<int> first_pos, best_pos;  // vertex -> canonical position
    std::vector<std::vector<int>> generators;

    explicit IsoSearch(const ColoredGraph& graph) : g(graph), n(int(graph.n)) {
        std::map<long, int> ids;
        for (long c : g.color) ids.emplace(c, 0);
        int next = 0;
        for (auto& [value, id] : ids) id = next++;
        init_colors.reserve(size_t(n));
        for (long c : g.color) init_colors.push_back(ids[c]);
    }

    std::string leaf_certificate(const std::vector<int>& pos) const {
        std::string cert = std::to_string(n);
        cert += ';';
        std::vector<int> vertex_at((size_t(n)));
        for (int v = 0; v < n; ++v) vertex_at[size_t(pos[size_t(v)])] = v;
        for (int p = 0; p < n; ++p) {
            cert += std::to_string(g.color[size_t(vertex_at[size_t(p)])]);
            cert += ',';
        }
        cert += ';';
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < n; ++v)
            for (int u : g.adj[size_t(v)])
                if (pos[size_t(v)] < pos[size_t(u)]) edges.emplace_back(pos[size_t(v)], pos[size_t(u)]);
        std::sort(edges.begin(), edges.end());
        for (auto [a, b] : edges) {
            cert += std::to_string(a);
            cert += '-';
            cert += std::to_string(b);
            cert += ',';
        }
        return cert;
    }

    void handle_leaf(const std::vector<int>& pos) {
        std::string cert = leaf_certificate(pos);
        if (first_cert.empty()) {
            first_cert = cert;
            first_pos = pos;
        } else if (cert == first_cert) {
            std::vector<int> vertex_at_first((size_t(n))), perm((size_t(n)));
            for (int v = 0; v < n; ++v) vertex_at_first[size_t(first_pos[size_t(v)])] = v;
            for (int v = 0; v < n; ++v) perm[size_t(vertex_at_first[size_t(pos[size_t(v)])])] = v;
            // defensive check: the claimed automorphism must preserve structure
            for (int v = 0; v < n; ++v) {
                if (g.color[size_t(v)] != g.color[size_t(perm[size_t(v)])])
                    throw invariant_violation("search produced a color-breaking map");
                for (int u : g.adj[size_t(v)]) {
                    const auto& row = g.adj[size_t(perm[size_t(v)])];
                    if (std::find(row.begin(), row.end(), perm[size_t(u)]) == row.end())
                        throw invariant_violation("search produced a non-automorphism");
                }
            }
            generators.push_back(perm);
        }
        if (best_cert.empty() || cert < best_cert) {
            best_cert = cert;
            best_pos = pos;
        }
    }

    // target cell: smallest non-singleton class, earliest class id on ties
    static int pick_cell(const std::vector<int>& colors, int n) {
        std::map<int, int> size;
        for (int v = 0; v < n; ++v) ++size[colors[size_t(v)]];
        int best = -1, best_size = -1;
        for (auto [c, s] : size)
            if (s > 1 && (best_size < 0 || s < best_size)) {
                best = c;
                best_size = s;
            }
        return best;
    }

    // orbits of the discovered generators that fix the individualized path
    // pointwise; pruning by these is sound at any depth
    Dsu path_orbits(const std::vector<int>& path) const {
        Dsu dsu(n);
        for (const auto& gen : generators) {
            bool fixes = true;
            for (int v : path)
                if (gen[size_t(v)] != v) {
                    fixes = false;
                    break;
                }
            if (fixes)
                for (int v = 0; v < n; ++v) dsu.unite(v, gen[size_t(v)]);
        }
        return dsu;
    }

    void search(std::vector<int> colors, std::vector<int>& path) {
        colors = refine_colors(g, std::move(colors));
        int cell = pick_cell(colors, n);
        if (cell < 0) {
            handle_leaf(colors);  // discrete: class id = canonical position
            return;
        }
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (colors[size_t(v)] == cell) members.push_back(v);
        std::set<int> tried;
        for (int v : members) {
            // orbits grow as generators are found, so recompute per member
            Dsu dsu = path_orbits(path);
            if (!tried.insert(dsu.find(v)).second) continue;
            std::vector<int> child = colors;
            // individualize: v moves into a fresh class ordered after all others
            child[size_t(v)] = n + 1;
            path.push_back(v);
            search(std::move(child), path);
            path.pop_back();
        }
    }

    void run() {
        if (n == 0) {
            best_cert = "0;;";
            return;
        }
        std::vector<int> path;
        search(init_colors, path);
    }
};

}  // namespace detail

inline std::string canonical_certificate(const ColoredGraph& g) {
    g.validate();
    detail::IsoSearch s(g);
    s.run();
    return s.best_cert;
}

inline std::vector<std::vector<int>> automorphism_generators(const ColoredGraph& g) {
    g.validate();
    detail::IsoSearch s(g);
    s.run();
    return s.generators;
}

inline Int automorphism_order(const ColoredGraph& g) {
    g.validate();
    if (g.n == 0) return 1;
    detail::IsoSearch s(g);
    s.run();
    detail::SchreierSims chain(int(g.n));
    for (const auto& gen : s.generators) chain.add_generator(gen);
    return chain.order();
}

}  // namespace hyperbolike
