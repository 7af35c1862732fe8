#pragma once

// shared builders for small test graphs

#include "hyperbolike/explicit_graph.hpp"

#include <string>

namespace testutil {

inline hyperbolike::FiniteGraph cycle_graph(int n) {
    hyperbolike::FiniteGraph g;
    g.base = "v0";
    g.add_vertex(g.base);
    for (int i = 0; i < n; ++i)
        g.add_edge("v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
    return g;
}

inline hyperbolike::FiniteGraph path_graph(int n) {
    hyperbolike::FiniteGraph g;
    g.base = "p0";
    g.add_vertex(g.base);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge("p" + std::to_string(i), "p" + std::to_string(i + 1));
    return g;
}

inline hyperbolike::FiniteGraph star_graph(int leaves) {
    hyperbolike::FiniteGraph g;
    g.base = "c";
    g.add_vertex(g.base);
    for (int i = 0; i < leaves; ++i) g.add_edge("c", "l" + std::to_string(i));
    return g;
}

// outer 5-cycle, inner pentagram, spokes
inline hyperbolike::FiniteGraph petersen_graph() {
    hyperbolike::FiniteGraph g;
    g.base = "o0";
    g.add_vertex(g.base);
    for (int i = 0; i < 5; ++i) {
        g.add_edge("o" + std::to_string(i), "o" + std::to_string((i + 1) % 5));
        g.add_edge("i" + std::to_string(i), "i" + std::to_string((i + 2) % 5));
        g.add_edge("o" + std::to_string(i), "i" + std::to_string(i));
    }
    return g;
}

// deterministic scrambled connected graph on n vertices
inline hyperbolike::FiniteGraph scrambled_graph(int n, unsigned seed) {
    hyperbolike::FiniteGraph g;
    g.base = "s0";
    g.add_vertex(g.base);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge("s" + std::to_string(i), "s" + std::to_string(i + 1));
    unsigned long long state = seed * 2862933555777941757ULL + 3037000493ULL;
    for (int i = 0; i < n; ++i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        int a = int((state >> 33) % (unsigned long long)(n));
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        int b = int((state >> 33) % (unsigned long long)(n));
        if (a != b) g.add_edge("s" + std::to_string(a), "s" + std::to_string(b));
    }
    return g;
}

}  // namespace testutil
