#pragma once

// Generating functions derived from a closed automaton: the sphere and ball
// series by Krylov iteration plus recurrence fitting, the series counting
// copies of a fixed ball via the shift formula, pattern-count series by
// enumeration plus denominator-guided fitting, and growth-rate reports
// built on the dominant root of the fitted denominator.

#include "hyperbolike/ball.hpp"
#include "hyperbolike/numeric.hpp"
#include "hyperbolike/ratfun.hpp"
#include "hyperbolike/recurrence.hpp"
#include "hyperbolike/roots.hpp"
#include "hyperbolike/subgraph.hpp"
#include "hyperbolike/tournament.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hyperbolike {

struct SeriesPair {
    RatFun sphere;  // sum over n of (sphere size at radius n) t^n
    RatFun ball;    // sphere / (1 - t); counts ball sizes
};

// Fits the sphere-count sequence of a closed automaton to a rational
// function. The counts satisfy a linear recurrence no longer than the state
// count, so the staged search is guaranteed to terminate with a verified
// fit; the stages keep the expansion short when the true order is small.
// When an oracle is supplied the fit is compared against breadth-first
// sphere sizes up to verify_to (default: explore radius capped at 8).
inline SeriesPair sphere_and_ball_series(const TournamentAutomaton& a,
                                         const GraphOracle* verify_against = nullptr,
                                         long verify_to = -1) {
    if (a.closure != Closure::Closed)
        throw input_error("sphere series requires a closed automaton");
    long d = long(a.states.size());
    const long guard = 8;
    std::optional<RecurrenceFit> fit;
    for (long max_order = 4;; max_order *= 2) {
        if (max_order >= d) max_order = d;
        std::vector<Int> counts = predict_sphere_counts(a, 2 * max_order + guard);
        std::vector<Rat> seq;
        seq.reserve(counts.size());
        for (const auto& c : counts) seq.emplace_back(c);
        fit = rational_from_recurrence(seq, max_order, guard);
        if (fit || max_order == d) break;
    }
    if (!fit)
        throw invariant_violation(
            "sphere counts of a closed automaton admit no recurrence up to the state count");

    SeriesPair out;
    out.sphere = fit->fun;
    out.ball = out.sphere * RatFun(Poly::constant(1), Poly{Rat(1), Rat(-1)});

    if (verify_against) {
        long vt = verify_to >= 0 ? verify_to : std::min(a.explore_radius, 8L);
        std::vector<long> bfs = bfs_sphere_sizes(*verify_against, vt);
        std::vector<Rat> got = out.sphere.expand(size_t(vt));
        for (long n = 0; n <= vt; ++n)
            if (got[size_t(n)] != Rat(bfs[size_t(n)]))
                throw invariant_violation("fitted sphere series disagrees with breadth-first count at radius " +
                                          std::to_string(n));
    }
    return out;
}

// Series counting copies of the radius-n ball inside each larger ball. A
// copy is determined, up to automorphisms of the pattern, by the image of
// its center, and the center of a radius-n ball placed inside the radius-m
// ball can sit anywhere in the radius-(m-n) ball, so the series is the ball
// series delayed by n and scaled by the automorphism count. Coefficients
// are cross-checked against direct enumeration on every host small enough.
inline RatFun ball_subgraph_series_formula(const TournamentAutomaton& a, const Ball& b, long n,
                                           long check_host_cap = 200, long aut_cap = 20000) {
    if (n < 0 || n > b.radius) throw input_error("pattern radius outside the built ball");
    detail::HostGraph pattern_host = detail::host_from_ball(b, n);
    if (pattern_host.n > aut_cap)
        throw input_error("pattern ball too large for automorphism counting: " +
                          std::to_string(pattern_host.n) + " vertices");
    Int aut = detail::host_automorphism_order(pattern_host);
    RatFun ball_series = sphere_and_ball_series(a).ball;

    std::vector<Rat> shift(size_t(n) + 1, Rat(0));
    shift[size_t(n)] = Rat(aut);
    RatFun result = ball_series * RatFun(Poly(std::move(shift)), Poly::constant(1));

    FiniteGraph pattern = induced_ball_graph(b, n);
    std::vector<Rat> coeffs = result.expand(size_t(b.radius));
    for (long m = n; m <= b.radius; ++m) {
        detail::HostGraph host = detail::host_from_ball(b, m);
        if (host.n > check_host_cap) break;
        long brute = detail::count_in_host(pattern, host, std::nullopt);
        if (coeffs[size_t(m)] != Rat(brute))
            throw invariant_violation("ball pattern series disagrees with enumeration at radius " +
                                      std::to_string(m) + ": series " + to_string(coeffs[size_t(m)]) +
                                      ", count " + std::to_string(brute));
    }
    return result;
}

struct SubgraphSeries {
    std::vector<Int> counts;           // copies of the pattern in each sub-ball, radius 0..R
    std::optional<RecurrenceFit> fit;  // empty when no candidate denominator verifies
};

// Counts copies of a connected pattern in every ball up to radius R with a
// single depth-classified enumeration, then tries to fit the counts with
// denominators built from the sphere-series denominator times powers of
// (1 - t). An unfittable sequence is returned with an empty fit, never
// extrapolated.
inline SubgraphSeries subgraph_series(const FiniteGraph& y, const GraphOracle& o,
                                      const TournamentAutomaton& a, long R, long guard = 4) {
    detail::CompiledPattern p = detail::compile_pattern(y, y.base);
    long diameter = 0;
    for (long dist : p.anchor_dist) {
        if (dist < 0) throw input_error("pattern graph must be connected");
        diameter = std::max(diameter, dist);
    }
    // eccentricity of the base bounds the diameter within factor two; the
    // exact diameter needs all pairs
    for (long i = 1; i < p.n; ++i) {
        FiniteGraph rooted = y;
        rooted.base = p.key[size_t(i)];
        for (long dist : detail::compile_pattern(rooted, rooted.base).anchor_dist)
            diameter = std::max(diameter, dist);
    }
    if (R < diameter + 2)
        throw input_error("need radius at least diameter + 2 = " + std::to_string(diameter + 2));

    Ball b = build_ball(o, R);
    std::vector<long> by_depth = unanchored_copies_by_depth(y, b);
    SubgraphSeries out;
    out.counts.resize(size_t(R) + 1);
    Int running(0);
    for (long n = 0; n <= R; ++n) {
        running += Int(by_depth[size_t(n)]);
        out.counts[size_t(n)] = running;
    }

    Poly sphere_den = sphere_and_ball_series(a).sphere.den();
    Poly one_minus_t{Rat(1), Rat(-1)};
    std::vector<Poly> candidates;
    Poly d = sphere_den;
    for (int j = 0; j <= 6; ++j) {
        candidates.push_back(d);
        d = d * one_minus_t;
    }
    std::vector<Rat> seq;
    seq.reserve(out.counts.size());
    for (const auto& c : out.counts) seq.emplace_back(c);
    out.fit = fit_with_denominators(seq, candidates, guard);
    return out;
}

struct GrowthReport {
    RatFun sphere;
    RatFun ball;
    DominantRoot root;               // isolating interval and simplicity of the growth rate
    std::optional<Rat> lambda_exact; // set when the minimal factor is linear
    bool simple = false;
    bool degenerate = false;         // growth rate at most 1, or a finite graph
    Rat ratio_lo, ratio_hi;          // bounds of (ball size) / lambda^n, recent window
    Rat early_lo, early_hi;          //   ... over the preceding window
    double growth_degree = 0.0;      // drift exponent between windows; near 0: pure exponential
    long window_lo = 0, window_mid = 0, window_hi = 0;
    std::string note;
};

// Extracts the growth rate from the sphere-series denominator and brackets
// the normalized ball sizes over two dyadic windows. A pure exponential
// keeps both windows at the same height; a polynomial factor of degree k
// drifts them apart by the k-th power of the window-center ratio, so the
// fitted drift exponent doubles as a check that no such factor is present.
inline GrowthReport growth_rate_check(const RatFun& sphere, const std::vector<Int>& ball_counts) {
    if (ball_counts.size() < 3) throw input_error("need at least three ball counts");
    GrowthReport rep;
    rep.sphere = sphere;
    rep.ball = sphere * RatFun(Poly::constant(1), Poly{Rat(1), Rat(-1)});

    Rat lo, hi;
    if (sphere.den().degree() < 1) {
        rep.degenerate = true;
        rep.simple = true;
        rep.lambda_exact = Rat(1);
        rep.note = "sphere series is a polynomial; the graph is finite; ";
        lo = hi = Rat(1);
    } else {
        rep.root = dominant_real_root(sphere.den());
        rep.simple = rep.root.simple;
        if (!rep.simple) rep.note += "dominant root is not simple; ";
        if (rep.root.larger_modulus_count > 0)
            rep.note += "complex roots of larger modulus detected; ";
        if (rep.root.minimal_factor.degree() == 1) {
            rep.lambda_exact = -rep.root.minimal_factor.coeff(0) / rep.root.minimal_factor.coeff(1);
            lo = hi = *rep.lambda_exact;
        } else {
            lo = rep.root.lo;
            hi = rep.root.hi;
        }
        if (hi <= 1) {
            rep.degenerate = true;
            rep.note += "growth rate at most 1; ";
        }
        if (lo <= 0) throw invariant_violation("dominant root of a counting series is not positive");
    }

    long last = long(ball_counts.size()) - 1;
    rep.window_hi = last;
    rep.window_mid = std::max(1L, last / 2);
    rep.window_lo = std::max(1L, last / 4);
    bool first_early = true, first_late = true;
    for (long n = rep.window_lo; n <= last; ++n) {
        Rat count(ball_counts[size_t(n)]);
        Rat bound_lo = count / rat_pow(hi, n);
        Rat bound_hi = count / rat_pow(lo, n);
        if (n <= rep.window_mid) {
            if (first_early || bound_lo < rep.early_lo) rep.early_lo = bound_lo;
            if (first_early || bound_hi > rep.early_hi) rep.early_hi = bound_hi;
            first_early = false;
        }
        if (n >= rep.window_mid) {
            if (first_late || bound_lo < rep.ratio_lo) rep.ratio_lo = bound_lo;
            if (first_late || bound_hi > rep.ratio_hi) rep.ratio_hi = bound_hi;
            first_late = false;
        }
    }
    double mid_early = std::sqrt(to_double(rep.early_lo) * to_double(rep.early_hi));
    double mid_late = std::sqrt(to_double(rep.ratio_lo) * to_double(rep.ratio_hi));
    double center_early = (double(rep.window_lo) + double(rep.window_mid)) / 2;
    double center_late = (double(rep.window_mid) + double(rep.window_hi)) / 2;
    if (mid_early > 0 && mid_late > 0 && center_late > center_early)
        rep.growth_degree = std::log(mid_late / mid_early) / std::log(center_late / center_early);
    if (std::abs(rep.growth_degree) >= 0.5)
        rep.note += "window drift suggests a polynomial factor of degree about " +
                    std::to_string(rep.growth_degree) + "; ";
    return rep;
}

struct SaitoBounds {
    bool ok = false;
    Rat u, v;             // exact min and max of consecutive ratios a_{n-1}/a_n
    long zero_index = -1; // first zero coefficient when not ok
};

// Consecutive-ratio bounds of a coefficient sequence. The bounds certify
// the window only: later coefficients may escape them.
inline SaitoBounds saito_hypothesis_check(const std::vector<Rat>& coeffs) {
    if (coeffs.size() < 2) throw input_error("need at least two coefficients");
    SaitoBounds out;
    for (size_t n = 0; n < coeffs.size(); ++n)
        if (coeffs[n] == 0) {
            out.zero_index = long(n);
            return out;
        }
    out.ok = true;
    for (size_t n = 1; n < coeffs.size(); ++n) {
        Rat r = coeffs[n - 1] / coeffs[n];
        if (n == 1 || r < out.u) out.u = r;
        if (n == 1 || r > out.v) out.v = r;
    }
    return out;
}

// text form "num: c0 c1 ... / den: d0 d1 ..." with exact rationals
inline std::string ratfun_text(const RatFun& f) {
    std::string s = "num:";
    for (long i = 0; i <= std::max(0L, f.num().degree()); ++i)
        s += " " + to_string(f.num().coeff(size_t(i)));
    s += " / den:";
    for (long i = 0; i <= std::max(0L, f.den().degree()); ++i)
        s += " " + to_string(f.den().coeff(size_t(i)));
    return s;
}

inline RatFun ratfun_from_text(const std::string& line) {
    std::istringstream in(line);
    std::string tok;
    if (!(in >> tok) || tok != "num:") throw input_error("rational function text must start with 'num:'");
    std::vector<Rat> num, den;
    bool in_den = false;
    bool saw_den = false;
    while (in >> tok) {
        if (tok == "/") {
            if (in_den) throw input_error("rational function text has two separators");
            in_den = true;
            if (!(in >> tok) || tok != "den:")
                throw input_error("rational function separator must be followed by 'den:'");
            saw_den = true;
            continue;
        }
        (in_den ? den : num).push_back(rat_from_string(tok));
    }
    if (!saw_den || den.empty()) throw input_error("rational function text lacks a denominator");
    return RatFun(Poly(std::move(num)), Poly(std::move(den)));
}

}  // namespace hyperbolike
