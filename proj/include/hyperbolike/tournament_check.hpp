#pragma once

// Independent validation of a tournament automaton against ground truth.
// The sweep revisits every vertex of a ball, rebuilds its score function
// from exact base distances, and confirms that the automaton's states,
// transitions, weights, and parent counts reproduce what the graph itself
// says. Nothing here reuses results of the recursion it checks other than
// through the finished automaton.

#include "hyperbolike/ball.hpp"
#include "hyperbolike/numeric.hpp"
#include "hyperbolike/oracle.hpp"
#include "hyperbolike/tournament.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hyperbolike {

struct SweepReport {
    long radius = 0;       // levels swept: all vertices with level <= radius
    long vertices = 0;     // instances rebuilt and checked
    long transitions = 0;  // child transitions replayed
};

namespace detail {

template <class Engine>
SweepReport sweep_with_engine(const GraphOracle& o, const TournamentAutomaton& A, long V,
                              Engine& eng) {
    SweepReport rep;
    rep.radius = V;

    Ball ball = build_ball(o, V + 1);
    std::map<std::string, long> beyond;  // exact levels outside the ball
    auto global_level = [&](const std::string& z) -> long {
        long idx = ball.index_of(z);
        if (idx >= 0) return ball.level[size_t(idx)];
        auto it = beyond.find(z);
        if (it != beyond.end()) return it->second;
        long d = o.distance_capped(o.base(), z, V + 1 + A.radius);
        beyond.emplace(z, d);
        return d;
    };

    std::map<std::string, int> cert_id;
    for (size_t i = 0; i < A.states.size(); ++i) cert_id.emplace(A.states[i].cert, int(i));

    // out-edge profile per state: (target, weight) with multiplicities
    std::vector<std::map<std::pair<int, Rat>, long>> profile(A.states.size());
    for (const auto& e : A.edges) profile[size_t(e.from)][{e.to, e.weight}] += e.multiplicity;

    std::vector<Rat> inflow(size_t(ball.size()), Rat(0));
    for (int idx = 0; idx < ball.size(); ++idx) {
        long lv = ball.level[size_t(idx)];
        if (lv > V) continue;
        const std::string& y = ball.keys[size_t(idx)];
        auto inst = eng.intrinsic_instance(y, lv, global_level);

        std::string cert = eng.cert(inst);
        auto cit = cert_id.find(cert);
        if (cit == cert_id.end())
            throw TypeCollision("vertex " + y + " at level " + std::to_string(lv) +
                                    " has a type the automaton never discovered",
                                y, A.states[0].rep);
        int sid = cit->second;
        if (lv == 0 && sid != 0)
            throw TypeCollision("base vertex does not carry the base type", y, A.states[0].rep);
        ++rep.vertices;

        std::map<std::pair<int, Rat>, long> seen;
        auto kids = eng.expand(inst);
        if (long(kids.size()) != long(ball.children[size_t(idx)].size()))
            throw invariant_violation("child count mismatch at " + y + ": expansion found " +
                                      std::to_string(kids.size()) + ", ball has " +
                                      std::to_string(ball.children[size_t(idx)].size()));
        for (auto& [kid, weight] : kids) {
            const std::string& n = eng.key(kid);
            long kidx = ball.index_of(n);
            if (kidx < 0)
                throw invariant_violation("child " + n + " of " + y + " escapes the sweep ball");

            // the recursed scores must equal the intrinsic ones
            auto truth = eng.intrinsic_instance(n, lv + 1, global_level);
            if (!(kid.score == truth.score))
                throw TypeCollision("transition from " + y + " to " + n +
                                        " disagrees with exact distances",
                                    y, n);

            // edge weight is the reciprocal of the child's parent count
            long pc = long(ball.parents[size_t(kidx)].size());
            if (weight != Rat(1) / pc)
                throw invariant_violation("weight into " + n + " is " + to_string(weight) +
                                          ", expected 1/" + std::to_string(pc));
            inflow[size_t(kidx)] += weight;

            auto tit = cert_id.find(eng.cert(kid));
            if (tit == cert_id.end())
                throw TypeCollision("child " + n + " has a type the automaton never discovered",
                                    y, n);
            ++seen[{tit->second, weight}];
            ++rep.transitions;
        }
        if (seen != profile[size_t(sid)])
            throw TypeCollision("out-edges at " + y + " differ from its state's record", y,
                                A.states[size_t(sid)].rep);
    }

    // every vertex below the frontier collects total path weight exactly 1
    for (int idx = 0; idx < ball.size(); ++idx) {
        long lv = ball.level[size_t(idx)];
        if (lv < 1 || lv > V + 1) continue;
        if (inflow[size_t(idx)] != 1)
            throw invariant_violation("total weight into " + ball.keys[size_t(idx)] + " is " +
                                      to_string(inflow[size_t(idx)]) + ", expected 1");
    }
    return rep;
}

}  // namespace detail

// Replays the automaton against exact distances on B_V(x); throws on the
// first violation. V must stay below explore_radius so every type met in
// the sweep was discovered during construction.
inline SweepReport validate_automaton(const GraphOracle& o, const TournamentAutomaton& A,
                                      long V) {
    if (V < 0) throw input_error("sweep radius must be nonnegative");
    if (V > A.explore_radius - 1)
        throw input_error("sweep radius must stay below explore_radius");
    AutomatonParams p{A.delta, A.explore_radius};
    if (o.has_translations()) {
        RelEngine eng(o, p);
        return detail::sweep_with_engine(o, A, V, eng);
    }
    DirectEngine eng(o, p);
    return detail::sweep_with_engine(o, A, V, eng);
}

// Certificates of score-and-cone decorated balls of depth max(r, 3): all
// vertices of one type must produce the same certificate, so same-type
// cones are isomorphic under the matching induced by canonicalization.
// Returns the number of vertices checked.
inline long validate_cone_types(const GraphOracle& o, const TournamentAutomaton& A, long V) {
    if (V < 0) throw input_error("sweep radius must be nonnegative");
    long m = std::max(A.radius, 3L);

    Ball ball = build_ball(o, V);
    std::map<std::string, long> beyond;
    auto global_level = [&](const std::string& z) -> long {
        long idx = ball.index_of(z);
        if (idx >= 0) return ball.level[size_t(idx)];
        auto it = beyond.find(z);
        if (it != beyond.end()) return it->second;
        long d = o.distance_capped(o.base(), z, V + m);
        beyond.emplace(z, d);
        return d;
    };

    std::map<std::string, int> cert_id;
    for (size_t i = 0; i < A.states.size(); ++i) cert_id.emplace(A.states[i].cert, int(i));

    std::vector<std::string> deep_cert(A.states.size());
    std::vector<std::string> first_rep(A.states.size());
    long checked = 0;
    for (int idx = 0; idx < ball.size(); ++idx) {
        long lv = ball.level[size_t(idx)];
        const std::string& y = ball.keys[size_t(idx)];

        auto local = detail::ball_levels(o, y, m);
        std::map<std::string, long> score_dec;
        std::map<std::string, long> dec;
        for (const auto& [z, dz] : local) {
            long diff = global_level(z) - lv;
            if (dz <= A.radius) score_dec[z] = diff;
            // score where visible, a fixed blank outside, one bit for cone
            // membership: z lies on a geodesic from the base through y
            long vis = dz <= A.radius ? diff : 999;
            dec[z] = 2 * vis + (diff == dz ? 1 : 0);
        }

        auto cit = cert_id.find(o.canonical_decorated_ball(y, A.radius, score_dec));
        if (cit == cert_id.end())
            throw TypeCollision("vertex " + y + " has a type the automaton never discovered", y,
                                A.states[0].rep);
        int sid = cit->second;

        std::string enriched = o.canonical_decorated_ball(y, m, dec);
        if (deep_cert[size_t(sid)].empty()) {
            deep_cert[size_t(sid)] = enriched;
            first_rep[size_t(sid)] = y;
        } else if (deep_cert[size_t(sid)] != enriched) {
            throw TypeCollision("same-type vertices with non-isomorphic decorated cones", y,
                                first_rep[size_t(sid)]);
        }
        ++checked;
    }
    return checked;
}

struct AutoBuild {
    TournamentAutomaton automaton;
    long delta_used = 0;
    std::vector<std::string> attempts;  // one line per delta tried
};

// Builds with the smallest workable delta: the automaton must close, its
// predicted spheres must match a breadth-first count on a short prefix,
// and a transition replay against exact distances must come back clean.
// Sphere counts alone are too weak: a lookback that is one short can fold
// a long relator into scores that still sum to the right sphere sizes.
// Escalates delta until the cap, then reports every attempt.
//
// check_depth bounds the replay sweep; the default goes deeper on
// translation backends, where the relative engine keeps each replayed
// vertex cheap, and stays shallow where every pair distance is a fresh
// oracle call.
inline AutoBuild build_automaton_auto(const GraphOracle& o, long explore_radius,
                                      long delta = -1, long delta_cap = 3,
                                      long check_depth = -1) {
    AutoBuild res;
    long lo = delta >= 0 ? delta : 0;
    long hi = delta >= 0 ? delta : delta_cap;
    std::vector<long> reference;
    long reference_depth = -1;
    for (long d = lo; d <= hi; ++d) {
        AutomatonParams p{d, explore_radius};
        std::string tag = "delta " + std::to_string(d) + ": ";
        if (explore_radius < p.score_radius() + 2) {
            res.attempts.push_back(tag + "explore_radius below r + 2");
            continue;
        }
        try {
            TournamentAutomaton A = build_automaton(o, p);
            if (A.closure != Closure::Closed) {
                res.attempts.push_back(tag + "truncated at " + std::to_string(A.states.size()) +
                                       " states");
                continue;
            }
            long v = std::min(explore_radius - p.score_radius() - 1, 8L);
            if (v > reference_depth) {
                reference = bfs_sphere_sizes(o, v);
                reference_depth = v;
            }
            auto predicted = predict_sphere_counts(A, v);
            bool match = true;
            for (long n = 0; n <= v && match; ++n)
                if (predicted[size_t(n)] != reference[size_t(n)]) match = false;
            if (!match) {
                res.attempts.push_back(tag + "closed but spheres diverge from search");
                continue;
            }
            long w = check_depth >= 0
                         ? std::min(check_depth, explore_radius - 1)
                         : std::min(explore_radius - p.score_radius() - 1,
                                    o.has_translations() ? 6L : 4L);
            try {
                validate_automaton(o, A, w);
            } catch (const invariant_violation& e) {
                res.attempts.push_back(tag + "closed, spheres match, but the replay to level " +
                                       std::to_string(w) + " fails: " + e.what());
                continue;
            }
            res.attempts.push_back(tag + "closed, " + std::to_string(A.states.size()) +
                                   " states, spheres match to level " + std::to_string(v) +
                                   ", replay clean to level " + std::to_string(w));
            res.automaton = std::move(A);
            res.delta_used = d;
            return res;
        } catch (const invariant_violation& e) {
            res.attempts.push_back(tag + e.what());
        }
    }
    std::string msg = o.name() + ": no delta in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "] yields a replay-exact closed automaton";
    for (const auto& a : res.attempts) msg += "\n  " + a;
    throw invariant_violation(msg);
}

}  // namespace hyperbolike
