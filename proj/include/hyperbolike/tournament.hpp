#pragma once

// Weighted cone-type automaton over a vertex-transitive graph.
//
// Each vertex y carries a local score function F on the radius-r ball
// around it, F(z) = d(x,z) - d(x,y) for the fixed base vertex x.  States
// are canonical certificates of these decorated balls; the transition to a
// child y' recovers F' from F alone through a capped local minimum, so the
// whole automaton is built from one representative per state.  Edges into a
// child carry weight 1/(parent count), which makes the total path weight
// into every vertex exactly 1 and the weighted path count per length equal
// to the sphere size.

#include "hyperbolike/ball.hpp"
#include "hyperbolike/numeric.hpp"
#include "hyperbolike/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hyperbolike {

struct AutomatonParams {
    long delta = 0;          // hyperbolicity constant of the graph
    long explore_radius = 8; // levels past this leave undiscovered types unexpanded

    // score functions live on B_r(y); r covers both the transition lookback
    // and the radius-2 parent scan
    long score_radius() const { return std::max(2 * delta + 1, 2L); }
    // transition minimum ranges over B_T(y)
    long lookback() const { return 2 * delta + 1; }
};

enum class Closure { Closed, Truncated };

struct AutState {
    std::string cert;  // canonical certificate of the score-decorated ball
    long level = 0;    // discovery level of the representative
    bool expanded = false;
    std::string rep;   // representative vertex key
};

struct AutEdge {
    int from = 0;
    int to = 0;
    Rat weight;          // 1 / parent count of the child
    long multiplicity = 1;  // parallel transitions with identical weight
};

struct TournamentAutomaton {
    long delta = 0;
    long radius = 2;  // score ball radius r
    long explore_radius = 8;
    std::string oracle_name;
    Closure closure = Closure::Truncated;
    std::vector<AutState> states;  // state 0 is the base vertex type
    std::vector<AutEdge> edges;    // sorted by (from, to, weight)
    std::vector<std::vector<Rat>> matrix;  // matrix[i][j] = total weight i -> j

    int state_of_cert(const std::string& cert) const {
        for (size_t i = 0; i < states.size(); ++i)
            if (states[i].cert == cert) return int(i);
        return -1;
    }
};

// same vertex reached along two geodesics with inconsistent type data
struct TypeCollision : invariant_violation {
    TypeCollision(const std::string& msg, std::string vertex_a, std::string vertex_b)
        : invariant_violation(msg), a(std::move(vertex_a)), b(std::move(vertex_b)) {}
    std::string a, b;
};

namespace detail {

// Shared expansion loop.  An engine supplies the base instance, the sorted
// child instances with their edge weights, and the canonical certificate of
// an instance.  Discovery order is breadth first, so a state's recorded
// level is its automaton distance from state 0.
template <class Engine>
TournamentAutomaton build_with_engine(const GraphOracle& o, const AutomatonParams& p,
                                      Engine& eng) {
    if (p.delta < 0) throw input_error("delta must be nonnegative");
    if (p.explore_radius < p.score_radius() + 2)
        throw input_error("explore_radius must be at least r + 2 = " +
                          std::to_string(p.score_radius() + 2));

    TournamentAutomaton A;
    A.delta = p.delta;
    A.radius = p.score_radius();
    A.explore_radius = p.explore_radius;
    A.oracle_name = o.name();

    std::map<std::string, int> cert_id;
    std::vector<typename Engine::Inst> reps;
    {
        auto base = eng.base_instance();
        A.states.push_back({eng.cert(base), 0, false, eng.key(base)});
        cert_id.emplace(A.states[0].cert, 0);
        reps.push_back(std::move(base));
    }

    std::map<std::tuple<int, int, Rat>, long> edge_mult;
    for (size_t cur = 0; cur < reps.size(); ++cur) {
        if (A.states[cur].level >= p.explore_radius) continue;  // truncation horizon
        for (auto& [child, weight] : eng.expand(reps[cur])) {
            std::string cert = eng.cert(child);
            auto [it, fresh] = cert_id.try_emplace(cert, int(A.states.size()));
            if (fresh) {
                A.states.push_back({cert, A.states[cur].level + 1, false, eng.key(child)});
                reps.push_back(std::move(child));
            }
            ++edge_mult[{int(cur), it->second, weight}];
        }
        A.states[size_t(cur)].expanded = true;
    }

    A.closure = Closure::Closed;
    for (const auto& s : A.states)
        if (!s.expanded) A.closure = Closure::Truncated;

    size_t n = A.states.size();
    A.matrix.assign(n, std::vector<Rat>(n, Rat(0)));
    for (const auto& [key, mult] : edge_mult) {
        auto [from, to, weight] = key;
        A.edges.push_back({from, to, weight, mult});
        A.matrix[size_t(from)][size_t(to)] += weight * mult;
    }
    return A;
}

}  // namespace detail

// Engine over raw vertex keys; needs only neighbor lists and capped
// distances, so it works on every backend.
class DirectEngine {
  public:
    struct Inst {
        std::string y;
        long level = 0;
        std::map<std::string, long> score;  // F over the keys of B_r(y)
        std::map<std::string, long> dist;   // d(y, z) for the same keys
    };

    DirectEngine(const GraphOracle& o, const AutomatonParams& p)
        : o_(o), r_(p.score_radius()), lookback_(p.lookback()) {
        level_memo_[o_.base()] = 0;
    }

    std::string key(const Inst& a) const { return a.y; }

    Inst base_instance() {
        Inst b;
        b.y = o_.base();
        b.dist = detail::ball_levels(o_, b.y, r_);
        b.score = b.dist;  // F at the base vertex is the level function
        return b;
    }

    std::string cert(const Inst& a) const {
        return o_.canonical_decorated_ball(a.y, r_, a.score);
    }

    std::vector<std::pair<Inst, Rat>> expand(const Inst& a) {
        std::vector<std::pair<Inst, Rat>> out;
        for (const std::string& n : o_.neighbors(a.y)) {
            if (vertex_level(n, a.level) != a.level + 1) continue;
            long pc = parent_count(a, n);
            if (pc <= 0)
                throw invariant_violation("child " + n + " of " + a.y + " has no parent");
            Inst c;
            c.y = n;
            c.level = a.level + 1;
            c.dist = detail::ball_levels(o_, n, r_);
            for (const auto& [z2, d2] : c.dist) c.score[z2] = transition_value(a, z2);
            if (c.score.at(n) != 0)
                throw invariant_violation("score at the child itself must be 0 at " + n);
            out.emplace_back(std::move(c), Rat(1) / pc);
        }
        return out;
    }

    // instance rebuilt from ground-truth levels instead of the recursion;
    // global_level must return the exact distance from the base vertex
    template <class LevelFn>
    Inst intrinsic_instance(const std::string& y, long level, LevelFn&& global_level) {
        Inst a;
        a.y = y;
        a.level = level;
        a.dist = detail::ball_levels(o_, y, r_);
        for (const auto& [z, d] : a.dist) a.score[z] = global_level(z) - level;
        return a;
    }

    // exact level of a neighbor of a level-hint vertex; memoized globally
    long vertex_level(const std::string& v, long hint) {
        auto it = level_memo_.find(v);
        if (it != level_memo_.end()) return it->second;
        long d = o_.distance_capped(o_.base(), v, hint + 1);
        level_memo_.emplace(v, d);
        return d;
    }

    // parents of the child n are the score-0 vertices of B_2(y) adjacent
    // to n
    long parent_count(const Inst& a, const std::string& n) {
        long pc = 0;
        for (const auto& [z, f] : a.score)
            if (f == 0 && a.dist.at(z) <= 2 && o_.distance_capped(z, n, 1) == 1) ++pc;
        return pc;
    }

    // F'(z') = min over z in B_T(y) of F(z) + d(z, z') - 1; distances are
    // capped at 2r + 1, which keeps every candidate that can attain the
    // minimum, because the z = y term is at most r while a capped term is
    // at least r + 1
    long transition_value(const Inst& a, const std::string& z2) {
        long best = 0;
        bool first = true;
        for (const auto& [z, f] : a.score) {
            if (a.dist.at(z) > lookback_) continue;
            long d = o_.distance_capped(z, z2, 2 * r_ + 1);
            if (first || f + d - 1 < best) best = f + d - 1, first = false;
        }
        return best;
    }

  private:
    const GraphOracle& o_;
    long r_, lookback_;
    std::map<std::string, long> level_memo_;
};

// Engine for backends with a transitive translation action.  All geometry
// is precomputed once in coordinates relative to the current vertex: score
// vectors are indexed by the ball B_r(1), child balls embed into B_{r+1}(1)
// through one index map per generator, and the distance table between the
// two makes a transition pure integer arithmetic.
class RelEngine {
  public:
    struct Inst {
        std::string y;
        long level = 0;
        std::vector<long> score;  // indexed like inner_
    };

    RelEngine(const GraphOracle& o, const AutomatonParams& p)
        : o_(o), r_(p.score_radius()), lookback_(p.lookback()) {
        if (!o.has_translations())
            throw input_error(o.name() + " backend has no translation action");
        for (const auto& [k, lv] : detail::ball_levels(o_, o_.base(), r_)) {
            inner_.push_back(k);
            inner_level_.push_back(lv);
        }
        {
            int j = 0;
            for (const auto& [k, lv] : detail::ball_levels(o_, o_.base(), r_ + 1)) {
                outer_.push_back(k);
                outer_index_.emplace(k, j++);
            }
        }
        self_ = int(std::lower_bound(inner_.begin(), inner_.end(), o_.base()) - inner_.begin());

        long cap = 2 * r_ + 1;
        dist_.assign(inner_.size(), std::vector<int8_t>(outer_.size(), 0));
        for (size_t i = 0; i < inner_.size(); ++i)
            for (size_t j = 0; j < outer_.size(); ++j)
                dist_[i][j] = int8_t(o_.distance_capped(inner_[i], outer_[j], cap));

        gens_ = o_.neighbors(o_.base());
        shift_.assign(gens_.size(), std::vector<int>(inner_.size(), 0));
        for (size_t g = 0; g < gens_.size(); ++g)
            for (size_t i = 0; i < inner_.size(); ++i)
                shift_[g][i] = outer_index_.at(o_.translate(gens_[g], inner_[i]));
    }

    std::string key(const Inst& a) const { return a.y; }

    Inst base_instance() {
        Inst b;
        b.y = o_.base();
        b.score = inner_level_;
        return b;
    }

    std::string cert(const Inst& a) const {
        std::map<std::string, long> dec;
        for (size_t i = 0; i < inner_.size(); ++i)
            dec[o_.translate(a.y, inner_[i])] = a.score[i];
        return o_.canonical_decorated_ball(a.y, r_, dec);
    }

    template <class LevelFn>
    Inst intrinsic_instance(const std::string& y, long level, LevelFn&& global_level) {
        Inst a;
        a.y = y;
        a.level = level;
        a.score.resize(inner_.size());
        for (size_t i = 0; i < inner_.size(); ++i)
            a.score[i] = global_level(o_.translate(y, inner_[i])) - level;
        return a;
    }

    std::vector<std::pair<Inst, Rat>> expand(const Inst& a) {
        // children sorted by vertex key, matching DirectEngine's order
        std::vector<std::pair<std::string, size_t>> kids;
        for (size_t g = 0; g < gens_.size(); ++g) {
            std::string n = o_.translate(a.y, gens_[g]);
            if (o_.distance_capped(o_.base(), n, a.level) == a.level + 1) kids.emplace_back(n, g);
        }
        std::sort(kids.begin(), kids.end());

        std::vector<std::pair<Inst, Rat>> out;
        for (auto& [n, g] : kids) {
            long pc = 0;
            int child_col = shift_[g][size_t(self_)];
            for (size_t t = 0; t < inner_.size(); ++t)
                if (inner_level_[t] <= 2 && a.score[t] == 0 && dist_[t][size_t(child_col)] == 1)
                    ++pc;
            if (pc <= 0)
                throw invariant_violation("child " + n + " of " + a.y + " has no parent");
            Inst c;
            c.y = n;
            c.level = a.level + 1;
            c.score.assign(inner_.size(), 0);
            for (size_t i = 0; i < inner_.size(); ++i) {
                long best = 0;
                bool first = true;
                for (size_t t = 0; t < inner_.size(); ++t) {
                    if (inner_level_[t] > lookback_) continue;
                    long v = a.score[t] + dist_[t][size_t(shift_[g][i])] - 1;
                    if (first || v < best) best = v, first = false;
                }
                c.score[i] = best;
            }
            if (c.score[size_t(self_)] != 0)
                throw invariant_violation("score at the child itself must be 0 at " + n);
            out.emplace_back(std::move(c), Rat(1) / pc);
        }
        return out;
    }

  private:
    const GraphOracle& o_;
    long r_, lookback_;
    std::vector<std::string> inner_;       // B_r(1), sorted
    std::vector<long> inner_level_;
    std::vector<std::string> outer_;       // B_{r+1}(1), sorted
    std::map<std::string, int> outer_index_;
    std::vector<std::vector<int8_t>> dist_;  // d(inner_i, outer_j), capped at 2r+1
    std::vector<std::string> gens_;          // neighbors of the base
    std::vector<std::vector<int>> shift_;    // shift_[g][i] = index of gens_[g] * inner_[i]
    int self_ = 0;                           // inner_ index of the base key
};

inline TournamentAutomaton build_automaton(const GraphOracle& o, const AutomatonParams& p) {
    if (o.has_translations()) {
        RelEngine eng(o, p);
        return detail::build_with_engine(o, p, eng);
    }
    DirectEngine eng(o, p);
    return detail::build_with_engine(o, p, eng);
}

// weighted path counts by length: entry n is the total weight of length-n
// automaton paths from state 0, which equals the size of sphere n
inline std::vector<Int> predict_sphere_counts(const TournamentAutomaton& A, long n_max) {
    if (n_max < 0) throw input_error("sphere count horizon must be nonnegative");
    if (A.closure == Closure::Truncated && n_max > A.explore_radius)
        throw input_error("truncated automaton only predicts spheres up to level " +
                          std::to_string(A.explore_radius));
    size_t n = A.states.size();
    std::vector<Rat> v(n, Rat(0));
    v[0] = 1;
    std::vector<Int> out;
    for (long step = 0;; ++step) {
        Rat total(0);
        for (const Rat& x : v) total += x;
        if (!is_integer(total) || total < 0)
            throw invariant_violation("weighted path count at length " + std::to_string(step) +
                                      " is not a nonnegative integer: " + to_string(total));
        out.push_back(rat_num(total));
        if (step == n_max) break;
        std::vector<Rat> next(n, Rat(0));
        for (size_t i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            for (size_t j = 0; j < n; ++j)
                if (A.matrix[i][j] != 0) next[j] += v[i] * A.matrix[i][j];
        }
        v = std::move(next);
    }
    return out;
}

inline std::string automaton_dot(const TournamentAutomaton& A) {
    std::ostringstream out;
    out << "digraph tournament {\n";
    out << "  rankdir=LR;\n";
    for (size_t i = 0; i < A.states.size(); ++i) {
        out << "  s" << i << " [label=\"" << i << " (level " << A.states[i].level << ")\"";
        if (i == 0) out << ", shape=doublecircle";
        if (!A.states[i].expanded) out << ", style=dashed";
        out << "];\n";
    }
    for (const auto& e : A.edges) {
        out << "  s" << e.from << " -> s" << e.to << " [label=\"" << to_string(e.weight);
        if (e.multiplicity > 1) out << " x" << e.multiplicity;
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string dump_automaton(const TournamentAutomaton& A) {
    std::ostringstream out;
    out << "format aut v1\n";
    out << "oracle " << A.oracle_name << "\n";
    out << "delta " << A.delta << "\n";
    out << "radius " << A.radius << "\n";
    out << "explore_radius " << A.explore_radius << "\n";
    out << "closure " << (A.closure == Closure::Closed ? "closed" : "truncated") << "\n";
    out << "states " << A.states.size() << "\n";
    for (size_t i = 0; i < A.states.size(); ++i)
        out << "state " << i << " " << A.states[i].level << " " << (A.states[i].expanded ? 1 : 0)
            << " " << A.states[i].cert << "\n";
    out << "edges " << A.edges.size() << "\n";
    for (const auto& e : A.edges)
        out << "edge " << e.from << " " << e.to << " " << to_string(e.weight) << " "
            << e.multiplicity << "\n";
    return out.str();
}

inline TournamentAutomaton load_automaton(std::istream& in, const std::string& name = "<aut>") {
    TournamentAutomaton A;
    std::string line;
    long lineno = 0;
    auto fail = [&](const std::string& msg) -> input_error {
        return input_error(name + ":" + std::to_string(lineno) + ": " + msg);
    };
    auto next_line = [&](std::istringstream& ls) {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            ls.clear();
            ls.str(line);
            return true;
        }
        return false;
    };
    std::istringstream ls;
    if (!next_line(ls) || line != "format aut v1") throw fail("expected header 'format aut v1'");

    long n_states = -1, n_edges = -1;
    std::string word;
    while (next_line(ls)) {
        if (!(ls >> word)) throw fail("blank directive");
        if (word == "oracle") {
            std::getline(ls, A.oracle_name);
            if (!A.oracle_name.empty() && A.oracle_name.front() == ' ')
                A.oracle_name.erase(0, 1);
        } else if (word == "delta") {
            if (!(ls >> A.delta)) throw fail("delta needs an integer");
        } else if (word == "radius") {
            if (!(ls >> A.radius)) throw fail("radius needs an integer");
        } else if (word == "explore_radius") {
            if (!(ls >> A.explore_radius)) throw fail("explore_radius needs an integer");
        } else if (word == "closure") {
            std::string c;
            if (!(ls >> c) || (c != "closed" && c != "truncated"))
                throw fail("closure must be closed or truncated");
            A.closure = c == "closed" ? Closure::Closed : Closure::Truncated;
        } else if (word == "states") {
            if (!(ls >> n_states) || n_states < 1) throw fail("states needs a positive count");
        } else if (word == "edges") {
            if (!(ls >> n_edges) || n_edges < 0) throw fail("edges needs a count");
        } else if (word == "state") {
            long id, level;
            int expanded;
            std::string cert;
            if (!(ls >> id >> level >> expanded >> cert) || (expanded != 0 && expanded != 1))
                throw fail("state line needs: id level expanded cert");
            if (id != long(A.states.size())) throw fail("state ids must be consecutive from 0");
            A.states.push_back({cert, level, expanded == 1, ""});
        } else if (word == "edge") {
            long from, to, mult;
            std::string w;
            if (!(ls >> from >> to >> w >> mult)) throw fail("edge line needs: from to weight mult");
            if (from < 0 || to < 0 || from >= long(A.states.size()) ||
                to >= long(A.states.size()))
                throw fail("edge endpoint out of range");
            if (mult < 1) throw fail("edge multiplicity must be positive");
            A.edges.push_back({int(from), int(to), rat_from_string(w), mult});
        } else {
            throw fail("unknown directive '" + word + "'");
        }
    }
    if (n_states != long(A.states.size())) throw input_error(name + ": state count mismatch");
    if (n_edges >= 0 && n_edges != long(A.edges.size()))
        throw input_error(name + ": edge count mismatch");
    size_t n = A.states.size();
    A.matrix.assign(n, std::vector<Rat>(n, Rat(0)));
    for (const auto& e : A.edges)
        A.matrix[size_t(e.from)][size_t(e.to)] += e.weight * e.multiplicity;
    return A;
}

}  // namespace hyperbolike
