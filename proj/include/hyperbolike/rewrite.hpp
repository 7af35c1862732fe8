#pragma once

// Shortlex string rewriting: group presentations, Knuth-Bendix completion,
// and normal forms. Symbols are single characters; the shortlex order is the
// declaration order with each inverse placed immediately after its generator.
// A Confluent system assigns every group element one canonical normal form;
// an exhausted system still rewrites, but the result is only guaranteed to
// be irreducible, not canonical.

#include "hyperbolike/numeric.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hyperbolike {

struct Presentation {
    std::vector<char> alphabet;    // shortlex order
    std::map<char, char> inverse;  // involution on the alphabet
    std::vector<std::string> relators;

    bool has_symbol(char c) const { return inverse.find(c) != inverse.end(); }

    // a generator that is its own inverse contributes one symbol, not two
    void add_generator(char g, char g_inv) {
        if (has_symbol(g)) throw input_error(std::string("generator '") + g + "' declared twice");
        if (g != g_inv && has_symbol(g_inv))
            throw input_error(std::string("inverse symbol '") + g_inv + "' already in use");
        alphabet.push_back(g);
        if (g != g_inv) alphabet.push_back(g_inv);
        inverse[g] = g_inv;
        inverse[g_inv] = g;
    }

    void add_relator(const std::string& w) {
        for (char c : w)
            if (!has_symbol(c)) throw input_error(std::string("relator uses symbol '") + c + "' not in alphabet");
        relators.push_back(w);
    }

    std::string word_inverse(const std::string& w) const {
        std::string out;
        out.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            auto f = inverse.find(*it);
            if (f == inverse.end()) throw input_error(std::string("symbol '") + *it + "' not in alphabet");
            out.push_back(f->second);
        }
        return out;
    }
};

struct RewriteRule {
    std::string lhs, rhs;  // lhs > rhs in shortlex
    bool operator==(const RewriteRule& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

enum class RewriteStatus { Confluent, BudgetExhausted };

inline std::string to_string(RewriteStatus s) {
    return s == RewriteStatus::Confluent ? "confluent" : "exhausted";
}

namespace detail {

// Aho-Corasick automaton over the rule left-hand sides. match[s] is the rule
// whose lhs is the longest one ending at state s (-1 if none); for an
// interreduced system at most one lhs can end at any position, so "longest"
// is never a real choice there.
struct LhsMatcher {
    int sigma = 0;
    std::vector<int> go;     // states x sigma
    std::vector<int> fail;
    std::vector<int> match;

    void build(int alphabet_size, const std::vector<const std::string*>& lhs,
               const std::array<int, 256>& sym) {
        sigma = alphabet_size;
        go.assign(size_t(sigma), -1);
        fail.assign(1, 0);
        match.assign(1, -1);
        auto node_edge = [&](int s, int k) -> int& { return go[size_t(s) * size_t(sigma) + size_t(k)]; };
        for (size_t r = 0; r < lhs.size(); ++r) {
            int s = 0;
            for (char c : *lhs[r]) {
                int k = sym[static_cast<unsigned char>(c)];
                if (node_edge(s, k) < 0) {
                    int t = int(fail.size());
                    node_edge(s, k) = t;
                    go.resize(go.size() + size_t(sigma), -1);
                    fail.push_back(0);
                    match.push_back(-1);
                }
                s = node_edge(s, k);
            }
            match[size_t(s)] = int(r);
        }
        // breadth-first closure: missing edges fall back through fail links,
        // match inherits the longest proper-suffix hit
        std::vector<int> order;
        order.reserve(fail.size());
        for (int k = 0; k < sigma; ++k) {
            int& e = node_edge(0, k);
            if (e < 0) e = 0;
            else order.push_back(e);
        }
        for (size_t qi = 0; qi < order.size(); ++qi) {
            int s = order[qi];
            if (match[size_t(s)] < 0) match[size_t(s)] = match[size_t(fail[size_t(s)])];
            for (int k = 0; k < sigma; ++k) {
                int& e = node_edge(s, k);
                int f = node_edge(fail[size_t(s)], k);
                if (e < 0) {
                    e = f;
                } else {
                    fail[size_t(e)] = f;
                    order.push_back(e);
                }
            }
        }
    }

    int step(int s, int k) const { return go[size_t(s) * size_t(sigma) + size_t(k)]; }
};

}  // namespace detail

class RewriteSystem {
  public:
    RewriteSystem(std::vector<char> alphabet, std::map<char, char> inverse,
                  std::vector<RewriteRule> rules, RewriteStatus status)
        : alphabet_(std::move(alphabet)),
          inverse_(std::move(inverse)),
          rules_(std::move(rules)),
          status_(status) {
        sym_.fill(-1);
        for (size_t i = 0; i < alphabet_.size(); ++i) {
            unsigned char c = static_cast<unsigned char>(alphabet_[i]);
            if (sym_[c] >= 0) throw input_error(std::string("duplicate alphabet symbol '") + alphabet_[i] + "'");
            sym_[c] = int(i);
        }
        for (char c : alphabet_) {
            auto f = inverse_.find(c);
            if (f == inverse_.end()) throw input_error(std::string("symbol '") + c + "' has no inverse pairing");
            if (symbol_index(f->second) < 0 || inverse_.at(f->second) != c)
                throw invariant_violation("inverse pairing is not an involution on the alphabet");
        }
        std::sort(rules_.begin(), rules_.end(), [this](const RewriteRule& a, const RewriteRule& b) {
            if (a.lhs != b.lhs) return shortlex_less(a.lhs, b.lhs);
            return shortlex_less(a.rhs, b.rhs);
        });
        for (const auto& r : rules_) {
            if (r.lhs.empty()) throw invariant_violation("rule with empty left-hand side");
            check_word(r.lhs);
            check_word(r.rhs);
            if (!shortlex_less(r.rhs, r.lhs))
                throw invariant_violation("rule '" + r.lhs + " -> " + r.rhs + "' is not shortlex-decreasing");
        }
        build_matcher();
        verify_interreduced();
    }

    const std::vector<char>& alphabet() const { return alphabet_; }
    const std::map<char, char>& inverse_pairing() const { return inverse_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    RewriteStatus status() const { return status_; }
    bool confluent() const { return status_ == RewriteStatus::Confluent; }

    int symbol_index(char c) const { return sym_[static_cast<unsigned char>(c)]; }

    bool shortlex_less(const std::string& a, const std::string& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i) {
            int x = symbol_index(a[i]), y = symbol_index(b[i]);
            if (x != y) return x < y;
        }
        return false;
    }

    std::string word_inverse(const std::string& w) const {
        std::string out;
        out.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            auto f = inverse_.find(*it);
            if (f == inverse_.end()) throw input_error(std::string("symbol '") + *it + "' not in alphabet");
            out.push_back(f->second);
        }
        return out;
    }

    // leftmost rewriting: symbols stream through the matcher and the first
    // completed redex is replaced, with the rule's right side re-scanned in
    // place. Terminates because every step is shortlex-decreasing on a prefix.
    std::string normalize(const std::string& w) const {
        std::string out;
        std::vector<int> st;  // matcher state after each kept symbol
        out.reserve(w.size());
        st.reserve(w.size());
        std::string feed(w.rbegin(), w.rend());
        while (!feed.empty()) {
            char c = feed.back();
            feed.pop_back();
            int k = symbol_index(c);
            if (k < 0) throw input_error(std::string("symbol '") + c + "' not in alphabet");
            int s = matcher_.step(st.empty() ? 0 : st.back(), k);
            out.push_back(c);
            st.push_back(s);
            int r = matcher_.match[size_t(s)];
            if (r >= 0) {
                const RewriteRule& rule = rules_[size_t(r)];
                out.resize(out.size() - rule.lhs.size());
                st.resize(st.size() - rule.lhs.size());
                feed.append(rule.rhs.rbegin(), rule.rhs.rend());
            }
        }
        return out;
    }

    bool irreducible(const std::string& w) const {
        int s = 0;
        for (char c : w) {
            int k = symbol_index(c);
            if (k < 0) throw input_error(std::string("symbol '") + c + "' not in alphabet");
            s = matcher_.step(s, k);
            if (matcher_.match[size_t(s)] >= 0) return false;
        }
        return true;
    }

  private:
    void check_word(const std::string& w) const {
        for (char c : w)
            if (symbol_index(c) < 0) throw input_error(std::string("symbol '") + c + "' not in alphabet");
    }

    void build_matcher() {
        std::vector<const std::string*> lhs;
        lhs.reserve(rules_.size());
        for (const auto& r : rules_) lhs.push_back(&r.lhs);
        matcher_.build(int(alphabet_.size()), lhs, sym_);
    }

    // interreduced: no lhs contains another lhs as a proper factor or as a
    // duplicate, and every rhs is irreducible
    void verify_interreduced() const {
        for (size_t j = 0; j < rules_.size(); ++j) {
            const std::string& l = rules_[j].lhs;
            int s = 0;
            for (size_t p = 0; p < l.size(); ++p) {
                s = matcher_.step(s, symbol_index(l[p]));
                int m = matcher_.match[size_t(s)];
                bool final_self = (p + 1 == l.size() && m == int(j));
                if (m >= 0 && !final_self)
                    throw invariant_violation("rule set not interreduced: '" + rules_[size_t(m)].lhs +
                                              "' occurs inside '" + l + "'");
                if (p + 1 == l.size()) {
                    int suffix_hit = matcher_.match[size_t(matcher_.fail[size_t(s)])];
                    if (suffix_hit >= 0)
                        throw invariant_violation("rule set not interreduced: '" +
                                                  rules_[size_t(suffix_hit)].lhs + "' is a suffix of '" + l + "'");
                }
            }
            if (!irreducible(rules_[j].rhs))
                throw invariant_violation("rule set not interreduced: reducible right side '" + rules_[j].rhs + "'");
        }
    }

    std::vector<char> alphabet_;
    std::array<int, 256> sym_{};
    std::map<char, char> inverse_;
    std::vector<RewriteRule> rules_;
    RewriteStatus status_;
    detail::LhsMatcher matcher_;
};

namespace detail {

// mutable rule store used only during completion: tombstoned rules keep ids
// stable for the matcher, which is rebuilt lazily after mutations
struct CompletionState {
    const std::vector<char>& alphabet;
    std::array<int, 256> sym{};
    std::vector<RewriteRule> rules;
    std::vector<bool> alive;
    std::vector<int> live_of_matcher;  // matcher rule id -> rules index
    LhsMatcher matcher;
    bool dirty = true;

    explicit CompletionState(const std::vector<char>& ab) : alphabet(ab) {
        sym.fill(-1);
        for (size_t i = 0; i < ab.size(); ++i) sym[static_cast<unsigned char>(ab[i])] = int(i);
    }

    bool shortlex_less(const std::string& a, const std::string& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i) {
            int x = sym[static_cast<unsigned char>(a[i])], y = sym[static_cast<unsigned char>(b[i])];
            if (x != y) return x < y;
        }
        return false;
    }

    void rebuild() {
        std::vector<const std::string*> lhs;
        live_of_matcher.clear();
        for (size_t i = 0; i < rules.size(); ++i)
            if (alive[i]) {
                lhs.push_back(&rules[i].lhs);
                live_of_matcher.push_back(int(i));
            }
        matcher.build(int(alphabet.size()), lhs, sym);
        dirty = false;
    }

    std::string normalize(const std::string& w) {
        if (dirty) rebuild();
        std::string out;
        std::vector<int> st;
        out.reserve(w.size());
        st.reserve(w.size());
        std::string feed(w.rbegin(), w.rend());
        while (!feed.empty()) {
            char c = feed.back();
            feed.pop_back();
            int s = matcher.step(st.empty() ? 0 : st.back(), sym[static_cast<unsigned char>(c)]);
            out.push_back(c);
            st.push_back(s);
            int m = matcher.match[size_t(s)];
            if (m >= 0) {
                const RewriteRule& rule = rules[size_t(live_of_matcher[size_t(m)])];
                out.resize(out.size() - rule.lhs.size());
                st.resize(st.size() - rule.lhs.size());
                feed.append(rule.rhs.rbegin(), rule.rhs.rend());
            }
        }
        return out;
    }
};

}  // namespace detail

// Knuth-Bendix completion with the smallest-first pending queue. Budget
// exhaustion (too many live rules, or a candidate left side longer than
// max_len) is reported through the status, never as an error: the partial
// system still rewrites, it just cannot promise canonical forms.
inline RewriteSystem kb_complete(const Presentation& p, long max_rules = 4000, long max_len = 64) {
    if (max_rules <= 0 || max_len <= 0) throw input_error("completion budgets must be positive");
    detail::CompletionState cs(p.alphabet);

    auto ordered = [&cs](std::string u, std::string v) {
        if (cs.shortlex_less(u, v)) std::swap(u, v);
        return std::make_pair(std::move(u), std::move(v));
    };
    auto pair_less = [&cs](const std::pair<std::string, std::string>& a,
                           const std::pair<std::string, std::string>& b) {
        if (a.first != b.first) return cs.shortlex_less(a.first, b.first);
        if (a.second != b.second) return cs.shortlex_less(a.second, b.second);
        return false;
    };
    std::set<std::pair<std::string, std::string>, decltype(pair_less)> pending(pair_less);

    for (const auto& [g, gi] : p.inverse)
        pending.insert(ordered(std::string{g} + gi, ""));
    // each relator is seeded in balanced form: every cyclic rotation of it and
    // of its inverse, split at the midpoint into u = v^{-1}. Each of these
    // equations is equivalent to the relator, but the sides start half as
    // long, which keeps early critical pairs short
    for (const auto& r : p.relators) {
        if (r.empty()) continue;
        pending.insert(ordered(r, ""));
        for (std::string w : {r, p.word_inverse(r)}) {
            for (size_t s = 0; s < w.size(); ++s) {
                std::string rot = w.substr(s) + w.substr(0, s);
                size_t h = (rot.size() + 1) / 2;
                pending.insert(ordered(rot.substr(0, h), p.word_inverse(rot.substr(h))));
            }
        }
    }

    bool exhausted = false;
    long live = 0;
    while (!pending.empty()) {
        auto eq = *pending.begin();
        pending.erase(pending.begin());
        std::string lhs = cs.normalize(eq.first);
        std::string rhs = cs.normalize(eq.second);
        if (lhs == rhs) continue;
        if (cs.shortlex_less(lhs, rhs)) std::swap(lhs, rhs);
        if (long(lhs.size()) > max_len) {
            exhausted = true;  // this pair is dropped, so confluence is no longer certified
            continue;
        }
        if (live >= max_rules) {
            exhausted = true;
            break;
        }
        size_t id = cs.rules.size();
        cs.rules.push_back({lhs, rhs});
        cs.alive.push_back(true);
        cs.dirty = true;
        ++live;

        // interreduction: rules whose left side now reduces are withdrawn and
        // requeued; right sides are renormalized in place
        for (size_t i = 0; i < id; ++i) {
            if (!cs.alive[i]) continue;
            if (cs.rules[i].lhs.find(lhs) != std::string::npos) {
                cs.alive[i] = false;
                cs.dirty = true;
                --live;
                pending.insert(ordered(cs.rules[i].lhs, cs.rules[i].rhs));
            } else if (cs.rules[i].rhs.find(lhs) != std::string::npos) {
                cs.rules[i].rhs = cs.normalize(cs.rules[i].rhs);
            }
        }

        // overlaps of the new rule against every live rule, both orders
        for (size_t i = 0; i < cs.rules.size(); ++i) {
            if (!cs.alive[i]) continue;
            const RewriteRule& a = cs.rules[id];
            const RewriteRule& b = cs.rules[i];
            auto push_overlaps = [&](const RewriteRule& r1, const RewriteRule& r2) {
                size_t kmax = std::min(r1.lhs.size(), r2.lhs.size()) - 1;
                for (size_t k = 1; k <= kmax; ++k) {
                    if (r1.lhs.compare(r1.lhs.size() - k, k, r2.lhs, 0, k) != 0) continue;
                    std::string left = r1.rhs + r2.lhs.substr(k);
                    std::string right = r1.lhs.substr(0, r1.lhs.size() - k) + r2.rhs;
                    if (left != right) pending.insert(ordered(std::move(left), std::move(right)));
                }
            };
            push_overlaps(a, b);
            if (i != id) push_overlaps(b, a);
        }
    }

    std::vector<RewriteRule> final_rules;
    for (size_t i = 0; i < cs.rules.size(); ++i)
        if (cs.alive[i]) final_rules.push_back(cs.rules[i]);
    RewriteStatus status = (exhausted || !pending.empty()) ? RewriteStatus::BudgetExhausted
                                                           : RewriteStatus::Confluent;
    return RewriteSystem(std::vector<char>(p.alphabet), std::map<char, char>(p.inverse),
                         std::move(final_rules), status);
}

struct CriticalPair {
    std::string word;         // superposition both rules act on
    std::string left, right;  // the two normal forms, left != right
};

// every overlap and inclusion of left sides, resolved through normalize;
// the returned list is empty exactly when the system is locally confluent
inline std::vector<CriticalPair> check_local_confluence(const RewriteSystem& rs) {
    const auto& rules = rs.rules();
    std::set<std::array<std::string, 3>> seen;
    std::vector<CriticalPair> bad;
    auto consider = [&](const std::string& word, const std::string& u, const std::string& v) {
        std::string a = rs.normalize(u), b = rs.normalize(v);
        if (a == b) return;
        if (rs.shortlex_less(b, a)) std::swap(a, b);
        if (seen.insert({word, a, b}).second) bad.push_back({word, a, b});
    };
    for (size_t i = 0; i < rules.size(); ++i) {
        for (size_t j = 0; j < rules.size(); ++j) {
            const std::string &li = rules[i].lhs, &lj = rules[j].lhs;
            size_t kmax = std::min(li.size(), lj.size()) - 1;
            for (size_t k = 1; k <= kmax; ++k) {
                if (li.compare(li.size() - k, k, lj, 0, k) != 0) continue;
                consider(li + lj.substr(k), rules[i].rhs + lj.substr(k),
                         li.substr(0, li.size() - k) + rules[j].rhs);
            }
            // inclusions cannot occur in an interreduced system, but a loaded
            // system is only trusted after this check runs
            if (i != j && li.size() < lj.size()) {
                for (size_t pos = lj.find(li); pos != std::string::npos; pos = lj.find(li, pos + 1))
                    consider(lj, rules[j].rhs, lj.substr(0, pos) + rules[i].rhs + lj.substr(pos + li.size()));
            }
        }
    }
    std::sort(bad.begin(), bad.end(), [&rs](const CriticalPair& a, const CriticalPair& b) {
        if (a.word != b.word) return rs.shortlex_less(a.word, b.word);
        if (a.left != b.left) return rs.shortlex_less(a.left, b.left);
        return rs.shortlex_less(a.right, b.right);
    });
    return bad;
}

// --- text formats -----------------------------------------------------------
//
// presentation:                       rewrite system:
//   format pres v1                      format rws v1
//   gen a inv a                         status confluent
//   gen b inv B                         alphabet a b B
//   rel aa                              inv a a
//   rel bbb                             inv b B
//                                       rule aa ->
//                                       rule bb -> B
// '#' starts a comment; blank lines are ignored.

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline char single_symbol(const std::string& tok, const std::string& where) {
    if (tok.size() != 1) throw input_error(where + ": symbol '" + tok + "' must be a single character");
    return tok[0];
}

}  // namespace detail

inline Presentation parse_presentation(std::istream& in, const std::string& name) {
    Presentation p;
    std::string line;
    long lineno = 0;
    bool saw_header = false;
    auto at = [&] { return name + ":" + std::to_string(lineno); };
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::split_ws(detail::strip_comment(line));
        if (toks.empty()) continue;
        if (!saw_header) {
            if (toks != std::vector<std::string>{"format", "pres", "v1"})
                throw input_error(at() + ": expected header 'format pres v1'");
            saw_header = true;
            continue;
        }
        try {
            if (toks[0] == "gen") {
                if (toks.size() != 4 || toks[2] != "inv")
                    throw input_error("expected 'gen <sym> inv <sym>'");
                p.add_generator(detail::single_symbol(toks[1], at()),
                                detail::single_symbol(toks[3], at()));
            } else if (toks[0] == "rel") {
                if (toks.size() != 2) throw input_error("expected 'rel <word>'");
                p.add_relator(toks[1]);
            } else {
                throw input_error("unknown directive '" + toks[0] + "'");
            }
        } catch (const input_error& e) {
            std::string msg = e.what();
            if (msg.rfind(name, 0) == 0) throw;
            throw input_error(at() + ": " + msg);
        }
    }
    if (!saw_header) throw input_error(name + ": missing header 'format pres v1'");
    if (p.alphabet.empty()) throw input_error(name + ": no generators declared");
    return p;
}

inline Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open presentation file: " + path);
    return parse_presentation(in, path);
}

inline void dump_rws(const RewriteSystem& rs, std::ostream& out) {
    out << "format rws v1\n";
    out << "status " << to_string(rs.status()) << "\n";
    out << "alphabet";
    for (char c : rs.alphabet()) out << ' ' << c;
    out << "\n";
    std::set<char> done;
    for (char c : rs.alphabet()) {
        char i = rs.inverse_pairing().at(c);
        if (done.count(c)) continue;
        out << "inv " << c << ' ' << i << "\n";
        done.insert(c);
        done.insert(i);
    }
    for (const auto& r : rs.rules()) {
        out << "rule " << r.lhs << " ->";
        if (!r.rhs.empty()) out << ' ' << r.rhs;
        out << "\n";
    }
}

inline RewriteSystem parse_rws(std::istream& in, const std::string& name) {
    std::string line;
    long lineno = 0;
    bool saw_header = false;
    std::optional<RewriteStatus> status;
    std::vector<char> alphabet;
    std::map<char, char> inverse;
    std::vector<RewriteRule> rules;
    auto at = [&] { return name + ":" + std::to_string(lineno); };
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::split_ws(detail::strip_comment(line));
        if (toks.empty()) continue;
        if (!saw_header) {
            if (toks != std::vector<std::string>{"format", "rws", "v1"})
                throw input_error(at() + ": expected header 'format rws v1'");
            saw_header = true;
            continue;
        }
        if (toks[0] == "status") {
            if (toks.size() != 2 || (toks[1] != "confluent" && toks[1] != "exhausted"))
                throw input_error(at() + ": expected 'status confluent' or 'status exhausted'");
            status = toks[1] == "confluent" ? RewriteStatus::Confluent : RewriteStatus::BudgetExhausted;
        } else if (toks[0] == "alphabet") {
            for (size_t i = 1; i < toks.size(); ++i)
                alphabet.push_back(detail::single_symbol(toks[i], at()));
        } else if (toks[0] == "inv") {
            if (toks.size() != 3) throw input_error(at() + ": expected 'inv <sym> <sym>'");
            char a = detail::single_symbol(toks[1], at());
            char b = detail::single_symbol(toks[2], at());
            inverse[a] = b;
            inverse[b] = a;
        } else if (toks[0] == "rule") {
            if (toks.size() < 3 || toks.size() > 4 || toks[2] != "->")
                throw input_error(at() + ": expected 'rule <lhs> -> [<rhs>]'");
            rules.push_back({toks[1], toks.size() == 4 ? toks[3] : ""});
        } else {
            throw input_error(at() + ": unknown directive '" + toks[0] + "'");
        }
    }
    if (!saw_header) throw input_error(name + ": missing header 'format rws v1'");
    if (!status) throw input_error(name + ": missing status line");
    if (alphabet.empty()) throw input_error(name + ": missing alphabet line");
    try {
        return RewriteSystem(std::move(alphabet), std::move(inverse), std::move(rules), *status);
    } catch (const invariant_violation& e) {
        throw input_error(name + ": " + e.what());
    }
}

inline RewriteSystem load_rws(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open rewrite system file: " + path);
    return parse_rws(in, path);
}

}  // namespace hyperbolike
