#pragma once

// The quasi-tree: a k-regular tree with a fixed end, plus a shortcut edge
// from every vertex to its grandparent toward that end. Vertex addresses
// are "j:w", meaning ascend the base ray to its j-th vertex and descend by
// the child word w. When j >= 1 the first letter of w may not be 0: child 0
// of a ray vertex is the next ray vertex down, which is addressed with j-1
// instead, so addresses are unique and j is minimal. The symmetry family is
// the full automorphism group: end-fixing tree automorphisms.

#include "hyperbolike/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hyperbolike {

class QuasiTreeOracle : public GraphOracle {
  public:
    explicit QuasiTreeOracle(long k) : k_(k) {
        if (k < 3) throw input_error("quasi-tree branching must be at least 3");
        if (k > 11) throw input_error("quasi-tree branching above 11 not supported");
    }

    std::string base() const override { return "0:"; }

    std::vector<std::string> neighbors(const std::string& v) const override {
        Address a = parse(v);
        std::set<std::string> out;
        out.insert(render(parent(a)));
        out.insert(render(parent(parent(a))));  // up-shortcut
        for (const auto& c : children(a)) {
            out.insert(render(c));
            for (const auto& gc : children(c)) out.insert(render(gc));  // down-shortcuts
        }
        return {out.begin(), out.end()};
    }

    std::string canonical_decorated_ball(const std::string& center, long radius,
                                         const std::map<std::string, long>& dec) const override;

    std::string name() const override { return "quasi_tree(" + std::to_string(k_) + ")"; }

    // exact graph distance: ceil(a/2) + ceil(b/2) over the tree distances to
    // the lowest common ancestor, since every step moves 1 or 2 levels
    // vertically and ascent/descent can always land exactly
    long distance(const std::string& u, const std::string& v) const {
        auto [a, b] = lca_depths(parse(u), parse(v));
        return (a + 1) / 2 + (b + 1) / 2;
    }

    long distance_capped(const std::string& u, const std::string& v, long cap) const override {
        if (cap < 0) throw input_error("distance cap must be nonnegative");
        long d = distance(u, v);
        return d <= cap ? d : cap + 1;
    }

    long branching() const { return k_; }

  private:
    long k_;

    struct Address {
        long j = 0;
        std::string w;  // letters '0'..char('0'+k-2)
    };

    Address parse(const std::string& s) const {
        auto colon = s.find(':');
        if (colon == std::string::npos || colon == 0) throw input_error("foreign vertex key: " + s);
        Address a;
        for (size_t i = 0; i < colon; ++i) {
            if (s[i] < '0' || s[i] > '9') throw input_error("foreign vertex key: " + s);
            a.j = a.j * 10 + (s[i] - '0');
        }
        if (std::to_string(a.j).size() != colon) throw input_error("foreign vertex key: " + s);
        a.w = s.substr(colon + 1);
        for (char c : a.w)
            if (c < '0' || c >= char('0' + k_ - 1)) throw input_error("foreign vertex key: " + s);
        if (a.j >= 1 && !a.w.empty() && a.w[0] == '0')
            throw input_error("foreign vertex key: " + s);  // addressed via j-1
        return a;
    }

    std::string render(const Address& a) const { return std::to_string(a.j) + ":" + a.w; }

    // one step toward the fixed end
    Address parent(const Address& a) const {
        if (!a.w.empty()) return {a.j, a.w.substr(0, a.w.size() - 1)};
        return {a.j + 1, ""};
    }

    // the k-1 tree children, away from the end
    std::vector<Address> children(const Address& a) const {
        std::vector<Address> out;
        if (a.w.empty() && a.j >= 1) {
            out.push_back({a.j - 1, ""});
            for (long c = 1; c <= k_ - 2; ++c) out.push_back({a.j, std::string(1, char('0' + c))});
        } else {
            for (long c = 0; c <= k_ - 2; ++c) out.push_back({a.j, a.w + char('0' + c)});
        }
        return out;
    }

    // tree depths of u and v below their lowest common ancestor; with equal
    // ray indices the ancestor sits at the longest common prefix of the child
    // words, otherwise both chains meet on the ray at the higher index
    std::pair<long, long> lca_depths(const Address& u, const Address& v) const {
        if (u.j != v.j) {
            if (u.j < v.j) return {long(u.w.size()) + (v.j - u.j), long(v.w.size())};
            return {long(u.w.size()), long(v.w.size()) + (u.j - v.j)};
        }
        size_t p = 0;
        while (p < u.w.size() && p < v.w.size() && u.w[p] == v.w[p]) ++p;
        return {long(u.w.size()) - long(p), long(v.w.size()) - long(p)};
    }

};

// Canonical form under end-fixing tree automorphisms: take the tree hull of
// the ball (union of ancestor paths up to the common ancestor), root it at
// that topmost vertex, and emit an AHU encoding with per-vertex labels
// (center flag, decoration value, or outside-ball marker). Any label-
// preserving isomorphism of such rooted hulls extends to a full end-fixing
// automorphism, because all omitted subtrees are complete (k-1)-branching
// trees and both top rays continue to the end.
inline std::string QuasiTreeOracle::canonical_decorated_ball(
    const std::string& center, long radius, const std::map<std::string, long>& dec) const {
    auto levels = detail::ball_levels(*this, center, radius);
    if (dec.size() != levels.size()) throw input_error("dec domain mismatch: wrong vertex count");
    for (const auto& [k, value] : dec)
        if (!levels.count(k)) throw input_error("dec domain mismatch: key outside ball: " + k);

    // common ancestor of all ball vertices: fold pairwise, tracking the
    // highest vertex every connecting path can reach
    std::string top = center;
    for (const auto& [k, lv] : levels) {
        auto [du, dv] = lca_depths(parse(top), parse(k));
        Address anc = parse(top);
        for (long i = 0; i < du; ++i) anc = parent(anc);
        top = render(anc);
    }

    // hull edges: ascend from each ball vertex until a recorded vertex
    std::map<std::string, std::set<std::string>> kids;
    std::set<std::string> hull_vertices{top};
    for (const auto& [k, lv] : levels) {
        std::string cur = k;
        while (hull_vertices.insert(cur).second) {
            std::string p = render(parent(parse(cur)));
            kids[p].insert(cur);
            cur = p;
        }
    }

    // AHU encoding with sorted child blocks
    auto label = [&](const std::string& k) -> std::string {
        auto it = dec.find(k);
        if (it == dec.end()) return "-";
        return (k == center ? "c" : "b") + std::to_string(it->second);
    };
    std::map<std::string, std::string> enc;
    // process by decreasing key depth so children are done before parents
    std::vector<std::string> order(hull_vertices.begin(), hull_vertices.end());
    std::sort(order.begin(), order.end(), [&](const std::string& x, const std::string& y) {
        Address ax = parse(x), ay = parse(y);
        long hx = long(ax.w.size()) - ax.j, hy = long(ay.w.size()) - ay.j;
        if (hx != hy) return hx > hy;  // deeper (farther from end) first
        return x < y;
    });
    for (const auto& k : order) {
        std::vector<std::string> parts;
        for (const auto& c : kids[k]) parts.push_back(enc.at(c));
        std::sort(parts.begin(), parts.end());
        std::string s = "(" + label(k);
        for (const auto& p : parts) s += p;
        s += ")";
        enc[k] = std::move(s);
    }
    return "qr" + std::to_string(radius) + "|" + enc.at(top);
}

}  // namespace hyperbolike
