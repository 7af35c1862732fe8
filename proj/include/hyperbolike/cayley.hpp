#pragma once

// Cayley graph oracle over a confluent shortlex rewriting system. Vertex
// keys are the shortlex normal forms; edges multiply by one alphabet symbol
// on the right. The symmetry family is left translation: relative position
// words are invariant under it and the decorated-ball byte-string is just
// the sorted (relative key, value) list.

#include "hyperbolike/oracle.hpp"
#include "hyperbolike/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hyperbolike {

class CayleyOracle : public GraphOracle {
  public:
    explicit CayleyOracle(RewriteSystem rs, std::string label = "cayley")
        : rs_(std::move(rs)), label_(std::move(label)) {
        if (!rs_.confluent())
            throw input_error(
                "Cayley backend needs a confluent rewriting system; completion was exhausted");
    }

    std::string base() const override { return ""; }

    std::vector<std::string> neighbors(const std::string& v) const override {
        require_normal(v);
        std::set<std::string> out;
        for (char g : rs_.alphabet()) {
            std::string u = rs_.normalize(v + g);
            if (u != v) out.insert(std::move(u));  // trivial generators add no edge
        }
        return {out.begin(), out.end()};
    }

    std::string canonical_decorated_ball(const std::string& center, long radius,
                                         const std::map<std::string, long>& dec) const override {
        auto levels = detail::ball_levels(*this, center, radius);
        if (dec.size() != levels.size())
            throw input_error("dec domain mismatch: wrong vertex count");
        std::string inv_center = rs_.normalize(rs_.word_inverse(center));
        std::string cert = "r" + std::to_string(radius) + "|";
        // dec iterates in key order of the absolute words; relative words
        // sort differently, so collect and re-sort
        std::vector<std::pair<std::string, long>> rel;
        for (const auto& [k, value] : dec) {
            if (!levels.count(k)) throw input_error("dec domain mismatch: key outside ball: " + k);
            rel.emplace_back(rs_.normalize(inv_center + k), value);
        }
        std::sort(rel.begin(), rel.end());
        for (const auto& [k, value] : rel) {
            cert += k;
            cert += '=';
            cert += std::to_string(value);
            cert += ';';
        }
        return cert;
    }

    std::string name() const override { return label_; }

    const RewriteSystem& system() const { return rs_; }

    // shortlex normal forms are length-minimal representatives, so the word
    // metric is the normal-form length of the quotient
    long distance_capped(const std::string& u, const std::string& v, long cap) const override {
        if (cap < 0) throw input_error("distance cap must be nonnegative");
        require_normal(u);
        require_normal(v);
        long d = long(rs_.normalize(rs_.word_inverse(u) + v).size());
        return d <= cap ? d : cap + 1;
    }

    bool has_translations() const override { return true; }

    // left-multiply a vertex by a group element given as any word
    std::string translate(const std::string& g, const std::string& v) const override {
        return rs_.normalize(g + v);
    }

    std::string invert(const std::string& g) const override {
        return rs_.normalize(rs_.word_inverse(g));
    }

  private:
    RewriteSystem rs_;
    std::string label_;

    void require_normal(const std::string& v) const {
        // irreducible already rejects symbols outside the alphabet
        if (!rs_.irreducible(v)) throw input_error("foreign vertex key (not a normal form): " + v);
    }
};

}  // namespace hyperbolike
