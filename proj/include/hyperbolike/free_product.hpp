#pragma once

// Free products of cyclic groups with standard generating sets. Factor i is
// cyclic of the given order (0 means infinite) and contributes the letter
// 'a'+i with inverse 'A'+i. Vertex keys are the unique geodesic normal
// forms: alternating syllables, each rendered with the shorter of g^k and
// g^-(q-k), lowercase winning ties. Equal keys iff equal group elements.

#include "hyperbolike/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hyperbolike {

class FreeProductOracle : public GraphOracle {
  public:
    explicit FreeProductOracle(std::vector<long> orders) : orders_(std::move(orders)) {
        if (orders_.empty()) throw input_error("free product needs at least one factor");
        if (orders_.size() > 26) throw input_error("at most 26 factors supported");
        for (long q : orders_)
            if (q < 0 || q == 1) throw input_error("factor order must be 0 (infinite) or >= 2");
    }

    std::string base() const override { return ""; }

    std::vector<std::string> neighbors(const std::string& v) const override {
        auto runs = parse(v);
        std::set<std::string> out;
        for (int i = 0; i < int(orders_.size()); ++i)
            for (long step : {1L, -1L}) out.insert(multiply(runs, i, step));
        return {out.begin(), out.end()};
    }

    std::string canonical_decorated_ball(const std::string& center, long radius,
                                         const std::map<std::string, long>& dec) const override {
        for (long q : orders_)
            if (q != 0 && q != 2)  // factors of order >= 3 put cycles in the graph
                return detail::decorated_ball_certificate(*this, center, radius, dec);
        return tree_ball_certificate(center, radius, dec);
    }

    std::string name() const override {
        std::string s = "free_product[";
        for (size_t i = 0; i < orders_.size(); ++i) {
            if (i) s += ",";
            s += orders_[i] == 0 ? std::string("inf") : std::to_string(orders_[i]);
        }
        return s + "]";
    }

    const std::vector<long>& factor_orders() const { return orders_; }

    // word metric: cancel the common prefix of the normal forms, merge the
    // syllables at the split if they share a factor, and charge each
    // surviving syllable its geodesic cost
    long distance_capped(const std::string& u, const std::string& v, long cap) const override {
        if (cap < 0) throw input_error("distance cap must be nonnegative");
        auto ru = parse(u), rv = parse(v);
        size_t i = 0;
        while (i < ru.size() && i < rv.size() && ru[i].factor == rv[i].factor &&
               ru[i].exp == rv[i].exp)
            ++i;
        long d = 0;
        size_t ju = i, jv = i;
        if (ju < ru.size() && jv < rv.size() && ru[ju].factor == rv[jv].factor) {
            d += syllable_cost(ru[ju].factor, rv[jv].exp - ru[ju].exp);
            ++ju, ++jv;
        }
        for (; ju < ru.size(); ++ju) d += syllable_cost(ru[ju].factor, ru[ju].exp);
        for (; jv < rv.size(); ++jv) d += syllable_cost(rv[jv].factor, rv[jv].exp);
        return d <= cap ? d : cap + 1;
    }

    bool has_translations() const override { return true; }

    std::string translate(const std::string& g, const std::string& v) const override {
        std::vector<Run> acc = parse(g);
        for (const Run& r : parse(v)) acc = multiply_run(std::move(acc), r);
        return render(acc);
    }

    std::string invert(const std::string& g) const override {
        auto runs = parse(g);
        std::reverse(runs.begin(), runs.end());
        for (auto& r : runs) r.exp = -r.exp;
        return render(runs);
    }

  private:
    std::vector<long> orders_;  // 0 = infinite cyclic

    // one maximal letter run: factor index and signed exponent (canonical
    // residue 1..q-1 for finite factors, nonzero integer for infinite ones)
    struct Run {
        int factor;
        long exp;
    };

    // strict parse: anything that fails to round-trip is a foreign key
    std::vector<Run> parse(const std::string& w) const {
        std::vector<Run> runs;
        size_t i = 0;
        while (i < w.size()) {
            char c = w[i];
            bool lower = (c >= 'a' && c <= 'z');
            bool upper = (c >= 'A' && c <= 'Z');
            if (!lower && !upper) throw input_error("foreign vertex key: " + w);
            int factor = lower ? c - 'a' : c - 'A';
            if (factor >= int(orders_.size())) throw input_error("foreign vertex key: " + w);
            size_t j = i;
            while (j < w.size() && w[j] == c) ++j;
            long len = long(j - i);
            long q = orders_[size_t(factor)];
            long exp;
            if (q == 0) {
                exp = lower ? len : -len;
            } else {
                // lowercase runs carry k = len with 2*len <= q; uppercase
                // runs carry k = q - len with 2*len < q; anything else is a
                // non-canonical spelling of the same element
                if (lower && 2 * len <= q && len <= q - 1)
                    exp = len;
                else if (upper && 2 * len < q)
                    exp = q - len;
                else
                    throw input_error("foreign vertex key: " + w);
            }
            if (!runs.empty() && runs.back().factor == factor)
                throw input_error("foreign vertex key: " + w);
            runs.push_back({factor, exp});
            i = j;
        }
        return runs;
    }

    std::string render_run(const Run& r) const {
        long q = orders_[size_t(r.factor)];
        char lo = char('a' + r.factor), up = char('A' + r.factor);
        if (q == 0)
            return std::string(size_t(r.exp > 0 ? r.exp : -r.exp), r.exp > 0 ? lo : up);
        long k = ((r.exp % q) + q) % q;
        if (k == 0) return "";
        return 2 * k <= q ? std::string(size_t(k), lo) : std::string(size_t(q - k), up);
    }

    std::string render(const std::vector<Run>& runs) const {
        std::string s;
        for (const auto& r : runs) s += render_run(r);
        return s;
    }

    // geodesic cost of one syllable g^e: residue distance to 0 around the
    // cycle for finite factors, absolute value for infinite ones
    long syllable_cost(int factor, long e) const {
        long q = orders_[size_t(factor)];
        if (q == 0) return e > 0 ? e : -e;
        long k = ((e % q) + q) % q;
        return std::min(k, q - k);
    }

    // right-multiply by a whole syllable, merging with the tail run; after a
    // full cancellation the next syllable may merge again, so callers feed
    // syllables one at a time
    std::vector<Run> multiply_run(std::vector<Run> runs, Run r) const {
        long q = orders_[size_t(r.factor)];
        long e = r.exp;
        if (!runs.empty() && runs.back().factor == r.factor) {
            e += runs.back().exp;
            runs.pop_back();
        }
        if (q != 0) e = ((e % q) + q) % q;
        if (e != 0) runs.push_back({r.factor, e});
        return runs;
    }

    // With every factor order 0 or 2 the graph is a regular tree, so the
    // ball rooted at the center is a rooted tree and a sorted AHU encoding
    // is a complete isomorphism invariant. Any encoding match extends to a
    // graph automorphism because the subtrees pruned at the ball boundary
    // are complete and identical.
    std::string tree_ball_certificate(const std::string& center, long radius,
                                      const std::map<std::string, long>& dec) const {
        auto levels = detail::ball_levels(*this, center, radius);
        if (dec.size() != levels.size()) throw input_error("dec domain mismatch: wrong vertex count");
        for (const auto& [k, value] : dec)
            if (!levels.count(k)) throw input_error("dec domain mismatch: key outside ball: " + k);

        std::vector<std::vector<std::string>> by_level(size_t(radius) + 1);
        for (const auto& [k, lv] : levels) by_level[size_t(lv)].push_back(k);

        std::map<std::string, std::string> enc;
        for (long lv = radius; lv >= 0; --lv) {
            for (const auto& k : by_level[size_t(lv)]) {
                std::vector<std::string> parts;
                if (lv < radius)
                    for (const auto& n : neighbors(k)) {
                        auto it = levels.find(n);
                        if (it != levels.end() && it->second == lv + 1) parts.push_back(enc.at(n));
                    }
                std::sort(parts.begin(), parts.end());
                std::string s = "(" + std::to_string(dec.at(k));
                for (const auto& p : parts) s += p;
                s += ")";
                enc[k] = std::move(s);
            }
        }
        return "ft" + std::to_string(radius) + "|" + enc.at(center);
    }

    // right-multiply by generator of the given factor raised to step (+-1)
    std::string multiply(std::vector<Run> runs, int factor, long step) const {
        long q = orders_[size_t(factor)];
        if (!runs.empty() && runs.back().factor == factor) {
            long e = runs.back().exp + step;
            if (q != 0) e = ((e % q) + q) % q;
            if (e == 0)
                runs.pop_back();
            else
                runs.back().exp = e;
        } else {
            long e = q != 0 ? ((step % q) + q) % q : step;
            if (e != 0) runs.push_back({factor, e});
        }
        return render(runs);
    }
};

}  // namespace hyperbolike
