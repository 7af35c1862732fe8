#pragma once

// The (2,3,r) triangle group (von Dyck), r >= 7, as an exact matrix group.
// No finite confluent shortlex system exists for these presentations on
// {a, b, B}, so the word problem is solved through the reflection
// representation instead: the full (2,3,r) Coxeter group acts faithfully on
// R^3 preserving the form with off-diagonal entries 0, -1/2, -cos(pi/r),
// and a = s1 s2, b = s2 s3 generate the orientation-preserving half. All
// arithmetic happens in Q(c), c = 2 cos(pi/r), whose minimal polynomial is
// computed exactly from the cyclotomic polynomial of order 2r. Vertex keys
// are breadth-first discovery words over a, b, B (generation order a, b,
// B), i.e. shortlex-least geodesic spellings; the key-to-matrix tables
// grow lazily with the explored radius.

#include "hyperbolike/numeric.hpp"
#include "hyperbolike/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hyperbolike {

namespace detail {

// quotient of an exact division of rational polynomials (monic divisor)
inline std::vector<Rat> poly_divide_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
    if (den.empty() || den.back() != Rat(1)) throw invariant_violation("divisor must be monic");
    if (num.size() < den.size()) {
        for (const Rat& c : num)
            if (c != 0) throw invariant_violation("polynomial division left a remainder");
        return {};
    }
    std::vector<Rat> quot(num.size() - den.size() + 1, Rat(0));
    for (size_t q = quot.size(); q-- > 0;) {
        Rat c = num[q + den.size() - 1];
        quot[q] = c;
        if (c == 0) continue;
        for (size_t i = 0; i < den.size(); ++i) num[q + i] -= c * den[i];
    }
    for (size_t i = 0; i + 1 < den.size(); ++i)
        if (num[i] != 0) throw invariant_violation("polynomial division left a remainder");
    return quot;
}

inline std::vector<Rat> cyclotomic_polynomial(long n) {
    // t^n - 1 divided by all lower-order cyclotomics
    std::vector<Rat> result(size_t(n) + 1, Rat(0));
    result[0] = -1;
    result[size_t(n)] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) result = poly_divide_exact(std::move(result), cyclotomic_polynomial(d));
    return result;
}

// minimal polynomial of 2cos(2*pi/n) for n > 2: write the (palindromic)
// cyclotomic polynomial of order n as a polynomial in t + 1/t via the
// Chebyshev-like family P_0 = 2, P_1 = x, P_{j+1} = x P_j - P_{j-1}
inline std::vector<Rat> real_cyclotomic_polynomial(long n) {
    auto phi = cyclotomic_polynomial(n);
    if (phi.size() % 2 == 0) throw invariant_violation("cyclotomic degree must be even for n > 2");
    size_t m = (phi.size() - 1) / 2;
    std::vector<std::vector<Rat>> chebyshev{{Rat(2)}, {Rat(0), Rat(1)}};
    for (size_t j = 2; j <= m; ++j) {
        std::vector<Rat> next(j + 1, Rat(0));
        for (size_t i = 0; i < chebyshev[j - 1].size(); ++i) next[i + 1] += chebyshev[j - 1][i];
        for (size_t i = 0; i < chebyshev[j - 2].size(); ++i) next[i] -= chebyshev[j - 2][i];
        chebyshev.push_back(std::move(next));
    }
    std::vector<Rat> psi(m + 1, Rat(0));
    psi[0] = phi[m];
    for (size_t j = 1; j <= m; ++j)
        for (size_t i = 0; i < chebyshev[j].size(); ++i) psi[i] += phi[m - j] * chebyshev[j][i];
    return psi;
}

}  // namespace detail

class TriangleOracle : public GraphOracle {
  public:
    TriangleOracle(long p, long q, long r) : r_(r) {
        if (p != 2 || q != 3) throw input_error("triangle backend supports signatures (2,3,r)");
        if (r < 7) throw input_error("triangle backend needs r >= 7 (hyperbolic, irrational cos)");
        modulus_ = detail::real_cyclotomic_polynomial(2 * r);
        deg_ = long(modulus_.size()) - 1;

        FElem zero(size_t(deg_), Rat(0)), one = zero, c = zero;
        one[0] = 1;
        c[1] = 1;  // the field generator 2cos(pi/r) itself
        auto neg = [&](const FElem& f) {
            FElem g = f;
            for (auto& t : g) t = -t;
            return g;
        };
        Mat s1{neg(one), zero, c, zero, one, zero, zero, zero, one};
        Mat s2{one, zero, zero, zero, neg(one), one, zero, zero, one};
        Mat s3{one, zero, zero, zero, one, zero, c, one, neg(one)};
        gen_[0] = mat_mul(s1, s2);            // a, order 2
        gen_[1] = mat_mul(s2, s3);            // b, order 3
        gen_[2] = mat_mul(gen_[1], gen_[1]);  // B = b^2 = b^{-1}

        Mat id{one, zero, zero, zero, one, zero, zero, zero, one};
        if (mat_mul(gen_[0], gen_[0]) != id) throw invariant_violation("a is not an involution");
        if (mat_mul(gen_[1], gen_[2]) != id) throw invariant_violation("b^3 is not the identity");
        Mat ab = mat_mul(gen_[0], gen_[1]), pow = id;
        for (long i = 0; i < r_; ++i) pow = mat_mul(pow, ab);
        if (pow != id) throw invariant_violation("(ab)^r is not the identity");
        for (long i = 1; i < r_; ++i) {
            if (i == 1) pow = ab;
            else pow = mat_mul(pow, ab);
            if (pow == id) throw invariant_violation("ab has order below r");
        }

        words_.push_back("");
        mats_.push_back(id);
        word_index_.emplace("", 0);
        mat_index_.emplace(mat_key(id), 0);
        frontier_.push_back(0);
    }

    std::string base() const override { return ""; }

    std::vector<std::string> neighbors(const std::string& v) const override {
        explore_to(long(v.size()) + 1);
        auto it = word_index_.find(v);
        if (it == word_index_.end()) throw input_error("foreign vertex key: " + v);
        std::vector<std::string> out;
        for (int g = 0; g < 3; ++g) {
            Mat m = mat_mul(mats_[size_t(it->second)], gen_[g]);
            out.push_back(words_[size_t(mat_index_.at(mat_key(m)))]);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string canonical_decorated_ball(const std::string& center, long radius,
                                         const std::map<std::string, long>& dec) const override {
        auto levels = detail::ball_levels(*this, center, radius);
        if (dec.size() != levels.size())
            throw input_error("dec domain mismatch: wrong vertex count");
        // left translation family: relative keys via the inverse of center
        Mat inv = identity();
        for (size_t i = center.size(); i-- > 0;) inv = mat_mul(inv, inverse_letter(center[i]));
        explore_to(radius);
        std::vector<std::pair<std::string, long>> rel;
        for (const auto& [k, value] : dec) {
            auto it = word_index_.find(k);
            if (!levels.count(k) || it == word_index_.end())
                throw input_error("dec domain mismatch: key outside ball: " + k);
            Mat m = mat_mul(inv, mats_[size_t(it->second)]);
            rel.emplace_back(words_[size_t(mat_index_.at(mat_key(m)))], value);
        }
        std::sort(rel.begin(), rel.end());
        std::string cert = "r" + std::to_string(radius) + "|";
        for (const auto& [k, value] : rel) {
            cert += k;
            cert += '=';
            cert += std::to_string(value);
            cert += ';';
        }
        return cert;
    }

    std::string name() const override { return "triangle(2,3," + std::to_string(r_) + ")"; }

    // minimal polynomial of 2cos(pi/r), exposed for verification
    const std::vector<Rat>& field_modulus() const { return modulus_; }

    // discovery keys are geodesic, so the distance is the key length of
    // u^{-1} v; anything not discovered within the cap is beyond it
    long distance_capped(const std::string& u, const std::string& v, long cap) const override {
        if (cap < 0) throw input_error("distance cap must be nonnegative");
        Mat m = mat_mul(inverse_matrix(u), matrix_of(v));
        explore_to(cap);
        auto it = mat_index_.find(mat_key(m));
        if (it == mat_index_.end()) return cap + 1;
        long d = long(words_[size_t(it->second)].size());
        return d <= cap ? d : cap + 1;
    }

    bool has_translations() const override { return true; }

    std::string translate(const std::string& g, const std::string& v) const override {
        Mat m = mat_mul(matrix_of(g), matrix_of(v));
        explore_to(long(g.size() + v.size()));
        return words_[size_t(mat_index_.at(mat_key(m)))];
    }

    std::string invert(const std::string& g) const override {
        // |g^{-1}| = |g|, so matrix_of's exploration already covers the key
        return words_[size_t(mat_index_.at(mat_key(inverse_matrix(g))))];
    }

  private:
    long r_;
    long deg_ = 0;
    std::vector<Rat> modulus_;

    using FElem = std::vector<Rat>;       // coefficients, length deg_
    using Mat = std::array<FElem, 9>;     // row-major 3x3

    Mat gen_[3];

    // breadth-first tables, lazily extended; explored_len_ is the length up
    // to which every group element has been discovered
    mutable std::vector<std::string> words_;
    mutable std::vector<Mat> mats_;
    mutable std::map<std::string, int> word_index_;
    mutable std::map<std::string, int> mat_index_;
    mutable std::vector<int> frontier_;
    mutable long explored_len_ = 0;

    static char letter(int g) { return g == 0 ? 'a' : g == 1 ? 'b' : 'B'; }

    const Mat& inverse_letter(char c) const {
        if (c == 'a') return gen_[0];
        if (c == 'b') return gen_[2];
        if (c == 'B') return gen_[1];
        throw input_error(std::string("foreign vertex key letter '") + c + "'");
    }

    // strict key validation: only BFS discovery words are accepted
    const Mat& matrix_of(const std::string& v) const {
        explore_to(long(v.size()));
        auto it = word_index_.find(v);
        if (it == word_index_.end()) throw input_error("foreign vertex key: " + v);
        return mats_[size_t(it->second)];
    }

    Mat inverse_matrix(const std::string& u) const {
        matrix_of(u);
        Mat inv = identity();
        for (size_t i = u.size(); i-- > 0;) inv = mat_mul(inv, inverse_letter(u[i]));
        return inv;
    }

    Mat identity() const {
        FElem zero(size_t(deg_), Rat(0)), one = zero;
        one[0] = 1;
        return Mat{one, zero, zero, zero, one, zero, zero, zero, one};
    }

    FElem fe_mul(const FElem& a, const FElem& b) const {
        std::vector<Rat> prod(a.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
        }
        // reduce modulo the monic minimal polynomial
        for (size_t d = prod.size(); d-- > size_t(deg_);) {
            Rat c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (size_t i = 0; i < size_t(deg_); ++i) prod[d - size_t(deg_) + i] -= c * modulus_[i];
        }
        prod.resize(size_t(deg_), Rat(0));
        return prod;
    }

    Mat mat_mul(const Mat& x, const Mat& y) const {
        FElem zero(size_t(deg_), Rat(0));
        Mat z;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                FElem acc = zero;
                for (int k = 0; k < 3; ++k) {
                    FElem t = fe_mul(x[size_t(3 * i + k)], y[size_t(3 * k + j)]);
                    for (size_t u = 0; u < acc.size(); ++u) acc[u] += t[u];
                }
                z[size_t(3 * i + j)] = std::move(acc);
            }
        return z;
    }

    std::string mat_key(const Mat& m) const {
        std::string s;
        for (const auto& e : m)
            for (const auto& c : e) {
                s += to_string(c);
                s += ',';
            }
        return s;
    }

    void explore_to(long len) const {
        while (explored_len_ < len && !frontier_.empty()) {
            std::vector<int> next;
            for (int idx : frontier_)
                for (int g = 0; g < 3; ++g) {
                    Mat m = mat_mul(mats_[size_t(idx)], gen_[g]);
                    std::string key = mat_key(m);
                    if (mat_index_.count(key)) continue;
                    int id = int(words_.size());
                    words_.push_back(words_[size_t(idx)] + letter(g));
                    mats_.push_back(std::move(m));
                    word_index_.emplace(words_.back(), id);
                    mat_index_.emplace(std::move(key), id);
                    next.push_back(id);
                }
            frontier_ = std::move(next);
            ++explored_len_;
        }
        if (frontier_.empty()) explored_len_ = std::max(explored_len_, len);
    }
};

}  // namespace hyperbolike
