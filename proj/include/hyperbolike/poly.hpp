#pragma once

// Dense univariate polynomials over the rationals: arithmetic, exact gcd,
// Yun square-free decomposition, Sturm chains and real-root isolation.
// Coefficient index i is the coefficient of t^i; the zero polynomial is the
// empty vector, so degree() of zero is -1.

#include "hyperbolike/numeric.hpp"

#include <algorithm>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace hyperbolike {

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    static Poly constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }
    // t^k with coefficient v
    static Poly monomial(const Rat& v, size_t k) {
        std::vector<Rat> c(k + 1);
        c[k] = v;
        return Poly(std::move(c));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    // coefficient of t^i, zero beyond the stored range
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

    const Rat& leading() const {
        if (c_.empty()) throw input_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<Rat> r(c_);
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) {
                if (o.c_[j] == 0) continue;
                r[i + j] += c_[i] * o.c_[j];
            }
        }
        return Poly(std::move(r));
    }
    Poly operator*(const Rat& s) const {
        if (s == 0) return Poly();
        std::vector<Rat> r(c_);
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }

    // exact euclidean division; throws on zero divisor
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw input_error("polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly(), a};
        std::vector<Rat> rem = a.c_;
        std::vector<Rat> quo(a.degree() - b.degree() + 1, Rat(0));
        const Rat& lead = b.leading();
        for (long k = a.degree() - b.degree(); k >= 0; --k) {
            Rat q = rem[k + b.degree()] / lead;
            quo[k] = q;
            if (q == 0) continue;
            for (long j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.c_[j];
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }
    Poly operator/(const Poly& o) const { return divmod(*this, o).first; }
    Poly operator%(const Poly& o) const { return divmod(*this, o).second; }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(Int(i));
        return Poly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    std::complex<double> eval(const std::complex<double>& x) const {
        std::complex<double> acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
        return acc;
    }

    // t^deg * p(1/t); roots map to their reciprocals (zero roots drop out)
    Poly reversed() const {
        std::vector<Rat> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        return *this * (Rat(1) / leading());
    }

    // scale to integer coefficients with content 1 and positive leading term
    Poly integer_normalized() const {
        if (is_zero()) return Poly();
        Int den_lcm = 1;
        for (const auto& v : c_) den_lcm = int_lcm(den_lcm, rat_den(v));
        Int content = 0;
        std::vector<Rat> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            Int num = rat_num(c_[i]) * (den_lcm / rat_den(c_[i]));
            r[i] = Rat(num);
            content = int_gcd(content, int_abs(num));
        }
        if (content == 0) content = 1;
        if (r.back() < 0) content = -content;
        for (auto& v : r) v /= Rat(content);
        return Poly(std::move(r));
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rat v = c_[i];
            if (!out.empty()) {
                out += (v < 0) ? " - " : " + ";
                v = rat_abs(v);
            } else if (v < 0) {
                out += "-";
                v = -v;
            }
            if (i == 0) {
                out += to_string(v);
            } else {
                if (v != 1) out += to_string(v) + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

// monic gcd; gcd(0,0) = 0
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

// Yun's algorithm: returns factors f[i] (monic, squarefree, pairwise coprime)
// such that p = lc * prod f[i]^(i+1).
inline std::vector<Poly> squarefree_decomposition(const Poly& p) {
    std::vector<Poly> out;
    if (p.degree() <= 0) return out;
    Poly a = p.monic();
    Poly g = poly_gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.push_back(a);
        return out;
    }
    Poly w = a / g;
    Poly y = a.derivative() / g;
    Poly z = y - w.derivative();
    while (!z.is_zero()) {
        Poly f = poly_gcd(w, z);
        out.push_back(f);
        w = w / f;
        y = z / f;
        z = y - w.derivative();
    }
    out.push_back(w);
    // trim trailing trivial factors but keep positional multiplicity
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    for (auto& f : out)
        if (f.is_zero()) f = Poly::constant(1);
    return out;
}

inline Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.monic();
    Poly g = poly_gcd(p, p.derivative());
    return (p / g).monic();
}

// Sturm chain of a squarefree polynomial
inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        Poly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline int sturm_sign_changes(const std::vector<Poly>& chain, const Rat& x) {
    int changes = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// number of distinct real roots of the (squarefree) chain head in (a, b]
inline int sturm_count(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    return sturm_sign_changes(chain, a) - sturm_sign_changes(chain, b);
}

// 1 + max |c_i / c_d|: every complex root has modulus below this
inline Rat cauchy_root_bound(const Poly& p) {
    if (p.degree() < 1) return Rat(1);
    Rat m = 0;
    for (long i = 0; i < p.degree(); ++i) {
        Rat v = rat_abs(p.coeff(i) / p.leading());
        if (v > m) m = v;
    }
    return m + 1;
}

struct RootInterval {
    Rat lo, hi;  // half-open (lo, hi], exactly one root inside
};

// isolating intervals for all distinct real roots of p in (lo, hi];
// p need not be squarefree (the squarefree part is used)
inline std::vector<RootInterval> isolate_real_roots(const Poly& p, Rat lo, Rat hi) {
    std::vector<RootInterval> out;
    Poly sf = squarefree_part(p);
    if (sf.degree() < 1) return out;
    auto chain = sturm_chain(sf);
    struct Seg {
        Rat a, b;
        int count;
    };
    std::vector<Seg> stack;
    int total = sturm_count(chain, lo, hi);
    if (total > 0) stack.push_back({lo, hi, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 1) {
            out.push_back({s.a, s.b});
            continue;
        }
        Rat mid = (s.a + s.b) / 2;
        int left = sturm_count(chain, s.a, mid);
        int right = s.count - left;
        if (right > 0) stack.push_back({mid, s.b, right});
        if (left > 0) stack.push_back({s.a, mid, left});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) {
        return x.lo < y.lo;
    });
    return out;
}

// shrink an isolating interval of sf until hi - lo <= width
inline RootInterval refine_root(const Poly& sf, RootInterval iv, const Rat& width) {
    auto chain = sturm_chain(sf);
    while (iv.hi - iv.lo > width) {
        Rat mid = (iv.lo + iv.hi) / 2;
        if (sturm_count(chain, iv.lo, mid) == 1) iv.hi = mid;
        else iv.lo = mid;
    }
    return iv;
}

}  // namespace hyperbolike
