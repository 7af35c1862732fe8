#pragma once

// Rational generating functions in normalized form. Normalization keeps
// gcd(num, den) = 1, den(0) != 0, and the denominator scaled to coprime
// integer coefficients with positive leading term, so equal functions have
// equal representations.

#include "hyperbolike/numeric.hpp"
#include "hyperbolike/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hyperbolike {

class RatFun {
public:
    RatFun() : num_(), den_(Poly::constant(1)) {}
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    static RatFun from_poly(Poly p) { return RatFun(std::move(p), Poly::constant(1)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun operator+(const RatFun& o) const {
        return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFun operator-(const RatFun& o) const {
        return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFun operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }
    RatFun operator*(const Rat& s) const { return RatFun(num_ * s, den_); }
    RatFun operator/(const RatFun& o) const {
        if (o.is_zero()) throw input_error("division by zero rational function");
        return RatFun(num_ * o.den_, den_ * o.num_);
    }

    // power-series coefficients a_0 .. a_n; exact
    std::vector<Rat> expand(size_t n) const {
        std::vector<Rat> a(n + 1, Rat(0));
        Rat d0 = den_.coeff(0);
        for (size_t k = 0; k <= n; ++k) {
            Rat acc = num_.coeff(k);
            size_t jmax = std::min(k, size_t(den_.degree() < 0 ? 0 : den_.degree()));
            for (size_t j = 1; j <= jmax; ++j) acc -= den_.coeff(j) * a[k - j];
            a[k] = acc / d0;
        }
        return a;
    }

    std::string str() const {
        if (den_ == Poly::constant(1)) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw input_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::constant(1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        if (den_.coeff(0) == 0)
            throw input_error("rational function has a pole at t = 0 after reduction");
        Poly dn = den_.integer_normalized();
        // dn = den / s for the scalar s below; rescale num by the same s
        Rat s = den_.leading() / dn.leading();
        den_ = dn;
        num_ = num_ * (Rat(1) / s);
    }

    Poly num_, den_;
};

inline RatFun operator*(const Rat& s, const RatFun& f) { return f * s; }

// finite Laurent tail sum_{j} c_j t^(min_exp + j); used for principal parts
struct LaurentTail {
    long min_exp = 0;
    std::vector<Rat> coeffs;  // coefficient of t^(min_exp + j)
    bool is_zero() const {
        for (const auto& c : coeffs)
            if (c != 0) return false;
        return true;
    }
};

// splits f(t)/t^n into its principal part at t = 0 and the regular remainder:
//   f/t^n = polar + regular, polar = sum_{j<n} a_j t^(j-n), regular a power series.
inline std::pair<LaurentTail, RatFun> polar_part_at_zero(const RatFun& f, long n) {
    if (n < 0) throw input_error("polar_part_at_zero expects n >= 0");
    LaurentTail polar;
    polar.min_exp = -n;
    if (n == 0) return {polar, f};
    std::vector<Rat> prefix = f.expand(size_t(n - 1));
    polar.coeffs = prefix;
    // regular = (f - prefix_poly) / t^n; the numerator is exactly divisible by t^n
    Poly prefix_poly{std::vector<Rat>(prefix)};
    Poly shifted_num = f.num() - f.den() * prefix_poly;
    std::vector<Rat> c(shifted_num.coeffs());
    for (long j = 0; j < n && j < long(c.size()); ++j) {
        if (c[size_t(j)] != 0) throw invariant_violation("polar split: numerator not divisible by t^n");
    }
    std::vector<Rat> rest(c.begin() + std::min<size_t>(c.size(), size_t(n)), c.end());
    return {polar, RatFun(Poly(std::move(rest)), f.den())};
}

}  // namespace hyperbolike
