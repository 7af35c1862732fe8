#pragma once

// Root machinery for growth analysis. The dominant growth rate is isolated
// exactly (Sturm bisection on the reversed denominator); the full complex
// root set is located numerically with per-root error radii, which is enough
// for modulus comparisons and root-of-unity ratio detection.

#include "hyperbolike/numeric.hpp"
#include "hyperbolike/poly.hpp"

#include <algorithm>
#include <complex>
#include <vector>

namespace hyperbolike {

struct DominantRoot {
    Rat lo, hi;               // isolating interval of lambda, exact
    Poly minimal_factor;      // squarefree integer factor with lambda as a simple root
    int multiplicity = 1;     // multiplicity of lambda in the reversed denominator
    bool simple = true;       // multiplicity == 1, certified by exact gcd
    int same_modulus_count = 1;  // complex roots with |z| within tol of lambda (incl. lambda)
    int larger_modulus_count = 0;  // numeric red-flag: roots with modulus > lambda
    double approx = 0.0;
};

// Durand-Kerner iteration; deterministic start, no randomness. Returns the
// roots of p (not necessarily squarefree callers should deflate multiplicity
// themselves via squarefree decomposition).
inline std::vector<std::complex<double>> complex_roots(const Poly& p, int iterations = 400) {
    long d = p.degree();
    std::vector<std::complex<double>> z;
    if (d < 1) return z;
    std::vector<std::complex<double>> c(size_t(d) + 1);
    for (long i = 0; i <= d; ++i) c[size_t(i)] = std::complex<double>(to_double(p.coeff(size_t(i))), 0.0);
    for (long i = 0; i <= d; ++i) c[size_t(i)] /= std::complex<double>(to_double(p.leading()), 0.0);
    z.resize(size_t(d));
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    double radius = 1.0 + to_double(cauchy_root_bound(p));
    for (long i = 0; i < d; ++i) {
        acc *= seed;
        z[size_t(i)] = acc * (radius / std::abs(acc)) * (0.5 + 0.4 * double(i) / double(d));
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    };
    for (int it = 0; it < iterations; ++it) {
        double moved = 0;
        for (long i = 0; i < d; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (long j = 0; j < d; ++j)
                if (j != i) denom *= (z[size_t(i)] - z[size_t(j)]);
            if (std::abs(denom) < 1e-300) continue;
            std::complex<double> delta = eval(z[size_t(i)]) / denom;
            z[size_t(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-15) break;
    }
    return z;
}

// at least one root of p lies within deg(p) * |p(z)/p'(z)| of z
inline double root_error_radius(const Poly& p, std::complex<double> z) {
    std::complex<double> v = p.eval(z);
    std::complex<double> dv = p.derivative().eval(z);
    if (std::abs(dv) < 1e-300) return 1e300;
    return double(p.degree()) * std::abs(v / dv);
}

// Largest positive real root of den.reversed(), i.e. the reciprocal of the
// smallest-modulus pole when that pole is real positive. Throws input_error
// when no positive real root exists.
inline DominantRoot dominant_real_root(const Poly& den, const Rat& width = Rat(1, Int("1000000000000000000000000")),
                                       double modulus_tol = 1e-9) {
    if (den.degree() < 1) throw input_error("dominant root of a constant denominator");
    Poly rev = den.reversed();
    // drop the t^k factor coming from leading zero coefficients of rev
    {
        std::vector<Rat> c = rev.coeffs();
        size_t k = 0;
        while (k < c.size() && c[k] == 0) ++k;
        rev = Poly(std::vector<Rat>(c.begin() + long(k), c.end()));
    }
    if (rev.degree() < 1) throw input_error("no positive real root: reversed denominator is constant");
    Rat bound = cauchy_root_bound(rev);
    auto roots = isolate_real_roots(rev, Rat(0), bound);
    if (roots.empty()) throw input_error("no positive real root in reversed denominator");
    RootInterval iv = roots.back();  // isolate_real_roots sorts ascending
    Poly sf = squarefree_part(rev);
    iv = refine_root(sf, iv, width);

    DominantRoot out;
    out.lo = iv.lo;
    out.hi = iv.hi;
    out.approx = 0.5 * (to_double(iv.lo) + to_double(iv.hi));

    // multiplicity: exactly one factor of the squarefree decomposition has a
    // root in a sufficiently refined isolating interval
    auto factors = squarefree_decomposition(rev);
    int mult = 0;
    Poly carrier;
    RootInterval probe = iv;
    for (int rounds = 0; rounds < 4096; ++rounds) {
        int hits = 0;
        for (size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].degree() < 1) continue;
            if (sturm_count(sturm_chain(factors[i]), probe.lo, probe.hi) > 0) {
                ++hits;
                mult = int(i) + 1;
                carrier = factors[i];
            }
        }
        if (hits == 1) break;
        probe = refine_root(sf, probe, (probe.hi - probe.lo) / 4);
        mult = 0;
    }
    if (mult == 0) throw invariant_violation("failed to attribute dominant root to a squarefree factor");
    out.multiplicity = mult;
    out.simple = (mult == 1);
    out.minimal_factor = carrier.integer_normalized();

    // numeric modulus census over all roots, counted with multiplicity
    double lam = out.approx;
    int same = 0, larger = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        for (auto z : complex_roots(factors[i])) {
            double m = std::abs(z);
            if (std::abs(m - lam) <= modulus_tol * std::max(1.0, lam)) same += int(i) + 1;
            else if (m > lam * (1.0 + modulus_tol)) larger += int(i) + 1;
        }
    }
    out.same_modulus_count = std::max(same, 1);
    out.larger_modulus_count = larger;
    return out;
}

}  // namespace hyperbolike
