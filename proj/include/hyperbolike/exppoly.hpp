#pragma once

// Decomposes the coefficients of a rational function into exponential
// polynomials: f_n = sum_j P_j(n) * alpha_j^(-n) for n >= n0, where alpha_j
// runs over the poles and deg P_j = order(alpha_j) - 1. Pole orders are exact
// (squarefree decomposition); pole locations are exact for rational poles and
// numeric with error radii otherwise. When every pole is rational the P_j are
// solved exactly; otherwise a complex linear solve is used and validated by a
// reconstruction check over a window of exact coefficients.

#include "hyperbolike/numeric.hpp"
#include "hyperbolike/poly.hpp"
#include "hyperbolike/ratfun.hpp"
#include "hyperbolike/roots.hpp"

#include <algorithm>
#include <complex>
#include <type_traits>
#include <vector>

namespace hyperbolike {

struct PoleTerm {
    bool exact = false;
    Rat alpha_rat;                     // filled when exact
    std::complex<double> alpha;        // always filled
    double alpha_err = 0.0;            // numeric error radius, 0 for exact poles
    int order = 1;
    std::vector<Rat> coeff_exact;      // P_j coefficients, lowest degree first (exact path)
    std::vector<std::complex<double>> coeff_num;  // numeric path
};

struct ExpPolyDecomposition {
    long n0 = 0;
    bool exact = false;
    std::vector<PoleTerm> poles;
    double reconstruction_error = 0.0;  // max abs residual over the check window (numeric path)
};

namespace detail {

// divisors of |n| assembled from trial-division primes; a residual cofactor
// beyond the sieve bound participates as an opaque unit so nothing silently
// disappears, though roots with huge prime numerators may be missed
inline std::vector<Int> small_divisors(Int n, long long sieve_bound = 1000000) {
    std::vector<Int> divs{1};
    n = int_abs(n);
    if (n == 0) return divs;
    for (long long p = 2; p <= sieve_bound && Int(p) * p <= n; ++p) {
        if (n % p != 0) continue;
        size_t base = divs.size();
        Int pk = 1;
        while (n % p == 0) {
            n /= p;
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    if (n > 1) {
        size_t base = divs.size();
        for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * n);
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

// all rational roots of p, each deflated out of p
inline std::vector<Rat> extract_rational_roots(Poly& p) {
    std::vector<Rat> roots;
    if (p.degree() < 1) return roots;
    Poly ip = p.integer_normalized();
    // strip roots at zero first
    while (ip.degree() >= 1 && ip.coeff(0) == 0) {
        roots.push_back(Rat(0));
        std::vector<Rat> c(ip.coeffs().begin() + 1, ip.coeffs().end());
        ip = Poly(std::move(c));
    }
    if (ip.degree() >= 1) {
        auto nums = small_divisors(rat_num(ip.coeff(0)));
        auto dens = small_divisors(rat_num(ip.leading()));
        for (const Int& q : dens) {
            for (const Int& pn : nums) {
                for (int s : {1, -1}) {
                    Rat cand(s * pn, q);
                    while (ip.degree() >= 1 && ip.eval(cand) == 0) {
                        roots.push_back(cand);
                        // deflate by (t - cand)
                        ip = Poly::divmod(ip, Poly{-cand, Rat(1)}).first;
                    }
                }
                if (ip.degree() < 1) break;
            }
            if (ip.degree() < 1) break;
        }
    }
    p = ip;
    return roots;
}

template <class Scalar>
inline std::vector<Scalar> solve_linear(std::vector<std::vector<Scalar>> A, std::vector<Scalar> b) {
    size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv;
        if constexpr (std::is_same_v<Scalar, Rat>) {
            piv = col;
            while (piv < n && A[piv][col] == 0) ++piv;
        } else {
            piv = n;
            double best = 0;
            for (size_t r = col; r < n; ++r) {
                double m = std::abs(A[r][col]);
                if (m > best) {
                    best = m;
                    piv = r;
                }
            }
        }
        if (piv >= n) throw invariant_violation("singular linear system in decomposition solve");
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            if (A[r][col] == Scalar(0)) continue;
            Scalar f = A[r][col] / A[col][col];
            for (size_t c2 = col; c2 < n; ++c2) A[r][c2] -= f * A[col][c2];
            b[r] -= f * b[col];
        }
    }
    std::vector<Scalar> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return x;
}

}  // namespace detail

inline ExpPolyDecomposition exp_poly_decompose(const RatFun& f) {
    ExpPolyDecomposition out;
    long d = std::max<long>(f.den().degree(), 0);
    out.n0 = std::max<long>(0, f.num().degree() - d + 1);
    if (d == 0) {
        out.exact = true;
        return out;
    }
    auto factors = squarefree_decomposition(f.den());
    bool all_exact = true;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        Poly rem = factors[i];
        for (const Rat& r : detail::extract_rational_roots(rem)) {
            if (r == 0) throw invariant_violation("pole at zero in normalized rational function");
            PoleTerm pt;
            pt.exact = true;
            pt.alpha_rat = r;
            pt.alpha = std::complex<double>(to_double(r), 0.0);
            pt.order = int(i) + 1;
            out.poles.push_back(std::move(pt));
        }
        if (rem.degree() >= 1) {
            all_exact = false;
            for (auto z : complex_roots(rem)) {
                PoleTerm pt;
                pt.exact = false;
                pt.alpha = z;
                pt.alpha_err = root_error_radius(rem, z);
                pt.order = int(i) + 1;
                out.poles.push_back(std::move(pt));
            }
        }
    }
    out.exact = all_exact;

    // unknowns: per pole, `order` polynomial coefficients
    size_t unknowns = 0;
    for (const auto& pt : out.poles) unknowns += size_t(pt.order);
    if (long(unknowns) != d)
        throw invariant_violation("pole multiset does not match denominator degree");

    std::vector<Rat> coeffs = f.expand(size_t(out.n0 + 3 * d));

    if (all_exact) {
        std::vector<std::vector<Rat>> A(unknowns, std::vector<Rat>(unknowns, Rat(0)));
        std::vector<Rat> b(unknowns);
        for (size_t row = 0; row < unknowns; ++row) {
            long n = out.n0 + long(row);
            size_t col = 0;
            for (const auto& pt : out.poles) {
                Rat ap = rat_pow(pt.alpha_rat, -n);
                Rat np = 1;
                for (int i = 0; i < pt.order; ++i) {
                    A[row][col++] = np * ap;
                    np *= Rat(Int(n));
                }
            }
            b[row] = coeffs[size_t(n)];
        }
        auto x = detail::solve_linear(A, b);
        size_t col = 0;
        for (auto& pt : out.poles) {
            pt.coeff_exact.assign(x.begin() + long(col), x.begin() + long(col) + pt.order);
            col += size_t(pt.order);
        }
        // exact reconstruction check over n0 .. n0+2d
        for (long n = out.n0; n <= out.n0 + 2 * d; ++n) {
            Rat acc = 0;
            for (const auto& pt : out.poles) {
                Rat np = 1, term = 0;
                for (int i = 0; i < pt.order; ++i) {
                    term += pt.coeff_exact[size_t(i)] * np;
                    np *= Rat(Int(n));
                }
                acc += term * rat_pow(pt.alpha_rat, -n);
            }
            if (acc != coeffs[size_t(n)])
                throw invariant_violation("exact exponential-polynomial reconstruction failed");
        }
        return out;
    }

    using C = std::complex<double>;
    std::vector<std::vector<C>> A(unknowns, std::vector<C>(unknowns, C(0)));
    std::vector<C> b(unknowns);
    for (size_t row = 0; row < unknowns; ++row) {
        long n = out.n0 + long(row);
        size_t col = 0;
        for (const auto& pt : out.poles) {
            C ap = std::pow(pt.alpha, C(double(-n), 0.0));
            C np = 1;
            for (int i = 0; i < pt.order; ++i) {
                A[row][col++] = np * ap;
                np *= C(double(n), 0.0);
            }
        }
        b[row] = C(to_double(coeffs[size_t(n)]), 0.0);
    }
    auto x = detail::solve_linear(A, b);
    size_t col = 0;
    for (auto& pt : out.poles) {
        pt.coeff_num.assign(x.begin() + long(col), x.begin() + long(col) + pt.order);
        col += size_t(pt.order);
    }
    double max_err = 0;
    for (long n = out.n0; n <= out.n0 + 2 * d; ++n) {
        C acc = 0;
        for (const auto& pt : out.poles) {
            C np = 1, term = 0;
            for (int i = 0; i < pt.order; ++i) {
                term += pt.coeff_num[size_t(i)] * np;
                np *= C(double(n), 0.0);
            }
            acc += term * std::pow(pt.alpha, C(double(-n), 0.0));
        }
        double ref = to_double(coeffs[size_t(n)]);
        double scale = std::max(1.0, std::abs(ref));
        max_err = std::max(max_err, std::abs(acc - C(ref, 0)) / scale);
    }
    out.reconstruction_error = max_err;
    return out;
}

}  // namespace hyperbolike
