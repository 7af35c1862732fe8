#pragma once

// Accumulation sets of the opposite-series sequence. The polynomial at
// index n collects the backward ratios a_{n-k}/a_n; when the coefficients
// grow like C_[n] lambda^n with C periodic, the polynomials converge along
// residue classes and the limit set is finite. The empirical route watches
// the sequence converge; the analytic route reads the limits off the
// dominant poles of the generating function.

#include "hyperbolike/exppoly.hpp"
#include "hyperbolike/numeric.hpp"
#include "hyperbolike/ratfun.hpp"
#include "hyperbolike/series.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace hyperbolike {

struct OppositeSeriesPoly {
    long n = 0;
    std::vector<Rat> coeffs;  // s^0 .. s^K; coeffs[k] = a_{n-k}/a_n, so coeffs[0] = 1
};

inline OppositeSeriesPoly opposite_series_poly(const std::vector<Rat>& a, long n, long K) {
    if (n < K) throw input_error("opposite series needs n >= K");
    if (n >= long(a.size())) throw input_error("opposite series index beyond the coefficient list");
    OppositeSeriesPoly p;
    p.n = n;
    p.coeffs.reserve(size_t(K) + 1);
    if (a[size_t(n)] == 0) throw input_error("opposite series undefined: zero coefficient at index " +
                                             std::to_string(n));
    for (long k = 0; k <= K; ++k) p.coeffs.push_back(a[size_t(n - k)] / a[size_t(n)]);
    return p;
}

struct OmegaResult {
    long period = 0;                              // N; 0 when nothing converged
    std::vector<std::vector<Rat>> limits;         // per residue class; empty on the numeric path
    std::vector<std::vector<double>> limits_approx;  // always filled alongside period
    long distinct = 0;                            // limit count after merging within tolerance
    bool analytic = false;                        // limits read off poles rather than observed
    bool exact = false;                           // limits are exact rationals
    bool converged = false;
    std::string note;
};

namespace detail {

inline long merge_limit_count(const std::vector<std::vector<double>>& limits, double tol) {
    long n = long(limits.size());
    std::vector<long> rep(size_t(n), 0);
    for (long i = 0; i < n; ++i) rep[size_t(i)] = i;
    auto close = [&](long i, long j) {
        for (size_t k = 0; k < limits[size_t(i)].size(); ++k)
            if (std::abs(limits[size_t(i)][k] - limits[size_t(j)][k]) > tol) return false;
        return true;
    };
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < i; ++j)
            if (rep[size_t(j)] == j && close(i, j)) {
                rep[size_t(i)] = j;
                break;
            }
    long count = 0;
    for (long i = 0; i < n; ++i)
        if (rep[size_t(i)] == i) ++count;
    return count;
}

}  // namespace detail

// Watches the opposite-series polynomials over the tail half of the
// supplied coefficients and reports the least period that makes every
// residue-class subsequence settle coordinatewise within the tolerance.
// The reported limits are the deepest representatives, exact rationals
// with an error bounded by the tolerance, not exact limits.
inline OmegaResult omega_empirical(const std::vector<Rat>& coeffs, long K = 20,
                                   double tol = 1e-9, long N_max = 32) {
    long len = long(coeffs.size());
    if (K < 1) throw input_error("need at least one opposite-series coefficient");
    if (len < 4 * K || len < 100)
        throw input_error("need at least max(4K, 100) coefficients, got " + std::to_string(len));
    long start = len / 2;
    for (long idx = std::max(0L, start - K); idx < len; ++idx)
        if (coeffs[size_t(idx)] == 0)
            throw input_error("zero coefficient at index " + std::to_string(idx) +
                              " inside the evaluation window");

    std::vector<OppositeSeriesPoly> window;
    window.reserve(size_t(len - start));
    for (long n = start; n < len; ++n) window.push_back(opposite_series_poly(coeffs, n, K));

    OmegaResult out;
    for (long N = 1; N <= N_max; ++N) {
        bool settled = true;
        for (long r = 0; r < N && settled; ++r) {
            const OppositeSeriesPoly* prev = nullptr;
            for (const auto& p : window) {
                if (p.n % N != r) continue;
                if (prev) {
                    for (long k = 0; k <= K; ++k)
                        if (std::abs(to_double(p.coeffs[size_t(k)] - prev->coeffs[size_t(k)])) > tol) {
                            settled = false;
                            break;
                        }
                }
                if (!settled) break;
                prev = &p;
            }
            if (!prev) settled = false;  // an empty class certifies nothing
        }
        if (!settled) continue;
        out.period = N;
        out.converged = true;
        out.limits.resize(size_t(N));
        for (auto it = window.rbegin(); it != window.rend(); ++it) {
            auto& slot = out.limits[size_t(it->n % N)];
            if (slot.empty()) slot = it->coeffs;
        }
        for (const auto& series : out.limits) {
            std::vector<double> approx;
            approx.reserve(series.size());
            for (const auto& c : series) approx.push_back(to_double(c));
            out.limits_approx.push_back(std::move(approx));
        }
        out.distinct = detail::merge_limit_count(out.limits_approx, tol);
        return out;
    }
    out.note = "no periodic convergence detected up to period " + std::to_string(N_max);
    return out;
}

namespace detail {

// x^m - 1 with the factors belonging to proper divisors of m divided out
inline Poly cyclotomic(long m) {
    std::vector<Rat> c(size_t(m) + 1, Rat(0));
    c[0] = Rat(-1);
    c[size_t(m)] = Rat(1);
    Poly p{std::move(c)};
    for (long d = 1; d < m; ++d)
        if (m % d == 0) p = p / cyclotomic(d);
    return p;
}

inline bool divides_exactly(const Poly& den, const Poly& factor) {
    if (factor.is_zero() || factor.degree() < 0 || factor.degree() > den.degree()) return false;
    return (den % factor).is_zero();
}

}  // namespace detail

// Reads the accumulation set off the dominant poles of the generating
// function: the period is the least common multiple of the orders of the
// unit-modulus pole ratios, and each residue class gets the limit with
// s^k coefficient (C_[r-k]/C_[r]) lambda^{-k}. Falls back to the empirical
// route when the pole geometry cannot be resolved. When the analytic path
// succeeds it is cross-checked against the empirical result coefficient by
// coefficient.
inline OmegaResult omega_analytic(const RatFun& f, long K = 20, double tol = 1e-9) {
    long terms = std::max(100L, 4 * K);
    std::vector<Rat> coeffs = f.expand(size_t(terms));
    auto fallback = [&](const std::string& why) {
        OmegaResult out = omega_empirical(coeffs, K, tol);
        out.note = why + (out.note.empty() ? "" : "; " + out.note);
        return out;
    };

    ExpPolyDecomposition dec = exp_poly_decompose(f);
    if (dec.poles.empty()) return fallback("no poles: the series is a polynomial");

    double min_mod = 0;
    bool first = true;
    for (const auto& p : dec.poles) {
        double m = std::abs(p.alpha);
        if (first || m < min_mod) min_mod = m, first = false;
    }
    std::vector<const PoleTerm*> dominant;
    for (const auto& p : dec.poles)
        if (std::abs(p.alpha) <= min_mod * (1 + 1e-9) + p.alpha_err) dominant.push_back(&p);

    for (const auto* p : dominant)
        if (p->order > 1)
            return fallback("a dominant pole has order " + std::to_string(p->order) +
                            "; the normalized coefficients need not settle");

    const PoleTerm* principal = nullptr;
    for (const auto* p : dominant) {
        bool positive_real = p->exact ? (p->alpha_rat > 0)
                                      : (std::abs(p->alpha.imag()) < 1e-9 * min_mod && p->alpha.real() > 0);
        if (positive_real) principal = p;
    }
    if (!principal) return fallback("no positive real dominant pole");

    // unit-modulus ratios of the principal pole to the others and their orders
    std::vector<long> orders;
    bool certified = true;
    std::string certify_note;
    for (const auto* p : dominant) {
        std::complex<double> omega = principal->alpha / p->alpha;
        std::complex<double> power(1, 0);
        long order = 0;
        for (long m = 1; m <= 64; ++m) {
            power *= omega;
            if (std::abs(power - std::complex<double>(1, 0)) < 1e-6) {
                order = m;
                break;
            }
        }
        if (order == 0) return fallback("a dominant pole ratio is not a root of unity of order at most 64");
        orders.push_back(order);
        if (p->exact && principal->exact) {
            Rat ratio = principal->alpha_rat / p->alpha_rat;
            if (rat_pow(ratio, order) != 1)
                return fallback("an exact pole ratio fails its detected order");
        } else if (principal->exact) {
            // the claimed order says the pole sits at alpha_1 times a
            // primitive root of unity, so the scaled cyclotomic polynomial
            // must divide the denominator
            Poly phi = detail::cyclotomic(orders.back());
            std::vector<Rat> scaled(size_t(phi.degree()) + 1, Rat(0));
            for (long i = 0; i <= phi.degree(); ++i)
                scaled[size_t(i)] = phi.coeff(size_t(i)) * rat_pow(principal->alpha_rat, phi.degree() - i);
            if (!detail::divides_exactly(f.den(), Poly(std::move(scaled)).integer_normalized()))
                certified = false;
        } else {
            certified = false;
        }
    }
    if (!certified) certify_note = "pole ratio orders detected numerically, not certified exactly; ";

    long N = 1;
    for (long m : orders) N = std::lcm(N, m);

    bool exact_path = true;
    for (const auto* p : dominant)
        if (!p->exact) exact_path = false;

    OmegaResult out;
    out.period = N;
    out.analytic = true;
    out.converged = true;
    out.note = certify_note;

    if (exact_path) {
        // rational poles on one modulus: the ratios are +-1, the class
        // constants and the limits stay rational
        std::vector<Rat> C(size_t(N), Rat(0));
        for (const auto* p : dominant) {
            Rat omega = principal->alpha_rat / p->alpha_rat;
            Rat coefficient = p->coeff_exact.empty() ? Rat(0) : p->coeff_exact[0];
            Rat w(1);
            for (long r = 0; r < N; ++r) {
                C[size_t(r)] += coefficient * w;
                w = w * omega;
            }
        }
        for (long r = 0; r < N; ++r)
            if (C[size_t(r)] == 0)
                return fallback("a residue class has vanishing leading constant");
        out.exact = true;
        for (long r = 0; r < N; ++r) {
            std::vector<Rat> series;
            series.reserve(size_t(K) + 1);
            for (long k = 0; k <= K; ++k) {
                long rk = ((r - k) % N + N) % N;
                series.push_back(C[size_t(rk)] / C[size_t(r)] * rat_pow(principal->alpha_rat, k));
            }
            out.limits.push_back(std::move(series));
        }
        for (const auto& series : out.limits) {
            std::vector<double> approx;
            for (const auto& c : series) approx.push_back(to_double(c));
            out.limits_approx.push_back(std::move(approx));
        }
    } else {
        std::vector<std::complex<double>> C(size_t(N), {0, 0});
        for (const auto* p : dominant) {
            std::complex<double> omega = principal->alpha / p->alpha;
            std::complex<double> coefficient =
                p->exact ? std::complex<double>(to_double(p->coeff_exact.empty() ? Rat(0) : p->coeff_exact[0]), 0)
                         : (p->coeff_num.empty() ? std::complex<double>(0, 0) : p->coeff_num[0]);
            std::complex<double> w(1, 0);
            for (long r = 0; r < N; ++r) {
                C[size_t(r)] += coefficient * w;
                w *= omega;
            }
        }
        double scale = 0;
        for (const auto& c : C) scale = std::max(scale, std::abs(c));
        for (const auto& c : C) {
            if (std::abs(c) < 1e-9 * scale)
                return fallback("a residue class has vanishing leading constant");
            if (std::abs(c.imag()) > 1e-6 * std::abs(c))
                return fallback("a residue-class constant failed to come out real");
        }
        double alpha1 = principal->exact ? to_double(principal->alpha_rat) : principal->alpha.real();
        for (long r = 0; r < N; ++r) {
            std::vector<double> series;
            series.reserve(size_t(K) + 1);
            double pw = 1;
            for (long k = 0; k <= K; ++k) {
                long rk = ((r - k) % N + N) % N;
                series.push_back((C[size_t(rk)] / C[size_t(r)]).real() * pw);
                pw *= alpha1;
            }
            out.limits_approx.push_back(std::move(series));
        }
        out.note += "limits computed in floating point; ";
    }
    out.distinct = detail::merge_limit_count(out.limits_approx, tol);

    OmegaResult emp = omega_empirical(coeffs, K, tol);
    if (emp.converged) {
        if (N % emp.period != 0)
            throw invariant_violation("analytic period " + std::to_string(N) +
                                      " is not a multiple of the observed period " +
                                      std::to_string(emp.period));
        // residue classes are indexed by n mod N; the empirical class of the
        // same residue must carry the same limit
        for (long r = 0; r < N; ++r)
            for (long k = 0; k <= K; ++k) {
                double analytic_val = out.limits_approx[size_t(r)][size_t(k)];
                double empirical_val = emp.limits_approx[size_t(r % emp.period)][size_t(k)];
                if (std::abs(analytic_val - empirical_val) > 10 * tol)
                    throw invariant_violation(
                        "analytic and empirical accumulation series disagree at residue " +
                        std::to_string(r) + ", coefficient " + std::to_string(k));
            }
    } else {
        out.note += "empirical cross-check inconclusive: " + emp.note + "; ";
    }
    return out;
}

}  // namespace hyperbolike
