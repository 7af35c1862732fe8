#pragma once

// Minimal linear recurrence fitting over exact rationals (Berlekamp-Massey)
// and reconstruction of rational generating functions from coefficient
// sequences. A failed fit is an ordinary value, never an exception: callers
// must be able to report NoFit alongside the raw counts.

#include "hyperbolike/numeric.hpp"
#include "hyperbolike/poly.hpp"
#include "hyperbolike/ratfun.hpp"

#include <optional>
#include <vector>

namespace hyperbolike {

// s_n = sum_{i=1..order} coeffs[i-1] * s_{n-i} for all n >= max(order, prefix)
struct LinearRecurrence {
    long order = 0;
    std::vector<Rat> coeffs;
    std::vector<Rat> initial;  // s_0 .. s_{max(order,prefix)-1}
    long prefix = 0;           // first index from which the recurrence is guaranteed
};

struct RecurrenceFit {
    RatFun fun;
    LinearRecurrence rec;
};

// Minimal LFSR for a sequence. The connection polynomial can end in zero
// coefficients (so deg C < order); the order is what certifies from which
// index the recurrence holds, and must not be inferred from the degree.
struct BerlekampMassey {
    Poly connection;  // C with C(0) = 1
    long order = 0;   // minimal L with sum_{i=0..L} C_i s_{n-i} = 0 for L <= n < |s|
};

inline BerlekampMassey berlekamp_massey(const std::vector<Rat>& s) {
    std::vector<Rat> C{1}, B{1};
    long L = 0, m = 1;
    Rat b = 1;
    for (size_t n = 0; n < s.size(); ++n) {
        Rat d = s[n];
        for (size_t i = 1; i < C.size() && i <= n; ++i) d += C[i] * s[n - i];
        if (d == 0) {
            ++m;
            continue;
        }
        Rat coef = d / b;
        if (2 * L <= long(n)) {
            std::vector<Rat> T = C;
            if (C.size() < B.size() + size_t(m)) C.resize(B.size() + size_t(m), Rat(0));
            for (size_t i = 0; i < B.size(); ++i) C[i + size_t(m)] -= coef * B[i];
            L = long(n) + 1 - L;
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            if (C.size() < B.size() + size_t(m)) C.resize(B.size() + size_t(m), Rat(0));
            for (size_t i = 0; i < B.size(); ++i) C[i + size_t(m)] -= coef * B[i];
            ++m;
        }
    }
    return {Poly(std::move(C)), L};
}

inline LinearRecurrence recurrence_of(const RatFun& f, const std::vector<Rat>& seq) {
    LinearRecurrence rec;
    rec.order = std::max<long>(f.den().degree(), 0);
    Rat d0 = f.den().coeff(0);
    for (long i = 1; i <= rec.order; ++i) rec.coeffs.push_back(-f.den().coeff(size_t(i)) / d0);
    rec.prefix = std::max<long>(0, f.num().degree() - f.den().degree() + 1);
    long keep = std::max(rec.order, rec.prefix);
    for (long i = 0; i < keep && size_t(i) < seq.size(); ++i) rec.initial.push_back(seq[size_t(i)]);
    return rec;
}

// Fits the minimal rational function reproducing seq. The last `guard` terms
// are withheld from the fit and must be reproduced exactly, otherwise the
// result is treated as spurious. An exceptional prefix is absorbed into the
// numerator (its degree may exceed the denominator's). Requires
// |seq| >= 2*max_order + guard so the fit window can certify max_order.
inline std::optional<RecurrenceFit> rational_from_recurrence(const std::vector<Rat>& seq,
                                                             long max_order, long guard) {
    if (max_order < 0 || guard < 0) throw input_error("negative fit budget");
    if (long(seq.size()) < 2 * max_order + guard)
        throw input_error("sequence too short for requested order: need >= " +
                          std::to_string(2 * max_order + guard) + " terms, have " +
                          std::to_string(seq.size()));
    std::vector<Rat> fit_part(seq.begin(), seq.end() - guard);
    BerlekampMassey bm = berlekamp_massey(fit_part);
    long L = bm.order;
    if (L > max_order) return std::nullopt;
    const Poly& C = bm.connection;
    // The recurrence is only certified from index L on, so the numerator is
    // the truncation of S*C below degree L. Its degree can exceed deg C when
    // the sequence has an exceptional prefix.
    std::vector<Rat> numc(size_t(std::max<long>(L, 1)), Rat(0));
    for (long k = 0; k < L; ++k) {
        Rat acc = 0;
        for (long i = 0; i <= k && i <= C.degree(); ++i) acc += C.coeff(size_t(i)) * fit_part[size_t(k - i)];
        numc[size_t(k)] = acc;
    }
    RatFun f(Poly(std::move(numc)), C);
    if (seq.empty()) return RecurrenceFit{f, recurrence_of(f, seq)};
    std::vector<Rat> check = f.expand(seq.size() - 1);
    for (size_t i = 0; i < seq.size(); ++i)
        if (check[i] != seq[i]) return std::nullopt;
    return RecurrenceFit{f, recurrence_of(f, seq)};
}

// Tries each candidate denominator in order: the numerator is the truncated
// product seq * D, accepted only when that product has a zero tail of at
// least `guard` + deg(D) trailing coefficients (so the reconstruction is
// overdetermined, not merely interpolated).
inline std::optional<RecurrenceFit> fit_with_denominators(const std::vector<Rat>& seq,
                                                          const std::vector<Poly>& candidates,
                                                          long guard) {
    if (guard < 0) throw input_error("negative fit budget");
    for (const auto& D : candidates) {
        if (D.is_zero() || D.coeff(0) == 0) continue;
        long len = long(seq.size());
        if (D.degree() + guard >= len) continue;
        std::vector<Rat> prod(size_t(len), Rat(0));
        for (long k = 0; k < len; ++k) {
            Rat acc = 0;
            for (long i = 0; i <= k && i <= D.degree(); ++i) acc += D.coeff(size_t(i)) * seq[size_t(k - i)];
            prod[size_t(k)] = acc;
        }
        long last_nonzero = -1;
        for (long k = 0; k < len; ++k)
            if (prod[size_t(k)] != 0) last_nonzero = k;
        if (last_nonzero >= len - guard - D.degree()) continue;
        prod.resize(size_t(last_nonzero + 1));
        RatFun f(Poly(std::move(prod)), D);
        std::vector<Rat> check = f.expand(seq.size() - 1);
        if (check != seq) continue;
        return RecurrenceFit{f, recurrence_of(f, seq)};
    }
    return std::nullopt;
}

}  // namespace hyperbolike
