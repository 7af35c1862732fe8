#pragma once

// Exact integer and rational arithmetic used throughout the library.
// All counting and series coefficients are exact; floating point appears
// only in clearly marked numeric diagnostics (root locations, tolerances).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperbolike {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error taxonomy mirrored by the CLI exit codes: input_error -> 4,
// invariant_violation -> 2, budget_exceeded -> 3.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invariant_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

inline std::string to_string(const Int& n) { return n.str(); }

// canonical "p" or "p/q" form, q > 0
inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

// accepts "p", "p/q", and decimal literals like "-1.25" or "2e3"
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0) throw input_error("zero denominator in rational literal: " + s);
            if (den < 0) { num = -num; den = -den; }
            return Rat(num, den);
        }
        if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
            s.find('E') == std::string::npos) {
            return Rat(Int(s));
        }
        // decimal / scientific form: mantissa digits over a power of ten
        std::string t = s;
        long exp10 = 0;
        auto epos = t.find_first_of("eE");
        if (epos != std::string::npos) {
            exp10 = std::stol(t.substr(epos + 1));
            t = t.substr(0, epos);
        }
        auto dot = t.find('.');
        if (dot != std::string::npos) {
            exp10 -= static_cast<long>(t.size() - dot - 1);
            t.erase(dot, 1);
        }
        if (t.empty() || t == "-" || t == "+") throw input_error("bad rational literal: " + s);
        Rat v{Int(t)};
        Int p10 = 1;
        for (long i = 0; i < (exp10 < 0 ? -exp10 : exp10); ++i) p10 *= 10;
        if (exp10 >= 0) v *= Rat(p10);
        else v /= Rat(p10);
        return v;
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("bad rational literal: " + s);
    }
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

inline int sign(const Rat& q) { return q == 0 ? 0 : (q < 0 ? -1 : 1); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) return Rat(int_pow(rat_num(base), unsigned(e)), int_pow(rat_den(base), unsigned(e)));
    if (base == 0) throw input_error("zero to negative power");
    return Rat(1) / rat_pow(base, -e);
}

}  // namespace hyperbolike
