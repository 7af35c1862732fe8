#include <catch2/catch_amalgamated.hpp>

#include "hyperbolike/exppoly.hpp"
#include "hyperbolike/poly.hpp"
#include "hyperbolike/ratfun.hpp"
#include "hyperbolike/roots.hpp"

#include <complex>

using namespace hyperbolike;

TEST_CASE("dominant root of tree denominator") {
    // den = 1 - 3t: growth rate 3, simple, unique dominant root
    auto root = dominant_real_root(Poly{Rat(1), Rat(-3)});
    CHECK(root.lo < 3);
    CHECK(Rat(3) <= root.hi);
    CHECK(root.simple);
    CHECK(root.multiplicity == 1);
    CHECK(root.same_modulus_count == 1);
    CHECK(root.larger_modulus_count == 0);
    CHECK(root.minimal_factor == Poly{Rat(-3), Rat(1)});
}

TEST_CASE("dominant root flags multiplicity exactly") {
    // den = (1-2t)^2: lambda = 2 with multiplicity 2
    Poly den = Poly{Rat(1), Rat(-2)} * Poly{Rat(1), Rat(-2)};
    auto root = dominant_real_root(den);
    CHECK_FALSE(root.simple);
    CHECK(root.multiplicity == 2);
    CHECK(std::abs(root.approx - 2.0) < 1e-9);
}

TEST_CASE("dominant root counts same-modulus companions") {
    // den = (1-3t)(1+3t): poles at +-1/3, lambda = 3 with companion -3
    Poly den = Poly{Rat(1), Rat(-3)} * Poly{Rat(1), Rat(3)};
    auto root = dominant_real_root(den);
    CHECK(root.simple);
    CHECK(root.same_modulus_count == 2);
    CHECK(std::abs(root.approx - 3.0) < 1e-9);
}

TEST_CASE("no positive real root is an explicit error") {
    CHECK_THROWS_AS(dominant_real_root(Poly{Rat(1), Rat(3)}), input_error);  // root -1/3
}

TEST_CASE("complex roots of cyclotomic-like factors") {
    // t^2 + 1: roots +-i
    auto roots = complex_roots(Poly{Rat(1), Rat(0), Rat(1)});
    REQUIRE(roots.size() == 2);
    for (auto z : roots) {
        CHECK(std::abs(std::abs(z) - 1.0) < 1e-9);
        CHECK(std::abs(std::abs(z.imag()) - 1.0) < 1e-9);
        CHECK(root_error_radius(Poly{Rat(1), Rat(0), Rat(1)}, z) < 1e-9);
    }
}

TEST_CASE("exact decomposition of oscillating growth") {
    // f_n = (2 + (-1)^n) 3^n has generating function with poles 1/3 and -1/3
    // f = 2/(1-3t) + 1/(1+3t)
    RatFun f = RatFun(Poly{Rat(2)}, Poly{Rat(1), Rat(-3)}) +
               RatFun(Poly{Rat(1)}, Poly{Rat(1), Rat(3)});
    auto dec = exp_poly_decompose(f);
    REQUIRE(dec.exact);
    REQUIRE(dec.poles.size() == 2);
    for (const auto& pt : dec.poles) {
        REQUIRE(pt.exact);
        REQUIRE(pt.order == 1);
        if (pt.alpha_rat == Rat(1, 3)) CHECK(pt.coeff_exact == std::vector<Rat>{Rat(2)});
        else {
            CHECK(pt.alpha_rat == Rat(-1, 3));
            CHECK(pt.coeff_exact == std::vector<Rat>{Rat(1)});
        }
    }
}

TEST_CASE("decomposition handles higher order poles") {
    // 1/(1-t)^2: f_n = n + 1
    RatFun f(Poly{Rat(1)}, Poly{Rat(1), Rat(-2), Rat(1)});
    auto dec = exp_poly_decompose(f);
    REQUIRE(dec.exact);
    REQUIRE(dec.poles.size() == 1);
    CHECK(dec.poles[0].order == 2);
    CHECK(dec.poles[0].alpha_rat == Rat(1));
    REQUIRE(dec.poles[0].coeff_exact.size() == 2);
    CHECK(dec.poles[0].coeff_exact[0] == Rat(1));  // constant term of n+1
    CHECK(dec.poles[0].coeff_exact[1] == Rat(1));  // linear term
}

TEST_CASE("numeric decomposition reconstructs coefficients") {
    // den with irrational roots: 1 - t - t^2 (golden ratio growth)
    RatFun f(Poly{Rat(1)}, Poly{Rat(1), Rat(-1), Rat(-1)});
    auto dec = exp_poly_decompose(f);
    CHECK_FALSE(dec.exact);
    REQUIRE(dec.poles.size() == 2);
    CHECK(dec.reconstruction_error < 1e-8);
    for (const auto& pt : dec.poles) CHECK(pt.alpha_err < 1e-8);
}

TEST_CASE("polynomial numerator prefix shifts n0") {
    // t^3/(1-2t): recurrence only from n = 3 on
    RatFun f(Poly{Rat(0), Rat(0), Rat(0), Rat(1)}, Poly{Rat(1), Rat(-2)});
    auto dec = exp_poly_decompose(f);
    CHECK(dec.n0 == 3);
    CHECK(dec.exact);
}
