#include <catch2/catch_amalgamated.hpp>

#include "hyperbolike/numeric.hpp"
#include "hyperbolike/poly.hpp"
#include "hyperbolike/ratfun.hpp"
#include "hyperbolike/recurrence.hpp"

using namespace hyperbolike;

namespace {
std::vector<Rat> geometric(Rat first, Rat ratio, size_t len) {
    std::vector<Rat> v{first};
    while (v.size() < len) v.push_back(v.back() * ratio);
    return v;
}
}  // namespace

TEST_CASE("ratfun normalization") {
    // (1-t^2)/(1-t) reduces to 1+t with denominator 1
    RatFun f(Poly{Rat(1), Rat(0), Rat(-1)}, Poly{Rat(1), Rat(-1)});
    CHECK(f.num() == Poly{Rat(1), Rat(1)});
    CHECK(f.den() == Poly::constant(1));
    // denominator scaled to coprime integer coefficients, positive leading term
    RatFun g(Poly{Rat(1)}, Poly{Rat(-2), Rat(-6)});
    CHECK(g.den() == Poly{Rat(1), Rat(3)});
    CHECK(g.num() == Poly{Rat(-1, 2)});
    CHECK_THROWS_AS(RatFun(Poly{Rat(1)}, Poly{Rat(0), Rat(1)}), input_error);
}

TEST_CASE("series expansion of tree growth series") {
    // (1+t)/(1-3t) expands to 1, 4, 12, 36, ... (4-regular tree spheres)
    RatFun f(Poly{Rat(1), Rat(1)}, Poly{Rat(1), Rat(-3)});
    auto a = f.expand(5);
    CHECK(a == std::vector<Rat>{Rat(1), Rat(4), Rat(12), Rat(36), Rat(108), Rat(324)});
}

TEST_CASE("ball series is sphere series divided by 1-t") {
    RatFun sphere(Poly{Rat(1), Rat(1)}, Poly{Rat(1), Rat(-3)});
    RatFun ball = sphere / RatFun(Poly{Rat(1), Rat(-1)}, Poly::constant(1));
    auto b = ball.expand(4);
    // partial sums: 1, 5, 17, 53, 161 = 2*3^n - 1
    CHECK(b == std::vector<Rat>{Rat(1), Rat(5), Rat(17), Rat(53), Rat(161)});
}

TEST_CASE("polar part split") {
    RatFun b(Poly{Rat(1), Rat(1)}, Poly{Rat(1), Rat(-3)});  // 1,4,12,36,...
    auto [polar, regular] = polar_part_at_zero(b, 2);
    REQUIRE(polar.coeffs.size() == 2);
    CHECK(polar.min_exp == -2);
    CHECK(polar.coeffs[0] == Rat(1));  // 1/t^2
    CHECK(polar.coeffs[1] == Rat(4));  // 4/t
    auto reg = regular.expand(2);
    CHECK(reg == std::vector<Rat>{Rat(12), Rat(36), Rat(108)});
    auto [p0, r0] = polar_part_at_zero(b, 0);
    CHECK(p0.coeffs.empty());
    CHECK(r0 == b);
}

TEST_CASE("berlekamp-massey recovers minimal recurrences") {
    // fibonacci: order 2
    std::vector<Rat> fib{1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    auto bm = berlekamp_massey(fib);
    CHECK(bm.connection == Poly{Rat(1), Rat(-1), Rat(-1)});
    CHECK(bm.order == 2);
    // geometric with exceptional first term: the order exceeds the degree
    // because the connection polynomial ends in a zero coefficient
    std::vector<Rat> g{1, 4, 12, 36, 108, 324};
    auto bm2 = berlekamp_massey(g);
    CHECK(bm2.order == 2);
    CHECK(bm2.connection == Poly{Rat(1), Rat(-3)});
}

TEST_CASE("rational_from_recurrence with guards") {
    // spheres of the 4-regular tree; fit must recover (1+t)/(1-3t)
    RatFun truth(Poly{Rat(1), Rat(1)}, Poly{Rat(1), Rat(-3)});
    auto seq = truth.expand(20);
    auto fit = rational_from_recurrence(seq, 6, 4);
    REQUIRE(fit.has_value());
    CHECK(fit->fun == truth);
    CHECK(fit->rec.order == 1);
    CHECK(fit->rec.coeffs == std::vector<Rat>{Rat(3)});
    CHECK(fit->rec.prefix == 1);  // first term does not follow the recurrence

    // order cap below the true order must return NoFit as a value
    std::vector<Rat> fib{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
    auto nofit = rational_from_recurrence(fib, 1, 2);
    CHECK_FALSE(nofit.has_value());

    // too-short input is a precondition error, not NoFit
    CHECK_THROWS_AS(rational_from_recurrence(std::vector<Rat>{1, 2}, 3, 2), input_error);
}

TEST_CASE("fit rejects sequences that stop obeying the recurrence") {
    auto seq = geometric(Rat(1), Rat(2), 16);
    seq.back() += 1;  // corrupt a guard term
    auto fit = rational_from_recurrence(seq, 4, 3);
    CHECK_FALSE(fit.has_value());
}

TEST_CASE("eventually zero sequences fit to polynomials") {
    std::vector<Rat> seq{1, 1, 0, 0, 0, 0, 0, 0, 0, 0};
    auto fit = rational_from_recurrence(seq, 3, 2);
    REQUIRE(fit.has_value());
    CHECK(fit->fun == RatFun::from_poly(Poly{Rat(1), Rat(1)}));
}

TEST_CASE("candidate denominator fitting") {
    RatFun truth(Poly{Rat(2), Rat(1)}, Poly{Rat(1), Rat(-2), Rat(0), Rat(1)});
    auto seq = truth.expand(24);
    std::vector<Poly> cands{Poly{Rat(1), Rat(-1)}, Poly{Rat(1), Rat(-2), Rat(0), Rat(1)}};
    auto fit = fit_with_denominators(seq, cands, 4);
    REQUIRE(fit.has_value());
    CHECK(fit->fun == truth);
    // candidates that cannot reproduce the series are skipped, not forced
    auto nofit = fit_with_denominators(seq, {Poly{Rat(1), Rat(-1)}}, 4);
    CHECK_FALSE(nofit.has_value());
}
