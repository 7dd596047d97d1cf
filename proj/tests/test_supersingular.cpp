#include <doctest.h>

#include "fricke/errors.hpp"
#include "fricke/factor.hpp"
#include "fricke/supersingular.hpp"
#include "oracles.hpp"

using namespace fricke;

namespace {

ModPoly mp(u64 p, const char* text, char v = 'X') {
    return evaluate(text, constants()).to_int_poly(v).reduce(PrimeField{PrimeModulus(p)});
}

int half(long long d, u64 p) { return (1 - oracle::legendre_by_squares(d, p)) / 2; }

}  // namespace

TEST_CASE("character vectors") {
    auto c11 = characters(11);
    CHECK(c11.delta == 1);
    CHECK(c11.epsilon == 1);
    CHECK(c11.mu2 == 0);
    CHECK(c11.mu5 == 1);
    CHECK(c11.mu7 == 0);  // -7 = 4 = 2^2 mod 11
    auto c13 = characters(13);
    CHECK(c13.delta == 0);
    CHECK(c13.epsilon == 0);
    CHECK(c13.mu5 == 1);
    auto c7 = characters(7);
    CHECK(c7.delta == 0);
    CHECK(c7.epsilon == 1);
    CHECK(c7.mu2 == 1);
    CHECK(c7.mu5 == 0);
    CHECK(!c7.mu7.has_value());
    CHECK_THROWS_AS(c7.exponent(Selector::Mu7), std::domain_error);
    CHECK(!characters(5).mu5.has_value());
    CHECK_THROWS(characters(3));
    CHECK_THROWS(characters(9));
    for (u64 p = 5; p < 300; ++p) {
        if (!is_prime(p)) continue;
        const auto c = characters(p);
        CHECK(c.delta == half(-3, p));
        CHECK(c.epsilon == half(-4, p));
        CHECK(*c.mu2 == half(-2, p));
        if (p != 5) CHECK(*c.mu5 == half(-5, p));
        if (p != 7) CHECK(*c.mu7 == half(-7, p));
    }
}

TEST_CASE("ss_p examples") {
    CHECK(ss_poly(2) == mp(2, "X"));
    CHECK(ss_poly(3) == mp(3, "X"));
    CHECK(ss_poly(5) == mp(5, "X"));
    CHECK(ss_poly(7) == mp(7, "X+1"));
    CHECK(ss_poly(11) == mp(11, "X^2+10X"));
    CHECK(ss_poly(13) == mp(13, "X+8"));
    CHECK(ss_poly(37) == mp(37, "X^3+23X^2+5X+11"));
    CHECK(ss_poly(37) == mp(37, "(X+29)(X^2+31X+31)"));
    CHECK_THROWS(ss_poly(15));
}

TEST_CASE("Hasse oracle examples") {
    CHECK(ss_poly_hasse_oracle(5) == mp(5, "X"));
    CHECK(ss_poly_hasse_oracle(7) == mp(7, "X+1"));
    CHECK(ss_poly_hasse_oracle(13) == mp(13, "X+8"));
    CHECK_THROWS(ss_poly_hasse_oracle(2003));
}

TEST_CASE("closed form equals the Hasse oracle for p < 100") {
    for (u64 p = 5; p < 100; ++p)
        if (is_prime(p)) CHECK(ss_poly(p) == ss_poly_hasse_oracle(p));
}

TEST_CASE("degree of ss_p and splitting over F_{p^2} up to 2000") {
    for (u64 p = 5; p <= 2000; ++p) {
        if (!is_prime(p)) continue;
        const auto c = characters(p);
        const ModPoly s = ss_poly(p);
        CHECK(s.is_monic());
        CHECK(s.degree() == static_cast<int>((p - 1 - 4 * c.delta - 6 * c.epsilon) / 12) + c.delta + c.epsilon);
        for (const auto& [g, m] : factor(s).factors) {
            CHECK(g.degree() <= 2);
            CHECK(m == 1);
        }
    }
}

TEST_CASE("Fricke polynomials: examples") {
    CHECK(fricke_ss(5, 7) == mp(7, "Y(Y+3)", 'Y'));
    CHECK(fricke_ss(7, 5) == mp(5, "Y(Y+1)(Y+3)", 'Y'));
    CHECK(fricke_ss(3, 5) == mp(5, "Y(Y+2)", 'Y'));  // t = x + 729/x + 54 at x = -27, -3
    CHECK(fricke_ss(5, 11) == mp(11, "Y(Y+3)(Y+4)(Y+7)", 'Y'));
    CHECK(fricke_ss(7, 13) == mp(13, "(Y+1)(Y+5)(Y+12)(Y^2+10Y+5)", 'Y'));
    CHECK(fricke_ss(7, 13, FrickeMethod::Theorem) == fricke_ss(7, 13));
    CHECK_THROWS_AS(fricke_ss(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(fricke_ss(7, 3), std::invalid_argument);
    CHECK_THROWS_AS(fricke_ss(11, 13), Unsupported);
}

TEST_CASE("expected degree") {
    CHECK(expected_degree(7, 5) == 3);
    CHECK(expected_degree(7, 13) == 5);
    CHECK(expected_degree(5, 7) == 2);
    for (u64 p = 5; p <= 1000; ++p) {
        if (!is_prime(p) || p == 7) continue;
        const auto c = characters(p);
        const long long chi3 = c.delta ? -1 : 1;
        CHECK(3 * expected_degree(7, p) == static_cast<long long>(p) - chi3 + 3 * *c.mu7);
    }
}

TEST_CASE("roots and theorem methods agree for p < 200") {
    for (int n : {2, 3, 5, 7})
        for (u64 p = 5; p < 200; ++p) {
            if (!is_prime(p) || p == static_cast<u64>(n)) continue;
            const ModPoly r = fricke_ss(n, p, FrickeMethod::Roots);
            CHECK(r == fricke_ss(n, p, FrickeMethod::Theorem));
            CHECK(r.degree() == expected_degree(n, p));
            CHECK(r.is_monic());
        }
}

TEST_CASE("j-invariants") {
    const PrimeField k{PrimeModulus(13)};
    CHECK(j_invariant(k, WeierstrassCurve<PrimeField>{0, 0, 0, 0, 1}) == 0);
    CHECK(j_invariant(k, WeierstrassCurve<PrimeField>{0, 0, 0, 1, 0}) == 1728 % 13);
    CHECK_THROWS_AS(j_invariant(k, WeierstrassCurve<PrimeField>{0, 0, 0, 0, 0}), SingularCurve);

    // level-5 family at b = 1 (z = 0): j = -16^3 / 11 = 7 mod 13
    const auto& C = fricke_level(5).curves;
    std::array<u64, 5> a{};
    for (size_t i = 0; i < 5; ++i) a[i] = C.domain[i].reduce(k).eval(1);
    CHECK(j_invariant(k, WeierstrassCurve<PrimeField>{a[0], a[1], a[2], a[3], a[4]}) == 7);
}

TEST_CASE("side factors and theorem range") {
    CHECK(in_theorem_range(5, 7));
    CHECK(!in_theorem_range(5, 5));
    CHECK(in_theorem_range(7, 5));
    CHECK(!in_theorem_range(7, 7));
    CHECK(in_theorem_range(2, 5));
    CHECK(!in_theorem_range(3, 3));
    const PrimeField k{PrimeModulus(11)};
    // N = 2, p = 11: A = Y^eps * (Y+1)^mu2 with eps = 1, mu2 = 0
    CHECK(side_factor(fricke_level(2).side_factor_A, characters(11), k).degree() == 1);
}
