#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fricke/data.hpp"
#include "fricke/errors.hpp"
#include "fricke/factor.hpp"
#include "fricke/supersingular.hpp"
#include "oracles.hpp"

using namespace fricke;

namespace {

ModPoly mp(const PrimeField& k, const char* text, char v = 'X') {
    return evaluate(text, constants()).to_int_poly(v).reduce(k);
}

ModPoly random_mod(std::mt19937_64& rng, const PrimeField& k, int degree) {
    std::vector<u64> c(static_cast<size_t>(degree) + 1);
    for (auto& x : c) x = k.random(rng);
    if (c.back() == 0) c.back() = 1;
    return ModPoly(k, c);
}

template <FiniteField F>
void check_irreducible(const Poly<F>& g) {
    const Poly<F> x = Poly<F>::x(g.field());
    for (int k = 1; k <= g.degree(); ++k) {
        const int d = gcd(g, frobenius_power(g, k) - x).degree();
        if (k < g.degree())
            CHECK(d == 0);
        else
            CHECK(d == g.degree());
    }
}

template <FiniteField F>
void check_factorization(const Poly<F>& f) {
    const auto fac = factor(f);
    CHECK(fac.expand(f.field()) == f);
    for (size_t i = 0; i < fac.factors.size(); ++i) {
        CHECK(fac.factors[i].first.is_monic());
        CHECK(fac.factors[i].second >= 1);
        check_irreducible(fac.factors[i].first);
        if (i > 0) {
            const auto& a = fac.factors[i - 1].first;
            const auto& b = fac.factors[i].first;
            CHECK((a.degree() < b.degree() || (a.degree() == b.degree() && canonical_compare(a, b) < 0)));
        }
    }
}

}  // namespace

TEST_CASE("square-free decomposition") {
    const PrimeField k7{PrimeModulus(7)};
    auto sq = squarefree_decompose(mp(k7, "(Y+3)^2 Y", 'Y'));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0] == std::make_pair(mp(k7, "Y", 'Y'), 1));
    CHECK(sq[1] == std::make_pair(mp(k7, "Y+3", 'Y'), 2));

    sq = squarefree_decompose(mp(k7, "Y^7", 'Y'));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0] == std::make_pair(mp(k7, "Y", 'Y'), 7));

    // p-th power path with a non-trivial inner factor: (Y^2+1)^7 (Y+2)^3
    sq = squarefree_decompose(mp(k7, "(Y^2+1)^7(Y+2)^3", 'Y'));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0] == std::make_pair(mp(k7, "Y+2", 'Y'), 3));
    CHECK(sq[1] == std::make_pair(mp(k7, "Y^2+1", 'Y'), 7));

    const PrimeField k13{PrimeModulus(13)};
    const ModPoly r = bivariate_constant("R5").substitute(0, mpz_class(1728)).reduce(k13);
    bool found = false;
    for (const auto& [g, m] : squarefree_decompose(r))
        if (m == 2) {
            found = true;
            CHECK(divrem(g, mp(k13, "Y", 'Y')).remainder.is_zero());
            CHECK(divrem(g, mp(k13, "Y^2-540Y-6480", 'Y')).remainder.is_zero());
        }
    CHECK(found);
}

TEST_CASE("factor examples") {
    const PrimeField k37{PrimeModulus(37)};
    const auto f37 = factor(ss_poly(37));
    REQUIRE(f37.factors.size() == 2);
    CHECK(f37.factors[0].first == mp(k37, "X+29"));
    CHECK(f37.factors[1].first == mp(k37, "X^2+31X+31"));

    const PrimeField k5{PrimeModulus(5)};
    const auto f5 = factor(mp(k5, "X^2+1"));
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0].first == mp(k5, "X+2"));
    CHECK(f5.factors[1].first == mp(k5, "X+3"));

    const PrimeField k7{PrimeModulus(7)};
    const auto f7 = factor(mp(k7, "X^2+1"));
    REQUIRE(f7.factors.size() == 1);
    CHECK(f7.factors[0].first.degree() == 2);

    const auto unit = factor(mp(k7, "3X^2+3"));
    CHECK(unit.unit == 3);
}

TEST_CASE("roots in the coefficient field") {
    const PrimeField k23{PrimeModulus(23)};
    CHECK(roots_in_field(ss_poly(23)) == std::vector<u64>{0, 3, 19});
    const PrimeField k7{PrimeModulus(7)};
    CHECK(roots_in_field(mp(k7, "X^2+1")).empty());
    CHECK(roots_in_field(mp(k7, "5")).empty());
    const auto K = make_quadratic_extension(PrimeModulus(7));
    CHECK(roots_in_field(lift(K, mp(k7, "X^2+1"))) == std::vector<Fp2>{{0, 1}, {0, 6}});

    std::mt19937_64 rng(8);
    for (u64 p : {5ULL, 13ULL, 101ULL}) {
        const PrimeField k{PrimeModulus(p)};
        for (int i = 0; i < 50; ++i) {
            const ModPoly f = random_mod(rng, k, 1 + static_cast<int>(rng() % 8));
            CHECK(roots_in_field(f) == oracle::roots_by_search(f.coeffs(), p));
        }
    }
}

TEST_CASE("exact square roots") {
    const PrimeField k7{PrimeModulus(7)};
    CHECK(poly_exact_sqrt(mp(k7, "(Y+1)^2", 'Y')) == mp(k7, "Y+1", 'Y'));
    CHECK(poly_exact_sqrt(mp(k7, "(Y(Y+3))^2", 'Y')) == mp(k7, "Y^2+3Y", 'Y'));
    CHECK_THROWS_AS(poly_exact_sqrt(mp(k7, "Y^3", 'Y')), NotASquare);

    std::mt19937_64 rng(12);
    for (u64 p : {5ULL, 13ULL, 101ULL, 1009ULL}) {
        const PrimeField k{PrimeModulus(p)};
        for (int i = 0; i < 50; ++i) {
            const ModPoly f = random_mod(rng, k, static_cast<int>(rng() % 10));
            CHECK(poly_exact_sqrt((f * f).monic()) == f.monic());
        }
    }
}

TEST_CASE("linear split test") {
    const PrimeField k19{PrimeModulus(19)};
    CHECK(is_split_linear(mp(k19, "Y(Y+1)(Y+2)(Y+9)(Y+11)(Y+15)", 'Y')));
    CHECK(!is_split_linear(fricke_ss(5, 23)));
    const PrimeField k23{PrimeModulus(23)};
    CHECK(divrem(fricke_ss(5, 23), mp(k23, "Y^2+9Y+6", 'Y')).remainder.is_zero());
    CHECK(is_split_linear(mp(k19, "3Y+7", 'Y')));
    CHECK(is_split_linear(mp(k19, "(Y+1)^5(Y+3)", 'Y')));
}

TEST_CASE("factorization round trip and irreducibility on the corpus") {
    // every ss_p and ss_p^(N*) shown in the tables
    for (u64 p = 5; p < 100; ++p) {
        if (!is_prime(p)) continue;
        check_factorization(ss_poly(p));
        for (int level : {5, 7})
            if (p != static_cast<u64>(level)) check_factorization(fricke_ss(level, p));
    }
    std::mt19937_64 rng(1000);
    for (u64 p : {5ULL, 13ULL, 101ULL, 1009ULL}) {
        const PrimeField k{PrimeModulus(p)};
        for (int i = 0; i < 250; ++i) {
            ModPoly f = random_mod(rng, k, 1 + static_cast<int>(rng() % 12));
            if (i % 5 == 0) f = f * f * random_mod(rng, k, static_cast<int>(rng() % 3));
            check_factorization(f);
        }
    }
    const auto K = make_quadratic_extension(PrimeModulus(101));
    for (int i = 0; i < 50; ++i) {
        std::vector<Fp2> c(1 + rng() % 8);
        for (auto& x : c) x = K.random(rng);
        c.back() = K.one();
        check_factorization(Fp2Poly(K, c));
    }
}

TEST_CASE("factorization is deterministic") {
    std::mt19937_64 rng(4);
    const PrimeField k{PrimeModulus(1009)};
    for (int i = 0; i < 20; ++i) {
        const ModPoly f = random_mod(rng, k, 12);
        CHECK(factor(f) == factor(f));
        CHECK(factor(f, 1) == factor(f, 2));
        std::vector<u64> roots;
        for (u64 r = 0; roots.size() < 8; r += 1 + rng() % 100) roots.push_back(r);
        const ModPoly split = from_roots(k, std::span<const u64>(roots));
        const auto a = equal_degree_factor(split, 1, 3);
        CHECK(a == equal_degree_factor(split, 1, 3));
        CHECK(a.size() == 8);
    }
    CHECK_THROWS_AS(equal_degree_factor(random_mod(rng, k, 7), 2), std::invalid_argument);
}
