#include <doctest.h>

#include <random>

#include "fricke/field.hpp"
#include "oracles.hpp"

using namespace fricke;

TEST_CASE("prime modulus validation") {
    CHECK_NOTHROW(PrimeModulus(2));
    CHECK_NOTHROW(PrimeModulus(1009));
    CHECK_THROWS(PrimeModulus(1));
    CHECK_THROWS(PrimeModulus(4));
    CHECK_THROWS(PrimeModulus(561));
    CHECK_THROWS(PrimeModulus(kMaxModulus + 1));
    CHECK(is_prime(4611686018427387847ULL));  // largest prime below 2^62
    CHECK(!is_prime(3215031751ULL));          // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("legendre symbol examples") {
    CHECK(legendre_symbol(-5, PrimeModulus(7)) == 1);
    CHECK(legendre_symbol(7, PrimeModulus(7)) == 0);
    CHECK(legendre_symbol(-1, PrimeModulus(11)) == -1);
}

TEST_CASE("legendre symbol agrees with Euler's criterion and enumeration") {
    std::mt19937_64 rng(11);
    const std::vector<u64> primes = {3, 5, 7, 11, 13, 101, 1009, 10007, 65537, 1000003};
    for (int trial = 0; trial < 1000; ++trial) {
        const u64 p = primes[trial % primes.size()];
        const long long a = static_cast<long long>(rng() % 2000001) - 1000000;
        const PrimeField k{PrimeModulus(p)};
        const u64 e = k.pow(k.from_int(a), (p - 1) / 2);
        const int expected = e == 0 ? 0 : (e == 1 ? 1 : -1);
        CHECK(legendre_symbol(a, PrimeModulus(p)) == expected);
        if (p < 2000) CHECK(legendre_symbol(a, PrimeModulus(p)) == oracle::legendre_by_squares(a, p));
    }
}

TEST_CASE("canonical quadratic extension") {
    CHECK(make_quadratic_extension(PrimeModulus(7)).nonresidue() == 6);
    CHECK(make_quadratic_extension(PrimeModulus(13)).nonresidue() == 2);
    CHECK(make_quadratic_extension(PrimeModulus(5)).nonresidue() == 2);
    CHECK(make_quadratic_extension(PrimeModulus(41)).nonresidue() == 3);
    CHECK_THROWS_AS(make_quadratic_extension(PrimeModulus(2)), std::invalid_argument);
    for (u64 p : {3ULL, 5ULL, 17ULL, 73ULL, 1009ULL, 10007ULL}) {
        const auto K = make_quadratic_extension(PrimeModulus(p));
        CHECK(oracle::legendre_by_squares(static_cast<long long>(K.nonresidue()), p) == -1);
    }
}

TEST_CASE("frobenius examples") {
    const auto K = make_quadratic_extension(PrimeModulus(7));
    CHECK(K.frobenius(Fp2{3, 0}) == Fp2{3, 0});
    CHECK(K.frobenius(Fp2{0, 1}) == Fp2{0, 6});
    // frobenius agrees with x^p
    std::mt19937_64 rng(5);
    const auto L = make_quadratic_extension(PrimeModulus(101));
    for (int i = 0; i < 100; ++i) {
        const Fp2 x = L.random(rng);
        CHECK(L.frobenius(L.frobenius(x)) == x);
        CHECK(L.frobenius(x) == L.pow(x, mpz_class(101)));
    }
}

TEST_CASE("field axioms in F_{p^2}") {
    std::mt19937_64 rng(17);
    for (u64 p : {5ULL, 7ULL, 101ULL, 1009ULL, 4611686018427387847ULL}) {
        const auto K = make_quadratic_extension(PrimeModulus(p));
        for (int i = 0; i < 200; ++i) {
            const Fp2 x = K.random(rng), y = K.random(rng), z = K.random(rng);
            CHECK(K.mul(K.mul(x, y), z) == K.mul(x, K.mul(y, z)));
            CHECK(K.mul(x, K.add(y, z)) == K.add(K.mul(x, y), K.mul(x, z)));
            CHECK(K.frobenius(K.mul(x, y)) == K.mul(K.frobenius(x), K.frobenius(y)));
            if (!K.is_zero(x)) CHECK(K.mul(x, K.inv(x)) == K.one());
            CHECK(K.in_base_field(Fp2{K.norm(x), 0}));
        }
    }
}

TEST_CASE("prime field arithmetic stays reduced") {
    std::mt19937_64 rng(3);
    const u64 p = 4611686018427387847ULL;
    const PrimeField k{PrimeModulus(p)};
    for (int i = 0; i < 1000; ++i) {
        const u64 a = k.random(rng), b = k.random(rng);
        CHECK(k.add(a, b) < p);
        CHECK(k.sub(a, b) < p);
        CHECK(k.mul(a, b) < p);
        if (a != 0) CHECK(k.mul(a, k.inv(a)) == 1);
    }
    CHECK(k.from_int(-1) == p - 1);
    CHECK(k.from_mpz(mpz_class("-340282366920938463463374607431768211457")) < p);
}
