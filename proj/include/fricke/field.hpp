#pragma once

// Word-size prime fields F_p and their canonical quadratic extensions F_{p^2}.

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <random>
#include <stdexcept>
#include <string>

namespace fricke {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u64 kMaxModulus = u64{1} << 62;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 powmod(u64 base, u64 exp, u64 m);

/// A prime 2 <= p < 2^62, validated at construction.
class PrimeModulus {
public:
    explicit PrimeModulus(u64 p);
    u64 value() const noexcept { return p_; }
    bool operator==(const PrimeModulus&) const = default;

private:
    u64 p_;
};

/// Legendre symbol (a/p) for odd p, via Jacobi reciprocity.
int legendre_symbol(long long a, const PrimeModulus& p);
int legendre_symbol(const mpz_class& a, const PrimeModulus& p);

/// F_p. Elements are plain words kept in [0, p).
class PrimeField {
public:
    using Element = u64;

    explicit PrimeField(const PrimeModulus& p) : p_(p.value()) {}

    u64 characteristic() const noexcept { return p_; }
    mpz_class order() const { return mpz_class(static_cast<unsigned long>(p_)); }
    PrimeModulus modulus() const { return PrimeModulus(p_); }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1 % p_; }
    bool is_zero(Element a) const noexcept { return a == 0; }
    bool equal(Element a, Element b) const noexcept { return a == b; }

    Element add(Element a, Element b) const noexcept {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const noexcept { return mulmod(a, b, p_); }
    Element pow(Element a, const mpz_class& e) const;
    Element pow(Element a, u64 e) const noexcept { return powmod(a, e, p_); }
    /// Throws std::domain_error on zero.
    Element inv(Element a) const;

    Element from_int(long long v) const noexcept;
    Element from_mpz(const mpz_class& v) const;
    /// Inverse of the p-power map (identity on F_p).
    Element pth_root(Element a) const noexcept { return a; }
    Element frobenius(Element a) const noexcept { return a; }

    template <class Rng>
    Element random(Rng& rng) const;

    /// Total order used for canonical sorting.
    int compare(Element a, Element b) const noexcept { return a < b ? -1 : (a > b ? 1 : 0); }
    std::string to_string(Element a) const { return std::to_string(a); }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

private:
    u64 p_;
};

/// a0 + a1*t with t^2 = c.
struct Fp2 {
    u64 a0 = 0;
    u64 a1 = 0;
    auto operator<=>(const Fp2&) const = default;
};

/// F_{p^2} = F_p[t]/(t^2 - c), c the canonical nonresidue.
class QuadExtension {
public:
    using Element = Fp2;

    QuadExtension(const PrimeModulus& p, u64 nonresidue);

    const PrimeField& base() const noexcept { return base_; }
    u64 nonresidue() const noexcept { return c_; }
    u64 characteristic() const noexcept { return base_.characteristic(); }
    mpz_class order() const { return base_.order() * base_.order(); }

    Element zero() const noexcept { return {0, 0}; }
    Element one() const noexcept { return {base_.one(), 0}; }
    Element embed(u64 a) const noexcept { return {a, 0}; }
    bool is_zero(const Element& a) const noexcept { return a.a0 == 0 && a.a1 == 0; }
    bool equal(const Element& a, const Element& b) const noexcept { return a == b; }
    bool in_base_field(const Element& a) const noexcept { return a.a1 == 0; }

    Element add(const Element& a, const Element& b) const noexcept {
        return {base_.add(a.a0, b.a0), base_.add(a.a1, b.a1)};
    }
    Element sub(const Element& a, const Element& b) const noexcept {
        return {base_.sub(a.a0, b.a0), base_.sub(a.a1, b.a1)};
    }
    Element neg(const Element& a) const noexcept { return {base_.neg(a.a0), base_.neg(a.a1)}; }
    Element mul(const Element& a, const Element& b) const noexcept;
    Element pow(Element a, const mpz_class& e) const;
    Element inv(const Element& a) const;
    Element frobenius(const Element& a) const noexcept { return {a.a0, base_.neg(a.a1)}; }
    /// x^{1/p} = x^p since x^{p^2} = x.
    Element pth_root(const Element& a) const noexcept { return frobenius(a); }
    /// Norm to F_p: x * frobenius(x).
    u64 norm(const Element& a) const noexcept;

    Element from_int(long long v) const noexcept { return {base_.from_int(v), 0}; }
    Element from_mpz(const mpz_class& v) const { return {base_.from_mpz(v), 0}; }

    template <class Rng>
    Element random(Rng& rng) const {
        return {base_.random(rng), base_.random(rng)};
    }

    int compare(const Element& a, const Element& b) const noexcept {
        return a < b ? -1 : (a > b ? 1 : 0);
    }
    std::string to_string(const Element& a) const;

    bool operator==(const QuadExtension& o) const noexcept {
        return base_ == o.base_ && c_ == o.c_;
    }

private:
    PrimeField base_;
    u64 c_;
};

/// Canonical F_{p^2}: c = -1 when p = 3 mod 4, else the least positive nonresidue.
/// Throws std::invalid_argument for p = 2.
QuadExtension make_quadratic_extension(const PrimeModulus& p);

inline Fp2 fp2_frobenius(const QuadExtension& k, const Fp2& x) { return k.frobenius(x); }

/// Uniform draw in [0, bound) from a 64-bit engine by rejection; portable across
/// standard libraries, unlike std::uniform_int_distribution.
template <class Rng>
u64 uniform_below(Rng& rng, u64 bound) {
    static_assert(Rng::min() == 0 && Rng::max() == ~u64{0}, "64-bit engine required");
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    const u64 limit = ~u64{0} - (~u64{0} % bound);
    for (;;) {
        u64 r = rng();
        if (r < limit) return r % bound;
    }
}

template <class Rng>
PrimeField::Element PrimeField::random(Rng& rng) const {
    return uniform_below(rng, p_);
}

}  // namespace fricke
