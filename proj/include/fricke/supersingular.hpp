#pragma once

// Supersingular polynomials ss_p(X) and their Fricke analogues ss_p^(N*)(Y).

#include <optional>
#include <string>

#include "fricke/data.hpp"
#include "fricke/errors.hpp"
#include "fricke/factor.hpp"
#include "fricke/poly.hpp"

namespace fricke {

/// Quadratic-character exponents at p: each is (1 - (d/p))/2 for the
/// appropriate d. mu_N is empty where undefined (p = N).
struct CharacterVector {
    u64 p;
    int delta;    // d = -3
    int epsilon;  // d = -4
    std::optional<int> mu2, mu5, mu7;

    /// Throws std::domain_error when the selector is undefined at p.
    int exponent(Selector s) const;
};

/// Requires p >= 5; throws std::invalid_argument otherwise.
CharacterVector characters(u64 p);

/// ss_p(X) over F_p. Closed form for p >= 5; stored constant X for p in {2, 3}.
ModPoly ss_poly(u64 p);

/// Independent oracle by the Hasse invariant over all of F_{p^2}; 5 <= p <= 2000.
ModPoly ss_poly_hasse_oracle(u64 p);

enum class FrickeMethod { Roots, Theorem };

std::string to_string(FrickeMethod m);

/// ss_p^(N*)(Y) over F_p, for p >= 5 and p != N.
/// Roots: collects the roots of R_N(j, Y) over all supersingular j, in F_{p^2}.
/// Theorem: sqrt((A * Res_X(ss_p, R_N)) / B); throws NonExactDivision or
/// NotASquare if the congruence fails at p.
ModPoly fricke_ss(int level, u64 p, FrickeMethod method = FrickeMethod::Roots);

/// A_{N,p}(Y) and B_{N,p}(Y) reduced mod p.
ModPoly side_factor(const std::vector<SideFactor>& factors, const CharacterVector& chi, const PrimeField& k);

/// (deg A + deg_Y(R_N) deg ss_p - deg B) / 2.
int expected_degree(int level, u64 p);

/// True iff p lies in the range where the level's congruence is claimed.
bool in_theorem_range(int level, u64 p);

template <FiniteField F>
struct WeierstrassCurve {
    typename F::Element a1, a2, a3, a4, a6;
};

template <FiniteField F>
struct CurveInvariants {
    typename F::Element c4, c6, discriminant;
};

template <FiniteField F>
CurveInvariants<F> curve_invariants(const F& k, const WeierstrassCurve<F>& E) {
    auto c = [&](long long v) { return k.from_int(v); };
    const auto b2 = k.add(k.mul(E.a1, E.a1), k.mul(c(4), E.a2));
    const auto b4 = k.add(k.mul(c(2), E.a4), k.mul(E.a1, E.a3));
    const auto b6 = k.add(k.mul(E.a3, E.a3), k.mul(c(4), E.a6));
    auto b8 = k.add(k.mul(k.mul(E.a1, E.a1), E.a6), k.mul(c(4), k.mul(E.a2, E.a6)));
    b8 = k.sub(b8, k.mul(E.a1, k.mul(E.a3, E.a4)));
    b8 = k.add(b8, k.mul(E.a2, k.mul(E.a3, E.a3)));
    b8 = k.sub(b8, k.mul(E.a4, E.a4));
    const auto c4 = k.sub(k.mul(b2, b2), k.mul(c(24), b4));
    auto c6 = k.neg(k.mul(b2, k.mul(b2, b2)));
    c6 = k.add(c6, k.mul(c(36), k.mul(b2, b4)));
    c6 = k.sub(c6, k.mul(c(216), b6));
    auto disc = k.neg(k.mul(k.mul(b2, b2), b8));
    disc = k.sub(disc, k.mul(c(8), k.mul(b4, k.mul(b4, b4))));
    disc = k.sub(disc, k.mul(c(27), k.mul(b6, b6)));
    disc = k.add(disc, k.mul(c(9), k.mul(b2, k.mul(b4, b6))));
    return {c4, c6, disc};
}

/// j = c4^3 / Delta; throws SingularCurve when Delta = 0.
template <FiniteField F>
typename F::Element j_invariant(const F& k, const WeierstrassCurve<F>& E) {
    const auto inv = curve_invariants(k, E);
    if (k.is_zero(inv.discriminant)) throw SingularCurve();
    return k.mul(k.mul(inv.c4, k.mul(inv.c4, inv.c4)), k.inv(inv.discriminant));
}

}  // namespace fricke
