#pragma once

// Resultants and discriminants.
//
// Convention throughout: Res(f, g) = lc(f)^{deg g} * prod g(a_i) over the roots a_i
// of f, which is the Sylvester determinant with the rows of f first.

#include <optional>
#include <string>
#include <vector>

#include "fricke/int_poly.hpp"
#include "fricke/poly.hpp"

namespace fricke {

// ----------------------------------------------------------------- field case

template <FiniteField F>
typename F::Element resultant(Poly<F> f, Poly<F> g) {
    const F& k = f.field();
    if (f.is_zero() || g.is_zero()) return k.zero();
    auto acc = k.one();
    int m = f.degree();
    int n = g.degree();
    for (;;) {
        if (n == 0) return k.mul(acc, k.pow(g.lead(), mpz_class(m)));
        Poly<F> r = f % g;
        if (r.is_zero()) return k.zero();
        const int d = r.degree();
        if ((static_cast<long>(m) * n) % 2 == 1) acc = k.neg(acc);
        acc = k.mul(acc, k.pow(g.lead(), mpz_class(m - d)));
        f = std::move(g);
        g = std::move(r);
        m = n;
        n = d;
    }
}

template <FiniteField F>
typename F::Element discriminant(const Poly<F>& f) {
    const F& k = f.field();
    const int m = f.degree();
    if (m < 1) throw std::invalid_argument("discriminant of a constant");
    auto r = k.mul(resultant(f, f.derivative()), k.inv(f.lead()));
    return ((static_cast<long>(m) * (m - 1) / 2) % 2 == 1) ? k.neg(r) : r;
}

// -------------------------------------------------- subresultant PRS (generic)

/// Ring adapters for the subresultant algorithm: an integral domain with exact
/// division.
struct IntegerRing {
    using Element = mpz_class;
    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(const Element& a) const { return a == 0; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element exact_div(const Element& a, const Element& b) const {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
};

/// F_p[Y] as a coefficient ring.
struct ModPolyRing {
    using Element = ModPoly;
    PrimeField field;
    Element zero() const { return ModPoly(field); }
    Element one() const { return ModPoly::constant(field, field.one()); }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element exact_div(const Element& a, const Element& b) const { return exact_divide(a, b); }
};

namespace detail {

template <class Ring>
void trim(const Ring& r, std::vector<typename Ring::Element>& v) {
    while (!v.empty() && r.is_zero(v.back())) v.pop_back();
}

template <class Ring>
typename Ring::Element ring_pow(const Ring& r, typename Ring::Element a, long e) {
    auto result = r.one();
    while (e > 0) {
        if (e & 1) result = r.mul(result, a);
        e >>= 1;
        if (e) a = r.mul(a, a);
    }
    return result;
}

template <class Ring>
std::vector<typename Ring::Element> pseudo_remainder(const Ring& r, std::vector<typename Ring::Element> a,
                                                     const std::vector<typename Ring::Element>& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const auto& lb = b.back();
    for (int top = static_cast<int>(a.size()) - 1; top >= db; --top) {
        auto c = a[static_cast<size_t>(top)];
        for (auto& x : a) x = r.mul(x, lb);
        if (!r.is_zero(c))
            for (int j = 0; j <= db; ++j) {
                auto& slot = a[static_cast<size_t>(top - db + j)];
                slot = r.sub(slot, r.mul(c, b[static_cast<size_t>(j)]));
            }
    }
    if (static_cast<int>(a.size()) > db) a.erase(a.begin() + std::max(db, 0), a.end());
    trim(r, a);
    return a;
}

}  // namespace detail

/// Resultant over an integral domain by the subresultant polynomial remainder
/// sequence (Collins/Brown). Inputs are coefficient vectors in ascending degree.
template <class Ring>
typename Ring::Element subresultant_resultant(const Ring& r, std::vector<typename Ring::Element> a,
                                              std::vector<typename Ring::Element> b) {
    detail::trim(r, a);
    detail::trim(r, b);
    if (a.empty() || b.empty()) return r.zero();
    bool negate = false;
    auto deg = [](const auto& v) { return static_cast<long>(v.size()) - 1; };
    if (deg(a) < deg(b)) {
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) negate = true;
        std::swap(a, b);
    }
    auto g = r.one();
    auto h = r.one();
    while (deg(b) > 0) {
        const long delta = deg(a) - deg(b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) negate = !negate;
        auto rem = detail::pseudo_remainder(r, a, b);
        a = std::move(b);
        if (rem.empty()) return r.zero();
        auto divisor = r.mul(g, detail::ring_pow(r, h, delta));
        for (auto& c : rem) c = r.exact_div(c, divisor);
        b = std::move(rem);
        g = a.back();
        // h <- h^{1-delta} g^delta
        if (delta == 0) {
            // unchanged
        } else {
            h = r.exact_div(detail::ring_pow(r, g, delta), detail::ring_pow(r, h, delta - 1));
        }
    }
    // b is a nonzero constant here.
    const long da = deg(a);
    auto out = r.exact_div(detail::ring_pow(r, b.back(), da), detail::ring_pow(r, h, da - 1 < 0 ? 0 : da - 1));
    if (da == 0) out = r.one();
    return negate ? r.neg(out) : out;
}

// ------------------------------------------------------- bivariate over F_p

/// Polynomial in an eliminated variable X whose coefficients are in F_p[Y]:
/// coeffs[i] multiplies X^i.
struct BiModPoly {
    PrimeField field;
    std::vector<ModPoly> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    /// Largest Y-degree of any coefficient.
    int inner_degree() const;
};

/// Reduce mod p, with `eliminate_slot` naming the eliminated variable.
BiModPoly reduce(const BiIntPoly& f, int eliminate_slot, const PrimeField& k);
/// Constant-in-Y embedding of a univariate polynomial in the eliminated variable.
BiModPoly as_bivariate(const ModPoly& f);

enum class BivariateMethod { Auto, SubresultantPrs, Interpolation };

/// Res_X(f, g) in F_p[Y]. Auto picks interpolation when F_p has enough points
/// and the subresultant PRS otherwise.
ModPoly bipoly_resultant(const BiModPoly& f, const BiModPoly& g, BivariateMethod method = BivariateMethod::Auto);

/// Evaluation/interpolation path; empty when F_p has too few usable points.
std::optional<ModPoly> resultant_by_interpolation(const BiModPoly& f, const BiModPoly& g);

// ---------------------------------------------------------------- over Z

/// Res(f, g) for integer polynomials, by CRT over word-size primes.
mpz_class resultant(const IntPoly& f, const IntPoly& g);
mpz_class discriminant(const IntPoly& f);

/// Resultant eliminating `eliminate`; both inputs must carry the same labels.
/// Evaluation/interpolation per CRT prime. Result is in the other variable.
IntPoly bipoly_resultant(const BiIntPoly& f, const BiIntPoly& g, const std::string& eliminate);
/// Discriminant with respect to `variable`; result in the other variable.
IntPoly bipoly_discriminant(const BiIntPoly& f, const std::string& variable);

/// log2 of a Hadamard bound on |Res| for integer inputs (coefficient-wise for
/// polynomial entries).
double resultant_bound_log2(const std::vector<IntPoly>& f, const std::vector<IntPoly>& g);

/// i-th word-size prime used for CRT (descending from 2^62).
u64 crt_prime(size_t i);

/// Incremental Chinese remaindering with symmetric-range output.
class CrtAccumulator {
public:
    explicit CrtAccumulator(size_t count) : values_(count) {}
    void add(u64 q, const std::vector<u64>& residues);
    const mpz_class& modulus() const noexcept { return modulus_; }
    double modulus_log2() const;
    /// Current reconstruction in (-M/2, M/2].
    std::vector<mpz_class> symmetric() const;

private:
    mpz_class modulus_ = 1;
    std::vector<mpz_class> values_;
};

}  // namespace fricke
