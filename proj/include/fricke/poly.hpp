#pragma once

// Dense univariate polynomials over F_p and F_{p^2}.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fricke/errors.hpp"
#include "fricke/field.hpp"

namespace fricke {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolyDegree = -1;

template <class F>
concept FiniteField = requires(const F& f, typename F::Element a, const mpz_class& e) {
    { f.zero() } -> std::same_as<typename F::Element>;
    { f.one() } -> std::same_as<typename F::Element>;
    { f.add(a, a) } -> std::same_as<typename F::Element>;
    { f.sub(a, a) } -> std::same_as<typename F::Element>;
    { f.mul(a, a) } -> std::same_as<typename F::Element>;
    { f.neg(a) } -> std::same_as<typename F::Element>;
    { f.inv(a) } -> std::same_as<typename F::Element>;
    { f.pow(a, e) } -> std::same_as<typename F::Element>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.pth_root(a) } -> std::same_as<typename F::Element>;
    { f.from_int(1LL) } -> std::same_as<typename F::Element>;
    { f.compare(a, a) } -> std::same_as<int>;
    { f.characteristic() } -> std::same_as<u64>;
    { f.order() } -> std::same_as<mpz_class>;
};

template <FiniteField F>
class Poly {
public:
    using Field = F;
    using Element = typename F::Element;

    explicit Poly(const F& field) : field_(field) {}
    Poly(const F& field, std::vector<Element> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const F& field, Element c) { return Poly(field, {c}); }
    static Poly monomial(const F& field, Element c, int degree) {
        std::vector<Element> v(static_cast<size_t>(degree) + 1, field.zero());
        v.back() = c;
        return Poly(field, std::move(v));
    }
    static Poly x(const F& field) { return monomial(field, field.one(), 1); }
    static Poly from_ints(const F& field, std::initializer_list<long long> ascending) {
        std::vector<Element> v;
        for (long long a : ascending) v.push_back(field.from_int(a));
        return Poly(field, std::move(v));
    }

    const F& field() const noexcept { return field_; }
    const std::vector<Element>& coeffs() const noexcept { return c_; }
    std::span<const Element> span() const noexcept { return c_; }

    int degree() const noexcept { return c_.empty() ? kZeroPolyDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && field_.equal(c_[0], field_.one()); }
    Element lead() const { return c_.empty() ? field_.zero() : c_.back(); }
    Element coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? field_.zero() : c_[static_cast<size_t>(i)];
    }
    bool is_monic() const { return !c_.empty() && field_.equal(c_.back(), field_.one()); }

    Element eval(const Element& x) const {
        Element acc = field_.zero();
        for (size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
        return acc;
    }

    Poly monic() const {
        if (c_.empty()) return *this;
        Element li = field_.inv(c_.back());
        return scale(li);
    }
    Poly scale(const Element& s) const {
        std::vector<Element> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], s);
        return Poly(field_, std::move(v));
    }
    Poly derivative() const {
        if (c_.size() <= 1) return Poly(field_);
        std::vector<Element> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<long long>(i)));
        return Poly(field_, std::move(v));
    }
    Poly shift(int k) const {
        if (c_.empty()) return *this;
        std::vector<Element> v(static_cast<size_t>(k), field_.zero());
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(field_, std::move(v));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        std::vector<Element> v(a.c_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.field_.neg(a.c_[i]);
        return Poly(a.field_, std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly(a.field_);
        const F& f = a.field_;
        std::vector<Element> v(a.c_.size() + b.c_.size() - 1, f.zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (f.is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
        }
        return Poly(f, std::move(v));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
        return true;
    }

    /// Canonical comparison: degree first, then coefficients from the top down.
    friend int canonical_compare(const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (size_t i = a.c_.size(); i-- > 0;) {
            int c = a.field_.compare(a.c_[i], b.c_[i]);
            if (c != 0) return c;
        }
        return 0;
    }

private:
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    F field_;
    std::vector<Element> c_;
};

using ModPoly = Poly<PrimeField>;
using Fp2Poly = Poly<QuadExtension>;

template <FiniteField F>
struct DivRem {
    Poly<F> quotient;
    Poly<F> remainder;
};

template <FiniteField F>
DivRem<F> divrem(const Poly<F>& f, const Poly<F>& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    const F& k = f.field();
    if (f.degree() < g.degree()) return {Poly<F>(k), f};
    std::vector<typename F::Element> r = f.coeffs();
    const int dg = g.degree();
    const int dq = f.degree() - dg;
    std::vector<typename F::Element> q(static_cast<size_t>(dq) + 1, k.zero());
    const auto li = k.inv(g.lead());
    const auto& gc = g.coeffs();
    for (int i = dq; i >= 0; --i) {
        auto c = k.mul(r[static_cast<size_t>(i + dg)], li);
        q[static_cast<size_t>(i)] = c;
        if (k.is_zero(c)) continue;
        for (int j = 0; j <= dg; ++j) {
            auto& slot = r[static_cast<size_t>(i + j)];
            slot = k.sub(slot, k.mul(c, gc[static_cast<size_t>(j)]));
        }
    }
    r.resize(static_cast<size_t>(dg));
    return {Poly<F>(k, std::move(q)), Poly<F>(k, std::move(r))};
}

template <FiniteField F>
Poly<F> operator%(const Poly<F>& f, const Poly<F>& g) {
    return divrem(f, g).remainder;
}

/// Quotient f/g; throws NonExactDivision when g does not divide f.
template <FiniteField F>
Poly<F> exact_divide(const Poly<F>& f, const Poly<F>& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw NonExactDivision("remainder is nonzero");
    return q;
}

/// Monic gcd; gcd(0, 0) is rejected.
template <FiniteField F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <FiniteField F>
Poly<F> mulmod(const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
    return (a * b) % m;
}

/// base^e mod m for a nonnegative exponent.
template <FiniteField F>
Poly<F> powmod(const Poly<F>& base, const mpz_class& e, const Poly<F>& m) {
    Poly<F> result = Poly<F>::constant(base.field(), base.field().one()) % m;
    Poly<F> b = base % m;
    const size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
    }
    return result;
}

template <FiniteField F>
Poly<F> pow(const Poly<F>& base, unsigned e) {
    Poly<F> result = Poly<F>::constant(base.field(), base.field().one());
    Poly<F> b = base;
    while (e) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return result;
}

/// Product of (X - r) over the given roots.
template <FiniteField F>
Poly<F> from_roots(const F& k, std::span<const typename F::Element> roots) {
    Poly<F> acc = Poly<F>::constant(k, k.one());
    for (const auto& r : roots) acc *= Poly<F>(k, {k.neg(r), k.one()});
    return acc;
}

/// Lift an F_p polynomial into F_{p^2}.
inline Fp2Poly lift(const QuadExtension& k, const ModPoly& f) {
    std::vector<Fp2> v;
    v.reserve(f.coeffs().size());
    for (u64 c : f.coeffs()) v.push_back(k.embed(c));
    return Fp2Poly(k, std::move(v));
}

}  // namespace fricke
