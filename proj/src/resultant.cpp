#include "fricke/resultant.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace fricke {

namespace {

void trim(BiModPoly& f) {
    while (!f.coeffs.empty() && f.coeffs.back().is_zero()) f.coeffs.pop_back();
}

double log2_mpz(const mpz_class& v) {
    if (v == 0) return 0.0;
    long exp = 0;
    double m = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(std::fabs(m)) + static_cast<double>(exp);
}

// Newton interpolation through (xs[i], ys[i]).
ModPoly interpolate(const PrimeField& k, const std::vector<u64>& xs, const std::vector<u64>& ys) {
    const size_t n = xs.size();
    std::vector<u64> dd = ys;
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = k.mul(k.sub(dd[i], dd[i - 1]), k.inv(k.sub(xs[i], xs[i - level])));
    ModPoly acc(k);
    for (size_t i = n; i-- > 0;) {
        acc *= ModPoly(k, {k.neg(xs[i]), k.one()});
        acc += ModPoly::constant(k, dd[i]);
    }
    return acc;
}

ModPoly specialize(const BiModPoly& f, u64 y) {
    const PrimeField& k = f.field;
    std::vector<u64> v;
    v.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) v.push_back(c.eval(y));
    return ModPoly(k, std::move(v));
}

int output_degree_bound(const BiModPoly& f, const BiModPoly& g) {
    return f.degree() * g.inner_degree() + g.degree() * f.inner_degree();
}

std::vector<IntPoly> derivative_in(const BiIntPoly& f, int slot) {
    auto cs = f.coefficients_in(slot);
    std::vector<IntPoly> out;
    for (size_t i = 1; i < cs.size(); ++i) out.push_back(cs[i] * mpz_class(static_cast<unsigned long>(i)));
    return out;
}

}  // namespace

int BiModPoly::inner_degree() const {
    int d = 0;
    for (const auto& c : coeffs) d = std::max(d, c.degree());
    return d;
}

BiModPoly reduce(const BiIntPoly& f, int eliminate_slot, const PrimeField& k) {
    BiModPoly out{k, {}};
    for (const auto& c : f.coefficients_in(eliminate_slot)) out.coeffs.push_back(c.reduce(k));
    trim(out);
    return out;
}

BiModPoly as_bivariate(const ModPoly& f) {
    BiModPoly out{f.field(), {}};
    for (u64 c : f.coeffs()) out.coeffs.push_back(ModPoly::constant(f.field(), c));
    trim(out);
    return out;
}

std::optional<ModPoly> resultant_by_interpolation(const BiModPoly& f, const BiModPoly& g) {
    const PrimeField& k = f.field;
    if (f.coeffs.empty() || g.coeffs.empty()) return ModPoly(k);
    const int bound = output_degree_bound(f, g);
    const ModPoly& lf = f.coeffs.back();
    const ModPoly& lg = g.coeffs.back();
    std::vector<u64> xs, ys;
    const u64 p = k.characteristic();
    for (u64 y = 0; y < p && static_cast<int>(xs.size()) <= bound; ++y) {
        if (lf.eval(y) == 0 || lg.eval(y) == 0) continue;
        xs.push_back(y);
        ys.push_back(resultant(specialize(f, y), specialize(g, y)));
    }
    if (static_cast<int>(xs.size()) <= bound) return std::nullopt;
    return interpolate(k, xs, ys);
}

ModPoly bipoly_resultant(const BiModPoly& f, const BiModPoly& g, BivariateMethod method) {
    if (method != BivariateMethod::SubresultantPrs) {
        auto r = resultant_by_interpolation(f, g);
        if (r) return *r;
        if (method == BivariateMethod::Interpolation)
            throw std::invalid_argument("too few evaluation points for interpolation");
    }
    return subresultant_resultant(ModPolyRing{f.field}, f.coeffs, g.coeffs);
}

// ------------------------------------------------------------------ CRT

u64 crt_prime(size_t i) {
    static std::mutex mu;
    static std::vector<u64> primes;
    std::lock_guard lock(mu);
    u64 candidate = primes.empty() ? kMaxModulus - 1 : primes.back() - 2;
    while (primes.size() <= i) {
        while (!is_prime(candidate)) candidate -= 2;
        primes.push_back(candidate);
        candidate -= 2;
    }
    return primes[i];
}

void CrtAccumulator::add(u64 q, const std::vector<u64>& residues) {
    if (residues.size() != values_.size()) throw std::invalid_argument("CRT residue count mismatch");
    const PrimeField k{PrimeModulus(q)};
    const u64 m_mod_q = k.from_mpz(modulus_);
    const u64 m_inv = k.inv(m_mod_q);
    for (size_t i = 0; i < values_.size(); ++i) {
        const u64 cur = k.from_mpz(values_[i]);
        const u64 t = k.mul(k.sub(residues[i], cur), m_inv);
        values_[i] += modulus_ * mpz_class(static_cast<unsigned long>(t));
    }
    modulus_ *= mpz_class(static_cast<unsigned long>(q));
}

double CrtAccumulator::modulus_log2() const { return log2_mpz(modulus_); }

std::vector<mpz_class> CrtAccumulator::symmetric() const {
    const mpz_class half = modulus_ / 2;
    std::vector<mpz_class> out = values_;
    for (auto& v : out)
        if (v > half) v -= modulus_;
    return out;
}

double resultant_bound_log2(const std::vector<IntPoly>& f, const std::vector<IntPoly>& g) {
    auto row_log2 = [](const std::vector<IntPoly>& v) {
        mpz_class s = 0;
        for (const auto& c : v) {
            mpz_class n = c.norm1();
            s += n * n;
        }
        return 0.5 * log2_mpz(s);
    };
    const double m = static_cast<double>(f.size()) - 1;
    const double n = static_cast<double>(g.size()) - 1;
    return n * row_log2(f) + m * row_log2(g);
}

namespace {

// Runs CRT until the modulus clears twice the bound and two consecutive
// reconstructions agree. `image` returns std::nullopt for unlucky primes.
template <class Image>
std::vector<mpz_class> crt_reconstruct(size_t count, double bound_log2, Image image) {
    CrtAccumulator acc(count);
    std::optional<std::vector<mpz_class>> previous;
    for (size_t i = 0;; ++i) {
        const u64 q = crt_prime(i);
        auto r = image(q);
        if (!r) continue;
        acc.add(q, *r);
        if (acc.modulus_log2() <= bound_log2 + 1.0) continue;
        auto current = acc.symmetric();
        if (previous && *previous == current) return current;
        previous = std::move(current);
    }
}

}  // namespace

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    std::vector<IntPoly> fc, gc;
    for (const auto& c : f.coeffs()) fc.push_back(IntPoly::constant(c));
    for (const auto& c : g.coeffs()) gc.push_back(IntPoly::constant(c));
    const double bound = resultant_bound_log2(fc, gc);
    auto out = crt_reconstruct(1, bound, [&](u64 q) -> std::optional<std::vector<u64>> {
        const PrimeField k{PrimeModulus(q)};
        ModPoly a = f.reduce(k);
        ModPoly b = g.reduce(k);
        if (a.degree() != f.degree() || b.degree() != g.degree()) return std::nullopt;
        return std::vector<u64>{resultant(a, b)};
    });
    return out[0];
}

mpz_class discriminant(const IntPoly& f) {
    const int m = f.degree();
    if (m < 1) throw std::invalid_argument("discriminant of a constant");
    mpz_class r = resultant(f, f.derivative());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), f.lead().get_mpz_t());
    return ((static_cast<long>(m) * (m - 1) / 2) % 2 == 1) ? mpz_class(-q) : q;
}

namespace {

IntPoly bipoly_resultant_coeffs(const std::vector<IntPoly>& f, const std::vector<IntPoly>& g) {
    auto deg_inner = [](const std::vector<IntPoly>& v) {
        int d = 0;
        for (const auto& c : v) d = std::max(d, c.degree());
        return d;
    };
    const int df = static_cast<int>(f.size()) - 1;
    const int dg = static_cast<int>(g.size()) - 1;
    if (df < 0 || dg < 0) return IntPoly();
    const int bound_deg = df * deg_inner(g) + dg * deg_inner(f);
    const double bound = resultant_bound_log2(f, g);
    auto out = crt_reconstruct(static_cast<size_t>(bound_deg) + 1, bound,
                               [&](u64 q) -> std::optional<std::vector<u64>> {
                                   const PrimeField k{PrimeModulus(q)};
                                   BiModPoly a{k, {}}, b{k, {}};
                                   for (const auto& c : f) a.coeffs.push_back(c.reduce(k));
                                   for (const auto& c : g) b.coeffs.push_back(c.reduce(k));
                                   if (a.coeffs.back().is_zero() || b.coeffs.back().is_zero()) return std::nullopt;
                                   auto r = resultant_by_interpolation(a, b);
                                   if (!r) return std::nullopt;
                                   std::vector<u64> v(static_cast<size_t>(bound_deg) + 1, 0);
                                   for (int i = 0; i <= r->degree(); ++i) v[static_cast<size_t>(i)] = r->coeff(i);
                                   return v;
                               });
    return IntPoly(std::move(out));
}

}  // namespace

IntPoly bipoly_resultant(const BiIntPoly& f, const BiIntPoly& g, const std::string& eliminate) {
    if (f.labels() != g.labels()) throw std::invalid_argument("bipoly_resultant: variable labels differ");
    const int slot = f.slot_of(eliminate);
    return bipoly_resultant_coeffs(f.coefficients_in(slot), g.coefficients_in(slot));
}

IntPoly bipoly_discriminant(const BiIntPoly& f, const std::string& variable) {
    const int slot = f.slot_of(variable);
    auto cs = f.coefficients_in(slot);
    const int m = static_cast<int>(cs.size()) - 1;
    if (m < 1) throw std::invalid_argument("discriminant of a polynomial constant in the variable");
    IntPoly r = bipoly_resultant_coeffs(cs, derivative_in(f, slot));
    r = exact_divide(r, cs.back());
    return ((static_cast<long>(m) * (m - 1) / 2) % 2 == 1) ? -r : r;
}

}  // namespace fricke
