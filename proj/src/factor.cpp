#include "fricke/factor.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace fricke {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
        h ^= (word >> (8 * i)) & 0xff;
        h *= kFnvPrime;
    }
}

void hash_element(std::uint64_t& h, u64 a) { fnv_mix(h, a); }
void hash_element(std::uint64_t& h, const Fp2& a) {
    fnv_mix(h, a.a0);
    fnv_mix(h, a.a1);
}

template <FiniteField F>
Poly<F> one(const F& k) {
    return Poly<F>::constant(k, k.one());
}

/// Coefficientwise p-th root of a polynomial in X^p.
template <FiniteField F>
Poly<F> pth_root(const Poly<F>& f) {
    const F& k = f.field();
    const u64 p = k.characteristic();
    std::vector<typename F::Element> v;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) v.push_back(k.pth_root(f.coeff(i)));
    return Poly<F>(k, std::move(v));
}

template <FiniteField F>
void squarefree_into(const Poly<F>& f, int scale, std::vector<std::pair<Poly<F>, int>>& out) {
    if (f.degree() < 1) return;
    const F& k = f.field();
    Poly<F> c = gcd(f, f.derivative());
    Poly<F> w = exact_divide(f, c);
    int i = 1;
    while (w.degree() > 0) {
        Poly<F> y = gcd(w, c);
        Poly<F> fac = exact_divide(w, y);
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
        w = std::move(y);
        c = exact_divide(c, w);
        ++i;
    }
    if (c.degree() > 0) squarefree_into(pth_root(c), scale * static_cast<int>(k.characteristic()), out);
}

template <FiniteField F>
std::mt19937_64 make_rng(const Poly<F>& f, std::uint64_t seed) {
    const std::uint64_t p = f.field().characteristic();
    const std::uint64_t h = content_hash(f);
    std::seed_seq seq{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    return std::mt19937_64(seq);
}

template <FiniteField F, class Rng>
Poly<F> random_below_degree(const F& k, int n, Rng& rng) {
    std::vector<typename F::Element> v(static_cast<size_t>(n));
    for (auto& c : v) c = k.random(rng);
    return Poly<F>(k, std::move(v));
}

// Candidate splitting polynomial for one random draw.
template <FiniteField F>
Poly<F> splitter(const Poly<F>& a, const Poly<F>& f, int d) {
    const F& k = f.field();
    const mpz_class q = k.order();
    if (k.characteristic() == 2) {
        const size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;
        const size_t steps = bits * static_cast<size_t>(d);
        Poly<F> t = a % f;
        Poly<F> acc = t;
        for (size_t i = 1; i < steps; ++i) {
            t = mulmod(t, t, f);
            acc += t;
        }
        return acc;
    }
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    return powmod(a, e, f) - one(k);
}

}  // namespace

template <FiniteField F>
std::uint64_t content_hash(const Poly<F>& f) {
    std::uint64_t h = kFnvOffset;
    for (const auto& c : f.coeffs()) hash_element(h, c);
    return h;
}

template <FiniteField F>
Poly<F> FactoredPoly<F>::expand(const F& k) const {
    Poly<F> acc = Poly<F>::constant(k, unit);
    for (const auto& [g, m] : factors) acc *= pow(g, static_cast<unsigned>(m));
    return acc;
}

template <FiniteField F>
void canonical_sort(std::vector<std::pair<Poly<F>, int>>& factors) {
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        int c = canonical_compare(a.first, b.first);
        return c != 0 ? c < 0 : a.second < b.second;
    });
}

template <FiniteField F>
std::vector<std::pair<Poly<F>, int>> squarefree_decompose(const Poly<F>& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_decompose of zero");
    std::vector<std::pair<Poly<F>, int>> parts;
    squarefree_into(f.monic(), 1, parts);
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return parts;
}

template <FiniteField F>
Poly<F> frobenius_power(const Poly<F>& f, int k) {
    const F& field = f.field();
    const mpz_class q = field.order();
    Poly<F> h = Poly<F>::x(field) % f;
    for (int i = 0; i < k; ++i) h = powmod(h, q, f);
    return h;
}

template <FiniteField F>
std::vector<std::pair<Poly<F>, int>> distinct_degree_factor(const Poly<F>& f) {
    const F& k = f.field();
    const mpz_class q = k.order();
    std::vector<std::pair<Poly<F>, int>> out;
    Poly<F> rest = f.monic();
    const Poly<F> x = Poly<F>::x(k);
    Poly<F> h = x % rest;
    for (int i = 1; rest.degree() >= 2 * i; ++i) {
        h = powmod(h, q, rest);
        Poly<F> g = gcd(rest, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            rest = exact_divide(rest, g);
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

// Each attempt splits a valid input with probability about 1/2.
constexpr int kMaxSplitAttempts = 256;

template <FiniteField F>
std::vector<Poly<F>> equal_degree_factor(const Poly<F>& f, int d, std::uint64_t seed) {
    const F& k = f.field();
    if (d < 1 || f.degree() < d || f.degree() % d != 0)
        throw std::invalid_argument("equal_degree_factor: degree is not a multiple of d");
    if (f.degree() == d) return {f.monic()};
    auto rng = make_rng(f, seed);
    std::vector<Poly<F>> done;
    std::vector<Poly<F>> work{f.monic()};
    while (!work.empty()) {
        Poly<F> g = std::move(work.back());
        work.pop_back();
        if (g.degree() == d) {
            done.push_back(std::move(g));
            continue;
        }
        bool split = false;
        for (int attempt = 0; attempt < kMaxSplitAttempts && !split; ++attempt) {
            Poly<F> a = random_below_degree(k, g.degree(), rng);
            if (a.degree() < 1) continue;
            Poly<F> s = gcd(g, splitter(a, g, d));
            if (s.degree() > 0 && s.degree() < g.degree()) {
                work.push_back(exact_divide(g, s).monic());
                work.push_back(std::move(s));
                split = true;
            }
        }
        if (!split)
            throw std::invalid_argument("equal_degree_factor: input is not a product of distinct degree-" +
                                        std::to_string(d) + " irreducibles");
    }
    return done;
}

template <FiniteField F>
FactoredPoly<F> factor(const Poly<F>& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("factor of zero");
    FactoredPoly<F> out{f.lead(), {}};
    for (const auto& [part, mult] : squarefree_decompose(f))
        for (const auto& [block, d] : distinct_degree_factor(part))
            for (auto& g : equal_degree_factor(block, d, seed)) out.factors.emplace_back(std::move(g), mult);
    canonical_sort(out.factors);
    return out;
}

template <FiniteField F>
std::vector<typename F::Element> roots_in_field(const Poly<F>& f, std::uint64_t seed) {
    std::vector<typename F::Element> roots;
    if (f.degree() < 1) return roots;
    const F& k = f.field();
    const Poly<F> m = f.monic();
    Poly<F> g = gcd(m, frobenius_power(m, 1) - Poly<F>::x(k));
    if (g.degree() < 1) return roots;
    for (const auto& lin : equal_degree_factor(g, 1, seed)) roots.push_back(k.neg(lin.coeff(0)));
    std::sort(roots.begin(), roots.end(), [&](const auto& a, const auto& b) { return k.compare(a, b) < 0; });
    return roots;
}

template <FiniteField F>
Poly<F> poly_exact_sqrt(const Poly<F>& f) {
    if (!f.is_monic()) throw std::invalid_argument("poly_exact_sqrt expects a monic polynomial");
    Poly<F> acc = one(f.field());
    for (const auto& [part, mult] : squarefree_decompose(f)) {
        if (mult % 2 != 0) throw NotASquare("factor of odd multiplicity " + std::to_string(mult));
        acc *= pow(part, static_cast<unsigned>(mult / 2));
    }
    return acc;
}

bool is_split_linear(const ModPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_split_linear of zero");
    if (f.degree() < 1) return true;
    int radical = 0;
    for (const auto& [part, mult] : squarefree_decompose(f)) radical += part.degree();
    const ModPoly m = f.monic();
    const ModPoly g = gcd(m, frobenius_power(m, 1) - ModPoly::x(f.field()));
    return g.degree() == radical;
}

#define FRICKE_INSTANTIATE(F)                                                                   \
    template struct FactoredPoly<F>;                                                            \
    template std::vector<std::pair<Poly<F>, int>> squarefree_decompose(const Poly<F>&);         \
    template std::vector<std::pair<Poly<F>, int>> distinct_degree_factor(const Poly<F>&);       \
    template std::vector<Poly<F>> equal_degree_factor(const Poly<F>&, int, std::uint64_t);      \
    template FactoredPoly<F> factor(const Poly<F>&, std::uint64_t);                             \
    template std::vector<typename F::Element> roots_in_field(const Poly<F>&, std::uint64_t);    \
    template Poly<F> poly_exact_sqrt(const Poly<F>&);                                           \
    template Poly<F> frobenius_power(const Poly<F>&, int);                                      \
    template void canonical_sort(std::vector<std::pair<Poly<F>, int>>&);                        \
    template std::uint64_t content_hash(const Poly<F>&);

FRICKE_INSTANTIATE(PrimeField)
FRICKE_INSTANTIATE(QuadExtension)

#undef FRICKE_INSTANTIATE

}  // namespace fricke
