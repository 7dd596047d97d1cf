#include "fricke/supersingular.hpp"

#include <set>
#include <stdexcept>

#include "fricke/errors.hpp"
#include "fricke/resultant.hpp"

namespace fricke {

namespace {

int half_character(long long d, u64 p) { return (1 - legendre_symbol(d, PrimeModulus(p))) / 2; }

void require_prime(u64 p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

void require_level(int level) { (void)fricke_level(level); }

}  // namespace

int CharacterVector::exponent(Selector s) const {
    auto need = [&](const std::optional<int>& v, const char* name) {
        if (!v) throw std::domain_error(std::string(name) + " is undefined at p = " + std::to_string(p));
        return *v;
    };
    switch (s) {
        case Selector::Delta: return delta;
        case Selector::Epsilon: return epsilon;
        case Selector::TwoDelta: return 2 * delta;
        case Selector::Mu2: return need(mu2, "mu2");
        case Selector::Mu5: return need(mu5, "mu5");
        case Selector::Mu7: return need(mu7, "mu7");
    }
    throw std::logic_error("unknown selector");
}

CharacterVector characters(u64 p) {
    require_prime(p);
    if (p < 5) throw std::invalid_argument("characters need p >= 5");
    CharacterVector chi{p, half_character(-3, p), half_character(-4, p), {}, {}, {}};
    chi.mu2 = half_character(-2, p);
    if (p != 5) chi.mu5 = half_character(-5, p);
    if (p != 7) chi.mu7 = half_character(-7, p);
    return chi;
}

ModPoly ss_poly(u64 p) {
    require_prime(p);
    const PrimeField k{PrimeModulus(p)};
    if (p < 5) return ModPoly::x(k);
    const auto chi = characters(p);
    const unsigned long n = p / 12;
    const unsigned long e = static_cast<unsigned long>(chi.epsilon);
    const ModPoly shifted = ModPoly::from_ints(k, {-1728, 1});
    ModPoly J(k);
    ModPoly shift_power = ModPoly::constant(k, k.one());
    mpz_class b1, b2;
    for (unsigned long i = 0; i <= n; ++i) {
        mpz_bin_uiui(b1.get_mpz_t(), 2 * n + e, 2 * i + e);
        mpz_bin_uiui(b2.get_mpz_t(), 2 * n - 2 * i, n - i);
        const u64 c = k.mul(k.mul(k.from_mpz(b1), k.from_mpz(b2)), k.pow(k.from_int(-432), n - i));
        J += shift_power.scale(c);
        shift_power *= shifted;
    }
    ModPoly out = J;
    if (chi.delta) out *= ModPoly::x(k);
    if (chi.epsilon) out *= shifted;
    return out.monic();
}

ModPoly ss_poly_hasse_oracle(u64 p) {
    require_prime(p);
    if (p < 5 || p > 2000) throw std::invalid_argument("Hasse oracle supports 5 <= p <= 2000");
    const QuadExtension K = make_quadratic_extension(PrimeModulus(p));
    const PrimeField& k = K.base();
    const u64 m = (p - 1) / 2;
    // coefficient of x^{p-1} in (x^3 + a x + b)^m = sum_i m!/(i! s! t!) a^s b^t with s = p-1-3i, t = 2i-m
    std::vector<u64> fact(m + 1, 1);
    for (u64 i = 1; i <= m; ++i) fact[i] = k.mul(fact[i - 1], i);
    struct Term {
        u64 coeff, s, t;
    };
    std::vector<Term> terms;
    for (u64 i = 0; 3 * i <= p - 1; ++i) {
        if (2 * i < m) continue;
        const u64 s = p - 1 - 3 * i;
        const u64 t = 2 * i - m;
        if (i + s + t != m) continue;
        const u64 denom = k.mul(fact[i], k.mul(fact[s], fact[t]));
        terms.push_back({k.mul(fact[m], k.inv(denom)), s, t});
    }
    auto hasse = [&](const Fp2& a, const Fp2& b) {
        Fp2 acc = K.zero();
        for (const auto& term : terms) {
            Fp2 v = K.mul(K.pow(a, mpz_class(static_cast<unsigned long>(term.s))),
                          K.pow(b, mpz_class(static_cast<unsigned long>(term.t))));
            acc = K.add(acc, K.mul(K.embed(term.coeff), v));
        }
        return acc;
    };
    const Fp2 j1728 = K.from_int(1728);
    std::vector<Fp2> marked;
    for (u64 a0 = 0; a0 < p; ++a0)
        for (u64 a1 = 0; a1 < p; ++a1) {
            const Fp2 j{a0, a1};
            Fp2 a, b;
            if (K.is_zero(j)) {
                a = K.zero();
                b = K.one();
            } else if (j == j1728) {
                a = K.one();
                b = K.zero();
            } else {
                const Fp2 kk = K.mul(j, K.inv(K.sub(j1728, j)));
                a = K.mul(K.from_int(3), kk);
                b = K.mul(K.from_int(2), kk);
            }
            if (K.is_zero(hasse(a, b))) marked.push_back(j);
        }
    const Fp2Poly prod = from_roots(K, std::span<const Fp2>(marked));
    std::vector<u64> out;
    for (const auto& c : prod.coeffs()) {
        if (!K.in_base_field(c)) throw RationalityFailure("Hasse oracle product is not defined over F_p");
        out.push_back(c.a0);
    }
    return ModPoly(k, std::move(out));
}

std::string to_string(FrickeMethod m) { return m == FrickeMethod::Roots ? "roots" : "theorem"; }

ModPoly side_factor(const std::vector<SideFactor>& factors, const CharacterVector& chi, const PrimeField& k) {
    ModPoly acc = ModPoly::constant(k, k.one());
    for (const auto& f : factors) {
        const int e = chi.exponent(f.exponent);
        if (e > 0) acc *= pow(f.poly.reduce(k), static_cast<unsigned>(e));
    }
    return acc;
}

bool in_theorem_range(int level, u64 p) {
    require_level(level);
    if (p < 5 || !is_prime(p)) return false;
    if (level == 5) return p >= 7;
    if (level == 7) return p != 7;
    return true;
}

namespace {

void require_fricke_prime(int level, u64 p) {
    require_level(level);
    require_prime(p);
    if (p < 5) throw std::invalid_argument("ss_p^(N*) needs p >= 5");
    if (p == static_cast<u64>(level)) throw std::invalid_argument("ss_p^(N*) is defined only for p != N");
}

ModPoly fricke_by_roots(int level, u64 p) {
    const FrickeLevelData& L = fricke_level(level);
    const PrimeField k{PrimeModulus(p)};
    const QuadExtension K = make_quadratic_extension(PrimeModulus(p));

    std::vector<Fp2> js;
    for (const auto& [g, mult] : factor(ss_poly(p)).factors) {
        if (g.degree() == 1) {
            js.push_back(K.embed(k.neg(g.coeff(0))));
        } else if (g.degree() == 2) {
            for (const auto& r : roots_in_field(lift(K, g))) js.push_back(r);
        } else {
            throw RationalityFailure("ss_p has an irreducible factor of degree " + std::to_string(g.degree()));
        }
    }

    // R_N(X, Y) = sum_i c_i(Y) X^i, reduced once.
    std::vector<ModPoly> cx;
    for (const auto& c : L.R.coefficients_in(0)) cx.push_back(c.reduce(k));
    int dy = 0;
    for (const auto& c : cx) dy = std::max(dy, c.degree());

    std::set<Fp2> found;
    for (const Fp2& j : js) {
        std::vector<Fp2> coeffs(static_cast<size_t>(dy) + 1, K.zero());
        Fp2 jp = K.one();
        for (const auto& c : cx) {
            for (int t = 0; t <= c.degree(); ++t)
                coeffs[static_cast<size_t>(t)] = K.add(coeffs[static_cast<size_t>(t)], K.mul(K.embed(c.coeff(t)), jp));
            jp = K.mul(jp, j);
        }
        for (const auto& r : roots_in_field(Fp2Poly(K, std::move(coeffs)))) found.insert(r);
    }
    const std::vector<Fp2> roots(found.begin(), found.end());
    const Fp2Poly prod = from_roots(K, std::span<const Fp2>(roots));
    std::vector<u64> out;
    for (const auto& c : prod.coeffs()) {
        if (!K.in_base_field(c))
            throw RationalityFailure("collected product has a coefficient outside F_" + std::to_string(p));
        out.push_back(c.a0);
    }
    return ModPoly(k, std::move(out));
}

ModPoly fricke_by_theorem(int level, u64 p) {
    const FrickeLevelData& L = fricke_level(level);
    const PrimeField k{PrimeModulus(p)};
    const CharacterVector chi = characters(p);
    const ModPoly A = side_factor(L.side_factor_A, chi, k);
    const ModPoly B = side_factor(L.side_factor_B, chi, k);
    const ModPoly res = bipoly_resultant(as_bivariate(ss_poly(p)), reduce(L.R, 0, k));
    const ModPoly quotient = exact_divide(A * res, B);
    return poly_exact_sqrt(quotient);
}

}  // namespace

ModPoly fricke_ss(int level, u64 p, FrickeMethod method) {
    require_fricke_prime(level, p);
    return method == FrickeMethod::Roots ? fricke_by_roots(level, p) : fricke_by_theorem(level, p);
}

int expected_degree(int level, u64 p) {
    require_fricke_prime(level, p);
    const FrickeLevelData& L = fricke_level(level);
    const CharacterVector chi = characters(p);
    int degA = 0, degB = 0;
    for (const auto& f : L.side_factor_A) degA += f.poly.degree() * chi.exponent(f.exponent);
    for (const auto& f : L.side_factor_B) degB += f.poly.degree() * chi.exponent(f.exponent);
    const int total = degA + L.R.deg_y() * ss_poly(p).degree() - degB;
    if (total % 2 != 0) throw std::logic_error("degree bookkeeping gave an odd total");
    return total / 2;
}

}  // namespace fricke
