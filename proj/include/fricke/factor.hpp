#pragma once

// Factorization over F_p and F_{p^2}: square-free decomposition, distinct-degree
// factorization and Cantor-Zassenhaus equal-degree splitting.

#include <cstdint>
#include <utility>
#include <vector>

#include "fricke/poly.hpp"

namespace fricke {

template <FiniteField F>
struct FactoredPoly {
    typename F::Element unit;
    /// Monic irreducible factors with multiplicities, canonically ordered.
    std::vector<std::pair<Poly<F>, int>> factors;

    Poly<F> expand(const F& k) const;
    int degree() const {
        int d = 0;
        for (const auto& [g, m] : factors) d += g.degree() * m;
        return d;
    }
    bool operator==(const FactoredPoly& o) const {
        return unit == o.unit && factors == o.factors;
    }
};

/// Monic square-free parts with multiplicity, ascending multiplicity.
template <FiniteField F>
std::vector<std::pair<Poly<F>, int>> squarefree_decompose(const Poly<F>& f);

/// Products of all irreducible factors of each degree, for a monic square-free input.
template <FiniteField F>
std::vector<std::pair<Poly<F>, int>> distinct_degree_factor(const Poly<F>& f);

/// Splits a monic square-free product of degree-d irreducibles.
/// Throws std::invalid_argument when the degree is not a multiple of d or no split is found.
template <FiniteField F>
std::vector<Poly<F>> equal_degree_factor(const Poly<F>& f, int d, std::uint64_t seed = 0);

template <FiniteField F>
FactoredPoly<F> factor(const Poly<F>& f, std::uint64_t seed = 0);

/// Distinct roots in the coefficient field, sorted.
template <FiniteField F>
std::vector<typename F::Element> roots_in_field(const Poly<F>& f, std::uint64_t seed = 0);

/// Monic s with s^2 = f; throws NotASquare on an odd multiplicity.
template <FiniteField F>
Poly<F> poly_exact_sqrt(const Poly<F>& f);

/// X^{q^k} mod f, q the field order.
template <FiniteField F>
Poly<F> frobenius_power(const Poly<F>& f, int k);

/// True iff every irreducible factor of f has degree 1.
bool is_split_linear(const ModPoly& f);

/// Sort key shared by factor lists: canonical polynomial order, then multiplicity.
template <FiniteField F>
void canonical_sort(std::vector<std::pair<Poly<F>, int>>& factors);

/// FNV-1a content hash of the coefficient words.
template <FiniteField F>
std::uint64_t content_hash(const Poly<F>& f);

}  // namespace fricke
