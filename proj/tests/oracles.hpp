#pragma once

// Independent reference computations used only by the tests.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

/// Sylvester determinant of f (deg m) and g (deg n), f-rows first, by
/// Bareiss fraction-free elimination. Ascending coefficient vectors.
inline mpz_class sylvester_resultant(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g) {
    const size_t m = f.size() - 1, n = g.size() - 1, s = m + n;
    if (s == 0) return 1;
    std::vector<std::vector<mpz_class>> a(s, std::vector<mpz_class>(s, 0));
    for (size_t r = 0; r < n; ++r)
        for (size_t i = 0; i <= m; ++i) a[r][r + i] = f[m - i];
    for (size_t r = 0; r < m; ++r)
        for (size_t i = 0; i <= n; ++i) a[n + r][r + i] = g[n - i];
    int sign = 1;
    mpz_class prev = 1;
    for (size_t k = 0; k + 1 < s; ++k) {
        if (a[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < s && a[piv][k] == 0) ++piv;
            if (piv == s) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < s; ++i)
            for (size_t j = k + 1; j < s; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[s - 1][s - 1];
}

/// Legendre symbol by enumerating the squares mod p.
inline int legendre_by_squares(long long a, std::uint64_t p) {
    const long long r = ((a % static_cast<long long>(p)) + static_cast<long long>(p)) % static_cast<long long>(p);
    if (r == 0) return 0;
    for (std::uint64_t x = 1; x < p; ++x)
        if ((x * x) % p == static_cast<std::uint64_t>(r)) return 1;
    return -1;
}

/// Roots of an ascending coefficient vector over F_p by exhaustive evaluation.
inline std::vector<std::uint64_t> roots_by_search(const std::vector<std::uint64_t>& c, std::uint64_t p) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < p; ++x) {
        unsigned __int128 acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i]) % p;
        if (acc == 0) out.push_back(x);
    }
    return out;
}

inline std::vector<mpz_class> random_int_poly(std::mt19937_64& rng, int degree, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    std::vector<mpz_class> c(static_cast<size_t>(degree) + 1);
    for (auto& x : c) x = d(rng);
    while (c.back() == 0) c.back() = d(rng);
    return c;
}

}  // namespace oracle
