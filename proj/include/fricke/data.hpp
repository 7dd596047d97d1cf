#pragma once

// Static modular data: correspondences R_N, class polynomials, theorem side
// factors, ramification tables, parametrizations, curve families and the
// identity catalog. Everything is parsed from the embedded data file.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fricke/expr.hpp"
#include "fricke/int_poly.hpp"

namespace fricke {

/// Exponent attached to a side factor of the congruence theorems.
enum class Selector { Delta, Epsilon, Mu2, Mu5, Mu7, TwoDelta };

std::string to_string(Selector s);

struct SideFactor {
    IntPoly poly;  // in Y
    Selector exponent;
};

struct RamificationRow {
    mpz_class x;
    IntPoly y_factor;  // with multiplicity, e.g. (Y-4)^2
    IntPoly cofactor;
    int discriminant;  // CM discriminant of the x-value
};

/// X = x_num/x_den, Y = y_num/y_den as functions of z.
struct Parametrization {
    IntPoly x_num, x_den, y_num, y_den;
};

struct CurvePairData {
    char parameter;                      // b, d or z
    std::array<IntPoly, 5> domain;       // a1, a2, a3, a4, a6 in the parameter
    std::array<IntPoly, 5> codomain;
    /// z = z_num/z_den in the parameter (identity map when parameter is z).
    IntPoly z_num, z_den;
    /// j-invariants as rational functions of the parameter.
    IntPoly j_domain_num, j_domain_den, j_codomain_num, j_codomain_den;
    /// Parameter values where this polynomial vanishes are excluded.
    IntPoly degenerate_locus;
    /// Level 7 only: A(x), B(x), C(x) with labels (x, d).
    std::optional<std::array<BiIntPoly, 3>> isogeny7;
};

struct FrickeLevelData {
    int level;
    BiIntPoly R;  // labels (X, Y)
    std::vector<SideFactor> side_factor_A;
    std::vector<SideFactor> side_factor_B;
    std::vector<std::uint64_t> excluded_primes;
    std::vector<RamificationRow> ramification;
    Parametrization parametrization;
    CurvePairData curves;
};

struct RogersRamanujanData {
    IntPoly f;        // minimal polynomial of r(i), in x
    BiIntPoly g;      // fifth-power relation, labels (x, y)
    BiIntPoly F;      // level-5 modular relation, labels (r, j)
    BiIntPoly P7;     // labels (u, v)
    IntPoly p196;
    IntPoly f5;       // expected Res_t(f(t), g(t, x))
    IntPoly f196;     // expected Res_t(f(t), P7(t, y))
};

struct NamedIdentity {
    std::string id;
    std::string recipe;  // "lhs == rhs [== ...]"
};

/// Raw text of the embedded data file and its FNV-1a checksum.
std::string_view data_text();
std::uint64_t data_checksum();

/// All named constants of the data file.
const ConstantTable& constants();
/// Integer-list records (prime sets, ramification x-values).
const std::vector<mpz_class>& integer_list(std::string_view name);
/// Univariate constant by name; throws std::out_of_range when absent.
IntPoly univariate_constant(std::string_view name);
/// Bivariate constant by name with its stored labels.
BiIntPoly bivariate_constant(std::string_view name);

/// Throws Unsupported for levels outside {2, 3, 5, 7}.
const FrickeLevelData& fricke_level(int level);

/// Discriminants with a stored class polynomial.
const std::vector<int>& class_discriminants();
/// Throws Unsupported for other discriminants.
IntPoly class_poly(int discriminant);

const RogersRamanujanData& rogers_ramanujan();

const std::vector<NamedIdentity>& identity_catalog();

/// Small primes counted by convention in the split-prime sets of levels 5 and 7.
std::vector<std::uint64_t> conventional_split_primes(int level);

/// The 15 primes dividing the order of the Monster.
std::vector<std::uint64_t> monster_primes();

}  // namespace fricke
