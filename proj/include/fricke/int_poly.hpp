#pragma once

// Dense polynomials with arbitrary-precision integer coefficients, in one and two
// variables.

#include <array>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "fricke/poly.hpp"

namespace fricke {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> ascending);
    IntPoly(std::initializer_list<long> ascending);
    static IntPoly constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }
    static IntPoly monomial(const mpz_class& c, int degree);
    /// X - r
    static IntPoly linear_root(const mpz_class& r) { return IntPoly(std::vector<mpz_class>{-r, 1}); }

    int degree() const noexcept { return c_.empty() ? kZeroPolyDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
    mpz_class coeff(int i) const { return (i < 0 || i > degree()) ? mpz_class(0) : c_[static_cast<size_t>(i)]; }
    mpz_class lead() const { return c_.empty() ? mpz_class(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    mpz_class eval(const mpz_class& x) const;
    IntPoly derivative() const;
    /// f(g(X))
    IntPoly compose(const IntPoly& g) const;
    /// Largest absolute coefficient, as log2 (0 for the zero polynomial).
    double log2_max_coeff() const;
    /// Sum of absolute values of coefficients.
    mpz_class norm1() const;

    ModPoly reduce(const PrimeField& k) const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const mpz_class& s);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator-(IntPoly a);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "X") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

IntPoly pow(const IntPoly& base, unsigned e);

/// Pseudo-division: lc(g)^k f = q g + r with deg r < deg g.
struct PseudoDivRem {
    IntPoly quotient;
    IntPoly remainder;
    unsigned k = 0;
};
PseudoDivRem pseudo_divrem(const IntPoly& f, const IntPoly& g);

/// Division over Z, exact at every step (requires lc(g) to divide each leading term).
/// Throws NonExactDivision otherwise or when the remainder is nonzero.
IntPoly exact_divide(const IntPoly& f, const IntPoly& g);

/// Integer-coefficient polynomial in two labelled variables: grid[i][j] is the
/// coefficient of x^i y^j, where x = labels[0] and y = labels[1].
class BiIntPoly {
public:
    BiIntPoly() = default;
    BiIntPoly(std::array<std::string, 2> labels, std::vector<std::vector<mpz_class>> grid);

    /// Embeds a univariate polynomial in the given slot (0 = x, 1 = y).
    static BiIntPoly from_univariate(const IntPoly& f, std::array<std::string, 2> labels, int slot);

    const std::array<std::string, 2>& labels() const noexcept { return labels_; }
    const std::vector<std::vector<mpz_class>>& grid() const noexcept { return grid_; }
    int slot_of(const std::string& var) const;

    int deg_x() const noexcept { return static_cast<int>(grid_.size()) - 1; }
    int deg_y() const;
    int degree_in(int slot) const { return slot == 0 ? deg_x() : deg_y(); }
    bool is_zero() const noexcept { return grid_.empty(); }
    mpz_class coeff(int i, int j) const;

    /// Coefficients as polynomials in the other variable, indexed by powers of
    /// the variable in `slot`.
    std::vector<IntPoly> coefficients_in(int slot) const;
    static BiIntPoly from_coefficients_in(int slot, const std::vector<IntPoly>& coeffs,
                                          std::array<std::string, 2> labels);

    mpz_class eval(const mpz_class& x, const mpz_class& y) const;
    /// Substitute a value for the variable in `slot`; result is in the other variable.
    IntPoly substitute(int slot, const mpz_class& value) const;
    /// Substitute a polynomial (in the other variable) for the variable in `slot`.
    IntPoly substitute(int slot, const IntPoly& value) const;
    BiIntPoly swapped() const;

    BiIntPoly& operator+=(const BiIntPoly& o);
    BiIntPoly& operator-=(const BiIntPoly& o);
    friend BiIntPoly operator+(BiIntPoly a, const BiIntPoly& b) { return a += b; }
    friend BiIntPoly operator-(BiIntPoly a, const BiIntPoly& b) { return a -= b; }
    friend BiIntPoly operator*(const BiIntPoly& a, const BiIntPoly& b);
    friend bool operator==(const BiIntPoly& a, const BiIntPoly& b) { return a.grid_ == b.grid_; }

private:
    void trim();
    std::array<std::string, 2> labels_{"X", "Y"};
    std::vector<std::vector<mpz_class>> grid_;
};

}  // namespace fricke
