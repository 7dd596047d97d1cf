#pragma once

// Sparse integer polynomials in single-letter variables, and the small recipe
// language in which the identity catalog is written.
//
// Grammar (implicit multiplication by juxtaposition, '^' binds tightest):
//   sum     := product (('+' | '-') product)*
//   product := unary (['*'] unary)*
//   unary   := '-' unary | power
//   power   := atom ['^' atom]
//   atom    := integer | '(' sum ')' | name | name '(' args ')'
// Names are variables (one letter of kVariables), named constants, or the
// functions res, disc, hsub, quo, deg, c4, delta.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fricke/int_poly.hpp"

namespace fricke {

inline constexpr std::string_view kVariables = "XYxyzdbtrjuv";

class MPoly {
public:
    using Monomial = std::array<std::uint16_t, kVariables.size()>;

    MPoly() = default;
    static MPoly constant(const mpz_class& c);
    static MPoly variable(char v);
    static MPoly from_int_poly(const IntPoly& f, char v);
    /// Labels must be single variable letters.
    static MPoly from_bipoly(const BiIntPoly& f);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    mpz_class constant_term() const;
    int degree_in(char v) const;
    /// Variables that occur, in kVariables order.
    std::string variables() const;
    const std::map<Monomial, mpz_class>& terms() const noexcept { return terms_; }

    /// Coefficients of v^0, v^1, ... (each free of v).
    std::vector<MPoly> coefficients_in(char v) const;
    /// Throws std::invalid_argument if a variable other than v occurs.
    IntPoly to_int_poly(char v) const;
    /// Throws std::invalid_argument if a variable other than a, b occurs.
    BiIntPoly to_bipoly(char a, char b) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(const MPoly& a);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    std::map<Monomial, mpz_class> terms_;
};

MPoly pow(const MPoly& base, unsigned e);

/// Index of v in kVariables; throws std::invalid_argument for other characters.
int variable_index(char v);

struct NamedConstant {
    std::string vars;  // one letter per variable, in call order
    MPoly value;
};

using ConstantTable = std::map<std::string, NamedConstant, std::less<>>;

/// Evaluates one expression. Throws std::invalid_argument on syntax errors and
/// unknown names, NonExactDivision from quo.
MPoly evaluate(std::string_view text, const ConstantTable& constants);

/// Splits an identity record body "a == b [== c ...]" into its sides.
std::vector<std::string> split_sides(std::string_view body);

}  // namespace fricke
