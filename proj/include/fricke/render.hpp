#pragma once

// Table-style text for polynomials over F_p: x(x+4)(x+20), (Y^2+10Y+5)^2.

#include <string>

#include "fricke/factor.hpp"
#include "fricke/poly.hpp"

namespace fricke {

/// Expanded form, highest degree first, coefficients in [0, p).
std::string render_poly(const ModPoly& f, char var);

/// Factored form in canonical order; non-monic input gets its leading
/// coefficient as a prefix.
std::string render_factored(const FactoredPoly<PrimeField>& f, char var);
std::string render_factored(const ModPoly& f, char var);

}  // namespace fricke
