#include "fricke/render.hpp"

namespace fricke {

std::string render_poly(const ModPoly& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const u64 c = f.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (c != 1 || i == 0) out += std::to_string(c);
        if (i >= 1) out += var;
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

std::string render_factored(const FactoredPoly<PrimeField>& f, char var) {
    std::string out;
    if (f.unit != 1 || f.factors.empty()) out = std::to_string(f.unit);
    // a lone simple factor is printed without parentheses
    if (out.empty() && f.factors.size() == 1 && f.factors[0].second == 1) return render_poly(f.factors[0].first, var);
    for (const auto& [g, mult] : f.factors) {
        const bool bare = g.degree() == 1 && g.coeff(0) == 0;
        out += bare ? std::string(1, var) : "(" + render_poly(g, var) + ")";
        if (mult > 1) out += '^' + std::to_string(mult);
    }
    return out;
}

std::string render_factored(const ModPoly& f, char var) {
    if (f.is_zero()) return "0";
    return render_factored(factor(f), var);
}

}  // namespace fricke
