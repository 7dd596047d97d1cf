#include "fricke/int_poly.hpp"

#include <cmath>
#include <sstream>

#include "fricke/errors.hpp"

namespace fricke {

IntPoly::IntPoly(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    for (long a : ascending) c_.emplace_back(a);
    trim();
}

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
    std::vector<mpz_class> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpz_class> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::compose(const IntPoly& g) const {
    IntPoly acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= g;
        acc += IntPoly::constant(c_[i]);
    }
    return acc;
}

double IntPoly::log2_max_coeff() const {
    double best = 0;
    for (const auto& c : c_) {
        if (c == 0) continue;
        long exp = 0;
        double m = mpz_get_d_2exp(&exp, c.get_mpz_t());
        best = std::max(best, std::log2(std::fabs(m)) + static_cast<double>(exp));
    }
    return best;
}

mpz_class IntPoly::norm1() const {
    mpz_class s = 0;
    for (const auto& c : c_) s += abs(c);
    return s;
}

ModPoly IntPoly::reduce(const PrimeField& k) const {
    std::vector<u64> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(k.from_mpz(c));
    return ModPoly(k, std::move(v));
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator-(IntPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const mpz_class& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

IntPoly pow(const IntPoly& base, unsigned e) {
    IntPoly result = IntPoly::constant(1);
    IntPoly b = base;
    while (e) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return result;
}

PseudoDivRem pseudo_divrem(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    PseudoDivRem out;
    if (f.degree() < g.degree()) {
        out.remainder = f;
        return out;
    }
    const int dg = g.degree();
    const mpz_class lg = g.lead();
    std::vector<mpz_class> r = f.coeffs();
    std::vector<mpz_class> q(static_cast<size_t>(f.degree() - dg) + 1);
    const auto& gc = g.coeffs();
    for (int top = f.degree(); top >= dg; --top) {
        const mpz_class c = r[static_cast<size_t>(top)];
        // r <- lg * r - c * X^{top-dg} g ; q <- lg * q + c X^{top-dg}
        for (auto& x : q) x *= lg;
        q[static_cast<size_t>(top - dg)] += c;
        for (auto& x : r) x *= lg;
        for (int j = 0; j <= dg; ++j) r[static_cast<size_t>(top - dg + j)] -= c * gc[static_cast<size_t>(j)];
        ++out.k;
    }
    r.resize(static_cast<size_t>(dg));
    out.quotient = IntPoly(std::move(q));
    out.remainder = IntPoly(std::move(r));
    return out;
}

IntPoly exact_divide(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    if (f.is_zero()) return {};
    if (f.degree() < g.degree()) throw NonExactDivision("divisor degree exceeds dividend degree");
    const int dg = g.degree();
    const mpz_class& lg = g.lead();
    std::vector<mpz_class> r = f.coeffs();
    std::vector<mpz_class> q(static_cast<size_t>(f.degree() - dg) + 1);
    const auto& gc = g.coeffs();
    for (int top = f.degree(); top >= dg; --top) {
        const mpz_class& lead = r[static_cast<size_t>(top)];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), lg.get_mpz_t()))
            throw NonExactDivision("leading coefficient does not divide");
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), lead.get_mpz_t(), lg.get_mpz_t());
        q[static_cast<size_t>(top - dg)] = c;
        for (int j = 0; j <= dg; ++j) r[static_cast<size_t>(top - dg + j)] -= c * gc[static_cast<size_t>(j)];
    }
    for (int i = 0; i < dg; ++i)
        if (r[static_cast<size_t>(i)] != 0) throw NonExactDivision("remainder is nonzero");
    return IntPoly(std::move(q));
}

// ---------------------------------------------------------------------------

BiIntPoly::BiIntPoly(std::array<std::string, 2> labels, std::vector<std::vector<mpz_class>> grid)
    : labels_(std::move(labels)), grid_(std::move(grid)) {
    trim();
}

void BiIntPoly::trim() {
    for (auto& row : grid_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
}

int BiIntPoly::slot_of(const std::string& var) const {
    if (labels_[0] == var) return 0;
    if (labels_[1] == var) return 1;
    throw std::invalid_argument("variable " + var + " is not a label of this polynomial");
}

int BiIntPoly::deg_y() const {
    int d = kZeroPolyDegree;
    for (const auto& row : grid_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

mpz_class BiIntPoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(grid_.size())) return 0;
    const auto& row = grid_[static_cast<size_t>(i)];
    return j < static_cast<int>(row.size()) ? row[static_cast<size_t>(j)] : mpz_class(0);
}

BiIntPoly BiIntPoly::from_univariate(const IntPoly& f, std::array<std::string, 2> labels, int slot) {
    std::vector<std::vector<mpz_class>> grid;
    if (slot == 0) {
        for (const auto& c : f.coeffs()) grid.push_back({c});
    } else if (!f.is_zero()) {
        grid.push_back(f.coeffs());
    }
    return BiIntPoly(std::move(labels), std::move(grid));
}

std::vector<IntPoly> BiIntPoly::coefficients_in(int slot) const {
    std::vector<IntPoly> out;
    if (slot == 0) {
        for (const auto& row : grid_) out.emplace_back(row);
    } else {
        const int dy = deg_y();
        for (int j = 0; j <= dy; ++j) {
            std::vector<mpz_class> col(grid_.size());
            for (size_t i = 0; i < grid_.size(); ++i) col[i] = coeff(static_cast<int>(i), j);
            out.emplace_back(std::move(col));
        }
    }
    return out;
}

BiIntPoly BiIntPoly::from_coefficients_in(int slot, const std::vector<IntPoly>& coeffs,
                                          std::array<std::string, 2> labels) {
    std::vector<std::vector<mpz_class>> grid;
    if (slot == 0) {
        for (const auto& c : coeffs) grid.push_back(c.coeffs());
    } else {
        int dx = kZeroPolyDegree;
        for (const auto& c : coeffs) dx = std::max(dx, c.degree());
        grid.assign(static_cast<size_t>(dx + 1), std::vector<mpz_class>(coeffs.size()));
        for (size_t j = 0; j < coeffs.size(); ++j)
            for (int i = 0; i <= coeffs[j].degree(); ++i) grid[static_cast<size_t>(i)][j] = coeffs[j].coeff(i);
    }
    return BiIntPoly(std::move(labels), std::move(grid));
}

mpz_class BiIntPoly::eval(const mpz_class& x, const mpz_class& y) const {
    return substitute(0, x).eval(y);
}

IntPoly BiIntPoly::substitute(int slot, const mpz_class& value) const {
    return substitute(slot, IntPoly::constant(value));
}

IntPoly BiIntPoly::substitute(int slot, const IntPoly& value) const {
    auto cs = coefficients_in(slot);
    IntPoly acc;
    for (size_t i = cs.size(); i-- > 0;) {
        acc *= value;
        acc += cs[i];
    }
    return acc;
}

BiIntPoly BiIntPoly::swapped() const {
    return from_coefficients_in(0, coefficients_in(1), {labels_[1], labels_[0]});
}

BiIntPoly& BiIntPoly::operator+=(const BiIntPoly& o) {
    if (o.grid_.size() > grid_.size()) grid_.resize(o.grid_.size());
    for (size_t i = 0; i < o.grid_.size(); ++i) {
        auto& row = grid_[i];
        if (o.grid_[i].size() > row.size()) row.resize(o.grid_[i].size());
        for (size_t j = 0; j < o.grid_[i].size(); ++j) row[j] += o.grid_[i][j];
    }
    trim();
    return *this;
}

BiIntPoly& BiIntPoly::operator-=(const BiIntPoly& o) {
    if (o.grid_.size() > grid_.size()) grid_.resize(o.grid_.size());
    for (size_t i = 0; i < o.grid_.size(); ++i) {
        auto& row = grid_[i];
        if (o.grid_[i].size() > row.size()) row.resize(o.grid_[i].size());
        for (size_t j = 0; j < o.grid_[i].size(); ++j) row[j] -= o.grid_[i][j];
    }
    trim();
    return *this;
}

BiIntPoly operator*(const BiIntPoly& a, const BiIntPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiIntPoly(a.labels_, {});
    const int dy = a.deg_y() + b.deg_y();
    std::vector<std::vector<mpz_class>> g(a.grid_.size() + b.grid_.size() - 1,
                                          std::vector<mpz_class>(static_cast<size_t>(dy + 1)));
    for (size_t i1 = 0; i1 < a.grid_.size(); ++i1)
        for (size_t j1 = 0; j1 < a.grid_[i1].size(); ++j1) {
            const mpz_class& c = a.grid_[i1][j1];
            if (c == 0) continue;
            for (size_t i2 = 0; i2 < b.grid_.size(); ++i2)
                for (size_t j2 = 0; j2 < b.grid_[i2].size(); ++j2)
                    mpz_addmul(g[i1 + i2][j1 + j2].get_mpz_t(), c.get_mpz_t(), b.grid_[i2][j2].get_mpz_t());
        }
    return BiIntPoly(a.labels_, std::move(g));
}

}  // namespace fricke
