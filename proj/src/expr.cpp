#include "fricke/expr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "fricke/resultant.hpp"

namespace fricke {

int variable_index(char v) {
    const auto pos = kVariables.find(v);
    if (pos == std::string_view::npos) throw std::invalid_argument(std::string("unknown variable ") + v);
    return static_cast<int>(pos);
}

// ---------------------------------------------------------------- MPoly

MPoly MPoly::constant(const mpz_class& c) {
    MPoly out;
    if (c != 0) out.terms_[Monomial{}] = c;
    return out;
}

MPoly MPoly::variable(char v) {
    MPoly out;
    Monomial m{};
    m[static_cast<size_t>(variable_index(v))] = 1;
    out.terms_[m] = 1;
    return out;
}

MPoly MPoly::from_int_poly(const IntPoly& f, char v) {
    MPoly out;
    const auto k = static_cast<size_t>(variable_index(v));
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        Monomial m{};
        m[k] = static_cast<std::uint16_t>(i);
        out.terms_[m] = f.coeff(i);
    }
    return out;
}

MPoly MPoly::from_bipoly(const BiIntPoly& f) {
    const auto& labels = f.labels();
    if (labels[0].size() != 1 || labels[1].size() != 1) throw std::invalid_argument("labels must be single letters");
    const auto a = static_cast<size_t>(variable_index(labels[0][0]));
    const auto b = static_cast<size_t>(variable_index(labels[1][0]));
    MPoly out;
    const auto& grid = f.grid();
    for (size_t i = 0; i < grid.size(); ++i)
        for (size_t j = 0; j < grid[i].size(); ++j) {
            if (grid[i][j] == 0) continue;
            Monomial m{};
            m[a] = static_cast<std::uint16_t>(i);
            m[b] = static_cast<std::uint16_t>(m[b] + j);
            out.terms_[m] += grid[i][j];
        }
    return out;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

mpz_class MPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int MPoly::degree_in(char v) const {
    const auto k = static_cast<size_t>(variable_index(v));
    int d = terms_.empty() ? kZeroPolyDegree : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[k]));
    return d;
}

std::string MPoly::variables() const {
    std::string out;
    for (size_t k = 0; k < kVariables.size(); ++k)
        for (const auto& [m, c] : terms_)
            if (m[k] != 0) {
                out += kVariables[k];
                break;
            }
    return out;
}

std::vector<MPoly> MPoly::coefficients_in(char v) const {
    const auto k = static_cast<size_t>(variable_index(v));
    const int d = degree_in(v);
    std::vector<MPoly> out(static_cast<size_t>(std::max(d + 1, 0)));
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest[k] = 0;
        out[m[k]].terms_[rest] = c;
    }
    return out;
}

IntPoly MPoly::to_int_poly(char v) const {
    const auto k = static_cast<size_t>(variable_index(v));
    std::vector<mpz_class> c(static_cast<size_t>(std::max(degree_in(v) + 1, 0)));
    for (const auto& [m, coef] : terms_) {
        for (size_t j = 0; j < m.size(); ++j)
            if (j != k && m[j] != 0) throw std::invalid_argument("polynomial is not univariate in " + std::string(1, v));
        c[m[k]] = coef;
    }
    return IntPoly(std::move(c));
}

BiIntPoly MPoly::to_bipoly(char a, char b) const {
    const auto ka = static_cast<size_t>(variable_index(a));
    const auto kb = static_cast<size_t>(variable_index(b));
    std::vector<std::vector<mpz_class>> grid(static_cast<size_t>(std::max(degree_in(a) + 1, 0)));
    const int db = degree_in(b);
    for (auto& row : grid) row.resize(static_cast<size_t>(std::max(db + 1, 0)));
    for (const auto& [m, coef] : terms_) {
        for (size_t j = 0; j < m.size(); ++j)
            if (j != ka && j != kb && m[j] != 0)
                throw std::invalid_argument(std::string("unexpected variable ") + kVariables[j]);
        grid[m[ka]][m[kb]] = coef;
    }
    return BiIntPoly({std::string(1, a), std::string(1, b)}, std::move(grid));
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto& slot = terms_[m];
        slot -= c;
        if (slot == 0) terms_.erase(m);
    }
    return *this;
}

MPoly operator-(const MPoly& a) {
    MPoly out = a;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            MPoly::Monomial m;
            for (size_t k = 0; k < m.size(); ++k) m[k] = static_cast<std::uint16_t>(ma[k] + mb[k]);
            out.terms_[m] += ca * cb;
        }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

MPoly pow(const MPoly& base, unsigned e) {
    MPoly acc = MPoly::constant(1);
    MPoly b = base;
    while (e > 0) {
        if (e & 1U) acc = acc * b;
        e >>= 1U;
        if (e) b = b * b;
    }
    return acc;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool unit_monomial = m == Monomial{};
        mpz_class mag = abs(c);
        if (c < 0) os << (first ? "-" : " - ");
        else if (!first) os << " + ";
        first = false;
        if (mag != 1 || unit_monomial) os << mag.get_str();
        for (size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            os << kVariables[k];
            if (m[k] > 1) os << '^' << m[k];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

struct Token {
    enum Kind { Number, Name, Op, End } kind;
    std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Number, std::string(s.substr(i, j - i))});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Name, std::string(s.substr(i, j - i))});
            i = j;
        } else if (std::string_view("+-*^(),").find(c) != std::string_view::npos) {
            out.push_back({Token::Op, std::string(1, c)});
            ++i;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::End, ""});
    return out;
}

bool is_function(const std::string& name) {
    return name == "res" || name == "disc" || name == "hsub" || name == "quo" || name == "deg" || name == "c4" ||
           name == "delta";
}

// Weierstrass invariants over Z[params].
std::pair<MPoly, MPoly> c4_and_delta(const std::vector<MPoly>& a) {
    const MPoly &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
    const MPoly two = MPoly::constant(2), four = MPoly::constant(4);
    const MPoly b2 = a1 * a1 + four * a2;
    const MPoly b4 = two * a4 + a1 * a3;
    const MPoly b6 = a3 * a3 + four * a6;
    const MPoly b8 = a1 * a1 * a6 + four * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    const MPoly c4 = b2 * b2 - MPoly::constant(24) * b4;
    const MPoly delta = -(b2 * b2 * b8) - MPoly::constant(8) * b4 * b4 * b4 - MPoly::constant(27) * b6 * b6 +
                        MPoly::constant(9) * b2 * b4 * b6;
    return {c4, delta};
}

class Parser {
public:
    Parser(std::string_view text, const ConstantTable& table) : toks_(tokenize(text)), table_(table) {}

    MPoly parse_all() {
        MPoly v = sum();
        if (peek().kind != Token::End) fail("trailing input at '" + peek().text + "'");
        return v;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
    const ConstantTable& table_;

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }
    bool at_op(char c) const { return peek().kind == Token::Op && peek().text[0] == c; }
    void expect(char c) {
        if (!at_op(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw std::invalid_argument("recipe: " + msg); }

    bool starts_atom() const {
        return peek().kind == Token::Number || peek().kind == Token::Name || at_op('(');
    }

    MPoly sum() {
        MPoly v = product();
        for (;;) {
            if (at_op('+')) {
                ++pos_;
                v += product();
            } else if (at_op('-')) {
                ++pos_;
                v -= product();
            } else {
                return v;
            }
        }
    }

    MPoly product() {
        MPoly v = unary();
        for (;;) {
            if (at_op('*')) {
                ++pos_;
                v = v * unary();
            } else if (starts_atom()) {
                v = v * unary();
            } else {
                return v;
            }
        }
    }

    MPoly unary() {
        if (at_op('-')) {
            ++pos_;
            return -unary();
        }
        return power();
    }

    MPoly power() {
        MPoly base = atom();
        if (!at_op('^')) return base;
        ++pos_;
        MPoly e = atom();
        if (!e.is_constant() || e.constant_term() < 0 || !e.constant_term().fits_uint_p())
            fail("exponent must be a non-negative integer");
        return pow(base, static_cast<unsigned>(e.constant_term().get_ui()));
    }

    char variable_arg() {
        Token t = next();
        if (t.kind != Token::Name || t.text.size() != 1 || kVariables.find(t.text[0]) == std::string_view::npos)
            fail("expected a variable name");
        return t.text[0];
    }

    std::vector<MPoly> args() {
        std::vector<MPoly> out;
        expect('(');
        out.push_back(sum());
        while (at_op(',')) {
            ++pos_;
            out.push_back(sum());
        }
        expect(')');
        return out;
    }

    MPoly atom() {
        Token t = next();
        switch (t.kind) {
            case Token::Number:
                return MPoly::constant(mpz_class(t.text));
            case Token::Op:
                if (t.text == "(") {
                    MPoly v = sum();
                    expect(')');
                    return v;
                }
                fail("unexpected '" + t.text + "'");
            case Token::End:
                fail("unexpected end of input");
            case Token::Name:
                break;
        }
        if (is_function(t.text)) return function(t.text);
        if (auto it = table_.find(t.text); it != table_.end()) {
            if (at_op('(')) return call(it->second);
            return it->second.value;
        }
        MPoly v = MPoly::constant(1);
        for (char c : t.text) {
            if (kVariables.find(c) == std::string_view::npos) fail("unknown name '" + t.text + "'");
            v = v * MPoly::variable(c);
        }
        return v;
    }

    MPoly call(const NamedConstant& k) {
        auto a = args();
        if (a.size() != k.vars.size()) fail("wrong number of arguments");
        std::vector<size_t> idx;
        for (char c : k.vars) idx.push_back(static_cast<size_t>(variable_index(c)));
        std::vector<std::vector<MPoly>> powers(a.size());
        MPoly out;
        for (const auto& [m, c] : k.value.terms()) {
            MPoly term = MPoly::constant(c);
            for (size_t i = 0; i < idx.size(); ++i) {
                const unsigned e = m[idx[i]];
                auto& cache = powers[i];
                while (cache.size() <= e) cache.push_back(cache.empty() ? MPoly::constant(1) : cache.back() * a[i]);
                term = term * cache[e];
            }
            out += term;
        }
        return out;
    }

    MPoly function(const std::string& name) {
        if (name == "c4" || name == "delta") {
            std::vector<MPoly> a;
            // c4(E) expands to E_a1, ..., E_a6.
            if (at_op('(') && toks_[pos_ + 1].kind == Token::Name && toks_[pos_ + 2].kind == Token::Op &&
                toks_[pos_ + 2].text == ")" && table_.count(toks_[pos_ + 1].text + "_a1")) {
                const std::string prefix = toks_[pos_ + 1].text;
                pos_ += 3;
                for (const char* s : {"_a1", "_a2", "_a3", "_a4", "_a6"}) a.push_back(table_.at(prefix + s).value);
            } else {
                a = args();
            }
            if (a.size() != 5) fail(name + " takes five curve coefficients");
            auto [c4, delta] = c4_and_delta(a);
            return name == "c4" ? c4 : delta;
        }
        expect('(');
        MPoly a = sum();
        expect(',');
        if (name == "quo") {
            MPoly b = sum();
            expect(')');
            std::string vars = (a + b).variables();
            if (vars.size() > 1) fail("quo needs univariate operands");
            const char v = vars.empty() ? 'X' : vars[0];
            return MPoly::from_int_poly(exact_divide(a.to_int_poly(v), b.to_int_poly(v)), v);
        }
        if (name == "res") {
            MPoly b = sum();
            expect(',');
            const char v = variable_arg();
            expect(')');
            return resultant_of(a, b, v);
        }
        const char v = variable_arg();
        if (name == "hsub") {
            expect(',');
            MPoly num = sum();
            expect(',');
            MPoly den = sum();
            expect(')');
            return homogeneous_substitute(a, v, num, den);
        }
        expect(')');
        if (name == "deg") return MPoly::constant(a.degree_in(v));
        return discriminant_of(a, v);
    }

    char other_variable(const MPoly& f, char v) {
        std::string vars = f.variables();
        std::erase(vars, v);
        if (vars.size() > 1) fail("at most two variables supported");
        return vars.empty() ? '\0' : vars[0];
    }

    MPoly resultant_of(const MPoly& a, const MPoly& b, char v) {
        const char w = other_variable(a + b, v);
        if (w == '\0') return MPoly::constant(resultant(a.to_int_poly(v), b.to_int_poly(v)));
        IntPoly r = bipoly_resultant(a.to_bipoly(v, w), b.to_bipoly(v, w), std::string(1, v));
        return MPoly::from_int_poly(r, w);
    }

    MPoly discriminant_of(const MPoly& a, char v) {
        const char w = other_variable(a, v);
        if (w == '\0') return MPoly::constant(discriminant(a.to_int_poly(v)));
        return MPoly::from_int_poly(bipoly_discriminant(a.to_bipoly(v, w), std::string(1, v)), w);
    }

    static MPoly homogeneous_substitute(const MPoly& f, char v, const MPoly& num, const MPoly& den) {
        auto cs = f.coefficients_in(v);
        const size_t d = cs.empty() ? 0 : cs.size() - 1;
        std::vector<MPoly> np{MPoly::constant(1)}, dp{MPoly::constant(1)};
        for (size_t i = 1; i <= d; ++i) {
            np.push_back(np.back() * num);
            dp.push_back(dp.back() * den);
        }
        MPoly out;
        for (size_t i = 0; i < cs.size(); ++i)
            if (!cs[i].is_zero()) out += cs[i] * np[i] * dp[d - i];
        return out;
    }
};

}  // namespace

MPoly evaluate(std::string_view text, const ConstantTable& constants) {
    return Parser(text, constants).parse_all();
}

std::vector<std::string> split_sides(std::string_view body) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        const size_t at = body.find("==", start);
        std::string side(body.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        const auto b = side.find_first_not_of(' ');
        const auto e = side.find_last_not_of(' ');
        if (b == std::string::npos) throw std::invalid_argument("empty side in identity");
        out.push_back(side.substr(b, e - b + 1));
        if (at == std::string_view::npos) break;
        start = at + 2;
    }
    if (out.size() < 2) throw std::invalid_argument("identity needs at least two sides");
    return out;
}

}  // namespace fricke
