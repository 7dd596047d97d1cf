#include "fricke/data.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "fricke/errors.hpp"

namespace fricke {

namespace detail {
extern const unsigned char kEmbeddedData[];
extern const std::size_t kEmbeddedDataSize;
}  // namespace detail

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<mpz_class> parse_integers(const std::string& s) {
    std::vector<mpz_class> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.emplace_back(tok);
    return out;
}

struct Store {
    ConstantTable constants;
    std::map<std::string, std::vector<mpz_class>, std::less<>> lists;
    std::map<std::string, BiIntPoly, std::less<>> bivariate;
    std::vector<NamedIdentity> identities;
};

Store parse_store(std::string_view text) {
    Store st;
    size_t line_no = 0;
    size_t start = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw std::runtime_error("data file line " + std::to_string(line_no) + ": " + msg);
        };
        if (line[0] == '@') {
            const auto colon = line.find(" : ");
            if (colon == std::string::npos) fail("identity record without ' : '");
            st.identities.push_back({trim(line.substr(1, colon - 1)), trim(line.substr(colon + 3))});
            continue;
        }
        const auto c1 = line.find(':');
        const auto c2 = line.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) fail("expected 'name : vars : data'");
        const std::string name = trim(line.substr(0, c1));
        const std::string vars = trim(line.substr(c1 + 1, c2 - c1 - 1));
        const std::string body = trim(line.substr(c2 + 1));
        if (vars == "-") {
            st.lists[name] = parse_integers(body);
            continue;
        }
        if (vars.size() == 1) {
            const IntPoly f(parse_integers(body));
            st.constants[name] = {vars, MPoly::from_int_poly(f, vars[0])};
            continue;
        }
        if (vars.size() != 3 || vars[1] != ',') fail("variables must be 'A' or 'A,B'");
        std::vector<std::vector<mpz_class>> grid;
        size_t rs = 0;
        for (;;) {
            const size_t bar = body.find('|', rs);
            grid.push_back(parse_integers(body.substr(rs, bar == std::string::npos ? std::string::npos : bar - rs)));
            if (bar == std::string::npos) break;
            rs = bar + 1;
        }
        BiIntPoly f({std::string(1, vars[0]), std::string(1, vars[2])}, std::move(grid));
        st.constants[name] = {std::string{vars[0], vars[2]}, MPoly::from_bipoly(f)};
        st.bivariate.emplace(name, std::move(f));
    }
    return st;
}

const Store& store() {
    static const Store s = parse_store(data_text());
    return s;
}

// den^deg(f) f(num/den) for univariate f.
IntPoly homogeneous_substitute(const IntPoly& f, const IntPoly& num, const IntPoly& den) {
    const int d = f.degree();
    IntPoly out;
    for (int i = 0; i <= d; ++i) {
        if (f.coeff(i) == 0) continue;
        out += pow(num, static_cast<unsigned>(i)) * pow(den, static_cast<unsigned>(d - i)) * f.coeff(i);
    }
    return out;
}

// Rewrites num(z)/den(z) with z = zn/zd as a quotient of polynomials in the parameter.
std::pair<IntPoly, IntPoly> compose_rational(const IntPoly& num, const IntPoly& den, const IntPoly& zn,
                                              const IntPoly& zd) {
    IntPoly n = homogeneous_substitute(num, zn, zd);
    IntPoly d = homogeneous_substitute(den, zn, zd);
    const int dn = num.degree(), dd = den.degree();
    if (dd > dn) n *= pow(zd, static_cast<unsigned>(dd - dn));
    if (dn > dd) d *= pow(zd, static_cast<unsigned>(dn - dd));
    return {n, d};
}

std::array<IntPoly, 5> curve(const std::string& prefix) {
    std::array<IntPoly, 5> out;
    const char* names[] = {"_a1", "_a2", "_a3", "_a4", "_a6"};
    for (size_t i = 0; i < 5; ++i) out[i] = univariate_constant(prefix + names[i]);
    return out;
}

std::vector<std::uint64_t> primes_of(std::string_view name) {
    std::vector<std::uint64_t> out;
    for (const auto& v : integer_list(name)) out.push_back(v.get_ui());
    return out;
}

FrickeLevelData build_level(int n) {
    const std::string N = std::to_string(n);
    FrickeLevelData L;
    L.level = n;
    L.R = bivariate_constant("R" + N);
    auto u = [](const char* name) { return univariate_constant(name); };
    switch (n) {
        case 5:
            L.side_factor_A = {{u("y5_20"), Selector::Mu5}};
            L.side_factor_B = {{u("y5_75"), Selector::TwoDelta}, {u("h5_4"), Selector::Epsilon}};
            break;
        case 7:
            L.side_factor_A = {{u("y7_7"), Selector::Mu7}, {u("y7_28"), Selector::Mu7}};
            L.side_factor_B = {{u("h7_3"), Selector::TwoDelta}, {u("g7"), Selector::Epsilon}};
            break;
        case 2:
            L.side_factor_A = {{u("y_0"), Selector::Epsilon}, {u("y2_8"), Selector::Mu2}};
            L.side_factor_B = {{u("y2_3"), Selector::TwoDelta}, {u("y2_4"), Selector::Epsilon}};
            break;
        case 3:
            L.side_factor_A = {{u("y_0"), Selector::Delta}, {u("y3_12"), Selector::Delta}};
            L.side_factor_B = {{u("y3_3"), Selector::TwoDelta}, {u("y3_4"), Selector::Epsilon}};
            break;
        default:
            throw Unsupported("level " + N);
    }
    L.excluded_primes = primes_of("S" + N);

    static const std::map<int, std::vector<int>> kRamificationDiscs = {
        {5, {-4, -11, -16, -19}}, {7, {-3, -12, -19, -27}}, {2, {-4, -8, -7}}, {3, {-3, -12, -8, -11}}};
    const auto& discs = kRamificationDiscs.at(n);
    for (size_t i = 0; i < discs.size(); ++i) {
        const std::string base = "ram" + N + "_" + std::to_string(i + 1);
        L.ramification.push_back({integer_list(base + "_x").at(0), univariate_constant(base + "_y"),
                                  univariate_constant(base + "_c"), discs[i]});
    }

    const std::string par = "par" + N;
    L.parametrization = {u((par + "_Xn").c_str()), u((par + "_Xd").c_str()), u((par + "_Yn").c_str()),
                         u((par + "_Yd").c_str())};

    CurvePairData& C = L.curves;
    const IntPoly z{0, 1};
    const IntPoly one{1};
    switch (n) {
        case 5: {
            C.parameter = 'b';
            C.domain = curve("E5");
            C.codomain = curve("E55");
            C.z_num = u("zmap5_n");
            C.z_den = u("zmap5_d");
            std::tie(C.j_domain_num, C.j_domain_den) =
                compose_rational(u("par5_Xn"), u("par5_Xd"), C.z_num, C.z_den);
            std::tie(C.j_codomain_num, C.j_codomain_den) = compose_rational(u("jc5_n"), u("jc5_d"), C.z_num, C.z_den);
            C.degenerate_locus = u("locus5");
            break;
        }
        case 7:
            C.parameter = 'd';
            C.domain = curve("E7");
            C.codomain = curve("E77");
            C.z_num = u("zmap7_n");
            C.z_den = u("zmap7_d");
            C.j_domain_num = u("j7_n");
            C.j_domain_den = u("j7_d");
            C.j_codomain_num = u("jc7_n");
            C.j_codomain_den = u("jc7_d");
            C.degenerate_locus = u("locus7");
            C.isogeny7 = std::array<BiIntPoly, 3>{bivariate_constant("iso7_A"), bivariate_constant("iso7_B"),
                                                  bivariate_constant("iso7_C")};
            break;
        default:
            C.parameter = 'z';
            C.domain = curve("E" + N);
            C.codomain = curve("E" + N + "p");
            C.z_num = z;
            C.z_den = one;
            C.j_domain_num = u((par + "_Xn").c_str());
            C.j_domain_den = u((par + "_Xd").c_str());
            C.j_codomain_num = u(("jc" + N + "_n").c_str());
            C.j_codomain_den = u(("jc" + N + "_d").c_str());
            C.degenerate_locus = u(("locus" + N).c_str());
            break;
    }
    return L;
}

}  // namespace

std::string to_string(Selector s) {
    switch (s) {
        case Selector::Delta: return "delta";
        case Selector::Epsilon: return "epsilon";
        case Selector::Mu2: return "mu2";
        case Selector::Mu5: return "mu5";
        case Selector::Mu7: return "mu7";
        case Selector::TwoDelta: return "2delta";
    }
    return "?";
}

std::string_view data_text() {
    return {reinterpret_cast<const char*>(detail::kEmbeddedData), detail::kEmbeddedDataSize};
}

std::uint64_t data_checksum() {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data_text()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const ConstantTable& constants() { return store().constants; }

const std::vector<mpz_class>& integer_list(std::string_view name) {
    const auto& lists = store().lists;
    auto it = lists.find(name);
    if (it == lists.end()) throw std::out_of_range("no integer list " + std::string(name));
    return it->second;
}

IntPoly univariate_constant(std::string_view name) {
    const auto& c = store().constants;
    auto it = c.find(name);
    if (it == c.end() || it->second.vars.size() != 1) throw std::out_of_range("no univariate constant " + std::string(name));
    return it->second.value.to_int_poly(it->second.vars[0]);
}

BiIntPoly bivariate_constant(std::string_view name) {
    const auto& b = store().bivariate;
    auto it = b.find(name);
    if (it == b.end()) throw std::out_of_range("no bivariate constant " + std::string(name));
    return it->second;
}

const FrickeLevelData& fricke_level(int level) {
    static const std::map<int, FrickeLevelData> levels = [] {
        std::map<int, FrickeLevelData> m;
        for (int n : {2, 3, 5, 7}) m.emplace(n, build_level(n));
        return m;
    }();
    auto it = levels.find(level);
    if (it == levels.end()) throw Unsupported("level " + std::to_string(level) + " (supported: 2, 3, 5, 7)");
    return it->second;
}

const std::vector<int>& class_discriminants() {
    static const std::vector<int> d = {-7, -8, -11, -12, -16, -19, -20, -24, -27, -28, -36, -75, -100, -147, -196};
    return d;
}

IntPoly class_poly(int discriminant) {
    const auto& ds = class_discriminants();
    if (std::find(ds.begin(), ds.end(), discriminant) == ds.end())
        throw Unsupported("no class polynomial stored for discriminant " + std::to_string(discriminant));
    return univariate_constant("H" + std::to_string(-discriminant));
}

const RogersRamanujanData& rogers_ramanujan() {
    static const RogersRamanujanData rr{univariate_constant("rr_f"),  bivariate_constant("rr_g"),
                                        bivariate_constant("rr_F"),   bivariate_constant("yi_P7"),
                                        univariate_constant("p196"), univariate_constant("f5"),
                                        univariate_constant("f196")};
    return rr;
}

const std::vector<NamedIdentity>& identity_catalog() { return store().identities; }

std::vector<std::uint64_t> conventional_split_primes(int level) {
    if (level == 5) return {2, 3, 5};
    if (level == 7) return {2, 3, 7};
    return {};
}

std::vector<std::uint64_t> monster_primes() { return primes_of("monster_S"); }

}  // namespace fricke
