// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fricke/cli.hpp"
#include "fricke/data.hpp"
#include "fricke/factor.hpp"
#include "fricke/resultant.hpp"
#include "fricke/supersingular.hpp"
#include "fricke/verification.hpp"
#include "oracles.hpp"

using namespace fricke;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::vector<u64> primes(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 p = lo; p <= hi; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

std::string cli_text(std::vector<std::string> args) {
    args.insert(args.begin(), "fricke");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return out.str();
}

void check_table(Outcome& o, const std::string& file, size_t expected_rows, const std::function<std::string(const std::string&)>& produce) {
    std::ifstream in(std::string(FRICKE_SOURCE_DIR) + "/tables/" + file);
    std::string line;
    size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        const auto sp = line.find(' ');
        const std::string p = line.substr(0, sp);
        if (produce(p) != line.substr(sp + 1) + "\n") o.fail(file + " differs at p = " + p);
    }
    if (rows != expected_rows) o.fail(file + " has " + std::to_string(rows) + " rows");
}

void check_sweep(Outcome& o, int level, u64 lo, u64 hi) {
    for (const auto& r : sweep_congruence(level, lo, hi)) {
        if (!in_theorem_range(level, *r.prime)) continue;
        if (r.verdict != Verdict::Pass) o.fail(r.subject + " " + to_string(r.verdict));
    }
}

int legendre(long long a, u64 p) { return legendre_symbol(a, PrimeModulus(p)); }

template <FiniteField F>
bool irreducible(const Poly<F>& g) {
    const Poly<F> x = Poly<F>::x(g.field());
    for (int k = 1; k <= g.degree(); ++k) {
        const int d = gcd(g, frobenius_power(g, k) - x).degree();
        if (k < g.degree() ? d != 0 : d != g.degree()) return false;
    }
    return true;
}

bool factor_certified(const ModPoly& f) {
    const auto fac = factor(f);
    if (!(fac.expand(f.field()) == f)) return false;
    for (const auto& [g, m] : fac.factors)
        if (!irreducible(g)) return false;
    return true;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int n, const std::string& title, const std::function<void(Outcome&)>& body) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            body(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.ok) ++failures;
        std::ostringstream line;
        line << (o.ok ? "[PASS] " : "[FAIL] ") << n << ". " << title;
        line.precision(2);
        line << std::fixed << " (" << s << "s)";
        if (!o.ok) line << ": " << o.detail;
        std::cout << line.str() << std::endl;
    };

    report(1, "supersingular table reproduced for 5 <= p <= 97", [](Outcome& o) {
        check_table(o, "table1.txt", 23, [](const std::string& p) { return cli_text({"ss", "--prime", p}); });
    });

    report(2, "level-5 and level-7 Fricke tables reproduced", [](Outcome& o) {
        check_table(o, "table2.txt", 12,
                    [](const std::string& p) { return cli_text({"star", "--level", "5", "--prime", p}); });
        check_table(o, "table3.txt", 19,
                    [](const std::string& p) { return cli_text({"star", "--level", "7", "--prime", p}); });
    });

    report(3, "level-5 congruence for every prime 7 <= p <= 1000", [](Outcome& o) { check_sweep(o, 5, 7, 1000); });
    report(4, "level-7 congruence for every prime 5 <= p <= 1000, p != 7",
           [](Outcome& o) { check_sweep(o, 7, 5, 1000); });
    report(5, "level-2 and level-3 congruences for every prime 5 <= p <= 1000", [](Outcome& o) {
        check_sweep(o, 2, 5, 1000);
        check_sweep(o, 3, 5, 1000);
    });

    report(6, "degree formulas for every prime 5 <= p <= 1000", [](Outcome& o) {
        for (u64 p : primes(5, 1000)) {
            const auto chi = characters(p);
            if (p != 7) {
                const long long d = fricke_ss(7, p).degree();
                if (3 * d != static_cast<long long>(p) - legendre(-3, p) + 3 * *chi.mu7)
                    o.fail("level 7 degree at p = " + std::to_string(p));
            }
            for (int n : {2, 3, 5, 7})
                if (p != static_cast<u64>(n) && fricke_ss(n, p).degree() != expected_degree(n, p))
                    o.fail("bookkeeping degree for level " + std::to_string(n) + " at p = " + std::to_string(p));
        }
    });

    report(7, "split primes: {7, 11, 19}, {5, 17} and the 15 Monster primes", [](Outcome& o) {
        if (split_primes(5, 1000).computed_primes != std::vector<u64>{7, 11, 19}) o.fail("level 5");
        if (split_primes(7, 1000).computed_primes != std::vector<u64>{5, 17}) o.fail("level 7");
        const auto m = monster_split_primes(1000);
        if (m != monster_primes() || m.size() != 15 || m.back() != 71) o.fail("Monster primes");
    });

    report(8, "class polynomial pipelines for -100 and -196 (both routes)", [](Outcome& o) {
        for (const auto& t : class_pipeline_targets()) {
            const auto r = verify_class_pipeline(t);
            if (r.verdict != Verdict::Pass) o.fail(t + ": " + (r.witness ? r.witness->message : ""));
        }
    });

    report(9, "identity catalog evaluates exactly", [](Outcome& o) {
        const auto reports = run_identity_suite();
        if (reports.size() != identity_catalog().size()) o.fail("report count");
        for (const auto& r : reports)
            if (r.verdict != Verdict::Pass) o.fail(r.subject);
    });

    report(10, "closed form equals the Hasse-invariant oracle for 5 <= p <= 200", [](Outcome& o) {
        for (u64 p : primes(5, 200))
            if (!(ss_poly(p) == ss_poly_hasse_oracle(p))) o.fail("p = " + std::to_string(p));
    });

    report(11, "roots and theorem methods agree for 5 <= p <= 500", [](Outcome& o) {
        for (int n : {2, 3, 5, 7})
            for (u64 p : primes(5, 500)) {
                if (!in_theorem_range(n, p)) continue;
                const ModPoly r = fricke_ss(n, p, FrickeMethod::Roots);  // throws unless F_p-rational
                if (!(r == fricke_ss(n, p, FrickeMethod::Theorem)))
                    o.fail("level " + std::to_string(n) + " at p = " + std::to_string(p));
            }
    });

    report(12, "isogeny spot checks: 100 trials per level at p = 101, 1009, 10007", [](Outcome& o) {
        for (int n : {2, 3, 5, 7})
            for (u64 p : {101ULL, 1009ULL, 10007ULL}) {
                const auto r = isogeny_spot_check(n, p, 100, 2024);
                if (r.verdict != Verdict::Pass) o.fail(r.subject + ": " + r.witness->message);
            }
    });

    report(13, "property suites: Sylvester oracle, factor certificates, exact square roots", [](Outcome& o) {
        std::mt19937_64 rng(13);
        for (int i = 0; i < 1000; ++i) {
            const int m = 1 + static_cast<int>(rng() % 6), n = 1 + static_cast<int>(rng() % 6);
            const auto f = oracle::random_int_poly(rng, m, 1000);
            const auto g = oracle::random_int_poly(rng, n, 1000);
            if (resultant(IntPoly(f), IntPoly(g)) != oracle::sylvester_resultant(f, g)) o.fail("Sylvester instance");
        }
        for (u64 p : primes(5, 97)) {
            if (!factor_certified(ss_poly(p))) o.fail("ss factorization");
            for (int n : {5, 7})
                if (p != static_cast<u64>(n) && !factor_certified(fricke_ss(n, p))) o.fail("Fricke factorization");
        }
        for (u64 p : {5ULL, 13ULL, 101ULL, 1009ULL}) {
            const PrimeField k{PrimeModulus(p)};
            for (int i = 0; i < 250; ++i) {
                std::vector<u64> c(2 + rng() % 12);
                for (auto& x : c) x = k.random(rng);
                c.back() = 1 + rng() % (p - 1);
                const ModPoly f(k, c);
                if (!factor_certified(f)) o.fail("random factorization");
                if (!(poly_exact_sqrt((f * f).monic()) == f.monic())) o.fail("exact square root");
            }
        }
    });

    std::cout << (failures == 0 ? "all 13 acceptance criteria pass" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
