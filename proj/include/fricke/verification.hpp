#pragma once

// Checks of the congruences, split-prime sets, class-polynomial pipelines,
// identity catalog and isogeny claims. Failures are verdicts, not exceptions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fricke/field.hpp"

namespace fricke {

enum class Verdict { Pass, Fail, Skipped };

std::string to_string(Verdict v);

struct Witness {
    /// Coefficient index where the sides first differ, when applicable.
    std::optional<int> index;
    std::string expected;
    std::string actual;
    std::string message;
};

struct VerificationReport {
    std::string subject;
    std::optional<u64> prime;
    std::optional<int> level;
    Verdict verdict = Verdict::Pass;
    std::optional<Witness> witness;
    /// Result coefficients (ascending, decimal), when the check produced a polynomial.
    std::vector<std::string> coeffs;
    std::string note;
    /// Prime belongs to the level's excluded set and is checked directly.
    bool direct_check = false;
    double seconds = 0;
};

/// A_{N,p} Res_X(ss_p, R_N) == B_{N,p} (ss_p^(N*))^2 mod p, with ss_p^(N*) from
/// the roots method. Skipped outside the level's range.
VerificationReport verify_congruence(int level, u64 p);

/// One report per prime p in [max(pmin, 5), pmax]. Runs on FRICKE_THREADS workers.
std::vector<VerificationReport> sweep_congruence(int level, u64 pmin, u64 pmax);

/// Worker count from FRICKE_THREADS (default: hardware concurrency, at least 1).
unsigned worker_count();

struct SplitPrimeResult {
    int level;
    u64 bound;
    std::vector<u64> computed_primes;
    std::vector<u64> conventional_primes;
};

SplitPrimeResult split_primes(int level, u64 bound);

/// Primes p <= bound for which ss_p splits into linear factors over F_p.
std::vector<u64> monster_split_primes(u64 bound);

/// Targets: "-100", "-196", "-196-alt".
VerificationReport verify_class_pipeline(const std::string& target);
const std::vector<std::string>& class_pipeline_targets();

/// Evaluates every catalog identity over Z.
std::vector<VerificationReport> run_identity_suite();
VerificationReport verify_identity(const std::string& id);

/// Seeded random checks of the j-invariant formulas and, for levels 2 and 7,
/// of the explicit isogeny maps.
VerificationReport isogeny_spot_check(int level, u64 p, int trials, std::uint64_t seed);

}  // namespace fricke
