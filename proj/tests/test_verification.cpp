#include <doctest.h>

#include <algorithm>

#include "fricke/data.hpp"
#include "fricke/errors.hpp"
#include "fricke/verification.hpp"

using namespace fricke;

namespace {

std::vector<u64> primes_of(const std::vector<VerificationReport>& reports) {
    std::vector<u64> out;
    for (const auto& r : reports) out.push_back(*r.prime);
    return out;
}

}  // namespace

TEST_CASE("single congruence checks") {
    for (auto [n, p] : {std::pair{5, 23ULL}, std::pair{2, 11ULL}, std::pair{7, 5ULL}, std::pair{3, 5ULL}}) {
        const auto r = verify_congruence(n, p);
        CHECK(r.verdict == Verdict::Pass);
        CHECK(!r.witness.has_value());
        CHECK(!r.coeffs.empty());
        CHECK(r.level == n);
        CHECK(r.prime == p);
    }
    CHECK(verify_congruence(5, 23).direct_check);
    const auto skipped = verify_congruence(7, 7);
    CHECK(skipped.verdict == Verdict::Skipped);
    CHECK(!skipped.direct_check);
    CHECK(verify_congruence(5, 5).verdict == Verdict::Skipped);
    CHECK(verify_congruence(5, 7).verdict == Verdict::Pass);
    CHECK_THROWS_AS(verify_congruence(11, 13), Unsupported);
}

TEST_CASE("sweeps") {
    const auto s5 = sweep_congruence(5, 7, 100);
    CHECK(s5.size() == 22);
    CHECK(std::all_of(s5.begin(), s5.end(), [](const auto& r) { return r.verdict == Verdict::Pass; }));
    auto primes = primes_of(s5);
    CHECK(std::is_sorted(primes.begin(), primes.end()));

    const auto s7 = sweep_congruence(7, 5, 100);
    for (const auto& r : s7) CHECK(r.verdict == (r.prime == 7u ? Verdict::Skipped : Verdict::Pass));

    const auto s3 = sweep_congruence(3, 5, 40);
    CHECK(std::all_of(s3.begin(), s3.end(), [](const auto& r) { return r.verdict == Verdict::Pass; }));
    CHECK_THROWS(sweep_congruence(5, 50, 7));
}

TEST_CASE("sweep output does not depend on the worker count") {
    setenv("FRICKE_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    const auto one = sweep_congruence(2, 5, 200);
    setenv("FRICKE_THREADS", "4", 1);
    CHECK(worker_count() == 4);
    const auto four = sweep_congruence(2, 5, 200);
    unsetenv("FRICKE_THREADS");
    REQUIRE(one.size() == four.size());
    for (size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].subject == four[i].subject);
        CHECK(one[i].coeffs == four[i].coeffs);
    }
}

TEST_CASE("split primes") {
    CHECK(split_primes(5, 100).computed_primes == std::vector<u64>{7, 11, 19});
    CHECK(split_primes(7, 100).computed_primes == std::vector<u64>{5, 17});
    CHECK(split_primes(7, 4).computed_primes.empty());
    CHECK(split_primes(5, 100).conventional_primes == std::vector<u64>{2, 3, 5});
    CHECK(split_primes(7, 100).conventional_primes == std::vector<u64>{2, 3, 7});
    const std::vector<u64> monster = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71};
    CHECK(monster_split_primes(100) == monster);
    CHECK(monster_split_primes(4) == std::vector<u64>{2, 3});
    CHECK(monster_split_primes(200) == monster);
    CHECK(monster_primes() == monster);
}

TEST_CASE("class pipelines") {
    for (const auto& t : class_pipeline_targets()) {
        const auto r = verify_class_pipeline(t);
        CHECK_MESSAGE(r.verdict == Verdict::Pass, t);
    }
    CHECK_THROWS_AS(verify_class_pipeline("-23"), Unsupported);
}

TEST_CASE("identity suite") {
    const auto reports = run_identity_suite();
    CHECK(reports.size() == identity_catalog().size());
    for (const auto& r : reports) CHECK_MESSAGE(r.verdict == Verdict::Pass, r.subject);
    CHECK(verify_identity("discY_R5").verdict == Verdict::Pass);
    CHECK(verify_identity("h5_11_at_4").verdict == Verdict::Pass);
    CHECK(verify_identity("res_g7_h196").verdict == Verdict::Pass);
    CHECK(verify_identity("res_y5_20_h5_20").verdict == Verdict::Pass);
    CHECK_THROWS_AS(verify_identity("no_such_identity"), Unsupported);
}

TEST_CASE("isogeny spot checks") {
    CHECK(isogeny_spot_check(7, 1009, 50, 0).verdict == Verdict::Pass);
    CHECK(isogeny_spot_check(2, 101, 25, 1).verdict == Verdict::Pass);
    // At a small prime the degenerate locus is hit often; those draws are redrawn.
    for (int n : {2, 3, 5, 7}) {
        const auto r = isogeny_spot_check(n, 13, 200, 9);
        CHECK_MESSAGE(r.verdict == Verdict::Pass, r.subject);
        CHECK(r.note.find("200 trials") == 0);
    }
    // reproducible
    CHECK(isogeny_spot_check(5, 101, 10, 4).note == isogeny_spot_check(5, 101, 10, 4).note);
    CHECK_THROWS(isogeny_spot_check(7, 4, 10, 0));
    CHECK_THROWS(isogeny_spot_check(7, 101, 0, 0));
}
