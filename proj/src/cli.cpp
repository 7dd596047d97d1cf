#include "fricke/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "fricke/data.hpp"
#include "fricke/errors.hpp"
#include "fricke/render.hpp"
#include "fricke/supersingular.hpp"
#include "fricke/verification.hpp"

namespace fricke::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json base_record(const std::string& command, const std::string& subject) {
    return json{{"command", command}, {"subject", subject}, {"prime", nullptr}, {"level", nullptr},
                {"verdict", "pass"},  {"witness", nullptr}, {"coeffs", json::array()}};
}

json coeff_strings(const ModPoly& f) {
    json a = json::array();
    for (u64 c : f.coeffs()) a.push_back(std::to_string(c));
    return a;
}

json polynomial_record(const std::string& command, const std::string& subject, const ModPoly& f, char var) {
    json r = base_record(command, subject);
    r["prime"] = f.field().characteristic();
    r["coeffs"] = coeff_strings(f);
    const auto fac = factor(f);
    json factors = json::array();
    for (const auto& [g, mult] : fac.factors) factors.push_back({{"coeffs", coeff_strings(g)}, {"multiplicity", mult}});
    r["factors"] = factors;
    r["text"] = render_factored(fac, var);
    return r;
}

json report_record(const std::string& command, const VerificationReport& rep) {
    json r = base_record(command, rep.subject);
    if (rep.prime) r["prime"] = *rep.prime;
    if (rep.level) r["level"] = *rep.level;
    r["verdict"] = to_string(rep.verdict);
    if (rep.witness) {
        json w = {{"message", rep.witness->message}};
        w["index"] = rep.witness->index ? json(*rep.witness->index) : json(nullptr);
        w["expected"] = rep.witness->expected;
        w["actual"] = rep.witness->actual;
        r["witness"] = w;
    }
    r["coeffs"] = rep.coeffs;
    r["direct_check"] = rep.direct_check;
    r["note"] = rep.note;
    r["seconds"] = rep.seconds;
    return r;
}

std::string join(const json& values) {
    std::string s;
    for (const auto& v : values) {
        if (!s.empty()) s += ' ';
        s += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return s;
}

std::string report_line(const json& r) {
    std::string line = r["subject"].get<std::string>() + " " + r["verdict"].get<std::string>();
    if (r.value("direct_check", false)) line += " (excluded prime, checked directly)";
    const std::string note = r.value("note", std::string());
    if (!note.empty()) line += " (" + note + ")";
    if (r.contains("seed")) line += " seed=" + r["seed"].dump();
    if (!r["witness"].is_null()) {
        const json& w = r["witness"];
        line += "\n  witness: " + w["message"].get<std::string>();
        if (!w["expected"].get<std::string>().empty() || !w["actual"].get<std::string>().empty())
            line += "; expected " + w["expected"].get<std::string>() + ", actual " + w["actual"].get<std::string>();
    }
    return line;
}

std::string summary_line(const json& records) {
    int pass = 0, fail = 0, skipped = 0;
    for (const auto& r : records) {
        const auto v = r["verdict"].get<std::string>();
        (v == "pass" ? pass : v == "fail" ? fail : skipped)++;
    }
    return "summary: " + std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
           std::to_string(skipped) + " skipped";
}

std::string render_records(const json& records) {
    std::ostringstream out;
    bool reports = false;
    for (const auto& r : records) {
        const auto command = r["command"].get<std::string>();
        if (command == "ss" || command == "star") {
            out << r["text"].get<std::string>() << '\n';
        } else if (command == "split") {
            out << "level " << r["level"].dump() << ": computed split primes 5 <= p <= " << r["bound"].dump()
                << ", p != " << r["level"].dump() << ": " << join(r["primes"]) << '\n';
            if (!r["conventional"].empty())
                out << "conventional primes (not computed): " << join(r["conventional"]) << '\n';
            if (!r["annotation"].get<std::string>().empty()) out << r["annotation"].get<std::string>() << '\n';
        } else if (command == "monster") {
            out << "primes p <= " << r["bound"].dump() << " with ss_p split over F_p: " << join(r["primes"]) << '\n';
            out << r["annotation"].get<std::string>() << '\n';
        } else {
            reports = true;
            out << report_line(r) << '\n';
        }
    }
    if (reports) out << summary_line(records) << '\n';
    return out.str();
}

u64 require_prime_arg(u64 p, u64 minimum) {
    if (p < minimum || !is_prime(p))
        throw UsageError(std::to_string(p) + " is not a prime >= " + std::to_string(minimum));
    return p;
}

int require_level(int level) {
    if (level != 2 && level != 3 && level != 5 && level != 7)
        throw UsageError("level must be one of 2, 3, 5, 7");
    return level;
}

bool any_failure(const json& records) {
    return std::any_of(records.begin(), records.end(), [](const json& r) { return r["verdict"] == "fail"; });
}

struct SporadicGroup {
    const char* name;
    std::vector<u64> primes;
};

std::optional<SporadicGroup> sporadic_group(int level) {
    if (level == 5) return SporadicGroup{"Harada-Norton group HN", {2, 3, 5, 7, 11, 19}};
    if (level == 7) return SporadicGroup{"Held group He", {2, 3, 5, 7, 17}};
    return std::nullopt;
}

json split_record(int level, u64 bound) {
    const SplitPrimeResult res = split_primes(level, bound);
    json r = base_record("split", "split" + std::to_string(level));
    r["level"] = level;
    r["bound"] = bound;
    r["primes"] = res.computed_primes;
    r["conventional"] = res.conventional_primes;
    r["annotation"] = "";
    if (auto group = sporadic_group(level)) {
        std::vector<u64> all = res.computed_primes;
        all.insert(all.end(), res.conventional_primes.begin(), res.conventional_primes.end());
        std::sort(all.begin(), all.end());
        const bool match = all == group->primes;
        r["annotation"] = std::string(match ? "together these are exactly" : "these differ from") +
                          " the primes dividing the order of the " + group->name;
        if (!match && bound >= group->primes.back()) r["verdict"] = "fail";
    }
    return r;
}

json monster_record(u64 bound) {
    json r = base_record("monster", "monster-split-primes");
    r["bound"] = bound;
    const auto primes = monster_split_primes(bound);
    r["primes"] = primes;
    const auto m = monster_primes();
    const bool match = bound >= 71 ? primes == m : std::all_of(primes.begin(), primes.end(), [&](u64 p) {
        return std::find(m.begin(), m.end(), p) != m.end();
    });
    r["annotation"] = std::string(match ? "consistent with" : "differs from") +
                      " the 15 primes dividing the order of the Monster";
    if (!match) r["verdict"] = "fail";
    return r;
}

json sorted_by_prime(json records) {
    std::stable_sort(records.begin(), records.end(), [](const json& a, const json& b) {
        const u64 pa = a["prime"].is_null() ? 0 : a["prime"].get<u64>();
        const u64 pb = b["prime"].is_null() ? 0 : b["prime"].get<u64>();
        return pa < pb;
    });
    return records;
}

}  // namespace

std::string render_text(const std::string& json_document) { return render_records(json::parse(json_document)); }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Supersingular polynomials and their Fricke analogues over F_p", "fricke"};
    app.require_subcommand(1);
    bool as_json = false;

    u64 prime = 0;
    int level = 0;
    std::string level_spec, method = "roots", disc, id;
    u64 from = 0, to = 0, bound = 0;
    int trials = 100;
    std::uint64_t seed = 0;

    auto* ss = app.add_subcommand("ss", "ss_p(x) factored over F_p");
    ss->add_option("--prime", prime, "prime p >= 2")->required();

    auto* star = app.add_subcommand("star", "ss_p^(N*)(Y) factored over F_p");
    star->add_option("--level", level, "level N in {2, 3, 5, 7}")->required();
    star->add_option("--prime", prime, "prime p >= 5, p != N")->required();
    star->add_option("--method", method, "roots or theorem")->check(CLI::IsMember({"roots", "theorem"}));

    auto* verify = app.add_subcommand("verify", "check the congruence for every prime in a range");
    verify->add_option("--level", level_spec, "2, 3, 5, 7 or all")->required();
    verify->add_option("--from", from, "smallest prime")->required();
    verify->add_option("--to", to, "largest prime")->required();

    auto* split = app.add_subcommand("split", "primes where ss_p^(N*) splits into linear factors");
    split->add_option("--level", level, "level N in {2, 3, 5, 7}")->required();
    split->add_option("--bound", bound, "largest prime considered (>= 5)")->required();

    auto* monster = app.add_subcommand("monster", "primes where ss_p splits into linear factors");
    monster->add_option("--bound", bound, "largest prime considered (>= 5)")->required();

    auto* class_verify = app.add_subcommand("class-verify", "class polynomial elimination pipelines");
    class_verify->add_option("--disc", disc, "-100, -196 or -196-alt")->required();

    auto* identities = app.add_subcommand("identities", "evaluate the identity catalog over Z");
    identities->add_option("--id", id, "a single catalog entry");

    auto* isogeny = app.add_subcommand("isogeny", "seeded spot checks of the curve families and isogenies");
    isogeny->add_option("--level", level, "level N in {2, 3, 5, 7}")->required();
    isogeny->add_option("--prime", prime, "prime p >= 5")->required();
    isogeny->add_option("--trials", trials, "number of random parameters");
    isogeny->add_option("--seed", seed, "RNG seed");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->add_flag("--json", as_json, "emit JSON");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    json records = json::array();
    try {
        if (ss->parsed()) {
            require_prime_arg(prime, 2);
            records.push_back(polynomial_record("ss", "ss@p=" + std::to_string(prime), ss_poly(prime), 'x'));
        } else if (star->parsed()) {
            require_level(level);
            if (prime < 5 || prime == static_cast<u64>(level) || !is_prime(prime))
                throw UsageError("ss_p^(N*) is defined for primes p >= 5 with p != N (got N = " +
                                 std::to_string(level) + ", p = " + std::to_string(prime) + ")");
            const auto m = method == "theorem" ? FrickeMethod::Theorem : FrickeMethod::Roots;
            const std::string subject = "star" + std::to_string(level) + "@p=" + std::to_string(prime);
            try {
                json r = polynomial_record("star", subject, fricke_ss(level, prime, m), 'Y');
                r["level"] = level;
                r["method"] = to_string(m);
                records.push_back(r);
            } catch (const Error& e) {
                json r = base_record("star", subject);
                r["prime"] = prime;
                r["level"] = level;
                r["verdict"] = "fail";
                r["witness"] = {{"index", nullptr}, {"expected", ""}, {"actual", ""}, {"message", e.what()}};
                records.push_back(r);
            }
        } else if (verify->parsed()) {
            std::vector<int> levels;
            if (level_spec == "all") {
                levels = {5, 7, 2, 3};
            } else {
                try {
                    levels = {require_level(std::stoi(level_spec))};
                } catch (const std::logic_error&) {
                    throw UsageError("level must be one of 2, 3, 5, 7, all");
                }
            }
            if (from > to) throw UsageError("--from must not exceed --to");
            if (to < 5) throw UsageError("the range contains no prime >= 5");
            for (int n : levels)
                for (const auto& rep : sweep_congruence(n, from, to)) records.push_back(report_record("verify", rep));
            records = sorted_by_prime(std::move(records));
        } else if (split->parsed()) {
            require_level(level);
            if (bound < 5) throw UsageError("--bound must be at least 5");
            records.push_back(split_record(level, bound));
        } else if (monster->parsed()) {
            if (bound < 5) throw UsageError("--bound must be at least 5");
            records.push_back(monster_record(bound));
        } else if (class_verify->parsed()) {
            const auto& targets = class_pipeline_targets();
            if (std::find(targets.begin(), targets.end(), disc) == targets.end())
                throw UsageError("--disc must be one of -100, -196, -196-alt");
            records.push_back(report_record("class-verify", verify_class_pipeline(disc)));
        } else if (identities->parsed()) {
            if (!id.empty()) {
                const auto& cat = identity_catalog();
                if (std::none_of(cat.begin(), cat.end(), [&](const NamedIdentity& e) { return e.id == id; }))
                    throw UsageError("no catalog identity named " + id);
                records.push_back(report_record("identities", verify_identity(id)));
            } else {
                for (const auto& rep : run_identity_suite()) records.push_back(report_record("identities", rep));
            }
        } else if (isogeny->parsed()) {
            require_level(level);
            require_prime_arg(prime, 5);
            if (trials < 1) throw UsageError("--trials must be positive");
            json r = report_record("isogeny", isogeny_spot_check(level, prime, trials, seed));
            r["seed"] = seed;
            r["trials"] = trials;
            records.push_back(r);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }

    if (as_json)
        out << records.dump(2) << '\n';
    else
        out << render_records(records);
    return any_failure(records) ? kExitFailure : kExitOk;
}

}  // namespace fricke::cli
