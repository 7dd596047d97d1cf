#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fricke/cli.hpp"
#include "fricke/errors.hpp"
#include "fricke/factor.hpp"
#include "fricke/render.hpp"
#include "fricke/supersingular.hpp"
#include "fricke/verification.hpp"

namespace py = pybind11;
using namespace fricke;

namespace {

FrickeMethod parse_method(const std::string& m) {
    if (m == "roots") return FrickeMethod::Roots;
    if (m == "theorem") return FrickeMethod::Theorem;
    throw std::invalid_argument("method must be 'roots' or 'theorem'");
}

std::vector<u64> coeffs(const ModPoly& f) { return f.coeffs(); }

py::tuple factored(const ModPoly& f) {
    const auto fac = factor(f);
    py::list parts;
    for (const auto& [g, m] : fac.factors) parts.append(py::make_tuple(g.coeffs(), m));
    return py::make_tuple(fac.unit, parts);
}

ModPoly from_list(const std::vector<long long>& c, u64 p) {
    const PrimeField k{PrimeModulus(p)};
    std::vector<u64> r;
    r.reserve(c.size());
    for (long long x : c) r.push_back(k.from_int(x));
    return ModPoly(k, r);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Supersingular and Fricke polynomials over F_p";

    py::register_exception<Error>(m, "FrickeError", PyExc_RuntimeError);
    py::register_exception<Unsupported>(m, "Unsupported", PyExc_ValueError);

    py::enum_<Verdict>(m, "Verdict")
        .value("PASS", Verdict::Pass)
        .value("FAIL", Verdict::Fail)
        .value("SKIPPED", Verdict::Skipped)
        .def("__str__", [](Verdict v) { return to_string(v); });

    py::class_<Witness>(m, "Witness")
        .def_readonly("index", &Witness::index)
        .def_readonly("expected", &Witness::expected)
        .def_readonly("actual", &Witness::actual)
        .def_readonly("message", &Witness::message);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("subject", &VerificationReport::subject)
        .def_readonly("prime", &VerificationReport::prime)
        .def_readonly("level", &VerificationReport::level)
        .def_readonly("verdict", &VerificationReport::verdict)
        .def_readonly("witness", &VerificationReport::witness)
        .def_readonly("coeffs", &VerificationReport::coeffs)
        .def_readonly("note", &VerificationReport::note)
        .def_readonly("direct_check", &VerificationReport::direct_check)
        .def_readonly("seconds", &VerificationReport::seconds)
        .def("__repr__", [](const VerificationReport& r) {
            return "<VerificationReport " + r.subject + " " + to_string(r.verdict) + ">";
        });

    py::class_<SplitPrimeResult>(m, "SplitPrimeResult")
        .def_readonly("level", &SplitPrimeResult::level)
        .def_readonly("bound", &SplitPrimeResult::bound)
        .def_readonly("computed_primes", &SplitPrimeResult::computed_primes)
        .def_readonly("conventional_primes", &SplitPrimeResult::conventional_primes);

    m.def("is_prime", &is_prime, py::arg("n"));
    m.def(
        "ss_poly", [](u64 p) { return coeffs(ss_poly(p)); }, py::arg("p"),
        "Ascending coefficients of the supersingular polynomial mod p.");
    m.def(
        "fricke_ss",
        [](int level, u64 p, const std::string& method) { return coeffs(fricke_ss(level, p, parse_method(method))); },
        py::arg("level"), py::arg("p"), py::arg("method") = "roots",
        "Ascending coefficients of the level-N Fricke supersingular polynomial mod p.");
    m.def("expected_degree", &expected_degree, py::arg("level"), py::arg("p"));
    m.def("in_theorem_range", &in_theorem_range, py::arg("level"), py::arg("p"));
    m.def(
        "factor", [](const std::vector<long long>& c, u64 p) { return factored(from_list(c, p)); }, py::arg("coeffs"),
        py::arg("p"), "Returns (unit, [(monic factor coeffs, multiplicity), ...]).");
    m.def(
        "render", [](const std::vector<long long>& c, u64 p, char var) { return render_factored(from_list(c, p), var); },
        py::arg("coeffs"), py::arg("p"), py::arg("var") = 'x');

    m.def("verify_congruence", &verify_congruence, py::arg("level"), py::arg("p"),
          py::call_guard<py::gil_scoped_release>());
    m.def("sweep_congruence", &sweep_congruence, py::arg("level"), py::arg("pmin"), py::arg("pmax"),
          py::call_guard<py::gil_scoped_release>());
    m.def("split_primes", &split_primes, py::arg("level"), py::arg("bound"),
          py::call_guard<py::gil_scoped_release>());
    m.def("monster_split_primes", &monster_split_primes, py::arg("bound"),
          py::call_guard<py::gil_scoped_release>());
    m.def("verify_class_pipeline", &verify_class_pipeline, py::arg("target"),
          py::call_guard<py::gil_scoped_release>());
    m.def("class_pipeline_targets", &class_pipeline_targets);
    m.def("run_identity_suite", &run_identity_suite, py::call_guard<py::gil_scoped_release>());
    m.def("verify_identity", &verify_identity, py::arg("id"));
    m.def("isogeny_spot_check", &isogeny_spot_check, py::arg("level"), py::arg("p"), py::arg("trials") = 100,
          py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<std::string> all{"fricke"};
            all.insert(all.end(), args.begin(), args.end());
            std::vector<const char*> argv;
            for (const auto& a : all) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line in-process; returns (exit code, stdout, stderr).");
}
