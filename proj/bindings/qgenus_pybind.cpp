// Python surface: thin wrappers over the C++ core.  Sequences cross the
// boundary as plain lists of ints; reports cross as small readonly classes.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "qgenus/bounds.hpp"
#include "qgenus/extremal.hpp"
#include "qgenus/oracle.hpp"

namespace py = pybind11;
using namespace qgenus;

namespace {

std::string violated_letters(const AdmissibilityReport& report) {
    std::string letters;
    for (Clause c : report.violated) letters.push_back(clause_letter(c));
    return letters;
}

std::vector<std::vector<i64>> as_lists(const std::vector<GammaSequence>& sequences) {
    std::vector<std::vector<i64>> out;
    out.reserve(sequences.size());
    for (const GammaSequence& g : sequences) out.push_back(g.values());
    return out;
}

}  // namespace

PYBIND11_MODULE(_qgenus, m) {
    m.doc() = "genus bounds for curves on a smooth three-dimensional quadric";

    py::enum_<Regime>(m, "Regime")
        .value("LargeDegree", Regime::LargeDegree)
        .value("SmallDegree", Regime::SmallDegree);

    py::enum_<Sharpness>(m, "Sharpness")
        .value("SharpAttainedByS", Sharpness::SharpAttainedByS)
        .value("SharpPossiblyOther", Sharpness::SharpPossiblyOther)
        .value("UnknownConjecturalPi", Sharpness::UnknownConjecturalPi);

    py::class_<ConstraintProfile>(m, "ConstraintProfile")
        .def(py::init([](i64 prefix_length, i64 plateau_height, i64 n_min, i64 mass) {
                 return ConstraintProfile{prefix_length, plateau_height, n_min, mass};
             }),
             py::arg("prefix_length"), py::arg("plateau_height"), py::arg("n_min"),
             py::arg("mass"))
        .def_static("large_degree", &ConstraintProfile::large_degree, py::arg("d"), py::arg("k"))
        .def_static("small_degree", &ConstraintProfile::small_degree, py::arg("d"), py::arg("k"))
        .def_static("theta_k", &ConstraintProfile::theta_k, py::arg("d"), py::arg("k"))
        .def_readonly("prefix_length", &ConstraintProfile::prefix_length)
        .def_readonly("plateau_height", &ConstraintProfile::plateau_height)
        .def_readonly("n_min", &ConstraintProfile::n_min)
        .def_readonly("mass", &ConstraintProfile::mass);

    py::class_<NuDecomposition>(m, "NuDecomposition")
        .def_readonly("nu", &NuDecomposition::nu)
        .def_readonly("eps_hat", &NuDecomposition::eps_hat);

    py::class_<InvariantSet>(m, "InvariantSet")
        .def_readonly("n0", &InvariantSet::n0)
        .def_readonly("eps", &InvariantSet::eps)
        .def_readonly("theta0", &InvariantSet::theta0)
        .def_readonly("eps_prime", &InvariantSet::eps_prime)
        .def_readonly("nu_data", &InvariantSet::nu_data);

    py::class_<LinkageDescriptor>(m, "LinkageDescriptor")
        .def_readonly("ci_a", &LinkageDescriptor::ci_a)
        .def_readonly("ci_b", &LinkageDescriptor::ci_b)
        .def_readonly("residual_degree", &LinkageDescriptor::residual_degree)
        .def_readonly("residual_on_quadric_surface",
                      &LinkageDescriptor::residual_on_quadric_surface)
        .def_readonly("acm_residual", &LinkageDescriptor::acm_residual);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("regime", &BoundReport::regime)
        .def_readonly("invariants", &BoundReport::invariants)
        .def_readonly("pi_value", &BoundReport::pi_value)
        .def_readonly("xi_value", &BoundReport::xi_value)
        .def_readonly("bound_g_minus_1", &BoundReport::bound_g_minus_1)
        .def_readonly("capital_pi", &BoundReport::capital_pi)
        .def_readonly("sharp", &BoundReport::sharp)
        .def_readonly("linkage", &BoundReport::linkage)
        .def_readonly("no_small_curve_bound", &BoundReport::no_small_curve_bound);

    py::class_<TemplateReport>(m, "TemplateReport")
        .def_property_readonly("sequence",
                               [](const TemplateReport& r) { return r.sequence.values(); })
        .def_readonly("repaired", &TemplateReport::repaired)
        .def_readonly("raw_template", &TemplateReport::raw_template)
        .def_readonly("notes", &TemplateReport::notes)
        .def_property_readonly(
            "functional", [](const TemplateReport& r) { return genus_functional(r.sequence); });

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("max_value", &OracleResult::max_value)
        .def_property_readonly(
            "argmax_sequences", [](const OracleResult& r) { return as_lists(r.argmax_sequences); })
        .def_readonly("search_space_size", &OracleResult::search_space_size);

    py::class_<VerificationCheck>(m, "VerificationCheck")
        .def_readonly("name", &VerificationCheck::name)
        .def_readonly("expected", &VerificationCheck::expected)
        .def_readonly("actual", &VerificationCheck::actual)
        .def_readonly("pass_", &VerificationCheck::pass)
        .def_readonly("witness", &VerificationCheck::witness);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("d", &VerificationReport::d)
        .def_readonly("k", &VerificationReport::k)
        .def_readonly("checks", &VerificationReport::checks)
        .def("all_pass", &VerificationReport::all_pass);

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    m.attr("DEFAULT_NODE_BUDGET") = kDefaultNodeBudget;

    m.def("regime", [](i64 d, i64 k) { return regime({d, k}); }, py::arg("d"), py::arg("k"));
    m.def(
        "n0_and_eps",
        [](i64 d, i64 k) {
            const auto [n0, eps] = n0_and_eps({d, k});
            return std::make_pair(n0, eps);
        },
        py::arg("d"), py::arg("k"));
    m.def(
        "theta0_and_eps_prime",
        [](i64 d, i64 k) {
            const auto [theta0, eps_prime] = theta0_and_eps_prime({d, k});
            return std::make_pair(theta0, eps_prime);
        },
        py::arg("d"), py::arg("k"));
    m.def(
        "nu_decomposition",
        [](i64 d, i64 k) {
            const auto [nu, eps_hat] = nu_decomposition({d, k});
            return std::make_pair(nu, eps_hat);
        },
        py::arg("d"), py::arg("k"));
    m.def("invariant_set", [](i64 d, i64 k) { return invariant_set({d, k}); }, py::arg("d"),
          py::arg("k"));
    m.def("isqrt_floor", &isqrt_floor, py::arg("x"));

    m.def("pi", &pi, py::arg("d"), py::arg("k"));
    m.def("xi", &xi, py::arg("d"), py::arg("k"));
    m.def("pi_prime", &pi_prime, py::arg("d"), py::arg("k"));
    m.def("xi_prime", &xi_prime, py::arg("d"), py::arg("k"));
    m.def("capital_pi", &capital_pi, py::arg("d"), py::arg("k"));
    m.def("bound_no_small_curve", &bound_no_small_curve, py::arg("d"), py::arg("k"));
    m.def("sharpness", &sharpness, py::arg("d"), py::arg("k"));
    m.def("sharpness_label", &sharpness_label, py::arg("sharp"));
    m.def("regime_label", &regime_label, py::arg("regime"));
    m.def("linkage_descriptor", &linkage_descriptor, py::arg("d"), py::arg("k"));
    m.def("genus_bound", &genus_bound, py::arg("d"), py::arg("k"));
    m.def(
        "bound_report_json",
        [](i64 d, i64 k) { return json_report(d, k, genus_bound(d, k)).dump(2); }, py::arg("d"),
        py::arg("k"));
    m.def(
        "bound_report_text", [](i64 d, i64 k) { return text_report(d, k, genus_bound(d, k)); },
        py::arg("d"), py::arg("k"));
    m.def("csv_header", &csv_header, py::arg("with_no_small_curve") = false);
    m.def(
        "csv_row",
        [](i64 d, i64 k, bool with_no_small_curve) {
            return csv_row(d, k, genus_bound(d, k), with_no_small_curve);
        },
        py::arg("d"), py::arg("k"), py::arg("with_no_small_curve") = false);

    m.def(
        "genus_functional",
        [](const std::vector<i64>& values) { return genus_functional(GammaSequence(values)); },
        py::arg("gamma"));
    m.def(
        "beta_from_gamma",
        [](const std::vector<i64>& values) { return beta_from_gamma(GammaSequence(values)); },
        py::arg("gamma"));
    m.def(
        "is_admissible",
        [](const std::vector<i64>& values, const ConstraintProfile& profile) {
            return is_admissible(GammaSequence(values), profile);
        },
        py::arg("gamma"), py::arg("profile"));
    m.def(
        "check_admissibility",
        [](const std::vector<i64>& values, const ConstraintProfile& profile) {
            const AdmissibilityReport report = check_admissibility(GammaSequence(values), profile);
            return std::make_tuple(report.admissible, violated_letters(report), report.n,
                                   report.m);
        },
        py::arg("gamma"), py::arg("profile"),
        "returns (admissible, violated clause letters, n, m)");
    m.def(
        "improve",
        [](const std::vector<i64>& values, const ConstraintProfile& profile) {
            return improve(GammaSequence(values), profile).values();
        },
        py::arg("gamma"), py::arg("profile"));

    m.def("build_tilde_gamma_large", &build_tilde_gamma_large, py::arg("d"), py::arg("k"));
    m.def("build_tilde_gamma_small", &build_tilde_gamma_small, py::arg("d"), py::arg("k"));
    m.def("build_tilde_gamma_theta_k", &build_tilde_gamma_theta_k, py::arg("d"), py::arg("k"));
    m.def("build_hat_gamma", &build_hat_gamma, py::arg("d"), py::arg("k"));

    m.def(
        "all_admissible",
        [](const ConstraintProfile& profile, i64 node_budget) {
            return as_lists(all_admissible(profile, node_budget));
        },
        py::arg("profile"), py::arg("node_budget") = kDefaultNodeBudget);
    m.def("oracle_max", &oracle_max, py::arg("profile"),
          py::arg("node_budget") = kDefaultNodeBudget);
    m.def("verify_pair", &verify_pair, py::arg("d"), py::arg("k"),
          py::arg("node_budget") = kDefaultNodeBudget, py::arg("expected_offset") = 0);
}
