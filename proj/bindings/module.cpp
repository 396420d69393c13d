#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modulift/certifier.hpp"

namespace py = pybind11;
using namespace modulift;

PYBIND11_MODULE(_modulift, m) {
    m.doc() = "exact ATSP solving and modular-lift optimality certificates";

    py::class_<AtspInstance>(m, "AtspInstance")
        .def_readwrite("name", &AtspInstance::name)
        .def_readonly("n", &AtspInstance::n)
        .def("cost", &AtspInstance::cost)
        .def("has_arc", &AtspInstance::has_arc)
        .def("num_arcs", &AtspInstance::num_arcs)
        .def("arcs", &AtspInstance::arcs);

    py::class_<Tour>(m, "Tour")
        .def(py::init([](std::vector<int> order) { return Tour{std::move(order)}; }))
        .def_readwrite("order", &Tour::order);

    py::enum_<OracleMethod>(m, "OracleMethod")
        .value("held_karp", OracleMethod::held_karp)
        .value("brute_force", OracleMethod::brute_force);

    py::class_<OracleLimits>(m, "OracleLimits")
        .def(py::init<>())
        .def_readwrite("held_karp_max", &OracleLimits::held_karp_max)
        .def_readwrite("brute_force_max", &OracleLimits::brute_force_max);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("optimal_tour", &OracleResult::optimal_tour)
        .def_readonly("optimal_cost", &OracleResult::optimal_cost)
        .def_readonly("method", &OracleResult::method);

    py::class_<Rational>(m, "Rational")
        .def_readonly("num", &Rational::num)
        .def_readonly("den", &Rational::den)
        .def("is_one", &Rational::is_one)
        .def("__float__", &Rational::to_double)
        .def("__repr__", &Rational::str);

    py::class_<ArcEncoding>(m, "ArcEncoding")
        .def_readonly("frm", &ArcEncoding::from)
        .def_readonly("to", &ArcEncoding::to)
        .def_readonly("in_tour", &ArcEncoding::in_tour)
        .def_readonly("alpha", &ArcEncoding::alpha)
        .def_readonly("theta", &ArcEncoding::theta)
        .def_readonly("s", &ArcEncoding::s)
        .def_readonly("tau", &ArcEncoding::tau);

    py::class_<EncodingSet>(m, "EncodingSet")
        .def_readonly("r_ref", &EncodingSet::r_ref)
        .def_readonly("r_act", &EncodingSet::r_act)
        .def_readonly("t", &EncodingSet::t)
        .def_readonly("self_normalized", &EncodingSet::self_normalized)
        .def_readonly("arcs", &EncodingSet::arcs);

    py::class_<LiftConfig>(m, "LiftConfig")
        .def(py::init<>())
        .def_static("defaults_for_weight", &LiftConfig::defaults_for_weight)
        .def_readwrite("weight", &LiftConfig::weight)
        .def_readwrite("height", &LiftConfig::height)
        .def_readwrite("tail_tol", &LiftConfig::tail_tol)
        .def_readwrite("zero_tol", &LiftConfig::zero_tol)
        .def_readwrite("sep_margin", &LiftConfig::sep_margin);

    py::class_<CosetRep>(m, "CosetRep")
        .def_readonly("a", &CosetRep::a)
        .def_readonly("b", &CosetRep::b)
        .def_readonly("c", &CosetRep::c)
        .def_readonly("d", &CosetRep::d);

    py::class_<PoincareResult>(m, "PoincareResult")
        .def_readonly("value", &PoincareResult::value)
        .def_readonly("tail_bound", &PoincareResult::tail_bound);

    py::enum_<Membership>(m, "Membership")
        .value("member", Membership::member)
        .value("non_member", Membership::non_member)
        .value("indeterminate", Membership::indeterminate);

    py::class_<MembershipResult>(m, "MembershipResult")
        .def_readonly("status", &MembershipResult::status)
        .def_readonly("magnitude", &MembershipResult::magnitude)
        .def_readonly("margin", &MembershipResult::margin)
        .def_readonly("tail_bound", &MembershipResult::tail_bound);

    py::class_<ZeroBudget>(m, "ZeroBudget")
        .def_readonly("dim_cusp", &ZeroBudget::dim_cusp)
        .def_readonly("interior_max", &ZeroBudget::interior_max)
        .def_readonly("valence_rhs", &ZeroBudget::valence_rhs)
        .def_readonly("required_zeros", &ZeroBudget::required_zeros);

    py::enum_<WeightPolicy>(m, "WeightPolicy")
        .value("min", WeightPolicy::min)
        .value("max_budget", WeightPolicy::max_budget);

    py::enum_<CertifyMode>(m, "CertifyMode")
        .value("oracle", CertifyMode::oracle)
        .value("self_normalized", CertifyMode::self_normalized);

    py::class_<CertifyConfig>(m, "CertifyConfig")
        .def(py::init<>())
        .def_readwrite("weight_policy", &CertifyConfig::weight_policy)
        .def_readwrite("weight_override", &CertifyConfig::weight_override)
        .def_readwrite("height_override", &CertifyConfig::height_override)
        .def_readwrite("m_override", &CertifyConfig::m_override)
        .def_readwrite("y0", &CertifyConfig::y0)
        .def_readwrite("fourier_tol", &CertifyConfig::fourier_tol)
        .def_readwrite("hecke_tol", &CertifyConfig::hecke_tol)
        .def_readwrite("lambda_tol", &CertifyConfig::lambda_tol);

    m.def("parse_tsplib", &parse_tsplib);
    m.def("write_tsplib", &write_tsplib);
    m.def("random_instance", &random_instance, py::arg("n"), py::arg("cost_lo"),
          py::arg("cost_hi"), py::arg("seed"));
    m.def("tour_cost", &tour_cost);
    m.def("exact_optimum", &exact_optimum, py::arg("inst"),
          py::arg("method") = OracleMethod::held_karp,
          py::arg("limits") = OracleLimits{});
    m.def("encode", &encode);
    m.def("e_series", &e_series);
    m.def("e_series_closed_form", &e_series_closed_form);
    m.def("equilibrium_residual", &equilibrium_residual, py::arg("enc"),
          py::arg("Q") = 60);
    m.def("seed_eval", &seed_eval);
    m.def("coset_reps", &coset_reps);
    m.def("poincare_eval", &poincare_eval);
    m.def("lift_membership", &lift_membership);
    m.def("select_weight", &select_weight);
    m.def("zero_budget", &zero_budget);
    m.def("complex_gamma", &complex_gamma);

    m.def(
        "certify_json",
        [](const AtspInstance& inst, const Tour& tour, const CertifyConfig& cfg,
           CertifyMode mode) {
            const auto report = certify(inst, tour, cfg, mode);
            return py::make_tuple(to_string(report.verdict),
                                  verdict_exit_code(report.verdict),
                                  serialize_report(report));
        },
        py::arg("inst"), py::arg("tour"), py::arg("cfg") = CertifyConfig{},
        py::arg("mode") = CertifyMode::oracle,
        "run the full certificate; returns (verdict, exit_code, json_report)");
}
