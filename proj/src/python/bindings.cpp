#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgbounds/bounds.hpp"
#include "sgbounds/figures.hpp"
#include "sgbounds/identities.hpp"
#include "sgbounds/reference.hpp"
#include "sgbounds/verify.hpp"

namespace py = pybind11;
using namespace sg;

namespace {

BoundId bound_by_name(const std::string& name) {
    if (auto id = find_bound(name)) return *id;
    throw py::key_error("unknown bound: " + name);
}

TailPolicy policy(double tol, long max_periods) {
    TailPolicy p{tol, max_periods};
    p.validate();
    return p;
}

py::dict bound_dict(const BoundInfo& b) {
    py::dict d;
    d["name"] = b.name;
    d["family"] = b.family;
    d["target"] = to_string(b.target);
    d["side"] = to_string(b.side);
    d["provenance"] = to_string(b.provenance);
    d["formula"] = b.formula;
    d["domain"] = b.domain;
    d["x_min"] = b.x_min;
    d["x_min_open"] = b.x_min_open;
    d["integers_only"] = b.integers_only;
    d["free_d"] = b.free_d();
    return d;
}

py::dict report_dict(const ScanReport& r) {
    py::dict d;
    d["subject"] = r.subject;
    d["label"] = r.label();
    d["points_checked"] = r.points_checked;
    d["skipped"] = r.skipped;
    d["min_margin"] = r.min_margin;
    d["argmin"] = py::make_tuple(r.argmin.x, r.argmin.alpha, r.argmin.d);
    d["violations"] = r.violations.size();
    d["indeterminates"] = r.indeterminates.size();
    d["ties"] = r.ties.size();
    d["ok"] = r.ok();
    d["csv"] = to_csv(r);
    return d;
}

GridSpec grid_from(const GridSpec& base, std::optional<double> x_lo, std::optional<double> x_hi,
                   std::optional<double> x_step, std::optional<int> alpha_samples) {
    GridSpec g = base;
    if (x_lo) g.x_lo = *x_lo;
    if (x_hi) g.x_hi = *x_hi;
    if (x_step) g.x_step = *x_step;
    if (alpha_samples) g.alpha_samples = *alpha_samples;
    return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.attr("__version__") = SGBOUNDS_VERSION;
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<Enclosure>(m, "Enclosure")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_property_readonly("lo", &Enclosure::lo)
        .def_property_readonly("hi", &Enclosure::hi)
        .def_property_readonly("width", &Enclosure::width)
        .def_property_readonly("mid", &Enclosure::mid)
        .def("contains", py::overload_cast<double>(&Enclosure::contains, py::const_))
        .def("__contains__", py::overload_cast<double>(&Enclosure::contains, py::const_))
        .def("__repr__", [](const Enclosure& e) { return "Enclosure" + e.to_string(); });

    py::class_<EnclosureResult>(m, "EnclosureResult")
        .def_readonly("enclosure", &EnclosureResult::enclosure)
        .def_readonly("width_met", &EnclosureResult::width_met)
        .def_readonly("periods", &EnclosureResult::periods);

    const auto tol = py::arg("tol") = 1e-10;
    const auto cap = py::arg("max_periods") = 1'000'000L;

    m.def("iota", [](double x, double a, double t, long c) { return iota_enclosure(InterpPoint(x, a), policy(t, c)); },
          py::arg("x"), py::arg("alpha"), tol, cap);
    m.def("m", [](double d, double x, double t, long c) { return m_enclosure(d, x, policy(t, c)); }, py::arg("d"),
          py::arg("x"), tol, cap);
    m.def("mhat",
          [](double d, double x, double a, double t, long c) { return mhat_enclosure(d, InterpPoint(x, a), policy(t, c)); },
          py::arg("d"), py::arg("x"), py::arg("alpha"), tol, cap);
    m.def("sawtooth", [](double d, double x, double t, long c) { return sawtooth_enclosure(d, x, policy(t, c)); },
          py::arg("d"), py::arg("x"), tol, cap);
    m.def("log_pi", [](double x, double t) { return pi_enclosure(x, t); }, py::arg("x"), py::arg("tol") = 1e-12);

    m.def("lgamma_ref", &lgamma_ref, py::arg("z"));
    m.def("log_s", &log_s, py::arg("d"), py::arg("x"));
    m.def("log_factorial_hat", &log_factorial_hat, py::arg("x"));
    m.def("iota_ref", [](double x, double a) { return mismatch_ref(MismatchKind::iota(), InterpPoint(x, a)); },
          py::arg("x"), py::arg("alpha"));
    m.def("m_ref", [](double d, double x) { return mismatch_ref(MismatchKind::m(d), x); }, py::arg("d"), py::arg("x"));
    m.def("mhat_ref", [](double d, double x, double a) { return mismatch_ref(MismatchKind::mhat(d), InterpPoint(x, a)); },
          py::arg("d"), py::arg("x"), py::arg("alpha"));

    m.def("bounds", [] {
        py::list out;
        for (const BoundInfo& b : bound_catalog()) out.append(bound_dict(b));
        return out;
    });
    m.def("bound_info", [](const std::string& n) { return bound_dict(bound_info(bound_by_name(n))); }, py::arg("name"));
    m.def("bound_value",
          [](const std::string& n, double x, double a, double d) { return bound_value(bound_by_name(n), {x, a, d}); },
          py::arg("name"), py::arg("x"), py::arg("alpha") = 0.0, py::arg("d") = 0.5);
    m.def("bound_enclosure",
          [](const std::string& n, double x, double a, double d) { return bound_enclosure(bound_by_name(n), {x, a, d}); },
          py::arg("name"), py::arg("x"), py::arg("alpha") = 0.0, py::arg("d") = 0.5);

    m.def(
        "scan_bound",
        [](const std::string& n, std::optional<double> lo, std::optional<double> hi, std::optional<double> step,
           std::optional<int> alphas) {
            const BoundId id = bound_by_name(n);
            return report_dict(scan_bound(id, grid_from(default_grid(id), lo, hi, step, alphas)));
        },
        py::arg("name"), py::arg("x_lo") = py::none(), py::arg("x_hi") = py::none(), py::arg("x_step") = py::none(),
        py::arg("alpha_samples") = py::none());
    m.def(
        "scan_conjecture",
        [](int which, std::optional<double> lo, std::optional<double> hi, std::optional<double> step,
           std::optional<int> alphas) {
            if (which != 1 && which != 2) throw py::value_error("conjecture must be 1 or 2");
            const Conjecture c = which == 1 ? Conjecture::Conjecture1 : Conjecture::Conjecture2;
            return report_dict(scan_conjecture(c, grid_from(default_conjecture_grid(c), lo, hi, step, alphas)));
        },
        py::arg("which"), py::arg("x_lo") = py::none(), py::arg("x_hi") = py::none(), py::arg("x_step") = py::none(),
        py::arg("alpha_samples") = py::none());

    m.def("figures", [] {
        std::vector<std::string> out;
        for (FigureId id : all_figures()) out.emplace_back(to_string(id));
        return out;
    });
    m.def(
        "figure_csv",
        [](const std::string& n) {
            const auto id = find_figure(n);
            if (!id) throw py::key_error("unknown figure: " + n);
            return to_csv(make_figure(*id));
        },
        py::arg("name"));
}
