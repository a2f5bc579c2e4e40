/**
 * @file bindings.cpp
 * @brief pybind11 module `logconvex._core`.
 *
 * Integers cross the boundary as Python ints (through their decimal
 * strings); certificates and reports cross as JSON text, which the Python
 * package decodes into dicts.
 */

#include "lcx/convexity.hpp"
#include "lcx/error.hpp"
#include "lcx/qpolys.hpp"
#include "lcx/recurrence_analysis.hpp"
#include "lcx/report.hpp"
#include "lcx/transforms.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

py::object to_py(lcx::Int const& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

lcx::Int from_py(py::handle h) {
    return lcx::Int(py::str(h).cast<std::string>());
}

py::list to_list(lcx::Seq const& s) {
    py::list out;
    for (auto const& v : s.values)
        out.append(to_py(v));
    return out;
}

lcx::Seq to_seq(py::sequence const& xs, long offset) {
    lcx::Seq s;
    s.offset = offset;
    for (auto const& x : xs)
        s.values.push_back(from_py(x));
    return s;
}

std::string check_json(lcx::CheckReport const& rep) {
    lcx::ojson j{{"status", std::string(lcx::status_name(rep.status))},
                 {"range", {rep.range_lo, rep.range_hi}}};
    if (rep.first_violation)
        j["witness"] = lcx::violation_to_json(*rep.first_violation);
    return j.dump();
}

std::string analyze(std::string const& target, std::string const& theorem, long n, std::optional<std::string> mu,
                    long anchor) {
    lcx::Recurrence3 rec = lcx::spec_recurrence(lcx::load_seq_spec(target));
    if (rec.name.empty())
        rec.name = target;
    lcx::Certificate cert;
    if (theorem == "crit_plus")
        cert = lcx::check_thm_crit_plus(rec, n);
    else if (theorem == "lc_plus")
        cert = lcx::check_thm_lc_plus(rec, n);
    else if (theorem == "interlacing")
        cert = lcx::check_interlacing(rec, n);
    else if (theorem == "c_plus") {
        if (!mu)
            throw py::value_error("c_plus needs mu");
        cert = lcx::check_thm_c_plus(rec, lcx::parse_ratfunc(*mu), n);
    } else if (theorem == "c_minus" || theorem == "c_minus_lc")
        cert = lcx::check_thm_c_minus(rec, n, anchor,
                                      theorem == "c_minus" ? lcx::ConvexityMode::convex : lcx::ConvexityMode::concave);
    else if (theorem == "bisection")
        cert = lcx::bisection_analysis(rec, n);
    else
        throw py::value_error("unknown theorem '" + theorem + "'");
    return lcx::certificate_to_json(cert).dump();
}

std::string q_check(std::string const& family, long n, bool concave) {
    lcx::PolySeq ps = lcx::gen_poly_seq(family, n);
    lcx::QCheckReport rep = concave ? lcx::q_log_concave_check(ps) : lcx::q_log_convex_check(ps);
    lcx::ojson j{{"status", std::string(lcx::status_name(rep.status))}, {"range", {rep.range_lo, rep.range_hi}}};
    if (!rep.holds())
        j["witness"] = {{"n", *rep.n}, {"power", *rep.power}, {"coefficient", rep.coefficient.get_str()}};
    return j.dump();
}

std::string identity_json(std::string const& name, long n) {
    lcx::IdentityReport r = lcx::verify_identity(name, n);
    lcx::ojson j{{"name", r.name},       {"statement", r.statement}, {"n_min", r.n_min},
                 {"n_max", r.n_max},     {"all_equal", r.all_equal}};
    if (r.first_mismatch)
        j["first_mismatch"] = {{"n", *r.first_mismatch}, {"lhs", r.lhs_at_mismatch}, {"rhs", r.rhs_at_mismatch}};
    return j.dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact log-convexity toolkit";

    static py::exception<lcx::error> lcx_error(m, "LcxError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (lcx::error const& e) {
            std::string msg = std::string(lcx::errc_name(e.kind())) + ": " + e.what();
            PyErr_SetString(lcx_error.ptr(), msg.c_str());
        }
    });

    m.def("catalogue_names", &lcx::catalogue_names);
    m.def("triangle_names", &lcx::triangle_names);
    m.def("identity_names", &lcx::identity_names);
    m.def("poly_family_names", &lcx::poly_family_names);

    m.def(
        "generate", [](std::string const& target, long n) { return to_list(lcx::spec_terms(lcx::load_seq_spec(target), n)); },
        py::arg("target"), py::arg("n"), "Terms z_0..z_n of a catalogue name or spec file.");
    m.def(
        "triangle_row", [](std::string const& name, long n) {
            lcx::Triangle t = lcx::gen_triangle(name, n);
            py::list row;
            for (auto const& v : t.rows.back())
                row.append(to_py(v));
            return row;
        },
        py::arg("name"), py::arg("n"));
    m.def(
        "check_json",
        [](py::sequence const& xs, bool concave, long offset) {
            lcx::Seq s = to_seq(xs, offset);
            return check_json(concave ? lcx::is_log_concave(s) : lcx::is_log_convex(s));
        },
        py::arg("terms"), py::arg("concave") = false, py::arg("offset") = 0);
    m.def("q_check_json", &q_check, py::arg("family"), py::arg("n"), py::arg("concave") = false);
    m.def("analyze_json", &analyze, py::arg("target"), py::arg("theorem"), py::arg("n") = 100,
          py::arg("mu") = py::none(), py::arg("anchor") = 0);
    m.def(
        "transform",
        [](std::string const& triangle, py::sequence const& xs) {
            return to_list(lcx::named_transform(triangle, to_seq(xs, 0)));
        },
        py::arg("triangle"), py::arg("terms"));
    m.def("identity_json", &identity_json, py::arg("name"), py::arg("n") = 50);
    m.def(
        "replay_matches", [](std::string const& cert_json) {
            return lcx::replay_matches(lcx::certificate_from_json(lcx::ojson::parse(cert_json)));
        },
        py::arg("certificate_json"));
}
