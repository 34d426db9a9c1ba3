#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "qpw/closed_forms.hpp"
#include "qpw/fe_check.hpp"
#include "qpw/guess.hpp"
#include "qpw/kernel_group.hpp"
#include "qpw/models.hpp"
#include "qpw/walks.hpp"

namespace py = pybind11;
using namespace qpw;

namespace {

// Rationals cross the boundary as strings ("p/q" or "p"); the Python wrapper
// turns them into fractions.Fraction.
Series<Rat> series_from_strings(const std::vector<std::string>& coeffs) {
    if (coeffs.empty()) throw Error("empty coefficient list");
    Series<Rat> g(int(coeffs.size()) - 1);
    for (size_t n = 0; n < coeffs.size(); ++n) g.at(int(n)) = rat_from_string(coeffs[n]);
    return g;
}

py::dict alg_dict(const AlgebraicCandidate& c) {
    py::dict d;
    d["kind"] = "algebraic";
    d["deg_g"] = c.deg_g;
    d["deg_t"] = c.deg_t;
    std::vector<std::tuple<int, int, std::string>> terms;
    for (const auto& [dt, dg, coeff] : c.terms) terms.emplace_back(dt, dg, coeff.get_str());
    d["terms"] = terms;
    d["fit_order"] = c.fit_order;
    d["confirm_order"] = c.confirm_order;
    d["equation"] = c.to_string();
    return d;
}

py::dict ode_dict(const OdeCandidate& c) {
    py::dict d;
    d["kind"] = "ode";
    d["order"] = c.order;
    d["degree"] = c.degree;
    std::vector<std::vector<std::string>> coeff;
    for (const auto& row : c.coeff) {
        std::vector<std::string> r;
        for (const auto& v : row) r.push_back(v.get_str());
        coeff.push_back(r);
    }
    d["coefficients"] = coeff;
    d["fit_order"] = c.fit_order;
    d["confirm_order"] = c.confirm_order;
    d["equation"] = c.to_string();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact quarter-plane walk enumeration with boundary contact weights";

    py::register_exception<Error>(m, "QpwError");

    m.def("model_ids", [] {
        std::vector<int> ids;
        for (const auto& mm : all_models()) ids.push_back(mm.id);
        return ids;
    });

    m.def("model_info", [](int id) {
        const Model& mm = get_model(id);
        py::dict d;
        d["id"] = mm.id;
        d["name"] = mm.name;
        d["group_order"] = mm.group_order;
        std::vector<std::pair<int, int>> steps;
        for (const auto& s : mm.steps) steps.emplace_back(s.dx, s.dy);
        d["steps"] = steps;
        return d;
    });

    m.def(
        "excursion",
        [](int model, int order, const std::string& a, const std::string& b) {
            Series<Rat> g =
                excursion_series(get_model(model), order, rat_from_string(a), rat_from_string(b));
            std::vector<std::string> out;
            for (int n = 0; n <= order; ++n) out.push_back(to_string(g[n]));
            return out;
        },
        py::arg("model"), py::arg("order"), py::arg("a") = "1", py::arg("b") = "1",
        "coefficients of the excursion series at one rational weight point, as strings");

    m.def(
        "excursion_symbolic",
        [](int model, int order) {
            Series<WeightPoly> g = boundary_views(enumerate_walks(get_model(model), order)).g;
            std::vector<std::vector<std::tuple<int, int, std::string>>> out;
            for (int n = 0; n <= order; ++n) {
                std::vector<std::tuple<int, int, std::string>> row;
                for (const auto& [k, c] : g[n].terms())
                    row.emplace_back(k.first, k.second, c.get_str());
                out.push_back(row);
            }
            return out;
        },
        py::arg("model"), py::arg("order"),
        "per-length lists of (deg_a, deg_b, coefficient) terms");

    m.def(
        "group_elements",
        [](int model) {
            std::vector<std::string> out;
            for (const auto& e : group_closure(get_model(model)).elements)
                out.push_back(e.to_string());
            return out;
        },
        py::arg("model"));

    m.def(
        "group_order", [](int model) { return group_closure(get_model(model)).order(); },
        py::arg("model"));

    m.def(
        "fe_check",
        [](int model, int order) {
            FeCheckResult r = check_functional_equations(enumerate_walks(get_model(model), order));
            py::dict d;
            d["model"] = r.model_id;
            d["order"] = r.order;
            d["ok"] = r.ok;
            d["failures"] = r.failures;
            return d;
        },
        py::arg("model"), py::arg("order") = 10);

    m.def(
        "verify",
        [](int model, const std::string& a, const std::string& b, int order) {
            auto recs = verify_closed_forms(model, rat_from_string(a), rat_from_string(b), order);
            py::list out;
            for (const auto& r : recs) {
                py::dict d;
                d["model"] = r.model_id;
                d["route"] = r.route;
                d["a"] = to_string(r.a);
                d["b"] = to_string(r.b);
                d["order"] = r.order;
                d["ok"] = r.ok;
                d["first_mismatch"] = r.first_mismatch;
                out.append(d);
            }
            return out;
        },
        py::arg("model"), py::arg("a") = "1", py::arg("b") = "1", py::arg("order") = 12);

    m.def(
        "guess_algebraic",
        [](const std::vector<std::string>& coeffs, int deg_g, int deg_t,
           int margin) -> py::object {
            auto c = guess_algebraic(series_from_strings(coeffs), deg_g, deg_t, margin);
            if (!c) return py::none();
            return alg_dict(*c);
        },
        py::arg("coeffs"), py::arg("deg_g") = 12, py::arg("deg_t") = 16, py::arg("margin") = 15);

    m.def(
        "guess_ode",
        [](const std::vector<std::string>& coeffs, int max_order, int max_deg,
           int margin) -> py::object {
            auto c = guess_ode(series_from_strings(coeffs), max_order, max_deg, margin);
            if (!c) return py::none();
            return ode_dict(*c);
        },
        py::arg("coeffs"), py::arg("max_order") = 8, py::arg("max_deg") = 12,
        py::arg("margin") = 15);
}
