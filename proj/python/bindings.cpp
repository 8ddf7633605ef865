#include "pmc/catalog.hpp"
#include "pmc/cli.hpp"
#include "pmc/identities.hpp"
#include "pmc/theorem_gates.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace pmc;

namespace {

// Results cross the boundary as plain dicts and lists; the C++ structs are
// not exposed.

py::dict pairs(const std::vector<std::pair<std::string, double>>& v) {
    py::dict d;
    for (const auto& [k, x] : v) d[py::str(k)] = x;
    return d;
}

Family family_arg(const std::string& name) {
    if (auto f = family_from_string(name)) return *f;
    throw py::value_error("unknown family '" + name + "'");
}

IdentitySpec identity_arg(const std::string& name, const std::string& field) {
    const auto kind = identity_from_cli_name(name);
    if (!kind) throw py::value_error("unknown identity '" + name + "'");
    IdentitySpec spec{*kind};
    if (field == "H") spec.field = NormalField::H;
    else if (field == "E3") spec.field = NormalField::E3;
    else if (field == "E4") spec.field = NormalField::E4;
    else throw py::value_error("unknown normal field '" + field + "'");
    return spec;
}

std::vector<IdentitySpec> identity_list(py::object which) {
    if (which.is_none()) return all_identities();
    if (py::isinstance<py::str>(which)) {
        const std::string s = which.cast<std::string>();
        if (s == "all") return all_identities();
        which = py::make_tuple(s);
    }
    std::vector<IdentitySpec> out;
    for (const py::handle item : which) {
        std::string name = py::str(item);
        std::string field = "H";
        if (const auto colon = name.find(':'); colon != std::string::npos) {
            field = name.substr(colon + 1);
            name = name.substr(0, colon);
        }
        out.push_back(identity_arg(name, field));
    }
    return out;
}

Theorem theorem_arg(const std::string& name) {
    if (auto t = theorem_from_cli_name(name)) return *t;
    throw py::value_error("unknown theorem '" + name + "'");
}

py::dict identity_dict(const IdentityReport& r) {
    py::dict d;
    d["identity"] = r.spec.label();
    d["u"] = r.point.u;
    d["v"] = r.point.v;
    d["status"] = std::string(to_string(r.status));
    d["reason"] = r.reason;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["residual"] = r.residual;
    d["terms"] = pairs(r.terms);
    d["checks"] = pairs(r.checks);
    return d;
}

py::dict gate_dict(const GateReport& g) {
    py::dict d;
    d["theorem"] = std::string(cli_name(g.theorem));
    d["status"] = std::string(to_string(g.status));
    d["reason"] = g.reason;
    d["hypothesis_satisfied"] = g.hypothesis_satisfied;
    d["predicted_case"] = g.predicted_case;
    d["margins"] = pairs(g.hypothesis_margins);
    d["observed"] = pairs(g.observed);
    py::dict flags;
    for (const auto& [k, v] : g.flags) flags[py::str(k)] = v;
    d["flags"] = flags;
    py::list readings;
    for (const GateReading& r : g.readings) {
        py::dict x;
        x["name"] = r.name;
        x["hypothesis_satisfied"] = r.hypothesis_satisfied;
        x["predicted_case"] = r.predicted_case;
        readings.append(x);
    }
    d["readings"] = readings;
    return d;
}

GridSpec grid_arg(const std::pair<int, int>& g) { return {g.first, g.second}; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Verification of pmc surfaces in M^n(c) x R";

    static py::exception<Error> error(m, "PmcError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    m.attr("__version__") = tool_version();

    py::class_<CatalogSurface>(m, "Surface")
        .def_property_readonly("name", [](const CatalogSurface& s) { return s.immersion.name; })
        .def_property_readonly("params", [](const CatalogSurface& s) { return s.immersion.params; })
        .def_property_readonly("topology", [](const CatalogSurface& s) { return s.topology; })
        .def_property_readonly("domain",
                               [](const CatalogSurface& s) {
                                   const ChartDomain& d = s.immersion.domain;
                                   return py::make_tuple(d.u0, d.u1, d.v0, d.v1);
                               })
        .def_property_readonly("expected",
                               [](const CatalogSurface& s) {
                                   const ExpectedValues& e = s.expected;
                                   py::dict d;
                                   d["h_norm"] = e.h_norm;
                                   d["t_norm2"] = e.t_norm2;
                                   d["phi_norm2"] = e.phi_norm2;
                                   d["gaussian_curvature"] = e.gaussian_curvature;
                                   d["pmc"] = e.pmc;
                                   d["minimal"] = e.minimal;
                                   return d;
                               })
        .def(
            "state",
            [](const CatalogSurface& s, double u, double v, int degree) {
                const GeometricState st = evaluate_state(s.immersion, {u, v}, degree);
                py::dict d;
                d["h_norm"] = st.mean_curvature_norm();
                d["t_norm2"] = st.t_norm2().value();
                d["phi_norm2"] = st.phi_norm2().value();
                d["sigma_norm2"] = st.sigma_norm2().value();
                d["gaussian_curvature"] = st.gaussian_curvature();
                d["minimal"] = st.minimal();
                d["pmc_residual"] = normal_connection_residual(st);
                py::list nu;
                for (std::size_t a = 0; a < st.normal_dim(); ++a) nu.append(st.nu(a).value());
                d["nu"] = nu;
                return d;
            },
            py::arg("u"), py::arg("v"), py::arg("degree") = Jet::kDefaultDegree,
            "Pointwise curvature summary at chart point (u, v).");

    m.def(
        "make_surface",
        [](const std::string& family, double c, int n, const py::kwargs& params) {
            CatalogSpec spec{family_arg(family), c, n, {}};
            for (const auto& [k, v] : params) spec.params[py::str(k)] = v.cast<double>();
            return make_surface(spec);
        },
        py::arg("family"), py::arg("c") = 1.0, py::arg("n") = 3);

    m.def("catalog", [] {
        py::list out;
        for (const CatalogEntry& e : list_catalog()) {
            py::dict d;
            d["family"] = std::string(to_string(e.family));
            py::list params;
            for (const ParamSchema& p : e.params)
                params.append(py::dict(py::arg("key") = p.key, py::arg("default") = p.default_value,
                                       py::arg("constraint") = p.constraint));
            d["params"] = params;
            d["curvature_sign"] = e.curvature_sign;
            d["min_n"] = e.min_n;
            d["pmc"] = e.pmc;
            d["witnesses"] = e.witnesses;
            d["notes"] = e.notes;
            out.append(d);
        }
        return out;
    });

    m.def(
        "evaluate_identity",
        [](const CatalogSurface& s, const std::string& identity, double u, double v, const std::string& field,
           double tol, int degree) {
            return identity_dict(evaluate_identity(identity_arg(identity, field), s.immersion, {u, v}, {tol}, degree));
        },
        py::arg("surface"), py::arg("identity"), py::arg("u"), py::arg("v"), py::arg("field") = "H",
        py::arg("tol") = 1e-7, py::arg("degree") = Jet::kDefaultDegree);

    m.def(
        "run_suite",
        [](const CatalogSurface& s, const py::object& identities, std::pair<int, int> grid, double tol, int degree,
           int threads, bool reports) {
            const std::vector<IdentitySpec> specs = identity_list(identities);
            SuiteResult res;
            {
                py::gil_scoped_release release;
                res = run_suite(s.immersion, grid_arg(grid), specs, {tol}, degree, threads);
            }
            py::dict d;
            d["pass"] = res.pass();
            py::list summary;
            for (const IdentitySummary& x : res.summary) {
                py::dict e;
                e["identity"] = x.spec.label();
                e["max_residual"] = x.max_residual;
                e["evaluated"] = x.evaluated;
                e["not_applicable"] = x.not_applicable;
                e["failed"] = x.failed;
                e["errors"] = x.errors;
                e["first_reason"] = x.first_reason;
                summary.append(e);
            }
            d["summary"] = summary;
            if (reports) {
                py::list rs;
                for (const IdentityReport& r : res.reports) rs.append(identity_dict(r));
                d["reports"] = rs;
            }
            return d;
        },
        py::arg("surface"), py::arg("identities") = py::none(), py::arg("grid") = std::pair{8, 8},
        py::arg("tol") = 1e-7, py::arg("degree") = Jet::kDefaultDegree, py::arg("threads") = 0,
        py::arg("reports") = false);

    m.def(
        "check_gate",
        [](const CatalogSurface& s, const std::string& theorem, std::pair<int, int> grid, double tol, int degree) {
            const Theorem t = theorem_arg(theorem);
            GateReport g;
            {
                py::gil_scoped_release release;
                g = check_gate(t, s.immersion, grid_arg(grid), {s.topology, s.complete}, {tol, degree, 0});
            }
            return gate_dict(g);
        },
        py::arg("surface"), py::arg("theorem"), py::arg("grid") = std::pair{8, 8}, py::arg("tol") = 1e-7,
        py::arg("degree") = Jet::kDefaultDegree);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs pmc-verify in process; returns (exit_code, stdout, stderr).");
}
