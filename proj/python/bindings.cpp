#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vfcomb/asymptotics.hpp"
#include "vfcomb/bracketing.hpp"
#include "vfcomb/cli.hpp"
#include "vfcomb/core_model.hpp"
#include "vfcomb/counting.hpp"
#include "vfcomb/moduli.hpp"
#include "vfcomb/render.hpp"
#include "vfcomb/verify.hpp"

namespace py = pybind11;
using namespace vfcomb;

namespace {

// Exact values cross as decimal strings.
py::object to_py(const BigInt& value) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& value) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(BigInt(value.get_num())), to_py(BigInt(value.get_den())));
}

py::list to_py(const std::vector<BigInt>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_py(v));
    return out;
}

py::tuple to_py(const Surd5& x) { return py::make_tuple(to_py(x.rational()), to_py(x.surd())); }

DiskModel model_of(const std::string& name) {
    if (name == "separatrix") return DiskModel::Separatrix;
    if (name == "transversal") return DiskModel::Transversal;
    throw py::value_error("model must be 'separatrix' or 'transversal'");
}

PolyaConvention convention_of(const std::string& name) {
    if (name == "dm1") return PolyaConvention::ZPowDMinus1;
    if (name == "d") return PolyaConvention::ZPowD;
    throw py::value_error("convention must be 'dm1' or 'd'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact enumeration of combinatorial classes of polynomial vector fields";

    py::enum_<PairKind>(m, "PairKind").value("Round", PairKind::Round).value("Square", PairKind::Square);

    py::class_<PairingConfig>(m, "PairingConfig")
        .def_property_readonly("degree", &PairingConfig::degree)
        .def_property_readonly("pairs",
                               [](const PairingConfig& c) {
                                   py::list out;
                                   for (const auto& p : c.pairs()) out.append(py::make_tuple(p.low, p.high, p.kind));
                                   return out;
                               })
        .def_property_readonly("unpaired", &PairingConfig::unpaired)
        .def("invariants",
             [](const PairingConfig& c) {
                 const auto d = invariants_of(c);
                 return py::make_tuple(d.h, d.s, d.q);
             })
        .def("cells",
             [](const PairingConfig& c) {
                 const auto r = classify_cells(to_separatrix(to_transversal_data(c)));
                 py::dict out;
                 out["alpha_omega"] = r.alpha_omega;
                 out["odd_sepal"] = r.odd_sepal;
                 out["even_sepal"] = r.even_sepal;
                 out["odd_center"] = r.odd_center;
                 out["even_center"] = r.even_center;
                 return out;
             })
        .def("rotate", &rotate, py::arg("steps"))
        .def("__str__", [](const PairingConfig& c) { return render(c); })
        .def("__repr__", [](const PairingConfig& c) { return "PairingConfig('" + render(c) + "')"; })
        .def(py::self == py::self);

    m.def("parse", &parse, py::arg("text"), "Parse a bracket string; raises ValueError.");
    m.def("render", py::overload_cast<const PairingConfig&>(&render), py::arg("config"));
    m.def(
        "enumerate",
        [](int degree, long limit) {
            std::vector<PairingConfig> out;
            enumerate(degree, [&](const PairingConfig& c) {
                if (limit > 0 && static_cast<long>(out.size()) == limit) return false;
                out.push_back(c);
                return true;
            });
            return out;
        },
        py::arg("degree"), py::arg("limit") = 0);
    m.def("brute_count", [](int n) { return to_py(brute_count(n)); }, py::arg("length"));

    m.def("p_rec", [](int n) { return to_py(p_rec(n)); }, py::arg("n"));
    m.def("c_total", [](int d) { return to_py(c_total(d)); }, py::arg("degree"));
    m.def("c_total_closed", [](int d) { return to_py(c_total_closed(d)); }, py::arg("degree"));
    m.def("coeffs_algebraic", [](int n) { return to_py(coeffs_algebraic(n)); }, py::arg("max_degree"));
    m.def("dimension_distribution", [](int d) { return to_py(dimension_distribution(d)); }, py::arg("degree"));
    m.def(
        "type_distribution",
        [](int d) {
            py::dict out;
            for (const auto& [key, count] : type_distribution(d)) out[py::make_tuple(key.first, key.second)] = to_py(count);
            return out;
        },
        py::arg("degree"));
    m.def("catalan", [](int n) { return to_py(catalan(n)); }, py::arg("n"));

    m.def("exact_constants", [] {
        const auto k = exact_constants();
        py::dict out;
        out["radius"] = to_py(k.radius);
        out["growth"] = to_py(k.growth);
        out["rho_prime"] = to_py(k.rho_prime);
        out["rho_second"] = to_py(k.rho_second);
        out["kappa"] = to_py(k.kappa);
        out["lambda"] = to_py(k.lambda);
        return out;
    });
    m.def(
        "stats",
        [](int d) {
            const auto s = stats(d);
            py::list mass;
            for (const auto& p : s.mass) mass.append(to_py(p));
            py::dict out;
            out["degree"] = s.degree;
            out["mean"] = to_py(s.mean);
            out["variance"] = to_py(s.variance);
            out["mass"] = mass;
            return out;
        },
        py::arg("degree"));
    m.def("ratio", [](int d) { return to_py(ratio(d)); }, py::arg("degree"));
    m.def("normality_distance", py::overload_cast<int>(&normality_distance), py::arg("degree"));

    m.def("burnside_count", [](int d) { return to_py(burnside_count(d)); }, py::arg("degree"));
    m.def(
        "polya_coefficient",
        [](int d, const std::string& convention) { return to_py(polya_coefficient(d, convention_of(convention))); },
        py::arg("degree"), py::arg("convention") = "dm1");

    m.def(
        "render_svg", [](const PairingConfig& c, const std::string& model) { return render_svg(c, model_of(model)); },
        py::arg("config"), py::arg("model") = "separatrix");
    m.def(
        "render_dot", [](const PairingConfig& c, const std::string& model) { return render_dot(c, model_of(model)); },
        py::arg("config"), py::arg("model") = "separatrix");

    m.def(
        "verify",
        [](int max_degree) {
            py::list out;
            for (const auto& r : run_verification(max_degree)) out.append(py::make_tuple(r.name, r.passed, r.detail));
            return out;
        },
        py::arg("max_degree"));
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
