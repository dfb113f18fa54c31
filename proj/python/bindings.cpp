#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loewner/equations.hpp"
#include "loewner/furuta.hpp"
#include "loewner/genpairs.hpp"
#include "loewner/harness.hpp"
#include "loewner/orders.hpp"
#include "loewner/report_json.hpp"
#include "loewner/spectra.hpp"

namespace py = pybind11;
using namespace loewner;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

HermitianMatrix to_hermitian(const Array& arr) {
    if (arr.ndim() == 0) return HermitianMatrix(Matrix(1, {arr.data()[0]}));
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1)) {
        throw py::value_error("expected a square 2-d array");
    }
    const auto n = static_cast<std::size_t>(arr.shape(0));
    std::vector<double> values(arr.data(), arr.data() + n * n);
    return HermitianMatrix(Matrix(n, std::move(values)));
}

Array to_array(const Matrix& m) {
    const auto n = static_cast<py::ssize_t>(m.dim());
    Array out({n, n});
    auto v = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < n; ++i)
        for (py::ssize_t j = 0; j < n; ++j) v(i, j) = m(i, j);
    return out;
}

Array to_array(const HermitianMatrix& m) { return to_array(m.matrix()); }

ParamSet params_arg(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return ParamSet::parse(obj.cast<std::string>());
    if (py::isinstance<py::dict>(obj)) {
        ParamSet ps;
        for (auto item : obj.cast<py::dict>()) {
            ps.set(item.first.cast<std::string>(), item.second.cast<double>());
        }
        return ps;
    }
    return obj.cast<ParamSet>();
}

py::dict verdict_dict(const OrderVerdict& v) {
    py::dict d;
    d["holds"] = v.holds;
    d["margin"] = v.margin;
    d["tolerance"] = v.tolerance;
    d["kind"] = to_string(v.kind);
    return d;
}

InequalityFamily inequality_arg(const std::string& tag) {
    const auto f = parse_inequality_family(tag);
    if (!f) throw py::value_error("unknown inequality family '" + tag + "'");
    return *f;
}

EquationFamily equation_arg(const std::string& tag) {
    const auto f = parse_equation_family(tag);
    if (!f) throw py::value_error("unknown equation family '" + tag + "'");
    return *f;
}

TolerancePolicy tol_arg(double rel, double floor) {
    TolerancePolicy t{rel, floor};
    t.validate();
    return t;
}

GenSpec spec_arg(std::size_t dim, std::uint64_t seed, double condition_cap) {
    GenSpec spec;
    spec.dim = dim;
    spec.seed = seed;
    spec.condition_cap = condition_cap;
    return spec;
}

py::tuple pair_tuple(const MatrixPair& p) { return py::make_tuple(to_array(p.a), to_array(p.b)); }

}  // namespace

PYBIND11_MODULE(_loewner, m) {
    m.doc() = "Operator inequalities and operator equations on symmetric positive definite matrices";

    py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<ParamSet>(m, "ParamSet")
        .def(py::init<>())
        .def_static("parse", &ParamSet::parse)
        .def("get", [](const ParamSet& p, const std::string& f) { return p.get(f, "ParamSet.get"); })
        .def("has", [](const ParamSet& p, const std::string& f) { return p.has(f); })
        .def("set", [](ParamSet& p, const std::string& f, double v) { p.set(f, v); })
        .def("__str__", &ParamSet::to_string)
        .def("__repr__", [](const ParamSet& p) { return "ParamSet('" + p.to_string() + "')"; })
        .def(py::self == py::self);

    m.def("eigh", [](const Array& h) {
        const auto d = eigh(to_hermitian(h));
        return py::make_tuple(py::cast(d.eigenvalues), to_array(d.eigenvectors));
    }, py::arg("h"), "Eigenvalues (ascending) and eigenvectors (columns).");
    m.def("power", [](const Array& h, double e) { return to_array(power(to_hermitian(h), e)); },
          py::arg("h"), py::arg("exponent"));
    m.def("logm", [](const Array& h) { return to_array(logm(to_hermitian(h))); }, py::arg("h"));
    m.def("expm", [](const Array& h) { return to_array(expm(to_hermitian(h))); }, py::arg("h"));

    m.def("loewner_geq", [](const Array& a, const Array& b, double rel, double floor) {
        return verdict_dict(loewner_geq(to_hermitian(a), to_hermitian(b), tol_arg(rel, floor)));
    }, py::arg("a"), py::arg("b"), py::arg("rel") = 1e-8, py::arg("floor") = 1e-12);
    m.def("chaotic_geq", [](const Array& a, const Array& b, double rel, double floor) {
        return verdict_dict(chaotic_geq(to_hermitian(a), to_hermitian(b), tol_arg(rel, floor)));
    }, py::arg("a"), py::arg("b"), py::arg("rel") = 1e-8, py::arg("floor") = 1e-12);

    m.def("validate", [](const std::string& family, const py::object& params) {
        const Validation v = validate(inequality_arg(family), params_arg(params));
        py::dict d;
        d["valid"] = v.valid;
        d["violations"] = v.violations;
        d["derived_s"] = v.derived_s ? py::cast(*v.derived_s) : py::none();
        return d;
    }, py::arg("family"), py::arg("params"));

    m.def("evaluate", [](const std::string& family, const Array& a, const Array& b,
                         const py::object& params, double rel, double floor) {
        const auto ev = evaluate(inequality_arg(family), to_hermitian(a), to_hermitian(b),
                                 params_arg(params), tol_arg(rel, floor));
        py::dict d = verdict_dict(ev.verdict);
        d["lhs"] = to_array(ev.lhs);
        d["rhs"] = to_array(ev.rhs);
        return d;
    }, py::arg("family"), py::arg("a"), py::arg("b"), py::arg("params"), py::arg("rel") = 1e-8,
       py::arg("floor") = 1e-12);

    m.def("complete_params", [](const std::string& family, const py::object& params) {
        return complete_params(equation_arg(family), params_arg(params));
    }, py::arg("family"), py::arg("params"));

    m.def("solve", [](const std::string& family, const Array& a, const Array& b,
                      const py::object& params) {
        const SolutionReport rep =
            solve(equation_arg(family), to_hermitian(a), to_hermitian(b), params_arg(params));
        py::dict d;
        d["family"] = to_string(rep.family);
        d["params"] = rep.params.to_string();
        d["S"] = to_array(rep.solution);
        d["norm_S"] = rep.norm_S;
        d["equation_residual"] = rep.equation_residual;
        d["contraction"] = rep.contraction;
        d["order"] = verdict_dict(rep.order_verdict);
        d["approximate"] = rep.approximate;
        return d;
    }, py::arg("family"), py::arg("a"), py::arg("b"), py::arg("params"));

    m.def("random_pd", [](std::size_t dim, std::uint64_t seed, double cap) {
        return to_array(random_pd(spec_arg(dim, seed, cap)));
    }, py::arg("dim"), py::arg("seed"), py::arg("condition_cap") = 1e4);
    m.def("random_pair", [](std::size_t dim, std::uint64_t seed, const std::string& relation,
                            double cap) -> py::object {
        const GenSpec spec = spec_arg(dim, seed, cap);
        const auto rel = parse_relation(relation);
        if (!rel) throw py::value_error("relation must be ordered, chaotic or unordered");
        switch (*rel) {
            case Relation::ordered: return pair_tuple(random_ordered_pair(spec));
            case Relation::chaotic: return pair_tuple(random_chaotic_pair(spec));
            case Relation::unordered:
                if (auto p = random_unordered_pair(spec, 1000)) return pair_tuple(*p);
                return py::none();
        }
        return py::none();
    }, py::arg("dim"), py::arg("seed"), py::arg("relation") = "ordered",
       py::arg("condition_cap") = 1e4);

    m.def("search_counterexample", [](const std::string& family, const py::object& params,
                                      std::size_t budget, std::uint64_t seed,
                                      std::vector<std::size_t> dims) {
        SearchOptions opts;
        opts.budget = budget;
        opts.seed = seed;
        opts.dims = std::move(dims);
        const auto f = inequality_arg(family);
        const ParamSet ps = params_arg(params);
        SearchResult res;
        {
            py::gil_scoped_release release;
            res = search_counterexample(f, ps, opts);
        }
        return to_json(res, f, ps).dump();
    }, py::arg("family"), py::arg("params"), py::arg("budget") = 10000, py::arg("seed") = 0,
       py::arg("dims") = std::vector<std::size_t>{2},
       "Returns the search result as a JSON string.");

    m.def("run_campaign", [](const std::string& config_json, bool include_wall_time) {
        const CampaignConfig cfg = campaign_config_from_json(nlohmann::json::parse(config_json));
        CampaignReport report;
        {
            py::gil_scoped_release release;
            report = run_campaign(cfg);
        }
        return to_json(report, include_wall_time).dump();
    }, py::arg("config_json"), py::arg("include_wall_time") = true,
       "Runs a campaign from a JSON config string; returns the JSON report string.");
}
