#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jetpoisson/corpus.hpp"
#include "jetpoisson/parser.hpp"
#include "jetpoisson/printer.hpp"
#include "jetpoisson/validate.hpp"

namespace py = pybind11;
using namespace jetpoisson;

namespace {

// thin façade over the C++ engine: expressions go in and come out as
// canonical strings, so the python side never owns algebra state
class Context {
public:
    Context(std::vector<std::string> independent, std::vector<std::string> dependent)
        : sig_(std::move(independent), std::move(dependent)) {}

    std::vector<std::string> independent() const { return sig_.indep_names(); }
    std::vector<std::string> dependent() const { return sig_.dep_names(); }

    std::string canonical(const std::string& expr) const {
        return to_string(sig_, parse_expression(sig_, expr));
    }

    py::dict euler_map(const std::string& density) const {
        auto delta = euler(sig_, parse_expression(sig_, density));
        py::dict out;
        for (unsigned a = 0; a < sig_.total_deps(); ++a)
            out[py::str(sig_.dep_name(a))] = to_string(sig_, delta[a]);
        return out;
    }

    std::string adjoint_text(const std::string& op) const {
        return to_string(sig_, adjoint(parse_operator(sig_, op)));
    }

    bool is_skew(const std::string& op) const { return is_skew_adjoint(parse_operator(sig_, op)); }

    std::string compose_text(const std::string& p, const std::string& q) const {
        return to_string(sig_, compose(parse_operator(sig_, p), parse_operator(sig_, q)));
    }

    std::string frechet_text(const std::string& density) const {
        return to_string(sig_, frechet(sig_, parse_expression(sig_, density)));
    }

    std::vector<std::string> green(const std::string& op, const std::vector<std::string>& f,
                                   const std::vector<std::string>& g) const {
        DiffOperator p = parse_operator(sig_, op);
        auto parse_list = [&](const std::vector<std::string>& items) {
            std::vector<DiffFunction> out;
            out.reserve(items.size());
            for (const auto& item : items) out.push_back(parse_expression(sig_, item));
            return out;
        };
        auto psi = green_current(sig_, p, parse_list(f), parse_list(g));
        std::vector<std::string> out;
        out.reserve(psi.size());
        for (const auto& comp : psi) out.push_back(to_string(sig_, comp));
        return out;
    }

    std::string bracket_text(const std::string& op, const std::string& k,
                             const std::string& s) const {
        PoissonSetup setup(sig_, parse_operator(sig_, op));
        return to_string(sig_, bracket(setup, parse_expression(sig_, k), parse_expression(sig_, s)));
    }

    std::pair<bool, bool> jacobi(const std::string& op, const std::string& k, const std::string& l,
                                 const std::string& m) const {
        PoissonSetup setup(sig_, parse_operator(sig_, op));
        DiffFunction fk = parse_expression(sig_, k);
        DiffFunction fl = parse_expression(sig_, l);
        DiffFunction fm = parse_expression(sig_, m);
        return {jacobi_direct(setup, fk, fl, fm).zero, jacobi_flow(setup, fk, fl, fm).zero};
    }

    bool is_divergence_of(const std::string& density) const {
        return is_divergence(sig_, parse_expression(sig_, density));
    }

    py::dict hamiltonian(const std::string& op, unsigned max_degree, unsigned max_order) const {
        PoissonSetup setup(sig_, parse_operator(sig_, op));
        HamiltonianReport report = classify(setup, max_degree, max_order);
        py::dict out;
        out["verdict"] = to_string(report.verdict);
        out["reason"] = report.reason;
        out["skew_adjoint"] = report.skew;
        if (report.witness) {
            py::list triple;
            for (const auto& f : report.witness->triple) triple.append(to_string(sig_, f));
            out["witness"] = triple;
        }
        return out;
    }

    py::list validate(std::uint64_t seed, unsigned cases) const {
        FreeGamma model;
        ValidationReport report = validate_algebra(sig_, model, seed, cases);
        py::list out;
        for (const auto& check : report.checks) {
            py::dict item;
            item["name"] = check.name;
            item["passed"] = check.passed;
            item["detail"] = check.detail;
            out.append(item);
        }
        return out;
    }

private:
    Signature sig_;
};

py::list corpus_list() {
    py::list out;
    for (const auto& result : run_corpus()) {
        py::dict item;
        item["name"] = result.name;
        item["digest"] = result.digest;
        item["verdict"] = to_string(result.report.verdict);
        item["expected"] = to_string(result.expected);
        item["ok"] = result.ok;
        out.append(item);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "symbolic differential algebra and Hamiltonian-operator verification";

    py::register_exception<ParseError>(m, "ExprParseError");

    py::class_<Context>(m, "Context")
        .def(py::init<std::vector<std::string>, std::vector<std::string>>(),
             py::arg("independent") = std::vector<std::string>{"x"},
             py::arg("dependent") = std::vector<std::string>{"u"})
        .def_property_readonly("independent", &Context::independent)
        .def_property_readonly("dependent", &Context::dependent)
        .def("canonical", &Context::canonical, py::arg("expr"),
             "parse an expression and print it canonically")
        .def("euler", &Context::euler_map, py::arg("density"),
             "variational derivative, one entry per dependent variable")
        .def("adjoint", &Context::adjoint_text, py::arg("operator"))
        .def("is_skew", &Context::is_skew, py::arg("operator"))
        .def("compose", &Context::compose_text, py::arg("p"), py::arg("q"))
        .def("frechet", &Context::frechet_text, py::arg("density"))
        .def("green", &Context::green, py::arg("operator"), py::arg("f"), py::arg("g"),
             "current components of <f,Pg> - <P*f,g> = Div psi")
        .def("bracket", &Context::bracket_text, py::arg("operator"), py::arg("k"), py::arg("s"))
        .def("jacobi", &Context::jacobi, py::arg("operator"), py::arg("k"), py::arg("l"),
             py::arg("m"), "(direct residual is divergence, deformation residual is divergence)")
        .def("is_divergence", &Context::is_divergence_of, py::arg("density"))
        .def("hamiltonian", &Context::hamiltonian, py::arg("operator"), py::arg("max_degree") = 3,
             py::arg("max_order") = 2)
        .def("validate", &Context::validate, py::arg("seed") = 0, py::arg("cases") = 25);

    m.def("corpus", &corpus_list, "run the locked regression problems");
}
