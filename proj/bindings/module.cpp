#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "genera/bordism.hpp"
#include "genera/cli.hpp"
#include "genera/dsl.hpp"
#include "genera/errors.hpp"
#include "genera/genus.hpp"
#include "genera/rational.hpp"
#include "genera/series.hpp"
#include "genera/varieties.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace {

using namespace genera;

py::object fraction(const Rational& q) {
    py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(rat_to_fraction_string(q));
}

Rational rational_from_py(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) {
        return Rational(mpz_class(py::str(h).cast<std::string>()));
    }
    // str and fractions.Fraction both stringify to "num" or "num/den".
    return rat_from_string(py::str(h).cast<std::string>());
}

py::list fraction_list(const std::vector<Rational>& values) {
    py::list out;
    for (const Rational& q : values) out.append(fraction(q));
    return out;
}

py::list series_list(const PowerSeries1& s) {
    py::list out;
    for (int i = 0; i <= s.order(); ++i) out.append(fraction(s[i]));
    return out;
}

long long small_integer(const Rational& q) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
        throw std::runtime_error("expected a machine integer, got " + rat_to_string(q));
    }
    return q.get_num().get_si();
}

// Python-facing facade over a parsed and elaborated variety expression.
struct PyVariety {
    VarietyModel model;

    explicit PyVariety(const std::string& source) {
        ExprPtr expr = parse_variety(source);
        model = elaborate(*expr);
    }

    GenusSpec spec_named(const std::string& name) const {
        return GenusSpec::by_name(name, std::max(model.dim, 2));
    }

    py::list class_list(const Element& cls, int step, int top_weight) const {
        py::list out;
        for (int w = 0; w <= top_weight; ++w) {
            out.append(cls.component(step * w).to_string());
        }
        return out;
    }
};

BordismModel make_model(int g, int k, const std::string& variant) {
    if (variant == "unitary") return BordismModel(PiModel{g}, k, BordismVariant::Unitary);
    if (variant == "oriented") return BordismModel(PiModel{g}, k, BordismVariant::Oriented);
    fail(ErrorKind::UsageError, "variant must be \"unitary\" or \"oriented\"");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Characteristic classes, genera, and rational bordism of model varieties";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            std::string msg = to_string(e.kind()) + std::string(": ") + e.what();
            PyErr_SetString(PyExc_ValueError, msg.c_str());
        }
    });

    py::class_<PyVariety>(m, "Variety")
        .def(py::init<const std::string&>(), py::arg("expr"))
        .def_property_readonly("name", [](const PyVariety& v) { return v.model.name; })
        .def_property_readonly("dim", [](const PyVariety& v) { return v.model.dim; })
        .def("euler", [](const PyVariety& v) { return small_integer(v.model.euler_number()); })
        .def("signature",
             [](const PyVariety& v) {
                 return small_integer(genus_number(v.model, v.spec_named("l")));
             })
        .def("todd_genus",
             [](const PyVariety& v) { return fraction(genus_number(v.model, v.spec_named("todd"))); })
        .def("genus",
             [](const PyVariety& v, const std::string& spec) {
                 return fraction(genus_number(v.model, v.spec_named(spec)));
             },
             py::arg("spec"))
        .def("higher_todd",
             [](const PyVariety& v, const std::string& x) {
                 return fraction(higher_genus(v.model, v.spec_named("todd"), x));
             },
             py::arg("x"))
        .def("char_number",
             [](const PyVariety& v, const std::string& expr) {
                 return fraction(char_number(v.model, expr));
             },
             py::arg("expr"))
        .def("chern",
             [](const PyVariety& v) { return v.class_list(v.model.total_chern, 2, v.model.dim); })
        .def("pontrjagin",
             [](const PyVariety& v) {
                 return v.class_list(chern_to_pontrjagin(v.model.total_chern), 4, v.model.dim / 2);
             })
        .def("todd_class",
             [](const PyVariety& v) {
                 return v.class_list(genus_class_of(v.model, v.spec_named("todd")), 2, v.model.dim);
             })
        .def("labels",
             [](const PyVariety& v) {
                 std::vector<std::string> out;
                 for (const auto& [label, cls] : v.model.pi_classes) out.push_back(label);
                 return out;
             })
        .def("basis",
             [](const PyVariety& v) {
                 std::vector<std::pair<std::string, int>> out;
                 for (uint32_t i = 0; i < v.model.algebra->basis_size(); ++i) {
                     out.emplace_back(v.model.algebra->monomial_name(i),
                                      v.model.algebra->degree_of(i));
                 }
                 return out;
             })
        .def("__repr__",
             [](const PyVariety& v) { return "Variety(\"" + v.model.name + "\")"; });

    m.def("parse_print",
          [](const std::string& source) { return print_variety(*parse_variety(source)); },
          py::arg("expr"), "Canonical rendering of a variety expression");

    m.def("todd_series", [](int order) { return series_list(todd_series(order)); },
          py::arg("order"));
    m.def("l_series", [](int order) { return series_list(l_series(order)); }, py::arg("order"));
    m.def("ahat_series", [](int order) { return series_list(ahat_series(order)); },
          py::arg("order"));

    m.def("partitions", &unitary_basis, py::arg("k"),
          "Partitions of k in reverse-lexicographic order");

    m.def("bordism_quotient",
          [](int k) {
              IdealSpan span = birational_ideal_span(k);
              py::dict out;
              out["space_dimension"] = span.ambient;
              out["ideal_dimension"] = span.dimension;
              out["codimension"] = span.ambient - span.dimension;
              return out;
          },
          py::arg("k"));

    m.def("verify_invariance",
          [](const std::string& source) {
              ExprPtr expr = parse_variety(source);
              BlowupPair pair = elaborate_blowup(*expr);
              GenusSpec spec = GenusSpec::todd(std::max(pair.blown.dim, 1));
              InvarianceReport report = verify_blowup_invariance(pair, spec);
              py::list rows;
              for (const InvarianceRow& row : report.rows) {
                  rows.append(py::make_tuple(row.label, fraction(row.base_value),
                                             fraction(row.blown_value), row.equal));
              }
              py::dict out;
              out["pass"] = report.pass;
              out["rows"] = rows;
              return out;
          },
          py::arg("expr"));

    m.def("generators",
          [](int g, int k, const std::string& variant) {
              BordismModel model = make_model(g, k, variant);
              std::vector<std::pair<std::string, Partition>> out;
              for (const BordismGenerator& gen : model.generators()) {
                  out.emplace_back(gen.label, gen.fiber);
              }
              return out;
          },
          py::arg("g"), py::arg("k"), py::arg("variant") = "unitary",
          "Generator (label, fiber partition) pairs of the bordism model");

    m.def("todd_values",
          [](int g, int k) {
              BordismModel model(PiModel{g}, k, BordismVariant::Unitary);
              return fraction_list(model.todd_functional_values().values);
          },
          py::arg("g"), py::arg("k"),
          "The Todd functional on the generator basis");

    m.def("decompose",
          [](int g, int k, const py::sequence& values, const std::string& variant) {
              BordismModel model = make_model(g, k, variant);
              GenusFunctional xi;
              for (const py::handle& h : values) xi.values.push_back(rational_from_py(h));
              if (xi.values.size() != model.generators().size()) {
                  fail(ErrorKind::UsageError,
                       "values must list one entry per generator, in generators() order");
              }
              CohomologyClass cls = decompose_functional(model, xi);
              py::list out;
              for (const auto& [label, coeff] : cls.terms) {
                  out.append(py::make_tuple(label, fraction(coeff)));
              }
              return out;
          },
          py::arg("g"), py::arg("k"), py::arg("values"), py::arg("variant") = "unitary",
          "Solve for a cohomology class inducing the given functional");

    m.def("run",
          [](const std::vector<std::string>& args) {
              std::ostringstream out;
              std::ostringstream err;
              int code = run_cli(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Run a CLI invocation; returns (exit_code, stdout, stderr)");
}
