#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tolerant/expr.hpp"
#include "tolerant/report.hpp"
#include "tolerant/tolerant.hpp"

namespace py = pybind11;
using namespace tolerant;

namespace {

py::object to_python(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_python(item));
      return std::move(out);
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_python(value);
      return std::move(out);
    }
    default:
      return py::none();
  }
}

FieldDescriptor field_of(const py::object& field) {
  if (py::isinstance<FieldDescriptor>(field)) return field.cast<FieldDescriptor>();
  return FieldDescriptor::parse(field.cast<std::string>());
}

FieldElement element(const std::string& text, const FieldDescriptor& field) {
  const Polynomial c = parse_polynomial(text, field);
  if (c.degree() > 0) throw Error(ErrorCode::kFieldLiteralError, "expected a constant, got " + text);
  return c.is_zero() ? FieldElement::zero(field) : c.leading();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tolerant, duplicant and generalized discriminant of univariate polynomials";

  static PyObject* tolerant_error = py::exception<Error>(m, "TolerantError", PyExc_ValueError).inc_ref().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(tolerant_error)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      exc.attr("position") = e.position() ? py::cast(*e.position()) : py::none();
      PyErr_SetObject(tolerant_error, exc.ptr());
    }
  });

  py::class_<FieldDescriptor>(m, "Field")
      .def(py::init(&FieldDescriptor::parse), py::arg("descriptor"))
      .def_property_readonly("characteristic", &FieldDescriptor::characteristic)
      .def_property_readonly("is_perfect", &FieldDescriptor::is_perfect)
      .def("__str__", &FieldDescriptor::to_string)
      .def("__repr__", [](const FieldDescriptor& f) { return "Field('" + f.to_string() + "')"; })
      .def(py::self == py::self);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, const py::object& field) {
             return parse_polynomial(text, field_of(field));
           }),
           py::arg("text"), py::arg("field") = "q")
      .def_property_readonly("field", &Polynomial::field)
      .def_property_readonly("degree", [](const Polynomial& f) -> py::object {
        if (f.is_zero()) return py::none();
        return py::int_(f.degree());
      })
      .def("coefficients",
           [](const Polynomial& f) {
             std::vector<std::string> out;
             for (const auto& c : f.coeffs()) out.push_back(c.to_string());
             return out;
           })
      .def("evaluate", [](const Polynomial& f, const std::string& a) { return f.evaluate(element(a, f.field())).to_string(); })
      .def("__str__", [](const Polynomial& f) { return to_string(f); })
      .def("__repr__",
           [](const Polynomial& f) { return "Polynomial('" + to_string(f) + "', '" + f.field().to_string() + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self);

  m.def("tol", [](const Polynomial& f) { return tol(f).to_string(); });
  m.def("dupl", [](const Polynomial& f) { return dupl(f).to_string(); });
  m.def("gdisc", [](const Polynomial& f) { return gdisc(f).to_string(); });
  m.def("disc", [](const Polynomial& f) { return discriminant(f).to_string(); });
  m.def("in_T", [](const Polynomial& f) { return in_T(f); });
  m.def("is_separable", &is_separable);
  m.def("homothety_exponent", [](const Polynomial& f) { return homothety_exponent(f); });
  m.def("reciprocal", &reciprocal);
  m.def("hasse_derivative", &hasse_derivative, py::arg("f"), py::arg("r"));
  m.def("taylor_shift", [](const Polynomial& f, const std::string& a) { return taylor_shift(f, element(a, f.field())); });
  m.def("homothety", [](const Polynomial& f, const std::string& a) { return homothety(f, element(a, f.field())); });
  m.def(
      "tol_from_factorization",
      [](const std::string& text, const py::object& field, const std::string& mode) {
        return tol_from_factorization(parse_factored(text, field_of(field)), parse_formula_mode(mode)).to_string();
      },
      py::arg("text"), py::arg("field") = "q", py::arg("mode") = "corrected");

  m.def(
      "report",
      [](const std::string& text, const py::object& field, bool factored, bool assert_irreducible) {
        return to_python(to_json(make_report(text, field_of(field), factored, {assert_irreducible, kDefaultSeed})));
      },
      py::arg("text"), py::arg("field") = "q", py::arg("factored") = false, py::arg("assert_irreducible") = false);
  m.def(
      "selfcheck",
      [](std::uint64_t seed, unsigned count, const py::object& field, unsigned max_degree) {
        SelfcheckSummary summary;
        const SelfcheckConfig config{seed, count, field_of(field), max_degree};
        {
          py::gil_scoped_release release;
          summary = selfcheck(config);
        }
        return to_python(to_json(summary));
      },
      py::arg("seed") = 42, py::arg("count") = 500, py::arg("field") = "fp:101", py::arg("max_degree") = 8);
}
