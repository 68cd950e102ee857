#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwsum/contact.hpp"
#include "gwsum/elliptic.hpp"
#include "gwsum/error.hpp"
#include "gwsum/selftest.hpp"
#include "gwsum/series.hpp"
#include "gwsum/severi.hpp"
#include "gwsum/sumformula.hpp"

namespace py = pybind11;
using namespace gwsum;

namespace {

py::int_ to_py(const BigInt& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

ContactMultiIndex to_multi_index(const std::map<int, int>& counts) { return ContactMultiIndex(counts); }

SeveriKey make_key(int d, int delta, const std::optional<std::map<int, int>>& alpha,
                   const std::optional<std::map<int, int>>& beta) {
  if (alpha.has_value() != beta.has_value()) {
    throw Error(ErrorKind::InvalidArgument, "alpha and beta go together");
  }
  if (!alpha) return SeveriKey::transverse(d, delta);
  return SeveriKey{d, delta, to_multi_index(*alpha), to_multi_index(*beta)};
}

std::vector<py::object> section_coefficients(const TruncatedSeries& s, int order) {
  std::vector<py::object> out;
  for (int d = 0; d <= order; ++d) out.push_back(to_py(s.coefficient_t(d, 1)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_gwsum, m) {
  m.doc() = "Exact curve-counting engine (C++ core)";

  py::register_exception<Error>(m, "GwsumError", PyExc_ValueError);

  // exactring
  py::class_<TruncatedSeries>(m, "Series")
      .def_static("from_text", &parse_series)
      .def("to_text", &to_text)
      .def_property_readonly("trunc_order", &TruncatedSeries::trunc_order)
      .def_property_readonly("lambda_floor", &TruncatedSeries::lambda_floor)
      .def("coefficient",
           [](const TruncatedSeries& s, int fiber, int section, int lambda, int point) {
             return to_py(s.coefficient(GradedMonomial{fiber, section, lambda, point}));
           },
           py::arg("fiber_deg") = 0, py::arg("section_pow") = 0, py::arg("lambda_pow") = 0,
           py::arg("point_pow") = 0)
      .def("__len__", &TruncatedSeries::size)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__repr__", &to_text);
  m.def("exp", [](const TruncatedSeries& a) { return gwsum::exp(a); });
  m.def("log", [](const TruncatedSeries& a) { return gwsum::log(a); });
  m.def("derivative_t", &derivative_t);

  // contactcomb
  m.def("weight", [](const std::vector<int>& parts) { return to_py(weight(TangencySeq(parts))); });
  m.def("enum_sequences", [](int degree) {
    std::vector<std::vector<int>> out;
    for (const auto& s : enum_sequences(degree)) out.push_back(s.parts());
    return out;
  });
  m.def("binom", [](const std::map<int, int>& alpha, const std::map<int, int>& sub) {
    return to_py(binom(to_multi_index(alpha), to_multi_index(sub)));
  });
  m.def("order_pow", [](const std::map<int, int>& gamma) { return to_py(order_pow(to_multi_index(gamma))); });

  // severi
  m.def("point_conditions",
        [](int d, int delta, std::optional<std::map<int, int>> alpha,
           std::optional<std::map<int, int>> beta) {
          return point_conditions(make_key(d, delta, alpha, beta));
        },
        py::arg("d"), py::arg("delta"), py::arg("alpha") = py::none(), py::arg("beta") = py::none());
  m.def("severi",
        [](int d, int delta, std::optional<std::map<int, int>> alpha,
           std::optional<std::map<int, int>> beta) {
          const auto key = make_key(d, delta, alpha, beta);
          BigInt value;
          {
            py::gil_scoped_release release;
            value = severi(key);
          }
          return to_py(value);
        },
        py::arg("d"), py::arg("delta"), py::arg("alpha") = py::none(), py::arg("beta") = py::none(),
        "Generalized Severi degree N^{d,delta}(alpha, beta); alpha/beta map contact order to count.");
  m.def("kontsevich", [](int d) { return to_py(kontsevich(d)); });
  m.def("connected_from_severi", [](int d, int delta) { return to_py(connected_from_severi(d, delta)); });

  // elliptic
  m.def("sigma_series", [](int order) {
    const auto g = sigma_series(order);
    std::vector<py::object> out;
    for (int d = 0; d <= order; ++d) out.push_back(to_py(g.coefficient_t(d)));
    return out;
  });
  m.def("f0_via_ode", [](int order) { return section_coefficients(f0_via_ode(order), order); });
  m.def("f0_via_product", [](int order) { return section_coefficients(f0_via_product(order), order); });
  m.def("h_via_trr", [](int order) {
    return section_coefficients(h_via_trr(f0_via_product(order), sigma_series(order), order), order);
  });
  m.def("h_via_sum", [](int order) {
    return section_coefficients(h_via_sum(f0_via_product(order), sigma_series(order), order), order);
  });

  // sumformula: tables cross the boundary as JSON text in the file schema.
  m.def("convolve",
        [](const std::string& x_json, const std::string& y_json, std::optional<std::string> s_json,
           bool invert, int max_class_degree, int min_chi) {
          const auto x = table_from_json(nlohmann::json::parse(x_json));
          const auto y = table_from_json(nlohmann::json::parse(y_json));
          const Truncation trunc{max_class_degree, min_chi};
          SMatrix middle = s_json ? smatrix_from_json(nlohmann::json::parse(*s_json))
                                  : SMatrix::identity(x.basis(), x.generators());
          if (invert) middle = invert_smatrix(middle, x.basis(), trunc);
          return to_json(sum_formula(x, middle, y, x.basis(), trunc)).dump();
        },
        py::arg("x"), py::arg("y"), py::arg("smatrix") = py::none(), py::arg("invert") = false,
        py::arg("max_class_degree") = Truncation{}.max_class_degree,
        py::arg("min_chi") = Truncation{}.min_chi);
  m.def("invert_smatrix",
        [](const std::string& s_json, int max_class_degree, int min_chi) {
          const auto s = smatrix_from_json(nlohmann::json::parse(s_json));
          const Truncation trunc{max_class_degree, min_chi};
          return to_json(invert_smatrix(s, s.remainder.basis(), trunc)).dump();
        },
        py::arg("smatrix"), py::arg("max_class_degree") = Truncation{}.max_class_degree,
        py::arg("min_chi") = Truncation{}.min_chi);

  m.def("selftest", []() {
    std::vector<std::tuple<std::string, std::string, bool, std::string>> out;
    for (const auto& r : run_selftest(nullptr, true)) out.emplace_back(r.module, r.name, r.passed, r.detail);
    return out;
  });
}
