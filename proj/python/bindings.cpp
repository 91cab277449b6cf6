#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "flipcount/atlas.hpp"
#include "flipcount/census.hpp"
#include "flipcount/counting.hpp"
#include "flipcount/export.hpp"
#include "flipcount/identities.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace flipcount;

// Exact integers cross the boundary as Python ints (via their decimal text).
namespace pybind11::detail {
template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const Integer& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

py::object to_python(const json& value) {
  return py::module_::import("json").attr("loads")(value.dump());
}

py::object fraction(const Rational& r) {
  auto num = Integer(boost::multiprecision::numerator(r));
  auto den = Integer(boost::multiprecision::denominator(r));
  return py::module_::import("fractions").attr("Fraction")(num, den);
}

Partition as_partition(const py::object& obj) {
  if (py::isinstance<Partition>(obj)) return obj.cast<Partition>();
  if (py::isinstance<py::str>(obj)) return Partition::parse(obj.cast<std::string>());
  return Partition::normalize(obj.cast<std::vector<int>>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tilings of convex polygons, flip classes and the identities that count them";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<Partition>(m, "Partition")
      .def(py::init([](const py::object& obj) { return as_partition(obj); }), py::arg("parts"))
      .def(py::init<>())
      .def_property_readonly("parts", [](const Partition& p) {
        return std::vector<int>(p.parts().begin(), p.parts().end());
      })
      .def_property_readonly("weight", &Partition::weight)
      .def_property_readonly("length", &Partition::length)
      .def("multiplicity", &Partition::multiplicity)
      .def("plus", [](const Partition& p) { return plus(p); })
      .def("minus", [](const Partition& p) { return minus(p); })
      .def("fill_up", [](const Partition& p, int m) { return fill_up(p, m); })
      .def("__str__", &Partition::to_string)
      .def("__repr__", [](const Partition& p) { return "Partition('" + p.to_string() + "')"; })
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
      .def("__lt__", [](const Partition& a, const Partition& b) { return a < b; })
      .def("__hash__", [](const Partition& p) { return py::hash(py::str(p.to_string())); });

  py::class_<Tiling>(m, "Tiling")
      .def(py::init([](const std::string& text) { return Tiling::parse(text); }))
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& diagonals) {
             std::vector<Diagonal> d;
             for (auto [i, j] : diagonals) d.push_back({i, j});
             return Tiling(n, std::move(d));
           }),
           py::arg("n"), py::arg("diagonals"))
      .def_property_readonly("n", &Tiling::n)
      .def_property_readonly("diagonals", [](const Tiling& t) {
        std::vector<std::pair<int, int>> out;
        for (const auto& d : t.diagonals()) out.emplace_back(d.i, d.j);
        return out;
      })
      .def("__str__", &Tiling::to_string)
      .def("__repr__", [](const Tiling& t) { return "Tiling('" + t.to_string() + "')"; })
      .def("__eq__", [](const Tiling& a, const Tiling& b) { return a == b; })
      .def("__lt__", [](const Tiling& a, const Tiling& b) { return a < b; })
      .def("__hash__", [](const Tiling& t) { return TilingHash{}(t); });

  m.def("partitions_of", &partitions_of, py::arg("m"));
  m.def("wreath", [](const py::object& l, const py::object& mu) {
    return wreath(as_partition(l), as_partition(mu));
  });
  m.def("models_fiber", [](const py::object& mu, int s) {
    std::vector<std::vector<Partition>> out;
    for (const auto& g : models_fiber(as_partition(mu), s)) {
      out.emplace_back(g.components().begin(), g.components().end());
    }
    return out;
  });
  m.def("catalan", &catalan);
  m.def("class_size", [](const py::object& nu) { return class_size(as_partition(nu)); });

  m.def("enumerate_tilings", [](int n, const py::object& shape) {
    std::optional<Partition> filter;
    if (!shape.is_none()) filter = as_partition(shape);
    return enumerate_tilings(n, filter);
  }, py::arg("n"), py::arg("shape") = py::none());
  m.def("shape_of", &shape_of);
  m.def("ff_of", [](const Tiling& t) {
    auto p = ff_of(t);
    return std::make_pair(p.sizes, p.ff);
  }, "Returns (ff+, ff).");
  m.def("flip_neighbors", &flip_neighbors);
  m.def("flip_classes", [](int n, const py::object& lambda) {
    return flip_classes(n, as_partition(lambda));
  });
  m.def("count_shape", [](int n, const py::object& lambda) {
    return count_shape_dp(n, as_partition(lambda));
  }, "a_n(lambda) by dynamic programming.");
  m.def("census", [](int n, int jobs) { return to_python(census_json(census(n, jobs))); },
        py::arg("n"), py::arg("jobs") = 1);

  m.def("pi_coeff", [](const py::object& l, const py::object& mu) {
    return pi_coeff(as_partition(l), as_partition(mu));
  });
  m.def("theorem_rhs", [](int n, const py::object& l) { return theorem_rhs(n, as_partition(l)); });
  m.def("euler_F", &euler_F);
  m.def("of_factor", [](const py::object& mu, const py::object& nu) {
    return of_factor(as_partition(mu), as_partition(nu));
  });
  m.def("column_sum", [](const py::object& nu) { return column_sum(as_partition(nu)); });
  m.def("of_product_identity", [](const py::object& nu, int max_weight) {
    return of_product_identity(as_partition(nu), max_weight);
  });
  m.def("b_count", [](int n, const py::object& l, const py::object& mu) {
    return b_count(n, as_partition(l), as_partition(mu));
  });
  m.def("of_bruteforce", [](const py::object& l, const py::object& mu, const py::object& nu, int n) {
    return fraction(of_bruteforce(as_partition(l), as_partition(mu), as_partition(nu), n));
  });

  m.def("cell_dim", &cell_dim);
  m.def("f_vector", &f_vector);
  m.def("euler_char", &euler_char);
  m.def("isometry_orbits", [](int n, const std::string& group, std::optional<int> dim) {
    return isometry_orbits(n, parse_group(group), dim);
  }, py::arg("n"), py::arg("group") = "cyclic", py::arg("dim") = py::none());
  m.def("vertex_profile_classes", [](int n) { return vertex_profiles(n).classes; });
  m.def("classification_table", [](int n) {
    return to_python(summary_json(classification_table(n)));
  });

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
