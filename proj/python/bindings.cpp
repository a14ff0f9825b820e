#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqkl/matroid_kl.hpp"
#include "eqkl/render.hpp"

namespace py = pybind11;
using namespace eqkl;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition::from_parts(parts); }

py::tuple partition_tuple(const Partition& p) {
    py::tuple out(static_cast<std::size_t>(p.length()));
    for (int i = 0; i < p.length(); ++i) out[static_cast<std::size_t>(i)] = p.part(i);
    return out;
}

py::object py_bigint(const BigInt& x) {
    return py::module_::import("builtins").attr("int")(x.to_decimal());
}

GradedSchurVector p_uniform(int m, int d, const std::string& method) {
    if (method == "closed") return p_uniform_closed(m, d);
    if (method == "recursive") return p_uniform_recursive(m, d);
    if (method == "skew") return p_uniform_skew(m, d);
    throw std::invalid_argument("p_uniform: method must be closed, recursive or skew");
}

GradedSchurVector q_uniform(int m, int d, const std::string& method) {
    if (method == "closed") return q_uniform_closed(m, d);
    if (method == "recursive") {
        GradedSchurVector hat = q_hat_uniform_recursive(m, d);
        if (d % 2 != 0) hat = -hat;
        return hat;
    }
    throw std::invalid_argument("q_uniform: method must be closed or recursive");
}

IntPolynomial kl_poly(int m, int d, const std::string& method) {
    if (method == "closed") return ordinary_kl(m, d);
    if (method == "oracle") return ordinary_kl_oracle(m, d);
    throw std::invalid_argument("ordinary_kl: method must be closed or oracle");
}

} // namespace

PYBIND11_MODULE(_eqkl, m) {
    m.doc() = "Exact equivariant Kazhdan-Lusztig polynomials of Boolean and uniform "
              "matroids, with Schur-basis symmetric function coefficients";

    py::register_exception<NotWeaklyDecreasing>(m, "NotWeaklyDecreasing", PyExc_ValueError);
    py::register_exception<CoefficientOverflow>(m, "CoefficientOverflow", PyExc_OverflowError);
    py::register_exception<DegreeExceedsShift>(m, "DegreeExceedsShift", PyExc_ValueError);
    py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_RuntimeError);

    py::class_<SchurVector>(m, "SchurVector")
        .def(py::init<>())
        .def("terms",
             [](const SchurVector& v) {
                 py::list out;
                 for (const auto& [p, c] : v.terms()) out.append(py::make_tuple(partition_tuple(p), c));
                 return out;
             })
        .def("coeff", [](const SchurVector& v, const std::vector<int>& p) { return v.coeff(to_partition(p)); })
        .def("is_zero", &SchurVector::is_zero)
        .def("to_text", [](const SchurVector& v) { return to_text(v); })
        .def("to_latex", [](const SchurVector& v, const std::string& symbol) { return to_latex(v, symbol); },
             py::arg("symbol") = "s")
        .def("to_json", [](const SchurVector& v) { return nlohmann::json(v).dump(); })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def("__mul__", [](const SchurVector& a, const SchurVector& b) { return lr_product(a, b); })
        .def("__mul__", [](const SchurVector& a, Coeff c) { return a * c; })
        .def("__repr__", [](const SchurVector& v) { return "<SchurVector " + to_text(v) + ">"; });

    py::class_<GradedSchurVector>(m, "GradedSchurVector")
        .def(py::init<>())
        .def("coeffs",
             [](const GradedSchurVector& v) {
                 py::list out;
                 for (const auto& [deg, value] : v.coeffs()) out.append(py::make_tuple(deg, value));
                 return out;
             })
        .def("coeff", &GradedSchurVector::coeff, py::arg("degree"))
        .def("degree", &GradedSchurVector::degree)
        .def("is_zero", &GradedSchurVector::is_zero)
        .def("dimension", [](const GradedSchurVector& v) { return dimension_poly(v); })
        .def("to_text", [](const GradedSchurVector& v) { return to_text(v); })
        .def("to_latex",
             [](const GradedSchurVector& v, const std::string& symbol) { return to_latex(v, symbol); },
             py::arg("symbol") = "s")
        .def("to_json", [](const GradedSchurVector& v) { return nlohmann::json(v).dump(); })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def("__mul__", [](const GradedSchurVector& a, const GradedSchurVector& b) { return gproduct(a, b); })
        .def("__repr__", [](const GradedSchurVector& v) { return "<GradedSchurVector " + to_text(v) + ">"; });

    py::class_<IntPolynomial>(m, "IntPolynomial")
        .def(py::init<>())
        .def("coeffs",
             [](const IntPolynomial& v) {
                 py::list out;
                 for (const auto& [deg, value] : v.coeffs()) out.append(py::make_tuple(deg, py_bigint(value)));
                 return out;
             })
        .def("degree", &IntPolynomial::degree)
        .def("is_zero", &IntPolynomial::is_zero)
        .def("to_text", [](const IntPolynomial& v) { return to_text(v); })
        .def("to_json",
             [](const IntPolynomial& v) {
                 nlohmann::json j;
                 to_json(j, v);
                 return j.dump();
             })
        .def(py::self == py::self)
        .def("__repr__", [](const IntPolynomial& v) { return "<IntPolynomial " + to_text(v) + ">"; });

    // partitions & tableaux ----------------------------------------------------
    m.def("make_partition",
          [](const std::vector<int>& raw) { return partition_tuple(to_partition(raw)); },
          "Normalize a part sequence: strips zeros, validates weak decrease");
    m.def("conjugate",
          [](const std::vector<int>& p) { return partition_tuple(to_partition(p).conjugate()); });
    m.def("syt_count", [](const std::vector<int>& p) { return py_bigint(syt_count(to_partition(p))); });
    m.def("skew_syt_count",
          [](const std::vector<int>& outer, const std::vector<int>& inner) {
              return py_bigint(skew_syt_count(SkewShape(to_partition(outer), to_partition(inner))));
          },
          py::arg("outer"), py::arg("inner"));
    m.def("is_horizontal_strip", [](const std::vector<int>& outer, const std::vector<int>& inner) {
        return is_horizontal_strip(to_partition(outer), to_partition(inner));
    });
    m.def("is_vertical_strip", [](const std::vector<int>& outer, const std::vector<int>& inner) {
        return is_vertical_strip(to_partition(outer), to_partition(inner));
    });
    m.def("is_lattice_word", &is_lattice_word);

    // Schur algebra --------------------------------------------------------------
    m.def("schur",
          [](const std::vector<int>& p, Coeff c) { return SchurVector(to_partition(p), c); },
          py::arg("partition"), py::arg("coeff") = 1);
    m.def("pieri_h", &pieri_h, py::arg("f"), py::arg("i"));
    m.def("pieri_e", &pieri_e, py::arg("f"), py::arg("i"));
    m.def("lr_product", &lr_product);
    m.def("skew_schur_expand", [](const std::vector<int>& outer, const std::vector<int>& inner) {
        return skew_schur_expand(SkewShape(to_partition(outer), to_partition(inner)));
    });
    m.def("lr_coefficient",
          [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& nu) {
              return lr_coefficient(to_partition(lam), to_partition(mu), to_partition(nu));
          });
    m.def("lr_tableaux",
          [](const std::vector<int>& outer, const std::vector<int>& inner,
             const std::vector<int>& content) {
              py::list out;
              for (const auto& tab : enumerate_lr_tableaux(
                       SkewShape(to_partition(outer), to_partition(inner)), to_partition(content)))
                  out.append(tab.rows);
              return out;
          },
          "Row fillings of every Littlewood-Richardson tableau of the shape and content");

    // graded operations ----------------------------------------------------------
    m.def("monomial",
          [](int degree, const SchurVector& v) { return GradedSchurVector::monomial(degree, v); });
    m.def("gproduct", &gproduct);
    m.def("reciprocal_shift", &reciprocal_shift, py::arg("f"), py::arg("n"));
    m.def("truncate_strictly_below", &truncate_strictly_below, py::arg("f"), py::arg("half_of"));
    m.def("dimension_poly", &dimension_poly);

    // matroid polynomials ----------------------------------------------------------
    m.def("char_boolean", &char_boolean, py::arg("n"));
    m.def("char_uniform", &char_uniform, py::arg("m"), py::arg("d"));
    m.def("p_boolean", &p_boolean, py::arg("n"));
    m.def("q_boolean",
          [](int n) {
              GradedSchurVector hat = q_hat_boolean(n);
              if (n % 2 != 0) hat = -hat;
              return hat;
          },
          py::arg("n"));
    m.def("p_uniform", &p_uniform, py::arg("m"), py::arg("d"), py::arg("method") = "closed");
    m.def("q_uniform", &q_uniform, py::arg("m"), py::arg("d"), py::arg("method") = "closed");
    m.def("verify_orthogonality", &verify_orthogonality, py::arg("m"), py::arg("d"));
    m.def("ordinary_kl", &kl_poly, py::arg("m"), py::arg("d"), py::arg("method") = "closed");

    // JSON parsing ----------------------------------------------------------------
    m.def("schur_from_json",
          [](const std::string& s) { return nlohmann::json::parse(s).get<SchurVector>(); });
    m.def("graded_from_json",
          [](const std::string& s) { return nlohmann::json::parse(s).get<GradedSchurVector>(); });
    m.def("intpoly_from_json", [](const std::string& s) {
        IntPolynomial out;
        from_json(nlohmann::json::parse(s), out);
        return out;
    });

    m.attr("__version__") = "1.0.0";
}
