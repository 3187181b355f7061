#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vqf/fueter.hpp"
#include "vqf/json_io.hpp"
#include "vqf/operators.hpp"
#include "vqf/rkhs.hpp"
#include "vqf/schur.hpp"
#include "vqf/verify.hpp"

namespace py = pybind11;
using namespace vqf;

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

std::vector<std::vector<Quaternion>> qmatrix_rows(const QMatrix& m) {
    std::vector<std::vector<Quaternion>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
    return rows;
}

QMatrix qmatrix_from_rows(const std::vector<std::vector<Quaternion>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw ShapeMismatch("ragged row list");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Field make_field(const std::function<Quaternion(const PointH&)>& f) { return Field{f}; }

}  // namespace

PYBIND11_MODULE(_vqfueter, m) {
    m.doc() = "Fueter-variable calculus for the global operator V_q: monomials, "
              "series algebra, reproducing kernels, Blaschke factors, realizations.";

    py::register_exception<Error>(m, "Error");

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<>())
        .def(py::init<double>(), py::arg("real"))
        .def(py::init<double, double, double, double>(), py::arg("w"), py::arg("x"),
             py::arg("y"), py::arg("z"))
        .def_readwrite("w", &Quaternion::w)
        .def_readwrite("x", &Quaternion::x)
        .def_readwrite("y", &Quaternion::y)
        .def_readwrite("z", &Quaternion::z)
        .def_static("unit", &Quaternion::unit, py::arg("axis"))
        .def("conj", &Quaternion::conj)
        .def("vec", &Quaternion::vec)
        .def("norm", &Quaternion::norm)
        .def("norm_sq", &Quaternion::norm_sq)
        .def("inverse", &Quaternion::inverse, py::arg("eps_scale") = 1e-14)
        .def("pow", &Quaternion::pow, py::arg("n"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def(double() * py::self)
        .def(py::self * double())
        .def("__repr__", [](const Quaternion& q) {
            std::ostringstream os;
            os << "Quaternion(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
            return os.str();
        });

    py::class_<MultiIndex>(m, "MultiIndex")
        .def(py::init<>())
        .def(py::init<int, int, int>(), py::arg("a1"), py::arg("a2"), py::arg("a3"))
        .def_readwrite("a1", &MultiIndex::a1)
        .def_readwrite("a2", &MultiIndex::a2)
        .def_readwrite("a3", &MultiIndex::a3)
        .def("degree", &MultiIndex::degree)
        .def(py::self + py::self)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__",
             [](const MultiIndex& a) {
                 return static_cast<std::size_t>(a.a1) ^ (static_cast<std::size_t>(a.a2) << 16) ^
                        (static_cast<std::size_t>(a.a3) << 32);
             })
        .def("__repr__", [](const MultiIndex& a) {
            std::ostringstream os;
            os << "MultiIndex(" << a.a1 << ", " << a.a2 << ", " << a.a3 << ")";
            return os.str();
        });

    py::class_<PointH>(m, "PointH")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("x0"), py::arg("x1"),
             py::arg("x2"), py::arg("x3"))
        .def_readwrite("x0", &PointH::x0)
        .def_readwrite("x1", &PointH::x1)
        .def_readwrite("x2", &PointH::x2)
        .def_readwrite("x3", &PointH::x3)
        .def_static("strict", &PointH::strict)
        .def("quaternion", &PointH::quaternion)
        .def("vec_norm", &PointH::vec_norm)
        .def("norm", &PointH::norm)
        .def("in_hstar", &PointH::in_hstar)
        .def(py::self - py::self)
        .def(py::self + py::self)
        .def("__repr__", [](const PointH& p) {
            std::ostringstream os;
            os << "PointH(" << p.x0 << ", " << p.x1 << ", " << p.x2 << ", " << p.x3 << ")";
            return os.str();
        });

    py::class_<QMatrix>(m, "QMatrix")
        .def(py::init<int, int>(), py::arg("rows"), py::arg("cols"))
        .def(py::init(&qmatrix_from_rows), py::arg("rows"))
        .def_static("identity", &QMatrix::identity)
        .def_static("scalar", &QMatrix::scalar)
        .def_property_readonly("rows", &QMatrix::rows)
        .def_property_readonly("cols", &QMatrix::cols)
        .def("at", [](const QMatrix& m_, int i, int j) { return m_.at(i, j); })
        .def("set", [](QMatrix& m_, int i, int j, const Quaternion& q) { m_.at(i, j) = q; })
        .def("tolist", &qmatrix_rows)
        .def("adjoint", &QMatrix::adjoint)
        .def("frobenius_norm", &QMatrix::frobenius_norm)
        .def("solve", &QMatrix::solve)
        .def("inverse", &QMatrix::inverse)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(double() * py::self)
        .def(py::self == py::self)
        .def("scale_left", &QMatrix::scale_left)
        .def("scale_right", &QMatrix::scale_right);

    m.def("complexify", [](const QMatrix& q) {
        const CMatrix z = complexify(q);
        std::vector<std::vector<std::complex<double>>> rows(z.rows);
        for (int i = 0; i < z.rows; ++i)
            for (int j = 0; j < z.cols; ++j) rows[i].push_back(z.at(i, j));
        return rows;
    });
    m.def("hermitian_eigenvalues", &hermitian_eigenvalues);
    m.def("is_psd", &is_psd, py::arg("m"), py::arg("tol"));
    m.def("rank1_spectral", &rank1_spectral, py::arg("v"), py::arg("f"));
    m.def("symmetric_product",
          [](const std::vector<Quaternion>& qs) { return symmetric_product(qs); });

    py::class_<FueterSeries>(m, "FueterSeries")
        .def(py::init<int, int, std::optional<int>>(), py::arg("rows"), py::arg("cols"),
             py::arg("trunc") = std::nullopt)
        .def_static("constant", &FueterSeries::constant, py::arg("coeff"),
                    py::arg("trunc") = std::nullopt)
        .def_static("mu_row_series", &FueterSeries::mu_row_series)
        .def_property_readonly("rows", &FueterSeries::rows)
        .def_property_readonly("cols", &FueterSeries::cols)
        .def_property_readonly("trunc", &FueterSeries::trunc_degree)
        .def("add", &FueterSeries::add)
        .def("coeff", &FueterSeries::coeff)
        .def("terms",
             [](const FueterSeries& f) {
                 std::vector<std::pair<MultiIndex, QMatrix>> out(f.terms().begin(),
                                                                 f.terms().end());
                 return out;
             })
        .def("max_degree", &FueterSeries::max_degree)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self == py::self)
        .def("scale_left", &FueterSeries::scale_left)
        .def("scale_right", &FueterSeries::scale_right)
        .def("right_mul", &FueterSeries::right_mul)
        .def("to_json", [](const FueterSeries& f) { return to_json(f).dump(); })
        .def_static("from_json",
                    [](const std::string& s) { return series_from_json(Json::parse(s)); });

    m.def("ck_extend", &ck_extend, py::arg("poly"));
    m.def("star_mul", &star_mul);
    m.def("star_inverse", &star_inverse, py::arg("f"), py::arg("trunc"));
    m.def("eval", [](const FueterSeries& f, const PointH& x) { return eval(f, x); });
    m.def("star_resolvent", &star_resolvent, py::arg("a_stacked"), py::arg("trunc"));
    m.def("coeff_distance", &coeff_distance);

    m.def("mu_u", &mu_u, py::arg("x"), py::arg("u"));
    m.def("mu_alpha", &mu_alpha, py::arg("x"), py::arg("alpha"));
    m.def("mu_alpha_product", &mu_alpha_product);
    m.def("zeta_u", &zeta_u);
    m.def("zeta_alpha", &zeta_alpha);
    m.def("c_alpha_n", &c_alpha_n, py::arg("alpha"), py::arg("n"));
    m.def("expand_qn", &expand_qn, py::arg("n"));
    m.def("in_omega_rRrho", &in_omega_rRrho);
    m.def("omega_growth_bound", &omega_growth_bound);
    m.def("in_omega_1", &in_omega_1);
    m.def("mu_sum_sq", &mu_sum_sq);
    m.def("arveson_diag", [](const PointH& x, int trunc) {
        const ArvesonDiag d = arveson_diag(x, trunc);
        return py::make_tuple(d.value, d.tail_bound, d.tail_valid);
    });
    m.def("arveson_diag_level", &arveson_diag_level);
    m.def("euler_exponential", &euler_exponential, py::arg("alpha"), py::arg("x"));

    py::class_<FDScheme>(m, "FDScheme")
        .def(py::init<>())
        .def(py::init([](double h, int order) { return FDScheme{h, order}; }), py::arg("h"),
             py::arg("order") = 2)
        .def_readwrite("h", &FDScheme::h)
        .def_readwrite("order", &FDScheme::order);

    m.def("apply_vq",
          [](const std::function<Quaternion(const PointH&)>& f, const PointH& x,
             const FDScheme& s) { return apply_vq(make_field(f), x, s); },
          py::arg("f"), py::arg("x"), py::arg("scheme") = FDScheme{});
    m.def("apply_vq_bar",
          [](const std::function<Quaternion(const PointH&)>& f, const PointH& x,
             const FDScheme& s) { return apply_vq_bar(make_field(f), x, s); },
          py::arg("f"), py::arg("x"), py::arg("scheme") = FDScheme{});
    m.def("apply_vq_bar_euler",
          [](const std::function<Quaternion(const PointH&)>& f, const PointH& x,
             const FDScheme& s) { return apply_vq_bar_euler(make_field(f), x, s); },
          py::arg("f"), py::arg("x"), py::arg("scheme") = FDScheme{});
    m.def("apply_gq",
          [](const std::function<Quaternion(const PointH&)>& f, const PointH& x,
             const FDScheme& s) { return apply_gq(make_field(f), x, s); },
          py::arg("f"), py::arg("x"), py::arg("scheme") = FDScheme{});
    m.def("euler_op",
          [](const std::function<Quaternion(const PointH&)>& f, const PointH& x,
             const FDScheme& s) { return euler(make_field(f), x, s); },
          py::arg("f"), py::arg("x"), py::arg("scheme") = FDScheme{});
    m.def("gleason_remainder",
          [](const std::function<Quaternion(const PointH&)>& f, const PointH& a,
             const PointH& b, int u, int quad, const FDScheme& s) {
              return gleason_remainder(make_field(f), a, b, u, quad, s);
          },
          py::arg("f"), py::arg("a"), py::arg("b"), py::arg("u"),
          py::arg("quad_points") = 1001, py::arg("scheme") = FDScheme{});

    py::class_<CoefficientFamily>(m, "CoefficientFamily")
        .def_static("arveson", &CoefficientFamily::arveson)
        .def_static("custom",
                    [](const std::map<MultiIndex, std::string>& values) {
                        std::map<MultiIndex, Rational> r;
                        for (const auto& [a, s] : values) r[a] = Rational(s);
                        return CoefficientFamily::custom(std::move(r));
                    },
                    py::arg("values"), "values: dict MultiIndex -> 'p/q' strings")
        .def("is_arveson", &CoefficientFamily::is_arveson)
        .def("contains", &CoefficientFamily::contains)
        .def("at", [](const CoefficientFamily& c, const MultiIndex& a) {
            return rational_str(c.at(a));
        });

    m.def("kernel_eval", [](const CoefficientFamily& c, const PointH& x, const PointH& y,
                            int trunc) {
        const KernelValue v = kernel_eval(c, x, y, trunc);
        return py::make_tuple(v.value, v.tail_bound, v.tail_valid);
    });
    m.def("gram_matrix", &gram_matrix, py::arg("family"), py::arg("points"), py::arg("trunc"));
    m.def("shift", &shift, py::arg("u"), py::arg("f"));
    m.def("backward_shift", &backward_shift, py::arg("u"), py::arg("f"));
    m.def("shift_adjoint", &shift_adjoint, py::arg("u"), py::arg("family"), py::arg("f"));
    m.def("structural_defect", [](const CoefficientFamily& c, const MultiIndex& a) {
        return rational_str(structural_defect(c, a));
    });
    m.def("in_omega_arveson", &in_omega_arveson);
    m.def("multiplier_kernel_gram", &multiplier_kernel_gram, py::arg("s"), py::arg("points"),
          py::arg("trunc"));

    py::class_<Realization>(m, "Realization")
        .def(py::init<>())
        .def(py::init([](const QMatrix& a, const QMatrix& b, const QMatrix& c,
                         const QMatrix& d) {
                 Realization r{a, b, c, d};
                 r.validate();
                 return r;
             }),
             py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"))
        .def_readwrite("A", &Realization::A)
        .def_readwrite("B", &Realization::B)
        .def_readwrite("C", &Realization::C)
        .def_readwrite("D", &Realization::D)
        .def("N", &Realization::N)
        .def("stacked", &Realization::stacked)
        .def("to_json", [](const Realization& r) { return to_json(r).dump(); })
        .def_static("from_json", [](const std::string& s) {
            return realization_from_json(Json::parse(s));
        });

    py::class_<BlaschkePoint>(m, "BlaschkePoint")
        .def(py::init<const PointH&>(), py::arg("a"))
        .def_property_readonly("point", &BlaschkePoint::point)
        .def_property_readonly("mu_row", &BlaschkePoint::mu_row)
        .def_property_readonly("s", &BlaschkePoint::s);

    m.def("blaschke_series", &blaschke_series, py::arg("a"), py::arg("trunc") = 12);
    m.def("blaschke_tail_estimate", &blaschke_tail_estimate);
    m.def("halmos", &halmos);
    m.def("signature_j", &signature_j);
    m.def("rational_restrict", &rational_restrict, py::arg("r"), py::arg("xvec"));
    m.def("rational_series", &rational_series, py::arg("r"), py::arg("trunc") = 12);
    m.def("rational_tail_bound", &rational_tail_bound);
    m.def("blaschke_realization", &blaschke_realization);

    m.def("run_verify_suite",
          [](const std::string& suite, std::uint64_t seed) {
              std::vector<py::dict> out;
              for (const auto& r : run_verify_suite(suite, seed)) {
                  py::dict d;
                  d["name"] = r.name;
                  d["pass"] = r.pass;
                  d["detail"] = r.detail;
                  out.push_back(std::move(d));
              }
              return out;
          },
          py::arg("suite") = "all", py::arg("seed") = 0);
}
