#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bcspec/io.hpp"
#include "bcspec/pair_spectrum.hpp"
#include "bcspec/spectra.hpp"
#include "bcspec/verify.hpp"

namespace py = pybind11;
using namespace bcspec;

namespace {

py::dict spectrum_set_dict(const SpectrumSet& s) {
    py::dict d;
    d["left_finite"] = s.left_finite;
    d["right_finite"] = s.right_finite;
    d["unbounded"] = s.unbounded();
    return d;
}

py::dict pair_set_dict(const PairSpectrumSet& s) {
    py::dict d;
    d["left_finite"] = s.left_finite;
    d["right_finite"] = s.right_finite;
    d["unbounded"] = s.unbounded();
    return d;
}

py::dict membership_dict(const MembershipReport& r) {
    py::dict d;
    d["member"] = r.member;
    d["side"] = r.side == Side::e1 ? "e1" : (r.side == Side::e2 ? "e2" : "none");
    d["smin_e1"] = r.smin_e1;
    d["smin_e2"] = r.smin_e2;
    d["scale_e1"] = r.scale_e1;
    d["scale_e2"] = r.scale_e2;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectral computations for commuting matrix tuples over the bicomplex ring";

    // translators run last-registered-first: the base goes in before the
    // derived kinds so the specific mappings win
    py::register_exception<Error>(m, "BcspecError", PyExc_RuntimeError);
    py::register_exception<NotCommuting>(m, "NotCommutingError", PyExc_ValueError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatchError", PyExc_ValueError);
    py::register_exception<ZeroDivisor>(m, "ZeroDivisorError", PyExc_ZeroDivisionError);
    py::register_exception<ZeroInput>(m, "ZeroInputError", PyExc_ZeroDivisionError);
    py::register_exception<BadExponent>(m, "BadExponentError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseFailure", PyExc_ValueError);

    py::class_<BiComplex>(m, "BiComplex")
        .def(py::init<const Complex&, const Complex&>(), py::arg("z1"), py::arg("z2"))
        .def(py::init<double>())
        .def_property_readonly("z1", &BiComplex::z1)
        .def_property_readonly("z2", &BiComplex::z2)
        .def_static("zero", &BiComplex::zero)
        .def_static("one", &BiComplex::one)
        .def_static("i", &BiComplex::i)
        .def_static("j", &BiComplex::j)
        .def_static("k", &BiComplex::k)
        .def_static("e1", &BiComplex::e1)
        .def_static("e2", &BiComplex::e2)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self * py::self)
        .def(double() * py::self)
        .def(py::self * double())
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", [](const BiComplex& z) {
            return "BiComplex(" + format_rect(z) + ")";
        });

    py::class_<Hyperbolic>(m, "Hyperbolic")
        .def(py::init<double, double>(), py::arg("h1"), py::arg("h2"))
        .def_static("from_components", &Hyperbolic::from_components)
        .def_property_readonly("h1", &Hyperbolic::h1)
        .def_property_readonly("h2", &Hyperbolic::h2)
        .def_property_readonly("a1", &Hyperbolic::a1)
        .def_property_readonly("a2", &Hyperbolic::a2)
        .def("in_d_plus", &Hyperbolic::in_d_plus)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const Hyperbolic& h) {
            std::ostringstream os;
            os << "Hyperbolic(" << h << ")";
            return os.str();
        });

    py::enum_<Ordering>(m, "Ordering")
        .value("less_or_equal", Ordering::less_or_equal)
        .value("greater_or_equal", Ordering::greater_or_equal)
        .value("equal", Ordering::equal)
        .value("incomparable", Ordering::incomparable);

    py::enum_<Conjugation>(m, "Conjugation")
        .value("bar", Conjugation::bar)
        .value("dagger", Conjugation::dagger)
        .value("star", Conjugation::star);

    m.def("bar", &bar);
    m.def("dagger", &dagger);
    m.def("star", &star);
    m.def("conjugate", &conjugate, py::arg("z"), py::arg("kind"));
    m.def("to_idempotent", [](const BiComplex& z) {
        const IdempotentPair p = to_idempotent(z);
        return py::make_tuple(p.beta1, p.beta2);
    });
    m.def("from_idempotent", [](const Complex& beta1, const Complex& beta2) {
        return from_idempotent(IdempotentPair{beta1, beta2});
    });
    m.def("euclid_norm", &euclid_norm);
    m.def("hyper_norm", &hyper_norm);
    m.def("invert", &invert, py::arg("z"), py::arg("tau_zero") = 1e-12);
    m.def("d_plus_compare", &d_plus_compare);

    py::class_<BCMatrix>(m, "BCMatrix")
        .def(py::init(&BCMatrix::join), py::arg("left"), py::arg("right"),
             "Build from the two complex split components")
        .def_static("identity", &BCMatrix::identity)
        .def_static("zero", &BCMatrix::zero)
        .def_static("embed", &BCMatrix::embed,
                    "Embed a complex matrix with both split components equal")
        .def_property_readonly("rows", &BCMatrix::rows)
        .def_property_readonly("cols", &BCMatrix::cols)
        .def("split", &BCMatrix::split)
        .def("adjoint", &BCMatrix::adjoint)
        .def("frobenius_norm", &BCMatrix::frobenius_norm)
        .def("__getitem__",
             [](const BCMatrix& m2, std::pair<Index, Index> ij) {
                 if (ij.first < 0 || ij.first >= m2.rows() || ij.second < 0 ||
                     ij.second >= m2.cols())
                     throw py::index_error();
                 return m2(ij.first, ij.second);
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def("__rmul__", [](const BCMatrix& m2, const BiComplex& s) { return s * m2; })
        .def("__repr__", [](const BCMatrix& m2) {
            return "BCMatrix(" + std::to_string(m2.rows()) + "x" + std::to_string(m2.cols()) + ")";
        });

    m.def("is_commuting_tuple", [](const std::vector<BCMatrix>& mats) {
        double resid = 0.0;
        const bool ok = is_commuting_tuple(mats, {}, &resid);
        return py::make_tuple(ok, resid);
    });
    m.def("is_invertible", [](const BCMatrix& m2) { return is_invertible(m2); });
    m.def("is_unitary", [](const BCMatrix& m2) { return is_unitary(m2); });

    m.def("bc_joint_point_spectrum", [](const std::vector<BCMatrix>& mats) {
        return spectrum_set_dict(bc_joint_point_spectrum(mats));
    });
    m.def("restricted_spectrum", [](const std::vector<BCMatrix>& mats) {
        std::vector<std::vector<BiComplex>> pts = restricted_spectrum(mats).points;
        return pts;
    });
    m.def("simultaneous_triangularize", [](const std::vector<BCMatrix>& mats) {
        const Triangularization tri = simultaneous_triangularize(mats);
        return py::make_tuple(tri.v, tri.t);
    });
    m.def("tuple_norm", &tuple_norm, py::arg("lambdas"), py::arg("p"));
    m.def("geometric_spectral_radius",
          [](const std::vector<BCMatrix>& mats, double p) {
              return geometric_spectral_radius(mats, p);
          },
          py::arg("mats"), py::arg("p"));
    m.def("operator_tuple_norm",
          [](const std::vector<BCMatrix>& mats, double p) {
              const OperatorNormReport r = operator_tuple_norm(mats, p);
              py::dict d;
              d["value"] = r.value();
              d["lower"] = r.lower;
              d["upper"] = r.upper;
              d["exact"] = r.exact;
              return d;
          },
          py::arg("mats"), py::arg("p"));
    m.def("check_radius_bound",
          [](const std::vector<BCMatrix>& mats, double p) {
              const RadiusBoundReport r = check_radius_bound(mats, p);
              py::dict d;
              d["r_p"] = r.r_p;
              d["norm_p"] = r.norm_p;
              d["holds"] = r.holds;
              return d;
          },
          py::arg("mats"), py::arg("p"));

    m.def("block_matrix", &block_matrix, py::arg("z1"), py::arg("z2"), py::arg("t1"),
          py::arg("t2"));
    m.def("in_joint_spectrum",
          [](const BiComplex& z1, const BiComplex& z2, const BCMatrix& t1, const BCMatrix& t2) {
              return membership_dict(in_joint_spectrum(z1, z2, t1, t2));
          });
    m.def("in_approximate_point_spectrum",
          [](const BiComplex& z1, const BiComplex& z2, const BCMatrix& t1, const BCMatrix& t2) {
              return membership_dict(in_approximate_point_spectrum(z1, z2, t1, t2));
          });
    m.def("pair_point_spectrum", [](const BCMatrix& t1, const BCMatrix& t2) {
        return pair_set_dict(pair_point_spectrum(t1, t2));
    });
    m.def("pair_residual_spectrum", [](const BCMatrix& t1, const BCMatrix& t2) {
        return pair_set_dict(pair_residual_spectrum(t1, t2));
    });
    m.def("pair_joint_spectrum", [](const BCMatrix& t1, const BCMatrix& t2) {
        return pair_set_dict(pair_joint_spectrum(t1, t2));
    });

    m.def("run_property_suite",
          [](uint64_t seed, int trials) {
              const VerifyReport rep = run_property_suite(seed, trials);
              py::list props;
              for (const auto& p : rep.properties) {
                  py::dict d;
                  d["name"] = p.name;
                  d["trials"] = p.trials;
                  d["failures"] = p.failures;
                  d["worst"] = p.worst;
                  props.append(d);
              }
              py::dict d;
              d["seed"] = rep.seed;
              d["trials"] = rep.trials;
              d["properties"] = props;
              d["all_passed"] = rep.all_passed;
              return d;
          },
          py::arg("seed") = 42, py::arg("trials") = 25);
}
